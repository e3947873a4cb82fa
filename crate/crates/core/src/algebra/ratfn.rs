use std::fmt;

use super::coeff::Field;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials over a field, kept reduced with a
/// canonical denominator (lowest exponent 0, monic). The value is exact:
/// units are moved into the numerator, not discarded.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFn<F: Field> {
    num: LaurentPoly<F>,
    den: LaurentPoly<F>,
}

impl<F: Field> RationalFn<F> {
    pub fn from_poly(p: LaurentPoly<F>) -> Self {
        let den = LaurentPoly::one(p.ctx());
        RationalFn { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Span of the numerator minus span of the denominator.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.span()? - self.den.span()?)
    }

    /// Representative of the class modulo units `u t^k`.
    pub fn canonicalize(&self) -> Self {
        RationalFn { num: self.num.canonicalize(), den: self.den.clone() }
    }

    pub fn equal_up_to_units(&self, o: &Self) -> bool {
        self.canonicalize() == o.canonicalize()
    }

    pub fn mul(&self, o: &Self) -> Self {
        reduce_fraction(&self.num.mul(&o.num), &self.den.mul(&o.den)).unwrap()
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        reduce_fraction(&self.num.mul(&o.den), &self.den.mul(&o.num))
    }

    pub fn pow(&self, n: u32) -> Self {
        RationalFn { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly<F>> {
        self.den.is_constant().then_some(&self.num)
    }
}

/// Reduce `num/den` by their gcd, normalizing the denominator.
pub fn reduce_fraction<F: Field>(num: &LaurentPoly<F>, den: &LaurentPoly<F>) -> Result<RationalFn<F>> {
    if den.is_zero() {
        return Err(Error::Domain("zero denominator".into()));
    }
    if num.is_zero() {
        return Ok(RationalFn { num: num.clone(), den: LaurentPoly::one(den.ctx()) });
    }
    let g = num.gcd(den);
    let n = num.div_exact(&g).unwrap();
    let d = den.div_exact(&g).unwrap();
    let (u, k) = d.unit_part().unwrap();
    let scale = LaurentPoly::monomial(u.inv().unwrap(), -k);
    Ok(RationalFn { num: n.mul(&scale), den: d.mul(&scale) })
}

impl<F: Field> fmt::Display for RationalFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else if self.num.terms().count() > 1 {
            write!(f, "({}) / ({})", self.num, self.den)
        } else {
            write!(f, "{} / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> RationalFn<F> {
    /// Parse `p` or `(p) / (q)`.
    pub fn parse(ctx: &F::Ctx, text: &str) -> Result<Self> {
        match split_top_level_slash(text) {
            Some((a, b)) => reduce_fraction(
                &LaurentPoly::parse(ctx, strip_parens(a))?,
                &LaurentPoly::parse(ctx, strip_parens(b))?,
            ),
            None => Ok(Self::from_poly(LaurentPoly::parse(ctx, strip_parens(text))?)),
        }
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s)
}

/// A `/` with whitespace around it separates numerator and denominator;
/// `/` inside a coefficient like `1/2` does not.
fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                let before = s[..i].chars().last();
                if before == Some(')') || before == Some(' ') {
                    return Some((&s[..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}
