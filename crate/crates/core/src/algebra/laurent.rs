use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// Laurent polynomial in `t` with exact coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are always nonzero, and the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<R: Coeff> {
    ctx: R::Ctx,
    low: i64,
    coeffs: Vec<R>,
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero(ctx: &R::Ctx) -> Self {
        LaurentPoly { ctx: ctx.clone(), low: 0, coeffs: Vec::new() }
    }

    pub fn one(ctx: &R::Ctx) -> Self {
        Self::constant(R::one(ctx))
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        let ctx = c.ctx();
        if c.is_zero() {
            return Self::zero(&ctx);
        }
        LaurentPoly { ctx, low: exp, coeffs: vec![c] }
    }

    /// The monomial `t^exp`.
    pub fn t_pow(ctx: &R::Ctx, exp: i64) -> Self {
        Self::monomial(R::one(ctx), exp)
    }

    pub fn from_coeffs(ctx: &R::Ctx, low: i64, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero(ctx);
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly { ctx: ctx.clone(), low: low + lead_zeros as i64, coeffs }
    }

    pub fn from_i64s(ctx: &R::Ctx, low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ctx, low, coeffs.iter().map(|&c| R::from_i64(ctx, c)).collect())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(ctx: &R::Ctx, terms: I) -> Self {
        let mut acc = Self::zero(ctx);
        for (e, c) in terms {
            acc = acc.add(&Self::monomial(c, e));
        }
        acc
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.coeffs.len() == 1 && self.low == 0)
    }

    /// Units of `R[t, t^-1]` are `u t^k` with `u` a unit of `R`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].inv().is_some()
    }

    pub fn min_deg(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_deg(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Breadth `max_deg - min_deg`; this is the degree that is invariant
    /// under multiplication by units.
    pub fn span(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> R {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            R::zero(&self.ctx)
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&R> {
        self.coeffs.first()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a.sub(b))
    }

    fn combine(&self, o: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        let zero = R::zero(&self.ctx);
        if self.is_zero() {
            let c = o.coeffs.iter().map(|c| f(&zero, c)).collect();
            return Self::from_coeffs(&self.ctx, o.low, c);
        }
        let lo = self.low.min(o.low);
        let hi = self.max_deg().unwrap().max(o.max_deg().unwrap());
        let c = (lo..=hi)
            .map(|e| {
                let a = self.get(e).unwrap_or(&zero);
                let b = o.get(e).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Self::from_coeffs(&self.ctx, lo, c)
    }

    fn get(&self, exp: i64) -> Option<&R> {
        let i = exp - self.low;
        if i < 0 {
            None
        } else {
            self.coeffs.get(i as usize)
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut c = vec![R::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(&self.ctx, self.low + o.low, c)
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::from_coeffs(&self.ctx, self.low, self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.low += k;
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at `x`; `None` when negative powers appear and `x` is not a unit.
    pub fn eval(&self, x: &R) -> Option<R> {
        let mut acc = R::zero(&self.ctx);
        if self.is_zero() {
            return Some(acc);
        }
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        let base = if self.low >= 0 { x.clone() } else { x.inv()? };
        for _ in 0..self.low.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    pub fn map_coeffs<S: Coeff>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_coeffs(ctx, self.low, self.coeffs.iter().map(f).collect())
    }

    /// Exact quotient in `R[t, t^-1]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.coeffs.len();
        let m = d.coeffs.len();
        if n < m {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![R::zero(&self.ctx); n - m + 1];
        for i in (0..=n - m).rev() {
            let top = &rem[i + m - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(dj));
            }
            q[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(&self.ctx, self.low - d.low, q))
    }

    /// Division with remainder of ordinary polynomials over a field.
    /// Both operands must have no negative exponents.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(R::IS_FIELD, "div_rem needs field coefficients");
        assert!(!d.is_zero(), "division by zero polynomial");
        debug_assert!(self.low >= 0 && d.low >= 0);
        let zero = Self::zero(&self.ctx);
        if self.is_zero() || self.max_deg() < d.max_deg() {
            return (zero, self.clone());
        }
        let dd = d.max_deg().unwrap() as usize;
        let mut rem = self.dense();
        let dv = d.dense();
        let lead_inv = dv[dd].inv().unwrap();
        let mut q = vec![R::zero(&self.ctx); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&lead_inv);
            for (j, dj) in dv.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dj));
                }
            }
            q[i] = c;
        }
        (Self::from_coeffs(&self.ctx, 0, q), Self::from_coeffs(&self.ctx, 0, rem))
    }

    /// Coefficients from exponent 0 up to `max_deg`.
    fn dense(&self) -> Vec<R> {
        let mut v = vec![R::zero(&self.ctx); self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Preferred associate under units `u t^k`: lowest exponent 0, then
    /// monic over a field or positive leading coefficient over the integers.
    pub fn canonicalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let u = self.lead().unwrap().normalizing_unit();
        LaurentPoly {
            ctx: self.ctx.clone(),
            low: 0,
            coeffs: self.coeffs.iter().map(|c| c.mul(&u)).collect(),
        }
    }

    /// `(u, k)` with `self == u t^k * self.canonicalize()`.
    pub fn unit_part(&self) -> Option<(R, i64)> {
        let u = self.lead()?.normalizing_unit().inv()?;
        Some((u, self.low))
    }

    pub fn equal_up_to_units(&self, o: &Self) -> bool {
        self.canonicalize() == o.canonicalize()
    }

    /// Gcd of coefficients.
    pub fn content(&self) -> R {
        self.coeffs.iter().fold(R::zero(&self.ctx), |g, c| g.gcd(c))
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        Self::from_coeffs(
            &self.ctx,
            self.low,
            self.coeffs.iter().map(|x| x.div_exact(&c).unwrap()).collect(),
        )
    }

    /// Pseudo-remainder of ordinary polynomials (used over the integers).
    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let ld = d.lead().unwrap().clone();
        let dd = d.max_deg().unwrap();
        while !r.is_zero() && r.max_deg().unwrap() >= dd {
            let lr = r.lead().unwrap().clone();
            let k = r.max_deg().unwrap() - dd;
            r = r.scale(&ld).sub(&d.shift(k).scale(&lr));
        }
        r
    }

    /// Canonical gcd in `R[t, t^-1]`.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.canonicalize();
        }
        if o.is_zero() {
            return self.canonicalize();
        }
        let mut a = self.shift(-self.low);
        let mut b = o.shift(-o.low);
        if R::IS_FIELD {
            while !b.is_zero() {
                let r = a.div_rem(&b).1;
                a = b;
                b = r;
            }
            return a.canonicalize();
        }
        let c = self.content().gcd(&o.content());
        a = a.primitive_part();
        b = b.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c).canonicalize()
    }
}

/// Canonical gcd of a list; the gcd of an empty or all-zero list is 0.
pub fn gcd_polys<R: Coeff>(ctx: &R::Ctx, fs: &[LaurentPoly<R>]) -> LaurentPoly<R> {
    fs.iter().fold(LaurentPoly::zero(ctx), |g, f| g.gcd(f))
}

impl<R: Coeff> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{abs}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<R: Coeff> LaurentPoly<R> {
    /// Parse text such as `2*t^-1 - 5 + 2*t`.
    pub fn parse(ctx: &R::Ctx, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let chars: Vec<char> = s.chars().collect();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..chars.len() {
            let c = chars[i];
            let prev = chars[i - 1];
            if (c == '+' || c == '-') && prev != '^' && prev != '(' {
                terms.push(chars[start..i].iter().collect::<String>());
                start = i;
            }
        }
        terms.push(chars[start..].iter().collect());
        let mut acc = Self::zero(ctx);
        for term in terms {
            acc = acc.add(&parse_term::<R>(ctx, &term)?);
        }
        Ok(acc)
    }
}

fn parse_term<R: Coeff>(ctx: &R::Ctx, term: &str) -> Result<LaurentPoly<R>> {
    let bad = || Error::Parse(format!("bad term '{term}'"));
    let (neg, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coef, exp) = match body.find('t') {
        None => (R::parse(ctx, body)?, 0),
        Some(pos) => {
            let head = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            if head.len() != pos && head.is_empty() {
                return Err(bad());
            }
            let coef = if head.is_empty() { R::one(ctx) } else { R::parse(ctx, head)? };
            let tail = &body[pos + 1..];
            let exp = if tail.is_empty() {
                1
            } else {
                let e = tail.strip_prefix('^').ok_or_else(bad)?;
                let e = e.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(e);
                e.parse::<i64>().map_err(|_| bad())?
            };
            (coef, exp)
        }
    };
    let coef = if neg { coef.neg() } else { coef };
    Ok(LaurentPoly::monomial(coef, exp))
}

impl<R: Coeff> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, o: Self) -> LaurentPoly<R> {
        LaurentPoly::add(self, o)
    }
}

impl<R: Coeff> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, o: Self) -> LaurentPoly<R> {
        LaurentPoly::sub(self, o)
    }
}

impl<R: Coeff> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, o: Self) -> LaurentPoly<R> {
        LaurentPoly::mul(self, o)
    }
}

impl<R: Coeff> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly::neg(self)
    }
}
