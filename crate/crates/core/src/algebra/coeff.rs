use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact coefficient ring. Elements carry enough context (the modulus for
/// `Fp`) to build zero and one of the same ring.
pub trait Coeff:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    type Ctx: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;
    const IS_FIELD: bool;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    /// `num/den` inside the ring, if it exists there.
    fn from_ratio(ctx: &Self::Ctx, num: &BigInt, den: &BigInt) -> Option<Self>;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Option<Self>;
    /// Normalized gcd. Over a field this is 0 or 1.
    fn gcd(&self, o: &Self) -> Self;
    /// Unit `u` such that `u * self` is the preferred associate.
    fn normalizing_unit(&self) -> Self;
    /// Used only for printing signs.
    fn is_negative(&self) -> bool {
        false
    }

    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad coefficient '{s}'"));
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<BigInt>().map_err(|_| bad())?,
                b.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(bad());
        }
        Self::from_ratio(ctx, &n, &d)
            .ok_or_else(|| Error::Parse(format!("'{s}' is not in the coefficient ring")))
    }
}

/// Marker for coefficient rings that are fields.
pub trait Field: Coeff {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn new(p: Prime, n: i64) -> Fp {
        let q = p.0 as i64;
        Fp { v: n.rem_euclid(q) as u32, p: p.0 }
    }

    pub fn value(self) -> u32 {
        self.v
    }

    pub fn prime(self) -> Prime {
        Prime(self.p)
    }

    fn mk(&self, v: u64) -> Fp {
        Fp { v: (v % self.p as u64) as u32, p: self.p }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Coeff for Fp {
    type Ctx = Prime;
    const IS_FIELD: bool = true;

    fn ctx(&self) -> Prime {
        Prime(self.p)
    }
    fn zero(ctx: &Prime) -> Self {
        Fp { v: 0, p: ctx.0 }
    }
    fn one(ctx: &Prime) -> Self {
        Fp { v: 1, p: ctx.0 }
    }
    fn from_i64(ctx: &Prime, n: i64) -> Self {
        Fp::new(*ctx, n)
    }
    fn from_ratio(ctx: &Prime, num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(ctx.0);
        let n = num.mod_floor(&p).to_u32()?;
        let d = den.mod_floor(&p).to_u32()?;
        let n = Fp { v: n, p: ctx.0 };
        let d = Fp { v: d, p: ctx.0 };
        Some(n.mul(&d.inv()?))
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, o: &Self) -> Self {
        self.mk(self.v as u64 + o.v as u64)
    }
    fn sub(&self, o: &Self) -> Self {
        self.mk(self.v as u64 + (self.p - o.v) as u64)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mk(self.v as u64 * o.v as u64)
    }
    fn neg(&self) -> Self {
        self.mk((self.p - self.v) as u64)
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p as u64 - 2))
        }
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            *self
        } else {
            Fp::one(&self.ctx())
        }
    }
    fn normalizing_unit(&self) -> Self {
        self.inv().unwrap_or(Fp::one(&self.ctx()))
    }
}

impl Field for Fp {}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Integer(pub BigInt);

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Integer {
    fn from(n: i64) -> Self {
        Integer(BigInt::from(n))
    }
}

impl Coeff for Integer {
    type Ctx = ();
    const IS_FIELD: bool = false;

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Integer(BigInt::zero())
    }
    fn one(_: &()) -> Self {
        Integer(BigInt::one())
    }
    fn from_i64(_: &(), n: i64) -> Self {
        Integer(BigInt::from(n))
    }
    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Option<Self> {
        let (q, r) = num.div_rem(den);
        r.is_zero().then_some(Integer(q))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        Integer(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Integer(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Integer(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Integer(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (self.0.abs().is_one()).then(|| self.clone())
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if o.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&o.0);
        r.is_zero().then_some(Integer(q))
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer(self.0.gcd(&o.0))
    }
    fn normalizing_unit(&self) -> Self {
        Integer(if self.0.is_negative() { -BigInt::one() } else { BigInt::one() })
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&Integer> for Rational {
    fn from(n: &Integer) -> Self {
        Rational(BigRational::from_integer(n.0.clone()))
    }
}

impl Rational {
    pub fn to_integer(&self) -> Option<Integer> {
        self.0.is_integer().then(|| Integer(self.0.to_integer()))
    }
}

impl Coeff for Rational {
    type Ctx = ();
    const IS_FIELD: bool = true;

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(_: &(), n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num.clone(), den.clone())))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        (!o.0.is_zero()).then(|| Rational(&self.0 / &o.0))
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            self.clone()
        } else {
            Rational::one(&())
        }
    }
    fn normalizing_unit(&self) -> Self {
        self.inv().unwrap_or_else(|| Rational::one(&()))
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl Field for Rational {}
