use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact element `a + b*sqrt(5)` of Q(sqrt 5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadElem { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadElem::new(rat(a), rat(b))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadElem::new(a, BigRational::zero())
    }

    /// `(a + b sqrt5) / d` with integer inputs.
    pub fn from_frac(a: i64, b: i64, d: i64) -> Self {
        QuadElem::new(frac(a, d), frac(b, d))
    }

    pub fn sqrt5() -> Self {
        QuadElem::from_ints(0, 1)
    }

    pub fn zero() -> Self {
        QuadElem::default()
    }

    pub fn one() -> Self {
        QuadElem::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b sqrt5`.
    pub fn conjugate(&self) -> Self {
        QuadElem::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a^2 - 5 b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(5) * &self.b * &self.b
    }

    pub fn trace(&self) -> BigRational {
        rat(2) * &self.a
    }

    /// Membership in Z[(1 + sqrt5)/2]: `a - b` and `2b` are integers.
    pub fn is_integral(&self) -> bool {
        (&self.a - &self.b).is_integer() && (rat(2) * &self.b).is_integer()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QuadElem::new(c.a / &n, c.b / n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        num_integer::Integer::lcm(self.a.denom(), self.b.denom())
    }

    /// Real value under the embedding `sqrt5 -> sign * 2.236..`.
    pub fn to_f64(&self, sqrt5_sign: i8) -> f64 {
        let a = rat_to_f64(&self.a);
        let b = rat_to_f64(&self.b);
        a + f64::from(sqrt5_sign) * b * 5f64.sqrt()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadElem::new(&self.a * k, &self.b * k)
    }

    /// Parse `"a,b"` (coordinates) or a single rational.
    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once(',') {
            Some((a, b)) => Ok(QuadElem::new(parse_rat(a)?, parse_rat(b)?)),
            None => Ok(QuadElem::from_rational(parse_rat(s)?)),
        }
    }
}

pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division for huge numerators/denominators
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let babs = self.b.abs();
        let bs = if babs.is_one() { String::new() } else { format!("{}*", fmt_rat(&babs)) };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{bs}sqrt5")
            } else {
                write!(f, "{bs}sqrt5")
            }
        } else {
            write!(f, "{} {sign} {bs}sqrt5", fmt_rat(&self.a))
        }
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

impl Add<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(
            &self.a * &rhs.a + rat(5) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

/// Panics on division by zero, like the rational type underneath.
impl Div<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn div(self, rhs: &QuadElem) -> QuadElem {
        self * &rhs.inverse().expect("division by zero in Q(sqrt5)")
    }
}

forward_binop!(QuadElem, Add, add);
forward_binop!(QuadElem, Sub, sub);
forward_binop!(QuadElem, Mul, mul);
forward_binop!(QuadElem, Div, div);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.a, -self.b)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-&self.a, -&self.b)
    }
}

impl From<i64> for QuadElem {
    fn from(n: i64) -> Self {
        QuadElem::from_ints(n, 0)
    }
}

#[derive(Serialize, Deserialize)]
struct QuadRepr {
    a: String,
    b: String,
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadRepr { a: fmt_rat(&self.a), b: fmt_rat(&self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QuadRepr::deserialize(d)?;
        let a = parse_rat(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rat(&r.b).map_err(serde::de::Error::custom)?;
        Ok(QuadElem::new(a, b))
    }
}
