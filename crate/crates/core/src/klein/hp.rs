//! Binary floating point with a 256-bit mantissa, rounded after every
//! operation. Only what the Klein solver needs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Mantissa bits.
pub const PREC: u64 = 256;

/// `man * 2^exp`, `|man| < 2^PREC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hp {
    man: BigInt,
    exp: i64,
}

impl Hp {
    fn normalized(man: BigInt, exp: i64) -> Hp {
        if man.is_zero() {
            return Hp { man, exp: 0 };
        }
        let bits = man.bits();
        if bits <= PREC {
            return Hp { man, exp };
        }
        let shift = bits - PREC;
        // round half away from zero
        let neg = man.is_negative();
        let mag = man.abs();
        let half = BigInt::from(1) << (shift - 1);
        let mut q = (mag + half) >> shift;
        let mut exp = exp + shift as i64;
        if q.bits() > PREC {
            q >>= 1;
            exp += 1;
        }
        Hp { man: if neg { -q } else { q }, exp }
    }

    pub fn zero() -> Hp {
        Hp { man: BigInt::zero(), exp: 0 }
    }

    pub fn from_i64(n: i64) -> Hp {
        Hp::normalized(BigInt::from(n), 0)
    }

    pub fn from_f64(x: f64) -> Hp {
        assert!(x.is_finite(), "non-finite value");
        if x == 0.0 {
            return Hp::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if e == 0 { (frac, -1074) } else { (frac | (1 << 52), e - 1075) };
        Hp::normalized(BigInt::from(m) * sign, e)
    }

    pub fn from_bigint(n: &BigInt) -> Hp {
        Hp::normalized(n.clone(), 0)
    }

    pub fn from_rational(r: &BigRational) -> Hp {
        Hp::normalized(r.numer().clone(), 0) / Hp::normalized(r.denom().clone(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn abs(&self) -> Hp {
        Hp { man: self.man.abs(), exp: self.exp }
    }

    pub fn signum(&self) -> i8 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.man.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits() as i64;
        let keep = bits.min(62);
        let top = (&self.man >> (bits - keep) as u64).to_i64().unwrap() as f64;
        let e = self.exp + bits - keep;
        // split the scaling so intermediate powers stay finite
        let half = e / 2;
        top * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    pub fn sqrt(&self) -> Hp {
        assert!(!self.man.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return Hp::zero();
        }
        // make the exponent even and leave 2 PREC bits under the root
        let mut man = self.man.clone();
        let mut exp = self.exp;
        let want = 2 * PREC as i64 + 2 - man.bits() as i64;
        let mut shift = want.max(0);
        if (exp - shift) % 2 != 0 {
            shift += 1;
        }
        man <<= shift as u64;
        exp -= shift;
        Hp::normalized(man.sqrt(), exp / 2)
    }

    pub fn sqrt5() -> Hp {
        Hp::from_i64(5).sqrt()
    }

    /// log2 of the magnitude, roughly; `None` at zero.
    pub fn log2(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let bits = self.man.bits() as i64;
        let keep = bits.min(62);
        let top = (self.man.abs() >> (bits - keep) as u64).to_u64().unwrap() as f64;
        Some(top.log2() + (self.exp + bits - keep) as f64)
    }

    pub fn max_abs<'a>(xs: impl IntoIterator<Item = &'a Hp>) -> Hp {
        xs.into_iter().map(Hp::abs).max().unwrap_or_else(Hp::zero)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sign = if self.man.is_negative() { "-" } else { "" };
        let a = self.abs();
        // decimal exponent estimate, corrected below
        let mut e10 = (a.log2().unwrap() * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let scaled = &a * &pow10(digits as i64 - 1 - e10);
            let r = scaled.round_to_int();
            let s = r.to_string();
            if s.len() > digits {
                e10 += 1;
                continue;
            }
            if s.len() < digits {
                e10 -= 1;
                continue;
            }
            let (head, tail) = s.split_at(1);
            return format!("{sign}{head}.{tail}e{e10}");
        }
    }

    pub fn round_to_int(&self) -> BigInt {
        if self.exp >= 0 {
            return &self.man << self.exp as u64;
        }
        let shift = (-self.exp) as u64;
        let half = BigInt::from(1) << (shift - 1);
        let neg = self.man.is_negative();
        let q = (self.man.abs() + half) >> shift;
        if neg {
            -q
        } else {
            q
        }
    }
}

fn pow10(e: i64) -> Hp {
    let p = Hp::normalized(BigInt::from(10).pow(e.unsigned_abs() as u32), 0);
    if e >= 0 {
        p
    } else {
        Hp::from_i64(1) / p
    }
}

impl PartialOrd for Hp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).man.sign().cmp(&Sign::NoSign)
    }
}

impl<'a> Add<&'a Hp> for &'a Hp {
    type Output = Hp;
    fn add(self, rhs: &Hp) -> Hp {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (hi, lo) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let gap = (hi.exp - lo.exp) as u64;
        // a term far below the last mantissa bit cannot change the rounded sum
        if gap > 2 * PREC + 4 {
            let guard = Hp::normalized(hi.man.clone() << 4u64, hi.exp - 4);
            return Hp::normalized(guard.man + lo.man.signum(), guard.exp);
        }
        Hp::normalized((&hi.man << gap) + &lo.man, lo.exp)
    }
}

impl<'a> Sub<&'a Hp> for &'a Hp {
    type Output = Hp;
    fn sub(self, rhs: &Hp) -> Hp {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Hp> for &'a Hp {
    type Output = Hp;
    fn mul(self, rhs: &Hp) -> Hp {
        Hp::normalized(&self.man * &rhs.man, self.exp + rhs.exp)
    }
}

impl<'a> Div<&'a Hp> for &'a Hp {
    type Output = Hp;
    fn div(self, rhs: &Hp) -> Hp {
        assert!(!rhs.is_zero(), "division by zero");
        let shift = PREC + 2 + rhs.man.bits() - self.man.bits().min(PREC + 2 + rhs.man.bits());
        let num = &self.man << shift;
        Hp::normalized(num / &rhs.man, self.exp - rhs.exp - shift as i64)
    }
}

impl Neg for &Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp { man: -&self.man, exp: self.exp }
    }
}

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Hp> for Hp {
            type Output = Hp;
            fn $f(self, rhs: Hp) -> Hp {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Hp> for Hp {
            type Output = Hp;
            fn $f(self, rhs: &Hp) -> Hp {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Hp> for &'a Hp {
            type Output = Hp;
            fn $f(self, rhs: Hp) -> Hp {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl fmt::Display for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(40))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quad::frac;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let two = Hp::from_i64(2);
        let r = two.sqrt();
        assert!((&r * &r - &two).abs().log2().unwrap() < -250.0);
        assert_eq!(Hp::from_f64(0.1).to_f64(), 0.1);
        let third = Hp::from_rational(&frac(1, 3));
        let back = &third * &Hp::from_i64(3) - Hp::from_i64(1);
        assert!(back.is_zero() || back.abs().log2().unwrap() < -250.0);
        assert_eq!(Hp::sqrt5().to_decimal(30), "2.23606797749978969640917366873e0");
        assert_eq!(Hp::from_i64(-1234).to_decimal(4), "-1.234e3");
        assert!(Hp::from_i64(3) > Hp::from_i64(-7));
        // tiny + huge keeps the huge value
        let big = Hp::from_f64(1e200);
        assert_eq!((&big + &Hp::from_f64(1e-200)).to_f64(), 1e200);
    }

    proptest! {
        #[test]
        fn agrees_with_f64(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            prop_assume!(b.abs() > 1e-3);
            let (x, y) = (Hp::from_f64(a), Hp::from_f64(b));
            for (got, want) in [((&x + &y).to_f64(), a + b), ((&x * &y).to_f64(), a * b), ((&x / &y).to_f64(), a / b)] {
                prop_assert!((got - want).abs() <= 1e-15 * want.abs().max(1e-300));
            }
            prop_assert_eq!(x.cmp(&y), a.partial_cmp(&b).unwrap());
        }
    }
}
