use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::{fmt_rat, forward_binop, parse_rat, rat, QuadElem};
use crate::error::{Error, Result};

/// Exact element of Q(i, sqrt5), stored as `re + im * i` with `re, im` in
/// Q(sqrt5). Coordinates on the basis (1, i, sqrt5, i*sqrt5) are available
/// through [`CycloQuadElem::coords`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycloQuadElem {
    re: QuadElem,
    im: QuadElem,
}

/// The four complex embeddings, indexed by the images of `i` and `sqrt5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub i_sign: i8,
    pub sqrt5_sign: i8,
}

impl Embedding {
    pub const ALL: [Embedding; 4] = [
        Embedding { i_sign: 1, sqrt5_sign: 1 },
        Embedding { i_sign: 1, sqrt5_sign: -1 },
        Embedding { i_sign: -1, sqrt5_sign: 1 },
        Embedding { i_sign: -1, sqrt5_sign: -1 },
    ];
    pub const PRINCIPAL: Embedding = Embedding { i_sign: 1, sqrt5_sign: 1 };
}

impl CycloQuadElem {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        CycloQuadElem { re: QuadElem::new(c0, c2), im: QuadElem::new(c1, c3) }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        CycloQuadElem::new(rat(c0), rat(c1), rat(c2), rat(c3))
    }

    pub fn from_parts(re: QuadElem, im: QuadElem) -> Self {
        CycloQuadElem { re, im }
    }

    pub fn zero() -> Self {
        CycloQuadElem::default()
    }

    pub fn one() -> Self {
        CycloQuadElem::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        CycloQuadElem::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt5() -> Self {
        CycloQuadElem::from_ints(0, 0, 1, 0)
    }

    pub fn re(&self) -> &QuadElem {
        &self.re
    }

    pub fn im(&self) -> &QuadElem {
        &self.im
    }

    /// Coordinates on (1, i, sqrt5, i*sqrt5).
    pub fn coords(&self) -> [BigRational; 4] {
        [self.re.a.clone(), self.im.a.clone(), self.re.b.clone(), self.im.b.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Automorphism `i -> -i`.
    pub fn conj_i(&self) -> Self {
        CycloQuadElem { re: self.re.clone(), im: -&self.im }
    }

    /// Automorphism `sqrt5 -> -sqrt5`.
    pub fn conj_sqrt5(&self) -> Self {
        CycloQuadElem { re: self.re.conjugate(), im: self.im.conjugate() }
    }

    pub fn apply(&self, e: Embedding) -> Self {
        let mut x = self.clone();
        if e.i_sign < 0 {
            x = x.conj_i();
        }
        if e.sqrt5_sign < 0 {
            x = x.conj_sqrt5();
        }
        x
    }

    pub fn to_complex(&self, e: Embedding) -> Complex64 {
        let re = self.re.to_f64(e.sqrt5_sign);
        let im = self.im.to_f64(e.sqrt5_sign) * f64::from(e.i_sign);
        Complex64::new(re, im)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        CycloQuadElem { re: self.re.scale(k), im: self.im.scale(k) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycloQuadElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, if nonzero.
    pub fn inverse(&self) -> Option<Self> {
        // (re + im i)^-1 = (re - im i) / (re^2 + im^2)
        let n = &self.re * &self.re + &self.im * &self.im;
        let ninv = n.inverse()?;
        Some(CycloQuadElem { re: &self.re * &ninv, im: -(&self.im * &ninv) })
    }

    pub fn is_integer_coords(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    /// Parse four comma-separated rationals `c0,c1,c2,c3`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 coordinates, got {s:?}")));
        }
        Ok(CycloQuadElem::new(
            parse_rat(parts[0])?,
            parse_rat(parts[1])?,
            parse_rat(parts[2])?,
            parse_rat(parts[3])?,
        ))
    }
}

impl From<QuadElem> for CycloQuadElem {
    fn from(re: QuadElem) -> Self {
        CycloQuadElem { re, im: QuadElem::zero() }
    }
}

impl From<i64> for CycloQuadElem {
    fn from(n: i64) -> Self {
        CycloQuadElem::from_ints(n, 0, 0, 0)
    }
}

impl Add<&CycloQuadElem> for &CycloQuadElem {
    type Output = CycloQuadElem;
    fn add(self, rhs: &CycloQuadElem) -> CycloQuadElem {
        CycloQuadElem { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&CycloQuadElem> for &CycloQuadElem {
    type Output = CycloQuadElem;
    fn sub(self, rhs: &CycloQuadElem) -> CycloQuadElem {
        CycloQuadElem { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&CycloQuadElem> for &CycloQuadElem {
    type Output = CycloQuadElem;
    fn mul(self, rhs: &CycloQuadElem) -> CycloQuadElem {
        CycloQuadElem {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(CycloQuadElem, Add, add);
forward_binop!(CycloQuadElem, Sub, sub);
forward_binop!(CycloQuadElem, Mul, mul);

impl Neg for CycloQuadElem {
    type Output = CycloQuadElem;
    fn neg(self) -> CycloQuadElem {
        CycloQuadElem { re: -self.re, im: -self.im }
    }
}

impl Neg for &CycloQuadElem {
    type Output = CycloQuadElem;
    fn neg(self) -> CycloQuadElem {
        CycloQuadElem { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for CycloQuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "sqrt5", "i*sqrt5"];
        let mut out = String::new();
        for (c, name) in self.coords().iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (name.is_empty(), mag == rat(1)) {
                (true, _) => fmt_rat(&mag),
                (false, true) => name.to_string(),
                (false, false) => format!("{}*{name}", fmt_rat(&mag)),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Serialize for CycloQuadElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords().iter().map(fmt_rat).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloQuadElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        if v.len() != 4 {
            return Err(serde::de::Error::custom("expected 4 coordinate strings"));
        }
        let c: Vec<BigRational> = v
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<_>>()
            .map_err(serde::de::Error::custom)?;
        Ok(CycloQuadElem::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
    }
}

/// A fourth root of unity `i^k`, exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit4(u8);

impl Unit4 {
    pub const ONE: Unit4 = Unit4(0);
    pub const I: Unit4 = Unit4(1);
    pub const MINUS_ONE: Unit4 = Unit4(2);
    pub const MINUS_I: Unit4 = Unit4(3);

    pub fn from_exponent(k: i64) -> Self {
        Unit4(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn pow(self, e: i64) -> Self {
        Unit4::from_exponent(i64::from(self.0) * e)
    }

    pub fn conj(self) -> Self {
        Unit4::from_exponent(-i64::from(self.0))
    }

    pub fn to_cyclo(self) -> CycloQuadElem {
        match self.0 {
            0 => CycloQuadElem::from_ints(1, 0, 0, 0),
            1 => CycloQuadElem::from_ints(0, 1, 0, 0),
            2 => CycloQuadElem::from_ints(-1, 0, 0, 0),
            _ => CycloQuadElem::from_ints(0, -1, 0, 0),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    /// The unit equal to `x`, if `x` is one of 1, i, -1, -i.
    pub fn from_cyclo(x: &CycloQuadElem) -> Option<Self> {
        (0..4).map(Unit4).find(|u| &u.to_cyclo() == x)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "+1" => Ok(Unit4::ONE),
            "i" | "+i" => Ok(Unit4::I),
            "-1" => Ok(Unit4::MINUS_ONE),
            "-i" => Ok(Unit4::MINUS_I),
            other => Err(Error::Parse(format!("not a fourth root of unity: {other:?}"))),
        }
    }

    /// Square roots of a sign: `+1 -> {1, -1}`, `-1 -> {i, -i}`.
    pub fn sqrt_of_sign(sign: i8) -> [Unit4; 2] {
        if sign > 0 {
            [Unit4::ONE, Unit4::MINUS_ONE]
        } else {
            [Unit4::I, Unit4::MINUS_I]
        }
    }
}

impl Mul for Unit4 {
    type Output = Unit4;
    fn mul(self, rhs: Unit4) -> Unit4 {
        Unit4::from_exponent(i64::from(self.0 + rhs.0))
    }
}

impl Serialize for Unit4 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Unit4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quad::frac;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = CycloQuadElem> {
        prop::array::uniform4((-20i64..20, 1i64..6)).prop_map(|c| {
            CycloQuadElem::new(
                frac(c[0].0, c[0].1),
                frac(c[1].0, c[1].1),
                frac(c[2].0, c[2].1),
                frac(c[3].0, c[3].1),
            )
        })
    }

    #[test]
    fn basis_relations() {
        let i = CycloQuadElem::i();
        let s = CycloQuadElem::sqrt5();
        assert_eq!(&i * &i, CycloQuadElem::from(-1));
        assert_eq!(&s * &s, CycloQuadElem::from(5));
        let is = &i * &s;
        assert_eq!(is, CycloQuadElem::from_ints(0, 0, 0, 1));
        assert_eq!(&is * &is, CycloQuadElem::from(-5));
    }

    #[test]
    fn display_and_json() {
        let x = CycloQuadElem::new(frac(3, 2), rat(0), frac(-1, 2), rat(2));
        assert_eq!(x.to_string(), "3/2 - 1/2*sqrt5 + 2*i*sqrt5");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"["3/2","0","-1/2","2"]"#);
        let back: CycloQuadElem = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn units() {
        assert_eq!(Unit4::I * Unit4::I, Unit4::MINUS_ONE);
        assert_eq!(Unit4::I.conj(), Unit4::MINUS_I);
        assert_eq!(Unit4::from_cyclo(&CycloQuadElem::i()), Some(Unit4::I));
        assert_eq!(Unit4::MINUS_I.pow(-3), Unit4::MINUS_I);
        assert_eq!(Unit4::I.pow(2), Unit4::MINUS_ONE);
        for u in 0..4 {
            let u = Unit4::from_exponent(u);
            assert_eq!(u.to_cyclo() * u.conj().to_cyclo(), CycloQuadElem::one());
        }
    }

    proptest! {
        #[test]
        fn conjugations_are_ring_automorphisms(x in arb(), y in arb()) {
            prop_assert_eq!((&x * &y).conj_i(), x.conj_i() * y.conj_i());
            prop_assert_eq!((&x * &y).conj_sqrt5(), x.conj_sqrt5() * y.conj_sqrt5());
            prop_assert_eq!((&x + &y).conj_sqrt5(), x.conj_sqrt5() + y.conj_sqrt5());
        }

        #[test]
        fn multiplication_is_associative_and_distributive(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        }

        #[test]
        fn inverse(x in arb()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inverse().unwrap(), CycloQuadElem::one());
        }
    }
}
