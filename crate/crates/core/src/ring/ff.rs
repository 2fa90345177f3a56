use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arith::{inv_mod, is_prime, legendre, mul_mod, smallest_nonresidue};
use crate::error::{Error, Result};

/// The field F_p or F_{p^2} = F_p[t]/(t^2 - c1 t - c0).
///
/// For odd p the quadratic extension uses `t^2 = 5` whenever 5 is a
/// non-residue (so `sqrt5 -> t`), otherwise the smallest positive
/// non-residue. F_4 uses `t^2 = t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    degree: u8,
    t_sq: [u64; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FFElem {
    field: FiniteField,
    c: [u64; 2],
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FiniteField { p, degree: 1, t_sq: [0, 0] })
    }

    pub fn quadratic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let t_sq = if p == 2 {
            [1, 1]
        } else if p != 5 && legendre(5, p) == -1 {
            [5 % p, 0]
        } else {
            [smallest_nonresidue(p), 0]
        };
        Ok(FiniteField { p, degree: 2, t_sq })
    }

    pub fn new(p: u64, degree: u8) -> Result<Self> {
        match degree {
            1 => FiniteField::prime(p),
            2 => FiniteField::quadratic(p),
            _ => Err(Error::Config(format!("unsupported extension degree {degree}"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        self.p.pow(u32::from(self.degree))
    }

    /// Coefficients `(c0, c1)` of `t^2 = c0 + c1 t`.
    pub fn generator_relation(&self) -> [u64; 2] {
        self.t_sq
    }

    pub fn elem(&self, c0: u64, c1: u64) -> FFElem {
        let c1 = if self.degree == 1 { 0 } else { c1 % self.p };
        FFElem { field: *self, c: [c0 % self.p, c1] }
    }

    pub fn zero(&self) -> FFElem {
        self.elem(0, 0)
    }

    pub fn one(&self) -> FFElem {
        self.elem(1, 0)
    }

    /// The adjoined generator `t` (only for degree 2).
    pub fn gen(&self) -> FFElem {
        assert_eq!(self.degree, 2, "prime field has no adjoined generator");
        self.elem(0, 1)
    }

    pub fn from_i64(&self, n: i64) -> FFElem {
        self.elem(n.rem_euclid(self.p as i64) as u64, 0)
    }

    pub fn from_bigint(&self, n: &BigInt) -> FFElem {
        let m = BigInt::from(self.p);
        let r = (((n % &m) + &m) % &m).to_u64().unwrap();
        self.elem(r, 0)
    }

    /// Image of a rational number; fails if p divides the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<FFElem> {
        let d = self.from_bigint(r.denom());
        if d.is_zero() {
            return Err(Error::NotIntegralAt { value: r.to_string(), p: self.p });
        }
        Ok(self.from_bigint(r.numer()) * d.inv().unwrap())
    }

    /// Dense index in `0..size()`: `c0 + p * c1`.
    pub fn index(&self, x: FFElem) -> usize {
        (x.c[0] + self.p * x.c[1]) as usize
    }

    pub fn from_index(&self, idx: usize) -> FFElem {
        let idx = idx as u64;
        self.elem(idx % self.p, idx / self.p)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FFElem> + '_ {
        (0..self.size() as usize).map(move |i| self.from_index(i))
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^2", self.p)
        }
    }
}

impl FFElem {
    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn coords(&self) -> [u64; 2] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0]
    }

    pub fn is_one(&self) -> bool {
        self.c == [1, 0]
    }

    pub fn pow(self, mut e: u64) -> FFElem {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Norm down to F_p: `x * conj(x)`.
    fn norm_to_prime(&self) -> u64 {
        let p = self.field.p;
        let [a, b] = self.c;
        if self.field.degree == 1 {
            return a;
        }
        let [al, be] = self.field.t_sq;
        // (a + b t)(a + b be - b t) = a^2 + a b be - al b^2
        let n = mul_mod(a, a, p) + mul_mod(mul_mod(a, b, p), be, p) + p - mul_mod(al, mul_mod(b, b, p), p);
        n % p
    }

    pub fn inv(&self) -> Option<FFElem> {
        if self.is_zero() {
            return None;
        }
        let p = self.field.p;
        if self.field.degree == 1 {
            return Some(self.field.elem(inv_mod(self.c[0], p)?, 0));
        }
        let ninv = inv_mod(self.norm_to_prime(), p)?;
        let [a, b] = self.c;
        let be = self.field.t_sq[1];
        // conjugate of t is be - t
        let conj = self.field.elem((a + mul_mod(b, be, p)) % p, (p - b) % p);
        Some(conj * self.field.elem(ninv, 0))
    }

    /// Quadratic character: 1 for nonzero squares, -1 for non-squares, 0 at 0.
    pub fn quadratic_character(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.field.p == 2 {
            return 1;
        }
        // x is a square in F_q iff its norm to F_p is a square in F_p
        legendre(self.norm_to_prime() as i64, self.field.p)
    }
}

impl Add for FFElem {
    type Output = FFElem;
    fn add(self, rhs: FFElem) -> FFElem {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        FFElem { field: self.field, c: [(self.c[0] + rhs.c[0]) % p, (self.c[1] + rhs.c[1]) % p] }
    }
}

impl Sub for FFElem {
    type Output = FFElem;
    fn sub(self, rhs: FFElem) -> FFElem {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        FFElem {
            field: self.field,
            c: [(self.c[0] + p - rhs.c[0]) % p, (self.c[1] + p - rhs.c[1]) % p],
        }
    }
}

impl Neg for FFElem {
    type Output = FFElem;
    fn neg(self) -> FFElem {
        self.field.zero() - self
    }
}

impl Mul for FFElem {
    type Output = FFElem;
    fn mul(self, rhs: FFElem) -> FFElem {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        let [a, b] = self.c;
        let [c, d] = rhs.c;
        if self.field.degree == 1 {
            return FFElem { field: self.field, c: [mul_mod(a, c, p), 0] };
        }
        let [al, be] = self.field.t_sq;
        let bd = mul_mod(b, d, p);
        let c0 = (mul_mod(a, c, p) + mul_mod(bd, al, p)) % p;
        let c1 = (mul_mod(a, d, p) + mul_mod(b, c, p) + mul_mod(bd, be, p)) % p;
        FFElem { field: self.field, c: [c0, c1] }
    }
}

impl fmt::Display for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.field.degree, self.c) {
            (1, [a, _]) | (_, [a, 0]) => write!(f, "{a}"),
            (_, [0, b]) => write!(f, "{b}t"),
            (_, [a, b]) => write!(f, "{a}+{b}t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inert_quadratic_fields_adjoin_sqrt5() {
        for p in [3u64, 7, 13, 17, 23, 37, 43, 47] {
            let f = FiniteField::quadratic(p).unwrap();
            let t = f.gen();
            assert_eq!(t * t, f.from_i64(5), "p = {p}");
        }
        // 5 is a square mod 11, so another non-residue is used
        let f = FiniteField::quadratic(11).unwrap();
        assert_eq!(f.generator_relation(), [2, 0]);
    }

    #[test]
    fn field_axioms_exhaustively_small() {
        for f in [
            FiniteField::prime(7).unwrap(),
            FiniteField::quadratic(2).unwrap(),
            FiniteField::quadratic(3).unwrap(),
            FiniteField::quadratic(5).unwrap(),
            FiniteField::quadratic(7).unwrap(),
        ] {
            let els: Vec<FFElem> = f.elements().collect();
            assert_eq!(els.len() as u64, f.size());
            for &x in &els {
                if !x.is_zero() {
                    assert!((x * x.inv().unwrap()).is_one(), "{f} {x}");
                    assert!(x.pow(f.size() - 1).is_one());
                }
                for &y in &els {
                    assert_eq!(x * y, y * x);
                    assert_eq!((x + y) - y, x);
                }
            }
            let squares = els.iter().filter(|x| x.quadratic_character() == 1).count() as u64;
            let expected = if f.characteristic() == 2 { f.size() - 1 } else { (f.size() - 1) / 2 };
            assert_eq!(squares, expected);
        }
    }

    #[test]
    fn rational_reduction() {
        let f = FiniteField::prime(11).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), f.from_i64(6));
        let bad = BigRational::new(1.into(), 22.into());
        assert!(f.from_rational(&bad).is_err());
        assert_eq!(f.from_bigint(&BigInt::from(-3)), f.from_i64(8));
    }
}
