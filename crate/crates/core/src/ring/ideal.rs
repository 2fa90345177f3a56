use std::fmt;

use serde::{Serialize, Serializer};

use super::ff::{FFElem, FiniteField};
use super::quad::{rat, QuadElem};
use crate::arith::{is_prime, legendre, primes_up_to, sqrt_mod_prime};
use crate::error::{Error, Result};

/// Ordering key for prime ideals: the rational prime, then the image of
/// sqrt5 (0 for inert and ramified primes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealKey {
    pub p: u64,
    pub root: u64,
}

impl fmt::Display for IdealKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root == 0 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}:{}", self.p, self.root)
        }
    }
}

impl Serialize for IdealKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl IdealKey {
    /// Parse `p` or `p:root`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad ideal key {s:?}"));
        let s = s.trim();
        match s.split_once(':') {
            Some((p, r)) => Ok(IdealKey {
                p: p.trim().parse().map_err(|_| bad())?,
                root: r.trim().parse().map_err(|_| bad())?,
            }),
            None => Ok(IdealKey { p: s.parse().map_err(|_| bad())?, root: 0 }),
        }
    }
}

/// A prime ideal of the integers of Q(sqrt5).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    p: u64,
    residue_degree: u8,
    norm: u64,
    sqrt5_image: FFElem,
    ramified: bool,
}

impl PrimeIdeal {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn residue_degree(&self) -> u8 {
        self.residue_degree
    }

    pub fn norm(&self) -> u64 {
        self.norm
    }

    pub fn sqrt5_image(&self) -> FFElem {
        self.sqrt5_image
    }

    pub fn is_ramified(&self) -> bool {
        self.ramified
    }

    pub fn is_split(&self) -> bool {
        self.residue_degree == 1 && !self.ramified
    }

    pub fn is_inert(&self) -> bool {
        self.residue_degree == 2
    }

    pub fn residue_field(&self) -> FiniteField {
        self.sqrt5_image.field()
    }

    pub fn key(&self) -> IdealKey {
        let root = if self.is_split() { self.sqrt5_image.coords()[0] } else { 0 };
        IdealKey { p: self.p, root }
    }

    /// The Galois-conjugate ideal (itself unless split).
    pub fn conjugate(&self) -> PrimeIdeal {
        if !self.is_split() {
            return self.clone();
        }
        PrimeIdeal { sqrt5_image: -self.sqrt5_image, ..self.clone() }
    }

    /// Reduction of an element of Q(sqrt5) into the residue field.
    pub fn reduce(&self, x: &QuadElem) -> Result<FFElem> {
        let field = self.residue_field();
        if self.p == 2 {
            // write x = u + v*phi with phi = (1 + sqrt5)/2 and send phi to t
            let v = rat(2) * &x.b;
            let u = &x.a - &x.b;
            return Ok(field.from_rational(&u)? + field.from_rational(&v)? * field.gen());
        }
        Ok(field.from_rational(&x.a)? + field.from_rational(&x.b)? * self.sqrt5_image)
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ramified {
            write!(f, "(sqrt5)")
        } else if self.is_split() {
            write!(f, "({}, sqrt5 - {})", self.p, self.sqrt5_image)
        } else {
            write!(f, "({})", self.p)
        }
    }
}

impl Serialize for PrimeIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PrimeIdeal", 5)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("f", &self.residue_degree)?;
        st.serialize_field("norm", &self.norm)?;
        st.serialize_field("sqrt5_image", &self.sqrt5_image.to_string())?;
        st.serialize_field("ramified", &self.ramified)?;
        st.end()
    }
}

/// Prime ideals above the rational prime `p`, split ideals ordered by the
/// image of sqrt5 in `1..p`.
pub fn split_prime(p: u64) -> Result<Vec<PrimeIdeal>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 5 {
        let f = FiniteField::prime(5)?;
        return Ok(vec![PrimeIdeal { p, residue_degree: 1, norm: 5, sqrt5_image: f.zero(), ramified: true }]);
    }
    if p == 2 || legendre(5, p) == -1 {
        let f = FiniteField::quadratic(p)?;
        // F_4 = F_2(phi) and sqrt5 = 2 phi - 1 = 1 there
        let image = if p == 2 { f.one() } else { f.gen() };
        return Ok(vec![PrimeIdeal { p, residue_degree: 2, norm: p * p, sqrt5_image: image, ramified: false }]);
    }
    let f = FiniteField::prime(p)?;
    let r = sqrt_mod_prime(5, p).expect("5 is a residue");
    let (lo, hi) = if r < p - r { (r, p - r) } else { (p - r, r) };
    Ok([lo, hi]
        .into_iter()
        .map(|s| PrimeIdeal { p, residue_degree: 1, norm: p, sqrt5_image: f.elem(s, 0), ramified: false })
        .collect())
}

/// All prime ideals of norm at most `max_norm`, ordered by (p, sqrt5 image).
/// The prime ideal named by `key`.
pub fn ideal_from_key(key: &IdealKey) -> Result<PrimeIdeal> {
    split_prime(key.p)?
        .into_iter()
        .find(|i| i.key() == *key)
        .ok_or_else(|| Error::Config(format!("no prime ideal {key}; split primes need p:root with root^2 = 5 mod p")))
}

pub fn ideals_up_to_norm(max_norm: u64) -> Vec<PrimeIdeal> {
    primes_up_to(max_norm)
        .into_iter()
        .flat_map(|p| split_prime(p).expect("sieve output is prime"))
        .filter(|q| q.norm() <= max_norm)
        .collect()
}
