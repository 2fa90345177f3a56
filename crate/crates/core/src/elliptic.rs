//! Curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q(sqrt5) and over residue
//! fields, with exhaustive point counting.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{FFElem, FiniteField, PrimeIdeal, QuadElem};

/// Default enumeration cap on the residue field size.
pub const DEFAULT_CAP: u64 = 10_000;
/// Enumeration is refused above this size whatever the configured cap.
pub const HARD_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveQ5 {
    pub a2: QuadElem,
    pub a4: QuadElem,
    pub a6: QuadElem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveFF {
    pub a2: FFElem,
    pub a4: FFElem,
    pub a6: FFElem,
    discriminant: FFElem,
}

fn q(n: i64) -> QuadElem {
    QuadElem::from(n)
}

impl CurveQ5 {
    pub fn new(a2: QuadElem, a4: QuadElem, a6: QuadElem) -> Result<Self> {
        let e = CurveQ5 { a2, a4, a6 };
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    /// y^2 = x^3 + (5 - sqrt5) x^2 + sqrt5 x.
    pub fn e0() -> Self {
        CurveQ5::new(QuadElem::from_ints(5, -1), QuadElem::sqrt5(), QuadElem::zero()).unwrap()
    }

    /// (b2, b4, b6, b8).
    pub fn b_invariants(&self) -> [QuadElem; 4] {
        let b2 = q(4) * &self.a2;
        let b4 = q(2) * &self.a4;
        let b6 = q(4) * &self.a6;
        let b8 = q(4) * &self.a2 * &self.a6 - &self.a4 * &self.a4;
        [b2, b4, b6, b8]
    }

    pub fn c4(&self) -> QuadElem {
        let [b2, b4, _, _] = self.b_invariants();
        &b2 * &b2 - q(24) * b4
    }

    pub fn discriminant(&self) -> QuadElem {
        let [b2, b4, b6, b8] = self.b_invariants();
        -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6 + q(9) * &b2 * &b4 * &b6
    }

    pub fn j_invariant(&self) -> QuadElem {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / self.discriminant()
    }

    /// Galois conjugate curve (sqrt5 -> -sqrt5 on every coefficient).
    pub fn conjugate(&self) -> Self {
        CurveQ5 { a2: self.a2.conjugate(), a4: self.a4.conjugate(), a6: self.a6.conjugate() }
    }

    /// Reduction modulo a prime ideal; fails at primes of bad reduction.
    pub fn reduce(&self, ideal: &PrimeIdeal) -> Result<CurveFF> {
        let bad = Error::BadReduction { p: ideal.p() };
        // the model has a1 = a3 = 0, so it is singular in characteristic 2
        if ideal.p() == 2 {
            return Err(bad);
        }
        let c = CurveFF::new(ideal.reduce(&self.a2)?, ideal.reduce(&self.a4)?, ideal.reduce(&self.a6)?);
        if c.is_singular() {
            return Err(bad);
        }
        Ok(c)
    }
}

impl fmt::Display for CurveQ5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x^2 + ({})x + ({})", self.a2, self.a4, self.a6)
    }
}

impl CurveFF {
    pub fn new(a2: FFElem, a4: FFElem, a6: FFElem) -> Self {
        let field = a2.field();
        let k = |n| field.from_i64(n);
        let b2 = k(4) * a2;
        let b4 = k(2) * a4;
        let b6 = k(4) * a6;
        let b8 = k(4) * a2 * a6 - a4 * a4;
        let discriminant = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
        CurveFF { a2, a4, a6, discriminant }
    }

    pub fn field(&self) -> FiniteField {
        self.a2.field()
    }

    pub fn discriminant(&self) -> FFElem {
        self.discriminant
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant.is_zero()
    }

    pub fn rhs(&self, x: FFElem) -> FFElem {
        ((x + self.a2) * x + self.a4) * x + self.a6
    }

    fn check_size(&self, cap: u64) -> Result<()> {
        let size = self.field().size();
        let cap = cap.min(HARD_CAP);
        if size > cap {
            return Err(Error::FieldTooLarge { q: size, cap, hard: HARD_CAP });
        }
        if self.is_singular() {
            return Err(Error::SingularCurve);
        }
        Ok(())
    }

    /// Number of projective points, by running over x and looking up how
    /// many y square to the right-hand side.
    pub fn count_points(&self, cap: u64) -> Result<u64> {
        self.check_size(cap)?;
        let field = self.field();
        let mut roots = vec![0u32; field.size() as usize];
        for y in field.elements() {
            roots[field.index(y * y)] += 1;
        }
        let affine: u64 = field.elements().map(|x| u64::from(roots[field.index(self.rhs(x))])).sum();
        Ok(affine + 1)
    }

    /// Same count, running over y and looking up the preimages of y^2
    /// under the cubic.
    pub fn count_points_by_y(&self, cap: u64) -> Result<u64> {
        self.check_size(cap)?;
        let field = self.field();
        let mut preimages = vec![0u32; field.size() as usize];
        for x in field.elements() {
            preimages[field.index(self.rhs(x))] += 1;
        }
        let affine: u64 = field.elements().map(|y| u64::from(preimages[field.index(y * y)])).sum();
        Ok(affine + 1)
    }

    /// `q + 1 - #E(F_q)`.
    pub fn frobenius_trace(&self, cap: u64) -> Result<i64> {
        Ok(self.field().size() as i64 + 1 - self.count_points(cap)? as i64)
    }
}

impl fmt::Display for CurveFF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x^2 + ({})x + ({}) over {}", self.a2, self.a4, self.a6, self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::ring::{ideals_up_to_norm, split_prime};
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};
    use proptest::prelude::*;

    #[test]
    fn j_of_e0() {
        let e0 = CurveQ5::e0();
        assert_eq!(e0.j_invariant(), QuadElem::from_ints(86048, -38496));
        assert_eq!(e0.conjugate().j_invariant(), QuadElem::from_ints(86048, 38496));
        let cm = CurveQ5::new(q(0), q(1), q(0)).unwrap();
        assert_eq!(cm.j_invariant(), q(1728));
        assert_eq!(CurveQ5::new(q(0), q(0), q(0)), Err(Error::SingularCurve));
    }

    #[test]
    fn discriminant_of_e0_only_involves_2_and_5() {
        let n = CurveQ5::e0().discriminant().norm();
        assert!(n.is_integer());
        let mut m: BigInt = n.numer().abs();
        for p in [2u32, 5] {
            while (&m % p).is_zero() {
                m /= p;
            }
        }
        assert!(m.is_one(), "cofactor {m}");
    }

    #[test]
    fn reduction_at_excluded_and_good_primes() {
        let e0 = CurveQ5::e0();
        for p in [2u64, 5] {
            for ideal in split_prime(p).unwrap() {
                assert_eq!(e0.reduce(&ideal), Err(Error::BadReduction { p }));
            }
        }
        for ideal in split_prime(11).unwrap() {
            assert!(e0.reduce(&ideal).is_ok());
        }
    }

    #[test]
    fn small_counts() {
        let f5 = FiniteField::prime(5).unwrap();
        let c = CurveFF::new(f5.zero(), f5.one(), f5.zero());
        assert_eq!(c.count_points(DEFAULT_CAP).unwrap(), 4);
        assert_eq!(c.count_points_by_y(DEFAULT_CAP).unwrap(), 4);

        let e0 = CurveQ5::e0();
        let counts: Vec<u64> = split_prime(11)
            .unwrap()
            .iter()
            .map(|i| e0.reduce(i).unwrap().count_points(DEFAULT_CAP).unwrap())
            .collect();
        assert_eq!(counts, vec![12, 12]);
        let nine = e0.reduce(&split_prime(3).unwrap()[0]).unwrap();
        assert_eq!(nine.count_points(DEFAULT_CAP).unwrap(), 8);
    }

    #[test]
    fn caps_are_enforced() {
        let e0 = CurveQ5::e0();
        let big = e0.reduce(&split_prime(10_009).unwrap()[0]).unwrap();
        assert!(matches!(big.count_points(DEFAULT_CAP), Err(Error::FieldTooLarge { q: 10_009, .. })));
        assert_eq!(big.count_points(20_000).unwrap(), big.count_points_by_y(20_000).unwrap());
        let huge = e0.reduce(&split_prime(1_000_003).unwrap()[0]).unwrap();
        assert!(matches!(huge.count_points(u64::MAX), Err(Error::FieldTooLarge { cap: HARD_CAP, .. })));
    }

    #[test]
    fn hasse_and_two_pass_agreement_for_e0() {
        let e0 = CurveQ5::e0();
        for ideal in ideals_up_to_norm(3000) {
            let Ok(c) = e0.reduce(&ideal) else {
                assert!(ideal.p() == 2 || ideal.p() == 5);
                continue;
            };
            let n = c.count_points(DEFAULT_CAP).unwrap();
            let t = ideal.norm() as f64 + 1.0 - n as f64;
            assert!(t * t <= 4.0 * ideal.norm() as f64, "Hasse fails at {ideal}");
            assert_eq!(n, c.count_points_by_y(DEFAULT_CAP).unwrap());
        }
    }

    proptest! {
        #[test]
        fn j_commutes_with_conjugation(c in proptest::collection::vec(-20i64..20, 6)) {
            let e = CurveQ5::new(
                QuadElem::from_ints(c[0], c[1]),
                QuadElem::from_ints(c[2], c[3]),
                QuadElem::from_ints(c[4], c[5]),
            );
            prop_assume!(e.is_ok());
            let e = e.unwrap();
            prop_assert_eq!(e.conjugate().j_invariant(), e.j_invariant().conjugate());
        }

        #[test]
        fn random_curves_obey_hasse(pi in 1usize..40, c in proptest::collection::vec(0u64..500, 3)) {
            let p = primes_up_to(200)[pi];
            let f = FiniteField::prime(p).unwrap();
            let e = CurveFF::new(f.elem(c[0], 0), f.elem(c[1], 0), f.elem(c[2], 0));
            prop_assume!(!e.is_singular());
            let n = e.count_points(DEFAULT_CAP).unwrap() as i64;
            let t = p as i64 + 1 - n;
            prop_assert!(t * t <= 4 * p as i64);
            prop_assert_eq!(n as u64, e.count_points_by_y(DEFAULT_CAP).unwrap());
        }
    }
}
