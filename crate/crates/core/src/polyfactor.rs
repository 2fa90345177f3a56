//! Dense univariate polynomials over F_p and F_{p^2}, with just enough
//! factoring machinery to read off distinct-degree patterns.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{FFElem, FiniteField};

/// Polynomial with coefficients stored low degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFPoly {
    field: FiniteField,
    coeffs: Vec<FFElem>,
}

impl FFPoly {
    pub fn new(field: FiniteField, coeffs: Vec<FFElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = FFPoly { field, coeffs };
        p.trim();
        p
    }

    /// Integer coefficients, low degree first.
    pub fn from_i64s(field: FiniteField, coeffs: &[i64]) -> Self {
        FFPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FiniteField) -> Self {
        FFPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FiniteField) -> Self {
        FFPoly { field, coeffs: vec![field.one()] }
    }

    pub fn x(field: FiniteField) -> Self {
        FFPoly { field, coeffs: vec![field.zero(), field.one()] }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FFElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FFElem> {
        self.coeffs.last().copied()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: FFElem) -> Self {
        FFPoly::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn eval(&self, x: FFElem) -> FFElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FFPoly::new(self.field, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FFPoly::new(self.field, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FFPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        FFPoly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (FFPoly::zero(self.field), self.clone());
        };
        let mut q = vec![self.field.zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = r[k + dd] * inv;
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j] - c * b;
            }
        }
        r.truncate(dd);
        (FFPoly::new(self.field, q), FFPoly::new(self.field, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * self.field.from_i64(i as i64))
            .collect();
        FFPoly::new(self.field, coeffs)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m` by square and multiply.
    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = FFPoly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Roots in the coefficient field, by trying every element.
    pub fn roots(&self) -> Vec<FFElem> {
        self.field.elements().filter(|&x| self.eval(x).is_zero()).collect()
    }
}

impl fmt::Display for FFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "({c})x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// True when `gcd(f, f')` is constant.
pub fn is_squarefree(f: &FFPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.gcd(&f.derivative()).degree() == Some(0))
}

/// Sorted degrees of the irreducible factors of a squarefree polynomial,
/// by distinct-degree gcd peeling.
pub fn degree_pattern(f: &FFPoly) -> Result<Vec<usize>> {
    if !is_squarefree(f)? {
        return Err(Error::NotSquarefree);
    }
    let field = f.field();
    let q = field.size();
    let x = FFPoly::x(field);
    let mut rest = f.monic();
    let mut pattern = Vec::new();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap() >= 2 * d {
        // h = x^(q^d) mod rest
        h = h.powmod(q, &rest);
        let g = rest.gcd(&h.sub(&x));
        let gd = g.degree().unwrap();
        if gd > 0 {
            pattern.extend(std::iter::repeat_n(d, gd / d));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    match rest.degree().unwrap() {
        0 => {}
        r => pattern.push(r),
    }
    pattern.sort_unstable();
    Ok(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn golden(p: u64, degree: u8) -> FFPoly {
        FFPoly::from_i64s(FiniteField::new(p, degree).unwrap(), &[-1, 1, 1])
    }

    /// Enumerate all monic polynomials of degree `d`.
    fn monics(field: FiniteField, d: usize) -> Vec<FFPoly> {
        let q = field.size() as usize;
        (0..q.pow(d as u32))
            .map(|mut idx| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(field.from_index(idx % q));
                    idx /= q;
                }
                c.push(field.one());
                FFPoly::new(field, c)
            })
            .collect()
    }

    /// Trial division by every monic of degree <= 2; the leftover of a
    /// quintic then has degree 0, 3, 4 (impossible once 1,2 removed) or 5.
    fn oracle_pattern(f: &FFPoly) -> Vec<usize> {
        let field = f.field();
        let mut rest = f.monic();
        let mut out = Vec::new();
        for d in 1..=2 {
            for g in monics(field, d) {
                loop {
                    let (q, r) = rest.divrem(&g);
                    if !r.is_zero() || rest.degree() < Some(d) {
                        break;
                    }
                    out.push(d);
                    rest = q;
                }
            }
        }
        if let Some(d) = rest.degree().filter(|&d| d > 0) {
            out.push(d);
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn golden_polynomial_examples() {
        assert!(!is_squarefree(&golden(5, 1)).unwrap());
        assert!(is_squarefree(&golden(11, 1)).unwrap());
        assert_eq!(degree_pattern(&golden(11, 1)).unwrap(), vec![1, 1]);
        assert_eq!(degree_pattern(&golden(2, 1)).unwrap(), vec![2]);
        assert_eq!(degree_pattern(&golden(5, 1)), Err(Error::NotSquarefree));
        let f = FiniteField::prime(7).unwrap();
        assert!(is_squarefree(&FFPoly::x(f)).unwrap());
        assert_eq!(is_squarefree(&FFPoly::zero(f)), Err(Error::ZeroPolynomial));
        let roots: Vec<u64> = golden(11, 1).roots().iter().map(|r| r.coords()[0]).collect();
        assert_eq!(roots, vec![3, 7]);
    }

    #[test]
    fn patterns_over_quadratic_fields() {
        // x^2 + x - 1 splits over any F_{p^2}
        for p in [2u64, 3, 7, 13] {
            assert_eq!(degree_pattern(&golden(p, 2)).unwrap(), vec![1, 1], "p = {p}");
        }
        // a cubic over F_49, checked against trial division
        let f = FiniteField::quadratic(7).unwrap();
        let g = FFPoly::from_i64s(f, &[-3, 0, 0, 1]);
        assert_eq!(degree_pattern(&g).unwrap(), oracle_pattern(&g));
    }

    #[test]
    fn division_identity() {
        let f = FiniteField::quadratic(3).unwrap();
        let a = FFPoly::new(f, vec![f.gen(), f.one(), f.zero(), f.gen(), f.one()]);
        let b = FFPoly::new(f, vec![f.one(), f.gen(), f.gen()]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn random_quintics_match_trial_division(
            pi in 0usize..25,
            c in proptest::collection::vec(0u64..1000, 5),
        ) {
            let p = crate::arith::primes_up_to(100)[pi];
            let field = FiniteField::prime(p).unwrap();
            let mut coeffs: Vec<FFElem> = c.iter().map(|&v| field.elem(v, 0)).collect();
            coeffs.push(field.one());
            let f = FFPoly::new(field, coeffs);
            prop_assume!(is_squarefree(&f).unwrap());
            let pat = degree_pattern(&f).unwrap();
            prop_assert_eq!(pat.iter().sum::<usize>(), 5);
            prop_assert_eq!(pat.iter().filter(|&&d| d == 1).count(), f.roots().len());
            prop_assert_eq!(pat, oracle_pattern(&f));
        }

        #[test]
        fn linear_factors_reconstruct(roots in proptest::collection::btree_set(0u64..13, 1..6)) {
            let field = FiniteField::prime(13).unwrap();
            let f = roots.iter().fold(FFPoly::one(field), |acc, &r| {
                acc.mul(&FFPoly::new(field, vec![-field.elem(r, 0), field.one()]))
            });
            let found = f.roots();
            let rebuilt = found.iter().fold(FFPoly::one(field), |acc, &r| {
                acc.mul(&FFPoly::new(field, vec![-r, field.one()]))
            });
            prop_assert_eq!(rebuilt, f.clone());
            prop_assert_eq!(degree_pattern(&f).unwrap(), vec![1; roots.len()]);
        }
    }
}
