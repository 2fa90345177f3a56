use std::collections::BTreeMap;

use serde::Serialize;

use super::{ChiTable, Engine};
use crate::arith::{primes_up_to, smallest_prime_factors};
use crate::error::{Error, Result};
use crate::ring::{CycloQuadElem, PrimeIdeal};

/// `1 - a X + omega X^2` with `X = N^-s`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EulerFactor {
    pub ideal: PrimeIdeal,
    pub a: CycloQuadElem,
    pub omega: i8,
    pub norm: u64,
}

impl EulerFactor {
    pub fn to_local(&self) -> LocalFactor {
        LocalFactor { a: self.a.clone(), c: CycloQuadElem::from(i64::from(self.omega)), norm: self.norm }
    }
}

/// A general degree-two local factor `1 - a X + c X^2`, `X = norm^-s`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalFactor {
    pub a: CycloQuadElem,
    pub c: CycloQuadElem,
    pub norm: u64,
}

impl LocalFactor {
    /// Coefficients of `1 / (1 - a X + c X^2)` up to `X^k_max`.
    pub fn inverse_series(&self, k_max: usize) -> Vec<CycloQuadElem> {
        let mut b = vec![CycloQuadElem::one()];
        if k_max >= 1 {
            b.push(self.a.clone());
        }
        for r in 2..=k_max {
            let next = &self.a * &b[r - 1] - &self.c * &b[r - 2];
            b.push(next);
        }
        b
    }
}

/// Dirichlet coefficients `a(1..=n_max)` of a product of local factors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LSeriesCoeffs {
    pub n_max: usize,
    /// Index 0 is unused and holds zero.
    pub coeffs: Vec<CycloQuadElem>,
    pub excluded_primes: Vec<u64>,
}

impl LSeriesCoeffs {
    /// Multiplies out local factors. Every prime `p <= n_max` outside
    /// `excluded` must be covered by the factors whose norm is a power of p
    /// not exceeding `n_max`; excluded primes get zero coefficients.
    pub fn from_factors(n_max: usize, excluded: &[u64], factors: &[LocalFactor]) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<&LocalFactor>> = BTreeMap::new();
        for f in factors {
            let p = smallest_prime_factors(f.norm as usize)[f.norm as usize] as u64;
            by_prime.entry(p).or_default().push(f);
        }
        let mut local: BTreeMap<u64, Vec<CycloQuadElem>> = BTreeMap::new();
        for p in primes_up_to(n_max as u64) {
            let mut kmax = 0;
            while (p as u128).pow(kmax + 1) <= n_max as u128 {
                kmax += 1;
            }
            let kmax = kmax as usize;
            let mut series = vec![CycloQuadElem::zero(); kmax + 1];
            if excluded.contains(&p) {
                series[0] = CycloQuadElem::one();
                local.insert(p, series);
                continue;
            }
            series[0] = CycloQuadElem::one();
            for f in by_prime.get(&p).into_iter().flatten() {
                let step = if f.norm == p { 1 } else { 2 };
                let inv = f.inverse_series(kmax / step);
                let mut spread = vec![CycloQuadElem::zero(); kmax + 1];
                for (r, b) in inv.into_iter().enumerate() {
                    spread[r * step] = b;
                }
                series = truncated_product(&series, &spread);
            }
            local.insert(p, series);
        }
        let spf = smallest_prime_factors(n_max);
        let mut coeffs = vec![CycloQuadElem::zero(); n_max + 1];
        if n_max >= 1 {
            coeffs[1] = CycloQuadElem::one();
        }
        for n in 2..=n_max {
            let p = spf[n];
            let mut m = n;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            coeffs[n] = &coeffs[m] * &local[&(p as u64)][k];
        }
        LSeriesCoeffs { n_max, coeffs, excluded_primes: excluded.to_vec() }
    }

    pub fn get(&self, n: usize) -> &CycloQuadElem {
        &self.coeffs[n]
    }
}

fn truncated_product(a: &[CycloQuadElem], b: &[CycloQuadElem]) -> Vec<CycloQuadElem> {
    let n = a.len();
    let mut out = vec![CycloQuadElem::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

impl Engine {
    fn check_n_max(&self, n_max: usize) -> Result<()> {
        if n_max as u64 > self.cap() {
            return Err(Error::OverCap { n_max, cap: self.cap() as usize });
        }
        Ok(())
    }

    fn chi_at(chi: &ChiTable, ideal: &PrimeIdeal) -> Result<CycloQuadElem> {
        chi.get(ideal)
            .map(|u| u.to_cyclo())
            .ok_or_else(|| Error::Config(format!("twist character undefined at {}", ideal.key())))
    }

    /// Coefficients of the L-series with local factors `1 - a X + omega X^2`
    /// from the resolved traces, optionally twisted to
    /// `1 - chi a X + chi^2 omega X^2`.
    pub fn dirichlet_coeffs(&self, n_max: usize, twist: Option<&ChiTable>) -> Result<LSeriesCoeffs> {
        self.check_n_max(n_max)?;
        let mut factors = Vec::new();
        for tr in self.traces_up_to(n_max as u64)? {
            let mut f = EulerFactor {
                ideal: tr.ideal.clone(),
                a: tr.chosen.clone().expect("resolved"),
                omega: tr.omega,
                norm: tr.ideal.norm(),
            }
            .to_local();
            if let Some(chi) = twist {
                let x = Self::chi_at(chi, &tr.ideal)?;
                f.a = &x * &f.a;
                f.c = &(&x * &x) * &f.c;
            }
            factors.push(f);
        }
        Ok(LSeriesCoeffs::from_factors(n_max, &self.sigma().primes(), &factors))
    }

    /// The weight-two series built from point counts and the twist:
    /// local factors `1 - chi t X + chi^2 N X^2` with `t = N + 1 - #E`.
    pub fn f0_coeffs(&self, n_max: usize, chi: &ChiTable) -> Result<LSeriesCoeffs> {
        self.check_n_max(n_max)?;
        let mut factors = Vec::new();
        for ideal in crate::ring::ideals_up_to_norm(n_max as u64) {
            if self.sigma().contains(&ideal) {
                continue;
            }
            let t = self.curve().reduce(&ideal)?.frobenius_trace(self.cap())?;
            let x = Self::chi_at(chi, &ideal)?;
            factors.push(LocalFactor {
                a: &x * &CycloQuadElem::from(t),
                c: &(&x * &x) * &CycloQuadElem::from(ideal.norm() as i64),
                norm: ideal.norm(),
            });
        }
        Ok(LSeriesCoeffs::from_factors(n_max, &self.sigma().primes(), &factors))
    }
}
