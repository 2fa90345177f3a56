//! Truncated q-expansions over Q(i, sqrt5) or Z/5^M.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::arith::mul_mod;
use crate::dirichlet::{eisenstein_coeffs, EisensteinSeries};
use crate::error::{Error, Result};
use crate::icosahedral::{ChiTable, Engine, LSeriesCoeffs};
use crate::ring::special::is_power_of_five;
use crate::ring::{reduce_gaussian, reduce_mod_special_ideal, sqrt_minus_one, CycloQuadElem, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffRing {
    Exact,
    /// Z/modulus with modulus a power of 5.
    ZMod(u64),
}

impl std::fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoeffRing::Exact => write!(f, "Q(i,sqrt5)"),
            CoeffRing::ZMod(m) => write!(f, "Z/{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Exact(Vec<CycloQuadElem>),
    ZMod(u64, Vec<u64>),
}

/// `sum_{n <= n_max} a(n) q^n`. The weight is carried along and added
/// under multiplication, nothing more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    coeffs: Coeffs,
    pub weight: i64,
}

impl QExpansion {
    pub fn exact(coeffs: Vec<CycloQuadElem>, weight: i64) -> Self {
        assert!(!coeffs.is_empty(), "a q-expansion needs a constant term");
        QExpansion { coeffs: Coeffs::Exact(coeffs), weight }
    }

    pub fn zmod(modulus: u64, coeffs: Vec<u64>, weight: i64) -> Result<Self> {
        if !is_power_of_five(modulus) || modulus == 1 {
            return Err(Error::Precision(format!("{modulus} is not a power of 5")));
        }
        assert!(!coeffs.is_empty(), "a q-expansion needs a constant term");
        Ok(QExpansion { coeffs: Coeffs::ZMod(modulus, coeffs.into_iter().map(|a| a % modulus).collect()), weight })
    }

    /// `sum_{n >= 1} a(n) q^n` from Dirichlet coefficients.
    pub fn from_lseries(c: &LSeriesCoeffs, weight: i64) -> Self {
        let mut v = c.coeffs.clone();
        v[0] = CycloQuadElem::zero();
        QExpansion::exact(v, weight)
    }

    pub fn from_eisenstein(e: &EisensteinSeries) -> Self {
        QExpansion { coeffs: Coeffs::ZMod(e.modulus, e.coeffs.clone()), weight: i64::from(e.weight) }
    }

    pub fn ring(&self) -> CoeffRing {
        match &self.coeffs {
            Coeffs::Exact(_) => CoeffRing::Exact,
            Coeffs::ZMod(m, _) => CoeffRing::ZMod(*m),
        }
    }

    pub fn n_max(&self) -> usize {
        match &self.coeffs {
            Coeffs::Exact(v) => v.len() - 1,
            Coeffs::ZMod(_, v) => v.len() - 1,
        }
    }

    pub fn exact_coeffs(&self) -> Option<&[CycloQuadElem]> {
        match &self.coeffs {
            Coeffs::Exact(v) => Some(v),
            Coeffs::ZMod(..) => None,
        }
    }

    pub fn residues(&self) -> Option<&[u64]> {
        match &self.coeffs {
            Coeffs::ZMod(_, v) => Some(v),
            Coeffs::Exact(_) => None,
        }
    }

    pub fn truncate(&self, n_max: usize) -> Self {
        let coeffs = match &self.coeffs {
            Coeffs::Exact(v) => Coeffs::Exact(v[..=n_max.min(v.len() - 1)].to_vec()),
            Coeffs::ZMod(m, v) => Coeffs::ZMod(*m, v[..=n_max.min(v.len() - 1)].to_vec()),
        };
        QExpansion { coeffs, weight: self.weight }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::RingMismatch(self.ring().to_string(), other.ring().to_string())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.n_max().min(other.n_max());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => Coeffs::Exact((0..=n).map(|i| &a[i] + &b[i]).collect()),
            (Coeffs::ZMod(m, a), Coeffs::ZMod(m2, b)) if m == m2 => {
                Coeffs::ZMod(*m, (0..=n).map(|i| (a[i] + b[i]) % m).collect())
            }
            _ => return Err(self.mismatch(other)),
        };
        Ok(QExpansion { coeffs, weight: self.weight })
    }

    /// Cauchy product truncated at the smaller `n_max`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.n_max().min(other.n_max());
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Exact(a), Coeffs::Exact(b)) => {
                let mut out = vec![CycloQuadElem::zero(); n + 1];
                for (i, x) in a.iter().enumerate().take(n + 1) {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate().take(n + 1 - i) {
                        if !y.is_zero() {
                            out[i + j] = &out[i + j] + &(x * y);
                        }
                    }
                }
                Coeffs::Exact(out)
            }
            (Coeffs::ZMod(m, a), Coeffs::ZMod(m2, b)) if m == m2 => {
                let mut out = vec![0u64; n + 1];
                for i in 0..=n {
                    for j in 0..=n - i {
                        out[i + j] = (out[i + j] + mul_mod(a[i], b[j], *m)) % m;
                    }
                }
                Coeffs::ZMod(*m, out)
            }
            _ => return Err(self.mismatch(other)),
        };
        Ok(QExpansion { coeffs, weight: self.weight + other.weight })
    }

    /// Coefficients as strings: exact ones as their four coordinates,
    /// residues as decimal strings.
    pub fn to_json(&self) -> Value {
        match &self.coeffs {
            Coeffs::Exact(v) => serde_json::to_value(v).unwrap(),
            Coeffs::ZMod(_, v) => Value::Array(v.iter().map(|a| Value::String(a.to_string())).collect()),
        }
    }

    /// Reads an array of exact coefficients in the `to_json` format.
    pub fn from_json_exact(text: &str, weight: i64) -> Result<Self> {
        let v: Vec<CycloQuadElem> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if v.is_empty() {
            return Err(Error::Parse("empty coefficient array".into()));
        }
        Ok(QExpansion::exact(v, weight))
    }
}

/// Coefficient-wise reduction modulo (2 - i, sqrt5) into Z/5. Series over
/// Z/5^M are reduced mod 5.
pub fn reduce_series_mod_ideal(f: &QExpansion) -> Result<QExpansion> {
    let out = match &f.coeffs {
        Coeffs::Exact(v) => v
            .iter()
            .enumerate()
            .map(|(n, a)| reduce_mod_special_ideal(a).map(u64::from).map_err(|_| Error::NotFiveIntegral { index: n }))
            .collect::<Result<Vec<u64>>>()?,
        Coeffs::ZMod(_, v) => v.iter().map(|a| a % 5).collect(),
    };
    QExpansion::zmod(5, out, f.weight)
}

/// Image in Z/5^M of a series with coefficients in Q(i), `i -> i_image`.
pub fn reduce_series_gaussian(f: &QExpansion, modulus: u64, i_image: u64) -> Result<QExpansion> {
    let Coeffs::Exact(v) = &f.coeffs else {
        return Err(Error::RingMismatch(f.ring().to_string(), CoeffRing::Exact.to_string()));
    };
    let out = v
        .iter()
        .enumerate()
        .map(|(n, a)| {
            reduce_gaussian(a, modulus, i_image).map_err(|e| match e {
                Error::NotIntegralAt { .. } => Error::NotFiveIntegral { index: n },
                other => other,
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    QExpansion::zmod(modulus, out, f.weight)
}

pub fn is_cuspidal(f: &QExpansion) -> bool {
    match &f.coeffs {
        Coeffs::Exact(v) => v[0].is_zero(),
        Coeffs::ZMod(_, v) => v[0] == 0,
    }
}

/// `sum_{n <= n_cut} a(n) y^{k/2} e^{2 pi i n tau}` under a complex embedding.
pub fn maass_eval(f: &QExpansion, k: i64, tau: Complex64, n_cut: Option<usize>, emb: Embedding) -> Result<Complex64> {
    if !(tau.im > 0.0 && tau.re.is_finite() && tau.im.is_finite()) {
        return Err(Error::NotUpperHalfPlane(format!("{tau}")));
    }
    let Coeffs::Exact(v) = &f.coeffs else {
        return Err(Error::RingMismatch(f.ring().to_string(), CoeffRing::Exact.to_string()));
    };
    let n_cut = n_cut.unwrap_or(f.n_max()).min(f.n_max());
    let q = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
    // Horner in q
    let mut acc = Complex64::new(0.0, 0.0);
    for a in v[..=n_cut].iter().rev() {
        acc = acc * q + a.to_complex(emb);
    }
    Ok(acc * tau.im.powf(k as f64 / 2.0))
}

/// `|(-y^2 (d_xx + d_yy) + i k y d_x) f - (k/2)(1 - k/2) f|` at `tau`, by
/// central differences with step `h`.
pub fn laplacian_residual(f: &QExpansion, k: i64, tau: Complex64, h: f64, emb: Embedding) -> Result<f64> {
    if !(h > 0.0 && tau.im > 10.0 * h) {
        return Err(Error::StepTooLarge { h, y: tau.im });
    }
    let ev = |dx: f64, dy: f64| maass_eval(f, k, tau + Complex64::new(dx, dy), None, emb);
    let c = ev(0.0, 0.0)?;
    let (xp, xm, yp, ym) = (ev(h, 0.0)?, ev(-h, 0.0)?, ev(0.0, h)?, ev(0.0, -h)?);
    let dxx = (xp - c * 2.0 + xm) / (h * h);
    let dyy = (yp - c * 2.0 + ym) / (h * h);
    let dx = (xp - xm) / (2.0 * h);
    let y = tau.im;
    let kf = k as f64;
    let lhs = -(dxx + dyy) * (y * y) + Complex64::new(0.0, kf * y) * dx;
    Ok((lhs - c * (kf / 2.0 * (1.0 - kf / 2.0))).norm())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceRow {
    pub n: usize,
    pub rho: u64,
    pub f0: u64,
    pub f0_eis: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub n_max: usize,
    pub precision: u32,
    pub rows: Vec<CongruenceRow>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// Compares modulo (2 - i, sqrt5) the twisted coefficients of rho, the
/// weight-two series built from point counts, and its product with the
/// weight-three Eisenstein series computed in Z/5^precision.
pub fn congruence_chain(engine: &Engine, chi: &ChiTable, n_max: usize, precision: u32) -> Result<CongruenceReport> {
    let rho = QExpansion::from_lseries(&engine.dirichlet_coeffs(n_max, Some(chi))?, 1);
    let f0 = QExpansion::from_lseries(&engine.f0_coeffs(n_max, chi)?, 2);
    let eis = eisenstein_coeffs(3, 3, precision, n_max, 1)?;
    let modulus = eis.modulus;
    let f0_lift = reduce_series_gaussian(&f0, modulus, sqrt_minus_one(modulus))?;
    let f1 = f0_lift.multiply(&QExpansion::from_eisenstein(&eis))?;
    let (a, b, c) = (reduce_series_mod_ideal(&rho)?, reduce_series_mod_ideal(&f0)?, reduce_series_mod_ideal(&f1)?);
    let (a, b, c) = (a.residues().unwrap(), b.residues().unwrap(), c.residues().unwrap());
    let rows = (0..=n_max)
        .map(|n| CongruenceRow { n, rho: a[n], f0: b[n], f0_eis: c[n], agree: a[n] == b[n] && b[n] == c[n] })
        .collect();
    Ok(CongruenceReport { n_max, precision, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosahedral::make_chi;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> QExpansion {
        QExpansion::exact(v.iter().map(|&a| CycloQuadElem::from(a)).collect(), 0)
    }

    #[test]
    fn products() {
        let f = ints(&[1, 1, 0, 0]).multiply(&ints(&[1, -1, 0, 0])).unwrap();
        assert_eq!(f, ints(&[1, 0, -1, 0]));
        let g = ints(&[3, 0, 7, 2]);
        assert_eq!(g.multiply(&ints(&[1, 0, 0, 0])).unwrap(), g);
        let z = QExpansion::zmod(5, vec![1, 0, 0, 0], 0).unwrap();
        assert!(matches!(g.multiply(&z), Err(Error::RingMismatch(..))));
        let w = QExpansion { weight: 2, ..g.clone() }.multiply(&QExpansion { weight: 3, ..g }).unwrap();
        assert_eq!(w.weight, 5);
    }

    #[test]
    fn reductions() {
        let f = ints(&[5, 10, -25]);
        assert_eq!(reduce_series_mod_ideal(&f).unwrap().residues().unwrap(), &[0, 0, 0]);
        let i = QExpansion::exact(vec![CycloQuadElem::i()], 0);
        assert_eq!(reduce_series_mod_ideal(&i).unwrap().residues().unwrap(), &[2]);
        let bad = QExpansion::exact(vec![CycloQuadElem::one(), CycloQuadElem::one().scale(&crate::ring::quad::frac(1, 5))], 0);
        assert_eq!(reduce_series_mod_ideal(&bad), Err(Error::NotFiveIntegral { index: 1 }));
    }

    #[test]
    fn cusp_conditions() {
        let engine = Engine::e0();
        let rho = QExpansion::from_lseries(&engine.dirichlet_coeffs(50, None).unwrap(), 1);
        assert!(is_cuspidal(&rho));
        assert!(is_cuspidal(&ints(&[0, 0])));
        let e = eisenstein_coeffs(3, 3, 3, 20, 1).unwrap();
        assert!(!is_cuspidal(&QExpansion::from_eisenstein(&e)));
        // f(x + iy) y^{s-1} decays for s = 2
        let vals: Vec<f64> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&y| maass_eval(&rho, 1, Complex64::new(0.3, y), None, Embedding::PRINCIPAL).unwrap().norm() * y)
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]) && vals[3] < 1e-15);
    }

    #[test]
    fn maass_values() {
        let single = ints(&[0, 1]);
        let y = 1.7;
        let v = maass_eval(&single, 1, Complex64::new(0.0, y), None, Embedding::PRINCIPAL).unwrap();
        assert!((v.re - y.sqrt() * (-2.0 * PI * y).exp()).abs() < 1e-15 && v.im.abs() < 1e-15);
        assert_eq!(maass_eval(&ints(&[0, 0, 0]), 1, Complex64::new(0.2, 0.5), None, Embedding::PRINCIPAL).unwrap(), Complex64::new(0.0, 0.0));
        assert!(maass_eval(&single, 1, Complex64::new(0.0, -1.0), None, Embedding::PRINCIPAL).is_err());
    }

    #[test]
    fn laplacian() {
        let single = ints(&[0, 1]);
        let tau = Complex64::new(0.0, 1.0);
        let e = Embedding::PRINCIPAL;
        assert!(laplacian_residual(&single, 1, tau, 1e-3, e).unwrap() < 1e-4);
        assert_eq!(laplacian_residual(&ints(&[0, 0]), 1, tau, 1e-3, e).unwrap(), 0.0);
        let r1 = laplacian_residual(&single, 1, tau, 2e-2, e).unwrap();
        let r2 = laplacian_residual(&single, 1, tau, 1e-2, e).unwrap();
        assert!((r1 / r2 - 4.0).abs() < 0.2, "{}", r1 / r2);
        assert!(matches!(laplacian_residual(&single, 1, tau, 0.2, e), Err(Error::StepTooLarge { .. })));
    }

    #[test]
    fn json_round_trip() {
        let f = QExpansion::exact(vec![CycloQuadElem::zero(), CycloQuadElem::from_ints(1, -2, 3, 0)], 1);
        let text = f.to_json().to_string();
        assert_eq!(QExpansion::from_json_exact(&text, 1).unwrap(), f);
    }

    #[test]
    fn chain_at_small_n() {
        let engine = Engine::e0();
        let r = congruence_chain(&engine, &make_chi(200), 200, 3).unwrap();
        let bad: Vec<_> = r.rows.iter().filter(|r| !r.agree).collect();
        assert!(bad.is_empty(), "{bad:?}");
        // residues of the icosahedral series itself, frozen
        let rho = QExpansion::from_lseries(&engine.dirichlet_coeffs(30, None).unwrap(), 1);
        let red = reduce_series_mod_ideal(&rho).unwrap();
        assert_eq!(red.residues().unwrap(), FROZEN_RHO_30);
    }

    // a(p) = t(p) mod (2 - i, sqrt5); cross-checked against direct point counts
    const FROZEN_RHO_30: &[u64] = &[0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];

    fn arb_series(n: usize) -> impl Strategy<Value = QExpansion> {
        proptest::collection::vec((-9i64..9, -9i64..9, -9i64..9, -9i64..9), n + 1).prop_map(|v| {
            QExpansion::exact(v.into_iter().map(|(a, b, c, d)| CycloQuadElem::from_ints(a, b, c, d)).collect(), 0)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn ring_axioms(f in arb_series(64), g in arb_series(64), h in arb_series(64)) {
            prop_assert_eq!(f.multiply(&g).unwrap().multiply(&h).unwrap(), f.multiply(&g.multiply(&h).unwrap()).unwrap());
            prop_assert_eq!(f.multiply(&g.add(&h).unwrap()).unwrap(), f.multiply(&g).unwrap().add(&f.multiply(&h).unwrap()).unwrap());
            prop_assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
        }

        #[test]
        fn reduction_is_a_homomorphism(f in arb_series(30), g in arb_series(30)) {
            let lhs = reduce_series_mod_ideal(&f.multiply(&g).unwrap()).unwrap();
            let rhs = reduce_series_mod_ideal(&f).unwrap().multiply(&reduce_series_mod_ideal(&g).unwrap()).unwrap();
            prop_assert_eq!(lhs.residues(), rhs.residues());
        }
    }
}
