//! Traces of Frobenius for the icosahedral representation attached to E0.
//!
//! The factor pattern of the quintic resolvent mod a prime ideal fixes the
//! conjugacy class of Frobenius in A5 and hence the square of the trace up
//! to the nebentype; point counting on the reduced curve then picks the
//! sign through the congruence mod (2 - i, sqrt5).

mod series;
mod twist;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::elliptic::{CurveQ5, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::polyfactor::{degree_pattern, is_squarefree, FFPoly};
use crate::ring::{
    ideals_up_to_norm, legendre_5, reduce_mod_special_ideal, CycloQuadElem, Embedding, IdealKey, PrimeIdeal,
    QuadElem,
};

pub use series::{EulerFactor, LSeriesCoeffs, LocalFactor};
pub use twist::{make_chi, ChiTable, QCurveCheck, TwistEntry, TwistReport, TwistStatus};

/// Cycle types of elements of A5 on five letters.
pub const A5_PATTERNS: [[usize; 5]; 4] = [[1, 1, 1, 1, 1], [0, 0, 1, 2, 2], [0, 0, 1, 1, 3], [0, 0, 0, 0, 5]];

/// Set of excluded prime ideals (bad reduction and ramification).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma {
    ideals: BTreeSet<IdealKey>,
}

impl Sigma {
    pub fn new(ideals: impl IntoIterator<Item = IdealKey>) -> Self {
        Sigma { ideals: ideals.into_iter().collect() }
    }

    /// {2, (sqrt5)}.
    pub fn e0() -> Self {
        Sigma::new([IdealKey { p: 2, root: 0 }, IdealKey { p: 5, root: 0 }])
    }

    pub fn contains(&self, ideal: &PrimeIdeal) -> bool {
        self.ideals.contains(&ideal.key())
    }

    /// Rational primes below the excluded ideals.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.ideals.iter().map(|k| k.p).collect();
        ps.dedup();
        ps
    }

    pub fn keys(&self) -> impl Iterator<Item = &IdealKey> {
        self.ideals.iter()
    }
}

/// The order-four character mod 5 at the norm: +1 when the norm is 1 mod 5,
/// -1 when it is 4 mod 5 (the only other residue a norm can have).
pub fn nebentype(ideal: &PrimeIdeal) -> Result<i8> {
    if ideal.is_ramified() {
        return Err(Error::Ramified { p: ideal.p() });
    }
    Ok(match ideal.norm() % 5 {
        1 => 1,
        4 => -1,
        r => unreachable!("norm of an unramified ideal is +-1 mod 5, got {r}"),
    })
}

/// The quadratic symbol (5/p) at the rational prime under the ideal. It
/// agrees with [`nebentype`] except at split primes p = 4 mod 5, and the
/// sign congruence fails there with it; kept for comparison.
pub fn nebentype_quadratic(ideal: &PrimeIdeal) -> Result<i8> {
    if ideal.is_ramified() {
        return Err(Error::Ramified { p: ideal.p() });
    }
    Ok(legendre_5(ideal.p() as i64))
}

/// Square roots of the table entries, indexed like [`A5_PATTERNS`]; the
/// quintic column carries both golden values (-1 +- sqrt5)/2.
fn table_roots(pattern: &[usize]) -> Result<Vec<QuadElem>> {
    match pattern {
        [1, 1, 1, 1, 1] => Ok(vec![QuadElem::from(2)]),
        [1, 2, 2] => Ok(vec![QuadElem::zero()]),
        [1, 1, 3] => Ok(vec![QuadElem::one()]),
        [5] => Ok(vec![QuadElem::from_frac(-1, 1, 2), QuadElem::from_frac(-1, -1, 2)]),
        other => Err(Error::NonIcosahedralPattern(other.to_vec())),
    }
}

fn with_nebentype(x: &QuadElem, omega: i8) -> CycloQuadElem {
    if omega > 0 {
        CycloQuadElem::from(x.clone())
    } else {
        CycloQuadElem::from_parts(QuadElem::zero(), x.clone())
    }
}

/// Possible values of the squared trace for a factor pattern.
pub fn trace_squared_from_pattern(pattern: &[usize], omega: i8) -> Result<Vec<CycloQuadElem>> {
    let w = CycloQuadElem::from(i64::from(omega));
    Ok(table_roots(pattern)?.iter().map(|r| &CycloQuadElem::from(r * r) * &w).collect())
}

/// Where the squared trace came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceSource {
    /// Factor pattern of a squarefree resolvent.
    Pattern,
    /// The resolvent has a repeated factor at a prime of good reduction, so
    /// the class is read from the residue of t^2 / omega mod 5 instead.
    PointCountResidue,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceResult {
    pub ideal: PrimeIdeal,
    pub omega: i8,
    pub pattern: Option<Vec<usize>>,
    pub source: TraceSource,
    pub a_squared: Vec<CycloQuadElem>,
    pub candidates: Vec<CycloQuadElem>,
    pub chosen: Option<CycloQuadElem>,
    pub golden_ambiguous: bool,
    pub point_count: u64,
    /// `N + 1 - #E(F)` as an integer.
    pub frobenius_trace: i64,
}

impl TraceResult {
    /// Candidates surviving the congruence.
    pub fn survivors(&self) -> Vec<CycloQuadElem> {
        let t = self.frobenius_trace.rem_euclid(5) as u8;
        self.candidates.iter().filter(|c| reduce_mod_special_ideal(c) == Ok(t)).cloned().collect()
    }

    /// Violations of the per-ideal contract; empty when everything holds.
    pub fn integrity_issues(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.source != TraceSource::Pattern {
            out.push("resolvent is not squarefree".to_string());
        }
        if let Some(p) = &self.pattern {
            if !A5_PATTERNS.iter().any(|a| a.iter().filter(|&&d| d > 0).copied().eq(p.iter().copied())) {
                out.push(format!("pattern {p:?} is not an A5 cycle type"));
            }
        }
        let Some(c) = &self.chosen else {
            out.push("no trace chosen".to_string());
            return out;
        };
        if !self.a_squared.contains(&(c * c)) {
            out.push(format!("chosen^2 = {} is not a table value", c * c));
        }
        let t = self.frobenius_trace.rem_euclid(5);
        let lhs = (t * t) % 5;
        let rhs: Vec<i64> = self.a_squared.iter().filter_map(|v| reduce_mod_special_ideal(v).ok()).map(i64::from).collect();
        if !rhs.contains(&lhs) {
            out.push(format!("t^2 = {lhs} mod 5 matches no squared table value {rhs:?}"));
        }
        for e in Embedding::ALL {
            let z = c.to_complex(e).norm();
            if z > 2.0 + 1e-12 {
                out.push(format!("|chosen| = {z} > 2 under {e:?}"));
            }
        }
        out
    }
}

/// Resolvent, trace and L-series machinery for one curve.
#[derive(Clone, Debug)]
pub struct Engine {
    curve: CurveQ5,
    j: QuadElem,
    sigma: Sigma,
    cap: u64,
}

impl Engine {
    pub fn new(curve: CurveQ5, sigma: Sigma, cap: u64) -> Self {
        let j = curve.j_invariant();
        Engine { curve, j, sigma, cap }
    }

    pub fn e0() -> Self {
        Engine::new(CurveQ5::e0(), Sigma::e0(), DEFAULT_CAP)
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn curve(&self) -> &CurveQ5 {
        &self.curve
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn check_ideal(&self, ideal: &PrimeIdeal) -> Result<()> {
        if self.sigma.contains(ideal) {
            let key = ideal.key();
            return Err(Error::Excluded { p: key.p, root: key.root });
        }
        Ok(())
    }

    /// (x + 3)^3 (x^2 + 11x + 64) - j reduced mod the ideal.
    pub fn resolvent(&self, ideal: &PrimeIdeal) -> Result<FFPoly> {
        self.check_ideal(ideal)?;
        self.curve.reduce(ideal)?;
        let field = ideal.residue_field();
        let cube = FFPoly::from_i64s(field, &[27, 27, 9, 1]);
        let quad = FFPoly::from_i64s(field, &[64, 11, 1]);
        let j = FFPoly::new(field, vec![ideal.reduce(&self.j)?]);
        Ok(cube.mul(&quad).sub(&j))
    }

    pub fn resolve_trace(&self, ideal: &PrimeIdeal) -> Result<TraceResult> {
        let resolvent = self.resolvent(ideal)?;
        let omega = nebentype(ideal)?;
        let count = self.curve.reduce(ideal)?.count_points(self.cap)?;
        let t = ideal.norm() as i64 + 1 - count as i64;
        let t5 = t.rem_euclid(5) as u8;

        let (pattern, source, roots) = if is_squarefree(&resolvent)? {
            let pat = degree_pattern(&resolvent)?;
            let roots = table_roots(&pat)?;
            (Some(pat), TraceSource::Pattern, roots)
        } else {
            // t^2 = a^2 = root^2 * omega mod (2 - i, sqrt5); omega is its own inverse
            let r = (i64::from(t5) * i64::from(t5) * i64::from(omega)).rem_euclid(5);
            let roots = match r {
                0 => vec![QuadElem::zero()],
                1 => vec![QuadElem::one()],
                4 => {
                    return Err(Error::Unresolved {
                        p: ideal.p(),
                        detail: "repeated resolvent factor and t^2/omega = 4 mod 5 fits both the identity \
                                 and the five-cycle classes"
                            .into(),
                    })
                }
                _ => {
                    return Err(Error::Integrity {
                        p: ideal.p(),
                        detail: format!("t^2/omega = {r} mod 5 is not a squared table value"),
                    })
                }
            };
            (None, TraceSource::PointCountResidue, roots)
        };

        let w = CycloQuadElem::from(i64::from(omega));
        let a_squared: Vec<CycloQuadElem> = roots.iter().map(|r| &CycloQuadElem::from(r * r) * &w).collect();
        let mut candidates = Vec::new();
        for r in &roots {
            let c = with_nebentype(r, omega);
            if c.is_zero() {
                candidates.push(c);
            } else {
                candidates.push(-&c);
                candidates.push(c);
            }
        }
        for c in &candidates {
            // every candidate must be 5-integral before comparing residues
            reduce_mod_special_ideal(c)?;
        }
        let survivors: Vec<CycloQuadElem> =
            candidates.iter().filter(|c| reduce_mod_special_ideal(c) == Ok(t5)).cloned().collect();
        let golden = pattern.as_deref() == Some(&[5][..]);
        let chosen = match survivors.len() {
            0 => {
                return Err(Error::Integrity {
                    p: ideal.p(),
                    detail: format!("no candidate is congruent to t = {t} at {ideal}"),
                })
            }
            1 => survivors[0].clone(),
            _ if golden => golden_default(&survivors),
            _ => {
                return Err(Error::Integrity {
                    p: ideal.p(),
                    detail: format!("{} candidates survive the congruence at {ideal}", survivors.len()),
                })
            }
        };
        Ok(TraceResult {
            ideal: ideal.clone(),
            omega,
            pattern,
            source,
            a_squared,
            candidates,
            chosen: Some(chosen),
            golden_ambiguous: golden,
            point_count: count,
            frobenius_trace: t,
        })
    }

    pub fn euler_factor(&self, ideal: &PrimeIdeal) -> Result<EulerFactor> {
        let tr = self.resolve_trace(ideal)?;
        Ok(EulerFactor {
            ideal: ideal.clone(),
            a: tr.chosen.expect("resolve_trace always chooses"),
            omega: tr.omega,
            norm: ideal.norm(),
        })
    }

    /// Resolved traces for every non-excluded ideal of norm at most
    /// `max_norm`, in (p, sqrt5 image) order. Work is spread over the rayon
    /// pool; the first error in canonical order is returned.
    pub fn traces_up_to(&self, max_norm: u64) -> Result<Vec<TraceResult>> {
        let ideals: Vec<PrimeIdeal> = ideals_up_to_norm(max_norm).into_iter().filter(|i| !self.sigma.contains(i)).collect();
        let results: Vec<Result<TraceResult>> = ideals.par_iter().map(|i| self.resolve_trace(i)).collect();
        results.into_iter().collect()
    }

    /// Like [`Engine::traces_up_to`] but keeps per-ideal failures.
    pub fn try_traces_up_to(&self, max_norm: u64) -> Vec<(PrimeIdeal, Result<TraceResult>)> {
        let ideals: Vec<PrimeIdeal> = ideals_up_to_norm(max_norm).into_iter().filter(|i| !self.sigma.contains(i)).collect();
        let results: Vec<Result<TraceResult>> = ideals.par_iter().map(|i| self.resolve_trace(i)).collect();
        ideals.into_iter().zip(results).collect()
    }
}

fn golden_default(survivors: &[CycloQuadElem]) -> CycloQuadElem {
    use num_traits::Signed;
    survivors
        .iter()
        .find(|c| c.re().b.is_positive() || c.im().b.is_positive())
        .cloned()
        .unwrap_or_else(|| survivors[0].clone())
}

impl fmt::Display for TraceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chosen = self.chosen.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        write!(f, "{} N={} #E={} a={}", self.ideal, self.ideal.norm(), self.point_count, chosen)?;
        if self.golden_ambiguous {
            write!(f, " (golden)")?;
        }
        Ok(())
    }
}
