//! Klein's system relating principal quintics `x^5 + A x^2 + B x + C` to
//! triples `(j, m, n)`, Moebius substitutions on quintics, and a numeric
//! solver for `(j, m, n)`.

pub mod hp;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use hp::Hp;

use crate::error::{Error, Result};
use crate::ring::QuadElem;

/// Which sign to use on the `n^4 / (1728 - j)^2` term of B. The commonly
/// printed form has `+`; only `-` is consistent with the curve E0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KleinVariant {
    Corrected,
    AsPrinted,
}

/// Arithmetic needed to evaluate the system.
pub trait KleinScalar: Clone + Send + Sync {
    fn int(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn approx(&self) -> f64;
    fn from_approx(x: f64) -> Self;
}

impl KleinScalar for QuadElem {
    fn int(n: i64) -> Self {
        QuadElem::from(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        QuadElem::is_zero(self)
    }
    fn approx(&self) -> f64 {
        self.to_f64(1)
    }
    fn from_approx(_: f64) -> Self {
        unimplemented!("exact scalars are not built from floats")
    }
}

impl KleinScalar for Hp {
    fn int(n: i64) -> Self {
        Hp::from_i64(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        Hp::is_zero(self)
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
    fn from_approx(x: f64) -> Self {
        Hp::from_f64(x)
    }
}

impl KleinScalar for f64 {
    fn int(n: i64) -> Self {
        n as f64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn approx(&self) -> f64 {
        *self
    }
    fn from_approx(x: f64) -> Self {
        x
    }
}

/// `coef * v^pv * m^pm * n^pn` with `v = 1 / (1728 - j)`.
struct Term(i64, u32, u32, u32);

fn brackets(variant: KleinVariant) -> [(i64, Vec<Term>); 3] {
    let sign = match variant {
        KleinVariant::Corrected => -1,
        KleinVariant::AsPrinted => 1,
    };
    [
        (-20, vec![Term(2, 0, 3, 0), Term(3, 0, 2, 1), Term(432 * 6, 1, 1, 2), Term(432, 1, 0, 3)]),
        (-5, vec![Term(1, 0, 4, 0), Term(-864 * 3, 1, 2, 2), Term(-864 * 2, 1, 1, 3), Term(sign * 559_872, 2, 0, 4)]),
        (-1, vec![Term(1, 0, 5, 0), Term(-1440, 1, 3, 2), Term(62_208 * 15, 2, 1, 4), Term(62_208 * 4, 2, 0, 5)]),
    ]
}

fn pow<S: KleinScalar>(x: &S, e: u32) -> S {
    (0..e).fold(S::int(1), |acc, _| acc.mul(x))
}

fn check_j<S: KleinScalar>(j: &S) -> Result<()> {
    if j.is_zero() || j.sub(&S::int(1728)).is_zero() {
        return Err(Error::KleinSingular(format!("{}", j.approx())));
    }
    Ok(())
}

/// Bracket value and its partials in v, m, n.
fn bracket<S: KleinScalar>(terms: &[Term], v: &S, m: &S, n: &S) -> [S; 4] {
    let mut out = [S::int(0), S::int(0), S::int(0), S::int(0)];
    for &Term(c, pv, pm, pn) in terms {
        let c = S::int(c);
        let (vv, mm, nn) = (pow(v, pv), pow(m, pm), pow(n, pn));
        out[0] = out[0].add(&c.mul(&vv).mul(&mm).mul(&nn));
        if pv > 0 {
            out[1] = out[1].add(&c.mul(&S::int(pv.into())).mul(&pow(v, pv - 1)).mul(&mm).mul(&nn));
        }
        if pm > 0 {
            out[2] = out[2].add(&c.mul(&S::int(pm.into())).mul(&vv).mul(&pow(m, pm - 1)).mul(&nn));
        }
        if pn > 0 {
            out[3] = out[3].add(&c.mul(&S::int(pn.into())).mul(&vv).mul(&mm).mul(&pow(n, pn - 1)));
        }
    }
    out
}

/// (A, B, C) from (j, m, n).
pub fn klein_forward<S: KleinScalar>(j: &S, m: &S, n: &S) -> Result<[S; 3]> {
    klein_forward_with(KleinVariant::Corrected, j, m, n)
}

pub fn klein_forward_with<S: KleinScalar>(variant: KleinVariant, j: &S, m: &S, n: &S) -> Result<[S; 3]> {
    Ok(system(variant, j, m, n)?.0)
}

/// Values and Jacobian rows (d/dj, d/dm, d/dn).
#[allow(clippy::type_complexity)]
fn system<S: KleinScalar>(variant: KleinVariant, j: &S, m: &S, n: &S) -> Result<([S; 3], [[S; 3]; 3])> {
    check_j(j)?;
    let u = S::int(1).div(j);
    let v = S::int(1).div(&S::int(1728).sub(j));
    let mut vals = [S::int(0), S::int(0), S::int(0)];
    let mut jac = [[S::int(0), S::int(0), S::int(0)], [S::int(0), S::int(0), S::int(0)], [S::int(0), S::int(0), S::int(0)]];
    for (k, (pref, terms)) in brackets(variant).iter().enumerate() {
        let [p, dv, dm, dn] = bracket(terms, &v, m, n);
        let c = S::int(*pref);
        vals[k] = c.mul(&u).mul(&p);
        // du/dj = -u^2, dv/dj = v^2
        jac[k][0] = c.mul(&u.mul(&dv).mul(&v).mul(&v).sub(&u.mul(&u).mul(&p)));
        jac[k][1] = c.mul(&u).mul(&dm);
        jac[k][2] = c.mul(&u).mul(&dn);
    }
    Ok((vals, jac))
}

fn sqrt5_hp() -> &'static Hp {
    static S: std::sync::OnceLock<Hp> = std::sync::OnceLock::new();
    S.get_or_init(Hp::sqrt5)
}

/// Image of `x` under the real embedding with `sqrt5 -> sign * sqrt(5)`.
pub fn embed(x: &QuadElem, sign: i8) -> Hp {
    let b = Hp::from_rational(&x.b) * sqrt5_hp();
    let a = Hp::from_rational(&x.a);
    if sign >= 0 {
        a + b
    } else {
        a - b
    }
}

/// `x^5 + A x^2 + B x + C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalQuintic {
    pub a: QuadElem,
    pub b: QuadElem,
    pub c: QuadElem,
}

impl PrincipalQuintic {
    pub fn new(a: QuadElem, b: QuadElem, c: QuadElem) -> Self {
        PrincipalQuintic { a, b, c }
    }

    /// The quintic attached to E0.
    pub fn e0() -> Self {
        PrincipalQuintic {
            a: QuadElem::from_ints(-125 * 185, -125 * 39),
            b: QuadElem::from_ints(-6875 * 56, -6875 * 19),
            c: QuadElem::from_ints(-625 * 10691, -625 * 2225),
        }
    }

    /// From monic degree-5 coefficients (low to high) without x^4, x^3 terms.
    pub fn from_poly(p: &[QuadElem]) -> Result<Self> {
        if p.len() != 6 || p[5] != QuadElem::one() || !p[4].is_zero() || !p[3].is_zero() {
            return Err(Error::Parse("not of the form x^5 + A x^2 + B x + C".into()));
        }
        Ok(PrincipalQuintic { a: p[2].clone(), b: p[1].clone(), c: p[0].clone() })
    }

    pub fn to_poly(&self) -> Vec<QuadElem> {
        vec![self.c.clone(), self.b.clone(), self.a.clone(), QuadElem::zero(), QuadElem::zero(), QuadElem::one()]
    }

    pub fn embedded(&self, sign: i8) -> [Hp; 3] {
        [embed(&self.a, sign), embed(&self.b, sign), embed(&self.c, sign)]
    }
}

/// `x -> (alpha x + beta) / (gamma x + delta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoebiusMap {
    pub alpha: QuadElem,
    pub beta: QuadElem,
    pub gamma: QuadElem,
    pub delta: QuadElem,
}

impl MoebiusMap {
    pub fn new(alpha: QuadElem, beta: QuadElem, gamma: QuadElem, delta: QuadElem) -> Result<Self> {
        let m = MoebiusMap { alpha, beta, gamma, delta };
        if m.determinant().is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MoebiusMap { alpha: QuadElem::one(), beta: QuadElem::zero(), gamma: QuadElem::zero(), delta: QuadElem::one() }
    }

    /// The substitution taking `x^5 + 10x^3 - 10x^2 + 35x - 18` to the E0 quintic.
    pub fn e0() -> Self {
        MoebiusMap::new(QuadElem::from_ints(1, 1), QuadElem::from_ints(10, -30), QuadElem::from(2), QuadElem::from_ints(35, 5))
            .unwrap()
    }

    pub fn determinant(&self) -> QuadElem {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    /// `self(inner(x))`.
    pub fn after(&self, inner: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            alpha: &self.alpha * &inner.alpha + &self.beta * &inner.gamma,
            beta: &self.alpha * &inner.beta + &self.beta * &inner.delta,
            gamma: &self.gamma * &inner.alpha + &self.delta * &inner.gamma,
            delta: &self.gamma * &inner.beta + &self.delta * &inner.delta,
        }
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap { alpha: self.delta.clone(), beta: -self.beta.clone(), gamma: -self.gamma.clone(), delta: self.alpha.clone() }
    }

    /// `None` at the pole.
    pub fn apply(&self, x: &QuadElem) -> Option<QuadElem> {
        let den = &self.gamma * x + &self.delta;
        (!den.is_zero()).then(|| (&self.alpha * x + &self.beta) / den)
    }
}

fn poly_mul(a: &[QuadElem], b: &[QuadElem]) -> Vec<QuadElem> {
    let mut out = vec![QuadElem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            out[i + k] = &out[i + k] + &(x * y);
        }
    }
    out
}

fn poly_pow(a: &[QuadElem], e: usize) -> Vec<QuadElem> {
    (0..e).fold(vec![QuadElem::one()], |acc, _| poly_mul(&acc, a))
}

pub fn poly_eval(p: &[QuadElem], x: &QuadElem) -> QuadElem {
    p.iter().rev().fold(QuadElem::zero(), |acc, c| &acc * x + c)
}

/// Monic numerator of `(gamma x + delta)^d q(mu(x))` for `q` of degree
/// `d` (coefficients low to high). Its roots are the preimages under `mu`
/// of the roots of `q`.
pub fn moebius_transform(q: &[QuadElem], mu: &MoebiusMap) -> Result<Vec<QuadElem>> {
    if mu.determinant().is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    let d = q.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
    if q[d].is_zero() {
        return Err(Error::DegreeDrop(format!("{}", q[d])));
    }
    let num = [mu.beta.clone(), mu.alpha.clone()];
    let den = [mu.delta.clone(), mu.gamma.clone()];
    let mut out = vec![QuadElem::zero(); d + 1];
    for (k, c) in q.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = poly_mul(&poly_pow(&num, k), &poly_pow(&den, d - k));
        for (i, t) in term.iter().enumerate() {
            out[i] = &out[i] + &(c * t);
        }
    }
    let lead = out[d].clone();
    if lead.is_zero() {
        // the leading coefficient is q(alpha / gamma) gamma^d
        return Err(Error::DegreeDrop(format!("q(alpha/gamma) gamma^{d} = {lead}")));
    }
    let inv = lead.inverse().unwrap();
    Ok(out.iter().map(|c| c * &inv).collect())
}

/// A numeric solution of the system in one real embedding.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KleinSolution {
    /// Sign of the image of sqrt5.
    pub embedding: i8,
    #[serde(serialize_with = "ser_hp")]
    pub j: Hp,
    #[serde(serialize_with = "ser_hp")]
    pub m: Hp,
    #[serde(serialize_with = "ser_hp")]
    pub n: Hp,
    /// Largest relative residual of the three equations.
    pub residual: f64,
    /// Size of the last Newton correction relative to the solution, an
    /// error bar for the printed digits.
    pub error_bar: f64,
}

fn ser_hp<S: serde::Serializer>(x: &Hp, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_decimal(30))
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub variant: KleinVariant,
    /// Accept a polished root below this relative residual.
    pub tolerance: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { variant: KleinVariant::Corrected, tolerance: 1e-40, max_iter: 200 }
    }
}

fn relative_residual<S: KleinScalar>(vals: &[S; 3], target: &[S; 3]) -> f64 {
    let scale = target.iter().map(|t| t.approx().abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    (0..3)
        .map(|k| {
            let d = vals[k].sub(&target[k]).approx().abs();
            let t = target[k].approx().abs();
            d / if t > 0.0 { t } else { scale }
        })
        .fold(0.0, f64::max)
}

/// Solves `J x = r` by elimination with partial pivoting.
fn solve3<S: KleinScalar>(mut a: [[S; 3]; 3], mut r: [S; 3]) -> Option<[S; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&x, &y| a[x][col].approx().abs().total_cmp(&a[y][col].approx().abs()))?;
        if a[piv][col].is_zero() || !a[piv][col].approx().is_finite() {
            return None;
        }
        a.swap(col, piv);
        r.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col].div(&a[col][col]);
            for k in col..3 {
                a[row][k] = a[row][k].sub(&f.mul(&a[col][k]));
            }
            r[row] = r[row].sub(&f.mul(&r[col]));
        }
    }
    let mut x = [S::int(0), S::int(0), S::int(0)];
    for row in (0..3).rev() {
        let mut acc = r[row].clone();
        for k in row + 1..3 {
            acc = acc.sub(&a[row][k].mul(&x[k]));
        }
        x[row] = acc.div(&a[row][row]);
    }
    Some(x)
}

/// Damped Newton from `start`; returns the point and its residual.
fn newton<S: KleinScalar>(variant: KleinVariant, target: &[S; 3], start: [S; 3], max_iter: usize, stop: f64) -> Option<([S; 3], f64, f64)> {
    let mut x = start;
    let (mut vals, mut jac) = system(variant, &x[0], &x[1], &x[2]).ok()?;
    let mut res = relative_residual(&vals, target);
    let mut step_size = f64::INFINITY;
    for _ in 0..max_iter {
        if res < stop {
            break;
        }
        let rhs = [vals[0].sub(&target[0]), vals[1].sub(&target[1]), vals[2].sub(&target[2])];
        let delta = solve3(jac.clone(), rhs)?;
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let l = S::from_approx(lambda);
            let cand = [x[0].sub(&l.mul(&delta[0])), x[1].sub(&l.mul(&delta[1])), x[2].sub(&l.mul(&delta[2]))];
            if let Ok((v, jc)) = system(variant, &cand[0], &cand[1], &cand[2]) {
                let r = relative_residual(&v, target);
                if r.is_finite() && r < res {
                    step_size = (0..3)
                        .map(|k| (lambda * delta[k].approx()).abs() / cand[k].approx().abs().max(1e-300))
                        .fold(0.0, f64::max);
                    x = cand;
                    vals = v;
                    jac = jc;
                    res = r;
                    accepted = true;
                    break;
                }
            }
            lambda /= 2.0;
        }
        if !accepted {
            break;
        }
    }
    Some((x, res, step_size))
}

fn starts(target: &[f64; 3]) -> Vec<[f64; 3]> {
    let s = target[0].abs().cbrt().max(1.0);
    let mut out = Vec::new();
    for sj in [-1.0, 1.0] {
        for t in 0..14 {
            let j = sj * 10f64.powf(0.25 + 0.5 * f64::from(t));
            let nscale = ((1728.0 - j).abs() / 432.0).cbrt();
            for m in [-2.0, -0.5, 0.5, 2.0] {
                for n in [-5.0, -2.0, -0.5, 0.5, 2.0, 5.0] {
                    out.push([j, m * s, n * s * nscale]);
                }
            }
        }
    }
    out
}

/// All solutions `(j, m, n)` found from a grid of starts, in the real
/// embedding `sqrt5 -> embedding * sqrt(5)`, sorted by `(j, m, n)`.
pub fn klein_solve(q: &PrincipalQuintic, embedding: i8) -> Result<Vec<KleinSolution>> {
    klein_solve_with(q, embedding, &SolverOptions::default())
}

pub fn klein_solve_with(q: &PrincipalQuintic, embedding: i8, opts: &SolverOptions) -> Result<Vec<KleinSolution>> {
    if q.a.is_zero() {
        return Err(Error::DegenerateQuintic);
    }
    let target = q.embedded(embedding);
    klein_solve_numeric(&target, embedding, opts)
}

/// Solver on already embedded coefficients.
pub fn klein_solve_numeric(target: &[Hp; 3], embedding: i8, opts: &SolverOptions) -> Result<Vec<KleinSolution>> {
    if target[0].is_zero() {
        return Err(Error::DegenerateQuintic);
    }
    let t64 = [target[0].to_f64(), target[1].to_f64(), target[2].to_f64()];
    let grid = starts(&t64);
    let coarse: Vec<(f64, [f64; 3])> = grid
        .par_iter()
        .filter_map(|s| newton(opts.variant, &t64, *s, opts.max_iter, 1e-13).map(|(x, r, _)| (r, x)))
        .collect();
    let best_coarse = coarse.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let mut seeds: Vec<[f64; 3]> = coarse.iter().filter(|c| c.0 < 1e-9).map(|c| c.1).collect();
    seeds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    seeds.dedup_by(|a, b| (0..3).all(|k| (a[k] - b[k]).abs() <= 1e-7 * b[k].abs().max(1e-3)));

    let polished: Vec<KleinSolution> = seeds
        .par_iter()
        .filter_map(|s| {
            let start = [Hp::from_f64(s[0]), Hp::from_f64(s[1]), Hp::from_f64(s[2])];
            let (x, res, bar) = newton(opts.variant, target, start, 40, opts.tolerance)?;
            (res < opts.tolerance.max(1e-20)).then(|| {
                let [j, m, n] = x;
                KleinSolution { embedding, j, m, n, residual: res, error_bar: bar }
            })
        })
        .collect();
    let mut sols = polished;
    sols.sort_by(|a, b| (&a.j, &a.m, &a.n).cmp(&(&b.j, &b.m, &b.n)));
    sols.dedup_by(|a, b| {
        let close = |x: &Hp, y: &Hp| (x - y).abs().to_f64() <= 1e-30 * y.abs().to_f64().max(1e-30);
        close(&a.j, &b.j) && close(&a.m, &b.m) && close(&a.n, &b.n)
    });
    if sols.is_empty() {
        return Err(Error::SolverFailure { starts: grid.len(), best_residual: best_coarse });
    }
    Ok(sols)
}

/// Rational `h/k` with `k <= max_den` within `tol` (relative) of `x`, by
/// continued fractions.
pub fn recognize_rational(x: &Hp, max_den: u64, tol: f64) -> Option<BigRational> {
    let scale = x.abs().to_f64().max(1.0);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x.clone();
    for _ in 0..80 {
        let mut a = y.round_to_int();
        if Hp::from_bigint(&a) > y {
            a -= 1;
        }
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            return None;
        }
        let approx = BigRational::new(h2.clone(), k2.clone());
        let err = (x - &Hp::from_rational(&approx)).abs().to_f64();
        if err <= tol * scale {
            return Some(approx);
        }
        let frac = &y - &Hp::from_bigint(&a);
        if frac.is_zero() {
            return None;
        }
        y = Hp::from_i64(1) / frac;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}

/// The element of Q(sqrt5) whose embeddings are `plus` and `minus`, if
/// both coordinates are rationals of bounded height.
pub fn recognize_quadratic(plus: &Hp, minus: &Hp, max_den: u64, tol: f64) -> Option<QuadElem> {
    let two = Hp::from_i64(2);
    let a = (plus + minus) / &two;
    let b = (plus - minus) / (&two * sqrt5_hp());
    let tol_abs = tol * plus.abs().to_f64().max(minus.abs().to_f64()).max(1.0);
    let ra = recognize_rational(&a, max_den, tol_abs / a.abs().to_f64().max(1.0))?;
    let rb = recognize_rational(&b, max_den, tol_abs / b.abs().to_f64().max(1.0))?;
    Some(QuadElem::new(ra, rb))
}

/// An exact solution: (j, m, n) in Q(sqrt5) with `klein_forward` equal to
/// the target coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactKleinSolution {
    pub j: QuadElem,
    pub m: QuadElem,
    pub n: QuadElem,
}

/// Pairs solutions from the two embeddings, recognizes them as quadratic
/// irrationals and keeps those that reproduce `q` exactly.
pub fn certify(q: &PrincipalQuintic, plus: &[KleinSolution], minus: &[KleinSolution]) -> Vec<ExactKleinSolution> {
    let mut out = Vec::new();
    for p in plus {
        for m in minus {
            let rec = |x: &Hp, y: &Hp| recognize_quadratic(x, y, 1_000_000, 1e-25);
            let (Some(j), Some(mm), Some(n)) = (rec(&p.j, &m.j), rec(&p.m, &m.m), rec(&p.n, &m.n)) else {
                continue;
            };
            if let Ok([a, b, c]) = klein_forward(&j, &mm, &n) {
                if a == q.a && b == q.b && c == q.c {
                    out.push(ExactKleinSolution { j, m: mm, n });
                }
            }
        }
    }
    out
}

impl fmt::Display for PrincipalQuintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^5 + ({})x^2 + ({})x + ({})", self.a, self.b, self.c)
    }
}

/// Relative size of `x - y`.
pub fn rel_diff(x: &Hp, y: &Hp) -> f64 {
    let d = (x - y).abs().to_f64();
    let s = y.abs().to_f64();
    if s == 0.0 {
        d
    } else {
        d / s
    }
}
