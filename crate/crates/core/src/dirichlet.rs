//! Dirichlet characters with values in the fourth roots of unity, partial
//! L-series, theta series, generalized Bernoulli numbers and the 5-adic
//! Eisenstein series of weight k and nebentype a power of the Teichmueller
//! character.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{mul_mod, pow_mod, primes_up_to};
use crate::error::{Error, Result};
use crate::polyfactor::{degree_pattern, is_squarefree, FFPoly};
use crate::ring::special::is_power_of_five;
use crate::ring::{reduce_gaussian, sqrt_minus_one, teichmuller, CycloQuadElem, FiniteField, Unit4};

/// A Dirichlet character mod N; `values[n]` is `None` off the units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletChar {
    modulus: u64,
    values: Vec<Option<Unit4>>,
}

impl DirichletChar {
    /// Builds a character from its table on `0..N`, checking that it is one.
    pub fn from_table(modulus: u64, values: Vec<Option<Unit4>>) -> Result<Self> {
        let bad = |m: String| Err(Error::BadCharacter(m));
        if modulus == 0 || values.len() as u64 != modulus {
            return bad(format!("table of length {} for modulus {modulus}", values.len()));
        }
        let n = modulus as usize;
        for (a, v) in values.iter().enumerate() {
            let unit = (a as u64).gcd(&modulus) == 1;
            if unit != v.is_some() {
                return bad(format!("value at {a} must be {}", if unit { "a unit" } else { "zero" }));
            }
        }
        if values[1 % n] != Some(Unit4::ONE) {
            return bad("chi(1) != 1".into());
        }
        for a in 0..n {
            for b in 0..n {
                let prod = match (values[a], values[b]) {
                    (Some(x), Some(y)) => Some(x * y),
                    _ => None,
                };
                if values[a * b % n] != prod {
                    return bad(format!("chi({a}) chi({b}) != chi({})", a * b % n));
                }
            }
        }
        Ok(DirichletChar { modulus, values })
    }

    /// The principal character mod N (N = 1 gives the constant 1).
    pub fn trivial(modulus: u64) -> Self {
        let values = (0..modulus).map(|a| (a.gcd(&modulus) == 1).then_some(Unit4::ONE)).collect();
        DirichletChar { modulus, values }
    }

    /// (5/n).
    pub fn legendre5() -> Self {
        let v = [None, Some(Unit4::ONE), Some(Unit4::MINUS_ONE), Some(Unit4::MINUS_ONE), Some(Unit4::ONE)];
        DirichletChar { modulus: 5, values: v.to_vec() }
    }

    /// The order-four character mod 5 with `omega(2) = i`; it reduces to the
    /// Teichmueller character under `i -> 2`.
    pub fn omega5() -> Self {
        let v = [None, Some(Unit4::ONE), Some(Unit4::I), Some(Unit4::MINUS_I), Some(Unit4::MINUS_ONE)];
        DirichletChar { modulus: 5, values: v.to_vec() }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn eval(&self, n: i64) -> Option<Unit4> {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn eval_complex(&self, n: i64) -> Complex64 {
        self.eval(n).map_or(Complex64::new(0.0, 0.0), Unit4::to_complex)
    }

    pub fn eval_exact(&self, n: i64) -> CycloQuadElem {
        self.eval(n).map_or_else(CycloQuadElem::zero, Unit4::to_cyclo)
    }

    /// Pointwise power; negative exponents give powers of the conjugate.
    pub fn pow(&self, e: i64) -> Self {
        DirichletChar { modulus: self.modulus, values: self.values.iter().map(|v| v.map(|u| u.pow(e))).collect() }
    }

    pub fn conj(&self) -> Self {
        self.pow(-1)
    }

    pub fn is_even(&self) -> bool {
        self.eval(-1) == Some(Unit4::ONE)
    }

    /// 0 for even characters, 1 for odd ones.
    pub fn parity(&self) -> u32 {
        u32::from(!self.is_even())
    }

    pub fn conductor(&self) -> u64 {
        let n = self.modulus;
        (1..=n)
            .filter(|d| n % d == 0)
            .find(|&d| (1..n).filter(|a| a.gcd(&n) == 1 && a % d == 1 % d).all(|a| self.eval(a as i64) == Some(Unit4::ONE)))
            .unwrap_or(n)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }
}

/// `sum_{n <= n_max} chi(n) n^-s`, accumulated from the smallest terms up.
pub fn l_partial_sum(chi: &DirichletChar, s: Complex64, n_max: u64) -> Complex64 {
    (1..=n_max)
        .rev()
        .map(|n| chi.eval_complex(n as i64) * (-s * (n as f64).ln()).exp())
        .sum()
}

/// `prod_{p <= p_max} (1 - chi(p) p^-s)^-1`.
pub fn euler_partial_product(chi: &DirichletChar, s: Complex64, p_max: u64) -> Complex64 {
    primes_up_to(p_max)
        .into_iter()
        .map(|p| (Complex64::new(1.0, 0.0) - chi.eval_complex(p as i64) * (-s * (p as f64).ln()).exp()).inv())
        .product()
}

/// `|sum (5/n) e^-ny - (e^3y - e^y) / (1 + e^y + ... + e^4y)|`, both sides
/// rewritten in powers of `e^-y` so large `y` does not overflow.
pub fn theta_sum_identity_residual(y: f64) -> Result<f64> {
    if y.is_nan() || y <= 0.0 {
        return Err(Error::NotPositive(y));
    }
    let chi = DirichletChar::legendre5();
    // tail after n_cut is below e^{-n_cut y} / (1 - e^{-y})
    let n_cut = ((12.0 * 10f64.ln() - (1.0 - (-y).exp()).ln()) / y).ceil().max(1.0) as u64 + 5;
    let lhs: f64 = (1..=n_cut).rev().map(|n| f64::from(chi.eval(n as i64).map_or(0, unit_sign)) * (-(n as f64) * y).exp()).sum();
    let x = (-y).exp();
    // (e^{3y} - e^y) / sum_{k<5} e^{ky} = (x - x^3) / (1 + x + x^2 + x^3 + x^4)
    let rhs = (x - x.powi(3)) / (1.0 + x + x * x + x.powi(3) + x.powi(4));
    Ok((lhs - rhs).abs())
}

fn unit_sign(u: Unit4) -> i32 {
    match u {
        Unit4::ONE => 1,
        Unit4::MINUS_ONE => -1,
        _ => panic!("character is not real"),
    }
}

fn upper_half_plane(tau: Complex64) -> Result<()> {
    if tau.im > 0.0 && tau.re.is_finite() && tau.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NotUpperHalfPlane(format!("{tau}")))
    }
}

/// Smallest n with `pi n^2 Im(tau) > 40`.
pub fn theta_cutoff(tau: Complex64) -> usize {
    let n = (40.0 / (PI * tau.im)).sqrt().floor() as usize + 1;
    n.max(1)
}

/// `sum_{1 <= n <= n_cut} chi(n) n^eps e^{pi i n^2 tau}`, eps the parity.
pub fn theta_eval(chi: &DirichletChar, tau: Complex64, n_cut: Option<usize>) -> Result<Complex64> {
    upper_half_plane(tau)?;
    let n_cut = n_cut.unwrap_or_else(|| theta_cutoff(tau));
    let eps = chi.parity() as i32;
    let i_pi_tau = Complex64::new(0.0, PI) * tau;
    Ok((1..=n_cut)
        .rev()
        .map(|n| {
            let nf = n as f64;
            chi.eval_complex(n as i64) * nf.powi(eps) * (i_pi_tau * nf * nf).exp()
        })
        .sum())
}

/// `theta_{conj chi}(-1/(N^2 tau)) / (N^{eps+1/2} tau^{eps+1/2} theta_chi(tau))`.
pub fn theta_functional_ratio(chi: &DirichletChar, tau: Complex64) -> Result<Complex64> {
    upper_half_plane(tau)?;
    if !chi.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let n = chi.modulus() as f64;
    let e = f64::from(chi.parity()) + 0.5;
    let denom_theta = theta_eval(chi, tau, None)?;
    if denom_theta.norm() < 1e-250 {
        return Err(Error::ThetaVanishes(format!("{tau}")));
    }
    let dual = -(tau * n * n).inv();
    let num = theta_eval(&chi.conj(), dual, None)?;
    Ok(num / (n.powf(e) * tau.powf(e) * denom_theta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusClass {
    Split,
    Inert,
    Ramified,
}

impl FrobeniusClass {
    pub fn sign(self) -> i8 {
        match self {
            FrobeniusClass::Split => 1,
            FrobeniusClass::Inert => -1,
            FrobeniusClass::Ramified => 0,
        }
    }
}

/// x^2 + x - 1 over F_p.
pub fn golden_quadratic(p: u64) -> Result<FFPoly> {
    Ok(FFPoly::from_i64s(FiniteField::prime(p)?, &[-1, 1, 1]))
}

/// Splitting type of x^2 + x - 1 mod p.
pub fn quadratic_frobenius(p: u64) -> Result<FrobeniusClass> {
    let f = golden_quadratic(p)?;
    if !is_squarefree(&f)? {
        return Ok(FrobeniusClass::Ramified);
    }
    Ok(if degree_pattern(&f)? == [1, 1] { FrobeniusClass::Split } else { FrobeniusClass::Inert })
}

/// Monic irreducible factors of x^2 + x - 1 mod p, with multiplicity and
/// sorted by their constant terms.
pub fn golden_factorization(p: u64) -> Result<Vec<FFPoly>> {
    let f = golden_quadratic(p)?;
    let field = f.field();
    let roots = f.roots();
    let linear = |r: &crate::ring::FFElem| FFPoly::new(field, vec![-*r, field.one()]);
    let mut out = match roots.len() {
        0 => vec![f],
        1 => vec![linear(&roots[0]), linear(&roots[0])],
        _ => roots.iter().map(linear).collect(),
    };
    out.sort_by_key(|g| field.index(g.coeff(0)));
    Ok(out)
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // sum_{j<=m} C(m+1, j) B_j = 0
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `B_k(x)`.
pub fn bernoulli_poly(k: usize, x: &BigRational) -> BigRational {
    let b = bernoulli_numbers(k);
    let mut binom = BigInt::one();
    let mut acc = BigRational::zero();
    for (j, bj) in b.iter().enumerate() {
        acc += BigRational::from_integer(binom.clone()) * bj * pow_rat(x, k - j);
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}

fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// `B_{k,chi} = N^{k-1} sum_{a=1}^{N} chi(a) B_k(a/N)`, exactly.
pub fn gen_bernoulli(k: usize, chi: &DirichletChar) -> CycloQuadElem {
    let n = chi.modulus();
    let nn = BigRational::from_integer(BigInt::from(n));
    let mut acc = CycloQuadElem::zero();
    for a in 1..=n {
        let v = chi.eval_exact(a as i64);
        if v.is_zero() {
            continue;
        }
        let x = BigRational::new(BigInt::from(a), BigInt::from(n));
        acc = acc + v.scale(&bernoulli_poly(k, &x));
    }
    acc.scale(&pow_rat(&nn, k.saturating_sub(1)))
}

/// `L(chi, 1 - k) = -B_{k,chi} / k`.
pub fn l_value_at_negative(k: usize, chi: &DirichletChar) -> CycloQuadElem {
    gen_bernoulli(k, chi).scale(&BigRational::new(BigInt::from(-1), BigInt::from(k)))
}

/// Coefficients in Z/5^M of the Eisenstein series
/// `1 + sum a_n q^n`, `a_n = 2 sum_{d | n} psi(d) d^{k-1} / L(psi, 1 - k)`
/// with `psi = omega^-w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinSeries {
    pub ell: u64,
    pub weight: u32,
    pub w: i64,
    pub precision: u32,
    pub modulus: u64,
    /// Image of i in Z/5^M.
    pub i_image: u64,
    /// `2 / L(psi, 1 - k)` as an exact element of Q(i).
    pub leading: CycloQuadElem,
    pub coeffs: Vec<u64>,
}

impl EisensteinSeries {
    /// True when every coefficient past the constant vanishes mod 5.
    pub fn is_one_mod_ell(&self) -> bool {
        self.coeffs[0] % self.ell == 1 && self.coeffs[1..].iter().all(|a| a % self.ell == 0)
    }
}

/// Embedding of Q(i) into Z/5^M: `i_sign = +1` sends i to the square root
/// of -1 that is 2 mod 5 and uses `omega(2) = i`; `-1` sends i to the other
/// root and uses the conjugate character, so the 5-adic series agree.
pub fn eisenstein_coeffs(w: i64, k: u32, precision: u32, n_max: usize, i_sign: i8) -> Result<EisensteinSeries> {
    if precision == 0 {
        return Err(Error::Precision("precision must be at least 1".into()));
    }
    let modulus = 5u64.checked_pow(precision).filter(|&m| m < 1 << 40).ok_or_else(|| {
        Error::Precision(format!("5^{precision} is too large"))
    })?;
    debug_assert!(is_power_of_five(modulus));
    let root = sqrt_minus_one(modulus);
    let (omega, i_image) = if i_sign >= 0 {
        (DirichletChar::omega5(), root)
    } else {
        (DirichletChar::omega5().conj(), modulus - root)
    };
    let psi = omega.pow(-w);
    let l = l_value_at_negative(k as usize, &psi);
    let leading = (&CycloQuadElem::from(2) * &l.inverse().ok_or(Error::ZeroLValue)?).clone();
    let c = reduce_gaussian(&leading, modulus, i_image)
        .map_err(|_| Error::Precision(format!("2/L = {leading} is not 5-integral")))?;

    // psi(d) in Z/5^M is the Teichmueller lift to the power -w
    let psi_mod = |d: u64| -> u64 {
        let t = teichmuller(d as i64, modulus);
        if t == 0 {
            return 0;
        }
        let e = (-w).rem_euclid(4) as u64;
        pow_mod(t, e, modulus)
    };
    let mut coeffs = vec![0u64; n_max + 1];
    coeffs[0] = 1 % modulus;
    let mut sums = vec![0u64; n_max + 1];
    for d in 1..=n_max {
        let term = mul_mod(psi_mod(d as u64), pow_mod(d as u64, u64::from(k - 1), modulus), modulus);
        if term == 0 {
            continue;
        }
        for m in (d..=n_max).step_by(d) {
            sums[m] = (sums[m] + term) % modulus;
        }
    }
    for n in 1..=n_max {
        coeffs[n] = mul_mod(c, sums[n], modulus);
    }
    Ok(EisensteinSeries { ell: 5, weight: k, w, precision, modulus, i_image, leading, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quad::frac;
    use proptest::prelude::*;

    fn c(re: BigRational, im: BigRational) -> CycloQuadElem {
        CycloQuadElem::new(re, im, BigRational::zero(), BigRational::zero())
    }

    #[test]
    fn evaluation_examples() {
        let l5 = DirichletChar::legendre5();
        assert_eq!(l5.eval(4), Some(Unit4::ONE));
        assert_eq!(l5.eval(10), None);
        assert_eq!(l5.eval(-1), Some(Unit4::ONE));
        for chi in [l5.clone(), DirichletChar::omega5(), DirichletChar::trivial(1), DirichletChar::trivial(12)] {
            assert_eq!(chi.eval(1), Some(Unit4::ONE));
        }
        assert_eq!(DirichletChar::omega5().pow(2), l5);
        assert!(DirichletChar::from_table(5, vec![None, Some(Unit4::ONE), Some(Unit4::I), Some(Unit4::I), Some(Unit4::MINUS_ONE)]).is_err());
        assert!(DirichletChar::from_table(4, vec![None, Some(Unit4::ONE), None, Some(Unit4::MINUS_ONE)]).is_ok());
        assert!(l5.is_primitive() && !DirichletChar::trivial(5).is_primitive());
        assert_eq!(DirichletChar::trivial(5).conductor(), 1);
    }

    #[test]
    fn partial_sums() {
        let one = Complex64::new(1.0, 0.0);
        let s2 = Complex64::new(2.0, 0.0);
        let z = l_partial_sum(&DirichletChar::trivial(1), s2, 1_000_000);
        assert!((z.re - PI * PI / 6.0).abs() < 1e-5);
        assert_eq!(l_partial_sum(&DirichletChar::omega5(), Complex64::new(0.3, 7.0), 1), one);
        assert_eq!(euler_partial_product(&DirichletChar::legendre5(), s2, 1), one);
        let l5 = DirichletChar::legendre5();
        let s3 = Complex64::new(3.0, 0.0);
        let d = l_partial_sum(&l5, s3, 100_000) - euler_partial_product(&l5, s3, 1000);
        assert!(d.norm() < 1e-6);
        let s = Complex64::new(2.0, 1.0);
        for chi in [DirichletChar::trivial(1), l5] {
            let d = l_partial_sum(&chi, s, 200_000) - euler_partial_product(&chi, s, 20_000);
            assert!(d.norm() < 10.0 * 2.0 / 20_000.0, "{d}");
        }
    }

    #[test]
    fn theta_identity() {
        assert!(theta_sum_identity_residual(1.0).unwrap() < 1e-9);
        assert!(theta_sum_identity_residual(10.0).unwrap() < 1e-12);
        assert!(theta_sum_identity_residual(0.0).is_err());
        assert!(theta_sum_identity_residual(-1.0).is_err());
    }

    #[test]
    fn theta_values() {
        let l5 = DirichletChar::legendre5();
        let big = theta_eval(&l5, Complex64::new(0.0, 8.0), None).unwrap();
        assert!((big.re / (-8.0 * PI).exp() - 1.0).abs() < 1e-9);
        assert!(theta_eval(&l5, Complex64::new(0.0, -1.0), None).is_err());
        // 30-digit reference value at tau = i
        let v = theta_eval(&l5, Complex64::new(0.0, 1.0), None).unwrap();
        assert!((v.re - 0.043_210_430_920_890_49).abs() < 1e-15, "{}", v.re);
        assert!(v.im.abs() < 1e-300);
    }

    #[test]
    fn theta_ratio() {
        let l5 = DirichletChar::legendre5();
        let r1 = theta_functional_ratio(&l5, Complex64::new(0.0, 1.0)).unwrap();
        let r2 = theta_functional_ratio(&l5, Complex64::new(0.5, 1.0)).unwrap();
        assert!((r1.norm() - 1.0).abs() < 1e-6);
        assert!((r1 - r2).norm() < 1e-6);
        // at the fixed point of tau -> -1/tau the ratio is 1/sqrt(i)
        let t = theta_functional_ratio(&DirichletChar::trivial(1), Complex64::new(0.0, 1.0)).unwrap();
        assert!((t.norm() - 1.0).abs() < 1e-12);
        assert!((t - Complex64::from_polar(1.0, -PI / 4.0)).norm() < 1e-12);
        assert_eq!(theta_functional_ratio(&DirichletChar::trivial(5), Complex64::new(0.0, 1.0)), Err(Error::NotPrimitive));
        // odd primitive character mod 5 uses eps = 1
        let r = theta_functional_ratio(&DirichletChar::omega5(), Complex64::new(0.1, 0.7)).unwrap();
        let s = theta_functional_ratio(&DirichletChar::omega5(), Complex64::new(-0.3, 1.3)).unwrap();
        assert!((r.norm() - 1.0).abs() < 1e-9 && (r - s).norm() < 1e-9);
    }

    #[test]
    fn frobenius_classes() {
        assert_eq!(quadratic_frobenius(11), Ok(FrobeniusClass::Split));
        assert_eq!(quadratic_frobenius(2), Ok(FrobeniusClass::Inert));
        assert_eq!(quadratic_frobenius(5), Ok(FrobeniusClass::Ramified));
        assert_eq!(quadratic_frobenius(9), Err(Error::NotPrime(9)));
        for p in primes_up_to(2000) {
            assert_eq!(quadratic_frobenius(p).unwrap().sign(), crate::ring::legendre_5(p as i64));
        }
    }

    #[test]
    fn golden_factors() {
        let lin = |p: u64, c: i64| FFPoly::from_i64s(FiniteField::prime(p).unwrap(), &[c, 1]);
        assert_eq!(golden_factorization(5).unwrap(), vec![lin(5, 3), lin(5, 3)]);
        assert_eq!(golden_factorization(11).unwrap(), vec![lin(11, 4), lin(11, 8)]);
        let f7 = FFPoly::from_i64s(FiniteField::prime(7).unwrap(), &[6, 1, 1]);
        assert_eq!(golden_factorization(7).unwrap(), vec![f7]);
    }

    #[test]
    fn bernoulli() {
        let b = bernoulli_numbers(6);
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[5], BigRational::zero());
        assert_eq!(gen_bernoulli(2, &DirichletChar::trivial(1)), CycloQuadElem::from(QuadElemRat::r(1, 6)));
        assert!(gen_bernoulli(1, &DirichletChar::legendre5()).is_zero());
        let omega = DirichletChar::omega5();
        assert_eq!(gen_bernoulli(1, &omega), c(frac(-3, 5), frac(-1, 5)));
        assert_eq!(gen_bernoulli(3, &omega.pow(-3)), c(frac(12, 5), frac(6, 5)));
        assert_eq!(gen_bernoulli(2, &DirichletChar::trivial(5)), CycloQuadElem::from(QuadElemRat::r(-2, 3)));
        assert_eq!(gen_bernoulli(2, &omega.pow(2)), CycloQuadElem::from(QuadElemRat::r(4, 5)));
        assert_eq!(gen_bernoulli(4, &omega.pow(2)), CycloQuadElem::from(-8));
    }

    struct QuadElemRat;
    impl QuadElemRat {
        fn r(n: i64, d: i64) -> crate::ring::QuadElem {
            crate::ring::QuadElem::from_rational(frac(n, d))
        }
    }

    #[test]
    fn eisenstein_weight_three() {
        let e = eisenstein_coeffs(3, 3, 3, 200, 1).unwrap();
        assert_eq!(e.modulus, 125);
        assert_eq!(e.i_image, 57);
        assert_eq!(e.coeffs[0], 1);
        assert_eq!(e.leading, CycloQuadElem::from_ints(-2, 1, 0, 0));
        assert_eq!(e.coeffs[1], reduce_gaussian(&e.leading, 125, 57).unwrap());
        assert!(e.is_one_mod_ell());
        let other = eisenstein_coeffs(3, 3, 3, 200, -1).unwrap();
        assert_eq!(other.coeffs, e.coeffs);
        assert_eq!(other.i_image, 68);
        // parity mismatch makes the Bernoulli number vanish
        assert_eq!(eisenstein_coeffs(3, 2, 3, 10, 1), Err(Error::ZeroLValue));
    }

    proptest! {
        #[test]
        fn characters_are_multiplicative_and_periodic(m in -500i64..500, n in -500i64..500) {
            for chi in [DirichletChar::legendre5(), DirichletChar::omega5(), DirichletChar::omega5().pow(3), DirichletChar::trivial(12)] {
                let prod = match (chi.eval(m), chi.eval(n)) {
                    (Some(a), Some(b)) => Some(a * b),
                    _ => None,
                };
                prop_assert_eq!(chi.eval(m * n), prod);
                prop_assert_eq!(chi.eval(m + chi.modulus() as i64), chi.eval(m));
            }
        }

        #[test]
        fn theta_identity_on_random_y(y in 0.05f64..30.0) {
            prop_assert!(theta_sum_identity_residual(y).unwrap() < 1e-9);
        }
    }
}
