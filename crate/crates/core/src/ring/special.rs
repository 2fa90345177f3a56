//! The prime (2 - i, sqrt5) of Q(i, sqrt5) and 5-adic helpers.
//!
//! The residue field is Z/5 with `i -> 2` and `sqrt5 -> 0`. For 5-adic
//! work we also need Z/5^M, where `i` goes to the square root of -1
//! congruent to 2 and `sqrt5` has no image.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::cyclo::CycloQuadElem;
use crate::arith::{inv_mod, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// Character (5/n): +1 for n = 1, 4 mod 5, -1 for n = 2, 3, 0 for 5 | n.
pub fn legendre_5(n: i64) -> i8 {
    match n.rem_euclid(5) {
        0 => 0,
        1 | 4 => 1,
        _ => -1,
    }
}

fn rat_mod(r: &BigRational, m: u64) -> Option<u64> {
    let mb = BigInt::from(m);
    let reduce = |n: &BigInt| (((n % &mb) + &mb) % &mb).to_u64().unwrap();
    let d = inv_mod(reduce(r.denom()), m)?;
    Some(mul_mod(reduce(r.numer()), d, m))
}

/// Image of `x` in Z/5 under `i -> 2`, `sqrt5 -> 0`.
pub fn reduce_mod_special_ideal(x: &CycloQuadElem) -> Result<u8> {
    let [c0, c1, _, _] = x.coords();
    // the sqrt5-coordinates may carry a 1/2 (golden ratio), but never a 1/5
    for c in x.coords() {
        if (c.denom() % BigInt::from(5u8)).is_zero() {
            return Err(Error::NotIntegralAt { value: x.to_string(), p: 5 });
        }
    }
    let a = rat_mod(&c0, 5).unwrap();
    let b = rat_mod(&c1, 5).unwrap();
    Ok(((a + 2 * b) % 5) as u8)
}

/// Square root of -1 in Z/`modulus` congruent to 2 mod 5 (`modulus` a
/// power of 5), by Hensel lifting.
pub fn sqrt_minus_one(modulus: u64) -> u64 {
    assert!(modulus >= 5 && is_power_of_five(modulus), "modulus must be a power of 5");
    let mut r = 2u64;
    let mut m = 5u64;
    while m < modulus {
        m = (m * 5).min(modulus);
        // r <- r - (r^2 + 1) / (2 r)
        let f = (mul_mod(r, r, m) + 1) % m;
        let d = inv_mod(2 * r % m, m).expect("2r is a unit");
        r = (r + m - mul_mod(f, d, m)) % m;
    }
    r % modulus
}

/// Teichmueller lift: the unique (p-1)-th root of unity in Z/`modulus`
/// congruent to `d` mod 5, or 0 when 5 divides `d`.
pub fn teichmuller(d: i64, modulus: u64) -> u64 {
    let d = d.rem_euclid(modulus as i64) as u64;
    if d % 5 == 0 {
        return 0;
    }
    // d^(5^(M-1)) converges to the lift; iterate x -> x^5 until stable
    let mut x = d;
    loop {
        let next = pow_mod(x, 5, modulus);
        if next == x {
            return x;
        }
        x = next;
    }
}

pub(crate) fn is_power_of_five(mut m: u64) -> bool {
    if m == 0 {
        return false;
    }
    while m % 5 == 0 {
        m /= 5;
    }
    m == 1
}

/// Image of an element of Z[i] (localized away from 5) in Z/`modulus`,
/// sending `i` to `i_image`. Elements with a sqrt5 component have no image.
pub fn reduce_gaussian(x: &CycloQuadElem, modulus: u64, i_image: u64) -> Result<u64> {
    let [c0, c1, c2, c3] = x.coords();
    if !c2.is_zero() || !c3.is_zero() {
        return Err(Error::Precision(format!("{x} is not in Q(i)")));
    }
    let bad = || Error::NotIntegralAt { value: x.to_string(), p: 5 };
    let a = rat_mod(&c0, modulus).ok_or_else(bad)?;
    let b = rat_mod(&c1, modulus).ok_or_else(bad)?;
    Ok((a + mul_mod(b, i_image, modulus)) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quad::QuadElem;
    use proptest::prelude::*;

    fn arb_integral() -> impl Strategy<Value = CycloQuadElem> {
        // integral combinations of 1, i, phi, i*phi
        (-30i64..30, -30i64..30, -30i64..30, -30i64..30).prop_map(|(a, b, c, d)| {
            let phi = CycloQuadElem::from(QuadElem::from_frac(1, 1, 2));
            let ia = &CycloQuadElem::i() * &phi;
            CycloQuadElem::from_ints(a, b, 0, 0) + &phi * &CycloQuadElem::from(c) + &ia * &CycloQuadElem::from(d)
        })
    }

    #[test]
    fn examples() {
        assert_eq!(reduce_mod_special_ideal(&CycloQuadElem::i()).unwrap(), 2);
        assert_eq!(reduce_mod_special_ideal(&CycloQuadElem::sqrt5()).unwrap(), 0);
        let unit = CycloQuadElem::from(QuadElem::from_frac(-1, 1, 2));
        assert_eq!(reduce_mod_special_ideal(&unit).unwrap(), 2);
        let fifth = CycloQuadElem::from(QuadElem::from_frac(1, 0, 5));
        assert!(reduce_mod_special_ideal(&fifth).is_err());
        assert_eq!(reduce_mod_special_ideal(&CycloQuadElem::from_ints(2, -1, 0, 0)).unwrap(), 0);
    }

    #[test]
    fn legendre_5_examples() {
        assert_eq!(legendre_5(11), 1);
        assert_eq!(legendre_5(7), -1);
        assert_eq!(legendre_5(10), 0);
        assert_eq!(legendre_5(-1), 1);
    }

    #[test]
    fn five_adic_roots() {
        for m in [5u64, 25, 125, 625, 5u64.pow(10)] {
            let r = sqrt_minus_one(m);
            assert_eq!((mul_mod(r, r, m) + 1) % m, 0, "modulus {m}");
            assert_eq!(r % 5, 2);
        }
        assert_eq!(sqrt_minus_one(125), 57);
        for d in 1..5 {
            let t = teichmuller(d, 125);
            assert_eq!(pow_mod(t, 4, 125), 1);
            assert_eq!(t % 5, d as u64);
        }
        assert_eq!(teichmuller(2, 125), 57);
        assert_eq!(teichmuller(10, 125), 0);
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_map(x in arb_integral(), y in arb_integral()) {
            let r = |z: &CycloQuadElem| u32::from(reduce_mod_special_ideal(z).unwrap());
            prop_assert_eq!(r(&(&x + &y)), (r(&x) + r(&y)) % 5);
            prop_assert_eq!(r(&(&x * &y)), (r(&x) * r(&y)) % 5);
            let two_minus_i = CycloQuadElem::from_ints(2, -1, 0, 0);
            prop_assert_eq!(r(&(&x * &two_minus_i)), 0);
            prop_assert_eq!(r(&(&x * &CycloQuadElem::sqrt5())), 0);
        }

        #[test]
        fn gaussian_reduction_is_a_ring_map(a in -99i64..99, b in -99i64..99, c in -99i64..99, d in -99i64..99) {
            let m = 125;
            let i = sqrt_minus_one(m);
            let x = CycloQuadElem::from_ints(a, b, 0, 0);
            let y = CycloQuadElem::from_ints(c, d, 0, 0);
            let r = |z: &CycloQuadElem| reduce_gaussian(z, m, i).unwrap();
            prop_assert_eq!(r(&(&x * &y)), mul_mod(r(&x), r(&y), m));
            prop_assert_eq!(r(&x) % 5, u64::from(reduce_mod_special_ideal(&x).unwrap()));
        }
    }
}
