//! Machine-word number theory: primality, sieving, modular powers and
//! square roots, Kronecker symbols.

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut k = i * i;
            while k <= n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

/// Smallest-prime-factor table for `0..=n`; entries 0 and 1 are 0.
pub fn smallest_prime_factors(n: usize) -> Vec<usize> {
    let mut spf = vec![0usize; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut k = i;
            while k <= n {
                if spf[k] == 0 {
                    spf[k] = i;
                }
                k += i;
            }
        }
    }
    spf
}

/// Legendre symbol (a/p) for an odd prime p, as -1, 0 or 1.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (a/n) for n >= 1.
pub fn kronecker(a: i64, n: u64) -> i8 {
    assert!(n >= 1, "kronecker symbol needs n >= 1");
    let mut n = n;
    let mut result: i8 = 1;
    // factors of two in n
    while n % 2 == 0 {
        n /= 2;
        let r = a.rem_euclid(8);
        if r % 2 == 0 {
            return 0;
        }
        if r == 3 || r == 5 {
            result = -result;
        }
    }
    // Jacobi symbol (a/n) for odd n
    let mut a = a.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Square root of `a` modulo an odd prime `p` (Tonelli-Shanks).
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 1;
        let mut t2 = mul_mod(t, t, p);
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Smallest positive quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&a| legendre(a as i64, p) == -1)
        .expect("odd prime has a non-residue")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_matches_sieve() {
        let sieve = primes_up_to(5000);
        let by_test: Vec<u64> = (0..=5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, by_test);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn kronecker_agrees_with_euler_criterion() {
        for p in primes_up_to(300).into_iter().skip(1) {
            for a in -20i64..20 {
                assert_eq!(kronecker(a, p), legendre(a, p), "a={a} p={p}");
            }
        }
        assert_eq!(kronecker(-2, 9), 1);
        assert_eq!(kronecker(-1, 49), 1);
        assert_eq!(kronecker(3, 2), -1);
        assert_eq!(kronecker(1, 2), 1);
    }

    #[test]
    fn square_roots() {
        for p in primes_up_to(500).into_iter().skip(1) {
            for a in 0..p.min(60) {
                match sqrt_mod_prime(a, p) {
                    Some(r) => assert_eq!(mul_mod(r, r, p), a % p),
                    None => assert_eq!(legendre(a as i64, p), -1),
                }
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(2, 5), Some(3));
        assert_eq!(inv_mod(5, 125), None);
        assert_eq!(inv_mod(7, 125).map(|x| x * 7 % 125), Some(1));
    }
}
