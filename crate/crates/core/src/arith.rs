//! Integer helpers shared by the bound computations.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime_at_least(n: u64) -> u64 {
    let mut k = n.max(2);
    while !is_prime(k) {
        k += 1;
    }
    k
}

/// Largest `k` with `base^k <= x`. Requires `x >= 1` and `base >= 2`.
pub fn floor_log(base: u64, x: u64) -> u32 {
    debug_assert!(x >= 1 && base >= 2);
    let mut k = 0;
    let mut acc = base as u128;
    while acc <= x as u128 {
        k += 1;
        acc *= base as u128;
    }
    k
}

/// `sum_{i=0}^{d} z^i`, exact.
///
/// This is `(z^{d+1} - 1)/(z - 1)` when `z >= 2`; the sum is evaluated
/// directly for `z = 0` (giving 1) and `z = 1` (giving `d + 1`).
pub fn geometric_sum(z: &BigUint, d: u64) -> BigUint {
    if z.is_zero() {
        return BigUint::one();
    }
    if z.is_one() {
        return BigUint::from(d) + 1u32;
    }
    let exp = u32::try_from(d + 1).expect("exponent fits in u32");
    let num = z.pow(exp) - 1u32;
    let den = z - 1u32;
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `ceil(x / 2)`.
pub fn half_ceil(x: &BigUint) -> BigUint {
    (x + 1u32) >> 1
}

/// Base-2 logarithm of a positive big integer, from its top 64 bits.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap() as f64;
    top.log2() + shift as f64
}

/// `floor((num/den) * (1 + log_p(c)))` for `c >= 1`, `p >= 2`.
///
/// A floating-point estimate is accepted when it is more than `1e-6` away
/// from an integer; otherwise the neighbouring candidates are decided with
/// an exact big-integer comparison (`k <= y` iff `p^(den*k - num) <= c^num`).
pub fn floor_scaled_log(num: u64, den: u64, p: u64, c: u64) -> u64 {
    assert!(den > 0 && p >= 2 && c >= 1);
    let y = num as f64 / den as f64 * (1.0 + (c as f64).ln() / (p as f64).ln());
    let k = y.floor();
    let frac = y - k;
    if frac > 1e-6 && frac < 1.0 - 1e-6 {
        return k as u64;
    }
    let le = |k: u64| -> bool {
        let lhs_exp = (den as u128 * k as u128) as i128 - num as i128;
        if lhs_exp <= 0 {
            return true;
        }
        let lhs = BigUint::from(p).pow(lhs_exp as u32);
        let rhs = BigUint::from(c).pow(num as u32);
        lhs <= rhs
    };
    let mut k = (k as u64).saturating_sub(1);
    while le(k + 1) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
        assert_eq!(next_prime_at_least(30), 31);
        assert_eq!(next_prime_at_least(12), 13);
        assert_eq!(next_prime_at_least(0), 2);
    }

    #[test]
    fn floor_logs() {
        assert_eq!(floor_log(2, 1), 0);
        assert_eq!(floor_log(2, 8), 3);
        assert_eq!(floor_log(2, 7), 2);
        assert_eq!(floor_log(3, 26), 2);
        assert_eq!(floor_log(3, 27), 3);
    }

    #[test]
    fn geometric_sums() {
        assert_eq!(geometric_sum(&BigUint::from(0u32), 5), BigUint::from(1u32));
        assert_eq!(geometric_sum(&BigUint::from(1u32), 5), BigUint::from(6u32));
        assert_eq!(geometric_sum(&BigUint::from(6u32), 2), BigUint::from(43u32));
        assert_eq!(geometric_sum(&BigUint::from(9u32), 4), BigUint::from(7381u32));
        // brute force
        for z in 0u32..7 {
            for d in 0u64..9 {
                let mut s = BigUint::zero();
                for i in 0..=d {
                    s += BigUint::from(z).pow(i as u32);
                }
                assert_eq!(geometric_sum(&BigUint::from(z), d), s);
            }
        }
    }

    #[test]
    fn log2_of_big() {
        assert_eq!(log2_big(&BigUint::from(1024u32)), 10.0);
        let x = BigUint::from(3u32).pow(500);
        let expect = 500.0 * 3f64.log2();
        assert!((log2_big(&x) - expect).abs() < 1e-9);
    }

    #[test]
    fn scaled_log_exact_on_integers() {
        // (27/6)(1 + log_2 2) = 9 exactly
        assert_eq!(floor_scaled_log(27, 6, 2, 2), 9);
        // (8/6)(1 + log_2 1) = 4/3
        assert_eq!(floor_scaled_log(8, 6, 2, 1), 1);
        // (6/6)(1 + log_2 4) = 3 exactly
        assert_eq!(floor_scaled_log(6, 6, 2, 4), 3);
        // (216/6)(1 + log_2 5) = 36 * 3.3219... = 119.59
        assert_eq!(floor_scaled_log(216, 6, 2, 5), 119);
        // (64/6)(1 + log_3 3) = 21.33
        assert_eq!(floor_scaled_log(64, 6, 3, 3), 21);
    }
}
