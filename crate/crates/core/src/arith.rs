//! Exact binomial-coefficient helpers over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1)/k! for any
/// integer n, as a polynomial in n. Exact; the division is always integral.
pub fn binomial_poly(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
    }
    num / factorial(k)
}

/// Combinatorial binomial coefficient: zero whenever n < k (including n < 0).
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    if n < &BigInt::from(k) {
        BigInt::zero()
    } else {
        binomial_poly(n, k)
    }
}

/// Combinatorial binomial over machine integers, exact via `BigInt`.
pub fn binomial_u64(n: u64, k: u32) -> BigInt {
    binomial(&BigInt::from(n), k)
}

pub fn factorial(k: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    f
}

/// Largest k with C(k, d) <= a, for a >= 1, d >= 1. Doubling plus binary search.
pub fn max_binomial_base(a: &BigInt, d: u32) -> BigInt {
    debug_assert!(a.is_positive() && d >= 1);
    let mut lo = BigInt::from(d);
    let mut hi = BigInt::from(d) + 1u32;
    while binomial(&hi, d) <= *a {
        lo = hi.clone();
        hi = hi.clone() * 2u32;
    }
    // invariant: C(lo, d) <= a < C(hi, d)
    while &lo + 1u32 < hi {
        let mid: BigInt = (&lo + &hi) / 2u32;
        if binomial(&mid, d) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_u64(5, 2), BigInt::from(10));
        assert_eq!(binomial_u64(4, 4), BigInt::from(1));
        assert_eq!(binomial_u64(3, 4), BigInt::from(0));
        // generalized at negative arguments: C(-1, 2) = 1, C(-2, 3) = -4
        assert_eq!(binomial_poly(&BigInt::from(-1), 2), BigInt::from(1));
        assert_eq!(binomial_poly(&BigInt::from(-2), 3), BigInt::from(-4));
        // combinatorial is zero there
        assert_eq!(binomial(&BigInt::from(-1), 2), BigInt::from(0));
    }

    #[test]
    fn max_base() {
        // C(4, 2) = 6 <= 9 < C(5, 2) = 10
        assert_eq!(max_binomial_base(&BigInt::from(9), 2), BigInt::from(4));
        assert_eq!(max_binomial_base(&BigInt::from(10), 2), BigInt::from(5));
        assert_eq!(max_binomial_base(&BigInt::from(1), 3), BigInt::from(3));
        assert_eq!(max_binomial_base(&BigInt::from(1_000_000), 1), BigInt::from(1_000_000));
    }
}
