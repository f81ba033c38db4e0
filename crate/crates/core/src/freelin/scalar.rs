//! Scalar arithmetic: arbitrary-precision rationals and small combinatorial
//! counting helpers. Every coefficient in the crate is a `Rational`; there
//! is deliberately no floating point anywhere.

use num_bigint::BigInt;
use num_traits::One;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
///
/// `num_rational::BigRational` maintains both normal forms on every
/// construction, which is exactly the canonical form we rely on for
/// structural equality of elements.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for the rational `p/1`.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// `1/n!` as a rational, the coefficient pattern of every exponential-type
/// series in the crate.
pub fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    // Multiplicative form with exact intermediate divisions.
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Multinomial coefficient `(p1 + .. + pr)! / (p1! .. pr!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut total = 0usize;
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}
