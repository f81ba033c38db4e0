//! Counting polynomials attached to the pairing of a power word with its
//! own dual family: the coefficient numbers `A(n, k)`, the polynomials
//! `P_n(t)` they assemble into, the signed integral over `[-1, 0]` that
//! collapses them, and a generating-function cross-check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::freelin::{factorial, multinomial, rat_int, Rational};
use itertools::Itertools;

/// The number of chains `0 < j_1 < … < j_k < n` weighted by the
/// multinomial of their gap vector:
///
/// ```text
/// A(n, k) = Σ  n! / (j_1! (j_2-j_1)! … (n-j_k)!),    A(n, 0) = 1.
/// ```
///
/// Errors with [`Error::IndexOutOfRange`] unless `0 <= k < n`.
pub fn a_nk(n: usize, k: usize) -> Result<BigInt, Error> {
    if n == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, bound: n.saturating_sub(1) });
    }
    let mut total = BigInt::zero();
    for cuts in (1..n).combinations(k) {
        let mut parts = Vec::with_capacity(k + 1);
        let mut prev = 0;
        for j in cuts {
            parts.push(j - prev);
            prev = j;
        }
        parts.push(n - prev);
        total += multinomial(&parts);
    }
    Ok(total)
}

/// A polynomial in one variable `t` with rational coefficients, dense and
/// normalized (no trailing zero coefficients; the zero polynomial has no
/// coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Polynomial {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// The exact integral over `[-1, 0]`, i.e. `Σ_k c_k (-1)^k / (k+1)`.
    pub fn integral_neg_one_to_zero(&self) -> Rational {
        let mut total = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = c / rat_int(k as i64 + 1);
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}t", if unit_coeff { "" } else { " " })?,
                _ => write!(f, "{}t^{k}", if unit_coeff { "" } else { " " })?,
            }
        }
        Ok(())
    }
}

/// The counting polynomial `P_n(t) = Σ_k A(n, k) t^k`, computed through
/// the binomial recurrence
///
/// ```text
/// P_0 = 0,    P_n = 1 + t · Σ_{k=1}^{n-1} C(n, k) P_k.
/// ```
pub fn pn_polynomial(n: usize) -> Polynomial {
    let mut table: Vec<Polynomial> = Vec::with_capacity(n + 1);
    table.push(Polynomial::zero());
    for m in 1..=n {
        let mut sum = Polynomial::zero();
        for (k, p) in table.iter().enumerate().skip(1) {
            let c = Rational::from_integer(crate::freelin::binomial(m, k));
            sum = sum.add(&p.scale(&c));
        }
        table.push(Polynomial::from_coeffs(vec![Rational::one()]).add(&sum.shift(1)));
    }
    table.pop().expect("nonempty table")
}

/// `∫_{-1}^{0} P_n(t) dt`, exactly. Equals 1 for `n = 1` and vanishes for
/// every other `n`.
pub fn pn_integral(n: usize) -> Rational {
    pn_polynomial(n).integral_neg_one_to_zero()
}

/// Cross-checks the recurrence against the closed generating function
///
/// ```text
/// Σ_n P_n(t) z^n / n!  =  Σ_m t^m E(z)^{m+1},    E(z) = e^z - 1,
/// ```
///
/// comparing coefficients of `z^n` for all `n <= n_max`. Returns `true`
/// when every coefficient matches.
pub fn gf_coefficient_check(n_max: usize) -> bool {
    // A truncated series in z whose coefficients are polynomials in t.
    let zmul = |a: &[Polynomial], b: &[Polynomial]| -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); n_max + 1];
        for (i, p) in a.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in b.iter().enumerate() {
                if i + j > n_max {
                    break;
                }
                out[i + j] = out[i + j].add(&p.mul(q));
            }
        }
        out
    };

    let e: Vec<Polynomial> = (0..=n_max)
        .map(|m| {
            if m == 0 {
                Polynomial::zero()
            } else {
                Polynomial::from_coeffs(vec![crate::freelin::inv_factorial(m)])
            }
        })
        .collect();

    let mut g = vec![Polynomial::zero(); n_max + 1];
    let mut e_power = e.clone();
    for m in 0..n_max.max(1) {
        for (n, p) in e_power.iter().enumerate() {
            g[n] = g[n].add(&p.shift(m));
        }
        if m + 1 < n_max {
            e_power = zmul(&e_power, &e);
        }
    }

    (0..=n_max).all(|n| {
        let scaled = g[n].scale(&Rational::from_integer(factorial(n)));
        scaled == pn_polynomial(n)
    })
}
