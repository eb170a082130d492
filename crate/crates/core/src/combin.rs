//! Factorials, double factorials, half-integer factorials and binomial
//! coefficients, all exact.
//!
//! The half-integer factorial `(n - 1/2)! = n!(2n-1)!! sqrt(pi) / (2n)!!`
//! carries a single power of `sqrt(pi)`; ratios of two of them are plain
//! rationals, and products of two of them are rational multiples of `pi`.
//! [`HalfFactorial`] tracks that power so cancellation is enforced by the
//! types rather than by convention.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::Rational;

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// `n!!` for `n >= -1`, with `0!! = (-1)!! = 1`.
///
/// Even `n`: `2^(n/2) (n/2)!`; odd `n`: `n! / (2^((n-1)/2) ((n-1)/2)!)`.
pub fn double_factorial(n: i64) -> Result<BigInt, Error> {
    if n < -1 {
        return Err(Error::domain(format!(
            "double factorial needs n >= -1, got {n}"
        )));
    }
    if n <= 0 {
        return Ok(BigInt::one());
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// `(n - 1/2)!` as `coeff * pi^(sqrt_pi_power / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfFactorial {
    pub coeff: Rational,
    /// Power of `sqrt(pi)`; always 1 for `(n - 1/2)!` itself.
    pub sqrt_pi_power: u8,
}

/// `(n - 1/2)! = n!(2n-1)!! sqrt(pi) / (2n)!!` for integer `n >= 0`.
pub fn half_factorial(n: u64) -> HalfFactorial {
    let num = factorial(n) * double_factorial(2 * n as i64 - 1).expect("2n-1 >= -1");
    let den = double_factorial(2 * n as i64).expect("2n >= 0");
    HalfFactorial {
        coeff: Rational::from_parts(num, den).expect("double factorial is positive"),
        sqrt_pi_power: 1,
    }
}

/// `C(n, k)`, with the out-of-range convention `C(n, k) = 0` for `k < 0`
/// or `k > n` so summation limits can stay unguarded.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binom_rat(n: u64, k: i64) -> Rational {
    Rational::from_bigint(binom(n, k))
}

/// Half-integer binomial `C(n - 1/2, m) = (n-1/2)! / (m! (n-m-1/2)!)`
/// for `0 <= m <= n`. The `sqrt(pi)` factors cancel, so the value is rational.
pub fn half_binom(n: u64, m: u64) -> Result<Rational, Error> {
    if m > n {
        return Err(Error::index(format!(
            "half binomial needs m <= n, got n={n} m={m}"
        )));
    }
    let top = half_factorial(n);
    let bottom = half_factorial(n - m);
    debug_assert_eq!(top.sqrt_pi_power, bottom.sqrt_pi_power);
    let den = Rational::from_bigint(factorial(m)) * bottom.coeff;
    top.coeff.checked_div(&den)
}

/// Checks `C(n-1/2, n-k) C(n-1/2, k) = 2^(-2n) C(2n, n) C(2n, 2k)` exactly.
pub fn check_half_binomial_identity(n: u64, k: u64) -> Result<bool, Error> {
    if k > n {
        return Err(Error::index(format!("need 0 <= k <= n, got n={n} k={k}")));
    }
    let lhs = half_binom(n, n - k)? * half_binom(n, k)?;
    let pow4n = Rational::from_bigint(BigInt::one() << (2 * n as usize));
    let rhs = binom_rat(2 * n, n as i64) * binom_rat(2 * n, 2 * k as i64) / pow4n;
    Ok(lhs == rhs)
}
