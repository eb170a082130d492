//! Shifted Chebyshev polynomials of the first kind on `[0, 1]`:
//! `T_r(2x - 1)` in the classical normalization `T_r(1) = 1`, together
//! with their exact Bernstein coefficients at any representation degree.

use std::fmt::Write as _;

use crate::bernstein::bernstein_eval_uni_exact;
use crate::combin::{binom_rat, double_factorial, factorial};
use crate::error::Error;
use crate::exact::Rational;

/// `T_r(2x - 1)` by the three-term recurrence.
pub fn cheb_eval(r: u32, x: f64) -> f64 {
    let s = 2.0 * x - 1.0;
    let (mut prev, mut cur) = (1.0, s);
    match r {
        0 => 1.0,
        1 => s,
        _ => {
            for _ in 1..r {
                let next = 2.0 * s * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Exact `T_r(2x - 1)` at a rational abscissa.
pub fn cheb_eval_exact(r: u32, x: &Rational) -> Rational {
    let s = Rational::from(2i64) * x - Rational::one();
    let two_s = Rational::from(2i64) * &s;
    let (mut prev, mut cur) = (Rational::one(), s);
    match r {
        0 => Rational::one(),
        1 => cur,
        _ => {
            for _ in 1..r {
                let next = &two_s * &cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Bernstein coefficients of `T_r(2x - 1)` at representation degree `n >= r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebBernCoeffs {
    pub r: u32,
    pub n: u32,
    /// `values[i]` multiplies `B_i^n(x)`.
    pub values: Vec<Rational>,
}

/// The coefficient table `M_{i,r}^n`:
/// `M_{i,r}^n = C(n,i)^{-1} sum_k (-1)^(r-k) C(n-r, i-k) C(2r, 2k)`,
/// the sum running over all `k` thanks to the out-of-range-zero binomial.
pub fn m_coeffs(n: u32, r: u32) -> Result<ChebBernCoeffs, Error> {
    if r > n {
        return Err(Error::index(format!(
            "representation degree n={n} is below r={r}"
        )));
    }
    let values = (0..=n)
        .map(|i| {
            let mut acc = Rational::zero();
            for k in 0..=r.min(i) as i64 {
                let sign = if (r as i64 - k) % 2 == 0 { 1i64 } else { -1 };
                let term = binom_rat((n - r) as u64, i as i64 - k) * binom_rat(2 * r as u64, 2 * k);
                acc += &(Rational::from(sign) * term);
            }
            acc / binom_rat(n as u64, i as i64)
        })
        .collect();
    Ok(ChebBernCoeffs { n, r, values })
}

impl ChebBernCoeffs {
    /// Exact value of the represented polynomial at `x`.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.values
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, c)| {
                acc + c * &bernstein_eval_uni_exact(i as u32, self.n, x).expect("i <= n")
            })
    }

    /// Univariate degree elevation of the coefficient vector.
    pub fn elevate(&self) -> ChebBernCoeffs {
        let n = self.n as i64;
        let values = (0..=self.n + 1)
            .map(|i| {
                let i = i as i64;
                let mut acc = Rational::zero();
                if i > 0 {
                    acc += &(Rational::from(i) * &self.values[(i - 1) as usize]);
                }
                if i <= n {
                    acc += &(Rational::from(n + 1 - i) * &self.values[i as usize]);
                }
                acc / Rational::from(n + 1)
            })
            .collect();
        ChebBernCoeffs {
            r: self.r,
            n: self.n + 1,
            values,
        }
    }
}

/// Degree-`r` Bernstein coefficients of the closed-form expansion
/// `pref_r * sum_i (-1)^(r-i) i!(r-i)! / ((2i)!(2r-2i)!) B_i^r` with
/// `pref_r = r!(2r-1)!! C(2r,r)^2 / (2^(2r) (2r)!!)`, plus the scalar
/// `sigma_r` relating it to the canonical normalization:
/// `coeffs = sigma_r * M_{.,r}^r`. Empirically `sigma_r = (C(2r,r)/4^r)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebClosedForm {
    pub coeffs: Vec<Rational>,
    pub sigma: Rational,
}

pub fn cheb_bern_deg_r(r: u32) -> ChebClosedForm {
    let r64 = r as u64;
    let pref_num =
        factorial(r64) * double_factorial(2 * r as i64 - 1).expect("2r-1 >= -1") * binom_pow2(r64);
    let pref_den = num_bigint::BigInt::from(1u8) << (2 * r as usize);
    let pref = Rational::from_parts(pref_num, pref_den * double_factorial(2 * r as i64).unwrap())
        .expect("positive denominator");

    let coeffs: Vec<Rational> = (0..=r64)
        .map(|i| {
            let sign = if (r64 - i).is_multiple_of(2) {
                1i64
            } else {
                -1
            };
            let num = factorial(i) * factorial(r64 - i);
            let den = factorial(2 * i) * factorial(2 * (r64 - i));
            Rational::from(sign) * &pref * Rational::from_parts(num, den).unwrap()
        })
        .collect();

    // Fit the scalar against the canonical coefficients and check it
    // coefficient-wise; the two vectors are always proportional.
    let canonical = m_coeffs(r, r).expect("r <= r").values;
    let pivot = canonical
        .iter()
        .position(|c| !c.is_zero())
        .expect("T_r is nonzero");
    let sigma = coeffs[pivot]
        .checked_div(&canonical[pivot])
        .expect("nonzero pivot");
    for (a, b) in coeffs.iter().zip(canonical.iter()) {
        debug_assert_eq!(
            *a,
            &sigma * b,
            "closed form is not proportional to M at r={r}"
        );
    }
    ChebClosedForm { coeffs, sigma }
}

fn binom_pow2(r: u64) -> num_bigint::BigInt {
    let c = crate::combin::binom(2 * r, r as i64);
    &c * &c
}

/// CSV rows `(n, r, i, value)` of the full `M` table up to degree `n`.
pub fn m_table_csv(n: u32) -> Result<String, Error> {
    let mut out = String::from("n,r,i,value\n");
    for r in 0..=n {
        let table = m_coeffs(n, r)?;
        for (i, value) in table.values.iter().enumerate() {
            writeln!(out, "{n},{r},{i},{value}").expect("string write");
        }
    }
    Ok(out)
}
