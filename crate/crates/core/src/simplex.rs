//! The degree-ordered orthogonal family on the triangle.
//!
//! For `0 <= r <= n` the member `T_{n,r}` factors as
//! `T_r(u/(1-w)) (1-w)^r Q_{n,r}(w)` where `T_r` is the shifted Chebyshev
//! polynomial and `Q_{n,r}` carries the `w`-dependence. Its Bernstein
//! coefficients have the closed form
//! `a_{ijk} = (-1)^k C(n+r+1,k) C(n-r,k) / C(n,k) * M_{i,r}^{n-k}`
//! (zero for `k > n-r`), and equivalently follow from the seed row
//! `a_{i,n-i,0} = M_{i,r}^n` via the layer recursion
//! `(i+1)a_{i+1,j,k} + (j+1)a_{i,j+1,k} + (k+1)a_{i,j,k+1} = 0`.

use crate::bernstein::{
    bernstein_eval_uni, bernstein_eval_uni_exact, BBPoly, BaryPoint, RatPoint, TriIndex,
};
use crate::chebyshev::{cheb_eval, cheb_eval_exact, m_coeffs};
use crate::combin::binom_rat;
use crate::error::Error;
use crate::exact::Rational;

/// The univariate factor `Q_{n,r}(w) = sum_j (-1)^j C(n+r+1, j) B_j^{n-r}(w)`,
/// whose moments against `w^i (1-w)^(2r+1)` vanish for `i <= n-r-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub n: u32,
    pub r: u32,
    /// Bernstein coefficients of degree `n - r`.
    pub bern_coeffs: Vec<Rational>,
}

pub fn q_poly(n: u32, r: u32) -> Result<QPoly, Error> {
    if r > n {
        return Err(Error::index(format!(
            "Q_{{n,r}} needs r <= n, got n={n} r={r}"
        )));
    }
    let bern_coeffs = (0..=(n - r) as i64)
        .map(|j| {
            let sign = if j % 2 == 0 { 1i64 } else { -1 };
            Rational::from(sign) * binom_rat((n + r + 1) as u64, j)
        })
        .collect();
    Ok(QPoly { n, r, bern_coeffs })
}

impl QPoly {
    pub fn degree(&self) -> u32 {
        self.n - self.r
    }

    pub fn eval(&self, w: f64) -> f64 {
        let m = self.degree();
        self.bern_coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.to_f64().unwrap_or(f64::NAN) * bernstein_eval_uni(j as u32, m, w).expect("j <= m")
            })
            .sum()
    }

    pub fn eval_exact(&self, w: &Rational) -> Rational {
        let m = self.degree();
        self.bern_coeffs
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, c)| {
                acc + c * &bernstein_eval_uni_exact(j as u32, m, w).expect("j <= m")
            })
    }
}

/// `c(i) = (-1)^(r-i) C(2r,r) C(2r,2i) / (4^r C(r,i))`, the Bernstein
/// weights of the chord factor in the summed form of the family.
pub fn c_coeff(i: u32, r: u32) -> Result<Rational, Error> {
    if i > r {
        return Err(Error::index(format!(
            "c(i) needs 0 <= i <= r, got i={i} r={r}"
        )));
    }
    let sign = if (r - i).is_multiple_of(2) { 1i64 } else { -1 };
    let num = binom_rat(2 * r as u64, r as i64) * binom_rat(2 * r as u64, 2 * i as i64);
    let den = Rational::from_bigint(num_bigint::BigInt::from(1u8) << (2 * r as usize))
        * binom_rat(r as u64, i as i64);
    Ok(Rational::from(sign) * num.checked_div(&den)?)
}

/// The scalar `lambda_r = C(2r,r) / 4^r` with
/// `sum_i c(i) B_i^r = lambda_r * (Bernstein form of T_r)`; the summed and
/// factored forms of the family differ by exactly this factor per `r`.
pub fn scale_relation(r: u32) -> Rational {
    binom_rat(2 * r as u64, r as i64)
        / Rational::from_bigint(num_bigint::BigInt::from(1u8) << (2 * r as usize))
}

/// How a [`SimplexOrthoPoly`] coefficient set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Recursion,
}

/// A member `T_{n,r}` of the family, held as a degree-`n` Bernstein-Bezier
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexOrthoPoly {
    pub n: u32,
    pub r: u32,
    pub bb: BBPoly,
    pub provenance: Provenance,
}

/// Coefficients from the closed form.
pub fn coeffs_closed_form(n: u32, r: u32) -> Result<SimplexOrthoPoly, Error> {
    if r > n {
        return Err(Error::index(format!("need r <= n, got n={n} r={r}")));
    }
    // One M table per k-layer.
    let tables: Vec<Vec<Rational>> = (0..=n - r)
        .map(|k| Ok(m_coeffs(n - k, r)?.values))
        .collect::<Result<_, Error>>()?;
    let bb = BBPoly::from_fn(n, |zeta| {
        let k = zeta.k;
        if k > n - r {
            return Rational::zero();
        }
        let sign = if k % 2 == 0 { 1i64 } else { -1 };
        let factor = binom_rat((n + r + 1) as u64, k as i64) * binom_rat((n - r) as u64, k as i64)
            / binom_rat(n as u64, k as i64);
        Rational::from(sign) * factor * &tables[k as usize][zeta.i as usize]
    });
    Ok(SimplexOrthoPoly {
        n,
        r,
        bb,
        provenance: Provenance::ClosedForm,
    })
}

/// Coefficients from the seed row `a_{i,n-i,0} = M_{i,r}^n` and the layer
/// recursion, solving each `k+1` layer from layer `k`.
pub fn coeffs_recursive(n: u32, r: u32) -> Result<SimplexOrthoPoly, Error> {
    if r > n {
        return Err(Error::index(format!("need r <= n, got n={n} r={r}")));
    }
    let seed = m_coeffs(n, r)?.values;
    let mut bb = BBPoly::zero(n);
    for (i, value) in seed.into_iter().enumerate() {
        *bb.coeff_mut(TriIndex::new(i as u32, n - i as u32, 0)) = value;
    }
    for k in 0..n {
        // Fill layer k+1: indices (i, j, k+1) with i + j = n - k - 1.
        for i in 0..=(n - k - 1) {
            let j = n - k - 1 - i;
            let from_i = Rational::from(i as i64 + 1) * bb.coeff(TriIndex::new(i + 1, j, k));
            let from_j = Rational::from(j as i64 + 1) * bb.coeff(TriIndex::new(i, j + 1, k));
            let value = -(from_i + from_j) / Rational::from(k as i64 + 1);
            *bb.coeff_mut(TriIndex::new(i, j, k + 1)) = value;
        }
    }
    Ok(SimplexOrthoPoly {
        n,
        r,
        bb,
        provenance: Provenance::Recursion,
    })
}

/// Evaluation through the factored form. The `w = 1` corner is the
/// continuous limit: `0` for `r >= 1`, `Q_{n,0}(1)` for `r = 0`.
pub fn eval_factored(n: u32, r: u32, p: &BaryPoint) -> Result<f64, Error> {
    let q = q_poly(n, r)?;
    let s = 1.0 - p.w();
    if s == 0.0 {
        return Ok(if r >= 1 { 0.0 } else { q.eval(1.0) });
    }
    let t = p.u() / s;
    Ok(cheb_eval(r, t) * s.powi(r as i32) * q.eval(p.w()))
}

/// Exact factored-form evaluation at a rational point.
pub fn eval_factored_exact(n: u32, r: u32, p: &RatPoint) -> Result<Rational, Error> {
    let q = q_poly(n, r)?;
    let s = Rational::one() - p.w();
    if s.is_zero() {
        return Ok(if r >= 1 {
            Rational::zero()
        } else {
            q.eval_exact(&Rational::one())
        });
    }
    let t = p.u().checked_div(&s)?;
    Ok(cheb_eval_exact(r, &t) * s.pow(r) * q.eval_exact(p.w()))
}

/// Test family `g_{s,m} = T_s(u/(1-w)) (1-w)^m w^(n-m-1)` for
/// `0 <= s <= m <= n-1`; its span contains every polynomial of degree
/// below `n`.
pub fn g_test_function(s: u32, m: u32, n: u32, p: &BaryPoint) -> Result<f64, Error> {
    check_g_indices(s, m, n)?;
    let omw = 1.0 - p.w();
    let chord = if omw == 0.0 {
        // (1-w)^m T_s(u/(1-w)) extends continuously by 0 unless m = 0
        // (and s = 0), where the factor is constant 1.
        if m == 0 {
            1.0
        } else {
            0.0
        }
    } else {
        cheb_eval(s, p.u() / omw) * omw.powi(m as i32)
    };
    Ok(chord * p.w().powi((n - m - 1) as i32))
}

fn check_g_indices(s: u32, m: u32, n: u32) -> Result<(), Error> {
    if n == 0 || m > n - 1 || s > m {
        return Err(Error::index(format!(
            "test function needs 0 <= s <= m <= n-1, got s={s} m={m} n={n}"
        )));
    }
    Ok(())
}

/// `g_{s,m}` written exactly as a degree-`n-1` Bernstein polynomial:
/// `sum_i M_{i,s}^s C(s,i) u^i v^(s-i) * (u+v)^(m-s) * w^(n-m-1)`.
pub fn g_test_bbpoly(s: u32, m: u32, n: u32) -> Result<BBPoly, Error> {
    check_g_indices(s, m, n)?;
    let chord = m_coeffs(s, s)?.values;
    let wpow = n - m - 1;
    let mut monomials = Vec::new();
    for (i, coeff) in chord.iter().enumerate() {
        let i = i as u32;
        let base = coeff * &binom_rat(s as u64, i as i64);
        for l in 0..=(m - s) {
            let c = &base * &binom_rat((m - s) as u64, l as i64);
            monomials.push((TriIndex::new(i + l, s - i + (m - s) - l, wpow), c));
        }
    }
    BBPoly::from_monomials(n - 1, monomials)
}
