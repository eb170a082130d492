//! Inner products under the weight `W = u^(-1/2) v^(-1/2) (1-w)^gamma`:
//! an exact pi-rational oracle for integer `gamma >= 0`, a quadrature path
//! for real `gamma > -1`, Gram matrices over the orthogonal family, and
//! the moment/orthogonality verification suites.

use std::fmt::Write as _;

use crate::bernstein::{integrate_monomial, multinomial, BBPoly, BaryPoint};
use crate::combin::{binom_rat, factorial, half_factorial};
use crate::error::Error;
use crate::exact::{PiRational, Rational};
use crate::quadrature::TriangleRule;
use crate::simplex::{coeffs_closed_form, g_test_bbpoly, q_poly};

/// Converts a rational weight exponent to the integer the exact oracle
/// needs, or reports that the caller must use the quadrature path.
pub fn exact_gamma(gamma: &Rational) -> Result<u32, Error> {
    gamma
        .to_u32()
        .ok_or_else(|| Error::NonIntegerGamma(gamma.to_string()))
}

/// Exact `int_T B_zeta^N W du dv` for integer `gamma`.
fn weighted_basis_integral(zeta: crate::bernstein::TriIndex, gamma: u32) -> PiRational {
    let neg_half = Rational::ratio(-1, 2);
    let value = integrate_monomial(
        zeta.i as i64,
        zeta.j as i64,
        zeta.k as i64,
        &neg_half,
        &neg_half,
        gamma as i64,
    )
    .expect("non-negative exponents are integrable");
    value.scale(&Rational::from_bigint(multinomial(zeta)))
}

/// Exact `int_T p q W du dv` for integer `gamma >= 0`. The value is always
/// a pure rational multiple of pi.
pub fn weighted_inner_exact(p: &BBPoly, q: &BBPoly, gamma: u32) -> PiRational {
    let prod = p.mul(q);
    let mut acc = PiRational::zero();
    for (zeta, d) in prod.iter() {
        if d.is_zero() {
            continue;
        }
        acc += &weighted_basis_integral(zeta, gamma).scale(d);
    }
    acc
}

/// Quadrature approximation of `int_T p q W du dv` for real `gamma > -1`.
pub fn weighted_inner_quadrature(
    p: impl Fn(&BaryPoint) -> f64,
    q: impl Fn(&BaryPoint) -> f64,
    gamma: f64,
    nodes: usize,
) -> Result<f64, Error> {
    let rule = TriangleRule::new(gamma, nodes)?;
    Ok(rule.integrate(|pt| p(pt) * q(pt)))
}

/// Exact `int_0^1 T_r T_s t^(-1/2) (1-t)^(-1/2) dt` for the shifted
/// Chebyshev polynomials: `0` for `r != s`, `pi` for `r = s = 0`, `pi/2`
/// for `r = s >= 1`.
pub fn cheb_inner_01(r: u32, s: u32) -> Result<PiRational, Error> {
    let a = crate::chebyshev::m_coeffs(r, r)?.values;
    let b = crate::chebyshev::m_coeffs(s, s)?.values;
    let m = (r + s) as u64;
    // Univariate Bernstein product, then the Chebyshev-weight moment of
    // each degree-m basis function:
    // int B_k^m t^(-1/2)(1-t)^(-1/2) = C(m,k) (k-1/2)!(m-k-1/2)! pi / m!.
    let mut prod = vec![Rational::zero(); m as usize + 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            let k = (i + j) as u64;
            let scale = binom_rat(k, i as i64) * binom_rat(m - k, (r as usize - i) as i64)
                / binom_rat(m, r as i64);
            prod[k as usize] += &(ca * cb * scale);
        }
    }
    let mut acc = Rational::zero();
    let mfact = Rational::from_bigint(factorial(m));
    for (k, c) in prod.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = k as u64;
        let moment = binom_rat(m, k as i64) * half_factorial(k).coeff * half_factorial(m - k).coeff
            / mfact.clone();
        acc += &(c * &moment);
    }
    Ok(PiRational::pi_times(acc))
}

/// How Gram-matrix entries are computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GramMode {
    Exact,
    Quadrature { nodes: usize },
}

#[derive(Debug, Clone)]
pub enum GramData {
    Exact(Vec<PiRational>),
    Quadrature(Vec<f64>),
}

/// All pairwise weighted inner products among the family members
/// `{T_{m,r} : r <= m <= degree}`, ordered by `(m, r)`.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    degree: u32,
    gamma: Rational,
    basis: Vec<(u32, u32)>,
    data: GramData,
}

pub fn basis_indices(degree: u32) -> Vec<(u32, u32)> {
    (0..=degree)
        .flat_map(|m| (0..=m).map(move |r| (m, r)))
        .collect()
}

pub fn gram_matrix(degree: u32, gamma: &Rational, mode: GramMode) -> Result<GramMatrix, Error> {
    let basis = basis_indices(degree);
    let dim = basis.len();
    let polys: Vec<BBPoly> = basis
        .iter()
        .map(|&(m, r)| Ok(coeffs_closed_form(m, r)?.bb))
        .collect::<Result<_, Error>>()?;

    let data = match mode {
        GramMode::Exact => {
            let g = exact_gamma(gamma)?;
            let mut entries = vec![PiRational::zero(); dim * dim];
            for a in 0..dim {
                for b in a..dim {
                    let value = weighted_inner_exact(&polys[a], &polys[b], g);
                    entries[a * dim + b] = value.clone();
                    entries[b * dim + a] = value;
                }
            }
            GramData::Exact(entries)
        }
        GramMode::Quadrature { nodes } => {
            let rule = TriangleRule::new(gamma.to_f64()?, nodes)?;
            let evals: Vec<Vec<f64>> = polys
                .iter()
                .map(|p| p.coeffs_f64())
                .collect::<Result<_, Error>>()?;
            let mut entries = vec![0.0; dim * dim];
            for a in 0..dim {
                for b in a..dim {
                    let (pa, pb) = (&evals[a], &evals[b]);
                    let (da, db) = (polys[a].degree(), polys[b].degree());
                    let value = rule.integrate(|pt| {
                        crate::bernstein::de_casteljau(da, pa, pt)
                            * crate::bernstein::de_casteljau(db, pb, pt)
                    });
                    entries[a * dim + b] = value;
                    entries[b * dim + a] = value;
                }
            }
            GramData::Quadrature(entries)
        }
    };
    Ok(GramMatrix {
        degree,
        gamma: gamma.clone(),
        basis,
        data,
    })
}

impl GramMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn basis(&self) -> &[(u32, u32)] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn data(&self) -> &GramData {
        &self.data
    }

    pub fn entry_exact(&self, a: usize, b: usize) -> Option<&PiRational> {
        match &self.data {
            GramData::Exact(entries) => Some(&entries[a * self.dim() + b]),
            GramData::Quadrature(_) => None,
        }
    }

    pub fn entry_f64(&self, a: usize, b: usize) -> Result<f64, Error> {
        match &self.data {
            GramData::Exact(entries) => entries[a * self.dim() + b].to_f64(),
            GramData::Quadrature(entries) => Ok(entries[a * self.dim() + b]),
        }
    }

    /// Exact diagonality test; `None` in quadrature mode.
    pub fn is_diagonal(&self) -> Option<bool> {
        match &self.data {
            GramData::Exact(entries) => {
                let dim = self.dim();
                Some((0..dim).all(|a| (0..dim).all(|b| a == b || entries[a * dim + b].is_zero())))
            }
            GramData::Quadrature(_) => None,
        }
    }

    /// CSV with columns `m,r,m2,s,rat_part,pi_part,float_value`. The two
    /// exact columns are empty in quadrature mode.
    pub fn to_csv(&self) -> Result<String, Error> {
        let mut out = String::from("m,r,m2,s,rat_part,pi_part,float_value\n");
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let (m, r) = self.basis[a];
                let (m2, s) = self.basis[b];
                match &self.data {
                    GramData::Exact(entries) => {
                        let e = &entries[a * dim + b];
                        writeln!(
                            out,
                            "{m},{r},{m2},{s},{},{},{}",
                            e.rat_part,
                            e.pi_part,
                            e.to_f64()?
                        )
                        .expect("string write");
                    }
                    GramData::Quadrature(entries) => {
                        writeln!(out, "{m},{r},{m2},{s},,,{}", entries[a * dim + b])
                            .expect("string write");
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Checks that `T_{n,r}` is exactly orthogonal to the whole test family
/// `g_{s,m}`, `0 <= s <= m <= n-1` (hence to every polynomial of degree
/// below `n`) under integer `gamma`. Vacuously true for `n = 0`.
pub fn verify_thm21(n: u32, r: u32, gamma: u32) -> Result<bool, Error> {
    Ok(failing_test_pairs(n, r, gamma)?.is_empty())
}

/// A non-vanishing test inner product: the `(s, m)` indices and the value.
pub type TestFailure = ((u32, u32), PiRational);

/// The `(s, m)` pairs for which the inner product does not vanish,
/// together with the offending exact values.
pub fn failing_test_pairs(n: u32, r: u32, gamma: u32) -> Result<Vec<TestFailure>, Error> {
    let poly = coeffs_closed_form(n, r)?.bb;
    let mut failures = Vec::new();
    for m in 0..n {
        for s in 0..=m {
            let g = g_test_bbpoly(s, m, n)?;
            let value = weighted_inner_exact(&poly, &g, gamma);
            if !value.is_zero() {
                failures.push(((s, m), value));
            }
        }
    }
    Ok(failures)
}

/// Exact `int_0^1 Q_{n,r}(w) w^i (1-w)^(2r+1) dw = 0` for all
/// `i = 0..n-r-1`. Vacuously true when `r = n`.
pub fn verify_lemma21(n: u32, r: u32) -> Result<bool, Error> {
    let q = q_poly(n, r)?;
    for i in 0..(n - r) {
        if !q_moment(&q, i, 2 * r + 1).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact `int_0^1 Q_{n,r}(w) w^i (1-w)^e dw` via Bernstein moments:
/// `int_0^1 B_j^m(w) w^i (1-w)^e dw = C(m,j) (j+i)! (m-j+e)! / (m+i+e+1)!`.
pub fn q_moment(q: &crate::simplex::QPoly, i: u32, e: u32) -> Rational {
    let m = q.degree() as u64;
    q.bern_coeffs
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (j, c)| {
            let j = j as u64;
            let num = binom_rat(m, j as i64)
                * Rational::from_bigint(factorial(j + i as u64))
                * Rational::from_bigint(factorial(m - j + e as u64));
            let den = Rational::from_bigint(factorial(m + i as u64 + e as u64 + 1));
            acc + c * &(num / den)
        })
}
