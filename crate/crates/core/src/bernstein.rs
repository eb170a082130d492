//! Bernstein-Bezier algebra over the reference triangle
//! `T = {(u,v): u,v >= 0, u+v <= 1}`, `w = 1-u-v`: representation,
//! evaluation, degree elevation, products, and exact integration.
//!
//! Inner products are plain Lebesgue integrals `int_T p q du dv`, so
//! `<1,1> = 1/2` (the area of `T`).

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::combin::{binom, factorial, half_factorial};
use crate::error::Error;
use crate::exact::{PiRational, Rational};

/// Exponent triple `(i, j, k)` with `i+j+k` equal to the degree of the
/// owning polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriIndex {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl TriIndex {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        TriIndex { i, j, k }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k
    }
}

impl fmt::Display for TriIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// `n! / (i! j! k!)` for `|zeta| = n`.
pub fn multinomial(zeta: TriIndex) -> BigInt {
    let n = zeta.degree() as u64;
    binom(n, zeta.i as i64) * binom(n - zeta.i as u64, zeta.j as i64)
}

/// Barycentric point with `f64` coordinates; `u + v + w = 1` within `1e-12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaryPoint {
    u: f64,
    v: f64,
    w: f64,
}

impl BaryPoint {
    pub fn new(u: f64, v: f64, w: f64) -> Result<Self, Error> {
        if !(u >= 0.0 && v >= 0.0 && w >= 0.0) {
            return Err(Error::domain(format!(
                "barycentric coordinates must be non-negative: ({u}, {v}, {w})"
            )));
        }
        if (u + v + w - 1.0).abs() > 1e-12 {
            return Err(Error::domain(format!(
                "barycentric coordinates must sum to 1: ({u}, {v}, {w})"
            )));
        }
        Ok(BaryPoint { u, v, w })
    }

    /// Point from the first two coordinates, `w = 1 - u - v`.
    pub fn from_uv(u: f64, v: f64) -> Result<Self, Error> {
        Self::new(u, v, 1.0 - u - v)
    }

    pub(crate) fn new_unchecked(u: f64, v: f64, w: f64) -> Self {
        BaryPoint { u, v, w }
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn w(&self) -> f64 {
        self.w
    }
}

/// Barycentric point with exact rational coordinates summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoint {
    u: Rational,
    v: Rational,
    w: Rational,
}

impl RatPoint {
    pub fn new(u: Rational, v: Rational, w: Rational) -> Result<Self, Error> {
        if u.is_negative() || v.is_negative() || w.is_negative() {
            return Err(Error::domain(format!(
                "barycentric coordinates must be non-negative: ({u}, {v}, {w})"
            )));
        }
        if &(&u + &v) + &w != Rational::one() {
            return Err(Error::domain(format!(
                "barycentric coordinates must sum to 1 exactly: ({u}, {v}, {w})"
            )));
        }
        Ok(RatPoint { u, v, w })
    }

    pub fn from_uv(u: Rational, v: Rational) -> Result<Self, Error> {
        let w = Rational::one() - &u - &v;
        Self::new(u, v, w)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn w(&self) -> &Rational {
        &self.w
    }

    pub fn to_f64(&self) -> Result<BaryPoint, Error> {
        BaryPoint::new(self.u.to_f64()?, self.v.to_f64()?, self.w.to_f64()?)
    }
}

/// Univariate Bernstein polynomial `B_i^n(x) = C(n,i) x^i (1-x)^(n-i)`.
pub fn bernstein_eval_uni(i: u32, n: u32, x: f64) -> Result<f64, Error> {
    if i > n {
        return Err(Error::index(format!(
            "B_i^n needs 0 <= i <= n, got i={i} n={n}"
        )));
    }
    let c = Rational::from_bigint(binom(n as u64, i as i64)).to_f64()?;
    Ok(c * x.powi(i as i32) * (1.0 - x).powi((n - i) as i32))
}

/// Exact univariate Bernstein value at a rational abscissa.
pub fn bernstein_eval_uni_exact(i: u32, n: u32, x: &Rational) -> Result<Rational, Error> {
    if i > n {
        return Err(Error::index(format!(
            "B_i^n needs 0 <= i <= n, got i={i} n={n}"
        )));
    }
    let one_minus = Rational::one() - x;
    Ok(Rational::from_bigint(binom(n as u64, i as i64)) * x.pow(i) * one_minus.pow(n - i))
}

/// Triangular Bernstein polynomial `B_zeta^n = (n!/(i!j!k!)) u^i v^j w^k`.
pub fn bernstein_eval_tri(zeta: TriIndex, p: &BaryPoint) -> f64 {
    let c = Rational::from_bigint(multinomial(zeta))
        .to_f64()
        .unwrap_or(f64::NAN);
    c * p.u().powi(zeta.i as i32) * p.v().powi(zeta.j as i32) * p.w().powi(zeta.k as i32)
}

pub fn bernstein_eval_tri_exact(zeta: TriIndex, p: &RatPoint) -> Rational {
    Rational::from_bigint(multinomial(zeta))
        * p.u().pow(zeta.i)
        * p.v().pow(zeta.j)
        * p.w().pow(zeta.k)
}

/// Storage position of `zeta` among degree-`n` indices ordered by
/// descending `i`, then descending `j`.
fn storage_index(n: u32, zeta: TriIndex) -> usize {
    debug_assert_eq!(zeta.degree(), n);
    let d = (n - zeta.i) as usize;
    d * (d + 1) / 2 + zeta.k as usize
}

/// Degree-`n` indices in storage order.
pub fn tri_indices(n: u32) -> impl Iterator<Item = TriIndex> {
    (0..=n).rev().flat_map(move |i| {
        (0..=n - i)
            .rev()
            .map(move |j| TriIndex::new(i, j, n - i - j))
    })
}

/// Number of degree-`n` basis functions, `C(n+2, 2)`.
pub fn basis_dimension(n: u32) -> usize {
    ((n as usize + 1) * (n as usize + 2)) / 2
}

/// A polynomial over the triangle in degree-`n` Bernstein-Bezier form,
/// with exact rational coefficients stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBPoly {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl BBPoly {
    pub fn zero(degree: u32) -> Self {
        BBPoly {
            degree,
            coeffs: vec![Rational::zero(); basis_dimension(degree)],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BBPoly {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// From coefficients listed in storage order (descending `i`, then
    /// descending `j`).
    pub fn from_coeff_vec(degree: u32, coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.len() != basis_dimension(degree) {
            return Err(Error::domain(format!(
                "degree {degree} needs {} coefficients, got {}",
                basis_dimension(degree),
                coeffs.len()
            )));
        }
        Ok(BBPoly { degree, coeffs })
    }

    pub fn from_fn(degree: u32, f: impl FnMut(TriIndex) -> Rational) -> Self {
        BBPoly {
            degree,
            coeffs: tri_indices(degree).map(f).collect(),
        }
    }

    /// Sum of homogeneous monomials `coeff * u^i v^j w^k` of total degree
    /// `degree`, converted exactly to Bernstein form.
    pub fn from_monomials(
        degree: u32,
        monomials: impl IntoIterator<Item = (TriIndex, Rational)>,
    ) -> Result<Self, Error> {
        let mut poly = BBPoly::zero(degree);
        for (zeta, coeff) in monomials {
            if zeta.degree() != degree {
                return Err(Error::domain(format!(
                    "monomial {zeta} is not homogeneous of degree {degree}"
                )));
            }
            let scale = Rational::from_bigint(multinomial(zeta)).recip()?;
            poly.coeffs[storage_index(degree, zeta)] += &(coeff * scale);
        }
        Ok(poly)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, zeta: TriIndex) -> &Rational {
        &self.coeffs[storage_index(self.degree, zeta)]
    }

    pub fn coeff_mut(&mut self, zeta: TriIndex) -> &mut Rational {
        &mut self.coeffs[storage_index(self.degree, zeta)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (TriIndex, &Rational)> {
        tri_indices(self.degree).zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Coefficients converted to `f64` in storage order, for repeated
    /// floating-point evaluation.
    pub fn coeffs_f64(&self) -> Result<Vec<f64>, Error> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    /// de Casteljau evaluation at a floating-point barycentric point.
    pub fn eval(&self, p: &BaryPoint) -> f64 {
        let coeffs = match self.coeffs_f64() {
            Ok(c) => c,
            Err(_) => return f64::NAN,
        };
        de_casteljau(self.degree, &coeffs, p)
    }

    /// Exact evaluation at a rational barycentric point by direct
    /// expansion of the basis.
    pub fn eval_exact(&self, p: &RatPoint) -> Rational {
        let mut acc = Rational::zero();
        for (zeta, d) in self.iter() {
            if d.is_zero() {
                continue;
            }
            acc += &(d * &bernstein_eval_tri_exact(zeta, p));
        }
        acc
    }

    /// Exact degree elevation: the same polynomial written in the
    /// degree-`n+1` basis.
    pub fn elevate(&self) -> BBPoly {
        let n = self.degree;
        let np1 = Rational::from(n as i64 + 1);
        BBPoly::from_fn(n + 1, |zeta| {
            let mut acc = Rational::zero();
            if zeta.i > 0 {
                acc += &(Rational::from(zeta.i)
                    * self.coeff(TriIndex::new(zeta.i - 1, zeta.j, zeta.k)));
            }
            if zeta.j > 0 {
                acc += &(Rational::from(zeta.j)
                    * self.coeff(TriIndex::new(zeta.i, zeta.j - 1, zeta.k)));
            }
            if zeta.k > 0 {
                acc += &(Rational::from(zeta.k)
                    * self.coeff(TriIndex::new(zeta.i, zeta.j, zeta.k - 1)));
            }
            acc / np1.clone()
        })
    }

    /// Elevates to the given (not smaller) degree.
    pub fn elevate_to(&self, degree: u32) -> Result<BBPoly, Error> {
        if degree < self.degree {
            return Err(Error::domain(format!(
                "cannot elevate degree {} down to {degree}",
                self.degree
            )));
        }
        let mut out = self.clone();
        while out.degree < degree {
            out = out.elevate();
        }
        Ok(out)
    }

    /// Exact product; the result has degree `self.degree + rhs.degree`.
    pub fn mul(&self, rhs: &BBPoly) -> BBPoly {
        let n = self.degree as u64;
        let m = rhs.degree as u64;
        let big = Rational::from_bigint(binom(n + m, n as i64));
        let mut out = BBPoly::zero(self.degree + rhs.degree);
        for (zeta, a) in self.iter() {
            if a.is_zero() {
                continue;
            }
            for (eta, b) in rhs.iter() {
                if b.is_zero() {
                    continue;
                }
                let sum = TriIndex::new(zeta.i + eta.i, zeta.j + eta.j, zeta.k + eta.k);
                let weight = binom((zeta.i + eta.i) as u64, zeta.i as i64)
                    * binom((zeta.j + eta.j) as u64, zeta.j as i64)
                    * binom((zeta.k + eta.k) as u64, zeta.k as i64);
                let term = a * b * Rational::from_bigint(weight);
                *out.coeff_mut(sum) += &(term / big.clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &BBPoly) -> Result<BBPoly, Error> {
        if self.degree != rhs.degree {
            return Err(Error::domain("degree mismatch in addition".to_string()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| a + b)
            .collect();
        BBPoly::from_coeff_vec(self.degree, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> BBPoly {
        BBPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl Serialize for BBPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            i: u32,
            j: u32,
            k: u32,
            value: &'a Rational,
        }
        let mut st = serializer.serialize_struct("BBPoly", 2)?;
        st.serialize_field("degree", &self.degree)?;
        let entries: Vec<Entry> = self
            .iter()
            .map(|(zeta, value)| Entry {
                i: zeta.i,
                j: zeta.j,
                k: zeta.k,
                value,
            })
            .collect();
        st.serialize_field("coeffs", &entries)?;
        st.end()
    }
}

/// de Casteljau pyramid on raw `f64` coefficients in storage order.
pub fn de_casteljau(degree: u32, coeffs: &[f64], p: &BaryPoint) -> f64 {
    debug_assert_eq!(coeffs.len(), basis_dimension(degree));
    if degree == 0 {
        return coeffs[0];
    }
    let (u, v, w) = (p.u(), p.v(), p.w());
    let mut layer = coeffs.to_vec();
    let mut next = Vec::new();
    for d in (1..=degree).rev() {
        next.clear();
        next.extend(tri_indices(d - 1).map(|zeta| {
            let a = layer[storage_index(d, TriIndex::new(zeta.i + 1, zeta.j, zeta.k))];
            let b = layer[storage_index(d, TriIndex::new(zeta.i, zeta.j + 1, zeta.k))];
            let c = layer[storage_index(d, TriIndex::new(zeta.i, zeta.j, zeta.k + 1))];
            u * a + v * b + w * c
        }));
        std::mem::swap(&mut layer, &mut next);
    }
    layer[0]
}

/// The common integral of every degree-`n` basis function, normalized by
/// the domain area: `1 / C(n+2, 2)`. All basis functions share it, which
/// is what makes them equally weighted.
pub fn bernstein_integral(n: u32) -> Rational {
    Rational::from_bigint(binom(n as u64 + 2, 2))
        .recip()
        .expect("binomial > 0")
}

/// Exact integral `int_T u^(a+alpha) v^(b+beta) (1-w)^gamma_exp w^c du dv`
/// over the reference triangle.
///
/// `alpha` and `beta` may each be `0` or `-1/2`; everything else is
/// rejected. The result is rational except when both are `-1/2`, where it
/// is a rational multiple of pi.
pub fn integrate_monomial(
    a: i64,
    b: i64,
    c: i64,
    alpha: &Rational,
    beta: &Rational,
    gamma_exp: i64,
) -> Result<PiRational, Error> {
    let half_flag = |x: &Rational, name: &str| -> Result<bool, Error> {
        if x.is_zero() {
            Ok(false)
        } else if *x == Rational::ratio(-1, 2) {
            Ok(true)
        } else {
            Err(Error::domain(format!("{name} must be 0 or -1/2, got {x}")))
        }
    };
    let a_half = half_flag(alpha, "alpha")?;
    let b_half = half_flag(beta, "beta")?;
    if a < 0 || b < 0 || c < 0 || gamma_exp < 0 {
        return Err(Error::NonIntegrable(format!(
            "exponents (a={a}, b={b}, c={c}, gamma={gamma_exp}) fall outside the integrable range"
        )));
    }
    let (a, b, c, g) = (a as u64, b as u64, c as u64, gamma_exp as u64);

    // Doubled Beta arguments: B(a+alpha+1, b+beta+1) in t, and
    // B(a+b+alpha+beta+gamma+2, c+1) in s = 1-w (the Jacobian contributes
    // one extra power of s).
    let p2 = 2 * (a + 1) - if a_half { 1 } else { 0 };
    let q2 = 2 * (b + 1) - if b_half { 1 } else { 0 };
    let r2 = 2 * (a + b + g + 2) - if a_half { 1 } else { 0 } - if b_half { 1 } else { 0 };
    let first = beta_halfint(p2, q2)?;
    let second = beta_halfint(r2, 2 * (c + 1))?;
    first.checked_mul(&second)
}

/// Gamma(x) for `x = x2/2 >= 1/2`, as `coeff * pi^(sqrt_pi/2)`.
fn gamma_halfint(x2: u64) -> (Rational, u8) {
    debug_assert!(x2 >= 1);
    if x2.is_multiple_of(2) {
        (Rational::from_bigint(factorial(x2 / 2 - 1)), 0)
    } else {
        // Gamma(m + 1/2) = (m - 1/2)!
        (half_factorial((x2 - 1) / 2).coeff, 1)
    }
}

/// Exact `B(p, q) = Gamma(p) Gamma(q) / Gamma(p+q)` for doubled arguments
/// `p2 = 2p`, `q2 = 2q`. The residual power of `sqrt(pi)` is always 0 or 2.
fn beta_halfint(p2: u64, q2: u64) -> Result<PiRational, Error> {
    if p2 == 0 || q2 == 0 {
        return Err(Error::NonIntegrable(
            "Beta argument must be positive".to_string(),
        ));
    }
    let (cp, ep) = gamma_halfint(p2);
    let (cq, eq) = gamma_halfint(q2);
    let (cs, es) = gamma_halfint(p2 + q2);
    let coeff = (cp * cq).checked_div(&cs)?;
    match ep + eq - es {
        0 => Ok(PiRational::from_rational(coeff)),
        2 => Ok(PiRational::pi_times(coeff)),
        _ => unreachable!("sqrt(pi) powers cannot combine to an odd residual"),
    }
}

/// Unweighted inner product `int_T p q du dv`, exact.
pub fn inner_product_unweighted(p: &BBPoly, q: &BBPoly) -> Rational {
    let prod = p.mul(q);
    let n = prod.degree() as i64;
    let total = prod.iter().fold(Rational::zero(), |acc, (_, d)| acc + d);
    total / Rational::from((n + 1) * (n + 2))
}

/// Coefficient-form inner product for a polynomial `p` that lies in the
/// degree-`m` subspace orthogonal to all lower degrees, written in the
/// degree-`n` basis alongside `q`:
/// `<p, q> = (n!)^2 / ((n+m+2)! (n-m)!) * sum c_zeta d_zeta`.
pub fn inner_product_orthogonal_form(p: &BBPoly, m: u32, q: &BBPoly) -> Result<Rational, Error> {
    let n = p.degree();
    if q.degree() != n {
        return Err(Error::domain(
            "p and q must share a representation degree".to_string(),
        ));
    }
    if m > n {
        return Err(Error::domain(format!(
            "m={m} exceeds representation degree n={n}"
        )));
    }
    let nf = factorial(n as u64);
    let scale = Rational::from_parts(
        &nf * &nf,
        factorial((n + m) as u64 + 2) * factorial((n - m) as u64),
    )?;
    let dot = p
        .iter()
        .zip(q.iter())
        .fold(Rational::zero(), |acc, ((_, c), (_, d))| acc + c * d);
    Ok(scale * dot)
}

/// Finite certificate that a degree-`n` polynomial is orthogonal to every
/// polynomial of degree `< n`: the coefficient vector must annihilate the
/// degree-elevated form of each degree-`n-1` basis function, which reduces
/// to `(i+1)c_{i+1,j,k} + (j+1)c_{i,j+1,k} + (k+1)c_{i,j,k+1} = 0` for all
/// `|eta| = n-1`. Vacuously true at degree 0.
pub fn orthogonal_to_lower_degrees(p: &BBPoly) -> bool {
    let n = p.degree();
    if n == 0 {
        return true;
    }
    tri_indices(n - 1).all(|eta| {
        let mut acc =
            Rational::from(eta.i as i64 + 1) * p.coeff(TriIndex::new(eta.i + 1, eta.j, eta.k));
        acc +=
            &(Rational::from(eta.j as i64 + 1) * p.coeff(TriIndex::new(eta.i, eta.j + 1, eta.k)));
        acc +=
            &(Rational::from(eta.k as i64 + 1) * p.coeff(TriIndex::new(eta.i, eta.j, eta.k + 1)));
        acc.is_zero()
    })
}
