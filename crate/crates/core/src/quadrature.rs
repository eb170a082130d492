//! Quadrature for the weight `u^(-1/2) v^(-1/2) (1-w)^gamma` on the
//! reference triangle.
//!
//! Under `u = t(1-w)`, `v = (1-t)(1-w)` the integral splits into a
//! Chebyshev-Gauss factor in `t` (weight `t^(-1/2)(1-t)^(-1/2)`, closed-form
//! nodes) and a Gauss-Jacobi factor in `s = 1-w` (weight `s^gamma` on
//! `[0,1]`, nodes from the Golub-Welsch eigenproblem). With `N` nodes per
//! direction the tensor rule integrates exactly whenever the substituted
//! integrand is a polynomial of degree `<= 2N-1` in each variable.

use nalgebra::DMatrix;

use crate::bernstein::BaryPoint;
use crate::error::Error;

/// Chebyshev-Gauss nodes and weights on `[0, 1]` for the weight
/// `t^(-1/2) (1-t)^(-1/2)`: `t_i = (1 + cos((2i-1)pi/2N))/2`, equal
/// weights `pi/N`.
pub fn chebyshev_gauss_01(n: usize) -> Result<Vec<(f64, f64)>, Error> {
    if n == 0 {
        return Err(Error::domain("node count must be at least 1".to_string()));
    }
    let weight = std::f64::consts::PI / n as f64;
    Ok((1..=n)
        .map(|i| {
            let angle = (2 * i - 1) as f64 * std::f64::consts::PI / (2.0 * n as f64);
            ((1.0 + angle.cos()) / 2.0, weight)
        })
        .collect())
}

/// Gauss-Jacobi nodes and weights on `[0, 1]` for the weight `s^gamma`,
/// `gamma > -1`, by the Golub-Welsch eigenvalue procedure on the Jacobi
/// recurrence (alpha = 0, beta = gamma after mapping to `[-1, 1]`).
pub fn gauss_jacobi_01(gamma: f64, n: usize) -> Result<Vec<(f64, f64)>, Error> {
    if n == 0 {
        return Err(Error::domain("node count must be at least 1".to_string()));
    }
    if !gamma.is_finite() || gamma <= -1.0 {
        return Err(Error::domain(format!(
            "gamma must be finite and > -1, got {gamma}"
        )));
    }
    let (alpha, beta) = (0.0f64, gamma);
    // Total mass of s^gamma on [0,1].
    let mass = 1.0 / (gamma + 1.0);

    if n == 1 {
        let x = (beta - alpha) / (alpha + beta + 2.0);
        return Ok(vec![((1.0 + x) / 2.0, mass)]);
    }

    let mut mat = DMatrix::<f64>::zeros(n, n);
    let mut diag = (beta - alpha) / (2.0 + alpha + beta);
    for idx in 0..n - 1 {
        let k = (idx + 1) as f64;
        let denom = 2.0 * k + alpha + beta;
        let off = 2.0 / denom
            * (k * (k + alpha) * (k + beta) * (k + alpha + beta) / ((denom + 1.0) * (denom - 1.0)))
                .sqrt();
        mat[(idx, idx)] = diag;
        mat[(idx, idx + 1)] = off;
        mat[(idx + 1, idx)] = off;
        diag = (beta * beta - alpha * alpha) / (denom * (denom + 2.0));
    }
    mat[(n - 1, n - 1)] = diag;

    let eigen = mat.symmetric_eigen();
    // Weight on [-1,1] is mu0 * first eigenvector component squared; the
    // affine map to [0,1] rescales nodes only (mass is already the [0,1]
    // zeroth moment).
    let mut pairs: Vec<(f64, f64)> = eigen
        .eigenvalues
        .iter()
        .zip(eigen.eigenvectors.row(0).iter())
        .map(|(lambda, v0)| ((1.0 + lambda) / 2.0, mass * v0 * v0))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes"));
    Ok(pairs)
}

/// Tensor-product rule approximating
/// `int_T f(u,v,w) u^(-1/2) v^(-1/2) (1-w)^gamma du dv`.
#[derive(Debug, Clone)]
pub struct TriangleRule {
    gamma: f64,
    nodes: usize,
    points: Vec<(BaryPoint, f64)>,
}

impl TriangleRule {
    pub fn new(gamma: f64, nodes: usize) -> Result<Self, Error> {
        let t_rule = chebyshev_gauss_01(nodes)?;
        let s_rule = gauss_jacobi_01(gamma, nodes)?;
        let mut points = Vec::with_capacity(nodes * nodes);
        for &(t, wt) in &t_rule {
            for &(s, ws) in &s_rule {
                let p = BaryPoint::new_unchecked(t * s, (1.0 - t) * s, 1.0 - s);
                points.push((p, wt * ws));
            }
        }
        Ok(TriangleRule {
            gamma,
            nodes,
            points,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn integrate(&self, f: impl Fn(&BaryPoint) -> f64) -> f64 {
        self.points.iter().map(|(p, w)| f(p) * w).sum()
    }
}
