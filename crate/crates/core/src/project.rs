//! Weighted least-squares projection onto the orthogonal family.
//!
//! Because the family is orthogonal under the weight, the projection is
//! diagonal: `c_{m,r} = <f, T_{m,r}>_W / <T_{m,r}, T_{m,r}>_W`, no linear
//! solve. Coefficient integrals go through quadrature; the diagonal norms
//! are taken from the exact oracle whenever `gamma` is an integer.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bernstein::{de_casteljau, BBPoly, BaryPoint};
use crate::error::Error;
use crate::quadrature::TriangleRule;
use crate::simplex::coeffs_closed_form;
use crate::weighted::{basis_indices, weighted_inner_exact};

/// Result of projecting a function onto `span{T_{m,r} : r <= m <= degree}`.
#[derive(Debug, Clone)]
pub struct ProjectionResult {
    degree: u32,
    gamma: f64,
    coefficients: Vec<((u32, u32), f64)>,
    residual_norm: f64,
    basis: Vec<(u32, Vec<f64>)>,
}

pub fn project(
    f: impl Fn(&BaryPoint) -> f64,
    degree: u32,
    gamma: f64,
    nodes: usize,
) -> Result<ProjectionResult, Error> {
    if gamma.is_nan() || gamma < 1.0 {
        return Err(Error::domain(format!(
            "projection requires gamma >= 1 (full orthogonality), got {gamma}"
        )));
    }
    let rule = TriangleRule::new(gamma, nodes)?;
    let indices = basis_indices(degree);

    let mut basis: Vec<(u32, Vec<f64>)> = Vec::with_capacity(indices.len());
    let mut norms: Vec<f64> = Vec::with_capacity(indices.len());
    let is_integer_gamma = gamma.fract() == 0.0;
    for &(m, r) in &indices {
        let poly: BBPoly = coeffs_closed_form(m, r)?.bb;
        let coeffs = poly.coeffs_f64()?;
        let norm = if is_integer_gamma {
            weighted_inner_exact(&poly, &poly, gamma as u32).to_f64()?
        } else {
            rule.integrate(|pt| {
                let val = de_casteljau(m, &coeffs, pt);
                val * val
            })
        };
        basis.push((m, coeffs));
        norms.push(norm);
    }

    let coefficients: Vec<((u32, u32), f64)> = indices
        .iter()
        .zip(basis.iter().zip(norms.iter()))
        .map(|(&(m, r), ((deg, coeffs), norm))| {
            let moment = rule.integrate(|pt| f(pt) * de_casteljau(*deg, coeffs, pt));
            ((m, r), moment / norm)
        })
        .collect();

    let evaluate = |pt: &BaryPoint| -> f64 {
        coefficients
            .iter()
            .zip(basis.iter())
            .map(|((_, c), (deg, coeffs))| c * de_casteljau(*deg, coeffs, pt))
            .sum()
    };
    let residual_sq = rule.integrate(|pt| {
        let d = f(pt) - evaluate(pt);
        d * d
    });
    let residual_norm = residual_sq.max(0.0).sqrt();

    Ok(ProjectionResult {
        degree,
        gamma,
        coefficients,
        residual_norm,
        basis,
    })
}

impl ProjectionResult {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn coefficients(&self) -> &[((u32, u32), f64)] {
        &self.coefficients
    }

    pub fn coefficient(&self, m: u32, r: u32) -> Option<f64> {
        self.coefficients
            .iter()
            .find(|((mm, rr), _)| *mm == m && *rr == r)
            .map(|(_, c)| *c)
    }

    /// Weighted L2 norm of `f - projection`.
    pub fn residual_norm(&self) -> f64 {
        self.residual_norm
    }

    /// `sum c_{m,r} T_{m,r}(p)` through Bernstein evaluation.
    pub fn evaluate(&self, p: &BaryPoint) -> f64 {
        self.coefficients
            .iter()
            .zip(self.basis.iter())
            .map(|((_, c), (deg, coeffs))| c * de_casteljau(*deg, coeffs, p))
            .sum()
    }
}

impl Serialize for ProjectionResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            m: u32,
            r: u32,
            value: f64,
        }
        let mut st = serializer.serialize_struct("ProjectionResult", 4)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("gamma", &self.gamma)?;
        let entries: Vec<Entry> = self
            .coefficients
            .iter()
            .map(|&((m, r), value)| Entry { m, r, value })
            .collect();
        st.serialize_field("coefficients", &entries)?;
        st.serialize_field("residual_norm", &self.residual_norm)?;
        st.end()
    }
}

/// Convenience wrapper mirroring [`ProjectionResult::evaluate`].
pub fn evaluate_projection(pr: &ProjectionResult, p: &BaryPoint) -> f64 {
    pr.evaluate(p)
}
