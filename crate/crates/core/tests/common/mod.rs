//! Shared test support: an independent brute-force integrator over the
//! triangle and a small exact linear solver for building polynomials
//! orthogonal to all lower degrees.
#![allow(dead_code)]

use chebtri::bernstein::{basis_dimension, tri_indices, BBPoly, BaryPoint, TriIndex};
use chebtri::exact::Rational;

/// Composite Simpson in 1-D.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let n = 2 * panels;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let x = a + i as f64 * h;
        acc += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

/// Reference value of `int_T f du dv` by mapping the triangle to the unit
/// square through `u = t s`, `v = (1-t) s` (Jacobian `s`); the integrand
/// stays smooth, so composite Simpson converges fast.
pub fn ref_integrate_plain(f: impl Fn(&BaryPoint) -> f64 + Copy, panels: usize) -> f64 {
    simpson(
        |s| {
            simpson(
                |t| {
                    let pt = bary(t * s, (1.0 - t) * s);
                    f(&pt) * s
                },
                0.0,
                1.0,
                panels,
            )
        },
        0.0,
        1.0,
        panels,
    )
}

/// Reference value of `int_T f u^(-1/2) v^(-1/2) (1-w)^gamma du dv`.
/// The substitutions `t = sin^2(theta)`, `s = sigma^2` remove both
/// endpoint singularities:
/// `int_0^(pi/2) int_0^1 4 sigma^(2 gamma + 1) f(...) dsigma dtheta`.
pub fn ref_integrate_weighted(
    f: impl Fn(&BaryPoint) -> f64 + Copy,
    gamma: f64,
    panels: usize,
) -> f64 {
    simpson(
        |theta| {
            let sin2 = theta.sin() * theta.sin();
            simpson(
                |sigma| {
                    let s = sigma * sigma;
                    let pt = bary(s * sin2, s * (1.0 - sin2));
                    4.0 * sigma.powf(2.0 * gamma + 1.0) * f(&pt)
                },
                0.0,
                1.0,
                panels,
            )
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        panels,
    )
}

fn bary(u: f64, v: f64) -> BaryPoint {
    let u = u.clamp(0.0, 1.0);
    let v = v.clamp(0.0, 1.0 - u);
    BaryPoint::new(u, v, (1.0 - u - v).max(0.0)).expect("point stays inside")
}

/// Exact basis of the nullspace of `rows` (each row a coefficient vector),
/// by Gauss-Jordan elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rational_nullspace(rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut mat = rows;
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = mat[row][col].recip().expect("pivot nonzero");
        for c in 0..cols {
            let scaled = &mat[row][c] * &inv;
            mat[row][c] = scaled;
        }
        for r in 0..mat.len() {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &mat[row][c];
                    let updated = &mat[r][c] - &delta;
                    mat[r][c] = updated;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    // One basis vector per free column.
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut vec = vec![Rational::zero(); cols];
        vec[free] = Rational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            vec[pc] = -&mat[r][free];
        }
        basis.push(vec);
    }
    basis
}

/// Exact basis of the degree-`m` subspace orthogonal to every polynomial
/// of lower degree, as degree-`m` Bernstein coefficient vectors: the
/// nullspace of the elevated lower-degree basis (the finite certificate).
pub fn orthogonal_subspace_basis(m: u32) -> Vec<BBPoly> {
    assert!(m >= 1);
    let cols = basis_dimension(m);
    let rows: Vec<Vec<Rational>> = tri_indices(m - 1)
        .map(|eta| {
            let mut b = BBPoly::zero(m - 1);
            *b.coeff_mut(eta) = Rational::one();
            let lifted = b.elevate();
            tri_indices(m)
                .map(|zeta| lifted.coeff(zeta).clone())
                .collect()
        })
        .collect();
    rational_nullspace(rows, cols)
        .into_iter()
        .map(|coeffs| BBPoly::from_coeff_vec(m, coeffs).expect("dimension matches"))
        .collect()
}

/// Deterministic rational sample points covering the closed triangle.
pub fn rational_points() -> Vec<chebtri::RatPoint> {
    let mut pts = Vec::new();
    for den in [3i64, 4, 5, 7] {
        for a in 0..=den {
            for b in 0..=(den - a) {
                pts.push(
                    chebtri::RatPoint::from_uv(Rational::ratio(a, den), Rational::ratio(b, den))
                        .expect("valid lattice point"),
                );
            }
        }
    }
    pts
}

#[allow(dead_code)]
pub fn tri(i: u32, j: u32, k: u32) -> TriIndex {
    TriIndex::new(i, j, k)
}
