//! Browser demo bindings: rasterized fields of the orthogonal family over
//! the triangle, Gram matrices, and projection of sample functions.
//!
//! The heavy lifting stays in plain Rust functions returning
//! `Result<_, String>` so they are testable on any target; the
//! `wasm_bindgen` exports are thin wrappers.

use wasm_bindgen::prelude::*;

use chebtri::bernstein::{de_casteljau, BaryPoint};
use chebtri::exact::Rational;
use chebtri::simplex::coeffs_closed_form;
use chebtri::weighted::{gram_matrix, GramData, GramMode};

const MAX_DEGREE: u32 = 12;

/// Pixel-space triangle: `u`-vertex bottom left, `v`-vertex bottom right,
/// `w`-vertex top center, with a small margin.
fn pixel_to_bary(px: f64, py: f64, width: f64, height: f64) -> Option<BaryPoint> {
    let m = 0.04 * width.min(height);
    let (x1, y1) = (m, height - m);
    let (x2, y2) = (width - m, height - m);
    let (x3, y3) = (width / 2.0, m);
    let det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3);
    let u = ((y2 - y3) * (px - x3) + (x3 - x2) * (py - y3)) / det;
    let v = ((y3 - y1) * (px - x3) + (x1 - x3) * (py - y3)) / det;
    let w = 1.0 - u - v;
    if u >= 0.0 && v >= 0.0 && w >= 0.0 {
        Some(BaryPoint::new(u, v, w).expect("inside triangle"))
    } else {
        None
    }
}

fn check_indices(n: u32, r: u32) -> Result<(), String> {
    if n > MAX_DEGREE {
        return Err(format!(
            "degree n={n} is above the demo range (max {MAX_DEGREE})"
        ));
    }
    if r > n {
        return Err(format!("r={r} exceeds n={n}"));
    }
    Ok(())
}

/// Row-major per-pixel values of `T_{n,r}`; NaN outside the triangle.
fn field_values(n: u32, r: u32, width: u32, height: u32) -> Result<Vec<f64>, String> {
    check_indices(n, r)?;
    let poly = coeffs_closed_form(n, r).map_err(|e| e.to_string())?;
    let coeffs = poly.bb.coeffs_f64().map_err(|e| e.to_string())?;
    Ok(raster(width, height, |pt| de_casteljau(n, &coeffs, pt)))
}

fn raster(width: u32, height: u32, f: impl Fn(&BaryPoint) -> f64) -> Vec<f64> {
    let (wf, hf) = (width as f64, height as f64);
    let mut out = Vec::with_capacity((width * height) as usize);
    for py in 0..height {
        for px in 0..width {
            match pixel_to_bary(px as f64 + 0.5, py as f64 + 0.5, wf, hf) {
                Some(pt) => out.push(f(&pt)),
                None => out.push(f64::NAN),
            }
        }
    }
    out
}

fn gram_report(n: u32, gamma: &str, nodes: usize) -> Result<String, String> {
    if n > 8 {
        return Err(format!("gram demo capped at degree 8, got {n}"));
    }
    let exact = !(gamma.contains('.') || gamma.contains('e') || gamma.contains('E'));
    let (gamma_rat, mode) = if exact {
        let g: Rational = gamma
            .parse()
            .map_err(|e| format!("invalid gamma {gamma:?}: {e}"))?;
        (g, GramMode::Exact)
    } else {
        let g: f64 = gamma
            .parse()
            .map_err(|_| format!("invalid gamma: {gamma:?}"))?;
        if g.is_nan() || g <= -1.0 {
            return Err(format!("gamma must be > -1, got {gamma}"));
        }
        let approx = Rational::ratio((g * 1_000_000.0).round() as i64, 1_000_000);
        (approx, GramMode::Quadrature { nodes })
    };
    let matrix = gram_matrix(n, &gamma_rat, mode).map_err(|e| e.to_string())?;

    #[derive(serde::Serialize)]
    struct Doc {
        labels: Vec<String>,
        values: Vec<f64>,
        exact_zero: Option<Vec<bool>>,
        mode: &'static str,
    }
    let dim = matrix.dim();
    let labels = matrix
        .basis()
        .iter()
        .map(|(m, r)| format!("({m},{r})"))
        .collect();
    let mut values = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            values.push(matrix.entry_f64(a, b).map_err(|e| e.to_string())?);
        }
    }
    let exact_zero = match matrix.data() {
        GramData::Exact(_) => {
            let mut flags = Vec::with_capacity(dim * dim);
            for a in 0..dim {
                for b in 0..dim {
                    flags.push(matrix.entry_exact(a, b).expect("exact mode").is_zero());
                }
            }
            Some(flags)
        }
        GramData::Quadrature(_) => None,
    };
    let doc = Doc {
        labels,
        values,
        exact_zero,
        mode: if exact { "exact" } else { "quadrature" },
    };
    serde_json::to_string(&doc).map_err(|e| e.to_string())
}

type Field = Box<dyn Fn(&BaryPoint) -> f64>;

fn preset(name: &str) -> Result<Field, String> {
    match name {
        "exp_u" => Ok(Box::new(|pt: &BaryPoint| pt.u().exp())),
        "sin_pi_v" => Ok(Box::new(|pt: &BaryPoint| {
            (std::f64::consts::PI * pt.v()).sin()
        })),
        "uvw" => Ok(Box::new(|pt: &BaryPoint| pt.u() * pt.v() * pt.w())),
        "peak" => Ok(Box::new(|pt: &BaryPoint| {
            let du = pt.u() - 0.4;
            let dv = pt.v() - 0.25;
            (-18.0 * (du * du + dv * dv)).exp()
        })),
        other => Err(format!("unknown preset {other:?}")),
    }
}

fn projection_report(name: &str, n: u32, nodes: usize) -> Result<String, String> {
    if n > MAX_DEGREE {
        return Err(format!(
            "degree n={n} is above the demo range (max {MAX_DEGREE})"
        ));
    }
    let f = preset(name)?;
    let pr = chebtri::project(|pt| f(pt), n, 1.0, nodes).map_err(|e| e.to_string())?;
    serde_json::to_string(&pr).map_err(|e| e.to_string())
}

fn projection_fields(
    name: &str,
    n: u32,
    nodes: usize,
    width: u32,
    height: u32,
) -> Result<Vec<f64>, String> {
    if n > MAX_DEGREE {
        return Err(format!(
            "degree n={n} is above the demo range (max {MAX_DEGREE})"
        ));
    }
    let f = preset(name)?;
    let pr = chebtri::project(|pt| f(pt), n, 1.0, nodes).map_err(|e| e.to_string())?;
    // Three stacked planes: f, projection, error.
    let plane = (width * height) as usize;
    let mut out = Vec::with_capacity(3 * plane);
    out.extend(raster(width, height, |pt| f(pt)));
    out.extend(raster(width, height, |pt| pr.evaluate(pt)));
    out.extend(raster(width, height, |pt| f(pt) - pr.evaluate(pt)));
    Ok(out)
}

#[wasm_bindgen]
pub fn eval_field(n: u32, r: u32, width: u32, height: u32) -> Result<Vec<f64>, JsError> {
    field_values(n, r, width, height).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gram_json(n: u32, gamma: String, nodes: usize) -> Result<String, JsError> {
    gram_report(n, &gamma, nodes).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn projection_json(preset_name: String, n: u32, nodes: usize) -> Result<String, JsError> {
    projection_report(&preset_name, n, nodes).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn projection_field(
    preset_name: String,
    n: u32,
    nodes: usize,
    width: u32,
    height: u32,
) -> Result<Vec<f64>, JsError> {
    projection_fields(&preset_name, n, nodes, width, height).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_shape_and_interior() {
        let values = field_values(1, 0, 40, 40).unwrap();
        assert_eq!(values.len(), 1600);
        assert!(values.iter().any(|v| v.is_nan()), "corners lie outside");
        assert!(values.iter().any(|v| v.is_finite()));
        // Center of the canvas sits inside the triangle; 1 - 3w there is finite.
        let center = values[20 * 40 + 20];
        assert!(center.is_finite());
    }

    #[test]
    fn field_bounds_checked() {
        assert!(field_values(3, 5, 10, 10).is_err());
        assert!(field_values(40, 0, 10, 10).is_err());
    }

    #[test]
    fn gram_reports_exact_zeros_at_gamma_one() {
        let doc: serde_json::Value =
            serde_json::from_str(&gram_report(2, "1", 8).unwrap()).unwrap();
        assert_eq!(doc["mode"], "exact");
        let labels = doc["labels"].as_array().unwrap();
        assert_eq!(labels.len(), 6);
        let flags = doc["exact_zero"].as_array().unwrap();
        assert_eq!(flags.len(), 36);
        // Off-diagonal entries are exactly zero at gamma = 1.
        for a in 0..6 {
            for b in 0..6 {
                if a != b {
                    assert_eq!(flags[a * 6 + b], true, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn projection_report_reconstructs_presets() {
        let doc: serde_json::Value =
            serde_json::from_str(&projection_report("uvw", 3, 16).unwrap()).unwrap();
        let residual = doc["residual_norm"].as_f64().unwrap();
        assert!(
            residual < 1e-9,
            "uvw lies in the degree-3 span, residual {residual}"
        );
        assert!(projection_report("nope", 3, 16).is_err());
    }

    #[test]
    fn projection_fields_stack_three_planes() {
        let values = projection_fields("exp_u", 2, 12, 16, 16).unwrap();
        assert_eq!(values.len(), 3 * 256);
    }
}
