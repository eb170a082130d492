//! The `verify` subcommand: runs the exact checks behind the construction
//! up to a given degree and serializes a deterministic JSON report.
//!
//! Instances that fall outside a claim's actual validity range (the
//! orthogonality family needs `gamma = 1` to be orthogonal to all lower
//! degrees, and the coefficient recursion is only equivalent to the
//! closed form for `r <= 1`) are reported and counted separately instead
//! of failing the run.

use serde::Serialize;

use chebtri::combin::check_half_binomial_identity;
use chebtri::error::Error;
use chebtri::simplex::{coeffs_closed_form, coeffs_recursive};
use chebtri::weighted::{verify_lemma21, verify_thm21, weighted_inner_exact};

#[derive(Serialize)]
pub struct Check {
    pub claim: &'static str,
    pub instances: u32,
    pub failures: u32,
    pub known_exceptions: u32,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Serialize)]
pub struct Report {
    pub n: u32,
    pub gamma: String,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

fn finish(
    claim: &'static str,
    instances: u32,
    failures: u32,
    known_exceptions: u32,
    note: Option<&'static str>,
) -> Check {
    Check {
        claim,
        instances,
        failures,
        known_exceptions,
        status: if failures == 0 { "pass" } else { "fail" },
        note,
    }
}

pub fn run_suite(n: u32, gamma: u32) -> Result<Report, Error> {
    let mut checks = Vec::new();

    // Orthogonality of T_{m,r} to every polynomial of lower degree.
    {
        let outside = gamma < 1;
        let (mut instances, mut failures, mut exceptions) = (0u32, 0u32, 0u32);
        for m in 1..=n {
            for r in 0..=m {
                instances += 1;
                if !verify_thm21(m, r, gamma)? {
                    if outside {
                        exceptions += 1;
                    } else {
                        failures += 1;
                    }
                }
            }
        }
        let note = if outside {
            Some("gamma < 1 lies outside the orthogonality hypothesis; failures are expected and reported as known exceptions")
        } else {
            None
        };
        checks.push(finish(
            "lower_degree_orthogonality",
            instances,
            failures,
            exceptions,
            note,
        ));
    }

    // Same-degree orthogonality between distinct members.
    {
        let (mut instances, mut failures) = (0u32, 0u32);
        for m in 1..=n {
            let polys: Vec<_> = (0..=m)
                .map(|r| coeffs_closed_form(m, r).map(|p| p.bb))
                .collect::<Result<_, Error>>()?;
            for r in 0..=m as usize {
                for s in (r + 1)..=m as usize {
                    instances += 1;
                    if !weighted_inner_exact(&polys[r], &polys[s], gamma).is_zero() {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(finish(
            "same_degree_orthogonality",
            instances,
            failures,
            0,
            None,
        ));
    }

    // Vanishing moments of the univariate factor.
    {
        let (mut instances, mut failures) = (0u32, 0u32);
        for m in 0..=n {
            for r in 0..=m {
                instances += 1;
                if !verify_lemma21(m, r)? {
                    failures += 1;
                }
            }
        }
        checks.push(finish(
            "univariate_factor_moments",
            instances,
            failures,
            0,
            None,
        ));
    }

    // Half-integer binomial identity over the full supported range.
    {
        let (mut instances, mut failures) = (0u32, 0u32);
        for m in 0..=20u64 {
            for k in 0..=m {
                instances += 1;
                if !check_half_binomial_identity(m, k)? {
                    failures += 1;
                }
            }
        }
        checks.push(finish(
            "half_binomial_identity",
            instances,
            failures,
            0,
            None,
        ));
    }

    // Closed form against the seeded layer recursion.
    {
        let (mut instances, mut failures, mut exceptions) = (0u32, 0u32, 0u32);
        for m in 0..=n {
            for r in 0..=m {
                instances += 1;
                let same = coeffs_closed_form(m, r)?.bb == coeffs_recursive(m, r)?.bb;
                if !same {
                    if r >= 2 {
                        exceptions += 1;
                    } else {
                        failures += 1;
                    }
                }
            }
        }
        let note = if exceptions > 0 {
            Some("the layer recursion encodes unweighted orthogonality and matches the closed form only for r <= 1; mismatches at r >= 2 are expected and reported as known exceptions")
        } else {
            None
        };
        checks.push(finish(
            "recursion_consistency",
            instances,
            failures,
            exceptions,
            note,
        ));
    }

    let all_pass = checks.iter().all(|c| c.status == "pass");
    Ok(Report {
        n,
        gamma: gamma.to_string(),
        checks,
        all_pass,
    })
}
