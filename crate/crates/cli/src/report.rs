//! The verification-suite runner behind `ngon-roots verify`.
//!
//! Checks are drawn and executed in a fixed order from a single seeded
//! generator, then sorted and serialized with a fixed field order, so two
//! runs with identical flags produce byte-identical reports.

use anyhow::Context;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

use ngon_roots::ngon::MONOMIAL_SUM_MAX_N;
use ngon_roots::verify::{
    check_center_root, check_chebyshev_trig, check_circle_pairing, check_dickson_identity,
    check_extreme_tangency, check_monomial_sums, check_rotation_invariance,
    check_squares_cross_sum, check_vanishing_coefficients, CheckResult,
};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub samples_per_n: u32,
    pub seed: u64,
    pub tolerance: f64,
}

/// One flat report row. `theta`, `R`, `x0` are the sample parameters the
/// check ran at (unit values where a check fixes them); everything else a
/// check reports lands in `extra` as strings.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub n: u32,
    pub theta: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub x0: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub extra: BTreeMap<String, String>,
}

fn to_entry(result: CheckResult, n: u32, theta: f64, r: f64, x0: f64, sample: u32) -> ReportEntry {
    let mut extra = BTreeMap::new();
    extra.insert("sample".to_string(), sample.to_string());
    for (key, value) in &result.parameters {
        if !matches!(key.as_str(), "n" | "theta" | "R" | "x0") {
            extra.insert(key.clone(), format!("{value}"));
        }
    }
    ReportEntry {
        check: result.check_name,
        n,
        theta,
        r,
        x0,
        residual: result.residual,
        tolerance: result.tolerance,
        pass: result.pass,
        extra,
    }
}

pub fn run_suite(config: &SuiteConfig) -> anyhow::Result<Vec<ReportEntry>> {
    anyhow::ensure!(
        config.n_min >= 3,
        "polygon sizes start at 3, got {}",
        config.n_min
    );
    anyhow::ensure!(
        config.n_min <= config.n_max,
        "empty range {}..{}",
        config.n_min,
        config.n_max
    );
    anyhow::ensure!(
        config.n_max <= 32,
        "n above 32 is unsupported, got {}",
        config.n_max
    );
    anyhow::ensure!(config.samples_per_n >= 1, "need at least one sample per n");
    anyhow::ensure!(config.tolerance > 0.0, "tolerance must be positive");

    let tol = config.tolerance;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut entries = Vec::new();
    for n in config.n_min..=config.n_max {
        for sample in 0..config.samples_per_n {
            let theta = rng.random_range(0.0..TAU);
            let theta2 = rng.random_range(0.0..TAU);
            let r = rng.random_range(0.1..=10.0);
            let x0 = rng.random_range(-5.0..=5.0);
            let y = rng.random_range(-10.0..=10.0);
            let t = Complex64::from_polar(rng.random_range(0.5..=2.0), rng.random_range(0.0..TAU));

            let ctx = |what: &str| format!("{what} failed at n = {n}, sample {sample}");

            entries.push(to_entry(
                check_extreme_tangency(n, theta, r, x0, tol)
                    .with_context(|| ctx("extreme tangency"))?,
                n,
                theta,
                r,
                x0,
                sample,
            ));
            entries.push(to_entry(
                check_circle_pairing(n, theta, r, x0, tol)
                    .with_context(|| ctx("circle pairing"))?,
                n,
                theta,
                r,
                x0,
                sample,
            ));
            entries.push(to_entry(
                check_rotation_invariance(n, theta, theta2, r, x0, tol)
                    .with_context(|| ctx("rotation invariance"))?,
                n,
                theta,
                r,
                x0,
                sample,
            ));
            entries.push(to_entry(
                check_vanishing_coefficients(n, theta, tol)
                    .with_context(|| ctx("vanishing coefficients"))?,
                n,
                theta,
                1.0,
                0.0,
                sample,
            ));
            entries.push(to_entry(
                check_center_root(n, theta, r, x0, tol).with_context(|| ctx("center root"))?,
                n,
                theta,
                r,
                x0,
                sample,
            ));
            if n <= MONOMIAL_SUM_MAX_N {
                entries.push(to_entry(
                    check_monomial_sums(n, theta, tol).with_context(|| ctx("monomial sums"))?,
                    n,
                    theta,
                    1.0,
                    0.0,
                    sample,
                ));
            }
            if n >= 4 {
                entries.push(to_entry(
                    check_squares_cross_sum(n, theta, tol)
                        .with_context(|| ctx("squares cross sum"))?,
                    n,
                    theta,
                    1.0,
                    0.0,
                    sample,
                ));
            }
            entries.push(to_entry(
                check_chebyshev_trig(n, y, tol),
                n,
                y,
                1.0,
                0.0,
                sample,
            ));
            entries.push(to_entry(
                check_dickson_identity(n, t, tol).with_context(|| ctx("dickson identity"))?,
                n,
                t.arg(),
                t.norm(),
                0.0,
                sample,
            ));
        }
    }

    entries.sort_by(|a, b| {
        (a.check.as_str(), a.n)
            .cmp(&(b.check.as_str(), b.n))
            .then(a.theta.total_cmp(&b.theta))
    });
    Ok(entries)
}
