//! Numeric verification of the tangency, pairing and invariance facts, a
//! feasibility solver for placing a regular n-gon on prescribed vertical
//! lines, and an exploratory probe of the second derivative.

use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::ngon::RegularNgon;
use crate::roots::critical_points;

/// Concentric circles tangent to some diagonal of the polygon: radius
/// R cos(pi d / n) for a chord connecting vertices d steps apart,
/// d = 1 .. floor((n-1)/2), in descending order. d = 1 is the side, i.e.
/// the inscribed circle. For even n the longest diagonals pass through the
/// center, contributing a vertical center line instead of a circle.
#[derive(Debug, Clone, Serialize)]
pub struct TangentCircleFamily {
    pub radii: Vec<f64>,
    pub has_center_line: bool,
}

pub fn tangent_circle_radii(g: &RegularNgon) -> TangentCircleFamily {
    let n = g.n();
    let radii = (1..=(n - 1) / 2)
        .map(|d| g.circumradius() * (PI * d as f64 / n as f64).cos())
        .collect();
    TangentCircleFamily {
        radii,
        has_center_line: n % 2 == 0,
    }
}

/// Outcome of one named check: pass iff residual <= tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_name: String,
    pub parameters: BTreeMap<String, f64>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(
        check_name: &str,
        parameters: BTreeMap<String, f64>,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            check_name: check_name.to_string(),
            parameters,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

fn base_params(n: u32, theta: f64, r: f64, x0: f64) -> BTreeMap<String, f64> {
    BTreeMap::from([
        ("n".to_string(), n as f64),
        ("theta".to_string(), theta),
        ("R".to_string(), r),
        ("x0".to_string(), x0),
    ])
}

/// The leftmost and rightmost critical points of the projection polynomial
/// must touch the inscribed circle: they sit at x0 -+ R cos(pi/n).
pub fn check_extreme_tangency(
    n: u32,
    theta: f64,
    r: f64,
    x0: f64,
    tol: f64,
) -> Result<CheckResult> {
    let g = RegularNgon::new(n, r, theta, x0, 0.0)?;
    let crits = critical_points(&g.projections())?;
    let apothem = r * (PI / n as f64).cos();
    let lo = crits.first().expect("n - 1 >= 2 critical points");
    let hi = crits.last().expect("critical points");
    let residual = (lo - (x0 - apothem)).abs().max((hi - (x0 + apothem)).abs());
    Ok(CheckResult::new(
        "extreme-tangency",
        base_params(n, theta, r, x0),
        residual,
        tol,
    ))
}

/// Every diagonal-tangent circle is touched by exactly two of the vertical
/// lines through the critical points (plus one line through the center for
/// even n): the multiset {|c - x0|} must equal {R cos(pi d/n), twice each}
/// augmented with 0 for even n.
pub fn check_circle_pairing(n: u32, theta: f64, r: f64, x0: f64, tol: f64) -> Result<CheckResult> {
    let g = RegularNgon::new(n, r, theta, x0, 0.0)?;
    let crits = critical_points(&g.projections())?;
    let mut observed: Vec<f64> = crits.iter().map(|c| (c - x0).abs()).collect();
    observed.sort_by(f64::total_cmp);

    let family = tangent_circle_radii(&g);
    let mut expected: Vec<f64> = family.radii.iter().flat_map(|&rad| [rad, rad]).collect();
    if family.has_center_line {
        expected.push(0.0);
    }
    expected.sort_by(f64::total_cmp);

    let mut params = base_params(n, theta, r, x0);
    if observed.len() != expected.len() {
        // Cannot happen for a valid polygon; kept as a distinguished
        // failure rather than a numeric residual.
        params.insert("cardinality_mismatch".to_string(), 1.0);
        return Ok(CheckResult::new("circle-pairing", params, f64::MAX, tol));
    }
    let residual = observed
        .iter()
        .zip(&expected)
        .map(|(o, e)| (o - e).abs())
        .fold(0.0, f64::max);
    Ok(CheckResult::new("circle-pairing", params, residual, tol))
}

/// All coefficients except the constant term are unchanged when the
/// polygon rotates. The constant-term difference is recorded in the
/// parameters for reference.
pub fn check_rotation_invariance(
    n: u32,
    theta1: f64,
    theta2: f64,
    r: f64,
    x0: f64,
    tol: f64,
) -> Result<CheckResult> {
    let p1 = RegularNgon::new(n, r, theta1, x0, 0.0)?.projection_polynomial();
    let p2 = RegularNgon::new(n, r, theta2, x0, 0.0)?.projection_polynomial();
    let residual = (1..=n as usize)
        .map(|d| (p1.coeff(d) - p2.coeff(d)).abs())
        .fold(0.0, f64::max);
    let mut params = base_params(n, theta1, r, x0);
    params.insert("theta2".to_string(), theta2);
    params.insert("constant_term_delta".to_string(), p1.coeff(0) - p2.coeff(0));
    Ok(CheckResult::new(
        "rotation-invariance",
        params,
        residual,
        tol,
    ))
}

/// For the unit centered polygon the coefficients at degrees n-1, n-3, ...
/// vanish (stopping above the constant term when n is odd).
pub fn check_vanishing_coefficients(n: u32, theta: f64, tol: f64) -> Result<CheckResult> {
    let p = RegularNgon::unit(n, theta)?.projection_polynomial();
    let mut residual = 0.0f64;
    let mut d = n as i64 - 1;
    while d >= 1 {
        residual = residual.max(p.coeff(d as usize).abs());
        d -= 2;
    }
    Ok(CheckResult::new(
        "vanishing-coefficients",
        base_params(n, theta, 1.0, 0.0),
        residual,
        tol,
    ))
}

/// The (n-1)-th derivative is linear; its root must be the projection of
/// the polygon's center.
pub fn check_center_root(n: u32, theta: f64, r: f64, x0: f64, tol: f64) -> Result<CheckResult> {
    let g = RegularNgon::new(n, r, theta, x0, 0.0)?;
    let line = g.projection_polynomial().derivative(n - 1);
    let slope = line.coeff(1);
    if slope == 0.0 {
        // Monic f makes the slope n!; this is purely defensive.
        return Err(Error::Degenerate("f^(n-1) has zero slope".into()));
    }
    let root = -line.coeff(0) / slope;
    Ok(CheckResult::new(
        "center-root",
        base_params(n, theta, r, x0),
        (root - x0).abs(),
        tol,
    ))
}

/// |T_n(cos y) - cos(ny)| at a single sample point.
pub fn check_chebyshev_trig(n: u32, y: f64, tol: f64) -> CheckResult {
    let mut params = BTreeMap::from([("n".to_string(), n as f64), ("y".to_string(), y)]);
    params.insert("cos_y".to_string(), y.cos());
    CheckResult::new(
        "chebyshev-trig",
        params,
        crate::chebyshev::chebyshev_trig_residual(n, y),
        tol,
    )
}

/// D_n(t + 1/t) versus t^n + t^-n, with the residual scaled by
/// max(1, |t^n + t^-n|) so the tolerance reads as a relative error.
pub fn check_dickson_identity(n: u32, t: num_complex::Complex64, tol: f64) -> Result<CheckResult> {
    let raw = crate::chebyshev::dickson_identity_residual(n, t)?;
    let rhs = t.powi(n as i32) + t.powi(-(n as i32));
    let scaled = raw / rhs.norm().max(1.0);
    let params = BTreeMap::from([
        ("n".to_string(), n as f64),
        ("t_re".to_string(), t.re),
        ("t_im".to_string(), t.im),
        ("rhs_norm".to_string(), rhs.norm()),
    ]);
    Ok(CheckResult::new("dickson-identity", params, scaled, tol))
}

/// Worst |S| over every monomial sum with 2j != k at this rotation.
/// Only defined for n within the brute-force budget.
pub fn check_monomial_sums(n: u32, theta: f64, tol: f64) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for k in 1..n {
        for j in 0..=k {
            if 2 * j != k {
                worst = worst.max(crate::ngon::rotation_monomial_sum(n, k, j, theta)?.norm());
            }
        }
    }
    let params = BTreeMap::from([("n".to_string(), n as f64), ("theta".to_string(), theta)]);
    Ok(CheckResult::new("monomial-sum", params, worst, tol))
}

/// |sum_{i != j} a_i^2 a_j| at this rotation; vanishes for n > 3.
pub fn check_squares_cross_sum(n: u32, theta: f64, tol: f64) -> Result<CheckResult> {
    let s = crate::ngon::squares_cross_sum(n, theta)?;
    let params = BTreeMap::from([("n".to_string(), n as f64), ("theta".to_string(), theta)]);
    Ok(CheckResult::new("squares-cross-sum", params, s.norm(), tol))
}

/// |roots of f''| for the unit centered polygon, sorted ascending.
/// Exploratory output only: no circle construction is asserted for the
/// second derivative.
pub fn second_derivative_radii(n: u32, theta: f64) -> Result<Vec<f64>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "second derivative needs n >= 4, got {n}"
        )));
    }
    let g = RegularNgon::unit(n, theta)?;
    let first = critical_points(&g.projections())?;
    let second = critical_points(&first)?;
    let mut radii: Vec<f64> = second.iter().map(|x| x.abs()).collect();
    radii.sort_by(f64::total_cmp);
    Ok(radii)
}

/// Least-squares placement of a regular n-gon with one vertex projection
/// on each of the given vertical lines.
#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub feasible: bool,
    pub x0: f64,
    #[serde(rename = "R")]
    pub circumradius: f64,
    pub theta: f64,
    /// Root-mean-square distance between sorted input lines and sorted
    /// fitted projections.
    pub residual: f64,
    /// `assignment[i]` is the input index of the i-th smallest line, i.e.
    /// the vertex-projection rank each input line received.
    pub assignment: Vec<usize>,
}

const THETA_GRID: usize = 1024;
const GOLDEN_TOL: f64 = 1e-12;

/// Sorted-to-sorted least squares of lines against cos(theta + 2 pi k/n):
/// monotone rearrangement is optimal for squared loss on real multisets,
/// so no permutation search is needed. Returns (sse, x0, R).
fn ls_at_theta(sorted_lines: &[f64], theta: f64) -> (f64, f64, f64) {
    let n = sorted_lines.len();
    let mut basis: Vec<f64> = (0..n)
        .map(|k| (theta + TAU * k as f64 / n as f64).cos())
        .collect();
    basis.sort_by(f64::total_cmp);

    let mb = basis.iter().sum::<f64>() / n as f64;
    let ml = sorted_lines.iter().sum::<f64>() / n as f64;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (b, l) in basis.iter().zip(sorted_lines) {
        sxx += (b - mb) * (b - mb);
        sxy += (b - mb) * (l - ml);
    }
    if sxx <= 0.0 {
        return (f64::INFINITY, 0.0, 0.0);
    }
    let r = sxy / sxx;
    if !(r > 0.0) {
        return (f64::INFINITY, 0.0, 0.0);
    }
    let x0 = ml - r * mb;
    let sse = basis
        .iter()
        .zip(sorted_lines)
        .map(|(b, l)| {
            let e = l - x0 - r * b;
            e * e
        })
        .sum();
    (sse, x0, r)
}

/// Search for (x0, R, theta) whose projections match the given lines.
///
/// theta is scanned on a grid over one symmetry period and refined by
/// golden-section search; (x0, R) fall out of closed-form least squares at
/// each theta. Feasibility is a residual-threshold decision relative to
/// the spread of the input, not a proof.
pub fn fit_regular_ngon(lines: &[f64], tol: f64) -> Result<FitResult> {
    let n = lines.len();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 lines, got {n}"
        )));
    }
    if lines.iter().any(|l| !l.is_finite()) {
        return Err(Error::InvalidParameter("lines must be finite".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| lines[a].total_cmp(&lines[b]));
    let sorted: Vec<f64> = order.iter().map(|&i| lines[i]).collect();
    let spread = sorted[n - 1] - sorted[0];
    if spread == 0.0 {
        return Err(Error::Degenerate("all lines coincide".into()));
    }

    let period = TAU / n as f64;
    let step = period / THETA_GRID as f64;
    let mut best_theta = 0.0;
    let mut best_sse = f64::INFINITY;
    for i in 0..THETA_GRID {
        let theta = step * i as f64;
        let (sse, _, _) = ls_at_theta(&sorted, theta);
        if sse < best_sse {
            best_sse = sse;
            best_theta = theta;
        }
    }

    // Golden-section refinement around the best grid point.
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut a = best_theta - step;
    let mut b = best_theta + step;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = ls_at_theta(&sorted, c).0;
    let mut fd = ls_at_theta(&sorted, d).0;
    while b - a > GOLDEN_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = ls_at_theta(&sorted, c).0;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = ls_at_theta(&sorted, d).0;
        }
    }
    let theta_hat = (0.5 * (a + b)).rem_euclid(period);
    let (sse, x0, r) = ls_at_theta(&sorted, theta_hat);

    let residual = (sse / n as f64).sqrt();
    let feasible = r > 0.0 && residual <= tol * spread;
    Ok(FitResult {
        feasible,
        x0,
        circumradius: r,
        theta: theta_hat,
        residual,
        assignment: order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn radii_for_small_polygons() {
        let g = RegularNgon::unit(3, 0.0).unwrap();
        let fam = tangent_circle_radii(&g);
        assert_eq!(fam.radii.len(), 1);
        assert!((fam.radii[0] - 0.5).abs() <= 1e-12);
        assert!(!fam.has_center_line);

        let g = RegularNgon::unit(5, 0.0).unwrap();
        let fam = tangent_circle_radii(&g);
        assert!((fam.radii[0] - 0.809017).abs() <= 1e-6);
        assert!((fam.radii[1] - 0.309017).abs() <= 1e-6);

        let g = RegularNgon::unit(4, 0.0).unwrap();
        let fam = tangent_circle_radii(&g);
        assert_eq!(fam.radii.len(), 1);
        assert!((fam.radii[0] - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-7);
        assert!(fam.has_center_line);
    }

    #[test]
    fn radii_are_strictly_decreasing_with_apothem_first() {
        for n in 3..=16 {
            let g = RegularNgon::new(n, 2.5, 0.1, 0.0, 0.0).unwrap();
            let fam = tangent_circle_radii(&g);
            assert_eq!(fam.radii.len(), ((n - 1) / 2) as usize);
            assert!((fam.radii[0] - 2.5 * (PI / n as f64).cos()).abs() <= 1e-12);
            for w in fam.radii.windows(2) {
                assert!(w[0] > w[1]);
            }
            assert_eq!(fam.has_center_line, n % 2 == 0);
        }
    }

    #[test]
    fn extreme_tangency_examples() {
        let res = check_extreme_tangency(3, 0.0, 1.0, 0.0, 1e-9).unwrap();
        assert!(res.pass, "residual {}", res.residual);
        let res = check_extreme_tangency(4, FRAC_PI_4, 1.0, 0.0, 1e-9).unwrap();
        assert!(res.pass);
        let res = check_extreme_tangency(6, 0.37, 2.0, -1.0, 1e-9).unwrap();
        assert!(res.pass, "residual {}", res.residual);
    }

    #[test]
    fn circle_pairing_examples() {
        for (n, theta) in [(4, FRAC_PI_4), (5, 0.2), (3, 0.0)] {
            let res = check_circle_pairing(n, theta, 1.0, 0.0, 1e-9).unwrap();
            assert!(res.pass, "n = {n}: residual {}", res.residual);
        }
    }

    #[test]
    fn rotation_invariance_and_constant_term() {
        let res = check_rotation_invariance(5, 0.0, 0.4, 1.0, 0.0, 1e-10).unwrap();
        assert!(res.pass);
        // Constant terms differ by (cos(5 * 0.4) - cos 0) / 16.
        let expected = ((2.0f64).cos() - 1.0) / 16.0;
        let delta = res.parameters["constant_term_delta"];
        assert!((delta.abs() - expected.abs()).abs() <= 1e-12);

        let res = check_rotation_invariance(6, 0.77, 0.77, 3.0, 1.5, 1e-12).unwrap();
        assert_eq!(res.residual, 0.0);

        // Full symmetry period collapses to the same canonical rotation.
        let res = check_rotation_invariance(4, 0.0, std::f64::consts::FRAC_PI_2, 1.0, 0.0, 1e-12)
            .unwrap();
        assert_eq!(res.residual, 0.0);
    }

    #[test]
    fn vanishing_coefficients_examples() {
        for (n, theta) in [(3, 0.0), (4, FRAC_PI_4), (7, 1.1)] {
            let res = check_vanishing_coefficients(n, theta, 1e-10).unwrap();
            assert!(res.pass, "n = {n}: residual {}", res.residual);
        }
    }

    #[test]
    fn center_root_examples() {
        let res = check_center_root(4, 0.9, 3.0, 2.0, 1e-10).unwrap();
        assert!(res.pass, "residual {}", res.residual);
        let res = check_center_root(3, 0.0, 1.0, 0.0, 1e-12).unwrap();
        assert!(res.pass);
        let res = check_center_root(9, 2.0, 0.5, -4.0, 1e-10).unwrap();
        assert!(res.pass, "residual {}", res.residual);
    }

    #[test]
    fn second_derivative_of_square() {
        // f'' = 12 x^2 - 2 regardless of rotation: radii sqrt(1/6) twice.
        let radii = second_derivative_radii(4, FRAC_PI_4).unwrap();
        assert_eq!(radii.len(), 2);
        for r in &radii {
            assert!((r - (1.0f64 / 6.0).sqrt()).abs() <= 1e-9);
        }
        let other = second_derivative_radii(4, 0.123).unwrap();
        for (a, b) in radii.iter().zip(other) {
            assert!((a - b).abs() <= 1e-9);
        }
        assert!(second_derivative_radii(3, 0.0).is_err());
    }

    #[test]
    fn fit_recovers_triangle_and_rejects_bad_square() {
        let fit = fit_regular_ngon(&[0.0, 1.0, 2.0], 1e-8).unwrap();
        assert!(fit.feasible, "residual {}", fit.residual);

        let fit = fit_regular_ngon(&[0.0, 1.0, 2.0, 7.0], 1e-2).unwrap();
        assert!(!fit.feasible, "residual {}", fit.residual);

        let fit = fit_regular_ngon(&[0.0, 1.0, 3.0, 4.0], 1e-8).unwrap();
        assert!(fit.feasible, "residual {}", fit.residual);
        assert!((fit.x0 - 2.0).abs() <= 1e-6);
    }

    #[test]
    fn fit_round_trip_recovers_radius() {
        let g = RegularNgon::new(6, 2.5, 0.31, -1.2, 0.0).unwrap();
        let fit = fit_regular_ngon(&g.projections(), 1e-8).unwrap();
        assert!(fit.feasible);
        assert!((fit.circumradius - 2.5).abs() / 2.5 <= 1e-6);
        assert!((fit.x0 + 1.2).abs() <= 1e-6);
    }

    #[test]
    fn fit_rejects_degenerate_input() {
        assert!(fit_regular_ngon(&[1.0, 1.0], 1e-8).is_err());
        assert!(fit_regular_ngon(&[2.0, 2.0, 2.0], 1e-8).is_err());
    }
}
