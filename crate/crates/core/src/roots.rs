//! Real roots of f' when all roots of f are known.
//!
//! Because f is real-rooted, the roots of f' interlace the distinct roots
//! of f: a double root of f is itself a root of f', and each open interval
//! between consecutive distinct roots holds exactly one critical point.
//! That gives a guaranteed bracket for bisection, so no general-purpose
//! solver is needed.
//!
//! f' is evaluated in product form straight from the roots,
//! f'(x) = sum_i prod_{j != i} (x - r_j),
//! rather than from expanded coefficients. The product form keeps every
//! factor at its local scale, so sign tests stay reliable even when the
//! roots sit far from the origin, where the expanded monomial basis
//! cancels catastrophically.

use crate::error::{Error, Result};

/// Roots of f closer than this are treated as one double root.
pub const DOUBLE_ROOT_TOL: f64 = 1e-12;

/// Bisection stops when the bracket is narrower than this.
pub const BISECTION_TOL: f64 = 1e-13;

const MAX_BISECTION_ITERS: usize = 200;

/// A bracket [lo, hi] on which the target changes sign.
#[derive(Debug, Clone, Copy)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "bracket requires lo < hi");
        Self { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Derivative of the monic polynomial with the given roots, in product form.
fn derivative_from_roots(roots: &[f64], x: f64) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0; // Kahan correction
    for i in 0..roots.len() {
        let mut term = 1.0;
        for (j, r) in roots.iter().enumerate() {
            if j != i {
                term *= x - r;
            }
        }
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// The n-1 real roots of f', sorted ascending, where f is the monic
/// polynomial with the given n roots (multiplicity at most 2).
///
/// Double roots of f are emitted directly; each remaining critical point is
/// isolated by sign-change bisection between consecutive distinct roots.
pub fn critical_points(f_roots: &[f64]) -> Result<Vec<f64>> {
    let n = f_roots.len();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 roots, got {n}"
        )));
    }
    if f_roots.iter().any(|r| !r.is_finite()) {
        return Err(Error::InvalidParameter("roots must be finite".into()));
    }

    let mut sorted = f_roots.to_vec();
    sorted.sort_by(f64::total_cmp);

    // Collapse coincident pairs: the shared location is a critical point.
    let mut distinct: Vec<f64> = Vec::new();
    let mut from_doubles: Vec<f64> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        if i + 1 < sorted.len() && sorted[i + 1] - sorted[i] <= DOUBLE_ROOT_TOL {
            let mid = 0.5 * (sorted[i] + sorted[i + 1]);
            distinct.push(mid);
            from_doubles.push(mid);
            i += 2;
        } else {
            distinct.push(sorted[i]);
            i += 1;
        }
    }

    let mut crits = from_doubles;
    for w in distinct.windows(2) {
        crits.push(bisect_derivative(&sorted, w[0], w[1])?);
    }
    crits.sort_by(f64::total_cmp);
    debug_assert_eq!(crits.len(), n - 1);
    Ok(crits)
}

/// Locate the single root of f' inside (lo, hi).
fn bisect_derivative(roots: &[f64], lo: f64, hi: f64) -> Result<f64> {
    let span = hi - lo;
    // f'(endpoint) is exactly zero at a double root of f, so nudge inward
    // with growing offsets until a strict sign change appears.
    for &frac in &[0.0, 1e-14, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4] {
        let a = lo + span * frac;
        let b = hi - span * frac;
        if a >= b {
            continue;
        }
        let fa = derivative_from_roots(roots, a);
        let fb = derivative_from_roots(roots, b);
        if fa == 0.0 {
            if frac > 0.0 {
                return Ok(a);
            }
            continue; // endpoint of the raw bracket: a double root, skip
        }
        if fb == 0.0 {
            if frac > 0.0 {
                return Ok(b);
            }
            continue;
        }
        if fa.signum() * fb.signum() < 0.0 {
            return Ok(bisect(roots, RootBracket::new(a, b), fa));
        }
    }
    Err(Error::Bracketing {
        lo,
        hi,
        detail: "roots may coincide beyond the double-root tolerance".into(),
    })
}

fn bisect(roots: &[f64], bracket: RootBracket, f_lo: f64) -> f64 {
    let mut lo = bracket.lo;
    let mut hi = bracket.hi;
    let mut f_lo = f_lo;
    for _ in 0..MAX_BISECTION_ITERS {
        if hi - lo <= BISECTION_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket below floating resolution
        }
        let fm = derivative_from_roots(roots, mid);
        if fm == 0.0 {
            return mid;
        }
        if f_lo.signum() * fm.signum() < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = fm;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_root_is_emitted_directly() {
        // f = (x - 1)(x + 1/2)^2, f' = 3x^2 - 3/4, roots +-1/2.
        let crits = critical_points(&[1.0, -0.5, -0.5]).unwrap();
        assert_eq!(crits.len(), 2);
        assert!((crits[0] + 0.5).abs() <= 1e-12);
        assert!((crits[1] - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn square_projection_critical_points() {
        // f = (x^2 - 1/2)^2, f' = 4x^3 - 2x: roots -s, 0, s with s = sqrt(1/2).
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let crits = critical_points(&[s, -s, -s, s]).unwrap();
        assert_eq!(crits.len(), 3);
        assert!((crits[0] + s).abs() <= 1e-12);
        assert!(crits[1].abs() <= 1e-12);
        assert!((crits[2] - s).abs() <= 1e-12);
    }

    #[test]
    fn symmetric_pair_gives_midpoint() {
        let crits = critical_points(&[-1.0, 1.0]).unwrap();
        assert_eq!(crits.len(), 1);
        assert!(crits[0].abs() <= 1e-13);
    }

    #[test]
    fn interlacing_holds_for_generic_roots() {
        let roots = [-3.0, -0.7, 0.2, 1.9, 4.1];
        let crits = critical_points(&roots).unwrap();
        assert_eq!(crits.len(), 4);
        for (c, w) in crits.iter().zip(roots.windows(2)) {
            assert!(
                w[0] < *c && *c < w[1],
                "critical point {c} outside ({}, {})",
                w[0],
                w[1]
            );
        }
    }

    #[test]
    fn far_from_origin_stays_accurate() {
        // Tight cluster around 5: expanded coefficients would be hopeless here.
        let roots = [4.9, 4.95, 5.05, 5.1];
        let crits = critical_points(&roots).unwrap();
        for w in crits.windows(2) {
            assert!(w[0] < w[1]);
        }
        // Verify against direct sign changes of the analytic derivative.
        for c in &crits {
            let eps = 1e-7;
            let left = derivative_from_roots(&roots, c - eps);
            let right = derivative_from_roots(&roots, c + eps);
            assert!(left * right <= 0.0, "no sign change around {c}");
        }
    }

    #[test]
    fn too_few_roots_is_an_error() {
        assert!(critical_points(&[1.0]).is_err());
    }

    #[test]
    fn coincident_triple_reports_bracketing_failure() {
        // A triple root violates the multiplicity-2 precondition; the
        // collapsed bracket degenerates and the failure is explicit.
        let err = critical_points(&[0.0, 0.0, 0.0]).unwrap_err();
        assert!(matches!(err, crate::error::Error::Bracketing { .. }));
    }
}
