//! Regular polygons, their x-axis projections, and the induced monic
//! polynomial.
//!
//! A regular n-gon with circumradius R, center abscissa x0 and rotation
//! theta projects its vertices to x0 + R cos(theta + 2 pi k / n). The monic
//! polynomial with those roots has a closed form in Chebyshev polynomials:
//!
//!   f(x) = R^n 2^{1-n} [ T_n((x - x0)/R) - cos(n theta) ]
//!
//! Both constructions are provided and kept algorithmically independent:
//! `projection_polynomial` expands the product of linear factors, while
//! `chebyshev_form` substitutes into the exact T_n. Each runs its expansion
//! in the crate's fixed-point scalar and rounds every coefficient once at
//! the end, so the two routes can be compared (and the rotation-invariance
//! of the non-constant coefficients observed) at any parameter scale
//! without drowning in f64 expansion noise.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::chebyshev::chebyshev_t;
use crate::error::{Error, Result};
use crate::fixed::Fixed;
use crate::poly::Polynomial;

/// A regular n-gon: n >= 3, positive circumradius, rotation stored
/// canonically in [0, 2 pi / n) — the full symmetry period of the vertex
/// set. The ordinate of the center only matters for rendering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularNgon {
    n: u32,
    circumradius: f64,
    theta: f64,
    center_x: f64,
    center_y: f64,
}

impl RegularNgon {
    pub fn new(
        n: u32,
        circumradius: f64,
        theta: f64,
        center_x: f64,
        center_y: f64,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "polygon needs n >= 3, got {n}"
            )));
        }
        if !(circumradius > 0.0) || !circumradius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "circumradius must be positive and finite, got {circumradius}"
            )));
        }
        if !theta.is_finite() || !center_x.is_finite() || !center_y.is_finite() {
            return Err(Error::InvalidParameter(
                "polygon parameters must be finite".into(),
            ));
        }
        let period = TAU / n as f64;
        let mut canonical = theta.rem_euclid(period);
        if canonical >= period {
            canonical = 0.0; // rem_euclid can land on the period itself
        }
        Ok(Self {
            n,
            circumradius,
            theta: canonical,
            center_x,
            center_y,
        })
    }

    /// Unit circumradius, centered at the origin.
    pub fn unit(n: u32, theta: f64) -> Result<Self> {
        Self::new(n, 1.0, theta, 0.0, 0.0)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    /// Rotation, canonicalized into [0, 2 pi / n).
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn center_x(&self) -> f64 {
        self.center_x
    }

    pub fn center_y(&self) -> f64 {
        self.center_y
    }

    /// Symmetry period of the vertex set.
    pub fn period(&self) -> f64 {
        TAU / self.n as f64
    }

    /// Vertex projections x0 + R cos(theta + 2 pi k / n), in vertex order.
    pub fn projections(&self) -> Vec<f64> {
        (0..self.n)
            .map(|k| {
                let phi = self.theta + TAU * k as f64 / self.n as f64;
                self.center_x + self.circumradius * phi.cos()
            })
            .collect()
    }

    fn fixed_inputs(&self) -> (Fixed, Fixed, Fixed) {
        (
            Fixed::from_f64(self.theta),
            Fixed::from_f64(self.circumradius),
            Fixed::from_f64(self.center_x),
        )
    }

    /// The monic degree-n polynomial whose roots are the vertex
    /// projections. Expanded from its linear factors; coefficients are
    /// rounded to f64 once, after a fixed-point expansion.
    pub fn projection_polynomial(&self) -> Polynomial<f64> {
        let (theta, r, x0) = self.fixed_inputs();
        let roots: Vec<Fixed> = (0..self.n)
            .map(|k| {
                let phi = theta.clone() + Fixed::two_pi().mul_int(k as i64).div_int(self.n as u64);
                x0.clone() + r.clone() * phi.cos()
            })
            .collect();
        let expanded = Polynomial::from_roots(&roots);
        Polynomial::new(expanded.coeffs().iter().map(Fixed::to_f64).collect())
    }

    /// The same polynomial through the Chebyshev closed form
    /// R^n 2^{1-n} [T_n((x - x0)/R) - cos(n theta)].
    pub fn chebyshev_form(&self) -> Polynomial<f64> {
        let (theta, r, x0) = self.fixed_inputs();
        let t_fixed = Polynomial::new(
            chebyshev_t(self.n)
                .coeffs()
                .iter()
                .map(|c| Fixed::from_bigint(&c.to_integer()))
                .collect(),
        );
        let inv_r = Fixed::from_int(1).div(&r);
        let inner = Polynomial::new(vec![-(x0.clone() * inv_r.clone()), inv_r]);
        let composed = t_fixed.compose(&inner);
        let cos_n_theta = theta.mul_int(self.n as i64).cos();
        let shifted = &composed - &Polynomial::constant(cos_n_theta);
        let factor = r.powi(self.n).div_pow2(self.n - 1);
        let scaled = shifted.scale(&factor);
        Polynomial::new(scaled.coeffs().iter().map(Fixed::to_f64).collect())
    }

    pub fn vertex_configuration(&self) -> VertexConfiguration {
        VertexConfiguration::new(self.n, self.theta)
    }
}

/// Unit-modulus vertices a_k = e^{i(theta + 2 pi k/n)} together with the
/// primitive n-th root of unity beta = e^{2 pi i/n}. Multiplying every
/// vertex by beta permutes the set cyclically, which is what makes the
/// symmetric sums below vanish.
#[derive(Debug, Clone)]
pub struct VertexConfiguration {
    vertices: Vec<Complex64>,
    beta: Complex64,
}

impl VertexConfiguration {
    pub fn new(n: u32, theta: f64) -> Self {
        let vertices = (0..n)
            .map(|k| Complex64::from_polar(1.0, theta + TAU * k as f64 / n as f64))
            .collect();
        let beta = Complex64::from_polar(1.0, TAU / n as f64);
        Self { vertices, beta }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }
}

/// Kahan-compensated accumulator for complex terms.
#[derive(Default)]
struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, term: Complex64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> Complex64 {
        self.sum
    }
}

/// Combinatorial budget for the brute-force monomial sum.
pub const MONOMIAL_SUM_MAX_N: u32 = 12;

/// Brute-force sum over all C(n,k) * C(k,j) monomials
/// a_{i_1} ... a_{i_j} / (a_{i_{j+1}} ... a_{i_k}) with distinct indices
/// split into a j-subset and its complement inside a k-subset.
///
/// Multiplying every vertex by beta scales the sum by beta^{2j-k} while
/// permuting the vertex set, so the sum vanishes whenever 2j != k.
pub fn rotation_monomial_sum(n: u32, k: u32, j: u32, theta: f64) -> Result<Complex64> {
    if !(3..=MONOMIAL_SUM_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "brute-force enumeration supports 3 <= n <= {MONOMIAL_SUM_MAX_N}, got {n}"
        )));
    }
    if k < 1 || k > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= n - 1, got k = {k}"
        )));
    }
    if j > k {
        return Err(Error::InvalidParameter(format!(
            "need j <= k, got j = {j}, k = {k}"
        )));
    }
    let config = VertexConfiguration::new(n, theta);
    let a = config.vertices();

    let mut total = CompensatedSum::default();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != k {
            continue;
        }
        // Every submask of `mask`, including 0 and mask itself.
        let mut sub = mask;
        loop {
            if sub.count_ones() == j {
                let mut term = Complex64::new(1.0, 0.0);
                for (i, &v) in a.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        // 1/a = conj(a) on the unit circle.
                        term *= if sub & (1 << i) != 0 { v } else { v.conj() };
                    }
                }
                total.add(term);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    Ok(total.value())
}

/// Sum over ordered pairs i != j of a_i^2 a_j; zero for n > 3.
pub fn squares_cross_sum(n: u32, theta: f64) -> Result<Complex64> {
    if !(4..=64).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "squares cross sum needs 4 <= n <= 64, got {n} (it does not vanish at n = 3)"
        )));
    }
    let config = VertexConfiguration::new(n, theta);
    let a = config.vertices();
    let mut total = CompensatedSum::default();
    for (i, &ai) in a.iter().enumerate() {
        let ai2 = ai * ai;
        for (j, &aj) in a.iter().enumerate() {
            if i != j {
                total.add(ai2 * aj);
            }
        }
    }
    Ok(total.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    #[test]
    fn projections_of_unit_triangle() {
        let g = RegularNgon::unit(3, 0.0).unwrap();
        let p = g.projections();
        assert!((p[0] - 1.0).abs() <= 1e-15);
        assert!((p[1] + 0.5).abs() <= 1e-15);
        assert!((p[2] + 0.5).abs() <= 1e-15);
    }

    #[test]
    fn projections_translate_with_center() {
        let g0 = RegularNgon::new(5, 2.0, 0.9, 0.0, 0.0).unwrap();
        let g5 = RegularNgon::new(5, 2.0, 0.9, 5.0, 0.0).unwrap();
        for (a, b) in g0.projections().iter().zip(g5.projections()) {
            assert!((a + 5.0 - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn projection_polynomial_of_triangle_is_exact() {
        let g = RegularNgon::unit(3, 0.0).unwrap();
        assert_eq!(
            g.projection_polynomial().coeffs(),
            &[-0.25, -0.75, 0.0, 1.0]
        );
    }

    #[test]
    fn projection_polynomial_of_rotated_square() {
        let g = RegularNgon::unit(4, FRAC_PI_4).unwrap();
        let p = g.projection_polynomial();
        // The odd coefficients vanish only up to the width of the internal
        // fixed-point arithmetic, far below anything f64 can observe.
        for (got, want) in p.coeffs().iter().zip([0.25, 0.0, -1.0, 0.0, 1.0]) {
            assert!((got - want).abs() <= 1e-55, "{got} vs {want}");
        }
    }

    #[test]
    fn chebyshev_form_matches_samples() {
        let g = RegularNgon::unit(3, 0.0).unwrap();
        assert_eq!(g.chebyshev_form().coeffs(), &[-0.25, -0.75, 0.0, 1.0]);
        let g = RegularNgon::unit(4, FRAC_PI_4).unwrap();
        assert_eq!(g.chebyshev_form().coeffs(), &[0.25, 0.0, -1.0, 0.0, 1.0]);
        // Scaled triangle: roots 2, -1, -1 give x^3 - 3x - 2.
        let g = RegularNgon::new(3, 2.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(g.chebyshev_form().coeffs(), &[-2.0, -3.0, 0.0, 1.0]);
    }

    #[test]
    fn translation_shifts_the_polynomial() {
        // Moving the center to x0 = 2 moves the roots to 3, 1.5, 1.5.
        let g = RegularNgon::new(3, 1.0, 0.0, 2.0, 0.0).unwrap();
        let expected = Polynomial::from_roots(&[3.0, 1.5, 1.5]);
        for (a, b) in g
            .projection_polynomial()
            .coeffs()
            .iter()
            .zip(expected.coeffs())
        {
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn two_routes_agree_with_plain_expansion_at_unit_scale() {
        let g = RegularNgon::unit(7, 0.83).unwrap();
        let via_roots = Polynomial::from_roots(&g.projections());
        let exact = g.projection_polynomial();
        for (a, b) in exact.coeffs().iter().zip(via_roots.coeffs()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn theta_is_canonicalized() {
        let g = RegularNgon::unit(4, PI / 2.0 + 0.1).unwrap();
        assert!((g.theta() - 0.1).abs() <= 1e-12);
        let g = RegularNgon::unit(4, -0.1).unwrap();
        assert!(g.theta() >= 0.0 && g.theta() < g.period());
    }

    #[test]
    fn invalid_polygons_are_rejected() {
        assert!(RegularNgon::new(2, 1.0, 0.0, 0.0, 0.0).is_err());
        assert!(RegularNgon::new(5, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(RegularNgon::new(5, -1.0, 0.0, 0.0, 0.0).is_err());
        assert!(RegularNgon::new(5, 1.0, f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn vertex_configuration_invariants() {
        let config = VertexConfiguration::new(7, 0.4);
        let a = config.vertices();
        let beta = config.beta();
        for v in a {
            assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
        for w in a.windows(2) {
            assert!((w[0] * beta - w[1]).norm() <= 1e-12);
        }
        assert!((beta.powu(7) - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn monomial_sum_vanishes_off_axis() {
        // Sum of the cube roots of unity.
        let s = rotation_monomial_sum(3, 1, 1, 0.0).unwrap();
        assert!(s.norm() <= 1e-12);
        // e_2 of the 4th roots of unity.
        let s = rotation_monomial_sum(4, 2, 2, 0.0).unwrap();
        assert!(s.norm() <= 1e-12);
        // A mixed numerator/denominator case, m = 2j - k = -1.
        let s = rotation_monomial_sum(5, 3, 1, 0.7).unwrap();
        assert!(s.norm() <= 1e-10);
    }

    #[test]
    fn monomial_sum_parameter_errors() {
        assert!(rotation_monomial_sum(13, 1, 1, 0.0).is_err());
        assert!(rotation_monomial_sum(5, 0, 0, 0.0).is_err());
        assert!(rotation_monomial_sum(5, 5, 1, 0.0).is_err());
        assert!(rotation_monomial_sum(5, 2, 3, 0.0).is_err());
    }

    #[test]
    fn squares_cross_sum_cases() {
        assert!(squares_cross_sum(4, 0.0).unwrap().norm() <= 1e-12);
        assert!(squares_cross_sum(5, 0.3).unwrap().norm() <= 1e-10);
        // At n = 3 the sum equals -sum a_i^3 = -3 e^{3 i theta}, nonzero.
        assert!(squares_cross_sum(3, 0.0).is_err());
    }
}
