//! Dense univariate polynomials over an exchangeable coefficient domain.
//!
//! Coefficients are stored in ascending degree order, so index `i` is the
//! coefficient of `x^i`. The zero polynomial is the empty sequence; any
//! non-zero polynomial keeps its highest-index coefficient non-zero.

use num_complex::Complex64;
use num_traits::{FromPrimitive, One, Zero};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::rational::{rational_to_f64_nearest, Rational};

/// Everything the dense representation needs from its coefficient domain.
/// Implemented by `f64`, `Rational` and the crate's fixed-point scalar.
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + AddAssign
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + AddAssign
{
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    /// Build from ascending-degree coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Monic polynomial with the given roots (with multiplicity).
    /// The empty root list yields the constant 1.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut coeffs = vec![T::one()];
        for r in roots {
            // Multiply by (x - r) in place, top coefficient first.
            coeffs.push(T::zero());
            for i in (1..coeffs.len()).rev() {
                coeffs[i] = coeffs[i - 1].clone() - r.clone() * coeffs[i].clone();
            }
            coeffs[0] = -(r.clone() * coeffs[0].clone());
        }
        Self::new(coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Derivative of the given order (>= 1).
    ///
    /// Coefficient `i` of the result is coefficient `i + order` of `self`
    /// times the falling factorial `(i+order)(i+order-1)...(i+1)`.
    pub fn derivative(&self, order: u32) -> Self
    where
        T: FromPrimitive,
    {
        assert!(order >= 1, "derivative order must be >= 1");
        let order = order as usize;
        if self.coeffs.len() <= order {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(k, c)| {
                let mut factor = T::one();
                for m in (k - order + 1)..=k {
                    factor = factor * T::from_usize(m).expect("small integer");
                }
                factor * c.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| s.clone() * c.clone()).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Substitute `inner` for x, by Horner over polynomials.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Polynomial<Rational> {
    /// Nearest-f64 image of an exact polynomial.
    pub fn to_f64(&self) -> Polynomial<f64> {
        Polynomial::new(self.coeffs.iter().map(rational_to_f64_nearest).collect())
    }

    /// True when every coefficient reduces to denominator 1.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }
}

impl Polynomial<f64> {
    /// Horner evaluation at a complex point.
    pub fn evaluate_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Max of |p(x)| over an equally spaced grid including both endpoints.
    pub fn sup_norm_grid(&self, a: f64, b: f64, grid_points: usize) -> f64 {
        assert!(a < b, "interval endpoints must satisfy a < b");
        assert!(grid_points >= 2, "grid needs at least the two endpoints");
        let h = (b - a) / (grid_points - 1) as f64;
        (0..grid_points)
            .map(|i| {
                let x = if i + 1 == grid_points {
                    b
                } else {
                    a + h * i as f64
                };
                self.evaluate(&x).abs()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_int;

    #[test]
    fn from_roots_expands_by_hand() {
        // (x - 1)(x + 1/2)^2 = x^3 - 0.75 x - 0.25
        let p = Polynomial::from_roots(&[1.0, -0.5, -0.5]);
        assert_eq!(p.coeffs(), &[-0.25, -0.75, 0.0, 1.0]);
    }

    #[test]
    fn from_roots_edge_cases() {
        assert_eq!(Polynomial::<f64>::from_roots(&[]).coeffs(), &[1.0]);
        assert_eq!(
            Polynomial::from_roots(&[0.0, 0.0]).coeffs(),
            &[0.0, 0.0, 1.0]
        );
    }

    #[test]
    fn derivative_matches_term_by_term() {
        let p = Polynomial::new(vec![-0.25, -0.75, 0.0, 1.0]);
        assert_eq!(p.derivative(1).coeffs(), &[-0.75, 0.0, 3.0]);
        assert!(Polynomial::new(vec![5.0]).derivative(1).is_zero());
        let cubic = Polynomial::new(vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(cubic.derivative(2).coeffs(), &[0.0, 6.0]);
    }

    #[test]
    fn evaluate_at_known_root_and_zero_poly() {
        let p = Polynomial::new(vec![-0.25, -0.75, 0.0, 1.0]);
        assert_eq!(p.evaluate(&1.0), 0.0);
        assert_eq!(Polynomial::<f64>::zero().evaluate(&7.0), 0.0);
    }

    #[test]
    fn exact_from_roots_and_evaluate() {
        let roots: Vec<Rational> = [2, -1, -1].iter().map(|&k| rational_from_int(k)).collect();
        let p = Polynomial::from_roots(&roots);
        // (x - 2)(x + 1)^2 = x^3 - 3x - 2
        let expected: Vec<Rational> = [-2, -3, 0, 1]
            .iter()
            .map(|&k| rational_from_int(k))
            .collect();
        assert_eq!(p.coeffs(), &expected[..]);
        assert!(p.evaluate(&rational_from_int(2)).is_zero());
    }

    #[test]
    fn compose_substitutes() {
        // (x^2 + 1) o (x - 3) = x^2 - 6x + 10
        let outer = Polynomial::new(vec![1.0, 0.0, 1.0]);
        let inner = Polynomial::new(vec![-3.0, 1.0]);
        assert_eq!(outer.compose(&inner).coeffs(), &[10.0, -6.0, 1.0]);
    }

    #[test]
    fn sup_norm_grid_basics() {
        let x = Polynomial::new(vec![0.0, 1.0]);
        assert_eq!(x.sup_norm_grid(-1.0, 1.0, 3), 1.0);
        let c = Polynomial::new(vec![-2.5]);
        assert_eq!(c.sup_norm_grid(0.0, 1.0, 11), 2.5);
    }

    #[test]
    fn mul_add_sub_consistency() {
        let p = Polynomial::new(vec![1.0, 2.0]);
        let q = Polynomial::new(vec![-1.0, 1.0]);
        let prod = &p * &q;
        assert_eq!(prod.coeffs(), &[-1.0, -1.0, 2.0]);
        let back = &(&prod + &p) - &p;
        assert_eq!(back, prod);
    }
}
