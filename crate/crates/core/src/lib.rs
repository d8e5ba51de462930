//! Projection polynomials of rotated regular polygons.
//!
//! A regular n-gon rotated about its center projects its vertices onto the
//! x-axis; those projections are the roots of a monic degree-n polynomial.
//! This crate constructs that polynomial, its Chebyshev closed form, and
//! verifies the geometric facts that follow: the extreme critical points
//! stay tangent to the inscribed circle, every critical point pairs with a
//! diagonal-tangent circle, and every coefficient except the constant term
//! is rotation-invariant. Supporting machinery covers exact Chebyshev and
//! Dickson polynomials, the Catalan-number limit of Chebyshev ratios, a
//! minimal-deviation spot check, and a feasibility solver for placing a
//! regular polygon on prescribed vertical lines.

pub mod chebyshev;
pub mod error;
pub mod fixed;
pub mod ngon;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use ngon::{RegularNgon, VertexConfiguration};
pub use poly::Polynomial;
pub use rational::Rational;
pub use verify::{CheckResult, FitResult, TangentCircleFamily};
