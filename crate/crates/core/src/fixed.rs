//! Fixed-point big-integer scalar with 60 decimal digits of fraction.
//!
//! The coefficient comparisons this crate makes (rotation invariance, the
//! Chebyshev closed form) are between quantities that are mathematically
//! identical but reach magnitudes like (|x0| + R)^n. Plain f64 expansion
//! loses the comparison to its own rounding long before the stated
//! tolerances, so both construction routes run their expansions in this
//! scalar and round each final coefficient to the nearest f64 once, at the
//! end. 60 fractional digits leave a wide margin over what n <= 32 needs.
//!
//! Only the operations the pipelines use are provided: ring arithmetic,
//! division, and cosine by argument reduction plus Taylor series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::rational::{rational_to_f64_nearest, Rational};

pub const SCALE_DIGITS: u32 = 60;

/// pi * 10^60, truncated (error < 1e-60).
const PI_SCALED: &str = "3141592653589793238462643383279502884197169399375105820974944";

fn scale() -> &'static BigInt {
    static SCALE: OnceLock<BigInt> = OnceLock::new();
    SCALE.get_or_init(|| BigInt::from(10).pow(SCALE_DIGITS))
}

fn pi_scaled() -> &'static BigInt {
    static PI: OnceLock<BigInt> = OnceLock::new();
    PI.get_or_init(|| PI_SCALED.parse().expect("pi digits"))
}

/// Value represented as `units / 10^60`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(BigInt);

/// Truncating-division quotient rounded to nearest, ties away from zero.
/// Requires `b > 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a / b;
    let r = a % b;
    if (&r + &r).abs() >= *b {
        if a.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Fixed {
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "fixed-point value must be finite");
        let r = Rational::from_float(x).expect("finite f64");
        Fixed(round_div(&(r.numer() * scale()), r.denom()))
    }

    pub fn from_int(n: i64) -> Self {
        Fixed(BigInt::from(n) * scale())
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Fixed(n * scale())
    }

    /// Nearest f64.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64_nearest(&Rational::new(self.0.clone(), scale().clone()))
    }

    pub fn pi() -> Self {
        Fixed(pi_scaled().clone())
    }

    pub fn two_pi() -> Self {
        Fixed(pi_scaled() * 2)
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    /// Multiply by an exact integer (no rounding).
    pub fn mul_int(&self, k: i64) -> Self {
        Fixed(&self.0 * k)
    }

    /// Divide by a positive integer, rounding to nearest.
    pub fn div_int(&self, k: u64) -> Self {
        Fixed(round_div(&self.0, &BigInt::from(k)))
    }

    /// Divide by 2^k, rounding to nearest (exact while k <= 60, since the
    /// scale carries a factor 2^60).
    pub fn div_pow2(&self, k: u32) -> Self {
        Fixed(round_div(&self.0, &(BigInt::one() << k)))
    }

    /// Divide, rounding to nearest.
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.0.is_zero(), "division by zero");
        let (num, den) = if rhs.0.is_negative() {
            (-(&self.0), -(&rhs.0))
        } else {
            (self.0.clone(), rhs.0.clone())
        };
        Fixed(round_div(&(num * scale()), &den))
    }

    pub fn powi(&self, mut n: u32) -> Self {
        let mut acc = Fixed::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }

    /// Cosine: reduce modulo 2*pi into [-pi, pi], then Taylor series.
    pub fn cos(&self) -> Self {
        let two_pi = Self::two_pi();
        let k = round_div(&self.0, &two_pi.0);
        let r = Fixed(&self.0 - &two_pi.0 * &k);

        let r2 = r.clone() * r;
        let mut term = Fixed::one();
        let mut sum = Fixed::one();
        for j in 1u64..=80 {
            term = term * r2.clone();
            term = term.div_int((2 * j - 1) * (2 * j));
            term = -term;
            if term.0.is_zero() {
                break;
            }
            sum += term.clone();
        }
        sum
    }
}

impl Zero for Fixed {
    fn zero() -> Self {
        Fixed(BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Fixed {
    fn one() -> Self {
        Fixed(scale().clone())
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, rhs: Self) -> Fixed {
        Fixed(self.0 + rhs.0)
    }
}

impl AddAssign for Fixed {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, rhs: Self) -> Fixed {
        Fixed(self.0 - rhs.0)
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}

impl Mul for Fixed {
    type Output = Fixed;
    fn mul(self, rhs: Self) -> Fixed {
        Fixed(round_div(&(self.0 * rhs.0), scale()))
    }
}
