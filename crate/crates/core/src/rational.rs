//! Exact rational coefficients.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator, which is exactly the domain the exact polynomial
//! constructions need. Helpers here cover the two conversions the crate
//! cares about: lossless `f64 -> Rational` and correctly rounded
//! `Rational -> f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Lossless conversion: every finite `f64` is a dyadic rational.
pub fn rational_from_f64(x: f64) -> Rational {
    BigRational::from_float(x).expect("finite f64")
}

pub fn rational_from_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// 2^k as an exact rational, for any sign of `k`.
pub fn pow2(k: i64) -> Rational {
    let two = BigInt::from(2);
    if k >= 0 {
        BigRational::from_integer(two.pow(k as u32))
    } else {
        BigRational::new(BigInt::one(), two.pow((-k) as u32))
    }
}

/// Round an exact rational to the nearest `f64`.
///
/// `ToPrimitive::to_f64` on a big ratio may be a couple of ulps off for
/// large numerators, so the first approximation is refined by an exact
/// comparison against its float neighbours.
pub fn rational_to_f64_nearest(v: &Rational) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let approx = v.to_f64().unwrap_or(0.0);
    if !approx.is_finite() {
        return approx;
    }
    let mut best = approx;
    let mut best_err = (v - rational_from_f64(best)).abs();
    // Walk toward the true value until the exact error stops shrinking.
    for step in [next_up, next_down] {
        let mut cand = step(approx);
        loop {
            if !cand.is_finite() {
                break;
            }
            let err = (v - rational_from_f64(cand)).abs();
            if err < best_err {
                best = cand;
                best_err = err;
                cand = step(cand);
            } else {
                break;
            }
        }
    }
    best
}

pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    let bits = x.to_bits();
    let next = if x == 0.0 {
        1 // smallest positive subnormal
    } else if bits >> 63 == 0 {
        bits + 1
    } else {
        bits - 1
    };
    f64::from_bits(next)
}

pub fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip_is_exact() {
        for x in [0.1, -0.75, 1.0 / 3.0, 6.6e18, -5.0e-12] {
            let r = rational_from_f64(x);
            assert_eq!(rational_to_f64_nearest(&r), x);
        }
    }

    #[test]
    fn nearest_rounding_picks_closest_float() {
        // 1/3 is not representable; nearest f64 is the usual constant.
        let third = Rational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(rational_to_f64_nearest(&third), 1.0 / 3.0);
        // A huge exact integer rounds to the closest float, not a truncation.
        let big = Rational::from_integer(BigInt::from(6_600_000_000_000_000_001_i128));
        let f = rational_to_f64_nearest(&big);
        let down = (big.clone() - rational_from_f64(next_down(f))).abs();
        let here = (big - rational_from_f64(f)).abs();
        assert!(here <= down);
    }

    #[test]
    fn pow2_signs() {
        assert_eq!(pow2(3), rational_from_int(8));
        assert_eq!(pow2(-2), Rational::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(pow2(0), Rational::one());
    }

    #[test]
    fn next_up_down_are_adjacent() {
        let x = 1.5;
        assert!(next_up(x) > x);
        assert!(next_down(x) < x);
        assert_eq!(next_down(next_up(x)), x);
        assert!(next_up(0.0) > 0.0);
    }
}
