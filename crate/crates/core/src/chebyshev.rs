//! Chebyshev polynomials of the first kind and their relatives.
//!
//! `chebyshev_t` builds T_n with exact integer coefficients from the
//! three-term recurrence T_{n+1} = 2x T_n - T_{n-1}, with the bases
//! T_0 = 1 and T_1 = x forced by T_n(cos y) = cos(ny). Numeric values of
//! T_n and of the Dickson polynomials D_n = 2 T_n(x/2) are computed by the
//! same recurrence on values, not by Horner on the expanded monomial
//! coefficients: the expanded basis loses roughly (1 + sqrt(2))^n of
//! precision near the ends of [-1, 1], which would swamp the identity
//! residuals this crate asserts for n up to 32.
//!
//! The even-series machinery at the bottom expands the Laurent ratio
//! T_m(1/(2x)) / T_{m-1}(1/(2x)) with exact rationals; its odd-power
//! coefficients approach the Catalan numbers as m grows.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{pow2, rational_from_int, Rational};

/// T_n with exact integer coefficients, ascending degree.
pub fn chebyshev_t(n: u32) -> Polynomial<Rational> {
    let mut prev = Polynomial::constant(Rational::one()); // T_0
    if n == 0 {
        return prev;
    }
    let two = rational_from_int(2);
    let mut cur = Polynomial::x(); // T_1
    for _ in 1..n {
        let next = &cur.shift_up(1).scale(&two) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// T_n(x) by the value recurrence (numerically stable on [-1, 1]).
pub fn chebyshev_eval(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = x;
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    cur
}

/// |T_n(cos y) - cos(n y)|.
pub fn chebyshev_trig_residual(n: u32, y: f64) -> f64 {
    (chebyshev_eval(n, y.cos()) - (n as f64 * y).cos()).abs()
}

/// Dickson polynomial D_n = 2 T_n(x/2): monic with integer coefficients.
pub fn dickson(n: u32) -> Polynomial<Rational> {
    assert!(n >= 1, "dickson requires n >= 1");
    let half_x = Polynomial::new(vec![Rational::zero(), pow2(-1)]);
    chebyshev_t(n).compose(&half_x).scale(&rational_from_int(2))
}

/// D_n(x) in complex arithmetic, by the recurrence
/// D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
pub fn dickson_eval_complex(n: u32, x: Complex64) -> Complex64 {
    if n == 0 {
        return Complex64::new(2.0, 0.0);
    }
    let mut prev = Complex64::new(2.0, 0.0);
    let mut cur = x;
    for _ in 1..n {
        (prev, cur) = (cur, x * cur - prev);
    }
    cur
}

/// |D_n(t + 1/t) - (t^n + t^-n)| for t != 0.
pub fn dickson_identity_residual(n: u32, t: Complex64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "dickson identity needs n >= 1".into(),
        ));
    }
    if t.norm() == 0.0 {
        return Err(Error::InvalidParameter("t must be nonzero".into()));
    }
    let x = t + t.inv();
    let lhs = dickson_eval_complex(n, x);
    let rhs = t.powi(n as i32) + t.powi(-(n as i32));
    Ok((lhs - rhs).norm())
}

/// First k Catalan numbers from the convolution recurrence
/// c_{j+1} = sum_i c_i c_{j-i}, starting at c_0 = 1.
pub fn catalan_numbers(k: u32) -> Vec<BigInt> {
    assert!(k >= 1, "need at least one Catalan number");
    let mut c = vec![BigInt::one()];
    while c.len() < k as usize {
        let j = c.len();
        let next: BigInt = (0..j).map(|i| &c[i] * &c[j - 1 - i]).sum();
        c.push(next);
    }
    c
}

/// A polynomial in x^2: coefficient j belongs to x^{2j}. The stored length
/// is the explicit truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenPowerSeries {
    pub coeffs: Vec<Rational>,
}

impl EvenPowerSeries {
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact power-series quotient, truncated to `terms` coefficients.
    pub fn divide(&self, den: &EvenPowerSeries, terms: usize) -> Result<EvenPowerSeries> {
        let b0 = den.coeff(0);
        if b0.is_zero() {
            return Err(Error::Degenerate(
                "series division needs a nonzero constant term".into(),
            ));
        }
        let mut q: Vec<Rational> = Vec::with_capacity(terms);
        for l in 0..terms {
            let mut acc = self.coeff(l);
            for i in 1..=l {
                acc -= den.coeff(i) * q[l - i].clone();
            }
            q.push(acc / b0.clone());
        }
        Ok(EvenPowerSeries { coeffs: q })
    }
}

/// The even polynomial A with T_m(1/(2x)) = x^{-m} A(x^2).
///
/// Substituting y = 1/(2x) into T_m(y) = sum c_i y^i leaves only terms with
/// i of parity m, so A(z) = sum_l c_{m-2l} 2^{2l-m} z^l. Its constant term
/// is the leading 2^{m-1} of T_m times 2^{-m}, i.e. exactly 1/2 for m >= 1.
pub fn chebyshev_half_reciprocal(m: u32) -> EvenPowerSeries {
    let t = chebyshev_t(m);
    let m = m as usize;
    let coeffs = (0..=m / 2)
        .map(|l| t.coeff(m - 2 * l) * pow2(2 * l as i64 - m as i64))
        .collect();
    EvenPowerSeries { coeffs }
}

/// Coefficients of x^1, x^3, ..., x^{2k-1} in the Laurent expansion of
/// T_m(1/(2x)) / T_{m-1}(1/(2x)), computed with exact rationals.
///
/// The ratio is x^{-1} A(x^2)/B(x^2); its x^{-1} coefficient is exactly 1
/// and the following odd-power coefficients converge to the Catalan
/// numbers as m grows.
pub fn catalan_ratio_coefficients(m: u32, k: u32) -> Result<Vec<Rational>> {
    if m < 2 {
        return Err(Error::InvalidParameter("need m >= 2".into()));
    }
    if k < 1 || k > m - 1 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= m - 1, got k = {k}, m = {m}"
        )));
    }
    let a = chebyshev_half_reciprocal(m);
    let b = chebyshev_half_reciprocal(m - 1);
    let q = a.divide(&b, k as usize + 1)?;
    debug_assert!(q.coeff(0).is_one());
    Ok(q.coeffs[1..].to_vec())
}

/// Guard below the reference sup-norm that counts as a genuine violation.
pub const MINIMAX_GUARD: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct MinimaxReport {
    pub n: u32,
    pub grid_points: usize,
    pub trials: u32,
    pub seed: u64,
    /// Grid sup-norm of the monic-normalized 2^{1-n} T_n on [-1, 1].
    pub reference_sup_norm: f64,
    pub min_perturbed_sup_norm: f64,
    /// Perturbed monic polynomials whose sup-norm fell below the reference
    /// by more than `MINIMAX_GUARD`. Zero if the minimal-deviation property
    /// holds.
    pub violations: u32,
}

/// Spot-check that 2^{1-n} T_n has the smallest sup-norm on [-1, 1] among
/// monic degree-n polynomials: seeded random perturbations of degree < n
/// must never land below it.
pub fn minimax_deviation_report(
    n: u32,
    grid_points: usize,
    trials: u32,
    seed: u64,
) -> MinimaxReport {
    assert!(n >= 1 && grid_points >= 2 && trials >= 1);
    let reference = chebyshev_t(n)
        .to_f64()
        .scale(&pow2(1 - n as i64).to_f64().expect("small power of two"));
    let reference_sup_norm = reference.sup_norm_grid(-1.0, 1.0, grid_points);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut min_perturbed = f64::INFINITY;
    for _ in 0..trials {
        let perturbation = loop {
            let coeffs: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect();
            let q = Polynomial::new(coeffs);
            if !q.is_zero() {
                break q;
            }
        };
        let sup = (&reference + &perturbation).sup_norm_grid(-1.0, 1.0, grid_points);
        min_perturbed = min_perturbed.min(sup);
        if sup < reference_sup_norm - MINIMAX_GUARD {
            violations += 1;
        }
    }
    MinimaxReport {
        n,
        grid_points,
        trials,
        seed,
        reference_sup_norm,
        min_perturbed_sup_norm: min_perturbed,
        violations,
    }
}
