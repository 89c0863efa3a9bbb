//! Arens-Hoffman extensions `A[x]/(α)` and the constructions built on them.

mod quotient;
mod tower;
mod tractability;
mod universal;

pub use quotient::{quotient_by_radical, QuotientAlgebra};
pub use tower::{standard_extend, StandardTower, TowerOptions};
pub use tractability::{tractability_forecast, Prediction, TractabilityForecast};
pub use universal::universal_map;

pub use crate::gelfand::{is_tractable, radical};

use crate::algebra::{Algebra, ExtensionData};
use crate::error::{Error, Result};
use crate::poly::{power_sums, MonicPoly};

/// Relative slack when checking `tⁿ ≥ Σ ‖a_k‖ t^k`.
const CONDITION_SLACK: f64 = 1e-12;

/// The weight `t` of the extension norm `Σ ‖b_k‖ t^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormParameter {
    pub t: f64,
    /// Whether `t` is the smallest admissible value for its polynomial.
    pub minimal: bool,
}

impl NormParameter {
    pub fn new(t: f64) -> Self {
        NormParameter { t, minimal: false }
    }
}

fn coeff_norms(alpha: &MonicPoly) -> Vec<f64> {
    alpha.lower_coeffs().iter().map(|a| a.norm()).collect()
}

/// `(tⁿ, Σ ‖a_k‖ t^k)`.
pub fn condition_sides(alpha: &MonicPoly, t: f64) -> (f64, f64) {
    let norms = coeff_norms(alpha);
    let rhs = norms.iter().enumerate().map(|(k, a)| a * t.powi(k as i32)).sum();
    (t.powi(alpha.degree() as i32), rhs)
}

/// Whether `t` is an admissible parameter for `alpha`.
pub fn condition_holds(alpha: &MonicPoly, t: f64) -> bool {
    if !(t.is_finite() && t > 0.0) {
        return false;
    }
    let (lhs, rhs) = condition_sides(alpha, t);
    lhs >= rhs - CONDITION_SLACK * lhs.max(rhs)
}

/// The smallest `t > 0` with `tⁿ ≥ Σ ‖a_k‖ t^k`, by bisection on the unique
/// positive sign change. Returns `t = 1` when every coefficient vanishes.
pub fn min_norm_parameter(alpha: &MonicPoly) -> NormParameter {
    let norms = coeff_norms(alpha);
    let n = alpha.degree() as i32;
    let total: f64 = norms.iter().sum();
    if total == 0.0 {
        return NormParameter { t: 1.0, minimal: true };
    }
    let gap = |t: f64| t.powi(n) - norms.iter().enumerate().map(|(k, a)| a * t.powi(k as i32)).sum::<f64>();
    let (mut lo, mut hi) = (0.0, total.max(1.0));
    while hi - lo > 1e-12 * hi {
        let mid = 0.5 * (lo + hi);
        if gap(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    NormParameter { t: hi, minimal: true }
}

/// The parameter `max(t_min, max_{1≤k<n} ‖q_k‖^{1/k})` built from the power
/// sums `q_k` of the roots, so that `t^k ≥ ‖q_k‖` for `k ≥ 1`. This is the
/// choice under which the base algebra is expected to embed isometrically
/// into the quotient by the radical.
pub fn power_sum_parameter(alpha: &MonicPoly) -> Result<NormParameter> {
    let base = min_norm_parameter(alpha);
    let q = power_sums(alpha)?;
    let mut t = base.t;
    for (k, qk) in q.iter().enumerate().skip(1) {
        t = t.max(qk.norm().powf(1.0 / k as f64));
    }
    Ok(NormParameter { t, minimal: t == base.t })
}

/// `A[x]/(α)` normed by `Σ ‖b_k‖ t^k` over remainders of degree `< n`.
/// Without a parameter the minimal admissible `t` is used.
pub fn ah_extend(a: &Algebra, alpha: &MonicPoly, t: Option<NormParameter>) -> Result<Algebra> {
    if !alpha.owner().same(a) {
        return Err(Error::OwnerMismatch);
    }
    let t = match t {
        Some(p) => {
            if !condition_holds(alpha, p.t) {
                return Err(Error::InvalidParameter { t: p.t });
            }
            p
        }
        None => min_norm_parameter(alpha),
    };
    Ok(Algebra::from_extension(ExtensionData {
        base: a.clone(),
        alpha: alpha.clone(),
        t,
    }))
}

/// Constants `(K₁, K₂)` with `K₁‖b‖₂ ≤ ‖b‖₁ ≤ K₂‖b‖₂`, where `‖·‖ᵢ` is the
/// extension norm with parameter `tᵢ` and `t₁ ≤ t₂`.
pub fn norm_equivalence_constants(alpha: &MonicPoly, t1: NormParameter, t2: NormParameter) -> Result<(f64, f64)> {
    if t1.t > t2.t {
        return Err(Error::ParameterOrder { t1: t1.t, t2: t2.t });
    }
    for p in [t1, t2] {
        if !condition_holds(alpha, p.t) {
            return Err(Error::InvalidParameter { t: p.t });
        }
    }
    let r = t1.t / t2.t;
    Ok((r.powi(alpha.degree() as i32 - 1), 1.0))
}
