use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::gelfand::is_tractable_with;
use crate::poly::{discriminant, MonicPoly};
use crate::tolerance::ToleranceProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Tractable,
    NotTractable,
    Unknown,
}

impl Prediction {
    pub fn as_str(self) -> &'static str {
        match self {
            Prediction::Tractable => "tractable",
            Prediction::NotTractable => "not tractable",
            Prediction::Unknown => "unknown",
        }
    }
}

/// What the discriminant says about `A[x]/(α)` before building it.
#[derive(Debug, Clone)]
pub struct TractabilityForecast {
    pub discriminant: Element,
    pub discriminant_is_zero: bool,
    pub discriminant_is_zero_divisor: bool,
    pub base_tractable: bool,
    /// `α = xⁿ + a₀` and `a₀` is zero or a zero divisor.
    pub binomial_obstruction: bool,
    pub prediction: Prediction,
}

/// Predict tractability of the extension of `a` by `alpha`:
/// tractable when `a` is tractable and the discriminant is neither zero nor
/// a zero divisor; not tractable for `xⁿ + a₀` with `a₀` zero or a zero
/// divisor (then `u·x̄` is nilpotent for any `u ≠ 0` with `u·a₀ = 0`);
/// unknown otherwise.
pub fn tractability_forecast(a: &Algebra, alpha: &MonicPoly, tol: &ToleranceProfile) -> Result<TractabilityForecast> {
    if !alpha.owner().same(a) {
        return Err(Error::OwnerMismatch);
    }
    let d = discriminant(alpha)?;
    let d_zero = d.is_zero();
    let d_zd = d.is_zero_divisor()?;
    let base_tractable = is_tractable_with(a, tol)?;
    let binomial_obstruction = alpha.is_binomial() && {
        let a0 = alpha.coeff(0);
        a0.is_zero() || a0.is_zero_divisor()?
    };
    let prediction = if binomial_obstruction {
        Prediction::NotTractable
    } else if base_tractable && !d_zero && !d_zd {
        Prediction::Tractable
    } else {
        Prediction::Unknown
    };
    Ok(TractabilityForecast {
        discriminant: d,
        discriminant_is_zero: d_zero,
        discriminant_is_zero_divisor: d_zd,
        base_tractable,
        binomial_obstruction,
        prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use crate::extension::ah_extend;
    use crate::gelfand::is_tractable;
    use crate::C64;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn c2(a: f64, b: f64) -> (Algebra, MonicPoly) {
        let alg = Algebra::pointwise(PointSet::labelled(2));
        let a0 = alg.element(vec![c(a), c(b)]).unwrap();
        let alpha = MonicPoly::binomial(2, -a0).unwrap();
        (alg, alpha)
    }

    #[test]
    fn zero_coordinate_predicts_failure() {
        let (a, alpha) = c2(1.0, 0.0);
        let f = tractability_forecast(&a, &alpha, &ToleranceProfile::default()).unwrap();
        assert_eq!(f.prediction, Prediction::NotTractable);
        assert!(f.discriminant_is_zero_divisor);
        assert!(!is_tractable(&ah_extend(&a, &alpha, None).unwrap()).unwrap());
    }

    #[test]
    fn invertible_coefficient_predicts_success() {
        let (a, alpha) = c2(1.0, 2.0);
        let f = tractability_forecast(&a, &alpha, &ToleranceProfile::default()).unwrap();
        assert_eq!(f.prediction, Prediction::Tractable);
        assert!(is_tractable(&ah_extend(&a, &alpha, None).unwrap()).unwrap());
    }

    #[test]
    fn distinct_complex_roots() {
        let a = Algebra::complex();
        let alpha = MonicPoly::new(a.clone(), vec![a.constant(c(2.0)), a.constant(c(-3.0))]).unwrap();
        let f = tractability_forecast(&a, &alpha, &ToleranceProfile::default()).unwrap();
        assert_eq!(f.prediction, Prediction::Tractable);
    }

    #[test]
    fn repeated_root_without_binomial_form_is_unknown() {
        let a = Algebra::complex();
        let alpha = MonicPoly::new(a.clone(), vec![a.constant(c(1.0)), a.constant(c(-2.0))]).unwrap();
        let f = tractability_forecast(&a, &alpha, &ToleranceProfile::default()).unwrap();
        assert!(f.discriminant_is_zero);
        assert_eq!(f.prediction, Prediction::Unknown);
    }
}
