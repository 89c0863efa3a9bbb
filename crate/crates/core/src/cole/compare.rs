use super::silov::{function_span, is_topological_zero_divisor, silov_boundary, TopologicalZeroDivisor};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::poly::{discriminant, MonicPoly};
use crate::tolerance::ToleranceProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The discriminant does not vanish on the boundary.
    TopologicallyIsomorphic,
    /// The discriminant vanishes on the boundary without being a zero divisor.
    NotIsomorphic,
    /// The discriminant is zero or a zero divisor, so the extension is not
    /// tractable to begin with.
    TractabilityFails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::TopologicallyIsomorphic => "topologically isomorphic",
            Verdict::NotIsomorphic => "not isomorphic",
            Verdict::TractabilityFails => "tractability already fails",
        }
    }
}

/// Everything the classifier looked at, so no threshold call is hidden.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub discriminant: Element,
    pub discriminant_is_zero: bool,
    pub discriminant_is_zero_divisor: bool,
    pub boundary: Vec<usize>,
    pub topological: TopologicalZeroDivisor,
    pub verdict: Verdict,
}

/// Classify how the Arens-Hoffman and Cole extensions of `a` by `alpha`
/// relate, from the discriminant alone.
pub fn compare_extensions(a: &Algebra, alpha: &MonicPoly, tol: &ToleranceProfile) -> Result<Comparison> {
    if !alpha.owner().same(a) {
        return Err(Error::OwnerMismatch);
    }
    if a.depth() != 0 {
        return Err(Error::Invalid("comparison needs a pointwise or polynomial model".into()));
    }
    let d = discriminant(alpha)?;
    let zero = d.is_zero();
    let zero_divisor = d.is_zero_divisor()?;
    let boundary = silov_boundary(&function_span(a), tol)?;
    let topological = is_topological_zero_divisor(&d, &boundary)?;
    let verdict = if zero || zero_divisor {
        Verdict::TractabilityFails
    } else if topological.verdict {
        Verdict::NotIsomorphic
    } else {
        Verdict::TopologicallyIsomorphic
    };
    Ok(Comparison {
        discriminant: d,
        discriminant_is_zero: zero,
        discriminant_is_zero_divisor: zero_divisor,
        boundary,
        topological,
        verdict,
    })
}
