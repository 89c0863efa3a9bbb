use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::gelfand::Character;
use crate::numerics::simplex::representing_measure_exists;
use crate::tolerance::{ToleranceProfile, TOPOLOGICAL_ZERO_REL_TOL};

/// Relative slack when checking that a maximum is attained on a subset.
const ATTAIN_REL_TOL: f64 = 1e-9;

/// The designated function space of a ground model: the canonical basis
/// (indicator functions, or the monomials `1, z, ..., z^D`).
pub fn function_span(a: &Algebra) -> Vec<Element> {
    a.basis()
}

/// Values of ground-model elements at every point: `out[f][p]`.
pub fn point_values(functions: &[Element]) -> Result<Vec<Vec<C64>>> {
    functions
        .iter()
        .map(|f| {
            if f.owner().depth() != 0 {
                return Err(Error::Invalid("boundaries are computed on pointwise or polynomial models".into()));
            }
            (0..f.owner().points().len())
                .map(|p| Character::point(p).evaluate(f))
                .collect()
        })
        .collect()
}

/// The minimal boundary of the span of `functions` (all on one ground model).
pub fn silov_boundary(functions: &[Element], tol: &ToleranceProfile) -> Result<Vec<usize>> {
    let first = functions.first().ok_or_else(|| Error::Invalid("empty function space".into()))?;
    if functions.iter().any(|f| !f.owner().same(first.owner())) {
        return Err(Error::OwnerMismatch);
    }
    let values = point_values(functions)?;
    Ok(silov_boundary_values(&values, first.owner().points().len(), tol))
}

/// Greedy removal: drop each point, in order, whose evaluation has a
/// probability representing measure on the points still kept. A point that
/// survives can never become removable later (the support only shrinks),
/// and representing measures compose, so one pass reaches the minimal
/// boundary whatever the order.
pub fn silov_boundary_values(values: &[Vec<C64>], n_points: usize, tol: &ToleranceProfile) -> Vec<usize> {
    let mut kept: Vec<usize> = (0..n_points).collect();
    for p in 0..n_points {
        let others: Vec<usize> = kept.iter().copied().filter(|&q| q != p).collect();
        if representing_measure_exists(p, &others, values, tol.lp_feas_tol) {
            kept = others;
        }
    }
    kept
}

/// Whether every function attains its maximum modulus on `subset`.
pub fn attains_maxima(values: &[Vec<C64>], subset: &[usize]) -> bool {
    values.iter().all(|f| {
        let total = f.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let on_subset = subset.iter().map(|&p| f[p].norm()).fold(0.0, f64::max);
        on_subset >= total - ATTAIN_REL_TOL * total.max(1.0)
    })
}

/// No point of `subset` is represented by a measure on the rest of it.
pub fn is_minimal_boundary(values: &[Vec<C64>], subset: &[usize], tol: &ToleranceProfile) -> bool {
    subset.iter().all(|&p| {
        let rest: Vec<usize> = subset.iter().copied().filter(|&q| q != p).collect();
        !representing_measure_exists(p, &rest, values, tol.lp_feas_tol)
    })
}

/// The boundary-minimum test for topological zero divisors, with every
/// number it used.
#[derive(Debug, Clone, PartialEq)]
pub struct TopologicalZeroDivisor {
    pub boundary_min: f64,
    /// The boundary point where the minimum is attained.
    pub argmin: usize,
    pub threshold: f64,
    pub verdict: bool,
}

/// `d` is a topological zero divisor when it (numerically) vanishes
/// somewhere on the boundary: `min |d| ≤ 1e-6 · ‖d‖`.
pub fn is_topological_zero_divisor(d: &Element, boundary: &[usize]) -> Result<TopologicalZeroDivisor> {
    if boundary.is_empty() {
        return Err(Error::Invalid("empty boundary".into()));
    }
    let values = &point_values(std::slice::from_ref(d))?[0];
    let (argmin, boundary_min) = boundary
        .iter()
        .map(|&p| (p, values[p].norm()))
        .fold((boundary[0], f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
    let threshold = TOPOLOGICAL_ZERO_REL_TOL * d.norm();
    Ok(TopologicalZeroDivisor { boundary_min, argmin, threshold, verdict: boundary_min <= threshold })
}
