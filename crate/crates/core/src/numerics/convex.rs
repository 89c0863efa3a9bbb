//! Minimization of the algebra norm over an affine subspace.
//!
//! The norm is convex but not smooth, so the minimization uses the central-cut
//! ellipsoid method with subgradients taken from norming functionals. Each
//! cut also yields a lower bound, which certifies the returned value.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::numerics::linalg::orthonormalize;

const MAX_ITER_PER_DIM2: usize = 2_000;

#[derive(Debug, Clone)]
pub struct MinNorm {
    /// Best value found (an upper bound for the infimum).
    pub value: f64,
    /// Certified lower bound for the infimum.
    pub lower_bound: f64,
    /// The minimizing element `b + k`.
    pub minimizer: Element,
    pub iterations: usize,
}

impl MinNorm {
    pub fn gap(&self) -> f64 {
        self.value - self.lower_bound
    }
}

/// `inf { ‖b + k‖ : k ∈ span(subspace) }`, to within `tol` of a certified bound.
pub fn affine_min_norm(b: &Element, subspace: &[Element], tol: f64) -> Result<MinNorm> {
    if subspace.iter().any(|k| !k.owner().same(b.owner())) {
        return Err(Error::OwnerMismatch);
    }
    let (b_norm, _) = b.norm_with_functional();
    let dirs: Vec<DVector<C64>> = orthonormalize(
        &subspace
            .iter()
            .map(|k| DVector::from_column_slice(k.data()))
            .collect::<Vec<_>>(),
        1e-10,
    );
    if dirs.is_empty() || b_norm == 0.0 {
        return Ok(MinNorm {
            value: b_norm,
            lower_bound: b_norm,
            minimizer: b.clone(),
            iterations: 0,
        });
    }
    let owner = b.owner().clone();
    let base = DVector::from_column_slice(b.data());
    let k = dirs.len();
    let n = 2 * k;

    // Any minimizer satisfies ‖K c‖ ≤ 2‖b‖, hence |c|_2 ≤ 2 C ‖b‖ for orthonormal K.
    let radius = 2.0 * owner.coord_bound() * b_norm * (1.0 + 1e-9) + 1e-12;

    let point = |x: &DVector<f64>| -> DVector<C64> {
        let mut v = base.clone();
        for (j, d) in dirs.iter().enumerate() {
            v += d * C64::new(x[2 * j], x[2 * j + 1]);
        }
        v
    };
    let evaluate = |x: &DVector<f64>| -> (f64, DVector<f64>, DVector<C64>) {
        let v = point(x);
        let e = owner
            .element(v.iter().cloned().collect())
            .expect("dimension preserved");
        let (val, functional) = e.norm_with_functional();
        let phi = DVector::from_vec(functional);
        let mut g = DVector::<f64>::zeros(n);
        for (j, d) in dirs.iter().enumerate() {
            let s: C64 = phi.iter().zip(d.iter()).map(|(w, x)| w * x).sum();
            g[2 * j] = s.re;
            g[2 * j + 1] = -s.im;
        }
        (val, g, v)
    };

    let mut x = DVector::<f64>::zeros(n);
    let mut p = DMatrix::<f64>::identity(n, n) * (radius * radius);
    let (mut best, _, mut best_v) = evaluate(&x);
    let mut lower = 0.0_f64;
    let nf = n as f64;
    let max_iter = MAX_ITER_PER_DIM2 * n * n;
    let mut iterations = 0;

    while iterations < max_iter {
        iterations += 1;
        let (val, g, v) = evaluate(&x);
        if val < best {
            best = val;
            best_v = v;
        }
        let pg = &p * &g;
        let gpg = g.dot(&pg);
        if gpg <= 0.0 || !gpg.is_finite() {
            // Zero subgradient: x is a minimizer.
            lower = lower.max(val);
            break;
        }
        let width = gpg.sqrt();
        lower = lower.max(val - width);
        if best - lower <= tol {
            break;
        }
        let gt = &pg / width;
        x -= &gt * (1.0 / (nf + 1.0));
        p = (&p - (&gt * gt.transpose()) * (2.0 / (nf + 1.0))) * (nf * nf / (nf * nf - 1.0));
        // Keep P symmetric against drift.
        p = (&p + p.transpose()) * 0.5;
    }

    Ok(MinNorm {
        value: best,
        lower_bound: lower.min(best),
        minimizer: owner.element(best_v.iter().cloned().collect())?,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, PointSet};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn empty_subspace_returns_norm() {
        let alg = Algebra::pointwise(PointSet::labelled(2));
        let b = alg.element(vec![c(3.0, 0.0), c(0.0, -4.0)]).unwrap();
        let r = affine_min_norm(&b, &[], 1e-8).unwrap();
        assert_eq!(r.value, 4.0);
    }

    #[test]
    fn member_of_subspace_goes_to_zero() {
        let alg = Algebra::pointwise(PointSet::labelled(3));
        let b = alg.element(vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        let r = affine_min_norm(&b, &[b.scale(c(0.5, 0.0))], 1e-8).unwrap();
        assert!(r.value < 1e-8 && r.gap() <= 1e-8);
    }

    #[test]
    fn sup_norm_against_antisymmetric_direction() {
        // min over complex s of max(|1 + s|, |1 - s|) = 1 at s = 0.
        let alg = Algebra::pointwise(PointSet::labelled(2));
        let b = alg.element(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let k = alg.element(vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let r = affine_min_norm(&b, &[k], 1e-8).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8, "{}", r.value);
        assert!(r.lower_bound > 1.0 - 1e-8);
    }
}
