use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

/// Singular values below this count as zero: `σ_max · max(rows, cols) · rel_tol`.
pub fn rank_threshold(singular: &DVector<f64>, rows: usize, cols: usize, rel_tol: f64) -> f64 {
    let smax = singular.iter().cloned().fold(0.0_f64, f64::max);
    smax * rows.max(cols) as f64 * rel_tol
}

pub fn numerical_rank(m: &DMatrix<C64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let thr = rank_threshold(&sv, m.nrows(), m.ncols(), rel_tol);
    sv.iter().filter(|&&s| s > thr).count()
}

/// Orthonormal basis of the kernel of `m`; empty when `m` has full column rank.
pub fn null_space(m: &DMatrix<C64>, rel_tol: f64) -> Vec<DVector<C64>> {
    let cols = m.ncols();
    if cols == 0 {
        return Vec::new();
    }
    // The thin SVD only yields min(rows, cols) right singular vectors, so pad
    // short matrices with zero rows.
    let work = if m.nrows() < cols {
        let mut padded = DMatrix::<C64>::zeros(cols, cols);
        padded.rows_mut(0, m.nrows()).copy_from(m);
        padded
    } else {
        m.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let thr = rank_threshold(&svd.singular_values, m.nrows(), cols, rel_tol);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= thr)
        .map(|(i, _)| v_t.row(i).transpose().map(|z| z.conj()))
        .collect()
}

/// Orthonormal basis of the span of `vectors` (modified Gram-Schmidt with
/// re-orthogonalization); vectors whose residual falls below `rel_tol`
/// times their original length are dropped.
pub fn orthonormalize(vectors: &[DVector<C64>], rel_tol: f64) -> Vec<DVector<C64>> {
    let mut basis: Vec<DVector<C64>> = Vec::new();
    for v in vectors {
        if let Some(q) = residual_direction(&basis, v, rel_tol) {
            basis.push(q);
        }
    }
    basis
}

/// Component of `v` orthogonal to an orthonormal `basis`, normalized, or
/// `None` when it is numerically inside the span.
pub fn residual_direction(
    basis: &[DVector<C64>],
    v: &DVector<C64>,
    rel_tol: f64,
) -> Option<DVector<C64>> {
    let original = v.norm();
    if original == 0.0 {
        return None;
    }
    let mut w = v.clone();
    for _ in 0..2 {
        for q in basis {
            let proj = q.dotc(&w);
            w -= q * proj;
        }
    }
    let r = w.norm();
    if r <= rel_tol * original {
        None
    } else {
        Some(w / C64::new(r, 0.0))
    }
}
