//! Phase-one simplex for `A x = b, x ≥ 0` on small dense problems.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

const PIVOT_EPS: f64 = 1e-12;
const MAX_PIVOTS: usize = 20_000;
const NOISE_REL: f64 = 1e-13;

/// A feasible `x ≥ 0` with `A x = b`, if the phase-one optimum is within `tol`.
///
/// The data are scaled to unit max-norm first so that `tol` is relative, and
/// entries at rounding level are cleared so that constraints which hold
/// only up to rounding (for instance `Im z^k` at roots of unity) do not
/// become spurious. Entering columns follow Bland's rule, which rules out
/// cycling.
pub fn feasible_point(a: &DMatrix<f64>, b: &DVector<f64>, tol: f64) -> Option<DVector<f64>> {
    let (m, n) = (a.nrows(), a.ncols());
    assert_eq!(b.len(), m, "right-hand side length");
    if m == 0 {
        return Some(DVector::zeros(n));
    }

    // Tableau: m constraint rows plus the objective row; n + m variables + rhs.
    let width = n + m + 1;
    let mut t = DMatrix::<f64>::zeros(m + 1, width);
    let scale = a.iter().chain(b.iter()).fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let clean = |v: f64| if v.abs() <= NOISE_REL * scale { 0.0 } else { v / scale };
    for i in 0..m {
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[(i, j)] = sign * clean(a[(i, j)]);
        }
        t[(i, n + i)] = 1.0;
        t[(i, width - 1)] = sign * clean(b[i]);
    }
    for j in 0..width {
        if (n..n + m).contains(&j) {
            continue;
        }
        let s: f64 = (0..m).map(|i| t[(i, j)]).sum();
        t[(m, j)] = -s;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    for _ in 0..MAX_PIVOTS {
        let Some(enter) = (0..n + m).find(|&j| t[(m, j)] < -PIVOT_EPS) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            let coef = t[(i, enter)];
            if coef > PIVOT_EPS {
                let ratio = t[(i, width - 1)] / coef;
                let better = ratio < best - 1e-15
                    || (ratio <= best + 1e-15 && leave.is_some_and(|l| basis[i] < basis[l]));
                if leave.is_none() || better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else {
            // Unbounded direction cannot occur in phase one; stop defensively.
            break;
        };
        pivot(&mut t, row, enter);
        basis[row] = enter;
    }

    let objective = -t[(m, width - 1)];
    if objective > tol {
        return None;
    }
    let mut x = DVector::zeros(n);
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = t[(i, width - 1)].max(0.0);
        }
    }
    Some(x)
}

fn pivot(t: &mut DMatrix<f64>, row: usize, col: usize) {
    let p = t[(row, col)];
    let width = t.ncols();
    for j in 0..width {
        t[(row, j)] /= p;
    }
    for i in 0..t.nrows() {
        if i == row {
            continue;
        }
        let f = t[(i, col)];
        if f != 0.0 {
            for j in 0..width {
                let v = t[(row, j)];
                t[(i, j)] -= f * v;
            }
        }
    }
}

/// Whether evaluation at `target` has a probability representing measure
/// supported on `support` for the function space spanned by `functions`.
///
/// `functions[f][p]` is the value of basis function `f` at point `p`. The
/// constraints are `Σ w_j = 1` and `Σ w_j f(s_j) = f(target)` for each
/// basis function, split into real and imaginary parts.
pub fn representing_measure_exists(
    target: usize,
    support: &[usize],
    functions: &[Vec<C64>],
    tol: f64,
) -> bool {
    if support.is_empty() {
        return false;
    }
    if support.contains(&target) {
        return true;
    }
    let rows = 1 + 2 * functions.len();
    let mut a = DMatrix::<f64>::zeros(rows, support.len());
    let mut b = DVector::<f64>::zeros(rows);
    for (j, _) in support.iter().enumerate() {
        a[(0, j)] = 1.0;
    }
    b[0] = 1.0;
    for (f, values) in functions.iter().enumerate() {
        for (j, &s) in support.iter().enumerate() {
            a[(1 + 2 * f, j)] = values[s].re;
            a[(2 + 2 * f, j)] = values[s].im;
        }
        b[1 + 2 * f] = values[target].re;
        b[2 + 2 * f] = values[target].im;
    }
    feasible_point(&a, &b, tol).is_some()
}
