//! All complex roots of a monic polynomial by Aberth-Ehrlich iteration.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tolerance::{ToleranceProfile, ROOT_CLUSTER_TOL};

const MAX_SWEEPS: usize = 1000;

/// Clusters separated by less than this are candidates for a multiplicity merge.
const MERGE_RADIUS: f64 = 1e-5;
/// Taylor coefficients below this (relative) confirm a merged multiple root.
const MERGE_DERIV_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCluster {
    pub value: C64,
    pub multiplicity: usize,
}

/// Roots of `a_0 + a_1 x + ... + a_{n-1} x^{n-1} + x^n`, given `lower = [a_0, ..., a_{n-1}]`.
///
/// Roots within `1e-7` of each other are reported once with their
/// multiplicity. Slightly wider groups are also merged when the Taylor
/// coefficients at their centroid confirm a multiple root. Clusters come
/// back ordered by (real, imaginary) part.
pub fn complex_roots(lower: &[C64], tol: &ToleranceProfile) -> Result<Vec<RootCluster>> {
    let n = lower.len();
    if n == 0 {
        return Err(Error::DegenerateDegree(0));
    }
    let mut coeffs: Vec<C64> = lower.to_vec();
    coeffs.push(C64::new(1.0, 0.0));
    let scale = 1.0 + lower.iter().map(|c| c.norm()).sum::<f64>();

    let roots = if n == 1 {
        vec![-lower[0]]
    } else {
        aberth(&coeffs)?
    };

    let residual_bound = tol.root_tol * scale;
    for r in &roots {
        let res = horner(&coeffs, *r).norm();
        if !res.is_finite() || res > residual_bound {
            return Err(Error::NonConvergence { sweeps: MAX_SWEEPS });
        }
    }

    let mut clusters = cluster(&roots, ROOT_CLUSTER_TOL);
    merge_multiple(&coeffs, &mut clusters, scale);
    clusters.sort_by(|a, b| {
        a.value
            .re
            .partial_cmp(&b.value.re)
            .unwrap()
            .then(a.value.im.partial_cmp(&b.value.im).unwrap())
    });
    Ok(clusters)
}

/// Flatten clusters back into a multiset of `n` roots.
pub fn expand_multiset(clusters: &[RootCluster]) -> Vec<C64> {
    clusters
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.value, c.multiplicity))
        .collect()
}

fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn aberth(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len() - 1;
    // Fujiwara-style radius for the starting circle.
    let radius = coeffs[..n]
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm().powf(1.0 / (n - k) as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            C64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut max_step = 0.0_f64;
        for k in 0..n {
            let (p, dp) = horner_with_derivative(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = if dp.norm() == 0.0 {
                // Nudge off a critical point.
                C64::new(1e-8 * (1.0 + z[k].norm()), 0.0)
            } else {
                p / dp
            };
            let repulsion: C64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.norm() == 0.0 {
                        C64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = C64::new(1.0, 0.0) - ratio * repulsion;
            let step = if denom.norm() == 0.0 { ratio } else { ratio / denom };
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if max_step < 1e-15 {
            return Ok(z);
        }
    }
    // Multiple roots converge linearly; the residual check in the caller
    // decides whether the final iterate is acceptable.
    Ok(z)
}

fn cluster(roots: &[C64], radius: f64) -> Vec<RootCluster> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<(usize, C64, usize)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => {
                g.1 += roots[i];
                g.2 += 1;
            }
            None => groups.push((r, roots[i], 1)),
        }
    }
    groups
        .into_iter()
        .map(|(_, sum, m)| RootCluster {
            value: sum / m as f64,
            multiplicity: m,
        })
        .collect()
}

/// Taylor coefficients of the polynomial around `m`, lowest first.
fn taylor_shift(coeffs: &[C64], m: C64) -> Vec<C64> {
    let mut work = coeffs.to_vec();
    let n = work.len();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        // Synthetic division by (x - m); the remainder is the next Taylor coefficient.
        let mut carry = C64::new(0.0, 0.0);
        let mut quotient = vec![C64::new(0.0, 0.0); work.len().saturating_sub(1)];
        for i in (0..work.len()).rev() {
            let v = work[i] + carry * m;
            if i == 0 {
                out.push(v);
            } else {
                quotient[i - 1] = v;
            }
            carry = v;
        }
        work = quotient;
        if work.is_empty() {
            break;
        }
    }
    out
}

fn merge_multiple(coeffs: &[C64], clusters: &mut Vec<RootCluster>, scale: f64) {
    loop {
        let mut merged = false;
        'outer: for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let (a, b) = (clusters[i], clusters[j]);
                if (a.value - b.value).norm() > MERGE_RADIUS * (1.0 + a.value.norm()) {
                    continue;
                }
                let k = a.multiplicity + b.multiplicity;
                let centroid = (a.value * a.multiplicity as f64 + b.value * b.multiplicity as f64)
                    / k as f64;
                let taylor = taylor_shift(coeffs, centroid);
                let bound = MERGE_DERIV_TOL * scale * (1.0 + centroid.norm()).powi(coeffs.len() as i32);
                if taylor.iter().take(k).all(|c| c.norm() <= bound) {
                    clusters[i] = RootCluster {
                        value: centroid,
                        multiplicity: k,
                    };
                    clusters.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
}
