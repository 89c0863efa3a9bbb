//! Helpers and independent oracles shared by the integration tests.
#![allow(dead_code)]

use algext::extension::StandardTower;
use algext::poly::MonicPoly;
use algext::{Algebra, Element, PointSet, C64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn random_c(rng: &mut ChaCha8Rng) -> C64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    alg.element((0..alg.dim()).map(|_| random_c(rng)).collect())
        .expect("dimension matches")
}

pub fn random_monic(owner: &Algebra, degree: usize, rng: &mut ChaCha8Rng) -> MonicPoly {
    let lower = (0..degree).map(|_| random_element(owner, rng)).collect();
    MonicPoly::new(owner.clone(), lower).expect("valid coefficients")
}

/// Polynomial model on `boundary` equispaced points of the unit circle
/// (starting at 1) followed by `interior`.
pub fn disc_algebra(boundary: usize, interior: &[C64], degree: usize) -> Algebra {
    let mut coords: Vec<C64> = (0..boundary)
        .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / boundary as f64))
        .collect();
    coords.extend_from_slice(interior);
    Algebra::poly_model(PointSet::with_coords(coords).expect("distinct points"), degree).expect("valid model")
}

pub fn dense_circle_max(f: impl Fn(C64) -> C64, samples: usize) -> f64 {
    (0..samples)
        .map(|j| f(C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / samples as f64)).norm())
        .fold(0.0, f64::max)
}

/// Entries agree to `tol`, relative to their size once it exceeds one.
pub fn same_vector(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * y.norm().max(1.0))
}

fn horner(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().rev().fold(c(0.0, 0.0), |acc, a| acc * z + a)
}

/// Roots of the monic polynomial with lower coefficients `lower` by
/// Weierstrass iteration and Newton polishing, near-equal roots merged.
pub fn weierstrass_roots(lower: &[C64]) -> Vec<C64> {
    let n = lower.len();
    let mut full = lower.to_vec();
    full.push(c(1.0, 0.0));
    let radius = 1.0 + lower.iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = c(0.4, 0.9);
    let mut z: Vec<C64> = (0..n).map(|i| seed.powu(i as u32) * radius).collect();
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let mut denom = c(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = horner(&full, z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    let deriv: Vec<C64> = (1..full.len()).map(|k| full[k] * k as f64).collect();
    for r in z.iter_mut() {
        for _ in 0..3 {
            let d = horner(&deriv, *r);
            if d.norm() > 1e-8 {
                *r -= horner(&full, *r) / d;
            }
        }
    }
    let mut out: Vec<C64> = Vec::new();
    for r in z {
        if !out.iter().any(|o| (o - r).norm() <= 1e-6) {
            out.push(r);
        }
    }
    out
}

/// Characters of the top of `tower` as value vectors on its canonical basis,
/// built layer by layer from root enumeration and checked for
/// multiplicativity on random basis pairs.
pub fn oracle_characters(tower: &StandardTower, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<C64>>, String> {
    let ground = tower.ground();
    let mut funcs: Vec<Vec<C64>> = (0..ground.dim())
        .map(|p| (0..ground.dim()).map(|q| c(if p == q { 1.0 } else { 0.0 }, 0.0)).collect())
        .collect();
    for (k, alpha) in tower.polys().iter().enumerate() {
        let below = &tower.layers()[k];
        let lifted: Vec<Element> = alpha
            .lower_coeffs()
            .iter()
            .map(|a| below.lift(a).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let mut next = Vec::new();
        for w in &funcs {
            let scalar: Vec<C64> = lifted
                .iter()
                .map(|a| w.iter().zip(a.data()).map(|(x, y)| x * y).sum())
                .collect();
            for r in weierstrass_roots(&scalar) {
                let mut v = Vec::with_capacity(w.len() * scalar.len());
                let mut power = c(1.0, 0.0);
                for _ in 0..scalar.len() {
                    v.extend(w.iter().map(|x| x * power));
                    power *= r;
                }
                next.push(v);
            }
        }
        funcs = next;
    }
    let top = tower.top();
    let dim = top.dim();
    let eval = |w: &[C64], e: &Element| -> C64 { w.iter().zip(e.data()).map(|(x, y)| x * y).sum() };
    for w in &funcs {
        let one = eval(w, &top.one());
        if (one - 1.0).norm() > 1e-9 {
            return Err(format!("oracle functional has value {one} at 1"));
        }
        for _ in 0..20 {
            let (i, j) = (rng.random_range(0..dim), rng.random_range(0..dim));
            let (bi, bj) = (top.basis_element(i), top.basis_element(j));
            let prod = bi.checked_mul(&bj).map_err(|e| e.to_string())?;
            let lhs = eval(w, &prod);
            let rhs = eval(w, &bi) * eval(w, &bj);
            if (lhs - rhs).norm() > 1e-7 * rhs.norm().max(1.0) {
                return Err(format!("oracle functional not multiplicative: {lhs} vs {rhs}"));
            }
        }
    }
    Ok(funcs)
}
