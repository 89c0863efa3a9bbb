//! Characters, the Gelfand matrix, radicals and spectral radii.
//!
//! On these finite-dimensional models every maximal ideal is closed, so
//! "tractable" and "semisimple" coincide and are reported as one verdict.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Backend, Element};
use crate::error::{Error, Result};
use crate::numerics::linalg::null_space;
use crate::numerics::roots::complex_roots;
use crate::tolerance::{ToleranceProfile, CHARACTER_MERGE_TOL};

/// A multiplicative functional: a ground point plus one root per layer.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub base_point: usize,
    pub root_path: Vec<C64>,
}

impl Character {
    pub fn point(base_point: usize) -> Self {
        Character { base_point, root_path: Vec::new() }
    }

    /// The character one layer up sending `x̄` to `root`.
    pub fn extend(&self, root: C64) -> Self {
        let mut root_path = self.root_path.clone();
        root_path.push(root);
        Character { base_point: self.base_point, root_path }
    }

    /// The restriction to the layer `depth` levels above the ground.
    pub fn truncate(&self, depth: usize) -> Self {
        Character {
            base_point: self.base_point,
            root_path: self.root_path[..depth.min(self.root_path.len())].to_vec(),
        }
    }

    /// Row vector `w` with `H(a) = Σ w_i a_i` in the canonical basis of `alg`.
    pub fn functional(&self, alg: &Algebra) -> Result<Vec<C64>> {
        if self.root_path.len() != alg.depth() {
            return Err(Error::LayerMismatch(format!(
                "character has {} roots, algebra has {} layers",
                self.root_path.len(),
                alg.depth()
            )));
        }
        if self.base_point >= alg.points().len() {
            return Err(Error::Invalid(format!("no ground point {}", self.base_point)));
        }
        match alg.backend() {
            Backend::Pointwise(p) => {
                let mut w = vec![C64::new(0.0, 0.0); p.len()];
                w[self.base_point] = C64::new(1.0, 0.0);
                Ok(w)
            }
            Backend::PolyModel { points, degree } => {
                let z = points.coords().expect("validated at construction")[self.base_point];
                Ok((0..=*degree).map(|j| z.powu(j as u32)).collect())
            }
            Backend::Extension(e) => {
                let depth = self.root_path.len();
                let lambda = self.root_path[depth - 1];
                let below = self.truncate(depth - 1).functional(&e.base)?;
                let mut w = Vec::with_capacity(alg.dim());
                let mut power = C64::new(1.0, 0.0);
                for _ in 0..e.degree() {
                    w.extend(below.iter().map(|x| x * power));
                    power *= lambda;
                }
                Ok(w)
            }
        }
    }

    pub fn evaluate(&self, a: &Element) -> Result<C64> {
        let w = self.functional(a.owner())?;
        Ok(w.iter().zip(a.data()).map(|(x, y)| x * y).sum())
    }

    /// Coefficients `h(a_0), ..., h(a_{n-1})` of a polynomial mapped by this character.
    pub fn map_poly(&self, coeffs: &[Element]) -> Result<Vec<C64>> {
        coeffs.iter().map(|c| self.evaluate(c)).collect()
    }
}

/// All characters of `alg` with default tolerances.
pub fn characters(alg: &Algebra) -> Result<Vec<Character>> {
    characters_with(alg, &ToleranceProfile::default())
}

/// All characters: one per ground point, then for every extension layer the
/// distinct roots of the base character applied to the defining polynomial.
/// Characters whose values on the basis agree within `1e-8` are merged.
pub fn characters_with(alg: &Algebra, tol: &ToleranceProfile) -> Result<Vec<Character>> {
    let raw = match alg.backend() {
        Backend::Pointwise(p) => (0..p.len()).map(Character::point).collect(),
        Backend::PolyModel { points, .. } => (0..points.len()).map(Character::point).collect(),
        Backend::Extension(e) => {
            let mut out = Vec::new();
            for h in characters_with(&e.base, tol)? {
                let scalar = h.map_poly(e.alpha.lower_coeffs())?;
                for cluster in complex_roots(&scalar, tol)? {
                    out.push(h.extend(cluster.value));
                }
            }
            out
        }
    };
    merge(alg, raw)
}

fn merge(alg: &Algebra, raw: Vec<Character>) -> Result<Vec<Character>> {
    let mut kept: Vec<(Character, Vec<C64>)> = Vec::with_capacity(raw.len());
    for chi in raw {
        let w = chi.functional(alg)?;
        let duplicate = kept
            .iter()
            .any(|(_, v)| v.iter().zip(&w).all(|(a, b)| (a - b).norm() <= CHARACTER_MERGE_TOL));
        if !duplicate {
            kept.push((chi, w));
        }
    }
    Ok(kept.into_iter().map(|(c, _)| c).collect())
}

/// Rows are characters, columns basis elements: entry `(H, e) = H(e)`.
pub fn gelfand_matrix(alg: &Algebra, chars: &[Character]) -> Result<DMatrix<C64>> {
    let mut m = DMatrix::zeros(chars.len(), alg.dim());
    for (i, chi) in chars.iter().enumerate() {
        let w = chi.functional(alg)?;
        for (j, v) in w.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// An orthonormal basis (in coordinates) of the kernel of the Gelfand
/// transform, which on a finite-dimensional algebra is the radical.
pub fn radical(alg: &Algebra) -> Result<Vec<Element>> {
    radical_with(alg, &ToleranceProfile::default())
}

pub fn radical_with(alg: &Algebra, tol: &ToleranceProfile) -> Result<Vec<Element>> {
    let chars = characters_with(alg, tol)?;
    radical_from(alg, &chars, tol)
}

pub(crate) fn radical_from(alg: &Algebra, chars: &[Character], tol: &ToleranceProfile) -> Result<Vec<Element>> {
    let g = gelfand_matrix(alg, chars)?;
    if chars.is_empty() {
        return Ok(alg.basis());
    }
    null_space(&g, tol.rank_rel_tol)
        .into_iter()
        .map(|v| alg.element(v.iter().cloned().collect()))
        .collect()
}

pub fn is_tractable(alg: &Algebra) -> Result<bool> {
    Ok(radical(alg)?.is_empty())
}

pub fn is_tractable_with(alg: &Algebra, tol: &ToleranceProfile) -> Result<bool> {
    Ok(radical_with(alg, tol)?.is_empty())
}

/// `max |H(a)|` over all characters.
pub fn spectral_radius(a: &Element) -> Result<f64> {
    let chars = characters(a.owner())?;
    let mut best: f64 = 0.0;
    for chi in &chars {
        best = best.max(chi.evaluate(a)?.norm());
    }
    Ok(best)
}

/// `‖a^{2^k}‖^{1/2^k}` after `doublings` squarings, renormalizing each step
/// so large and small spectra do not overflow. Needs a multiplicatively
/// closed backend.
pub fn spectral_radius_estimate(a: &Element, doublings: u32) -> Result<f64> {
    let n0 = a.norm();
    if n0 == 0.0 {
        return Ok(0.0);
    }
    let mut y = a.scale(C64::new(1.0 / n0, 0.0));
    let mut log_scale = n0.ln();
    for _ in 0..doublings {
        let sq = y.checked_mul(&y)?;
        let s = sq.norm();
        if s == 0.0 {
            return Ok(0.0);
        }
        y = sq.scale(C64::new(1.0 / s, 0.0));
        log_scale = 2.0 * log_scale + s.ln();
    }
    Ok((log_scale / 2f64.powi(doublings as i32)).exp())
}
