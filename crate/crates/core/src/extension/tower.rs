use crate::algebra::{Algebra, Element, Homomorphism};
use crate::error::{Error, Result};
use crate::gelfand::{characters_with, Character};
use crate::numerics::roots::complex_roots;
use crate::poly::MonicPoly;
use crate::tolerance::ToleranceProfile;

use super::{ah_extend, NormParameter};

#[derive(Debug, Clone, Default)]
pub struct TowerOptions {
    /// Per-layer parameters; missing or `None` entries use the minimal `t`.
    pub params: Vec<Option<NormParameter>>,
    /// Accept coefficients from intermediate layers instead of only the ground.
    pub layer_coefficients: bool,
}

/// A finite chain `A = B_0 ⊂ B_1 ⊂ ... ⊂ B_m` of extensions, layer `k+1`
/// adjoining a root of the `k`-th polynomial.
#[derive(Debug, Clone)]
pub struct StandardTower {
    layers: Vec<Algebra>,
    polys: Vec<MonicPoly>,
}

/// Extend `a` by each polynomial in turn, lifting coefficients into the
/// current top layer. By default every coefficient must live in `a`.
pub fn standard_extend(a: &Algebra, polys: &[MonicPoly], options: &TowerOptions) -> Result<StandardTower> {
    let mut tower = StandardTower::new(a);
    for (k, alpha) in polys.iter().enumerate() {
        let param = options.params.get(k).copied().flatten();
        tower.push(alpha, param, options.layer_coefficients)?;
    }
    Ok(tower)
}

impl StandardTower {
    /// The trivial tower consisting of `a` alone.
    pub fn new(a: &Algebra) -> Self {
        StandardTower { layers: vec![a.clone()], polys: Vec::new() }
    }

    /// Adjoin a root of `alpha` on top. Coefficients from layers above the
    /// ground are accepted only with `layer_coefficients`.
    pub fn push(&mut self, alpha: &MonicPoly, param: Option<NormParameter>, layer_coefficients: bool) -> Result<()> {
        let k = self.polys.len();
        match self.layers.iter().position(|l| l.same(alpha.owner())) {
            Some(0) => {}
            Some(_) if layer_coefficients => {}
            Some(j) => {
                return Err(Error::LayerMismatch(format!(
                    "polynomial {k} has coefficients in layer {j}; only ground coefficients are allowed"
                )))
            }
            None => return Err(Error::OwnerMismatch),
        }
        let top = self.top().clone();
        let lifted = alpha.lift_to(&top)?;
        self.layers.push(ah_extend(&top, &lifted, param)?);
        self.polys.push(alpha.clone());
        Ok(())
    }

    pub fn ground(&self) -> &Algebra {
        &self.layers[0]
    }

    pub fn top(&self) -> &Algebra {
        self.layers.last().expect("non-empty")
    }

    /// `B_0 = A, B_1, ..., B_m`.
    pub fn layers(&self) -> &[Algebra] {
        &self.layers
    }

    pub fn layer(&self, k: usize) -> Result<&Algebra> {
        self.layers
            .get(k)
            .ok_or_else(|| Error::LayerMismatch(format!("tower has no layer {k}")))
    }

    pub fn polys(&self) -> &[MonicPoly] {
        &self.polys
    }

    /// Number of adjoined roots.
    pub fn height(&self) -> usize {
        self.layers.len() - 1
    }

    /// The composed embedding `B_from → B_to`.
    pub fn embedding(&self, from: usize, to: usize) -> Result<Homomorphism> {
        if from > to {
            return Err(Error::LayerMismatch(format!("cannot embed layer {from} into layer {to}")));
        }
        let mut map = Homomorphism::identity(self.layer(from)?);
        for k in from + 1..=to {
            map = map.then(&Homomorphism::embedding(self.layer(k)?)?)?;
        }
        Ok(map)
    }

    pub fn lift(&self, a: &Element, to: usize) -> Result<Element> {
        self.layer(to)?.lift(a)
    }

    pub fn characters(&self, tol: &ToleranceProfile) -> Result<Vec<Character>> {
        characters_with(self.top(), tol)
    }

    /// The tower layer a character belongs to.
    pub fn layer_of(&self, chi: &Character) -> Result<usize> {
        let base = self.ground().depth();
        chi.root_path
            .len()
            .checked_sub(base)
            .filter(|&k| k <= self.height())
            .ok_or_else(|| Error::LayerMismatch("character does not belong to this tower".into()))
    }

    /// `H ↦ H|_{B_target}`: truncate the root path.
    pub fn restrict_character(&self, chi: &Character, target: usize) -> Result<Character> {
        let layer = self.layer_of(chi)?;
        if target > layer {
            return Err(Error::LayerMismatch(format!(
                "cannot restrict a layer-{layer} character to layer {target}"
            )));
        }
        Ok(chi.truncate(self.ground().depth() + target))
    }

    /// Complete a character of some layer to the top of the tower, choosing
    /// at each further layer the root that is first in (real, imaginary) order.
    pub fn extend_character(&self, chi: &Character, tol: &ToleranceProfile) -> Result<Character> {
        let mut current = chi.clone();
        for k in self.layer_of(chi)?..self.height() {
            let alpha = &self.layers[k + 1].extension().expect("tower layers are extensions").alpha;
            let scalar = current.map_poly(alpha.lower_coeffs())?;
            let roots = complex_roots(&scalar, tol)?;
            current = current.extend(roots[0].value);
        }
        Ok(current)
    }
}
