use nalgebra::DVector;
use num_complex::Complex64 as C64;

use super::{ground_values, require_ground, ColeAlgebra, FiberPoint};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::tolerance::ToleranceProfile;

/// Two full coordinates agree when every entry is this close.
const COORD_MATCH_TOL: f64 = 1e-9;

/// One summand of a stage coefficient.
#[derive(Debug, Clone)]
pub enum StageTerm {
    /// An element of the ground algebra, pulled back to the current stage.
    Ground(Element),
    /// A multiple of a root function of the previous stage.
    Root { index: usize, scale: C64 },
    Constant(C64),
}

/// A monic polynomial whose coefficients `a_0, ..., a_{n-1}` are sums of terms.
#[derive(Debug, Clone)]
pub struct StagePoly {
    pub lower: Vec<Vec<StageTerm>>,
}

/// Finitely many Cole stages `A ⊂ A_1 ⊂ ... ⊂ A_m`; stage `k` adjoins roots
/// of polynomials whose coefficients lie in stage `k-1`.
#[derive(Debug, Clone)]
pub struct ColeTower {
    ground: Algebra,
    stages: Vec<ColeAlgebra>,
}

/// Build the first `depth` stages of `stage_specs` over `a`.
pub fn cole_tower(
    a: &Algebra,
    stage_specs: &[Vec<StagePoly>],
    depth: usize,
    tol: &ToleranceProfile,
) -> Result<ColeTower> {
    if depth == 0 || depth > stage_specs.len() {
        return Err(Error::Invalid(format!(
            "depth {depth} needs between 1 and {} stage specifications",
            stage_specs.len()
        )));
    }
    let mut tower = ColeTower::new(a)?;
    for polys in &stage_specs[..depth] {
        tower.push_stage(polys, tol)?;
    }
    Ok(tower)
}

impl ColeTower {
    pub fn new(a: &Algebra) -> Result<Self> {
        require_ground(a)?;
        Ok(ColeTower { ground: a.clone(), stages: Vec::new() })
    }

    pub fn ground(&self) -> &Algebra {
        &self.ground
    }

    /// Number of stages above the ground.
    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    /// Stage `k ≥ 1`.
    pub fn stage(&self, k: usize) -> Result<&ColeAlgebra> {
        k.checked_sub(1)
            .and_then(|i| self.stages.get(i))
            .ok_or_else(|| Error::LayerMismatch(format!("tower has no stage {k}")))
    }

    /// Number of points of stage `k` (stage 0 is the ground).
    pub fn size(&self, k: usize) -> Result<usize> {
        if k == 0 {
            Ok(self.ground.points().len())
        } else {
            Ok(self.stage(k)?.space().len())
        }
    }

    fn resolve(&self, coeff: &[StageTerm]) -> Result<Vec<C64>> {
        let k = self.depth();
        let n = self.size(k)?;
        let ground_map = self.projection(k, 0)?;
        let mut out = vec![C64::new(0.0, 0.0); n];
        for term in coeff {
            match term {
                StageTerm::Ground(e) => {
                    let g = ground_values(&self.ground, e)?;
                    for (v, &p) in out.iter_mut().zip(&ground_map) {
                        *v += g[p];
                    }
                }
                StageTerm::Root { index, scale } => {
                    let p = self.stage(k)?.root_function(*index)?;
                    for (v, r) in out.iter_mut().zip(p.data()) {
                        *v += r * scale;
                    }
                }
                StageTerm::Constant(c) => out.iter_mut().for_each(|v| *v += c),
            }
        }
        Ok(out)
    }

    /// Adjoin roots of `polys`, whose coefficients must lie in the current top stage.
    pub fn push_stage(&mut self, polys: &[StagePoly], tol: &ToleranceProfile) -> Result<()> {
        if polys.is_empty() {
            return Err(Error::Invalid("a stage needs at least one polynomial".into()));
        }
        let k = self.depth();
        let mut coeffs = Vec::with_capacity(polys.len());
        for poly in polys {
            if poly.lower.is_empty() {
                return Err(Error::DegenerateDegree(0));
            }
            let values = poly
                .lower
                .iter()
                .map(|c| self.resolve(c))
                .collect::<Result<Vec<_>>>()?;
            if k > 0 {
                let top = self.stage(k)?;
                for v in &values {
                    if !top.contains(&top.ambient().element(v.clone())?)? {
                        return Err(Error::Invalid(format!(
                            "a stage-{} coefficient is not in the stage-{k} algebra",
                            k + 1
                        )));
                    }
                }
            }
            coeffs.push(values);
        }
        let stage = if k == 0 {
            let base_functions = self
                .ground
                .basis()
                .iter()
                .map(|e| ground_values(&self.ground, e))
                .collect::<Result<Vec<_>>>()?;
            let mut alg = ColeAlgebra::build(self.ground.points().labels().to_vec(), &base_functions, coeffs, tol)?;
            alg.base = Some(self.ground.clone());
            alg
        } else {
            let top = self.stage(k)?;
            let base_functions: Vec<Vec<C64>> = top.basis().iter().map(|b| b.iter().cloned().collect()).collect();
            ColeAlgebra::build(top.ambient().points().labels().to_vec(), &base_functions, coeffs, tol)?
        };
        self.stages.push(stage);
        Ok(())
    }

    /// `π_{to,from}` as point indices: entry `i` is the image of point `i` of stage `from`.
    pub fn projection(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        if to > from {
            return Err(Error::LayerMismatch(format!("no projection from stage {from} to stage {to}")));
        }
        let mut map: Vec<usize> = (0..self.size(from)?).collect();
        for k in (to + 1..=from).rev() {
            let step: Vec<usize> = self.stage(k)?.space().iter().map(|q| q.base).collect();
            map = map.into_iter().map(|i| step[i]).collect();
        }
        Ok(map)
    }

    /// Ground point and the roots chosen at every stage up to `k`.
    pub fn full_coordinates(&self, k: usize, i: usize) -> Result<(usize, Vec<Vec<C64>>)> {
        let mut roots = Vec::with_capacity(k);
        let mut idx = i;
        for s in (1..=k).rev() {
            let q: &FiberPoint = self
                .stage(s)?
                .space()
                .get(idx)
                .ok_or_else(|| Error::Invalid(format!("stage {s} has no point {idx}")))?;
            roots.push(q.roots.clone());
            idx = q.base;
        }
        roots.reverse();
        Ok((idx, roots))
    }

    /// The projection to stage `to` found by matching coordinate prefixes,
    /// independently of the stored single-step maps.
    fn projection_by_coordinates(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        let targets = (0..self.size(to)?)
            .map(|j| self.full_coordinates(to, j))
            .collect::<Result<Vec<_>>>()?;
        (0..self.size(from)?)
            .map(|i| {
                let (g, roots) = self.full_coordinates(from, i)?;
                targets
                    .iter()
                    .position(|(tg, troots)| {
                        *tg == g
                            && troots.iter().zip(&roots).all(|(a, b)| {
                                a.iter().zip(b).all(|(x, y)| (x - y).norm() <= COORD_MATCH_TOL)
                            })
                    })
                    .ok_or_else(|| Error::Invalid(format!("stage-{from} point {i} has no stage-{to} image")))
            })
            .collect()
    }

    /// `π_{a,c} = π_{a,b} ∘ π_{b,c}` for all `a ≤ b ≤ c`, each side matched
    /// against coordinate truncation.
    pub fn projections_compatible(&self) -> Result<bool> {
        let m = self.depth();
        for c in 0..=m {
            for b in 0..=c {
                let direct = self.projection_by_coordinates(c, b)?;
                if direct != self.projection(c, b)? {
                    return Ok(false);
                }
                for a in 0..=b {
                    let outer = self.projection(b, a)?;
                    let composed: Vec<usize> = direct.iter().map(|&j| outer[j]).collect();
                    if composed != self.projection_by_coordinates(c, a)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every single-step projection hits every point below it.
    pub fn projections_surjective(&self) -> Result<bool> {
        for k in 1..=self.depth() {
            let mut hit = vec![false; self.size(k - 1)?];
            for i in self.projection(k, k - 1)? {
                hit[i] = true;
            }
            if hit.iter().any(|h| !h) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `π*f`: pull values on stage `from` back to stage `to ≥ from`.
    pub fn pullback_values(&self, f: &[C64], from: usize, to: usize) -> Result<Vec<C64>> {
        if f.len() != self.size(from)? {
            return Err(Error::Invalid("function has the wrong number of values".into()));
        }
        Ok(self.projection(to, from)?.into_iter().map(|i| f[i]).collect())
    }

    /// Largest defining-equation residual of the roots adjoined at stage `k`.
    pub fn root_residual(&self, k: usize) -> Result<f64> {
        Ok(self.stage(k)?.root_residual())
    }

    /// A function on stage `k` from coefficients in the stage basis (stage 0 uses the ground basis).
    pub fn combination(&self, k: usize, coeffs: &[C64]) -> Result<Vec<C64>> {
        if k == 0 {
            let e = self.ground.element(coeffs.to_vec())?;
            return ground_values(&self.ground, &e);
        }
        let stage = self.stage(k)?;
        if coeffs.len() != stage.dim() {
            return Err(Error::Invalid("one coefficient per basis function required".into()));
        }
        let mut v = DVector::zeros(stage.space().len());
        for (b, c) in stage.basis().iter().zip(coeffs) {
            v += b * *c;
        }
        Ok(v.iter().cloned().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use crate::cole::naturality_of;
    use crate::cole::tests::disc;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn fourth_root_tower() -> ColeTower {
        let a = disc(6, &[c(0.3, 0.0)], 2);
        let z = a.coordinate().unwrap();
        let stage1 = vec![StagePoly { lower: vec![vec![StageTerm::Ground(-z)], vec![]] }];
        let stage2 = vec![StagePoly {
            lower: vec![vec![StageTerm::Root { index: 0, scale: c(-1.0, 0.0) }], vec![]],
        }];
        cole_tower(&a, &[stage1, stage2], 2, &ToleranceProfile::default()).unwrap()
    }

    #[test]
    fn square_root_of_square_root() {
        let tower = fourth_root_tower();
        assert_eq!(tower.size(1).unwrap(), 14);
        assert_eq!(tower.size(2).unwrap(), 28);
        assert!(tower.root_residual(1).unwrap() < 1e-12);
        assert!(tower.root_residual(2).unwrap() < 1e-12);
        let stage2 = tower.stage(2).unwrap();
        let q = stage2.root_function(0).unwrap();
        let q4 = q.pow(4).unwrap();
        let z = tower.ground().coordinate().unwrap();
        let zvals = ground_values(tower.ground(), &z).unwrap();
        let pulled = tower.pullback_values(&zvals, 0, 2).unwrap();
        assert!(q4.data().iter().zip(&pulled).all(|(a, b)| (a - b).norm() < 1e-12));
    }

    #[test]
    fn projections_compose_and_cover() {
        let tower = fourth_root_tower();
        assert!(tower.projections_compatible().unwrap());
        assert!(tower.projections_surjective().unwrap());
    }

    #[test]
    fn pullback_preserves_sup_norm() {
        let tower = fourth_root_tower();
        let dim = tower.stage(1).unwrap().dim();
        let coeffs: Vec<C64> = (0..dim).map(|j| c((j as f64).sin(), (j as f64 * 0.7).cos())).collect();
        let f = tower.combination(1, &coeffs).unwrap();
        let g = tower.pullback_values(&f, 1, 2).unwrap();
        let sup = |v: &[C64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((sup(&f) - sup(&g)).abs() < 1e-12);
    }

    #[test]
    fn natural_stages_over_pointwise() {
        let a = Algebra::pointwise(PointSet::labelled(2));
        let a0 = a.element(vec![c(2.0, 0.0), c(-1.0, 0.5)]).unwrap();
        let stage1 = vec![StagePoly { lower: vec![vec![StageTerm::Ground(a0)], vec![]] }];
        let stage2 = vec![StagePoly {
            lower: vec![vec![StageTerm::Root { index: 0, scale: c(1.0, 0.0) }, StageTerm::Constant(c(0.5, 0.0))], vec![], vec![]],
        }];
        let tower = cole_tower(&a, &[stage1, stage2], 2, &ToleranceProfile::default()).unwrap();
        for k in 1..=2 {
            let nat = naturality_of(tower.stage(k).unwrap());
            assert!(nat.natural);
            assert_eq!(nat.character_count, tower.size(k).unwrap());
        }
    }

    #[test]
    fn root_terms_need_a_previous_stage() {
        let a = Algebra::pointwise(PointSet::labelled(2));
        let bad = vec![StagePoly { lower: vec![vec![StageTerm::Root { index: 0, scale: c(1.0, 0.0) }]] }];
        assert!(cole_tower(&a, &[bad], 1, &ToleranceProfile::default()).is_err());
    }
}
