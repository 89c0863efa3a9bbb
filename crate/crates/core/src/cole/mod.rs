//! Cole's construction on finite models: fiber spaces of root assignments,
//! the uniform algebras they carry, boundaries and the comparison with
//! Arens-Hoffman extensions.

mod compare;
mod rho;
mod silov;
mod tower;

pub use compare::{compare_extensions, Comparison, Verdict};
pub use rho::{rho_star, RhoStar};
pub use silov::{
    attains_maxima, function_span, is_minimal_boundary, is_topological_zero_divisor, point_values, silov_boundary,
    silov_boundary_values, TopologicalZeroDivisor,
};
pub use tower::{cole_tower, ColeTower, StagePoly, StageTerm};

use nalgebra::DVector;
use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Backend, Element, PointSet};
use crate::error::{Error, Result};
use crate::gelfand::Character;
use crate::numerics::linalg::{orthonormalize, residual_direction};
use crate::numerics::roots::complex_roots;
use crate::poly::MonicPoly;
use crate::tolerance::ToleranceProfile;

/// Relative residual below which a product is already in the span.
const SPAN_REL_TOL: f64 = 1e-9;
/// Two fiber points count as separated when some basis function differs by more.
const SEPARATION_TOL: f64 = 1e-9;

/// A base point together with one root of each polynomial over it.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberPoint {
    pub base: usize,
    pub roots: Vec<C64>,
}

/// Which construction produced a generator of a Cole algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Pullback of the `j`-th base function.
    Pullback(usize),
    /// The root function of the `i`-th polynomial.
    Root(usize),
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub values: Element,
}

/// `coeffs[poly][k][point]`: value of `a_k` of each polynomial at each base point.
pub(crate) type CoeffValues = Vec<Vec<Vec<C64>>>;

/// Every combination of distinct roots of the polynomials over each base point.
pub(crate) fn fiber_space(n_base: usize, coeffs: &CoeffValues, tol: &ToleranceProfile) -> Result<Vec<FiberPoint>> {
    let mut space = Vec::new();
    for p in 0..n_base {
        let mut partial: Vec<Vec<C64>> = vec![Vec::new()];
        for poly in coeffs {
            let scalar: Vec<C64> = poly.iter().map(|values| values[p]).collect();
            let roots = complex_roots(&scalar, tol)?;
            partial = partial
                .into_iter()
                .flat_map(|prefix| {
                    roots.iter().map(move |r| {
                        let mut next = prefix.clone();
                        next.push(r.value);
                        next
                    })
                })
                .collect();
        }
        space.extend(partial.into_iter().map(|roots| FiberPoint { base: p, roots }));
    }
    Ok(space)
}

fn ground_values(a: &Algebra, e: &Element) -> Result<Vec<C64>> {
    if !e.owner().same(a) {
        return Err(Error::OwnerMismatch);
    }
    (0..a.points().len()).map(|p| Character::point(p).evaluate(e)).collect()
}

fn require_ground(a: &Algebra) -> Result<()> {
    match a.backend() {
        Backend::Pointwise(_) | Backend::PolyModel { .. } => Ok(()),
        Backend::Extension(_) => Err(Error::Invalid("Cole constructions need a pointwise or polynomial model".into())),
    }
}

fn coefficient_values(a: &Algebra, polys: &[MonicPoly]) -> Result<CoeffValues> {
    if polys.is_empty() {
        return Err(Error::Invalid("at least one polynomial is required".into()));
    }
    polys
        .iter()
        .map(|alpha| {
            if !alpha.owner().same(a) {
                return Err(Error::OwnerMismatch);
            }
            alpha.lower_coeffs().iter().map(|c| ground_values(a, c)).collect()
        })
        .collect()
}

/// The fiber space over the points of `a` for the polynomial family `polys`.
pub fn cole_space(a: &Algebra, polys: &[MonicPoly], tol: &ToleranceProfile) -> Result<Vec<FiberPoint>> {
    require_ground(a)?;
    fiber_space(a.points().len(), &coefficient_values(a, polys)?, tol)
}

/// The algebra on a fiber space generated by the pulled-back base functions
/// and the root functions, as an orthonormal basis of functions.
#[derive(Debug, Clone)]
pub struct ColeAlgebra {
    base: Option<Algebra>,
    base_labels: Vec<String>,
    coeffs: CoeffValues,
    space: Vec<FiberPoint>,
    ambient: Algebra,
    generators: Vec<Generator>,
    basis: Vec<DVector<C64>>,
    closure_rounds: usize,
}

/// The Cole algebra of `a` and `polys`.
pub fn cole_algebra(a: &Algebra, polys: &[MonicPoly], tol: &ToleranceProfile) -> Result<ColeAlgebra> {
    require_ground(a)?;
    let coeffs = coefficient_values(a, polys)?;
    let base_functions = a
        .basis()
        .iter()
        .map(|e| ground_values(a, e))
        .collect::<Result<Vec<_>>>()?;
    let mut alg = ColeAlgebra::build(a.points().labels().to_vec(), &base_functions, coeffs, tol)?;
    alg.base = Some(a.clone());
    Ok(alg)
}

impl ColeAlgebra {
    /// Build over base points `labels` from spanning base functions (values
    /// per base point) and coefficient values of the polynomials.
    pub(crate) fn build(
        labels: Vec<String>,
        base_functions: &[Vec<C64>],
        coeffs: CoeffValues,
        tol: &ToleranceProfile,
    ) -> Result<Self> {
        let space = fiber_space(labels.len(), &coeffs, tol)?;
        let fiber_labels = fiber_labels(&labels, &space);
        let ambient = Algebra::pointwise(PointSet::new(fiber_labels, None)?);
        let mut generators = Vec::new();
        for (j, f) in base_functions.iter().enumerate() {
            let values = space.iter().map(|q| f[q.base]).collect();
            generators.push(Generator { kind: GeneratorKind::Pullback(j), values: ambient.element(values)? });
        }
        for i in 0..coeffs.len() {
            let values = space.iter().map(|q| q.roots[i]).collect();
            generators.push(Generator { kind: GeneratorKind::Root(i), values: ambient.element(values)? });
        }
        let mut alg = ColeAlgebra {
            base: None,
            base_labels: labels,
            coeffs,
            space,
            ambient,
            generators,
            basis: Vec::new(),
            closure_rounds: 0,
        };
        alg.close();
        Ok(alg)
    }

    /// Grow the span of `1` and the generators under multiplication by the
    /// generators. Only vectors added in the previous round are multiplied;
    /// the span is closed once a round adds nothing.
    fn close(&mut self) {
        let n = self.space.len();
        let gens: Vec<DVector<C64>> = self
            .generators
            .iter()
            .map(|g| DVector::from_column_slice(g.values.data()))
            .collect();
        let mut start = vec![DVector::from_element(n, C64::new(1.0, 0.0))];
        start.extend(gens.iter().cloned());
        let mut basis = orthonormalize(&start, SPAN_REL_TOL);
        let mut frontier = 0;
        let mut rounds = 0;
        while frontier < basis.len() && basis.len() < n {
            rounds += 1;
            let end = basis.len();
            for k in frontier..end {
                for g in &gens {
                    let prod = basis[k].component_mul(g);
                    if let Some(q) = residual_direction(&basis, &prod, SPAN_REL_TOL) {
                        basis.push(q);
                    }
                }
            }
            frontier = end;
        }
        self.basis = basis;
        self.closure_rounds = rounds;
    }

    pub fn space(&self) -> &[FiberPoint] {
        &self.space
    }

    /// The pointwise algebra of all functions on the fiber space.
    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    /// The ground algebra this was built from, when built by [`cole_algebra`].
    pub fn base(&self) -> Option<&Algebra> {
        self.base.as_ref()
    }

    pub fn base_labels(&self) -> &[String] {
        &self.base_labels
    }

    pub(crate) fn coeff_values(&self) -> &CoeffValues {
        &self.coeffs
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Orthonormal basis of the algebra, as value vectors on the space.
    pub fn basis(&self) -> &[DVector<C64>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn closure_rounds(&self) -> usize {
        self.closure_rounds
    }

    /// The root function `p_i`, `(κ, λ) ↦ λ_i`.
    pub fn root_function(&self, i: usize) -> Result<Element> {
        self.generators
            .iter()
            .find(|g| g.kind == GeneratorKind::Root(i))
            .map(|g| g.values.clone())
            .ok_or_else(|| Error::Invalid(format!("no root function {i}")))
    }

    /// `π*f` for a function given by its values on the base points.
    pub fn pullback_values(&self, f: &[C64]) -> Result<Element> {
        if f.len() != self.base_labels.len() {
            return Err(Error::Invalid("function has the wrong number of base values".into()));
        }
        self.ambient.element(self.space.iter().map(|q| f[q.base]).collect())
    }

    /// `π*a` for an element of the ground algebra.
    pub fn pullback(&self, a: &Element) -> Result<Element> {
        let base = self.base.as_ref().ok_or_else(|| Error::Invalid("no ground algebra recorded".into()))?;
        self.pullback_values(&ground_values(base, a)?)
    }

    /// Whether a function on the space lies in the algebra.
    pub fn contains(&self, f: &Element) -> Result<bool> {
        if !f.owner().same(&self.ambient) {
            return Err(Error::OwnerMismatch);
        }
        let v = DVector::from_column_slice(f.data());
        Ok(residual_direction(&self.basis, &v, 1e-8).is_none())
    }

    /// Every pair of fiber points is told apart by some basis function.
    pub fn separates_points(&self) -> bool {
        let n = self.space.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| self.basis.iter().any(|b| (b[i] - b[j]).norm() > SEPARATION_TOL))
        })
    }

    /// Largest residual `|α(p_α)|` over the space and the polynomials.
    pub fn root_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for q in &self.space {
            for (i, poly) in self.coeffs.iter().enumerate() {
                let lambda = q.roots[i];
                let mut acc = C64::new(1.0, 0.0);
                for values in poly.iter().rev() {
                    acc = acc * lambda + values[q.base];
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// Whether every root obeys `|λ_α| ≤ max(1, Σ_k ‖a_k‖_∞)`.
    pub fn roots_bounded(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, poly)| {
            let bound = poly
                .iter()
                .map(|values| values.iter().map(|z| z.norm()).fold(0.0, f64::max))
                .sum::<f64>()
                .max(1.0);
            self.space.iter().all(|q| q.roots[i].norm() <= bound * (1.0 + 1e-12))
        })
    }

    /// Sup norm over the fiber space.
    pub fn sup_norm(f: &Element) -> f64 {
        f.max_abs()
    }
}

fn fiber_labels(base: &[String], space: &[FiberPoint]) -> Vec<String> {
    let mut out = Vec::with_capacity(space.len());
    let mut counter = vec![0usize; base.len()];
    for q in space {
        out.push(format!("{}/{}", base[q.base], counter[q.base]));
        counter[q.base] += 1;
    }
    out
}

/// Result of comparing the characters of a Cole algebra with its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naturality {
    pub space_size: usize,
    /// Characters of the (semisimple, finite-dimensional) algebra: its dimension.
    pub character_count: usize,
    pub separates: bool,
    pub natural: bool,
}

/// Whether the Cole algebra of `a` and `polys` is natural on its fiber
/// space: its characters are exactly the point evaluations.
pub fn naturality_check(a: &Algebra, polys: &[MonicPoly], tol: &ToleranceProfile) -> Result<Naturality> {
    Ok(naturality_of(&cole_algebra(a, polys, tol)?))
}

pub fn naturality_of(alg: &ColeAlgebra) -> Naturality {
    let separates = alg.separates_points();
    let space_size = alg.space().len();
    let character_count = alg.dim();
    Naturality {
        space_size,
        character_count,
        separates,
        natural: separates && character_count == space_size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    pub(crate) fn disc(boundary: usize, interior: &[C64], degree: usize) -> Algebra {
        let mut coords: Vec<C64> = (0..boundary)
            .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / boundary as f64))
            .collect();
        coords.extend_from_slice(interior);
        Algebra::poly_model(PointSet::with_coords(coords).unwrap(), degree).unwrap()
    }

    #[test]
    fn square_root_fibers() {
        let a = disc(8, &[c(0.0, 0.0), c(0.3, 0.0)], 3);
        let alpha = MonicPoly::binomial(2, -a.coordinate().unwrap()).unwrap();
        let space = cole_space(&a, &[alpha], &ToleranceProfile::default()).unwrap();
        assert_eq!(space.len(), 2 * 9 + 1);
        assert_eq!(space.iter().filter(|q| q.base == 8).count(), 1);
    }

    #[test]
    fn linear_fiber_is_the_base() {
        let a = Algebra::pointwise(PointSet::labelled(3));
        let f = a.element(vec![c(1.0, 0.0), c(2.0, 0.0), c(-1.0, 1.0)]).unwrap();
        let alpha = MonicPoly::new(a.clone(), vec![-&f]).unwrap();
        let alg = cole_algebra(&a, std::slice::from_ref(&alpha), &ToleranceProfile::default()).unwrap();
        assert_eq!(alg.space().len(), 3);
        assert!(alg.root_function(0).unwrap().approx_eq(&alg.pullback(&f).unwrap()));
        assert!(naturality_check(&a, &[alpha], &ToleranceProfile::default()).unwrap().natural);
    }

    #[test]
    fn root_function_squares_to_coordinate() {
        let a = disc(12, &[c(0.2, 0.1)], 4);
        let z = a.coordinate().unwrap();
        let alpha = MonicPoly::binomial(2, -&z).unwrap();
        let alg = cole_algebra(&a, &[alpha], &ToleranceProfile::default()).unwrap();
        let p = alg.root_function(0).unwrap();
        assert!(p.checked_mul(&p).unwrap().approx_eq(&alg.pullback(&z).unwrap()));
        assert!(alg.root_residual() < 1e-12);
        assert!(alg.roots_bounded());
        assert!(alg.separates_points());
    }

    #[test]
    fn full_pointwise_base_gives_all_functions() {
        let a = Algebra::pointwise(PointSet::labelled(3));
        let a0 = a.element(vec![c(1.0, 0.0), c(-2.0, 0.0), c(0.5, 3.0)]).unwrap();
        let alpha = MonicPoly::binomial(2, a0).unwrap();
        let alg = cole_algebra(&a, std::slice::from_ref(&alpha), &ToleranceProfile::default()).unwrap();
        assert_eq!(alg.dim(), 6);
        let nat = naturality_check(&a, &[alpha], &ToleranceProfile::default()).unwrap();
        assert_eq!(nat, Naturality { space_size: 6, character_count: 6, separates: true, natural: true });
    }
}
