//! Algebra backends and their elements.
//!
//! Every backend is a finite-dimensional commutative unital algebra over ℂ
//! with a canonical basis; elements are stored as coordinate vectors in that
//! basis.
//!
//! * [`Backend::Pointwise`]: all functions on a finite point set, with the
//!   sup norm. The basis is the point indicators.
//! * [`Backend::PolyModel`]: polynomials in the coordinate `z` of degree at
//!   most `D`, normed by the sup over the sample points. Products that exceed
//!   degree `D` are errors, not truncations.
//! * [`Backend::Extension`]: `A[x]/(α)` for a monic `α` of degree `n`, stored
//!   as the remainder `b_0 + b_1 x̄ + ... + b_{n-1} x̄^{n-1}` (block `k` holds
//!   the coordinates of `b_k`) and normed by `Σ ‖b_k‖ t^k`.

mod element;
mod hom;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

pub use element::Element;
pub use hom::Homomorphism;

use crate::error::{Error, Result};
use crate::extension::NormParameter;
use crate::poly::MonicPoly;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite set of labelled points, optionally carrying complex coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    labels: Vec<String>,
    coords: Option<Vec<C64>>,
}

impl PointSet {
    pub fn new(labels: Vec<String>, coords: Option<Vec<C64>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Invalid("point set must be non-empty".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Invalid(format!("duplicate point label {l:?}")));
            }
        }
        if let Some(c) = &coords {
            if c.len() != labels.len() {
                return Err(Error::Invalid("one coordinate per point required".into()));
            }
            if c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::Invalid("coordinates must be finite".into()));
            }
        }
        Ok(PointSet { labels, coords })
    }

    /// Points `p0, p1, ...` without coordinates.
    pub fn labelled(n: usize) -> Self {
        PointSet {
            labels: (0..n).map(|i| format!("p{i}")).collect(),
            coords: None,
        }
    }

    /// Points labelled by index, at the given coordinates.
    pub fn with_coords(coords: Vec<C64>) -> Result<Self> {
        let labels = (0..coords.len()).map(|i| format!("z{i}")).collect();
        PointSet::new(labels, Some(coords))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coords(&self) -> Option<&[C64]> {
        self.coords.as_deref()
    }

    pub fn subset(&self, indices: &[usize]) -> Result<PointSet> {
        if indices.iter().any(|&i| i >= self.len()) {
            return Err(Error::Invalid("subset index out of range".into()));
        }
        PointSet::new(
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
            self.coords
                .as_ref()
                .map(|c| indices.iter().map(|&i| c[i]).collect()),
        )
    }
}

/// An Arens-Hoffman layer: base algebra, defining polynomial and norm parameter.
#[derive(Debug, Clone)]
pub struct ExtensionData {
    pub base: Algebra,
    pub alpha: MonicPoly,
    pub t: NormParameter,
}

impl ExtensionData {
    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }
}

#[derive(Debug, Clone)]
pub enum Backend {
    Pointwise(PointSet),
    PolyModel { points: PointSet, degree: usize },
    Extension(ExtensionData),
}

#[derive(Debug)]
struct Inner {
    id: u64,
    backend: Backend,
    dim: usize,
    coord_bound: f64,
}

/// Shared handle to an algebra. Clones refer to the same algebra.
#[derive(Debug, Clone)]
pub struct Algebra(Arc<Inner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Algebra {
    fn from_backend(backend: Backend, dim: usize, coord_bound: f64) -> Self {
        Algebra(Arc::new(Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            backend,
            dim,
            coord_bound,
        }))
    }

    /// `C(X)` for a finite point set `X`.
    pub fn pointwise(points: PointSet) -> Self {
        let n = points.len();
        Algebra::from_backend(Backend::Pointwise(points), n, (n as f64).sqrt())
    }

    /// The complex numbers, as functions on a single point.
    pub fn complex() -> Self {
        Algebra::pointwise(PointSet::new(vec!["*".into()], None).expect("one point"))
    }

    /// Polynomials of degree ≤ `degree` in the coordinate, sup-normed over `points`.
    pub fn poly_model(points: PointSet, degree: usize) -> Result<Self> {
        let coords = points
            .coords()
            .ok_or_else(|| Error::Invalid("polynomial model needs point coordinates".into()))?
            .to_vec();
        if degree + 1 > coords.len() {
            return Err(Error::Invalid(format!(
                "degree bound {degree} needs at least {} sample points",
                degree + 1
            )));
        }
        let vander = DMatrix::from_fn(coords.len(), degree + 1, |i, j| coords[i].powu(j as u32));
        let sv = vander.svd(false, false).singular_values;
        let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        if smin <= 1e-13 * sv.max() {
            return Err(Error::Invalid("sample points do not determine the polynomials".into()));
        }
        let bound = (coords.len() as f64).sqrt() / smin;
        Ok(Algebra::from_backend(Backend::PolyModel { points, degree }, degree + 1, bound))
    }

    pub(crate) fn from_extension(data: ExtensionData) -> Self {
        let n = data.degree();
        let dim = data.base.dim() * n;
        let cb = data.base.coord_bound();
        let t = data.t.t;
        let bound = (0..n).map(|k| (cb / t.powi(k as i32)).powi(2)).sum::<f64>().sqrt();
        Algebra::from_backend(Backend::Extension(data), dim, bound)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn same(&self, other: &Algebra) -> bool {
        self.0.id == other.0.id
    }

    pub fn backend(&self) -> &Backend {
        &self.0.backend
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// A constant `C` with `‖x‖₂ ≤ C‖x‖` for coordinate vectors.
    pub fn coord_bound(&self) -> f64 {
        self.0.coord_bound
    }

    pub fn extension(&self) -> Option<&ExtensionData> {
        match self.backend() {
            Backend::Extension(e) => Some(e),
            _ => None,
        }
    }

    /// The pointwise or polynomial model at the bottom of an extension tower.
    pub fn ground(&self) -> &Algebra {
        match self.backend() {
            Backend::Extension(e) => e.base.ground(),
            _ => self,
        }
    }

    /// Number of extension layers above the ground model.
    pub fn depth(&self) -> usize {
        match self.backend() {
            Backend::Extension(e) => 1 + e.base.depth(),
            _ => 0,
        }
    }

    /// The point set of the ground model.
    pub fn points(&self) -> &PointSet {
        match self.ground().backend() {
            Backend::Pointwise(p) => p,
            Backend::PolyModel { points, .. } => points,
            Backend::Extension(_) => unreachable!("ground is never an extension"),
        }
    }

    pub fn element(&self, data: Vec<C64>) -> Result<Element> {
        if data.len() != self.dim() {
            return Err(Error::Invalid(format!(
                "element has {} coordinates, algebra dimension is {}",
                data.len(),
                self.dim()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Invalid("element coordinates must be finite".into()));
        }
        Ok(Element::from_parts(self.clone(), data))
    }

    pub fn zero(&self) -> Element {
        Element::from_parts(self.clone(), vec![C64::new(0.0, 0.0); self.dim()])
    }

    pub fn one(&self) -> Element {
        let mut data = vec![C64::new(0.0, 0.0); self.dim()];
        match self.backend() {
            Backend::Pointwise(_) => data.iter_mut().for_each(|z| *z = C64::new(1.0, 0.0)),
            Backend::PolyModel { .. } => data[0] = C64::new(1.0, 0.0),
            Backend::Extension(e) => {
                let one = e.base.one();
                data[..e.base.dim()].copy_from_slice(one.data());
            }
        }
        Element::from_parts(self.clone(), data)
    }

    pub fn constant(&self, c: C64) -> Element {
        self.one().scale(c)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut data = vec![C64::new(0.0, 0.0); self.dim()];
        data[i] = C64::new(1.0, 0.0);
        Element::from_parts(self.clone(), data)
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// The coordinate function `z` of a polynomial model.
    pub fn coordinate(&self) -> Result<Element> {
        match self.backend() {
            Backend::PolyModel { degree, .. } if *degree >= 1 => Ok(self.basis_element(1)),
            Backend::Pointwise(p) => {
                let coords = p
                    .coords()
                    .ok_or_else(|| Error::Invalid("points carry no coordinates".into()))?;
                self.element(coords.to_vec())
            }
            _ => Err(Error::Invalid("no coordinate function on this backend".into())),
        }
    }

    /// Element from coefficients in the coordinate `z` (lowest first).
    /// Pointwise models evaluate the polynomial at their coordinates.
    pub fn from_z_poly(&self, coeffs: &[C64]) -> Result<Element> {
        match self.backend() {
            Backend::PolyModel { degree, .. } => {
                let mut trimmed = coeffs.to_vec();
                while trimmed.len() > degree + 1 && trimmed.last().is_some_and(|c| c.norm() == 0.0) {
                    trimmed.pop();
                }
                if trimmed.len() > degree + 1 {
                    return Err(Error::DegreeOverflow {
                        degree: trimmed.len() - 1,
                        bound: *degree,
                    });
                }
                trimmed.resize(degree + 1, C64::new(0.0, 0.0));
                self.element(trimmed)
            }
            Backend::Pointwise(p) => {
                let coords = p
                    .coords()
                    .ok_or_else(|| Error::Invalid("points carry no coordinates".into()))?;
                let values = coords
                    .iter()
                    .map(|z| coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c))
                    .collect();
                self.element(values)
            }
            Backend::Extension(_) => Err(Error::Invalid(
                "z-polynomials live in the ground model; embed them instead".into(),
            )),
        }
    }

    /// `x̄`, the class of the indeterminate in an extension.
    pub fn x_bar(&self) -> Result<Element> {
        let e = self
            .extension()
            .ok_or_else(|| Error::Invalid("x̄ exists only in extensions".into()))?;
        if e.degree() == 1 {
            // x̄ = -a_0 when α is linear.
            return self.embed(&(-e.alpha.coeff(0)));
        }
        let bd = e.base.dim();
        let mut data = vec![C64::new(0.0, 0.0); self.dim()];
        data[bd..2 * bd].copy_from_slice(e.base.one().data());
        Ok(Element::from_parts(self.clone(), data))
    }

    /// The isometric embedding `a ↦ a + 0·x̄ + ...` of the base algebra.
    pub fn embed(&self, a: &Element) -> Result<Element> {
        let e = self
            .extension()
            .ok_or_else(|| Error::Invalid("embedding needs an extension".into()))?;
        if !a.owner().same(&e.base) {
            return Err(Error::OwnerMismatch);
        }
        let mut data = vec![C64::new(0.0, 0.0); self.dim()];
        data[..e.base.dim()].copy_from_slice(a.data());
        Ok(Element::from_parts(self.clone(), data))
    }

    /// Embed an element of any algebra below this one in the tower.
    pub fn lift(&self, a: &Element) -> Result<Element> {
        if a.owner().same(self) {
            return Ok(a.clone());
        }
        match self.extension() {
            Some(e) => {
                let below = e.base.lift(a)?;
                self.embed(&below)
            }
            None => Err(Error::OwnerMismatch),
        }
    }

    /// Element `Σ c_k x̄^k` from base coefficients (`c.len() ≤ n`).
    pub fn from_coefficients(&self, coeffs: &[Element]) -> Result<Element> {
        let e = self
            .extension()
            .ok_or_else(|| Error::Invalid("coefficients need an extension".into()))?;
        if coeffs.len() > e.degree() {
            return Err(Error::Invalid("more coefficients than the extension degree".into()));
        }
        let bd = e.base.dim();
        let mut data = vec![C64::new(0.0, 0.0); self.dim()];
        for (k, c) in coeffs.iter().enumerate() {
            if !c.owner().same(&e.base) {
                return Err(Error::OwnerMismatch);
            }
            data[k * bd..(k + 1) * bd].copy_from_slice(c.data());
        }
        Ok(Element::from_parts(self.clone(), data))
    }
}
