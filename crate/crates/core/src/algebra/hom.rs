use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use super::{Algebra, Backend, Element};
use crate::error::{Error, Result};
use crate::gelfand::Character;

/// A unital algebra homomorphism, stored as the matrix of the underlying
/// linear map between canonical bases.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    domain: Algebra,
    codomain: Algebra,
    matrix: DMatrix<C64>,
}

impl Homomorphism {
    pub fn from_matrix(domain: Algebra, codomain: Algebra, matrix: DMatrix<C64>) -> Result<Self> {
        if matrix.nrows() != codomain.dim() || matrix.ncols() != domain.dim() {
            return Err(Error::Invalid("homomorphism matrix has the wrong shape".into()));
        }
        Ok(Homomorphism { domain, codomain, matrix })
    }

    /// The linear map determined by its values on the domain basis.
    pub fn from_images(domain: Algebra, codomain: Algebra, images: &[Element]) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::Invalid("one image per basis element required".into()));
        }
        if images.iter().any(|e| !e.owner().same(&codomain)) {
            return Err(Error::OwnerMismatch);
        }
        let matrix = DMatrix::from_fn(codomain.dim(), domain.dim(), |i, j| images[j].data()[i]);
        Ok(Homomorphism { domain, codomain, matrix })
    }

    pub fn identity(alg: &Algebra) -> Self {
        Homomorphism {
            domain: alg.clone(),
            codomain: alg.clone(),
            matrix: DMatrix::identity(alg.dim(), alg.dim()),
        }
    }

    /// The embedding of an extension's base algebra.
    pub fn embedding(ext: &Algebra) -> Result<Self> {
        let data = ext
            .extension()
            .ok_or_else(|| Error::Invalid("embedding needs an extension".into()))?;
        let images = data
            .base
            .basis()
            .iter()
            .map(|b| ext.embed(b))
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::from_images(data.base.clone(), ext.clone(), &images)
    }

    /// Restriction `C(X) → C(S)` to the points `subset` of a pointwise algebra.
    pub fn restriction(alg: &Algebra, subset: &[usize]) -> Result<Self> {
        let Backend::Pointwise(points) = alg.backend() else {
            return Err(Error::Invalid("restriction needs a pointwise algebra".into()));
        };
        let target = Algebra::pointwise(points.subset(subset)?);
        let matrix = DMatrix::from_fn(subset.len(), alg.dim(), |i, j| {
            if subset[i] == j {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        Ok(Homomorphism { domain: alg.clone(), codomain: target, matrix })
    }

    /// A character as a homomorphism onto `ℂ` (a fresh one-point algebra).
    pub fn evaluation(alg: &Algebra, chi: &Character) -> Result<Self> {
        let row = chi.functional(alg)?;
        let matrix = DMatrix::from_row_slice(1, alg.dim(), &row);
        Ok(Homomorphism { domain: alg.clone(), codomain: Algebra::complex(), matrix })
    }

    /// Same map with the codomain re-targeted to another handle of equal dimension.
    pub fn with_codomain(self, codomain: Algebra) -> Result<Self> {
        Homomorphism::from_matrix(self.domain, codomain, self.matrix)
    }

    pub fn domain(&self) -> &Algebra {
        &self.domain
    }

    pub fn codomain(&self) -> &Algebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if !a.owner().same(&self.domain) {
            return Err(Error::DomainMismatch);
        }
        let v = &self.matrix * DVector::from_column_slice(a.data());
        self.codomain.element(v.iter().cloned().collect())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Self> {
        if !other.domain.same(&self.codomain) {
            return Err(Error::DomainMismatch);
        }
        Ok(Homomorphism {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            matrix: &other.matrix * &self.matrix,
        })
    }

    /// Largest multiplicativity defect `|φ(ab) - φ(a)φ(b)|` over basis pairs.
    pub fn multiplicativity_defect(&self) -> Result<f64> {
        let basis = self.domain.basis();
        let images: Vec<Element> = basis.iter().map(|b| self.apply(b)).collect::<Result<_>>()?;
        let mut worst = 0.0_f64;
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let lhs = self.apply(&basis[i].checked_mul(&basis[j])?)?;
                let rhs = images[i].checked_mul(&images[j])?;
                worst = worst.max(lhs.checked_sub(&rhs)?.max_abs());
            }
        }
        Ok(worst)
    }
}
