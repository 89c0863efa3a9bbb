use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::gelfand::{characters_with, gelfand_matrix, radical_from};
use crate::numerics::convex::{affine_min_norm, MinNorm};
use crate::numerics::linalg::{null_space, numerical_rank};
use crate::tolerance::ToleranceProfile;

/// `B/K(B)`: the algebra modulo its radical, with the quotient norm.
///
/// Classes are represented by their orthogonal projection onto the
/// complement of the radical; products are computed in `B` and projected.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    parent: Algebra,
    radical: Vec<Element>,
    /// Orthonormal columns spanning the complement of the radical.
    complement: DMatrix<C64>,
    gelfand: DMatrix<C64>,
    tol: ToleranceProfile,
}

/// The quotient of `b` by its radical. When the radical is trivial the
/// quotient is `b` itself and the class map is the identity.
pub fn quotient_by_radical(b: &Algebra, tol: &ToleranceProfile) -> Result<QuotientAlgebra> {
    let chars = characters_with(b, tol)?;
    let radical = radical_from(b, &chars, tol)?;
    let gelfand = gelfand_matrix(b, &chars)?;
    let dim = b.dim();
    let complement = if radical.is_empty() {
        DMatrix::identity(dim, dim)
    } else {
        let rows = DMatrix::from_fn(radical.len(), dim, |i, j| radical[i].data()[j].conj());
        let cols = null_space(&rows, tol.rank_rel_tol);
        DMatrix::from_columns(&cols)
    };
    Ok(QuotientAlgebra { parent: b.clone(), radical, complement, gelfand, tol: *tol })
}

impl QuotientAlgebra {
    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    /// Orthonormal basis of the radical.
    pub fn radical(&self) -> &[Element] {
        &self.radical
    }

    pub fn dim(&self) -> usize {
        self.complement.ncols()
    }

    pub fn is_identity(&self) -> bool {
        self.radical.is_empty()
    }

    fn check(&self, b: &Element) -> Result<()> {
        if b.owner().same(&self.parent) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    /// Coordinates of the class of `b` in the quotient basis.
    pub fn class(&self, b: &Element) -> Result<DVector<C64>> {
        self.check(b)?;
        Ok(self.complement.adjoint() * DVector::from_column_slice(b.data()))
    }

    /// The canonical representative of the class of `b`.
    pub fn reduce(&self, b: &Element) -> Result<Element> {
        let v = &self.complement * self.class(b)?;
        self.parent.element(v.iter().cloned().collect())
    }

    pub fn same_class(&self, b: &Element, c: &Element) -> Result<bool> {
        let diff = self.class(&b.checked_sub(c)?)?;
        Ok(diff.iter().all(|z| z.norm() <= crate::tolerance::ELEMENT_EQ_TOL))
    }

    /// Representative of the product of two classes.
    pub fn mul(&self, b: &Element, c: &Element) -> Result<Element> {
        self.reduce(&b.checked_mul(c)?)
    }

    /// The quotient norm `inf_{k ∈ K(B)} ‖b + k‖`, with a certified lower bound.
    pub fn norm(&self, b: &Element) -> Result<MinNorm> {
        self.check(b)?;
        affine_min_norm(b, &self.radical, self.tol.convex_tol)
    }

    /// The characters of `B` separate the classes: the Gelfand matrix
    /// restricted to the complement has full column rank.
    pub fn is_tractable(&self) -> bool {
        if self.dim() == 0 {
            return true;
        }
        numerical_rank(&(&self.gelfand * &self.complement), self.tol.rank_rel_tol) == self.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use crate::extension::ah_extend;
    use crate::poly::MonicPoly;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn degenerate() -> Algebra {
        let a = Algebra::pointwise(PointSet::labelled(2));
        let a0 = a.element(vec![c(-1.0), c(0.0)]).unwrap();
        ah_extend(&a, &MonicPoly::binomial(2, a0).unwrap(), None).unwrap()
    }

    #[test]
    fn tractable_quotient_is_identity() {
        let a = Algebra::complex();
        let b = ah_extend(&a, &MonicPoly::binomial(2, a.one()).unwrap(), None).unwrap();
        let q = quotient_by_radical(&b, &ToleranceProfile::default()).unwrap();
        assert!(q.is_identity());
        assert_eq!(q.dim(), 2);
        let x = b.x_bar().unwrap();
        assert!(q.reduce(&x).unwrap().approx_eq(&x));
        assert!((q.norm(&x).unwrap().value - x.norm()).abs() < 1e-15);
    }

    #[test]
    fn radical_is_divided_out() {
        let b = degenerate();
        let q = quotient_by_radical(&b, &ToleranceProfile::default()).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.is_tractable());
        let xb = b.x_bar().unwrap();
        let alpha = b.extension().unwrap().alpha.clone();
        let root = alpha.lift_to(&b).unwrap().eval(&xb).unwrap();
        assert!(q.same_class(&root, &b.zero()).unwrap());
        // u·x̄ with u the indicator of the second point lies in the radical.
        let u = b.embed(&b.extension().unwrap().base.basis_element(1)).unwrap();
        let ux = u.checked_mul(&xb).unwrap();
        assert!(q.same_class(&ux, &b.zero()).unwrap());
        assert!(q.norm(&ux).unwrap().value < 1e-7);
    }
}
