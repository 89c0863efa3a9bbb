use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use super::ColeAlgebra;
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::gelfand::{characters, Character};
use crate::numerics::linalg::residual_direction;

/// `ρ*`: `Σ b_k x̄^k ↦ Σ π*(b_k) p^k`, from an extension to functions on
/// the fiber space of its polynomial.
#[derive(Debug, Clone)]
pub struct RhoStar {
    source: Algebra,
    target: Algebra,
    matrix: DMatrix<C64>,
}

/// The map sending each element of `b = A[x]/(α)` to its values at the
/// fiber points, which are characters of `b`.
pub fn rho_star(b: &Algebra, cole: &ColeAlgebra) -> Result<RhoStar> {
    let ext = b
        .extension()
        .ok_or_else(|| Error::MismatchedData("the source must be an extension".into()))?;
    let base = cole
        .base()
        .ok_or_else(|| Error::MismatchedData("the Cole algebra has no recorded ground algebra".into()))?;
    if !ext.base.same(base) {
        return Err(Error::MismatchedData("extension and Cole algebra have different base algebras".into()));
    }
    let coeffs = cole.coeff_values();
    if coeffs.len() != 1 {
        return Err(Error::MismatchedData("the Cole algebra must come from a single polynomial".into()));
    }
    let alpha = &ext.alpha;
    if coeffs[0].len() != alpha.degree() {
        return Err(Error::MismatchedData("polynomial degrees differ".into()));
    }
    for (k, values) in coeffs[0].iter().enumerate() {
        let a_k = alpha.coeff(k);
        for (p, v) in values.iter().enumerate() {
            if (Character::point(p).evaluate(&a_k)? - v).norm() > crate::tolerance::ELEMENT_EQ_TOL {
                return Err(Error::MismatchedData("polynomial coefficients differ".into()));
            }
        }
    }
    let space = cole.space();
    let mut matrix = DMatrix::zeros(space.len(), b.dim());
    for (i, q) in space.iter().enumerate() {
        let chi = Character { base_point: q.base, root_path: vec![q.roots[0]] };
        for (j, w) in chi.functional(b)?.into_iter().enumerate() {
            matrix[(i, j)] = w;
        }
    }
    Ok(RhoStar { source: b.clone(), target: cole.ambient().clone(), matrix })
}

impl RhoStar {
    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn apply(&self, b: &Element) -> Result<Element> {
        if !b.owner().same(&self.source) {
            return Err(Error::DomainMismatch);
        }
        let v = &self.matrix * DVector::from_column_slice(b.data());
        self.target.element(v.iter().cloned().collect())
    }

    /// The Gelfand sup norm `max_H |H(b)|` over all characters of the source.
    pub fn gelfand_norm(&self, b: &Element) -> Result<f64> {
        let mut best: f64 = 0.0;
        for chi in characters(&self.source)? {
            best = best.max(chi.evaluate(b)?.norm());
        }
        Ok(best)
    }

    /// Every column of the map lies in the span of the Cole algebra.
    pub fn image_in(&self, cole: &ColeAlgebra) -> bool {
        self.matrix.column_iter().all(|col| {
            let v: DVector<C64> = col.into_owned();
            v.norm() == 0.0 || residual_direction(cole.basis(), &v, 1e-8).is_none()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use crate::cole::cole_algebra;
    use crate::cole::tests::disc;
    use crate::extension::ah_extend;
    use crate::poly::MonicPoly;
    use crate::tolerance::ToleranceProfile;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn images_of_base_and_root() {
        let a = disc(16, &[c(0.1, 0.2)], 4);
        let z = a.coordinate().unwrap();
        let alpha = MonicPoly::binomial(2, -&z).unwrap();
        let b = ah_extend(&a, &alpha, None).unwrap();
        let cole = cole_algebra(&a, &[alpha], &ToleranceProfile::default()).unwrap();
        let rho = rho_star(&b, &cole).unwrap();
        let f = a.from_z_poly(&[c(1.0, 0.0), c(0.0, 2.0)]).unwrap();
        assert!(rho.apply(&b.embed(&f).unwrap()).unwrap().approx_eq(&cole.pullback(&f).unwrap()));
        assert!(rho.apply(&b.x_bar().unwrap()).unwrap().approx_eq(&cole.root_function(0).unwrap()));
        assert!(rho.image_in(&cole));
    }

    #[test]
    fn norm_gap_on_the_circle() {
        let a = disc(32, &[], 4);
        let alpha = MonicPoly::binomial(2, -a.coordinate().unwrap()).unwrap();
        let b = ah_extend(&a, &alpha, None).unwrap();
        let cole = cole_algebra(&a, &[alpha], &ToleranceProfile::default()).unwrap();
        let f = a.from_z_poly(&[c(0.5, 0.0), c(0.5, 0.0)]).unwrap();
        let g = a.from_z_poly(&[c(-0.5, 0.0), c(0.5, 0.0)]).unwrap();
        let elem = b.from_coefficients(&[f, g]).unwrap();
        assert!((elem.norm() - 2.0).abs() < 1e-12);
        let image = rho_star(&b, &cole).unwrap().apply(&elem).unwrap();
        assert!(ColeAlgebra::sup_norm(&image) < 1.4);
    }

    #[test]
    fn mismatched_base_rejected() {
        let a = Algebra::pointwise(PointSet::labelled(2));
        let other = Algebra::pointwise(PointSet::labelled(2));
        let alpha = MonicPoly::binomial(2, a.one()).unwrap();
        let beta = MonicPoly::binomial(2, other.one()).unwrap();
        let b = ah_extend(&a, &alpha, None).unwrap();
        let cole = cole_algebra(&other, &[beta], &ToleranceProfile::default()).unwrap();
        assert!(matches!(rho_star(&b, &cole), Err(Error::MismatchedData(_))));
    }
}
