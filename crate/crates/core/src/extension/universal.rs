use crate::algebra::{Algebra, Element, Homomorphism};
use crate::error::{Error, Result};
use crate::tolerance::ToleranceProfile;

/// The unique homomorphism `B₁ → B₂` with `x̄ ↦ y` that agrees with `phi0`
/// on `A₁`, where `B₁ = A₁[x]/(α₁)` and `B₂` lies above `phi0`'s codomain.
///
/// `y` must be a root of `α₁` with coefficients mapped by `phi0`; the
/// residual is compared with `root_tol · (1 + Σ ‖mapped coefficients‖)`.
pub fn universal_map(phi0: &Homomorphism, b1: &Algebra, y: &Element, tol: &ToleranceProfile) -> Result<Homomorphism> {
    let ext = b1
        .extension()
        .ok_or_else(|| Error::Invalid("the source must be an extension".into()))?;
    if !phi0.domain().same(&ext.base) {
        return Err(Error::DomainMismatch);
    }
    let b2 = y.owner().clone();
    let theta = |a: &Element| -> Result<Element> { b2.lift(&phi0.apply(a)?) };

    let mapped = ext.alpha.map_coeffs(phi0)?;
    let residual = mapped.eval(y)?.norm();
    let scale = 1.0 + mapped.lower_coeffs().iter().map(|a| a.norm()).sum::<f64>();
    if residual > tol.root_tol * scale {
        return Err(Error::NotARoot { residual });
    }

    let mut powers = vec![b2.one()];
    for k in 1..ext.degree() {
        powers.push(powers[k - 1].checked_mul(y)?);
    }
    let mut images = Vec::with_capacity(b1.dim());
    for power in &powers {
        for e in ext.base.basis() {
            images.push(theta(&e)?.checked_mul(power)?);
        }
    }
    Homomorphism::from_images(b1.clone(), b2, &images)
}
