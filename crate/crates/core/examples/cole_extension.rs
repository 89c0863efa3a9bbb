// Cole's extension of the disc model by a square root of z, and the norm
// gap against the extension norm.

use algext::cole::{cole_algebra, naturality_of, rho_star, ColeAlgebra};
use algext::extension::{ah_extend, NormParameter};
use algext::{Algebra, MonicPoly, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let n = 64;
    let coords = (0..n)
        .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / n as f64))
        .collect();
    let disc = Algebra::poly_model(PointSet::with_coords(coords)?, 8)?;
    let z = disc.from_z_poly(&[C64::new(0.0, 0.0), C64::new(1.0, 0.0)])?;
    let alpha = MonicPoly::binomial(2, -&z)?;

    let cole = cole_algebra(&disc, std::slice::from_ref(&alpha), &ToleranceProfile::default())?;
    let nat = naturality_of(&cole);
    println!(
        "fiber points {}, dim {}, separates {}, natural {}",
        nat.space_size,
        cole.dim(),
        nat.separates,
        nat.natural
    );
    println!("root residual {:.1e}", cole.root_residual());

    let b = ah_extend(&disc, &alpha, Some(NormParameter::new(1.0)))?;
    let half = C64::new(0.5, 0.0);
    let f = disc.from_z_poly(&[half, half])?;
    let g = disc.from_z_poly(&[-half, half])?;
    let probe = b.from_coefficients(&[f, g])?;
    let rho = rho_star(&b, &cole)?;
    let image = rho.apply(&probe)?;
    println!("extension norm {:.6}", probe.norm());
    println!("sup norm on the fiber space {:.6}", ColeAlgebra::sup_norm(&image));
    Ok(())
}
