// Classify pairs (A, alpha) by whether the two extension constructions agree.

use algext::cole::compare_extensions;
use algext::{Algebra, MonicPoly, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let tol = ToleranceProfile::default();
    let n = 64;
    let coords = (0..n)
        .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / n as f64))
        .collect();
    let disc = Algebra::poly_model(PointSet::with_coords(coords)?, 8)?;
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let cases = [
        ("x^2 - z", disc.from_z_poly(&[zero, one])?),
        ("x^2 - (z - 1)", disc.from_z_poly(&[-one, one])?),
    ];
    for (name, a0) in cases {
        let c = compare_extensions(&disc, &MonicPoly::binomial(2, -&a0)?, &tol)?;
        println!(
            "{name:<14} boundary min |d| = {:.2e}  ->  {}",
            c.topological.boundary_min,
            c.verdict.as_str()
        );
    }
    let pw = Algebra::pointwise(PointSet::labelled(2));
    let a0 = pw.element(vec![one, zero])?;
    let c = compare_extensions(&pw, &MonicPoly::binomial(2, -&a0)?, &tol)?;
    println!("{:<14} d is a zero divisor: {}  ->  {}", "C^2, (1, 0)", c.discriminant_is_zero_divisor, c.verdict.as_str());
    Ok(())
}
