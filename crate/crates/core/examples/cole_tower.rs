// Two Cole stages: a square root of z, then a square root of that root.

use algext::cole::{cole_tower, StagePoly, StageTerm};
use algext::{Algebra, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let mut coords: Vec<C64> = (0..16)
        .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 16.0))
        .collect();
    coords.push(C64::new(0.0, 0.0));
    let disc = Algebra::poly_model(PointSet::with_coords(coords)?, 4)?;
    let z = disc.from_z_poly(&[C64::new(0.0, 0.0), C64::new(-1.0, 0.0)])?;

    let first = StagePoly { lower: vec![vec![StageTerm::Ground(z)], vec![]] };
    let second = StagePoly { lower: vec![vec![StageTerm::Root { index: 0, scale: C64::new(-1.0, 0.0) }], vec![]] };
    let tower = cole_tower(&disc, &[vec![first], vec![second]], 2, &ToleranceProfile::default())?;
    for k in 0..=tower.depth() {
        println!("stage {k}: {} points", tower.size(k)?);
    }
    for k in 1..=tower.depth() {
        println!("stage {k} root residual {:.1e}", tower.root_residual(k)?);
    }
    println!("projections compose: {}", tower.projections_compatible()?);
    println!("projections onto: {}", tower.projections_surjective()?);

    let f = tower.combination(1, &vec![C64::new(0.5, 0.0); tower.stage(1)?.dim()])?;
    let up = tower.pullback_values(&f, 1, 2)?;
    let sup = |v: &[C64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    println!("sup before {:.6}, after pullback {:.6}", sup(&f), sup(&up));
    Ok(())
}
