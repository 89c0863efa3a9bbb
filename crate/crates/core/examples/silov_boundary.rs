// The Šilov boundary of the disc model: interior samples never survive.

use algext::cole::{attains_maxima, function_span, is_minimal_boundary, point_values, silov_boundary};
use algext::{Algebra, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let mut coords: Vec<C64> = (0..24)
        .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / 24.0))
        .collect();
    coords.extend([C64::new(0.0, 0.0), C64::new(0.3, -0.2), C64::new(-0.4, 0.1)]);
    let disc = Algebra::poly_model(PointSet::with_coords(coords)?, 4)?;
    let tol = ToleranceProfile::default();

    let span = function_span(&disc);
    let boundary = silov_boundary(&span, &tol)?;
    let labels: Vec<&str> = boundary.iter().map(|&p| disc.points().labels()[p].as_str()).collect();
    println!("boundary: {} of {} points", boundary.len(), disc.points().len());
    println!("{labels:?}");
    let values = point_values(&span)?;
    println!("attains maxima: {}", attains_maxima(&values, &boundary));
    println!("minimal: {}", is_minimal_boundary(&values, &boundary, &tol));
    Ok(())
}
