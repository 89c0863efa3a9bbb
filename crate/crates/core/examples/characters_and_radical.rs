// Characters, the radical and tractability of x^2 - a0 over C^2 when a0
// vanishes somewhere and when it does not.

use algext::extension::{ah_extend, tractability_forecast};
use algext::gelfand::{characters, gelfand_matrix, radical, spectral_radius};
use algext::{Algebra, MonicPoly, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let a = Algebra::pointwise(PointSet::labelled(2));
    let tol = ToleranceProfile::default();
    for values in [[1.0, 0.0], [1.0, 2.0]] {
        let a0 = a.element(values.iter().map(|&v| C64::new(v, 0.0)).collect())?;
        let alpha = MonicPoly::binomial(2, -&a0)?;
        let b = ah_extend(&a, &alpha, None)?;
        let chars = characters(&b)?;
        println!("a0 = {values:?}: {} characters", chars.len());
        for chi in &chars {
            println!("  point {} -> x = {:.4}", chi.base_point, chi.root_path[0]);
        }
        let g = gelfand_matrix(&b, &chars)?;
        println!("  Gelfand matrix {}x{}", g.nrows(), g.ncols());
        let rad = radical(&b)?;
        println!("  radical dimension {}", rad.len());
        for r in &rad {
            println!("    generator {}, spectral radius {:.2e}", show(r.data()), spectral_radius(r)?);
        }
        let forecast = tractability_forecast(&a, &alpha, &tol)?;
        println!("  discriminant criterion says: {}", forecast.prediction.as_str());
    }
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    format!("[{}]", parts.join(", "))
}
