// A standard tower, its characters, and the universal property.

use algext::extension::{ah_extend, standard_extend, universal_map, TowerOptions};
use algext::{Algebra, MonicPoly, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let tol = ToleranceProfile::default();
    let a = Algebra::pointwise(PointSet::labelled(2));
    let el = |v: [f64; 2]| a.element(v.iter().map(|&x| C64::new(x, 0.0)).collect());
    let square = MonicPoly::binomial(2, el([-2.0, -3.0])?)?;
    let cube = MonicPoly::binomial(3, el([-1.0, 5.0])?)?;
    let tower = standard_extend(&a, &[square.clone(), cube], &TowerOptions::default())?;
    for (k, layer) in tower.layers().iter().enumerate() {
        println!("layer {k}: dim {}", layer.dim());
    }
    let top_chars = tower.characters(&tol)?;
    println!("{} characters on top", top_chars.len());
    let chi = &top_chars[4];
    println!("restricted to layer 1: {}", show(&tower.restrict_character(chi, 1)?.root_path));
    let low = tower.restrict_character(chi, 1)?;
    println!("extended back up: {}", show(&tower.extend_character(&low, &tol)?.root_path));

    // B = A[x]/(x^2 - a0) maps into any algebra containing a root of x^2 - a0.
    let b = ah_extend(&a, &square, None)?;
    let phi0 = tower.embedding(0, tower.height())?;
    let root = tower.lift(&tower.layer(1)?.x_bar()?, tower.height())?;
    let map = universal_map(&phi0, &b, &root, &tol)?;
    println!("multiplicativity defect {:.1e}", map.multiplicativity_defect()?);
    println!("x maps to the layer-1 root: {}", map.apply(&b.x_bar()?)?.approx_eq(&root));
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    format!("[{}]", parts.join(", "))
}
