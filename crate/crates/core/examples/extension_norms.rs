// Adjoin a root of a cubic to C^3 and look at the extension norm.

use algext::extension::{ah_extend, condition_sides, min_norm_parameter, norm_equivalence_constants, NormParameter};
use algext::{Algebra, MonicPoly, PointSet, C64};

fn main() -> algext::Result<()> {
    let a = Algebra::pointwise(PointSet::labelled(3));
    let c = |re: f64, im: f64| C64::new(re, im);
    let a0 = a.element(vec![c(1.0, 0.0), c(-0.5, 0.5), c(0.0, 2.0)])?;
    let a1 = a.element(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.25, 0.0)])?;
    let alpha = MonicPoly::new(a.clone(), vec![a0, a1, a.zero()])?;

    let t = min_norm_parameter(&alpha);
    let (lhs, rhs) = condition_sides(&alpha, t.t);
    println!("minimal t = {:.6}  (t^3 = {lhs:.6}, sum |a_k| t^k = {rhs:.6})", t.t);

    let b = ah_extend(&a, &alpha, None)?;
    let x = b.x_bar()?;
    println!("dim B = {}, |x| = {:.6}", b.dim(), x.norm());

    // x^3 reduces to -a1 x - a0.
    let x3 = x.pow(3)?;
    for (k, coeff) in x3.coefficients()?.iter().enumerate() {
        println!("  x^3 coefficient {k}: {}", show(coeff.data()));
    }
    println!("|x^3| = {:.6} <= |x|^3 = {:.6}", x3.norm(), x.norm().powi(3));

    let u = a.element(vec![c(3.0, 0.0), c(0.0, -1.0), c(0.5, 0.5)])?;
    println!("|u| = {:.6}, |embed(u)| = {:.6}", u.norm(), b.embed(&u)?.norm());

    let wide = NormParameter::new(2.0 * t.t);
    let b2 = ah_extend(&a, &alpha, Some(wide))?;
    let (k1, k2) = norm_equivalence_constants(&alpha, t, wide)?;
    let y = b.from_coefficients(&[u.clone(), u.clone(), a.one()])?;
    let y2 = b2.element(y.data().to_vec())?;
    println!(
        "{k1:.4} * {:.4} <= {:.4} <= {k2:.4} * {:.4}",
        y2.norm(),
        y.norm(),
        y2.norm()
    );
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    format!("[{}]", parts.join(", "))
}
