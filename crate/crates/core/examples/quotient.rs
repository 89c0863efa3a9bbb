// Divide a non-tractable extension by its radical.

use algext::extension::{ah_extend, power_sum_parameter, quotient_by_radical};
use algext::{Algebra, MonicPoly, PointSet, ToleranceProfile, C64};

fn main() -> algext::Result<()> {
    let a = Algebra::pointwise(PointSet::labelled(3));
    let a0 = a.element(vec![C64::new(-1.0, 0.0), C64::new(0.0, 0.0), C64::new(-4.0, 0.0)])?;
    let alpha = MonicPoly::binomial(2, a0)?;
    let t = power_sum_parameter(&alpha)?;
    let b = ah_extend(&a, &alpha, Some(t))?;
    let q = quotient_by_radical(&b, &ToleranceProfile::default())?;
    println!("dim B = {}, radical {}, quotient {}", b.dim(), q.radical().len(), q.dim());
    println!("quotient tractable: {}", q.is_tractable());

    let x = b.x_bar()?;
    let n = q.norm(&x)?;
    println!("|x| = {:.6}, |x + R| in [{:.6}, {:.6}]", x.norm(), n.lower_bound, n.value);

    let u = a.element(vec![C64::new(2.0, 0.0), C64::new(0.0, 1.0), C64::new(-0.5, 0.0)])?;
    let nu = q.norm(&b.embed(&u)?)?;
    println!("|u| = {:.6}, |u + R| = {:.6} (t = {:.4})", u.norm(), nu.value, t.t);
    Ok(())
}
