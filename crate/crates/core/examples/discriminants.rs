// Resultants, discriminants and power sums over a pointwise algebra.

use algext::poly::{discriminant, power_sums, resultant};
use algext::{Algebra, MonicPoly, PointSet, C64};

fn main() -> algext::Result<()> {
    let a = Algebra::pointwise(PointSet::labelled(3));
    let el = |v: [f64; 3]| a.element(v.iter().map(|&x| C64::new(x, 0.0)).collect());

    // x^2 + b x + c: the discriminant is 4c - b^2.
    let b = el([2.0, 0.0, 1.0])?;
    let c = el([1.0, -1.0, 3.0])?;
    let quad = MonicPoly::new(a.clone(), vec![c, b])?;
    println!("disc(x^2 + bx + c) = {}", show(discriminant(&quad)?.data()));

    for n in 2..=5 {
        let binom = MonicPoly::binomial(n, el([1.0, 0.5, -2.0])?)?;
        println!("disc(x^{n} + a0) = {}", show(discriminant(&binom)?.data()));
    }

    let f = quad.to_ring_poly();
    println!("res(f, f') = {}", show(resultant(&f, &quad.derivative())?.data()));

    let cubic = MonicPoly::new(a.clone(), vec![el([-6.0, 0.0, 1.0])?, el([11.0, -1.0, 0.0])?, el([-6.0, 0.0, 0.0])?])?;
    for (k, q) in power_sums(&cubic)?.iter().enumerate() {
        println!("p_{k} = {}", show(q.data()));
    }
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    format!("[{}]", parts.join(", "))
}
