//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails or exceeds its time budget.

mod common;

use std::time::{Duration, Instant};

use algext::cole::{
    attains_maxima, cole_tower, compare_extensions, function_span, point_values, silov_boundary, StagePoly, StageTerm,
    Verdict,
};
use algext::extension::{ah_extend, quotient_by_radical, NormParameter, StandardTower};
use algext::gelfand::{characters_with, radical_with};
use algext::poly::{discriminant, MonicPoly, RingPoly};
use algext::scenario::{generate_example, run, Operation};
use algext::{Algebra, Element, PointSet, ToleranceProfile, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{c, dense_circle_max, disc_algebra, oracle_characters, random_c, random_element, random_monic, same_vector};

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: Check,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: algext::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn discriminant_closed_forms() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for trial in 0..40 {
        let dim = 1 + trial % 5;
        let a = Algebra::pointwise(PointSet::labelled(dim));
        let b = random_element(&a, &mut rng);
        let cc = random_element(&a, &mut rng);
        let alpha = lib(MonicPoly::new(a.clone(), vec![cc.clone(), b.clone()]))?;
        let d = lib(discriminant(&alpha))?;
        for p in 0..dim {
            let expect = cc.data()[p] * 4.0 - b.data()[p] * b.data()[p];
            worst = worst.max((d.data()[p] - expect).norm());
        }
        for n in 2..=5usize {
            let a0 = random_element(&a, &mut rng);
            let d = lib(discriminant(&lib(MonicPoly::binomial(n, a0.clone()))?))?;
            for p in 0..dim {
                let expect = a0.data()[p].powu(n as u32 - 1) * (n as f64).powi(n as i32);
                worst = worst.max((d.data()[p] - expect).norm());
            }
        }
    }
    ensure(worst <= 1e-9, || format!("max elementwise error {worst:e}"))?;
    Ok(format!("max elementwise error {worst:.2e}"))
}

fn dichotomy() -> Result<String, String> {
    let a = Algebra::pointwise(PointSet::labelled(2));
    let tol = ToleranceProfile::default();
    let make = |a0: [f64; 2]| -> Result<Algebra, String> {
        let a0 = lib(a.element(vec![c(a0[0], 0.0), c(a0[1], 0.0)]))?;
        let alpha = lib(MonicPoly::binomial(2, -&a0))?;
        lib(ah_extend(&a, &alpha, None))
    };
    let degenerate = make([1.0, 0.0])?;
    let rad = lib(radical_with(&degenerate, &tol))?;
    ensure(rad.len() == 1, || format!("radical dimension {} for a0 = (1,0)", rad.len()))?;
    let e2 = lib(a.element(vec![c(0.0, 0.0), c(1.0, 0.0)]))?;
    let target = lib(lib(degenerate.embed(&e2))?.checked_mul(&lib(degenerate.x_bar())?))?;
    let overlap: C64 = rad[0].data().iter().zip(target.data()).map(|(x, y)| x.conj() * y).sum();
    let norms = rad[0].data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
        * target.data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let cosine = overlap.norm() / norms;
    ensure(cosine >= 1.0 - 1e-9, || format!("radical generator not parallel to (0,1)x̄: cos {cosine}"))?;
    let regular = make([1.0, 2.0])?;
    let rad2 = lib(radical_with(&regular, &tol))?;
    ensure(rad2.is_empty(), || format!("radical dimension {} for a0 = (1,2)", rad2.len()))?;
    Ok(format!("radical dims 1 and 0, generator cosine {cosine:.12}"))
}

struct Backend {
    name: &'static str,
    alg: Algebra,
    /// Ground-coefficient generator whose products stay inside the model.
    ground_degree: Option<usize>,
}

fn norm_backends() -> Result<Vec<Backend>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pw = Algebra::pointwise(PointSet::labelled(4));
    let disc = disc_algebra(32, &[], 8);
    let cubic = random_monic(&pw, 3, &mut rng);
    let pw_ext = lib(ah_extend(&pw, &cubic, None))?;
    let sqrt_z = lib(MonicPoly::binomial(2, lib(disc.from_z_poly(&[c(0.0, 0.0), c(-1.0, 0.0)]))?))?;
    let disc_ext = lib(ah_extend(&disc, &sqrt_z, Some(NormParameter::new(1.0))))?;
    Ok(vec![
        Backend { name: "pointwise", alg: pw, ground_degree: None },
        Backend { name: "poly_model", alg: disc.clone(), ground_degree: Some(4) },
        Backend { name: "extension/pointwise", alg: pw_ext, ground_degree: None },
        Backend { name: "extension/poly_model", alg: disc_ext, ground_degree: Some(3) },
    ])
}

/// A random element whose ground coefficients have z-degree at most `deg`.
fn sample(alg: &Algebra, ground_degree: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Element, String> {
    let Some(deg) = ground_degree else {
        return Ok(random_element(alg, rng));
    };
    let ground = alg.ground();
    let d = ground.dim();
    let mut data = Vec::with_capacity(alg.dim());
    for _ in 0..alg.dim() / d {
        for j in 0..d {
            data.push(if j <= deg { random_c(rng) } else { c(0.0, 0.0) });
        }
    }
    lib(alg.element(data))
}

fn norm_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst_embed: f64 = 0.0;
    let mut checked = 0usize;
    for be in norm_backends()? {
        let alg = &be.alg;
        let err = |what: &str| format!("{}: {what}", be.name);
        ensure(alg.zero().norm() == 0.0, || err("norm of zero"))?;
        ensure((alg.one().norm() - 1.0).abs() <= 1e-12, || err("norm of one"))?;
        for _ in 0..500 {
            let x = sample(alg, be.ground_degree, &mut rng)?;
            let y = sample(alg, be.ground_degree, &mut rng)?;
            let (nx, ny) = (x.norm(), y.norm());
            ensure(nx > 0.0, || err("positivity"))?;
            let lambda = random_c(&mut rng);
            let scaled = x.scale(lambda).norm();
            ensure((scaled - lambda.norm() * nx).abs() <= 1e-12 * (1.0 + scaled), || err("homogeneity"))?;
            let sum = lib(x.checked_add(&y))?.norm();
            ensure(sum <= nx + ny + 1e-12 * (1.0 + nx + ny), || err("triangle inequality"))?;
            let prod = lib(x.checked_mul(&y))?.norm();
            ensure(prod <= nx * ny * (1.0 + 1e-12) + 1e-12, || err("submultiplicativity"))?;
            checked += 1;
        }
        let Some(ext) = alg.extension() else { continue };
        let base = ext.base.clone();
        let alpha = ext.alpha.to_ring_poly();
        let t = ext.t.t;
        let weighted = |p: &RingPoly| -> f64 {
            p.coeffs().iter().enumerate().map(|(k, c)| c.norm() * t.powi(k as i32)).sum()
        };
        for _ in 0..500 {
            let a = sample(&base, be.ground_degree, &mut rng)?;
            let lifted = lib(alg.embed(&a))?;
            worst_embed = worst_embed.max((lifted.norm() - a.norm()).abs());
            let r = sample(alg, be.ground_degree, &mut rng)?;
            let reduced = r.norm();
            let coeffs = lib(r.coefficients())?;
            let rep = lib(RingPoly::new(base.clone(), coeffs))?;
            for _ in 0..50 {
                let q_deg = rng.random_range(0..3usize);
                let q_coeffs = (0..=q_deg)
                    .map(|_| sample(&base, be.ground_degree.map(|d| d.min(2)), &mut rng))
                    .collect::<Result<Vec<_>, _>>()?;
                let q = lib(RingPoly::new(base.clone(), q_coeffs))?;
                let other = lib(rep.checked_add(&lib(q.checked_mul(&alpha))?))?;
                let w = weighted(&other);
                ensure(w >= reduced * (1.0 - 1e-12) - 1e-12, || {
                    err(&format!("representative norm {w} below reduced norm {reduced}"))
                })?;
            }
        }
    }
    ensure(worst_embed <= 1e-12, || format!("embedding deviation {worst_embed:e}"))?;
    Ok(format!("{checked} samples, 50 representatives each, embedding deviation {worst_embed:.1e}"))
}

fn random_tower(rng: &mut ChaCha8Rng) -> Result<StandardTower, String> {
    let dim = rng.random_range(1..=3usize);
    let ground = Algebra::pointwise(PointSet::labelled(dim));
    let mut tower = StandardTower::new(&ground);
    let height = rng.random_range(1..=3usize);
    for _ in 0..height {
        let owner_layer = rng.random_range(0..tower.layers().len());
        let owner = tower.layers()[owner_layer].clone();
        let degree = rng.random_range(1..=if tower.top().dim() > 12 { 2 } else { 3 });
        let alpha = random_monic(&owner, degree, rng);
        lib(tower.push(&alpha, None, true))?;
    }
    Ok(tower)
}

fn character_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tol = ToleranceProfile::default();
    let mut total = 0usize;
    for trial in 0..40 {
        let tower = random_tower(&mut rng)?;
        let top = tower.top();
        let found = lib(tower.characters(&tol))?;
        let expected = oracle_characters(&tower, &mut rng)?;
        ensure(found.len() == expected.len(), || {
            format!("tower {trial}: {} characters, oracle {}", found.len(), expected.len())
        })?;
        for chi in &found {
            let w = lib(chi.functional(top))?;
            ensure(expected.iter().any(|v| same_vector(v, &w, 1e-7)), || {
                format!("tower {trial}: character {chi:?} not found by the oracle")
            })?;
        }
        for (k, layer) in tower.layers().iter().enumerate() {
            for chi in lib(characters_with(layer, &tol))? {
                let w = lib(chi.functional(layer))?;
                let mut hit = false;
                for h in &found {
                    let r = lib(tower.restrict_character(h, k))?;
                    hit |= same_vector(&lib(r.functional(layer))?, &w, 1e-7);
                }
                ensure(hit, || format!("tower {trial}: restriction to layer {k} misses {chi:?}"))?;
            }
        }
        total += found.len();
    }
    Ok(format!("40 towers, {total} characters matched, restrictions surjective"))
}

fn example_norm_gap() -> Result<String, String> {
    let scenario = generate_example("disc-sqrt-z").map_err(|e| e.to_string())?;
    let report = run(&scenario, Some(&[Operation::Norms])).map_err(|e| e.to_string())?;
    let probe = &report.operations[0].outputs["probes"][0];
    let ah = probe["ah_norm"].as_f64().ok_or("missing ah_norm")?;
    let cole = probe["cole_sup_norm"].as_f64().ok_or("missing cole_sup_norm")?;
    let oracle = dense_circle_max(
        |v| {
            let w = v * v;
            (w + 1.0) * 0.5 + v * (w - 1.0) * 0.5
        },
        200_000,
    );
    ensure((ah - 2.0).abs() <= 1e-9, || format!("AH norm {ah}"))?;
    ensure(cole <= 1.34, || format!("Cole sup norm {cole}"))?;
    ensure((cole - oracle).abs() <= 1e-2, || format!("Cole sup norm {cole} vs grid oracle {oracle}"))?;
    Ok(format!("AH norm {ah:.12}, Cole sup norm {cole:.6}, grid oracle {oracle:.6}"))
}

fn silov_on_disc() -> Result<String, String> {
    let scenario = generate_example("disc-silov").map_err(|e| e.to_string())?;
    let report = run(&scenario, Some(&[Operation::Silov])).map_err(|e| e.to_string())?;
    let boundary: Vec<usize> = report.operations[0].outputs["boundary"]
        .as_array()
        .ok_or("missing boundary")?
        .iter()
        .map(|v| v.as_u64().map(|x| x as usize).ok_or("bad index"))
        .collect::<Result<_, _>>()?;
    // Rebuild the grid to check against it directly.
    let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
    let mut interior = Vec::new();
    for _ in 0..20 {
        let r = 0.45 * rng.random::<f64>().sqrt();
        let theta = std::f64::consts::TAU * rng.random::<f64>();
        interior.push(C64::from_polar(r, theta));
    }
    let alg = disc_algebra(48, &interior, 6);
    let coords = alg.points().coords().ok_or("grid without coordinates")?.to_vec();
    ensure(boundary.iter().all(|&p| coords[p].norm() > 1.0 - 1e-12), || {
        format!("interior sample in boundary {boundary:?}")
    })?;
    let direct = lib(silov_boundary(&function_span(&alg), &ToleranceProfile::default()))?;
    ensure(direct == boundary, || "report and library disagree".into())?;
    let mut probe_rng = ChaCha8Rng::seed_from_u64(6);
    let functions: Vec<Element> = (0..200).map(|_| random_element(&alg, &mut probe_rng)).collect();
    let values = lib(point_values(&functions))?;
    for f in &values {
        let all = f.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let on = boundary.iter().map(|&p| f[p].norm()).fold(0.0, f64::max);
        ensure(on >= all * (1.0 - 1e-12), || format!("maximum {all} not attained on boundary ({on})"))?;
    }
    ensure(attains_maxima(&lib(point_values(&function_span(&alg)))?, &boundary), || {
        "basis maxima not attained".into()
    })?;
    Ok(format!("{} of 68 points, no interior sample, 200 random maxima attained", boundary.len()))
}

fn classifier() -> Result<String, String> {
    let tol = ToleranceProfile::default();
    let disc = disc_algebra(64, &[], 8);
    let z = |coeffs: &[C64]| lib(disc.from_z_poly(coeffs));
    let sqrt_z = lib(MonicPoly::binomial(2, z(&[c(0.0, 0.0), c(-1.0, 0.0)])?))?;
    let iso = lib(compare_extensions(&disc, &sqrt_z, &tol))?;
    ensure(iso.verdict == Verdict::TopologicallyIsomorphic, || format!("x^2 - z: {}", iso.verdict.as_str()))?;
    let shifted = lib(MonicPoly::binomial(2, z(&[c(1.0, 0.0), c(-1.0, 0.0)])?))?;
    let not = lib(compare_extensions(&disc, &shifted, &tol))?;
    ensure(not.verdict == Verdict::NotIsomorphic, || format!("x^2 - (z-1): {}", not.verdict.as_str()))?;
    ensure(!not.discriminant_is_zero_divisor, || "x^2 - (z-1): discriminant flagged as zero divisor".into())?;
    ensure(not.topological.boundary_min <= 1e-6, || {
        format!("x^2 - (z-1): boundary minimum {}", not.topological.boundary_min)
    })?;
    let pw = Algebra::pointwise(PointSet::labelled(2));
    let a0 = lib(pw.element(vec![c(-1.0, 0.0), c(0.0, 0.0)]))?;
    let fails = lib(compare_extensions(&pw, &lib(MonicPoly::binomial(2, a0))?, &tol))?;
    ensure(fails.verdict == Verdict::TractabilityFails, || format!("pointwise: {}", fails.verdict.as_str()))?;
    Ok(format!(
        "{} / {} (boundary min {:.1e}) / {}",
        iso.verdict.as_str(),
        not.verdict.as_str(),
        not.topological.boundary_min,
        fails.verdict.as_str()
    ))
}

fn discriminant_criterion() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let tol = ToleranceProfile::default();
    let (mut tested, mut skipped) = (0, 0);
    while tested < 200 {
        let a = if rng.random_bool(0.75) {
            Algebra::pointwise(PointSet::labelled(rng.random_range(1..=4)))
        } else {
            disc_algebra(12, &[c(0.0, 0.0)], 3)
        };
        let degree = rng.random_range(2..=4);
        let alpha = if a.points().coords().is_some() {
            // Constant coefficients keep products inside the polynomial model.
            let lower = (0..degree).map(|_| a.constant(random_c(&mut rng))).collect();
            lib(MonicPoly::new(a.clone(), lower))?
        } else {
            random_monic(&a, degree, &mut rng)
        };
        let d = lib(discriminant(&alpha))?;
        if lib(d.is_zero_divisor())? || d.is_zero() {
            skipped += 1;
            continue;
        }
        let b = lib(ah_extend(&a, &alpha, None))?;
        let rad = lib(radical_with(&b, &tol))?;
        ensure(rad.is_empty(), || format!("counterexample: radical dimension {} for {alpha:?}", rad.len()))?;
        tested += 1;
    }
    Ok(format!("{tested} tractable, {skipped} skipped, 0 counterexamples"))
}

fn finite_model_of_j() -> Result<String, String> {
    let scenario = generate_example("theorem-3-15").map_err(|e| e.to_string())?;
    let report = run(&scenario, Some(&[Operation::Discriminant, Operation::Tractable])).map_err(|e| e.to_string())?;
    let mut coords: Vec<C64> = (0..=6).map(|j| c(0.5 + j as f64 / 12.0, 0.0)).collect();
    coords.push(c(0.0, 0.0));
    let a = Algebra::pointwise(lib(PointSet::with_coords(coords.clone()))?);
    let f0 = lib(a.element(coords))?;
    let mut e1 = vec![c(0.0, 0.0); 8];
    e1[7] = c(1.0, 0.0);
    let e1 = lib(a.element(e1))?;
    ensure(lib(e1.checked_mul(&f0))?.is_zero(), || "e1 f0 != 0".into())?;
    ensure(lib(f0.is_zero_divisor())?, || "f0 not flagged as zero divisor".into())?;
    let b = lib(ah_extend(&a, &lib(MonicPoly::binomial(2, -&f0))?, None))?;
    let tractable = lib(quotient_by_radical(&b, &ToleranceProfile::default()))?.is_identity();
    ensure(!tractable, || "extension by x^2 - f0 is tractable".into())?;
    let tr = &report.operations[1].outputs;
    ensure(tr["extensions"][0]["tractable"] == false, || "report calls the extension tractable".into())?;
    let note = tr["completion"].as_str().unwrap_or_default();
    ensure(note.contains("out of scope"), || "report lacks the completion note".into())?;
    Ok("e1 f0 = 0, radical non-trivial, completion statement marked out of scope".into())
}

fn cole_tower_stages() -> Result<String, String> {
    let tol = ToleranceProfile::default();
    let alg = disc_algebra(16, &[c(0.0, 0.0), c(0.3, 0.1)], 4);
    let z = lib(alg.from_z_poly(&[c(0.0, 0.0), c(-1.0, 0.0)]))?;
    let stage1 = StagePoly { lower: vec![vec![StageTerm::Ground(z)], vec![]] };
    let stage2 = StagePoly {
        lower: vec![vec![StageTerm::Root { index: 0, scale: c(-1.0, 0.0) }], vec![]],
    };
    let tower = lib(cole_tower(&alg, &[vec![stage1], vec![stage2]], 2, &tol))?;
    let s1 = lib(tower.stage(1))?;
    let s2 = lib(tower.stage(2))?;
    let r1 = lib(s1.root_function(0))?;
    let r2 = lib(s2.root_function(0))?;
    let up_r1 = lib(tower.pullback_values(r1.data(), 1, 2))?;
    let coords = alg.points().coords().ok_or("no coordinates")?;
    let up_z: Vec<C64> = lib(tower.projection(2, 0))?.into_iter().map(|p| coords[p]).collect();
    let mut residual: f64 = 0.0;
    for i in 0..up_z.len() {
        residual = residual.max((r2.data()[i] * r2.data()[i] - up_r1[i]).norm());
        residual = residual.max((up_r1[i] * up_r1[i] - up_z[i]).norm());
    }
    ensure(residual <= 1e-8, || format!("root residual {residual:e}"))?;
    ensure(lib(s2.contains(&lib(s2.ambient().element(up_r1.clone()))?))?, || {
        "stage-1 root not in stage 2".into()
    })?;
    ensure(lib(tower.projections_compatible())?, || "projections do not compose".into())?;
    let p21 = lib(tower.projection(2, 1))?;
    let p10 = lib(tower.projection(1, 0))?;
    let composed: Vec<usize> = p21.iter().map(|&j| p10[j]).collect();
    ensure(composed == lib(tower.projection(2, 0))?, || "pi_20 != pi_10 pi_21".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let from = i % 2;
        let dim = if from == 0 { alg.dim() } else { s1.dim() };
        let coeffs: Vec<C64> = (0..dim).map(|_| random_c(&mut rng)).collect();
        let f = lib(tower.combination(from, &coeffs))?;
        let g = lib(tower.pullback_values(&f, from, 2))?;
        let sup = |v: &[C64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        worst = worst.max((sup(&g) - sup(&f)).abs());
        ensure(lib(s2.contains(&lib(s2.ambient().element(g))?))?, || "pullback leaves stage 2".into())?;
    }
    ensure(worst <= 1e-12, || format!("pullback changes sup norm by {worst:e}"))?;
    Ok(format!(
        "stage sizes {}/{}/{}, root residual {residual:.1e}, pullback deviation {worst:.1e}",
        alg.points().len(),
        s1.space().len(),
        s2.space().len()
    ))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "discriminant closed forms", budget: Duration::from_secs(1), check: discriminant_closed_forms },
        Criterion { id: 2, name: "zero-divisor dichotomy over C^2", budget: Duration::from_secs(1), check: dichotomy },
        Criterion { id: 3, name: "extension norm suite", budget: Duration::from_secs(10), check: norm_suite },
        Criterion { id: 4, name: "character oracle on towers", budget: Duration::from_secs(30), check: character_oracle },
        Criterion { id: 5, name: "norm gap on the disc", budget: Duration::from_secs(5), check: example_norm_gap },
        Criterion { id: 6, name: "Silov boundary of the disc model", budget: Duration::from_secs(30), check: silov_on_disc },
        Criterion { id: 7, name: "extension-comparison classifier", budget: Duration::from_secs(10), check: classifier },
        Criterion { id: 8, name: "discriminant tractability criterion", budget: Duration::from_secs(30), check: discriminant_criterion },
        Criterion { id: 9, name: "finite model of J", budget: Duration::from_secs(1), check: finite_model_of_j },
        Criterion { id: 10, name: "Cole tower stages", budget: Duration::from_secs(20), check: cole_tower_stages },
    ];
    let mut failures = 0;
    for cr in &criteria {
        let start = Instant::now();
        let result = (cr.check)();
        let elapsed = start.elapsed();
        let (status, detail) = match &result {
            Ok(detail) if elapsed <= cr.budget => ("PASS", detail.clone()),
            Ok(detail) => ("FAIL", format!("over budget; {detail}")),
            Err(e) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<38} {status} {:>8.3}s / {:>2}s  {detail}",
            cr.id,
            cr.name,
            elapsed.as_secs_f64(),
            cr.budget.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
