use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::{OperationReport, Provenance, Report};
use super::spec::{BackendKind, ElementSpec, Operation, PointsSpec, PolySpec, Scenario};
use super::{parse_scenario, ScenarioError};
use crate::algebra::{Algebra, Backend, Element, PointSet};
use crate::cole::{
    attains_maxima, cole_algebra, cole_tower, compare_extensions, function_span, is_minimal_boundary, naturality_of,
    point_values, rho_star, silov_boundary, ColeAlgebra, StagePoly, StageTerm,
};
use crate::error::{Error, Result};
use crate::extension::{
    ah_extend, condition_sides, min_norm_parameter, norm_equivalence_constants, power_sum_parameter,
    quotient_by_radical, standard_extend, tractability_forecast, NormParameter, TowerOptions,
};
use crate::gelfand::{characters_with, radical_with, Character};
use crate::poly::{discriminant, MonicPoly};
use crate::tolerance::ToleranceProfile;
use crate::C64;

/// Random samples used by the empirical checks inside reports.
const SAMPLES: usize = 20;
const PULLBACK_SAMPLES: usize = 100;

/// Read, validate and run a scenario file.
pub fn run_scenario(path: &std::path::Path) -> std::result::Result<Report, ScenarioError> {
    let text = std::fs::read_to_string(path).map_err(|e| ScenarioError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    run(&parse_scenario(&text)?, None)
}

/// Run `only` (or the scenario's own operation list) in dependency order.
pub fn run(scenario: &Scenario, only: Option<&[Operation]>) -> std::result::Result<Report, ScenarioError> {
    scenario.validate().map_err(ScenarioError::Validation)?;
    let mut ops: Vec<Operation> = only.map(<[Operation]>::to_vec).unwrap_or_else(|| scenario.operations.clone());
    if ops.is_empty() {
        return Err(ScenarioError::Validation("operation list is empty".into()));
    }
    ops.sort();
    ops.dedup();
    for op in &ops {
        if op.needs_polynomials() && scenario.polynomials.is_empty() {
            return Err(ScenarioError::Validation(format!("operation {} needs a polynomial", op.name())));
        }
    }
    let ctx = Context::new(scenario)?;
    let mut operations = Vec::with_capacity(ops.len());
    for op in ops {
        operations.push(ctx.run_op(op)?);
    }
    Ok(Report {
        scenario: scenario.name.clone(),
        operations,
        provenance: Provenance {
            tolerances: ctx.tol,
            parameters: json!({
                "t": scenario.parameters.t,
                "power_sum_t": scenario.parameters.power_sum_t,
            }),
            seed: scenario.seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
    })
}

fn cx(z: C64) -> Value {
    json!([z.re, z.im])
}

fn elem(e: &Element) -> Value {
    Value::Array(e.data().iter().map(|z| cx(*z)).collect())
}

fn refs(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

struct Context<'a> {
    scenario: &'a Scenario,
    tol: ToleranceProfile,
    ground: Algebra,
    polys: Vec<MonicPoly>,
}

fn build_points(spec: &PointsSpec, seed: u64) -> Result<PointSet> {
    match spec {
        PointsSpec::Count(n) => Ok(PointSet::labelled(*n)),
        PointsSpec::Coords(c) => PointSet::with_coords(c.iter().map(|z| C64::new(z[0], z[1])).collect()),
        PointsSpec::Disc(g) => {
            let mut coords: Vec<C64> = (0..g.boundary)
                .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / g.boundary as f64))
                .collect();
            coords.extend(g.interior.iter().map(|z| C64::new(z[0], z[1])));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..g.random_interior {
                let r = g.interior_radius * rng.random::<f64>().sqrt();
                let theta = std::f64::consts::TAU * rng.random::<f64>();
                coords.push(C64::from_polar(r, theta));
            }
            PointSet::with_coords(coords)
        }
    }
}

fn build_element(a: &Algebra, spec: &ElementSpec) -> Result<Element> {
    match spec {
        ElementSpec::Constant(z) => Ok(a.constant(C64::new(z[0], z[1]))),
        ElementSpec::Data(v) => a.element(v.iter().map(|z| C64::new(z[0], z[1])).collect()),
        ElementSpec::ZPoly(v) => a.from_z_poly(&v.iter().map(|z| C64::new(z[0], z[1])).collect::<Vec<_>>()),
        ElementSpec::RootFunction { .. } => Err(Error::Invalid("root functions exist only in Cole stages".into())),
        ElementSpec::Sum(parts) => parts
            .iter()
            .try_fold(a.zero(), |acc, p| acc.checked_add(&build_element(a, p)?)),
    }
}

fn stage_terms(a: &Algebra, spec: &ElementSpec) -> Result<Vec<StageTerm>> {
    match spec {
        ElementSpec::Constant(z) => Ok(vec![StageTerm::Constant(C64::new(z[0], z[1]))]),
        ElementSpec::RootFunction { index, scale } => {
            Ok(vec![StageTerm::Root { index: *index, scale: C64::new(scale[0], scale[1]) }])
        }
        ElementSpec::Sum(parts) => Ok(parts
            .iter()
            .map(|p| stage_terms(a, p))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect()),
        other => Ok(vec![StageTerm::Ground(build_element(a, other)?)]),
    }
}

fn build_poly(a: &Algebra, spec: &PolySpec) -> Result<MonicPoly> {
    let lower = spec.lower.iter().map(|e| build_element(a, e)).collect::<Result<Vec<_>>>()?;
    MonicPoly::new(a.clone(), lower)
}

fn random_element(a: &Algebra, rng: &mut ChaCha8Rng) -> Result<Element> {
    a.element(
        (0..a.dim())
            .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

impl<'a> Context<'a> {
    fn new(scenario: &'a Scenario) -> std::result::Result<Self, ScenarioError> {
        let tol = scenario.tolerances();
        let points = build_points(&scenario.algebra.points, scenario.seed)?;
        let ground = match scenario.algebra.backend {
            BackendKind::Pointwise => Algebra::pointwise(points),
            BackendKind::PolyModel => Algebra::poly_model(points, scenario.algebra.degree.unwrap_or(0))?,
        };
        let polys = scenario
            .polynomials
            .iter()
            .map(|p| build_poly(&ground, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Context { scenario, tol, ground, polys })
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.scenario.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
    }

    fn param(&self, alpha: &MonicPoly) -> Result<Option<NormParameter>> {
        if let Some(t) = self.scenario.parameters.t {
            Ok(Some(NormParameter::new(t)))
        } else if self.scenario.parameters.power_sum_t {
            Ok(Some(power_sum_parameter(alpha)?))
        } else {
            Ok(None)
        }
    }

    fn extend(&self, alpha: &MonicPoly) -> Result<Algebra> {
        ah_extend(&self.ground, alpha, self.param(alpha)?)
    }

    fn label(&self, p: usize) -> &str {
        &self.ground.points().labels()[p]
    }

    fn inputs(&self) -> Value {
        json!({
            "algebra": self.scenario.algebra,
            "polynomials": self.scenario.polynomials,
        })
    }

    fn run_op(&self, op: Operation) -> std::result::Result<OperationReport, ScenarioError> {
        let (outputs, references) = match op {
            Operation::Extend => self.op_extend()?,
            Operation::Characters => self.op_characters()?,
            Operation::Discriminant => self.op_discriminant()?,
            Operation::Tractable => self.op_tractable()?,
            Operation::Quotient => self.op_quotient()?,
            Operation::Cole => self.op_cole()?,
            Operation::Silov => self.op_silov()?,
            Operation::Compare => self.op_compare()?,
            Operation::Tower => self.op_tower()?,
            Operation::ColeTower => self.op_cole_tower()?,
            Operation::Norms => self.op_norms()?,
        };
        let mut inputs = self.inputs();
        if op == Operation::ColeTower {
            inputs["cole_stages"] = json!(self.scenario.cole_stages);
        }
        if op == Operation::Norms {
            inputs["probes"] = json!(self.scenario.probes);
        }
        Ok(OperationReport { operation: op.name().to_string(), inputs, outputs, references })
    }

    fn op_extend(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let mut rng = self.rng(1);
        let mut items = Vec::new();
        for alpha in &self.polys {
            let b = self.extend(alpha)?;
            let t = b.extension().expect("extension").t;
            let (lhs, rhs) = condition_sides(alpha, t.t);
            let min = min_norm_parameter(alpha);
            let mut deviation: f64 = 0.0;
            for _ in 0..SAMPLES {
                let a = random_element(&self.ground, &mut rng)?;
                deviation = deviation.max((b.embed(&a)?.norm() - a.norm()).abs());
            }
            let (k1, k2) = norm_equivalence_constants(alpha, min, t)?;
            items.push(json!({
                "degree": alpha.degree(),
                "dim": b.dim(),
                "t": t.t,
                "minimal": t.minimal,
                "min_t": min.t,
                "condition": {"t_pow_n": lhs, "weighted_coefficient_norms": rhs, "holds": true},
                "x_bar_norm": b.x_bar()?.norm(),
                "embedding_max_deviation": deviation,
                "equivalence_to_minimal": {"k1": k1, "k2": k2},
            }));
        }
        Ok((
            json!({"extensions": items}),
            refs(&[
                ("condition", "norm parameter condition t^n >= sum |a_k| t^k"),
                ("embedding_max_deviation", "isometric embedding of the base algebra"),
                ("equivalence_to_minimal", "equivalence of extension norms for different parameters"),
            ]),
        ))
    }

    fn op_characters(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let top = if self.polys.is_empty() {
            self.ground.clone()
        } else {
            let params = self.polys.iter().map(|p| self.param(p)).collect::<Result<Vec<_>>>()?;
            standard_extend(&self.ground, &self.polys, &TowerOptions { params, layer_coefficients: false })?
                .top()
                .clone()
        };
        let chars = characters_with(&top, &self.tol)?;
        let bound = self.ground.points().len() * self.polys.iter().map(|p| p.degree()).product::<usize>();
        let list: Vec<Value> = chars
            .iter()
            .map(|h| {
                json!({
                    "base_point": h.base_point,
                    "base_label": self.label(h.base_point),
                    "root_path": h.root_path.iter().map(|z| cx(*z)).collect::<Vec<_>>(),
                })
            })
            .collect();
        Ok((
            json!({
                "algebra_dim": top.dim(),
                "count": chars.len(),
                "upper_bound": bound,
                "characters": list,
            }),
            refs(&[("characters", "characters of an extension: base characters paired with roots of the mapped polynomial")]),
        ))
    }

    fn op_discriminant(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let mut items = Vec::new();
        for alpha in &self.polys {
            let a0 = alpha.coeff(0);
            let annihilator = match self.ground.backend() {
                Backend::Pointwise(_) if a0.is_zero_divisor()? => {
                    let data = a0
                        .data()
                        .iter()
                        .map(|z| if z.norm() <= crate::tolerance::ELEMENT_EQ_TOL { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
                        .collect();
                    let e = self.ground.element(data)?;
                    json!({"element": elem(&e), "product_max_abs": e.checked_mul(&a0)?.max_abs()})
                }
                _ => Value::Null,
            };
            let mut item = json!({
                "degree": alpha.degree(),
                "constant_term_is_zero_divisor": a0.is_zero_divisor()?,
                "constant_term_annihilator": annihilator,
            });
            if alpha.degree() >= 2 {
                let d = discriminant(alpha)?;
                item["discriminant"] = elem(&d);
                item["sup_norm"] = json!(d.norm());
                item["is_zero"] = json!(d.is_zero());
                item["is_zero_divisor"] = json!(d.is_zero_divisor()?);
            }
            items.push(item);
        }
        Ok((
            json!({"polynomials": items}),
            refs(&[(
                "discriminant",
                "resultant of the polynomial and its derivative; 4c - b^2 for x^2 + bx + c, n^n a0^(n-1) for x^n + a0",
            )]),
        ))
    }

    fn op_tractable(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let base_radical = radical_with(&self.ground, &self.tol)?;
        let mut items = Vec::new();
        for alpha in &self.polys {
            let b = self.extend(alpha)?;
            let radical = radical_with(&b, &self.tol)?;
            let forecast = if alpha.degree() >= 2 {
                let f = tractability_forecast(&self.ground, alpha, &self.tol)?;
                let consistent = match f.prediction {
                    crate::extension::Prediction::Tractable => radical.is_empty(),
                    crate::extension::Prediction::NotTractable => !radical.is_empty(),
                    crate::extension::Prediction::Unknown => true,
                };
                json!({
                    "prediction": f.prediction.as_str(),
                    "discriminant_is_zero": f.discriminant_is_zero,
                    "discriminant_is_zero_divisor": f.discriminant_is_zero_divisor,
                    "binomial_obstruction": f.binomial_obstruction,
                    "consistent_with_radical": consistent,
                })
            } else {
                Value::Null
            };
            items.push(json!({
                "degree": alpha.degree(),
                "dim": b.dim(),
                "t": b.extension().expect("extension").t.t,
                "radical_dim": radical.len(),
                "radical": radical.iter().map(elem).collect::<Vec<_>>(),
                "tractable": radical.is_empty(),
                "forecast": forecast,
            }));
        }
        Ok((
            json!({
                "base_tractable": base_radical.is_empty(),
                "extensions": items,
                "completion": "finite-dimensional models are complete; statements about completions are out of scope",
            }),
            refs(&[
                ("tractable", "radical computed as the kernel of the Gelfand transform"),
                ("prediction", "discriminant criterion; binomial criterion for x^n + a0"),
            ]),
        ))
    }

    fn op_quotient(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let mut rng = self.rng(5);
        let mut items = Vec::new();
        for alpha in &self.polys {
            let b = self.extend(alpha)?;
            let q = quotient_by_radical(&b, &self.tol)?;
            let root = alpha.lift_to(&b)?.eval(&b.x_bar()?)?;
            let mut deviation: f64 = 0.0;
            let mut gap: f64 = 0.0;
            let mut isometric = true;
            for _ in 0..SAMPLES {
                let a = random_element(&self.ground, &mut rng)?;
                let qn = q.norm(&b.embed(&a)?)?;
                let dev = (qn.value - a.norm()).abs();
                deviation = deviation.max(dev);
                gap = gap.max(qn.gap());
                isometric &= dev <= self.tol.convex_tol * (1.0 + a.norm()) + qn.gap();
            }
            items.push(json!({
                "parent_dim": b.dim(),
                "radical_dim": q.radical().len(),
                "dim": q.dim(),
                "identity": q.is_identity(),
                "tractable": q.is_tractable(),
                "root_class_vanishes": q.same_class(&root, &b.zero())?,
                "t": b.extension().expect("extension").t.t,
                "embedding": {
                    "samples": SAMPLES,
                    "max_deviation": deviation,
                    "max_certificate_gap": gap,
                    "isometric": isometric,
                },
            }));
        }
        Ok((
            json!({"quotients": items}),
            refs(&[
                ("tractable", "the quotient of an algebra by its radical is tractable"),
                ("embedding", "isometry of the base algebra in the quotient, expected when t^k >= |q_k|"),
            ]),
        ))
    }

    fn op_cole(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let alg = cole_algebra(&self.ground, &self.polys, &self.tol)?;
        let nat = naturality_of(&alg);
        let fibers: Vec<Value> = alg
            .space()
            .iter()
            .map(|q| {
                json!({
                    "base": q.base,
                    "base_label": self.label(q.base),
                    "roots": q.roots.iter().map(|z| cx(*z)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut out = json!({
            "space_size": nat.space_size,
            "dim": alg.dim(),
            "character_count": nat.character_count,
            "separates": nat.separates,
            "natural": nat.natural,
            "base_is_pointwise": matches!(self.ground.backend(), Backend::Pointwise(_)),
            "root_residual": alg.root_residual(),
            "roots_bounded": alg.roots_bounded(),
            "closure_rounds": alg.closure_rounds(),
            "fiber_points": fibers,
        });
        if self.polys.len() == 1 {
            out["rho_star"] = self.rho_check(&alg)?;
        }
        Ok((
            out,
            refs(&[
                ("natural", "naturality is inherited by the Cole extension of a natural algebra"),
                ("rho_star", "the comparison map from the extension into the Cole algebra is contractive"),
            ]),
        ))
    }

    fn rho_check(&self, alg: &ColeAlgebra) -> Result<Value> {
        let b = self.extend(&self.polys[0])?;
        let rho = rho_star(&b, alg)?;
        let chars = characters_with(&b, &self.tol)?;
        let mut rng = self.rng(7);
        let mut excess = f64::NEG_INFINITY;
        let mut isometric = true;
        for _ in 0..SAMPLES {
            let x = random_element(&b, &mut rng)?;
            let image = ColeAlgebra::sup_norm(&rho.apply(&x)?);
            let gelfand = gelfand_sup(&chars, &x)?;
            excess = excess.max(image - gelfand);
            isometric &= (image - gelfand).abs() <= 1e-9 * (1.0 + gelfand);
        }
        Ok(json!({
            "image_in_algebra": rho.image_in(alg),
            "max_excess_over_gelfand_norm": excess,
            "isometric_on_samples": isometric,
            "samples": SAMPLES,
        }))
    }

    fn op_silov(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let span = function_span(&self.ground);
        let boundary = silov_boundary(&span, &self.tol)?;
        let values = point_values(&span)?;
        let coords = self.ground.points().coords();
        let interior: Vec<usize> = match coords {
            Some(c) => boundary.iter().copied().filter(|&p| c[p].norm() < 1.0 - 1e-9).collect(),
            None => Vec::new(),
        };
        Ok((
            json!({
                "points": self.ground.points().len(),
                "span_dim": span.len(),
                "boundary": boundary,
                "labels": boundary.iter().map(|&p| self.label(p)).collect::<Vec<_>>(),
                "size": boundary.len(),
                "attains_maxima": attains_maxima(&values, &boundary),
                "minimal": is_minimal_boundary(&values, &boundary, &self.tol),
                "interior_survivors": interior,
            }),
            refs(&[("boundary", "unique minimal boundary, found by representing-measure feasibility")]),
        ))
    }

    fn op_compare(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let mut items = Vec::new();
        for alpha in self.polys.iter().filter(|p| p.degree() >= 2) {
            let c = compare_extensions(&self.ground, alpha, &self.tol)?;
            items.push(json!({
                "verdict": c.verdict.as_str(),
                "discriminant": elem(&c.discriminant),
                "discriminant_is_zero": c.discriminant_is_zero,
                "discriminant_is_zero_divisor": c.discriminant_is_zero_divisor,
                "boundary_size": c.boundary.len(),
                "boundary_min": c.topological.boundary_min,
                "boundary_argmin": self.label(c.topological.argmin),
                "threshold": c.topological.threshold,
                "topological_zero_divisor": c.topological.verdict,
            }));
        }
        Ok((
            json!({"comparisons": items}),
            refs(&[
                ("topological_zero_divisor", "an element is a topological zero divisor iff it vanishes on the Silov boundary"),
                (
                    "verdict",
                    "topologically isomorphic when the discriminant is no topological zero divisor; \
                     not isomorphic when it is one without being a zero divisor",
                ),
            ]),
        ))
    }

    fn op_tower(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let params = self.polys.iter().map(|p| self.param(p)).collect::<Result<Vec<_>>>()?;
        let tower = standard_extend(&self.ground, &self.polys, &TowerOptions { params, layer_coefficients: false })?;
        let top_chars = tower.characters(&self.tol)?;
        let mut layers = Vec::new();
        let mut surjective = true;
        let mut roundtrip = true;
        for (k, layer) in tower.layers().iter().enumerate() {
            let chars = characters_with(layer, &self.tol)?;
            let radical = radical_with(layer, &self.tol)?;
            let restricted = top_chars
                .iter()
                .map(|h| tower.restrict_character(h, k))
                .collect::<Result<Vec<Character>>>()?;
            for chi in &chars {
                let hit = restricted.iter().any(|r| same_character(layer, r, chi).unwrap_or(false));
                surjective &= hit;
                let full = tower.extend_character(chi, &self.tol)?;
                roundtrip &= tower.restrict_character(&full, k)? == *chi;
            }
            layers.push(json!({
                "layer": k,
                "dim": layer.dim(),
                "t": layer.extension().map(|e| e.t.t),
                "character_count": chars.len(),
                "radical_dim": radical.len(),
            }));
        }
        let mut rng = self.rng(9);
        let embed = tower.embedding(0, tower.height())?;
        let mut deviation: f64 = 0.0;
        for _ in 0..SAMPLES {
            let a = random_element(&self.ground, &mut rng)?;
            deviation = deviation.max((embed.apply(&a)?.norm() - a.norm()).abs());
        }
        Ok((
            json!({
                "height": tower.height(),
                "layers": layers,
                "character_count": top_chars.len(),
                "tractable": radical_with(tower.top(), &self.tol)?.is_empty(),
                "restriction_surjective": surjective,
                "extend_then_restrict_is_identity": roundtrip,
                "embedding_max_deviation": deviation,
            }),
            refs(&[
                ("restriction_surjective", "restriction of characters down a standard tower is surjective"),
                ("character_count", "characters of a tower are compatible root paths"),
            ]),
        ))
    }

    fn op_cole_tower(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let mut specs = vec![self.stage_polys(&self.scenario.polynomials)?];
        for stage in &self.scenario.cole_stages {
            specs.push(self.stage_polys(stage)?);
        }
        let tower = cole_tower(&self.ground, &specs, specs.len(), &self.tol)?;
        let mut stages = Vec::new();
        for k in 1..=tower.depth() {
            let s = tower.stage(k)?;
            let nat = naturality_of(s);
            stages.push(json!({
                "stage": k,
                "size": s.space().len(),
                "dim": s.dim(),
                "root_residual": tower.root_residual(k)?,
                "character_count": nat.character_count,
                "natural": nat.natural,
            }));
        }
        let mut rng = self.rng(13);
        let mut deviation: f64 = 0.0;
        let sup = |v: &[C64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for i in 0..PULLBACK_SAMPLES {
            let from = i % tower.depth();
            let dim = if from == 0 { self.ground.dim() } else { tower.stage(from)?.dim() };
            let coeffs: Vec<C64> = (0..dim)
                .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let f = tower.combination(from, &coeffs)?;
            for to in from + 1..=tower.depth() {
                let g = tower.pullback_values(&f, from, to)?;
                deviation = deviation.max((sup(&g) - sup(&f)).abs());
            }
        }
        Ok((
            json!({
                "depth": tower.depth(),
                "stages": stages,
                "projections_compatible": tower.projections_compatible()?,
                "projections_surjective": tower.projections_surjective()?,
                "pullback": {"samples": PULLBACK_SAMPLES, "max_sup_norm_deviation": deviation},
            }),
            refs(&[
                ("projections_compatible", "projections of an inverse system compose"),
                ("pullback", "pullback along a surjection is isometric"),
            ]),
        ))
    }

    fn stage_polys(&self, specs: &[PolySpec]) -> Result<Vec<StagePoly>> {
        specs
            .iter()
            .map(|p| {
                Ok(StagePoly {
                    lower: p.lower.iter().map(|e| stage_terms(&self.ground, e)).collect::<Result<Vec<_>>>()?,
                })
            })
            .collect()
    }

    fn op_norms(&self) -> Result<(Value, BTreeMap<String, String>)> {
        let alpha = &self.polys[0];
        let b = self.extend(alpha)?;
        let chars = characters_with(&b, &self.tol)?;
        let cole = cole_algebra(&self.ground, std::slice::from_ref(alpha), &self.tol)?;
        let rho = rho_star(&b, &cole)?;
        let mut items = Vec::new();
        for probe in &self.scenario.probes {
            let coeffs = probe
                .coefficients
                .iter()
                .map(|e| build_element(&self.ground, e))
                .collect::<Result<Vec<_>>>()?;
            let x = b.from_coefficients(&coeffs)?;
            let ah = x.norm();
            let cole_sup = ColeAlgebra::sup_norm(&rho.apply(&x)?);
            items.push(json!({
                "name": probe.name,
                "ah_norm": ah,
                "gelfand_norm": gelfand_sup(&chars, &x)?,
                "cole_sup_norm": cole_sup,
                "gap": ah - cole_sup,
            }));
        }
        Ok((
            json!({
                "t": b.extension().expect("extension").t.t,
                "fiber_points": cole.space().len(),
                "probes": items,
            }),
            refs(&[
                ("ah_norm", "extension norm sum |b_k| t^k of the reduced representative"),
                ("cole_sup_norm", "sup norm of the image on the fiber space"),
            ]),
        ))
    }
}

fn gelfand_sup(chars: &[Character], x: &Element) -> Result<f64> {
    let mut best: f64 = 0.0;
    for h in chars {
        best = best.max(h.evaluate(x)?.norm());
    }
    Ok(best)
}

fn same_character(alg: &Algebra, a: &Character, b: &Character) -> Result<bool> {
    let (wa, wb) = (a.functional(alg)?, b.functional(alg)?);
    Ok(wa.iter().zip(&wb).all(|(x, y)| (x - y).norm() <= crate::tolerance::CHARACTER_MERGE_TOL))
}
