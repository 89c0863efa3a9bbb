use super::spec::{
    AlgebraSpec, BackendKind, DiscGrid, ElementSpec, Format, Operation, Parameters, PointsSpec, PolySpec, ProbeSpec,
    Scenario,
};
use super::ScenarioError;

/// Names and one-line descriptions of the bundled examples.
pub const CATALOG: &[(&str, &str)] = &[
    ("disc-sqrt-z", "square root of z over the disc model: norm gap, comparison and Cole algebra"),
    ("example-4-4", "norm of (z+1)/2 + (z-1)/2 x̄ in the extension versus on the fiber space"),
    ("cole-feinstein-counterexample", "square root of z-1 over the disc model: the discriminant vanishes on the boundary"),
    ("corollary-2-11", "x^2 - a0 over C^2 with a0 = (1,0) and a0 = (1,2)"),
    ("theorem-3-15", "x^2 - f0 over samples of [1/2, 1] together with 0, f0 the inclusion"),
    ("disc-silov", "minimal boundary of span{1, z, ..., z^6} on boundary and interior samples"),
    ("cole-tower-sqrt", "two Cole stages: a square root of z, then a square root of that root"),
    ("tower-roots", "standard tower of x^2 - a and x^3 - b over C^3"),
    ("natural-cole", "Cole extension of C^3 by a square root: naturality and the comparison map"),
];

fn cx(re: f64, im: f64) -> [f64; 2] {
    [re, im]
}

fn z_poly(coeffs: &[(f64, f64)]) -> ElementSpec {
    ElementSpec::ZPoly(coeffs.iter().map(|&(re, im)| cx(re, im)).collect())
}

fn zero() -> ElementSpec {
    ElementSpec::Constant(cx(0.0, 0.0))
}

fn data(values: &[(f64, f64)]) -> ElementSpec {
    ElementSpec::Data(values.iter().map(|&(re, im)| cx(re, im)).collect())
}

fn disc(boundary: usize, interior: Vec<[f64; 2]>, random_interior: usize, degree: usize) -> AlgebraSpec {
    AlgebraSpec {
        backend: BackendKind::PolyModel,
        points: PointsSpec::Disc(DiscGrid { boundary, interior, random_interior, interior_radius: 0.45 }),
        degree: Some(degree),
    }
}

fn pointwise(n: usize) -> AlgebraSpec {
    AlgebraSpec { backend: BackendKind::Pointwise, points: PointsSpec::Count(n), degree: None }
}

fn base(name: &str, description: &str, algebra: AlgebraSpec, polynomials: Vec<PolySpec>, operations: Vec<Operation>) -> Scenario {
    Scenario {
        name: name.to_string(),
        description: Some(description.to_string()),
        algebra,
        polynomials,
        parameters: Parameters::default(),
        cole_stages: Vec::new(),
        probes: Vec::new(),
        operations,
        format: Format::Json,
        seed: 0,
    }
}

fn norm_gap_probe() -> ProbeSpec {
    ProbeSpec {
        name: "(z+1)/2 + (z-1)/2 x".into(),
        coefficients: vec![z_poly(&[(0.5, 0.0), (0.5, 0.0)]), z_poly(&[(-0.5, 0.0), (0.5, 0.0)])],
    }
}

/// `x² - z`.
fn sqrt_z() -> PolySpec {
    PolySpec { lower: vec![z_poly(&[(0.0, 0.0), (-1.0, 0.0)]), zero()] }
}

/// A fully parameterized scenario for a catalog entry.
pub fn generate_example(name: &str) -> Result<Scenario, ScenarioError> {
    let description = CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, d)| *d)
        .ok_or_else(|| ScenarioError::UnknownExample(name.to_string()))?;
    use Operation::*;
    let scenario = match name {
        "disc-sqrt-z" => {
            let mut s = base(
                name,
                description,
                disc(64, vec![], 0, 8),
                vec![sqrt_z()],
                vec![Extend, Norms, Discriminant, Compare, Cole],
            );
            s.parameters.t = Some(1.0);
            s.probes = vec![norm_gap_probe()];
            s
        }
        "example-4-4" => {
            let mut s = base(name, description, disc(64, vec![], 0, 8), vec![sqrt_z()], vec![Extend, Norms]);
            s.parameters.t = Some(1.0);
            s.probes = vec![norm_gap_probe()];
            s
        }
        "cole-feinstein-counterexample" => base(
            name,
            description,
            disc(64, vec![], 0, 8),
            vec![PolySpec { lower: vec![z_poly(&[(1.0, 0.0), (-1.0, 0.0)]), zero()] }],
            vec![Discriminant, Compare],
        ),
        "corollary-2-11" => base(
            name,
            description,
            pointwise(2),
            vec![
                PolySpec { lower: vec![data(&[(-1.0, 0.0), (0.0, 0.0)]), zero()] },
                PolySpec { lower: vec![data(&[(-1.0, 0.0), (-2.0, 0.0)]), zero()] },
            ],
            vec![Discriminant, Tractable, Quotient],
        ),
        "theorem-3-15" => {
            let mut coords: Vec<[f64; 2]> = (0..7).map(|j| cx(0.5 + j as f64 / 12.0, 0.0)).collect();
            coords.push(cx(0.0, 0.0));
            let algebra = AlgebraSpec { backend: BackendKind::Pointwise, points: PointsSpec::Coords(coords), degree: None };
            base(
                name,
                description,
                algebra,
                vec![PolySpec { lower: vec![z_poly(&[(0.0, 0.0), (-1.0, 0.0)]), zero()] }],
                vec![Discriminant, Tractable],
            )
        }
        "disc-silov" => {
            let mut s = base(name, description, disc(48, vec![], 20, 6), vec![], vec![Silov]);
            s.seed = 7;
            s
        }
        "cole-tower-sqrt" => {
            let mut s = base(
                name,
                description,
                disc(16, vec![cx(0.0, 0.0), cx(0.3, 0.1)], 0, 4),
                vec![sqrt_z()],
                vec![Cole, ColeTower],
            );
            s.cole_stages = vec![vec![PolySpec {
                lower: vec![ElementSpec::RootFunction { index: 0, scale: cx(-1.0, 0.0) }, zero()],
            }]];
            s.seed = 11;
            s
        }
        "tower-roots" => base(
            name,
            description,
            pointwise(3),
            vec![
                PolySpec { lower: vec![data(&[(-1.0, 0.5), (-2.0, 0.0), (0.5, -1.5)]), zero()] },
                PolySpec { lower: vec![data(&[(2.0, 0.0), (-0.5, 1.0), (1.0, 1.0)]), zero(), zero()] },
            ],
            vec![Tower, Characters],
        ),
        "natural-cole" => base(
            name,
            description,
            pointwise(3),
            vec![PolySpec { lower: vec![data(&[(-1.0, 0.0), (-2.0, 1.0), (0.25, -3.0)]), zero()] }],
            vec![Extend, Cole, Compare],
        ),
        _ => unreachable!("catalog names are matched above"),
    };
    Ok(scenario)
}
