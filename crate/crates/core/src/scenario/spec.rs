use serde::{Deserialize, Serialize};

use crate::tolerance::ToleranceProfile;

/// A complex number as `[re, im]`.
pub type Cx = [f64; 2];

/// One scenario file: an algebra, polynomials over it, parameters and the
/// operations to run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub polynomials: Vec<PolySpec>,
    #[serde(default)]
    pub parameters: Parameters,
    /// Further Cole stages; stage 1 uses `polynomials`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cole_stages: Vec<Vec<PolySpec>>,
    /// Extension elements `Σ c_k x̄^k` (over the first polynomial) whose norms are reported.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<ProbeSpec>,
    pub operations: Vec<Operation>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Pointwise,
    PolyModel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub backend: BackendKind,
    pub points: PointsSpec,
    /// Degree bound `D` of the polynomial model.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum PointsSpec {
    /// `n` unlabelled points `p0, ..., p{n-1}`.
    Count(usize),
    /// Explicit coordinates.
    Coords(Vec<Cx>),
    /// Equispaced boundary samples starting at `z = 1`, then interior samples.
    Disc(DiscGrid),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscGrid {
    pub boundary: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub interior: Vec<Cx>,
    /// Extra interior samples drawn uniformly from the disc of `interior_radius`.
    #[serde(default)]
    pub random_interior: usize,
    #[serde(default = "default_radius")]
    pub interior_radius: f64,
}

fn default_radius() -> f64 {
    0.45
}

/// An element of the ground algebra (or, inside Cole stages, of the previous stage).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ElementSpec {
    Constant(Cx),
    /// Raw coordinates in the canonical basis (values per point, or z-coefficients).
    Data(Vec<Cx>),
    /// A polynomial in the coordinate `z`, lowest coefficient first.
    ZPoly(Vec<Cx>),
    /// A multiple of a root function of the previous Cole stage.
    RootFunction { index: usize, scale: Cx },
    Sum(Vec<ElementSpec>),
}

/// A monic polynomial by its lower coefficients `a_0, ..., a_{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySpec {
    pub lower: Vec<ElementSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeSpec {
    pub name: String,
    pub coefficients: Vec<ElementSpec>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    /// Norm parameter for every extension; the minimal one when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    /// Use the power-sum parameter instead of the minimal one.
    #[serde(default)]
    pub power_sum_t: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<ToleranceProfile>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    Extend,
    Characters,
    Discriminant,
    Tractable,
    Quotient,
    Cole,
    Silov,
    Compare,
    Tower,
    ColeTower,
    Norms,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Extend => "extend",
            Operation::Characters => "characters",
            Operation::Discriminant => "discriminant",
            Operation::Tractable => "tractable",
            Operation::Quotient => "quotient",
            Operation::Cole => "cole",
            Operation::Silov => "silov",
            Operation::Compare => "compare",
            Operation::Tower => "tower",
            Operation::ColeTower => "cole_tower",
            Operation::Norms => "norms",
        }
    }

    pub fn needs_polynomials(self) -> bool {
        !matches!(self, Operation::Characters | Operation::Silov)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Table,
}

impl Scenario {
    /// Structural checks that do not need the algebra to be built.
    pub fn validate(&self) -> Result<(), String> {
        if self.name.trim().is_empty() {
            return Err("scenario name is empty".into());
        }
        if self.operations.is_empty() {
            return Err("operation list is empty".into());
        }
        match (self.algebra.backend, self.algebra.degree) {
            (BackendKind::PolyModel, None) => return Err("poly_model needs a degree bound".into()),
            (BackendKind::Pointwise, Some(_)) => return Err("degree applies only to poly_model".into()),
            _ => {}
        }
        if self.algebra.backend == BackendKind::PolyModel && matches!(self.algebra.points, PointsSpec::Count(_)) {
            return Err("poly_model needs point coordinates".into());
        }
        match &self.algebra.points {
            PointsSpec::Count(0) => return Err("point set is empty".into()),
            PointsSpec::Coords(c) if c.is_empty() => return Err("point set is empty".into()),
            PointsSpec::Disc(g) => {
                if g.boundary == 0 {
                    return Err("disc grid needs boundary samples".into());
                }
                if !(g.interior_radius.is_finite() && g.interior_radius >= 0.0 && g.interior_radius < 1.0) {
                    return Err("interior_radius must lie in [0, 1)".into());
                }
            }
            _ => {}
        }
        for op in &self.operations {
            if op.needs_polynomials() && self.polynomials.is_empty() {
                return Err(format!("operation {} needs at least one polynomial", op.name()));
            }
        }
        if self.polynomials.iter().chain(self.cole_stages.iter().flatten()).any(|p| p.lower.is_empty()) {
            return Err("polynomials need degree at least 1".into());
        }
        if self.operations.contains(&Operation::ColeTower) && self.cole_stages.is_empty() {
            return Err("cole_tower needs at least one entry in cole_stages".into());
        }
        if let Some(t) = self.parameters.t {
            if !(t.is_finite() && t > 0.0) {
                return Err(format!("t must be positive, got {t}"));
            }
            if self.parameters.power_sum_t {
                return Err("t and power_sum_t are mutually exclusive".into());
            }
        }
        if let Some(tol) = &self.parameters.tolerances {
            tol.validate()?;
        }
        if self.operations.contains(&Operation::Norms) && self.probes.is_empty() {
            return Err("norms needs at least one probe".into());
        }
        Ok(())
    }

    pub fn tolerances(&self) -> ToleranceProfile {
        self.parameters.tolerances.unwrap_or_default()
    }
}
