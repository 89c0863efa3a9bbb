//! Scenario files, the bundled example catalog, and reports.
//!
//! Scenarios and reports are JSON. Complex numbers are `[re, im]` pairs,
//! unknown fields are rejected, and reports render canonically (sorted keys,
//! 17 significant digits) so they can be diffed and re-parsed exactly.

mod catalog;
mod report;
mod run;
mod spec;

pub use catalog::{generate_example, CATALOG};
pub use report::{canonical_json, format_float, OperationReport, Provenance, Report};
pub use run::{run, run_scenario};
pub use spec::{
    AlgebraSpec, BackendKind, Cx, DiscGrid, ElementSpec, Format, Operation, Parameters, PointsSpec, PolySpec, ProbeSpec,
    Scenario,
};

use crate::error::Error;

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("cannot parse scenario: {0}")]
    Parse(String),
    #[error("invalid scenario: {0}")]
    Validation(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Algebra(#[from] Error),
}

impl ScenarioError {
    /// 3 for numerical failures, 2 for everything caused by the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            ScenarioError::Algebra(e) if e.is_numerical() => 3,
            _ => 2,
        }
    }
}

/// Parse and validate scenario text.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let scenario: Scenario = serde_json::from_str(text).map_err(|e| ScenarioError::Parse(e.to_string()))?;
    scenario.validate().map_err(ScenarioError::Validation)?;
    Ok(scenario)
}

/// Scenario JSON in canonical form.
pub fn scenario_to_json(s: &Scenario) -> String {
    canonical_json(&serde_json::to_value(s).expect("scenarios serialize"))
}
