use serde::{Deserialize, Serialize};

/// Componentwise absolute tolerance used when comparing elements.
pub const ELEMENT_EQ_TOL: f64 = 1e-9;

/// Roots closer than this are reported as one root with multiplicity.
pub const ROOT_CLUSTER_TOL: f64 = 1e-7;

/// Characters whose value vectors agree within this bound are merged.
pub const CHARACTER_MERGE_TOL: f64 = 1e-8;

/// Relative threshold on the boundary minimum of `|d|` for the topological
/// zero-divisor test.
pub const TOPOLOGICAL_ZERO_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ToleranceProfile {
    /// Root residual bound, scaled by `1 + Σ|c_k|`.
    pub root_tol: f64,
    /// Singular values below `σ_max · dim · rank_rel_tol` count as zero.
    pub rank_rel_tol: f64,
    /// Phase-one objective bound for linear feasibility.
    pub lp_feas_tol: f64,
    /// Gap between upper and certified lower bound in convex minimization.
    pub convex_tol: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            root_tol: 1e-10,
            rank_rel_tol: 1e-12,
            lp_feas_tol: 1e-9,
            convex_tol: 1e-8,
        }
    }
}

impl ToleranceProfile {
    pub fn validate(&self) -> Result<(), String> {
        let all = [
            ("root_tol", self.root_tol),
            ("rank_rel_tol", self.rank_rel_tol),
            ("lp_feas_tol", self.lp_feas_tol),
            ("convex_tol", self.convex_tol),
        ];
        for (name, v) in all {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{name} must be strictly positive, got {v}"));
            }
        }
        Ok(())
    }
}
