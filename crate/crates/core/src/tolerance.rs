//! Numerical thresholds shared by the pipeline.

use serde::{Deserialize, Serialize};

/// Environment variable overriding [`Tolerances::rank`].
pub const RANK_TOL_ENV: &str = "TORSIONLAB_RANK_TOL";

/// Unit-norm drift tolerated before a quaternion product is renormalized
/// (renormalization kicks in at half of this).
pub const EPS_NORM: f64 = 1e-12;

/// Distance from ±1 below which a quaternion counts as central.
pub const EPS_CENTER: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Relative singular-value cutoff used for every rank decision.
    pub rank: f64,
    /// Maximum relator residual accepted for a representation.
    pub representation: f64,
    /// Relative bound on `‖d_i d_{i+1}‖` for a valid chain complex.
    pub chain: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank: 1e-9,
            representation: 1e-9,
            chain: 1e-9,
        }
    }
}

impl Tolerances {
    /// Defaults, with the rank tolerance taken from `TORSIONLAB_RANK_TOL` when set.
    pub fn from_env() -> Self {
        let mut tol = Self::default();
        if let Some(v) = std::env::var(RANK_TOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
        {
            tol.rank = v;
        }
        tol
    }

    pub fn with_rank(mut self, rank: f64) -> Self {
        self.rank = rank;
        self
    }
}
