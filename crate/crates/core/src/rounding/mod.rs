//! The adversarial-model pipelines.
//!
//! Both start from the relaxation and discard the vertices carrying large
//! slack. For three colors the survivors form a `(3, gamma')`-vector
//! coloring; high-degree vertices are peeled off with their neighborhoods
//! (which are then nearly 2-colorable and free of short odd cycles) and the
//! bounded-degree rest is colored by hyperplane rounding. For two colors the
//! survivors themselves have no short odd cycles and are colored directly.

mod degree;
mod hyperplane;
mod pipeline;

pub use degree::{reduce_degree, DegreeReduction};
pub use hyperplane::{
    approx_hyperplane_coloring, beta, rho, round_independent_set, trials, HyperplaneColoring,
};
pub use pipeline::{partial_2_color, partial_3_color, PipelineOutput, PipelineParams, StageStats};

use thiserror::Error;

use crate::sdp::{SdpError, SdpSolution};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RoundingError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Sdp(#[from] SdpError),
    #[error("{stage}: short odd cycle {cycle:?} contradicts the vector coloring (apex {apex:?})")]
    Certificate {
        stage: String,
        apex: Option<usize>,
        cycle: Vec<usize>,
    },
}

/// Vertices whose slack reaches `gamma / 3` (`k = 3`) or `gamma / 4`
/// (`k = 2`), ascending. Since `sum w` is the objective, at most
/// `k_div * objective / gamma` vertices qualify.
pub fn threshold_slack_vertices(sol: &SdpSolution, gamma: f64, k: usize) -> Vec<usize> {
    let cut = gamma / threshold_divisor(k) as f64;
    (0..sol.w.len()).filter(|&i| sol.w[i] >= cut).collect()
}

/// 3 for three colors, 4 for two.
pub fn threshold_divisor(k: usize) -> usize {
    if k == 2 {
        4
    } else {
        3
    }
}
