use serde::{Deserialize, Serialize};

use super::RoundingError;
use crate::graph::{Graph, PartialColoring};
use crate::oddcycle::{color_no_short_odd_cycles, OddCycleError};
use crate::sdp::{odd_cycle_free_length, project_neighborhood, vector_coloring_slack, Embedding};

/// Result of [`reduce_degree`]. Colored vertices and the residual partition
/// the input vertex set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeReduction {
    /// Colors on the removed vertices; every other vertex is `discarded`.
    pub fragment: PartialColoring,
    pub residual: Graph,
    /// Residual id to input id.
    pub residual_map: Vec<usize>,
    pub passes: usize,
    /// Odd-cycle length bound used on every neighborhood.
    pub ell: usize,
    /// Largest `(2, .)`-coloring slack measured on a projected neighborhood.
    pub max_projected_slack: f64,
}

/// Colors and removes high-degree vertices together with their
/// neighborhoods until every surviving vertex has degree below `delta`.
///
/// Each pass takes a vertex of maximum degree (lowest id on ties), projects
/// its neighbors' vectors orthogonally to its own, and colors the
/// neighborhood with fresh colors through the odd-cycle-free colorer at
/// `ell = odd_cycle_free_length(gamma, 16, n)`; the apex gets one more fresh
/// color. Every pass deletes at least `delta + 1` vertices.
pub fn reduce_degree(
    g: &Graph,
    vectors: &Embedding,
    delta: usize,
    gamma: f64,
) -> Result<DegreeReduction, RoundingError> {
    let n = g.n();
    let delta = delta.max(1);
    let ell = odd_cycle_free_length(gamma, 16.0, n);
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut table = vec![None; n];
    let mut next_color = 0;
    let mut passes = 0;
    let mut max_projected_slack: f64 = 0.0;

    loop {
        let apex = (0..n)
            .filter(|&v| alive[v] && deg[v] >= delta)
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)));
        let Some(apex) = apex else { break };
        let nbrs: Vec<usize> = g
            .neighbors(apex)
            .iter()
            .copied()
            .filter(|&u| alive[u])
            .collect();
        let (h, _) = g.induced_subgraph(&nbrs);
        let projected = project_neighborhood(vectors, apex, &nbrs);
        max_projected_slack = max_projected_slack.max(vector_coloring_slack(&h, &projected, 2));
        let local = color_no_short_odd_cycles(&h, ell).map_err(|e| match e {
            OddCycleError::ShortOddCycle { cycle, .. } => RoundingError::Certificate {
                stage: "degree-reduction".into(),
                apex: Some(apex),
                cycle: cycle.iter().map(|&i| nbrs[i]).collect(),
            },
            other => RoundingError::InvalidParams(other.to_string()),
        })?;
        for (&i, &c) in local.colors() {
            table[nbrs[i]] = Some(next_color + c);
        }
        next_color += local.num_colors();
        table[apex] = Some(next_color);
        next_color += 1;
        for &v in nbrs.iter().chain(std::iter::once(&apex)) {
            alive[v] = false;
            for &u in g.neighbors(v) {
                deg[u] -= 1;
            }
        }
        passes += 1;
    }

    let (residual, residual_map) = g.induced_by_mask(&alive);
    Ok(DegreeReduction {
        fragment: PartialColoring::from_dense(&table),
        residual,
        residual_map,
        passes,
        ell,
        max_projected_slack,
    })
}
