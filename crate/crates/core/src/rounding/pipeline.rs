use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{
    approx_hyperplane_coloring, reduce_degree, rho, threshold_divisor, threshold_slack_vertices,
    RoundingError,
};
use crate::graph::{Graph, PartialColoring};
use crate::oddcycle::{color_no_short_odd_cycles, OddCycleError};
use crate::sdp::{
    odd_cycle_free_length, solve_partial_coloring_sdp, vector_coloring_slack, Residuals,
    SolverConfig,
};
use crate::seed::derive_seed;

/// Largest accepted `gamma`.
pub const GAMMA_MAX: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineParams {
    /// Assumed fraction of bad vertices.
    pub eps: f64,
    /// Slack threshold, in `[eps, 1/10]` and positive.
    pub gamma: f64,
    /// Degree threshold; `None` means `ceil(n^(3/4))`.
    pub delta: Option<usize>,
    /// Constant in front of the rounding success fraction; only sizes the
    /// number of trials.
    pub rho_constant: f64,
    /// Solver settings; `k` and `seed` are overridden by the pipeline.
    pub solver: SolverConfig,
    pub seed: u64,
}

impl PipelineParams {
    pub fn new(eps: f64, gamma: f64, seed: u64) -> Self {
        PipelineParams {
            eps,
            gamma,
            delta: None,
            rho_constant: 0.125,
            solver: SolverConfig::default(),
            seed,
        }
    }

    // Negated comparisons also reject NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), RoundingError> {
        let bad = |m: String| Err(RoundingError::InvalidParams(m));
        if !(self.eps >= 0.0) {
            return bad(format!("eps = {} must be nonnegative", self.eps));
        }
        if !(self.gamma > 0.0 && self.gamma <= GAMMA_MAX) {
            return bad(format!(
                "gamma = {} must lie in (0, {GAMMA_MAX}]",
                self.gamma
            ));
        }
        if self.gamma < self.eps {
            return bad(format!(
                "gamma = {} is below eps = {}",
                self.gamma, self.eps
            ));
        }
        if self.delta == Some(0) {
            return bad("delta must be at least 1".into());
        }
        if !(self.rho_constant > 0.0) {
            return bad(format!(
                "rho_constant = {} must be positive",
                self.rho_constant
            ));
        }
        self.solver.validate()?;
        Ok(())
    }
}

/// `ceil(n^(3/4))`, computed exactly: the least `d` with `d^4 >= n^3`.
pub fn default_delta(n: usize) -> usize {
    let target = (n as u128).pow(3);
    let mut d = (n as f64).powf(0.75).floor() as u128;
    while d.pow(4) >= target && d > 0 {
        d -= 1;
    }
    while d.pow(4) < target {
        d += 1;
    }
    (d as usize).max(1)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StageStats {
    pub sdp_objective: f64,
    pub residuals: Residuals,
    /// `gamma` plus the solver's edge residual.
    pub gamma_prime: f64,
    /// `(k, .)`-coloring slack measured on the kept vertices.
    pub measured_slack: f64,
    pub threshold_size: usize,
    pub delta: usize,
    pub degree_passes: usize,
    pub residual_vertices: usize,
    pub residual_max_degree: usize,
    pub max_projected_slack: f64,
    pub odd_cycle_bound: usize,
    pub rounding_iterations: usize,
    pub rounding_trials: usize,
    pub rounding_fallbacks: usize,
    pub rounding_below_target: usize,
    pub degree_colors: usize,
    pub final_colors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineOutput {
    /// Discarded vertices.
    pub s: Vec<usize>,
    /// Coloring of every vertex outside `s`; `s` is its discarded set.
    pub coloring: PartialColoring,
    pub stats: StageStats,
}

struct Kept {
    s: Vec<usize>,
    graph: Graph,
    map: Vec<usize>,
    vectors: crate::sdp::Embedding,
    stats: StageStats,
}

fn solve_and_threshold(
    g: &Graph,
    params: &PipelineParams,
    k: usize,
) -> Result<Kept, RoundingError> {
    params.validate()?;
    let cfg = SolverConfig {
        k,
        seed: derive_seed(params.seed, "sdp"),
        ..params.solver.clone()
    };
    let sol = solve_partial_coloring_sdp(g, &cfg)?;
    let s = threshold_slack_vertices(&sol, params.gamma, k);
    let mut keep = vec![true; g.n()];
    for &v in &s {
        keep[v] = false;
    }
    let (graph, map) = g.induced_by_mask(&keep);
    let vectors = sol.vectors.select(&map);
    let stats = StageStats {
        sdp_objective: sol.objective,
        residuals: sol.residuals,
        gamma_prime: params.gamma + sol.residuals.edge.max(0.0),
        measured_slack: vector_coloring_slack(&graph, &vectors, k),
        threshold_size: s.len(),
        ..StageStats::default()
    };
    debug_assert!(
        s.len() as f64 <= threshold_divisor(k) as f64 * sol.objective / params.gamma + 1e-9
    );
    Ok(Kept {
        s,
        graph,
        map,
        vectors,
        stats,
    })
}

fn assemble(
    n: usize,
    s: Vec<usize>,
    colors: BTreeMap<usize, usize>,
    stats: StageStats,
) -> PipelineOutput {
    let discarded: BTreeSet<usize> = s.iter().copied().collect();
    debug_assert_eq!(colors.len() + discarded.len(), n);
    PipelineOutput {
        s,
        coloring: PartialColoring::new(colors, discarded),
        stats,
    }
}

/// Partial 3-coloring: solve, discard vertices with `w_i >= gamma / 3`, peel
/// off vertices of degree at least `delta` with their neighborhoods, and
/// hyperplane-round the rest. Stages use disjoint color ranges.
///
/// ```
/// use partcolor::graph::families::complete;
/// use partcolor::rounding::{partial_3_color, PipelineParams};
///
/// let g = complete(4);
/// let out = partial_3_color(&g, &PipelineParams::new(0.05, 0.1, 1)).unwrap();
/// assert_eq!(out.coloring.is_proper(&g), Ok(true));
/// assert!(out.s.len() as f64 <= 3.0 * out.stats.sdp_objective / 0.1);
/// ```
pub fn partial_3_color(
    g: &Graph,
    params: &PipelineParams,
) -> Result<PipelineOutput, RoundingError> {
    if g.n() == 0 {
        params.validate()?;
        return Ok(assemble(
            0,
            Vec::new(),
            BTreeMap::new(),
            StageStats::default(),
        ));
    }
    let Kept {
        s,
        graph,
        map,
        vectors,
        mut stats,
    } = solve_and_threshold(g, params, 3)?;
    let gamma_prime = stats.gamma_prime;
    if 4.0 * gamma_prime >= 0.5 {
        return Err(RoundingError::InvalidParams(format!(
            "gamma' = {gamma_prime} leaves neighborhoods without a triangle-free guarantee"
        )));
    }
    let delta = params.delta.unwrap_or_else(|| default_delta(g.n()));
    stats.delta = delta;

    let reduced = reduce_degree(&graph, &vectors, delta, gamma_prime)?;
    stats.degree_passes = reduced.passes;
    stats.odd_cycle_bound = reduced.ell;
    stats.max_projected_slack = reduced.max_projected_slack;
    stats.residual_vertices = reduced.residual.n();
    stats.residual_max_degree = reduced.residual.max_degree();
    stats.degree_colors = reduced.fragment.num_colors();

    let mut colors: BTreeMap<usize, usize> = reduced
        .fragment
        .colors()
        .iter()
        .map(|(&v, &c)| (map[v], c))
        .collect();
    if reduced.residual.n() > 0 {
        let residual_vectors = vectors.select(&reduced.residual_map);
        let rho = rho(
            reduced.residual.max_degree(),
            gamma_prime,
            params.rho_constant,
        );
        let rounded = approx_hyperplane_coloring(
            &reduced.residual,
            &residual_vectors,
            gamma_prime,
            rho,
            derive_seed(params.seed, "rounding"),
        );
        stats.rounding_iterations = rounded.iterations;
        stats.rounding_trials = rounded.trials_per_iteration;
        stats.rounding_fallbacks = rounded.fallbacks;
        stats.rounding_below_target = rounded.below_target;
        let offset = stats.degree_colors;
        for (&v, &c) in rounded.coloring.colors() {
            colors.insert(map[reduced.residual_map[v]], offset + c);
        }
        stats.final_colors = rounded.coloring.num_colors();
    }
    Ok(assemble(g.n(), s, colors, stats))
}

/// Partial 2-coloring: solve, discard vertices with `w_i >= gamma / 4`, and
/// color the rest with the odd-cycle-free colorer at
/// `ell = odd_cycle_free_length(gamma', 8, n)`.
pub fn partial_2_color(
    g: &Graph,
    params: &PipelineParams,
) -> Result<PipelineOutput, RoundingError> {
    if g.n() == 0 {
        params.validate()?;
        return Ok(assemble(
            0,
            Vec::new(),
            BTreeMap::new(),
            StageStats::default(),
        ));
    }
    let Kept {
        s,
        graph,
        map,
        mut stats,
        ..
    } = solve_and_threshold(g, params, 2)?;
    let gamma_prime = stats.gamma_prime;
    if gamma_prime >= 0.5 {
        return Err(RoundingError::InvalidParams(format!(
            "gamma' = {gamma_prime} gives no triangle-free guarantee"
        )));
    }
    let ell = odd_cycle_free_length(gamma_prime, 8.0, graph.n());
    stats.odd_cycle_bound = ell;
    let local = color_no_short_odd_cycles(&graph, ell).map_err(|e| match e {
        OddCycleError::ShortOddCycle { cycle, .. } => RoundingError::Certificate {
            stage: "odd-cycle coloring".into(),
            apex: None,
            cycle: cycle.iter().map(|&i| map[i]).collect(),
        },
        other => RoundingError::InvalidParams(other.to_string()),
    })?;
    stats.final_colors = local.num_colors();
    let colors = local.colors().iter().map(|(&v, &c)| (map[v], c)).collect();
    Ok(assemble(g.n(), s, colors, stats))
}
