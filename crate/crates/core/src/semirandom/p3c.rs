use serde::{Deserialize, Serialize};

use super::SemiRandomError;
use crate::graph::{greedy_disjoint_odd_cycles, CycleSet, Graph, PartialColoring};
use crate::oddcycle::color_no_short_odd_cycles;

/// Which of the two candidate colorings was returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Vertices with many disjoint odd cycles in their neighborhood were
    /// discarded and the rest handed to the 3-colorer.
    ManyCycles,
    /// A maximal family of short odd cycles was discarded and the rest
    /// colored by the odd-cycle-free colorer.
    FewCycles,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P3cOutput {
    /// Discarded vertices, ascending.
    pub s: Vec<usize>,
    pub coloring: PartialColoring,
    pub branch: Branch,
    pub delta: f64,
    /// Odd-cycle length bound `floor(1 / delta)`.
    pub ell: usize,
    /// `ceil(2 eps n)`.
    pub threshold: usize,
    /// The many-cycles candidate set, whether or not it was used.
    pub s_many: Vec<usize>,
    /// Colors the colorer used on the complement of `s_many`, if it succeeded.
    pub colorer_colors: Option<usize>,
    pub colorer_error: Option<String>,
    /// `n^theta`, the color budget the colorer must meet.
    pub color_budget: f64,
    /// Maximal cycle family of the whole graph, present when the few-cycles
    /// branch was evaluated.
    pub cycle_family: Option<CycleSet>,
}

/// `ceil(2 eps n)`, robust to `2 eps n` landing a hair above an integer.
pub fn double_eps_threshold(n: usize, eps: f64) -> usize {
    (2.0 * eps * n as f64 - 1e-9).ceil().max(0.0) as usize
}

/// For every vertex `v`, a greedy maximal family of disjoint odd cycles of
/// length at most `ell` inside `g[N(v)]`, in `g`'s ids.
pub fn neighborhood_cycle_sets(g: &Graph, ell: usize) -> Vec<CycleSet> {
    (0..g.n())
        .map(|v| {
            let (h, map) = g.induced_subgraph(g.neighbors(v));
            greedy_disjoint_odd_cycles(&h, ell).relabel(&map)
        })
        .collect()
}

pub(crate) fn check_eps(eps: f64) -> Result<(), SemiRandomError> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(SemiRandomError::InvalidParam(format!(
            "eps = {eps} is not in (0, 1)"
        )))
    }
}

/// Recovers a large 3-colored part of a semi-random instance.
///
/// Vertices whose neighborhoods hold at least `ceil(2 eps n)` disjoint short
/// odd cycles are discarded and `colorer` runs on the rest. That coloring is
/// kept when at most `eps n` vertices were discarded and it uses at most
/// `n^theta` colors. Otherwise a maximal family of short odd cycles in the
/// whole graph is discarded, which leaves no odd cycle of length at most
/// `ell`, and the remainder is colored directly.
pub fn p3c_random<C>(
    g: &Graph,
    eps: f64,
    theta: f64,
    colorer: C,
) -> Result<P3cOutput, SemiRandomError>
where
    C: Fn(&Graph) -> Result<PartialColoring, String>,
{
    check_eps(eps)?;
    if !(theta > 0.0 && theta < 1.0) {
        return Err(SemiRandomError::InvalidParam(format!(
            "theta = {theta} is not in (0, 1)"
        )));
    }
    let n = g.n();
    let delta = theta / 10.0;
    let ell = ((1.0 / delta) + 1e-9).floor() as usize;
    let threshold = double_eps_threshold(n, eps);
    let color_budget = (n as f64).powf(theta);

    let s_many: Vec<usize> = neighborhood_cycle_sets(g, ell)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= threshold)
        .map(|(v, _)| v)
        .collect();
    let mut keep = vec![true; n];
    for &v in &s_many {
        keep[v] = false;
    }
    let (rest, map) = g.induced_by_mask(&keep);
    let attempt = colorer(&rest);
    let (colorer_colors, colorer_error) = match &attempt {
        Ok(c) => (Some(c.num_colors()), None),
        Err(e) => (None, Some(e.clone())),
    };

    let mut out = P3cOutput {
        s: Vec::new(),
        coloring: PartialColoring::default(),
        branch: Branch::ManyCycles,
        delta,
        ell,
        threshold,
        s_many: s_many.clone(),
        colorer_colors,
        colorer_error,
        color_budget,
        cycle_family: None,
    };
    if let Ok(local) = attempt {
        if s_many.len() as f64 <= eps * n as f64 + 1e-9 && local.num_colors() as f64 <= color_budget
        {
            out.coloring = lift(&local, &map, n);
            out.s = s_many;
            return Ok(out);
        }
    }

    let family = greedy_disjoint_odd_cycles(g, ell);
    let removed = family.vertices();
    let mut keep = vec![true; n];
    for &v in &removed {
        keep[v] = false;
    }
    let (rest, map) = g.induced_by_mask(&keep);
    let local = color_no_short_odd_cycles(&rest, ell)
        .map_err(|e| SemiRandomError::Internal(format!("few-cycles remainder: {e}")))?;
    out.coloring = lift(&local, &map, n);
    out.s = removed;
    out.branch = Branch::FewCycles;
    out.cycle_family = Some(family);
    Ok(out)
}

/// Moves a coloring of an induced subgraph back to host ids; every vertex
/// outside `map` is discarded.
pub(crate) fn lift(local: &PartialColoring, map: &[usize], n: usize) -> PartialColoring {
    let mut table = vec![None; n];
    for (&i, &c) in local.colors() {
        table[map[i]] = Some(c);
    }
    PartialColoring::from_dense(&table)
}
