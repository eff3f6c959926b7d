use serde::{Deserialize, Serialize};

use super::p3c::{check_eps, double_eps_threshold};
use super::SemiRandomError;
use crate::graph::{bipartition, greedy_maximal_matching, vertex_cover_2approx, Graph, Matching};

/// What [`p2c_random`] returns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum P2cResult {
    /// The vertices outside `S` induce a bipartite graph; `sides[i]` is the
    /// side of `remainder[i]`.
    Bipartite {
        remainder: Vec<usize>,
        sides: Vec<u8>,
    },
    /// The complement of a 2-approximate vertex cover.
    IndependentSet { set: Vec<usize>, cover: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P2cOutput {
    /// Vertices whose neighborhood matching reached the threshold, ascending.
    pub s: Vec<usize>,
    /// Greedy matching size in each neighborhood.
    pub t: Vec<usize>,
    /// `ceil(2 eps n)`.
    pub threshold: usize,
    /// Whether `g` minus `s` is bipartite.
    pub remainder_bipartite: bool,
    pub result: P2cResult,
}

impl P2cOutput {
    /// Vertices the result keeps: the bipartite remainder or the independent set.
    pub fn kept(&self) -> &[usize] {
        match &self.result {
            P2cResult::Bipartite { remainder, .. } => remainder,
            P2cResult::IndependentSet { set, .. } => set,
        }
    }
}

/// For every vertex `v`, a greedy maximal matching of `g[N(v)]` in `g`'s ids.
pub fn neighborhood_matchings(g: &Graph) -> Vec<Matching> {
    (0..g.n())
        .map(|v| {
            let (h, map) = g.induced_subgraph(g.neighbors(v));
            greedy_maximal_matching(&h).relabel(&map)
        })
        .collect()
}

/// Recovers a large 2-colorable part of a semi-random instance.
///
/// Vertices whose neighborhoods contain a matching of at least
/// `ceil(2 eps n)` edges are discarded. If the rest is bipartite and no
/// smaller than the complement of a 2-approximate vertex cover, it is
/// returned with its bipartition; otherwise that independent complement is.
///
/// ```
/// use partcolor::graph::families::cycle;
/// use partcolor::semirandom::{p2c_random, P2cResult};
///
/// let out = p2c_random(&cycle(8), 0.1).unwrap();
/// assert!(out.s.is_empty());
/// assert!(matches!(out.result, P2cResult::Bipartite { .. }));
/// ```
pub fn p2c_random(g: &Graph, eps: f64) -> Result<P2cOutput, SemiRandomError> {
    check_eps(eps)?;
    let n = g.n();
    let threshold = double_eps_threshold(n, eps);
    let t: Vec<usize> = neighborhood_matchings(g)
        .iter()
        .map(Matching::len)
        .collect();
    let s: Vec<usize> = (0..n).filter(|&v| t[v] >= threshold).collect();

    let mut keep = vec![true; n];
    for &v in &s {
        keep[v] = false;
    }
    let (rest, remainder) = g.induced_by_mask(&keep);
    let sides = bipartition(&rest);

    let cover = vertex_cover_2approx(g);
    let mut in_cover = vec![false; n];
    for &v in &cover {
        in_cover[v] = true;
    }
    let set: Vec<usize> = (0..n).filter(|&v| !in_cover[v]).collect();

    let remainder_bipartite = sides.is_some();
    let result = match sides {
        Some(sides) if remainder.len() >= set.len() => P2cResult::Bipartite { remainder, sides },
        _ => P2cResult::IndependentSet { set, cover },
    };
    Ok(P2cOutput {
        s,
        t,
        threshold,
        remainder_bipartite,
        result,
    })
}
