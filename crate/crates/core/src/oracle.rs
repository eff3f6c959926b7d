//! Exponential-time exact references for tiny graphs.
//!
//! These are test oracles: they enumerate or backtrack over bitmasks and
//! refuse inputs above a per-operation vertex limit, so an accidental call on
//! a large instance fails immediately instead of hanging.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{op} is limited to {limit} vertices, got {n}")]
    TooLarge {
        op: &'static str,
        n: usize,
        limit: usize,
    },
}

pub const CHROMATIC_LIMIT: usize = 16;
pub const INDUCED_LIMIT: usize = 14;
pub const ODD_CYCLE_LIMIT: usize = 12;
pub const MIS_LIMIT: usize = 20;
pub const MATCHING_LIMIT: usize = 16;

fn guard(op: &'static str, g: &Graph, limit: usize) -> Result<(), OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge {
            op,
            n: g.n(),
            limit,
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

/// Backtracking k-coloring of the vertices in `within`; a new color is only
/// ever opened as `max_used + 1`, which removes color-permutation symmetry.
fn color_within(adj: &[u32], within: u32, k: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = bits(within).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & within).count_ones()));
    let mut color = vec![usize::MAX; adj.len()];

    fn go(
        i: usize,
        used: usize,
        order: &[usize],
        adj: &[u32],
        k: usize,
        color: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if bits(adj[v]).all(|u| color[u] != c) {
                color[v] = c;
                if go(i + 1, used.max(c + 1), order, adj, k, color) {
                    return true;
                }
            }
        }
        color[v] = usize::MAX;
        false
    }

    go(0, 0, &order, adj, k, &mut color).then_some(color)
}

/// An optimal proper coloring (one color per vertex, `0..χ`).
pub fn optimal_coloring(g: &Graph) -> Result<Vec<usize>, OracleError> {
    guard("exact_chromatic_number", g, CHROMATIC_LIMIT)?;
    let adj = masks(g);
    let all = if g.n() == 0 {
        0
    } else {
        u32::MAX >> (32 - g.n())
    };
    for k in 0..=g.n() {
        if let Some(c) = color_within(&adj, all, k) {
            return Ok(c);
        }
    }
    unreachable!("n colors always suffice")
}

pub fn exact_chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    Ok(optimal_coloring(g)?
        .iter()
        .map(|&c| c + 1)
        .max()
        .unwrap_or(0))
}

/// Largest vertex set inducing a k-colorable subgraph; `alpha = size / n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedColorable {
    pub size: usize,
    pub n: usize,
    pub witness: Vec<usize>,
}

impl InducedColorable {
    pub fn alpha(&self) -> f64 {
        if self.n == 0 {
            1.0
        } else {
            self.size as f64 / self.n as f64
        }
    }
}

pub fn max_induced_k_colorable(g: &Graph, k: usize) -> Result<InducedColorable, OracleError> {
    guard("max_induced_k_colorable", g, INDUCED_LIMIT)?;
    let n = g.n();
    let adj = masks(g);
    let mut by_size: Vec<u32> = (0..1u32 << n).collect();
    by_size.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    for mask in by_size {
        if color_within(&adj, mask, k).is_some() {
            return Ok(InducedColorable {
                size: mask.count_ones() as usize,
                n,
                witness: bits(mask).collect(),
            });
        }
    }
    unreachable!("the empty set is k-colorable")
}

/// Vertex sets of all odd cycles of length at most `max_len`.
fn odd_cycle_masks(g: &Graph, max_len: usize) -> BTreeSet<u32> {
    let adj = masks(g);
    let mut found = BTreeSet::new();

    fn extend(
        start: usize,
        at: usize,
        len: usize,
        visited: u32,
        adj: &[u32],
        max_len: usize,
        found: &mut BTreeSet<u32>,
    ) {
        if len >= 3 && len % 2 == 1 && adj[at] >> start & 1 == 1 {
            found.insert(visited);
        }
        if len == max_len {
            return;
        }
        for next in bits(adj[at]) {
            if next > start && visited >> next & 1 == 0 {
                extend(
                    start,
                    next,
                    len + 1,
                    visited | 1 << next,
                    adj,
                    max_len,
                    found,
                );
            }
        }
    }

    for s in 0..g.n() {
        extend(s, s, 1, 1 << s, &adj, max_len, &mut found);
    }
    found
}

/// Maximum number of vertex-disjoint odd cycles of length at most `max_len`.
pub fn max_disjoint_odd_cycles(g: &Graph, max_len: usize) -> Result<usize, OracleError> {
    guard("max_disjoint_odd_cycles", g, ODD_CYCLE_LIMIT)?;
    let cycles: Vec<u32> = odd_cycle_masks(g, max_len).into_iter().collect();

    fn best(avail: u32, cycles: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&b) = memo.get(&avail) {
            return b;
        }
        let low = avail & avail.wrapping_neg();
        let mut b = best(avail & !low, cycles, memo);
        for &c in cycles {
            if c & low != 0 && c & avail == c {
                b = b.max(1 + best(avail & !c, cycles, memo));
            }
        }
        memo.insert(avail, b);
        b
    }

    let all = if g.n() == 0 {
        0
    } else {
        u32::MAX >> (32 - g.n())
    };
    Ok(best(all, &cycles, &mut HashMap::new()))
}

/// Length of the shortest odd cycle, `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Result<Option<usize>, OracleError> {
    guard("odd_girth", g, ODD_CYCLE_LIMIT)?;
    Ok(odd_cycle_masks(g, g.n())
        .iter()
        .map(|m| m.count_ones() as usize)
        .min())
}

pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>, OracleError> {
    guard("max_independent_set", g, MIS_LIMIT)?;
    let adj = masks(g);

    fn search(cand: u32, chosen: u32, adj: &[u32], best: &mut u32) {
        if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        if cand == 0 {
            *best = chosen;
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        let bit = 1u32 << v;
        if adj[v] & cand == 0 {
            // Every candidate is isolated: take them all.
            search(0, chosen | cand, adj, best);
            return;
        }
        search(cand & !bit & !adj[v], chosen | bit, adj, best);
        search(cand & !bit, chosen, adj, best);
    }

    let all = if g.n() == 0 {
        0
    } else {
        u32::MAX >> (32 - g.n())
    };
    let mut best = 0;
    search(all, 0, &adj, &mut best);
    if g.n() > 0 && best == 0 {
        best = 1;
    }
    Ok(bits(best).collect())
}

/// Complement of a maximum independent set.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<usize>, OracleError> {
    let mis = max_independent_set(g)?;
    Ok((0..g.n()).filter(|v| !mis.contains(v)).collect())
}

pub fn max_matching_size(g: &Graph) -> Result<usize, OracleError> {
    guard("max_matching_size", g, MATCHING_LIMIT)?;
    let adj = masks(g);

    fn best(avail: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&b) = memo.get(&avail) {
            return b;
        }
        let u = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << u);
        let mut b = best(rest, adj, memo);
        for v in bits(adj[u] & rest) {
            b = b.max(1 + best(rest & !(1 << v), adj, memo));
        }
        memo.insert(avail, b);
        b
    }

    let all = if g.n() == 0 {
        0
    } else {
        u32::MAX >> (32 - g.n())
    };
    Ok(best(all, &adj, &mut HashMap::new()))
}
