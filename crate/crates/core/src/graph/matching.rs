use serde::{Deserialize, Serialize};

use super::Graph;

/// Pairwise vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn relabel(&self, map: &[usize]) -> Matching {
        Matching {
            edges: self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect(),
        }
    }

    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(format!("({u}, {v}) is not an edge"));
            }
            for x in [u, v] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(format!("vertex {x} matched twice"));
                }
            }
        }
        Ok(())
    }
}

/// Greedy maximal matching, scanning edges `(u, v)`, `u < v`, lexicographically.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut matched = vec![false; g.n()];
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            edges.push((u, v));
        }
    }
    Matching { edges }
}

/// Both endpoints of every greedy matching edge, ascending. A vertex cover
/// at most twice the minimum.
pub fn vertex_cover_2approx(g: &Graph) -> Vec<usize> {
    let mut cover: Vec<usize> = greedy_maximal_matching(g)
        .edges
        .into_iter()
        .flat_map(|(u, v)| [u, v])
        .collect();
    cover.sort_unstable();
    cover
}
