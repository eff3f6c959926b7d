//! Undirected simple graphs in canonical adjacency-list form, plus the
//! combinatorial subroutines every pipeline shares.
//!
//! A [`Graph`] is immutable once built. Vertex ids run `0..n`, every
//! neighbor list is sorted ascending and free of duplicates, and the
//! adjacency relation is symmetric. Deleting vertices is expressed by taking
//! an [`induced subgraph`](Graph::induced_subgraph), which also returns the
//! map back to the parent's ids.

mod coloring;
mod cycles;
pub mod dimacs;
pub mod families;
mod matching;

pub use coloring::PartialColoring;
pub use cycles::{
    bipartition, greedy_disjoint_odd_cycles, odd_cycle_certificate, shortest_odd_cycle_at, CycleSet,
};
pub use matching::{greedy_maximal_matching, vertex_cover_2approx, Matching};

pub(crate) use cycles::BfsScratch;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building, parsing or checking graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("coloring does not partition the vertex set: {0}")]
    ColoringDomain(String),
}

/// An undirected simple graph on vertices `0..n`. Serializes as
/// `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "EdgeList", try_from = "EdgeList")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(list: EdgeList) -> Result<Self, GraphError> {
        Graph::from_edges(list.n, list.edges)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a canonical graph from an edge list. Both orientations and
    /// repeated pairs collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Canonicalizes adjacency lists that are already symmetric and loop-free.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The subgraph induced on `keep`, relabeled `0..|keep|` in ascending
    /// original-id order. The returned map sends new ids to original ids.
    ///
    /// Panics if `keep` names a vertex outside the graph.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut ids = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&last) = ids.last() {
            assert!(
                last < self.n(),
                "vertex {last} not in graph of order {}",
                self.n()
            );
        }
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let twice: usize = adj.iter().map(Vec::len).sum();
        (
            Graph {
                adj,
                edge_count: twice / 2,
            },
            ids,
        )
    }

    /// Induced subgraph on the vertices whose mask entry is `true`.
    pub fn induced_by_mask(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        self.induced_subgraph(&ids)
    }

    /// Whether no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        set.iter().all(|&v| self.adj[v].iter().all(|&u| !member[u]))
    }

    /// Whether every edge has an endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        let mut member = vec![false; self.n()];
        for &v in cover {
            member[v] = true;
        }
        self.edges().all(|(u, v)| member[u] || member[v])
    }

    /// Checks that `cycle` is a simple cycle of this graph (consecutive and
    /// wraparound pairs adjacent, no repeated vertex, length ≥ 3).
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() < 3 || cycle.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut seen = cycle.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }
}
