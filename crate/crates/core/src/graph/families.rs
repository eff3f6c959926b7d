//! Named graphs and random families used by tests, generators and benches.

use rand::Rng;

use super::cycles::{odd_cycle_from, BfsScratch};
use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

/// `K(1, leaves)` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("valid")
}

/// Outer ring `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("valid")
}

pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges).expect("valid")
}

/// Sparse random graph with odd girth greater than `max_len`: sample
/// `G(n, avg_degree / n)`, then scan the vertices and delete one edge of each
/// short odd cycle found until none is left. Usually not bipartite.
pub fn high_odd_girth<R: Rng + ?Sized>(
    n: usize,
    avg_degree: f64,
    max_len: usize,
    rng: &mut R,
) -> Graph {
    let mut g = gnp(n, (avg_degree / n as f64).min(1.0), rng);
    let mut scratch = BfsScratch::new(n);
    for v in 0..n {
        while let Some(c) = odd_cycle_from(&g, None, v, max_len, &mut scratch) {
            let (a, b) = (c[0], c[1]);
            let mut adj: Vec<Vec<usize>> = (0..n).map(|x| g.neighbors(x).to_vec()).collect();
            adj[a].retain(|&x| x != b);
            adj[b].retain(|&x| x != a);
            g = Graph::from_raw_adjacency(adj);
        }
    }
    g
}
