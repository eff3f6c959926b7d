//! Bipartiteness, bounded-length odd-cycle detection and greedy maximal
//! families of vertex-disjoint short odd cycles.
//!
//! Short odd cycles are found by breadth-first search from a root. An edge
//! joining two vertices of the same BFS layer `j` closes an odd closed walk of
//! length `2j + 1` through the root; walking both endpoints up the BFS tree to
//! their lowest common ancestor extracts a simple odd cycle of length at most
//! `2j + 1`. This is the bipartite-double-cover search: the first layer with
//! an intra-layer edge is the shortest odd closed walk through the root.

use serde::{Deserialize, Serialize};

use super::Graph;

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS buffers, reset in time proportional to the last search.
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    parent: Vec<usize>,
    touched: Vec<usize>,
}

impl BfsScratch {
    pub(crate) fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![UNSEEN; n],
            parent: vec![usize::MAX; n],
            touched: Vec::new(),
        }
    }

    pub(crate) fn depth(&self, v: usize) -> Option<u32> {
        (self.dist[v] != UNSEEN).then_some(self.dist[v])
    }

    pub(crate) fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = UNSEEN;
        }
        self.touched.clear();
    }

    pub(crate) fn visit(&mut self, v: usize, depth: u32, parent: usize) {
        self.dist[v] = depth;
        self.parent[v] = parent;
        self.touched.push(v);
    }

    /// Odd cycle closed by the edge `x-y` between two vertices of equal depth.
    /// Starts at their lowest common ancestor.
    pub(crate) fn lca_cycle(&self, x: usize, y: usize) -> Vec<usize> {
        let (mut a, mut b) = (x, y);
        let mut left = vec![x];
        let mut right = vec![y];
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.reverse();
        left.extend(right);
        left
    }
}

/// A family of pairwise vertex-disjoint odd cycles, each of length at most
/// `max_len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSet {
    pub cycles: Vec<Vec<usize>>,
    pub max_len: usize,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// All vertices covered by the cycles, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Relabels every vertex through `map` (e.g. an induced-subgraph id map).
    pub fn relabel(&self, map: &[usize]) -> CycleSet {
        CycleSet {
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&v| map[v]).collect())
                .collect(),
            max_len: self.max_len,
        }
    }

    /// Verifies the type invariants against a host graph.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut used = vec![false; g.n()];
        for c in &self.cycles {
            if c.len() % 2 == 0 || c.len() > self.max_len {
                return Err(format!(
                    "cycle {c:?} is not odd of length <= {}",
                    self.max_len
                ));
            }
            if !g.is_cycle(c) {
                return Err(format!("{c:?} is not a cycle of the graph"));
            }
            for &v in c {
                if std::mem::replace(&mut used[v], true) {
                    return Err(format!("vertex {v} appears in two cycles"));
                }
            }
        }
        Ok(())
    }
}

/// BFS 2-coloring: the side of every vertex, or an odd cycle witnessing that
/// none exists. Roots are taken in ascending id order.
fn two_color(g: &Graph) -> Result<Vec<u8>, Vec<usize>> {
    let mut scratch = BfsScratch::new(g.n());
    let mut queue = std::collections::VecDeque::new();
    for root in 0..g.n() {
        if scratch.dist[root] != UNSEEN {
            continue;
        }
        scratch.visit(root, 0, root);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let dx = scratch.dist[x];
            for &y in g.neighbors(x) {
                let dy = scratch.dist[y];
                if dy == UNSEEN {
                    scratch.visit(y, dx + 1, x);
                    queue.push_back(y);
                } else if dy == dx {
                    return Err(scratch.lca_cycle(x, y));
                }
            }
        }
    }
    Ok(scratch.dist.iter().map(|&d| (d % 2) as u8).collect())
}

/// A proper 2-coloring (side 0 or 1 per vertex) if `g` is bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    two_color(g).ok()
}

/// An odd cycle of `g`, if `g` is not bipartite.
pub fn odd_cycle_certificate(g: &Graph) -> Option<Vec<usize>> {
    two_color(g).err()
}

/// Core search on the subgraph of `alive` vertices. Prefers a cycle through
/// `v`; otherwise returns the shortest odd cycle extracted from the odd
/// closed walks through `v`.
pub(crate) fn odd_cycle_from(
    g: &Graph,
    alive: Option<&[bool]>,
    v: usize,
    max_len: usize,
    scratch: &mut BfsScratch,
) -> Option<Vec<usize>> {
    if max_len < 3 {
        return None;
    }
    let is_alive = |u: usize| alive.is_none_or(|a| a[u]);
    let radius = ((max_len - 1) / 2) as u32;
    scratch.reset();
    scratch.visit(v, 0, v);
    let mut layer = vec![v];
    let mut fallback: Option<Vec<usize>> = None;
    for depth in 0..=radius {
        let mut next = Vec::new();
        for &x in &layer {
            for &y in g.neighbors(x) {
                if !is_alive(y) {
                    continue;
                }
                let dy = scratch.dist[y];
                if dy == UNSEEN {
                    if depth < radius {
                        scratch.visit(y, depth + 1, x);
                        next.push(y);
                    }
                } else if dy == depth && x < y {
                    let cycle = scratch.lca_cycle(x, y);
                    if cycle[0] == v {
                        return Some(cycle);
                    }
                    if fallback.as_ref().is_none_or(|f| cycle.len() < f.len()) {
                        fallback = Some(cycle);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    fallback
}

/// Shortest odd cycle of length at most `max_len` found from `v`.
///
/// Returns a cycle through `v` of length `2j + 1` whenever the BFS from `v`
/// closes one at layer `j`; if every short odd closed walk through `v`
/// bends back before reaching `v`, the odd cycle inside the shortest such
/// walk is returned instead. `None` means no odd closed walk of length at
/// most `max_len` passes through `v`, hence no odd cycle through `v` of that
/// length exists.
pub fn shortest_odd_cycle_at(g: &Graph, v: usize, max_len: usize) -> Option<Vec<usize>> {
    let mut scratch = BfsScratch::new(g.n());
    odd_cycle_from(g, None, v, max_len, &mut scratch)
}

/// Greedy maximal family on the `alive` vertices; found cycles are marked dead.
fn greedy_disjoint_odd_cycles_masked(
    g: &Graph,
    alive: &mut [bool],
    max_len: usize,
    scratch: &mut BfsScratch,
) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    for v in 0..g.n() {
        while alive[v] {
            match odd_cycle_from(g, Some(alive), v, max_len, scratch) {
                Some(c) => {
                    for &u in &c {
                        alive[u] = false;
                    }
                    cycles.push(c);
                }
                None => break,
            }
        }
    }
    cycles
}

/// A maximal set of vertex-disjoint odd cycles of length at most `max_len`.
///
/// Vertices are scanned in ascending id; from each one the shortest
/// qualifying cycle is removed until none remains. Afterwards no odd cycle of
/// length at most `max_len` survives among the uncovered vertices.
pub fn greedy_disjoint_odd_cycles(g: &Graph, max_len: usize) -> CycleSet {
    let mut alive = vec![true; g.n()];
    let mut scratch = BfsScratch::new(g.n());
    CycleSet {
        cycles: greedy_disjoint_odd_cycles_masked(g, &mut alive, max_len, &mut scratch),
        max_len,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, disjoint_union, path, petersen};
    use crate::oracle::{max_disjoint_odd_cycles, odd_girth};

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        let sides = bipartition(&cycle(4)).unwrap();
        assert_eq!(sides, vec![0, 1, 0, 1]);
        assert!(bipartition(&cycle(5)).is_none());
        let c = odd_cycle_certificate(&cycle(5)).unwrap();
        assert!(cycle(5).is_cycle(&c) && c.len() == 5);
    }

    #[test]
    fn petersen_is_not_bipartite() {
        assert_eq!(odd_girth(&petersen()).unwrap(), Some(5));
        assert!(bipartition(&petersen()).is_none());
    }

    #[test]
    fn c5_cycle_search_respects_the_bound() {
        let c5 = cycle(5);
        for v in 0..5 {
            let c = shortest_odd_cycle_at(&c5, v, 5).unwrap();
            assert_eq!(c.len(), 5);
            assert_eq!(c[0], v);
            assert!(c5.is_cycle(&c));
            assert!(shortest_odd_cycle_at(&c5, v, 3).is_none());
        }
    }

    #[test]
    fn petersen_five_cycles_through_every_vertex() {
        let g = petersen();
        for v in 0..10 {
            let c = shortest_odd_cycle_at(&g, v, 5).unwrap();
            assert_eq!(c.len(), 5);
            assert!(c.contains(&v) && g.is_cycle(&c));
        }
    }

    #[test]
    fn pendant_path_to_a_triangle_reports_the_triangle() {
        // 0-1-2 path, then triangle 2-3-4: no odd cycle passes through 0.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let c = shortest_odd_cycle_at(&g, 0, 7).unwrap();
        assert_eq!(c.len(), 3);
        assert!(g.is_cycle(&c) && !c.contains(&0));
        assert!(shortest_odd_cycle_at(&g, 0, 5).is_none());
    }

    #[test]
    fn two_triangles_give_two_cycles() {
        let g = disjoint_union(&[complete(3), complete(3)]);
        let cs = greedy_disjoint_odd_cycles(&g, 3);
        assert_eq!(cs.len(), 2);
        cs.check(&g).unwrap();
    }

    #[test]
    fn even_cycle_has_none() {
        assert!(greedy_disjoint_odd_cycles(&cycle(4), 5).is_empty());
        assert!(greedy_disjoint_odd_cycles(&path(6), 9).is_empty());
    }

    #[test]
    fn k4_has_exactly_one_disjoint_triangle() {
        let g = complete(4);
        assert_eq!(max_disjoint_odd_cycles(&g, 3).unwrap(), 1);
        let cs = greedy_disjoint_odd_cycles(&g, 3);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.cycles[0], vec![0, 1, 2]);
    }
}
