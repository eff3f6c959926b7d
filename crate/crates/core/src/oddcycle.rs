//! Independent sets and colorings of graphs without short odd cycles.
//!
//! Ball growing: from the lowest surviving vertex `v`, grow BFS layers
//! `L_0 = {v}, L_1, ...` and stop at the first index `i < k` where the next
//! layer grows by less than a factor `r`. Layer `L_i` is independent (an edge
//! inside it would close an odd walk of length `2i + 1 <= ell`) and all its
//! neighbors lie in the ball `B_{i+1}`, which is discarded. Because the layers
//! up to `i` grew geometrically, the discarded ball has fewer than
//! `(r + 2) |L_i|` vertices, so the collected layers make up at least a
//! `1 / (r + 2)` fraction of the graph. With `r^k >= n` the growth cannot
//! continue for `k` steps, so a stopping index always exists.

use thiserror::Error;

use crate::graph::{BfsScratch, Graph, PartialColoring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OddCycleError {
    #[error("odd-cycle length bound must be at least 3, got {0}")]
    BoundTooSmall(usize),
    #[error("graph has an odd cycle of length {} within the bound {ell}", .cycle.len())]
    ShortOddCycle { cycle: Vec<usize>, ell: usize },
}

/// BFS radius `k = floor((ell - 1) / 2)` used for the length bound `ell`.
pub fn radius(ell: usize) -> usize {
    ell.saturating_sub(1) / 2
}

/// Smallest integer `r >= 1` with `r^k >= n`.
pub fn growth_ratio(n: usize, k: usize) -> usize {
    assert!(k >= 1);
    let reaches = |r: usize| {
        let mut acc: usize = 1;
        for _ in 0..k {
            acc = acc.saturating_mul(r);
            if acc >= n {
                return true;
            }
        }
        acc >= n
    };
    let mut r = ((n.max(1) as f64).powf(1.0 / k as f64).round() as usize).max(1);
    while r > 1 && reaches(r - 1) {
        r -= 1;
    }
    while !reaches(r) {
        r += 1;
    }
    r
}

/// The size the ball-growing extraction always reaches: `ceil(n / (r + 2))`.
pub fn independence_guarantee(n: usize, ell: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let r = growth_ratio(n, radius(ell).max(1));
    n.div_ceil(r + 2)
}

/// Runs one extraction on the `alive` vertices without modifying them.
fn extract(
    g: &Graph,
    alive: &[bool],
    ell: usize,
    scratch: &mut BfsScratch,
) -> Result<Vec<usize>, OddCycleError> {
    let k = radius(ell);
    let n_alive = alive.iter().filter(|&&a| a).count();
    let r = growth_ratio(n_alive, k);
    let mut live = alive.to_vec();
    let mut out = Vec::new();

    for v in 0..g.n() {
        if !live[v] {
            continue;
        }
        scratch.reset();
        scratch.visit(v, 0, v);
        let mut layers: Vec<Vec<usize>> = vec![vec![v]];
        let mut chosen = None;
        for i in 0..k {
            let mut next = Vec::new();
            for &x in &layers[i] {
                for &y in g.neighbors(x) {
                    if !live[y] {
                        continue;
                    }
                    match scratch.depth(y) {
                        None => {
                            scratch.visit(y, i as u32 + 1, x);
                            next.push(y);
                        }
                        Some(d) if d == i as u32 => {
                            return Err(OddCycleError::ShortOddCycle {
                                cycle: scratch.lca_cycle(x, y),
                                ell,
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
            let stalls = next.len() < r * layers[i].len();
            layers.push(next);
            if stalls {
                chosen = Some(i);
                break;
            }
        }
        let i = chosen.expect("r^k >= n rules out k steps of r-fold growth");
        out.extend_from_slice(&layers[i]);
        for layer in &layers[..=i + 1] {
            for &u in layer {
                live[u] = false;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// An independent set of size at least [`independence_guarantee`] in a graph
/// with no odd cycle of length at most `ell`.
///
/// If the BFS meets an edge inside a layer, the graph violates the
/// precondition and the odd cycle found is returned as the error.
///
/// ```
/// use partcolor::graph::families::cycle;
/// use partcolor::oddcycle::{independence_guarantee, independent_set_no_short_odd_cycles};
///
/// let c11 = cycle(11);
/// let set = independent_set_no_short_odd_cycles(&c11, 9).unwrap();
/// assert!(c11.is_independent(&set));
/// assert!(set.len() >= independence_guarantee(11, 9));
/// ```
pub fn independent_set_no_short_odd_cycles(
    g: &Graph,
    ell: usize,
) -> Result<Vec<usize>, OddCycleError> {
    if ell < 3 {
        return Err(OddCycleError::BoundTooSmall(ell));
    }
    extract(g, &vec![true; g.n()], ell, &mut BfsScratch::new(g.n()))
}

/// Proper coloring of every vertex: extract an independent set, give it the
/// next color, delete it, repeat on the survivors.
pub fn color_no_short_odd_cycles(g: &Graph, ell: usize) -> Result<PartialColoring, OddCycleError> {
    if ell < 3 {
        return Err(OddCycleError::BoundTooSmall(ell));
    }
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut table = vec![None; g.n()];
    let mut scratch = BfsScratch::new(g.n());
    let mut color = 0;
    while remaining > 0 {
        let set = extract(g, &alive, ell, &mut scratch)?;
        for &v in &set {
            alive[v] = false;
            table[v] = Some(color);
        }
        remaining -= set.len();
        color += 1;
    }
    Ok(PartialColoring::from_dense(&table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, petersen, random_bipartite};
    use crate::oracle::max_independent_set;
    use crate::seed::rng_from;

    #[test]
    fn growth_ratio_is_an_exact_integer_root() {
        assert_eq!(growth_ratio(11, 4), 2);
        assert_eq!(growth_ratio(16, 4), 2);
        assert_eq!(growth_ratio(17, 4), 3);
        assert_eq!(growth_ratio(400, 3), 8);
        assert_eq!(growth_ratio(1, 3), 1);
        assert_eq!(growth_ratio(1000, 3), 10);
        assert_eq!(growth_ratio(1001, 3), 11);
        assert_eq!(independence_guarantee(11, 9), 3);
    }

    #[test]
    fn edgeless_takes_everything() {
        let g = Graph::empty(6);
        assert_eq!(independent_set_no_short_odd_cycles(&g, 5).unwrap().len(), 6);
        assert_eq!(color_no_short_odd_cycles(&g, 5).unwrap().num_colors(), 1);
    }

    #[test]
    fn even_cycle() {
        let g = cycle(6);
        let set = independent_set_no_short_odd_cycles(&g, 5).unwrap();
        assert!(set.len() >= 2 && g.is_independent(&set));
        let c = color_no_short_odd_cycles(&g, 5).unwrap();
        assert_eq!(c.is_proper(&g), Ok(true));
        assert!(c.discarded().is_empty());
    }

    #[test]
    fn c11_meets_the_guarantee() {
        let g = cycle(11);
        let set = independent_set_no_short_odd_cycles(&g, 9).unwrap();
        assert!(g.is_independent(&set));
        assert!(set.len() >= 3);
        assert!(set.len() <= max_independent_set(&g).unwrap().len());
    }

    #[test]
    fn violations_come_with_a_short_odd_cycle() {
        let g = complete(3);
        let err = independent_set_no_short_odd_cycles(&g, 5).unwrap_err();
        let OddCycleError::ShortOddCycle { cycle, .. } = err else {
            panic!("expected a certificate");
        };
        assert!(g.is_cycle(&cycle) && cycle.len() == 3);
        // Detection is not guaranteed: growth may stall before reaching the
        // cycle. Either outcome must still be sound.
        let p = petersen();
        match color_no_short_odd_cycles(&p, 5) {
            Ok(c) => assert_eq!(c.is_proper(&p), Ok(true)),
            Err(OddCycleError::ShortOddCycle { cycle, ell }) => {
                assert!(p.is_cycle(&cycle) && cycle.len() % 2 == 1 && cycle.len() <= ell)
            }
            Err(e) => panic!("{e}"),
        }
        assert_eq!(
            independent_set_no_short_odd_cycles(&p, 2),
            Err(OddCycleError::BoundTooSmall(2))
        );
    }

    #[test]
    fn random_bipartite_color_bound() {
        let r = growth_ratio(400, 3) as f64;
        let bound = 2.0 * (r + 2.0) * 400f64.ln();
        for seed in 0..10 {
            let g = random_bipartite(200, 200, 0.05, &mut rng_from(seed));
            let c = color_no_short_odd_cycles(&g, 7).unwrap();
            assert_eq!(c.is_proper(&g), Ok(true));
            assert!((c.num_colors() as f64) <= bound, "{}", c.num_colors());
        }
    }
}
