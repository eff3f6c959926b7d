//! Threshold rounding of approximate vector 3-colorings.
//!
//! A random Gaussian direction `r` selects `S = { i : <v_i, r> >= beta }`;
//! dropping every member with a neighbor inside `S` leaves an independent
//! set. With `beta` tuned to the maximum degree, an expected
//! `rho`-fraction of the vertices survives, and repeating the best of many
//! trials colors the graph one class at a time.

use rand_distr::{Distribution, StandardNormal};

use crate::graph::{Graph, PartialColoring};
use crate::sdp::Embedding;
use crate::seed::{derive_indexed, rng_from};

fn degree_eff(max_degree: usize) -> f64 {
    max_degree.max(2) as f64
}

/// `sqrt(2 ln D) * sqrt(3/4 + a - a^2) / (3/2 - a)` with `D = max(delta, 2)`.
pub fn beta(delta: usize, alpha: f64) -> f64 {
    let d = degree_eff(delta);
    (2.0 * d.ln()).sqrt() * (0.75 + alpha - alpha * alpha).sqrt() / (1.5 - alpha)
}

/// Per-round success fraction `c (ln D)^(-1/2) D^(-(3/4 + a - a^2) / (3/2 - a)^2)`,
/// clamped into `(0, 1]`.
pub fn rho(delta: usize, alpha: f64, c: f64) -> f64 {
    let d = degree_eff(delta);
    let exponent = (0.75 + alpha - alpha * alpha) / ((1.5 - alpha) * (1.5 - alpha));
    (c / d.ln().sqrt() * d.powf(-exponent)).clamp(f64::MIN_POSITIVE, 1.0)
}

/// Trials per color class: `ceil((10 / rho) ln n)`, at least one.
pub fn trials(rho: f64, n: usize) -> usize {
    ((10.0 / rho) * (n.max(2) as f64).ln()).ceil().max(1.0) as usize
}

/// Members of `live` above the threshold with no neighbor above it, for
/// direction `r`. `above` is an all-false scratch buffer and is left so.
fn select(
    g: &Graph,
    live: &[usize],
    vectors: &Embedding,
    r: &[f64],
    beta: f64,
    above: &mut [bool],
) -> Vec<usize> {
    let hits: Vec<usize> = live
        .iter()
        .copied()
        .filter(|&i| crate::sdp::dot(vectors.row(i), r) >= beta)
        .collect();
    for &i in &hits {
        above[i] = true;
    }
    let chosen = hits
        .iter()
        .copied()
        .filter(|&i| !g.neighbors(i).iter().any(|&j| above[j]))
        .collect();
    for &i in &hits {
        above[i] = false;
    }
    chosen
}

fn gaussian(dim: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng_from(seed);
    (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect()
}

/// One rounding trial with threshold [`beta`] at the measured maximum degree
/// of `g`. The result is always independent, possibly empty.
pub fn round_independent_set(g: &Graph, vectors: &Embedding, alpha: f64, seed: u64) -> Vec<usize> {
    let r = gaussian(vectors.dim(), seed);
    let live: Vec<usize> = (0..g.n()).collect();
    let mut above = vec![false; g.n()];
    select(
        g,
        &live,
        vectors,
        &r,
        beta(g.max_degree(), alpha),
        &mut above,
    )
}

/// Result of [`approx_hyperplane_coloring`].
#[derive(Clone, Debug, PartialEq)]
pub struct HyperplaneColoring {
    pub coloring: PartialColoring,
    pub iterations: usize,
    pub trials_per_iteration: usize,
    /// Iterations whose best set fell back to a single vertex.
    pub fallbacks: usize,
    /// Iterations whose best set had fewer than `rho |V_t| / 2` vertices.
    pub below_target: usize,
}

/// Colors all of `g`: each iteration keeps the largest of
/// [`trials`]`(rho, n)` rounding trials on the surviving vertices as a new
/// color class. If every trial comes back empty, the lowest surviving vertex
/// becomes a class of its own, so the loop always terminates.
pub fn approx_hyperplane_coloring(
    g: &Graph,
    vectors: &Embedding,
    alpha: f64,
    rho: f64,
    seed: u64,
) -> HyperplaneColoring {
    let n = g.n();
    let per_round = trials(rho, n);
    let mut alive = vec![true; n];
    let mut above = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut table = vec![None; n];
    let mut out = HyperplaneColoring {
        coloring: PartialColoring::default(),
        iterations: 0,
        trials_per_iteration: per_round,
        fallbacks: 0,
        below_target: 0,
    };

    while remaining > 0 {
        let iteration = out.iterations;
        let max_deg = (0..n)
            .filter(|&v| alive[v])
            .map(|v| deg[v])
            .max()
            .unwrap_or(0);
        let b = beta(max_deg, alpha);
        let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut best: Vec<usize> = Vec::new();
        for t in 0..per_round {
            let r = gaussian(
                vectors.dim(),
                derive_indexed(
                    derive_indexed(seed, "iteration", iteration as u64),
                    "trial",
                    t as u64,
                ),
            );
            let s = select(g, &live, vectors, &r, b, &mut above);
            if s.len() > best.len() {
                best = s;
            }
        }
        if (best.len() as f64) < rho * remaining as f64 / 2.0 {
            out.below_target += 1;
        }
        if best.is_empty() {
            out.fallbacks += 1;
            best.push((0..n).find(|&v| alive[v]).expect("a vertex survives"));
        }
        for &v in &best {
            alive[v] = false;
            table[v] = Some(iteration);
            for &u in g.neighbors(v) {
                deg[u] -= 1;
            }
        }
        remaining -= best.len();
        out.iterations += 1;
    }
    out.coloring = PartialColoring::from_dense(&table);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::complete;

    fn triangle() -> Embedding {
        let t = 2.0 * std::f64::consts::PI / 3.0;
        Embedding::from_rows(2, vec![1.0, 0.0, t.cos(), t.sin(), t.cos(), -t.sin()])
    }

    #[test]
    fn beta_and_rho_formulas() {
        // sqrt(2 ln 2) * sqrt(3/4) / (3/2)
        assert!((beta(2, 0.0) - 0.679_778_5).abs() < 1e-6);
        assert_eq!(beta(0, 0.0), beta(2, 0.0));
        let r = rho(100, 0.1, 0.125);
        assert!(r > 0.0 && r < 0.125);
        assert_eq!(trials(1.0, 1), (10.0 * 2f64.ln()).ceil() as usize);
    }

    #[test]
    fn edgeless_graph_takes_everything_above_threshold() {
        let g = Graph::empty(3);
        for seed in 0..20 {
            let s = round_independent_set(&g, &triangle(), 0.0, seed);
            assert!(g.is_independent(&s));
        }
        let emb = Embedding::from_rows(3, [1.0, 0.0, 0.0].repeat(4));
        let c = approx_hyperplane_coloring(&Graph::empty(4), &emb, 0.0, 1.0, 0);
        assert_eq!(c.coloring.num_colors(), 1);
    }

    #[test]
    fn triangle_gets_three_colors() {
        let g = complete(3);
        let c = approx_hyperplane_coloring(&g, &triangle(), 0.0, rho(2, 0.0, 0.125), 1);
        assert_eq!(c.coloring.is_proper(&g), Ok(true));
        assert_eq!(c.coloring.num_colors(), 3);
        assert_eq!(c.fallbacks, 0);
    }

    #[test]
    fn fallback_handles_useless_vectors() {
        // All vectors equal: every selected vertex has a selected neighbor.
        let g = complete(4);
        let emb = Embedding::from_rows(2, [1.0, 0.0].repeat(4));
        let c = approx_hyperplane_coloring(&g, &emb, 0.0, 0.5, 3);
        assert_eq!(c.coloring.is_proper(&g), Ok(true));
        assert_eq!(c.coloring.num_colors(), 4);
        assert!(c.fallbacks >= 3);
    }
}
