//! Low-rank augmented-Lagrangian solver.
//!
//! The edge slack `z` is eliminated: an edge is satisfiable exactly when
//! `w_i + w_j >= need_ij = c <v_i, v_j> + 1/k` with `c = (k-1)/k`, so the
//! solver works on the unit vectors and `w` alone with one inequality
//! `g_ij = need_ij - w_i - w_j <= 0` per edge. Each outer round minimizes
//!
//! ```text
//! sum w_i + sum_ij max(0, lambda_ij + mu g_ij)^2 / (2 mu)
//! ```
//!
//! by projected gradient steps with Armijo backtracking (vectors retracted to
//! the sphere, `w` clipped to the box), then updates the multipliers and
//! raises `mu` when the violation does not shrink fast enough. Once the worst
//! violation is within tolerance, `w` is raised on the few edges still short
//! so the returned point is feasible up to rounding.

use std::collections::VecDeque;

use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::{dot, Embedding, SdpError, SdpSolution};
use crate::graph::Graph;
use crate::seed::{derive_seed, rng_from};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub k: usize,
    /// Embedding dimension; `None` picks [`default_dim`].
    pub dim: Option<usize>,
    /// Budget of gradient steps across all rounds.
    pub max_iters: usize,
    /// Allowed edge-constraint violation, in the units of the inner product.
    pub feas_tol: f64,
    pub penalty_init: f64,
    pub penalty_growth: f64,
    /// Gradient steps per round.
    pub inner_iters: usize,
    /// A feasible round that moves `sum w` by less than this fraction ends
    /// the solve.
    pub objective_rtol: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            k: 3,
            dim: None,
            max_iters: 50_000,
            feas_tol: 1e-4,
            penalty_init: 10.0,
            penalty_growth: 4.0,
            inner_iters: 400,
            objective_rtol: 1e-2,
            seed: 0,
        }
    }
}

impl SolverConfig {
    // Negated comparisons also reject NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), SdpError> {
        let bad = |m: String| Err(SdpError::InvalidConfig(m));
        if !(2..=3).contains(&self.k) {
            return bad(format!("k must be 2 or 3, got {}", self.k));
        }
        if let Some(d) = self.dim {
            if d < 3 {
                return bad(format!("dim must be at least 3, got {d}"));
            }
        }
        if !(self.feas_tol > 0.0) {
            return bad(format!("feas_tol must be positive, got {}", self.feas_tol));
        }
        if !(self.penalty_init > 0.0) || !(self.penalty_growth > 1.0) {
            return bad("penalty must start positive and grow by a factor above 1".into());
        }
        if !(self.objective_rtol >= 0.0) {
            return bad(format!(
                "objective_rtol must be nonnegative, got {}",
                self.objective_rtol
            ));
        }
        if self.inner_iters == 0 || self.max_iters == 0 {
            return bad("iteration budgets must be positive".into());
        }
        Ok(())
    }
}

const MAX_PENALTY: f64 = 1e8;
/// Window of the nonmonotone line search.
const MEMORY: usize = 10;

/// `max(3, min(n, ceil(sqrt(2n)) + 1))`.
pub fn default_dim(n: usize) -> usize {
    let root = ((2 * n) as f64).sqrt().ceil() as usize;
    (root + 1).min(n).max(3)
}

struct Problem {
    n: usize,
    d: usize,
    edges: Vec<(usize, usize)>,
    c: f64,
    off: f64,
}

struct Point {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Problem {
    fn gap(&self, p: &Point, e: usize) -> f64 {
        let (i, j) = self.edges[e];
        let d = self.d;
        self.c * dot(&p.x[i * d..(i + 1) * d], &p.x[j * d..(j + 1) * d]) + self.off
            - p.w[i]
            - p.w[j]
    }

    fn value(&self, p: &Point, lambda: &[f64], mu: f64) -> f64 {
        let mut f: f64 = p.w.iter().sum();
        for (e, &l) in lambda.iter().enumerate() {
            let a = (l + mu * self.gap(p, e)).max(0.0);
            f += a * a / (2.0 * mu);
        }
        f
    }

    /// Riemannian gradient in `x` and plain gradient in `w`.
    fn gradient(&self, p: &Point, lambda: &[f64], mu: f64) -> (Vec<f64>, Vec<f64>) {
        let d = self.d;
        let mut gx = vec![0.0; self.n * d];
        let mut gw = vec![1.0; self.n];
        for (e, &(i, j)) in self.edges.iter().enumerate() {
            let a = (lambda[e] + mu * self.gap(p, e)).max(0.0);
            if a == 0.0 {
                continue;
            }
            gw[i] -= a;
            gw[j] -= a;
            let s = a * self.c;
            for t in 0..d {
                gx[i * d + t] += s * p.x[j * d + t];
                gx[j * d + t] += s * p.x[i * d + t];
            }
        }
        for i in 0..self.n {
            let row = i * d..(i + 1) * d;
            let radial = dot(&gx[row.clone()], &p.x[row.clone()]);
            for t in row {
                gx[t] -= radial * p.x[t];
            }
        }
        (gx, gw)
    }

    fn step(&self, p: &Point, gx: &[f64], gw: &[f64], t: f64) -> Point {
        let d = self.d;
        let mut x: Vec<f64> = p.x.iter().zip(gx).map(|(a, g)| a - t * g).collect();
        for row in x.chunks_mut(d) {
            let norm = dot(row, row).sqrt();
            row.iter_mut().for_each(|v| *v /= norm);
        }
        let w =
            p.w.iter()
                .zip(gw)
                .map(|(a, g)| (a - t * g).clamp(0.0, 1.0))
                .collect();
        Point { x, w }
    }

    fn violation(&self, p: &Point) -> f64 {
        let scale = 1.0 / self.c;
        (0..self.edges.len())
            .map(|e| self.gap(p, e))
            .fold(0.0, f64::max)
            * scale
    }
}

/// Barzilai-Borwein step `<s, s> / <s, y>` between two iterates, if the
/// curvature along `s` is positive.
fn spectral_step(p: &Point, q: &Point, gp: (&[f64], &[f64]), gq: (&[f64], &[f64])) -> Option<f64> {
    let mut ss = 0.0;
    let mut sy = 0.0;
    for ((a, b), (u, v)) in p.x.iter().zip(&q.x).zip(gp.0.iter().zip(gq.0)) {
        ss += (b - a) * (b - a);
        sy += (b - a) * (v - u);
    }
    for ((a, b), (u, v)) in p.w.iter().zip(&q.w).zip(gp.1.iter().zip(gq.1)) {
        ss += (b - a) * (b - a);
        sy += (b - a) * (v - u);
    }
    (sy > 0.0).then(|| (ss / sy).clamp(1e-10, 1e3))
}

fn distance2(a: &Point, b: &Point) -> f64 {
    let dx: f64 = a.x.iter().zip(&b.x).map(|(u, v)| (u - v) * (u - v)).sum();
    let dw: f64 = a.w.iter().zip(&b.w).map(|(u, v)| (u - v) * (u - v)).sum();
    dx + dw
}

/// Solves the relaxation to within `cfg.feas_tol` and returns a point whose
/// edge constraints are then made to hold exactly by raising `w`.
///
/// ```
/// use partcolor::graph::families::complete;
/// use partcolor::sdp::{solve_partial_coloring_sdp, SolverConfig};
///
/// let sol = solve_partial_coloring_sdp(&complete(3), &SolverConfig::default()).unwrap();
/// assert!(sol.objective < 3e-4);
/// assert!(sol.residuals.max() <= 1e-4);
/// ```
pub fn solve_partial_coloring_sdp(g: &Graph, cfg: &SolverConfig) -> Result<SdpSolution, SdpError> {
    cfg.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(SdpError::EmptyGraph);
    }
    let d = cfg.dim.unwrap_or_else(|| default_dim(n));
    let k = cfg.k;
    let prob = Problem {
        n,
        d,
        edges: g.edges().collect(),
        c: (k - 1) as f64 / k as f64,
        off: 1.0 / k as f64,
    };

    let mut rng = rng_from(derive_seed(cfg.seed, "sdp-init"));
    let mut x: Vec<f64> = (0..n * d)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    for row in x.chunks_mut(d) {
        let norm = dot(row, row).sqrt();
        row.iter_mut().for_each(|v| *v /= norm);
    }
    let mut p = Point { x, w: vec![0.0; n] };

    let mut lambda = vec![0.0; prob.edges.len()];
    let mut mu = cfg.penalty_init;
    let mut iters = 0;
    let mut t = 1.0 / mu;
    let mut viol = prob.violation(&p);
    let stationary_tol = 1e-5 * (n as f64).sqrt();
    let mut settled = false;

    while viol > cfg.feas_tol || !settled {
        if iters >= cfg.max_iters {
            let vectors = Embedding::from_rows(d, p.x);
            let sol = SdpSolution::assemble(g, k, vectors, p.w);
            return Err(SdpError::Stall {
                iters,
                residuals: sol.residuals,
            });
        }
        let f = prob.value(&p, &lambda, mu);
        let objective_before: f64 = p.w.iter().sum();
        let mut stationary = false;
        let mut recent = VecDeque::from([f]);
        let (mut gx, mut gw) = prob.gradient(&p, &lambda, mu);
        for _ in 0..cfg.inner_iters.min(cfg.max_iters - iters) {
            iters += 1;
            let reference = recent.iter().copied().fold(f64::MIN, f64::max);
            let mut accepted = None;
            for _ in 0..40 {
                let q = prob.step(&p, &gx, &gw, t);
                let fq = prob.value(&q, &lambda, mu);
                let moved = distance2(&p, &q);
                if fq <= reference - 1e-4 * moved / t {
                    accepted = Some((q, fq, moved));
                    break;
                }
                t *= 0.5;
            }
            let Some((q, fq, moved)) = accepted else {
                stationary = true;
                break;
            };
            if moved.sqrt() / t < stationary_tol {
                p = q;
                stationary = true;
                break;
            }
            let (hx, hw) = prob.gradient(&q, &lambda, mu);
            t = spectral_step(&p, &q, (&gx, &gw), (&hx, &hw)).unwrap_or(t * 2.0);
            p = q;
            (gx, gw) = (hx, hw);
            recent.push_back(fq);
            if recent.len() > MEMORY {
                recent.pop_front();
            }
        }
        let before = viol;
        for (e, l) in lambda.iter_mut().enumerate() {
            *l = (*l + mu * prob.gap(&p, e)).max(0.0);
        }
        viol = prob.violation(&p);
        let objective: f64 = p.w.iter().sum();
        settled = stationary
            || (objective_before - objective).abs() <= cfg.objective_rtol * objective.max(1.0);
        if viol > cfg.feas_tol && viol > 0.25 * before && mu < MAX_PENALTY {
            mu *= cfg.penalty_growth;
            t /= cfg.penalty_growth;
        }
    }

    // Close the remaining sub-tolerance gaps so the output is feasible.
    for e in 0..prob.edges.len() {
        let gap = prob.gap(&p, e);
        if gap > 0.0 {
            let (i, j) = prob.edges[e];
            let up_i = (p.w[i] + gap / 2.0).min(1.0);
            let rest = gap - (up_i - p.w[i]);
            p.w[i] = up_i;
            p.w[j] = (p.w[j] + rest).min(1.0);
        }
    }
    let vectors = Embedding::from_rows(d, p.x);
    Ok(SdpSolution::assemble(g, k, vectors, p.w))
}
