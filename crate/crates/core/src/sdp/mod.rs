//! The partial k-coloring relaxation for k in {2, 3}.
//!
//! Variables are a unit vector `v_i` and a slack `w_i` per vertex and a slack
//! `z_ij` per edge; the objective is `sum w_i` subject to
//!
//! ```text
//! <v_i, v_j> <= -1/(k-1) + k/(k-1) * z_ij     for every edge ij
//! z_ij <= w_i + w_j,   0 <= w_i, z_ij <= 1,   |v_i| = 1
//! ```
//!
//! A vertex with `w_i = 1` pays to opt out of the vector coloring; everything
//! else must be vector-colored up to the slack its edges carry.

mod projection;
mod solver;
mod witness;

pub use projection::{odd_cycle_free_length, project_neighborhood};
pub use solver::{default_dim, solve_partial_coloring_sdp, SolverConfig};
pub use witness::witness_solution;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SdpError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("the relaxation needs a nonempty graph")]
    EmptyGraph,
    #[error("solver stalled after {iters} iterations with edge violation {:.3e}", .residuals.edge)]
    Stall { iters: usize, residuals: Residuals },
    #[error("solution does not match the graph: {0}")]
    Shape(String),
    #[error("witness coloring is invalid: {0}")]
    InvalidWitness(String),
}

/// `n` unit vectors of a common dimension, stored row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Embedding {
    dim: usize,
    data: Vec<f64>,
}

impl Embedding {
    pub fn from_rows(dim: usize, data: Vec<f64>) -> Self {
        assert!(
            dim > 0 && data.len().is_multiple_of(dim),
            "row length mismatch"
        );
        Embedding { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn dot(&self, i: usize, j: usize) -> f64 {
        dot(self.row(i), self.row(j))
    }

    /// Rows listed in `ids`, in that order.
    pub fn select(&self, ids: &[usize]) -> Embedding {
        let mut data = Vec::with_capacity(ids.len() * self.dim);
        for &i in ids {
            data.extend_from_slice(self.row(i));
        }
        Embedding {
            dim: self.dim,
            data,
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Largest violation in each constraint family; zero means satisfied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    /// `<v_i, v_j> - (-1/(k-1) + k/(k-1) z_ij)`.
    pub edge: f64,
    /// `z_ij - w_i - w_j`.
    pub coupling: f64,
    /// Distance of any `w_i` or `z_ij` outside `[0, 1]`.
    pub bounds: f64,
    /// `| |v_i|^2 - 1 |`.
    pub norm: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.edge.max(self.coupling).max(self.bounds).max(self.norm)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SdpSolution {
    pub k: usize,
    pub vectors: Embedding,
    pub w: Vec<f64>,
    /// `(u, v, z_uv)` for every edge `u < v`, in lexicographic order.
    pub z: Vec<(usize, usize, f64)>,
    pub objective: f64,
    pub residuals: Residuals,
}

impl SdpSolution {
    /// Edge slack `z_ij` from the vectors and `w` by the closed form: the
    /// smallest value the edge constraint allows, capped by `w_i + w_j`.
    pub(crate) fn assemble(g: &Graph, k: usize, vectors: Embedding, w: Vec<f64>) -> Self {
        let c = (k - 1) as f64 / k as f64;
        let off = 1.0 / k as f64;
        let z = g
            .edges()
            .map(|(u, v)| {
                let need = c * vectors.dot(u, v) + off;
                (u, v, need.min(w[u] + w[v]).clamp(0.0, 1.0))
            })
            .collect();
        let mut sol = SdpSolution {
            k,
            objective: w.iter().sum(),
            vectors,
            w,
            z,
            residuals: Residuals::default(),
        };
        sol.residuals = residuals(g, &sol).expect("shapes agree by construction");
        sol
    }
}

/// Recomputes all constraint residuals of `sol` against `g`.
pub fn residuals(g: &Graph, sol: &SdpSolution) -> Result<Residuals, SdpError> {
    let n = g.n();
    if sol.vectors.len() != n || sol.w.len() != n {
        return Err(SdpError::Shape(format!(
            "{} vectors and {} slacks for {n} vertices",
            sol.vectors.len(),
            sol.w.len()
        )));
    }
    if sol.z.len() != g.edge_count() {
        return Err(SdpError::Shape(format!(
            "{} edge slacks for {} edges",
            sol.z.len(),
            g.edge_count()
        )));
    }
    if !(2..=3).contains(&sol.k) {
        return Err(SdpError::Shape(format!("k = {} is not 2 or 3", sol.k)));
    }
    let k = sol.k as f64;
    let mut r = Residuals::default();
    for (&(u, v, z), e) in sol.z.iter().zip(g.edges()) {
        if (u, v) != e {
            return Err(SdpError::Shape(format!(
                "edge slack for ({u}, {v}) where {e:?} expected"
            )));
        }
        let bound = -1.0 / (k - 1.0) + k / (k - 1.0) * z;
        r.edge = r.edge.max(sol.vectors.dot(u, v) - bound);
        r.coupling = r.coupling.max(z - sol.w[u] - sol.w[v]);
        r.bounds = r.bounds.max(-z).max(z - 1.0);
    }
    for (i, &wi) in sol.w.iter().enumerate() {
        r.bounds = r.bounds.max(-wi).max(wi - 1.0);
        r.norm = r.norm.max((sol.vectors.dot(i, i) - 1.0).abs());
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub residuals: Residuals,
    pub tol: f64,
    pub edge_ok: bool,
    pub coupling_ok: bool,
    pub bounds_ok: bool,
    pub norm_ok: bool,
}

impl FeasibilityReport {
    pub fn pass(&self) -> bool {
        self.edge_ok && self.coupling_ok && self.bounds_ok && self.norm_ok
    }
}

/// Per-family violations of `sol` with pass/fail at `tol`. `k` overrides the
/// solution's own `k`, so a 3-coloring solution can be checked against the
/// stricter 2-coloring constraints.
pub fn check_feasibility(
    g: &Graph,
    sol: &SdpSolution,
    k: usize,
    tol: f64,
) -> Result<FeasibilityReport, SdpError> {
    let as_k = SdpSolution {
        k,
        vectors: sol.vectors.clone(),
        w: sol.w.clone(),
        z: sol.z.clone(),
        objective: sol.objective,
        residuals: sol.residuals,
    };
    let r = residuals(g, &as_k)?;
    Ok(FeasibilityReport {
        residuals: r,
        tol,
        edge_ok: r.edge <= tol,
        coupling_ok: r.coupling <= tol,
        bounds_ok: r.bounds <= tol,
        norm_ok: r.norm <= tol,
    })
}

/// Smallest `gamma >= 0` for which `vectors` is a `(k, gamma)`-vector
/// coloring of `g`: the largest `<v_i, v_j> + 1/(k-1)` over edges.
pub fn vector_coloring_slack(g: &Graph, vectors: &Embedding, k: usize) -> f64 {
    let base = 1.0 / (k as f64 - 1.0);
    g.edges()
        .map(|(u, v)| vectors.dot(u, v) + base)
        .fold(0.0, f64::max)
}
