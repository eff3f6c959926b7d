use std::collections::BTreeMap;
use std::f64::consts::PI;

use super::{Embedding, SdpError, SdpSolution};
use crate::graph::Graph;

/// The two-dimensional feasible point built from a partial coloring.
///
/// Good vertices get the unit vector of their color class (three planar
/// vectors at 120 degrees for `k = 3`, an antipodal pair for `k = 2`), bad
/// vertices get `(1, 0)` with `w = 1`, and `z = 1` exactly on edges touching a
/// bad vertex. The objective is `|bad|`.
pub fn witness_solution(
    g: &Graph,
    good_coloring: &BTreeMap<usize, usize>,
    bad: &[usize],
    k: usize,
) -> Result<SdpSolution, SdpError> {
    if !(2..=3).contains(&k) {
        return Err(SdpError::InvalidWitness(format!("k = {k} is not 2 or 3")));
    }
    let n = g.n();
    let mut is_bad = vec![false; n];
    for &b in bad {
        if b >= n || std::mem::replace(&mut is_bad[b], true) {
            return Err(SdpError::InvalidWitness(format!(
                "bad vertex {b} invalid or repeated"
            )));
        }
    }
    let mut class = vec![None; n];
    for (&v, &c) in good_coloring {
        if v >= n || is_bad[v] || c >= k {
            return Err(SdpError::InvalidWitness(format!("entry {v} -> {c}")));
        }
        class[v] = Some(c);
    }
    if let Some(v) = (0..n).find(|&v| !is_bad[v] && class[v].is_none()) {
        return Err(SdpError::InvalidWitness(format!(
            "good vertex {v} is uncolored"
        )));
    }
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| class[u].is_some() && class[u] == class[v])
    {
        return Err(SdpError::InvalidWitness(format!(
            "edge ({u}, {v}) is monochromatic"
        )));
    }

    let anchor = |c: usize| -> [f64; 2] {
        if k == 2 {
            [if c == 0 { 1.0 } else { -1.0 }, 0.0]
        } else {
            let t = 2.0 * PI * c as f64 / 3.0;
            [t.cos(), t.sin()]
        }
    };
    let mut data = Vec::with_capacity(2 * n);
    for c in &class {
        data.extend(c.map_or([1.0, 0.0], anchor));
    }
    let w: Vec<f64> = is_bad.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect();
    let z = g
        .edges()
        .map(|(u, v)| (u, v, if is_bad[u] || is_bad[v] { 1.0 } else { 0.0 }))
        .collect();
    let mut sol = SdpSolution {
        k,
        vectors: Embedding::from_rows(2, data),
        objective: bad.len() as f64,
        w,
        z,
        residuals: Default::default(),
    };
    sol.residuals = super::residuals(g, &sol)?;
    Ok(sol)
}
