use super::{dot, Embedding};

/// Projects the vectors of `nbrs` onto the hyperplane orthogonal to the
/// vector of `apex` and renormalizes them. Rows come back in `nbrs` order.
///
/// If the apex vector is `(3, gamma)`-colored against every neighbor, the
/// result is a `(2, 4 gamma)`-vector coloring of the neighborhood. A vector
/// (numerically) parallel to the apex has no meaningful projection and is
/// replaced by a fixed unit vector orthogonal to the apex.
pub fn project_neighborhood(vectors: &Embedding, apex: usize, nbrs: &[usize]) -> Embedding {
    let d = vectors.dim();
    let a = vectors.row(apex);
    let mut data = Vec::with_capacity(nbrs.len() * d);
    for &j in nbrs {
        let v = vectors.row(j);
        let along = dot(a, v);
        let mut p: Vec<f64> = v.iter().zip(a).map(|(x, y)| x - along * y).collect();
        let norm = dot(&p, &p).sqrt();
        if norm < 1e-12 {
            p = orthogonal_unit(a);
        } else {
            p.iter_mut().for_each(|x| *x /= norm);
        }
        data.extend(p);
    }
    Embedding::from_rows(d, data)
}

fn orthogonal_unit(a: &[f64]) -> Vec<f64> {
    let axis = (0..a.len())
        .min_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs()))
        .expect("nonzero dimension");
    let mut e: Vec<f64> = a.iter().map(|&x| -a[axis] * x).collect();
    e[axis] += 1.0;
    let norm = dot(&e, &e).sqrt();
    e.iter_mut().for_each(|x| *x /= norm);
    e
}

/// Odd-cycle length excluded by a `(2, gamma)`-vector coloring:
/// `floor(1 / (scale * sqrt(gamma)))` with `scale = 8`.
///
/// Callers working from a `(3, gamma)` coloring of a neighborhood pass
/// `scale = 16`, which equals `8 * sqrt(4 gamma) / sqrt(gamma)`. The result
/// is never below 3 because three unit vectors cannot have pairwise inner
/// products below `-1/2`, so `(2, gamma)`-colorable graphs with
/// `gamma < 1/2` are triangle-free. It is capped at `n.max(3)`, the longest
/// cycle the graph can hold, which also covers `gamma = 0`.
pub fn odd_cycle_free_length(gamma: f64, scale: f64, n: usize) -> usize {
    let cap = n.max(3);
    if gamma <= 0.0 {
        return cap;
    }
    let raw = 1.0 / (scale * gamma.sqrt());
    if raw >= cap as f64 {
        cap
    } else {
        (raw.floor() as usize).clamp(3, cap)
    }
}
