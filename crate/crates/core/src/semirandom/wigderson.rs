use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{odd_cycle_certificate, Graph, PartialColoring};

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WigdersonError {
    /// The neighborhood of `apex` contains the odd cycle `cycle`; together
    /// they form an odd wheel, which needs four colors.
    #[error("not 3-colorable: vertex {apex} sees the odd cycle {cycle:?}")]
    NotThreeColorable { apex: usize, cycle: Vec<usize> },
}

/// Degree at which a vertex and its neighborhood are peeled: `ceil(sqrt n)`.
pub fn wigderson_threshold(n: usize) -> usize {
    let mut t = (n as f64).sqrt() as usize;
    while t * t < n {
        t += 1;
    }
    while t > 0 && (t - 1) * (t - 1) >= n {
        t -= 1;
    }
    t
}

/// Colors a 3-colorable graph with `O(sqrt n)` colors.
///
/// While some vertex has at least `ceil(sqrt n)` surviving neighbors, the
/// one of largest degree (lowest id on ties) has its neighborhood 2-colored
/// with two fresh colors and takes a third; all of them are deleted. The
/// low-degree remainder is colored greedily in id order.
///
/// ```
/// use partcolor::graph::families::complete;
/// use partcolor::semirandom::wigderson_color;
///
/// assert_eq!(wigderson_color(&complete(3)).unwrap().num_colors(), 3);
/// assert!(wigderson_color(&complete(4)).is_err());
/// ```
pub fn wigderson_color(g: &Graph) -> Result<PartialColoring, WigdersonError> {
    let n = g.n();
    let t = wigderson_threshold(n).max(1);
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut table = vec![None; n];
    let mut next = 0;

    while let Some(apex) = (0..n)
        .filter(|&v| alive[v] && deg[v] >= t)
        .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
    {
        let nbrs: Vec<usize> = g
            .neighbors(apex)
            .iter()
            .copied()
            .filter(|&u| alive[u])
            .collect();
        let (h, map) = g.induced_subgraph(&nbrs);
        if let Some(cycle) = odd_cycle_certificate(&h) {
            return Err(WigdersonError::NotThreeColorable {
                apex,
                cycle: cycle.into_iter().map(|i| map[i]).collect(),
            });
        }
        let sides = crate::graph::bipartition(&h).expect("no odd cycle");
        for (i, &side) in sides.iter().enumerate() {
            table[map[i]] = Some(next + side as usize);
        }
        table[apex] = Some(next + 2);
        next += 3;
        for &v in nbrs.iter().chain(std::iter::once(&apex)) {
            alive[v] = false;
            for &u in g.neighbors(v) {
                deg[u] -= 1;
            }
        }
    }

    let mut used = Vec::new();
    for v in (0..n).filter(|&v| alive[v]) {
        used.clear();
        used.extend(
            g.neighbors(v)
                .iter()
                .filter(|&&u| alive[u])
                .filter_map(|&u| table[u]),
        );
        let c = (next..)
            .find(|c| !used.contains(c))
            .expect("unbounded range");
        table[v] = Some(c);
    }
    Ok(PartialColoring::from_dense(&table))
}

/// Color budget of [`wigderson_color`] on `n` vertices: three per peel, at
/// most `ceil(sqrt n)` peels, plus `ceil(sqrt n)` for the greedy finish.
pub fn wigderson_budget(n: usize) -> usize {
    4 * wigderson_threshold(n)
}
