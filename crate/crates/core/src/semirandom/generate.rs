use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::seed::{derive_seed, pair_coin, rng_from};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("good-part edge ({0}, {1}) joins two vertices of the same planted color")]
    ImproperGood(usize, usize),
    #[error("edge ({0}, {1}) is outside the part its policy may touch")]
    OutOfPlace(usize, usize),
}

/// Shape of the graph on the good vertices. Every preset comes with a proper
/// k-coloring, so the good part is k-colorable by construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GoodGraph {
    /// Balanced random k-partite graph: colors dealt round-robin and then
    /// shuffled, each bichromatic pair joined with probability `q`.
    Partite { q: f64 },
    /// `stars` disjoint stars; the centers are the first `stars` good ids.
    StarForest { stars: usize },
    /// Explicit edges on the good ids together with their planted coloring.
    Custom {
        edges: Vec<(usize, usize)>,
        coloring: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BadPolicy {
    Empty,
    Gnp { q: f64 },
    Clique,
    Custom { edges: Vec<(usize, usize)> },
}

/// Extra good-bad edges added after the random ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CrossPolicy {
    None,
    Random { q: f64 },
    Custom { edges: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdversarySpec {
    pub good: GoodGraph,
    pub bad: BadPolicy,
    pub extra: CrossPolicy,
}

impl Default for AdversarySpec {
    fn default() -> Self {
        AdversarySpec {
            good: GoodGraph::Partite { q: 0.5 },
            bad: BadPolicy::Empty,
            extra: CrossPolicy::None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub good: Vec<usize>,
    pub bad: Vec<usize>,
    pub p: f64,
    pub eps: f64,
    pub k: usize,
    pub planted_coloring: BTreeMap<usize, usize>,
    pub seed: u64,
    pub adversary: AdversarySpec,
    /// The random good-bad edges.
    pub random_cross: Vec<(usize, usize)>,
    /// The adversary's extra good-bad edges.
    pub extra_cross: Vec<(usize, usize)>,
}

impl PlantedInstance {
    pub fn is_bad(&self, v: usize) -> bool {
        v >= self.good.len()
    }
}

/// Number of bad vertices: `floor(eps n)`, robust to `eps n` landing a hair
/// below an integer in floating point.
pub fn bad_count(n: usize, eps: f64) -> usize {
    ((eps * n as f64) + 1e-9).floor() as usize
}

fn check_prob(name: &str, q: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&q) {
        Ok(())
    } else {
        Err(GenerateError::InvalidParam(format!(
            "{name} = {q} is not a probability"
        )))
    }
}

/// Samples an instance: the last `floor(eps n)` ids are bad, the good part
/// follows `adv.good`, the bad part `adv.bad`, every good-bad pair is joined
/// independently with probability `p`, and `adv.extra` adds more good-bad
/// edges. All coins are pair coins keyed by `seed`, so the instance does not
/// depend on enumeration order.
pub fn generate(
    n: usize,
    eps: f64,
    p: f64,
    k: usize,
    adv: &AdversarySpec,
    seed: u64,
) -> Result<PlantedInstance, GenerateError> {
    if !(2..=3).contains(&k) {
        return Err(GenerateError::InvalidParam(format!(
            "k = {k} is not 2 or 3"
        )));
    }
    if !(0.0..1.0).contains(&eps) {
        return Err(GenerateError::InvalidParam(format!(
            "eps = {eps} is not in [0, 1)"
        )));
    }
    check_prob("p", p)?;
    let nb = bad_count(n, eps);
    let ng = n - nb;
    let mut edges = Vec::new();

    let coloring: Vec<usize> = match &adv.good {
        GoodGraph::Partite { q } => {
            check_prob("q", *q)?;
            let mut colors: Vec<usize> = (0..ng).map(|i| i % k).collect();
            colors.shuffle(&mut rng_from(derive_seed(seed, "good-colors")));
            for u in 0..ng {
                for v in u + 1..ng {
                    if colors[u] != colors[v] && pair_coin(seed, "good", u, v) < *q {
                        edges.push((u, v));
                    }
                }
            }
            colors
        }
        GoodGraph::StarForest { stars } => {
            if ng > 0 && (*stars == 0 || *stars > ng) {
                return Err(GenerateError::InvalidParam(format!(
                    "{stars} stars on {ng} good vertices"
                )));
            }
            for leaf in (*stars).min(ng)..ng {
                edges.push((leaf % stars, leaf));
            }
            (0..ng).map(|v| usize::from(v >= *stars)).collect()
        }
        GoodGraph::Custom {
            edges: es,
            coloring,
        } => {
            if coloring.len() != ng || coloring.iter().any(|&c| c >= k) {
                return Err(GenerateError::InvalidParam(format!(
                    "custom coloring must give each of the {ng} good vertices a color below {k}"
                )));
            }
            for &(u, v) in es {
                if u >= ng || v >= ng || u == v {
                    return Err(GenerateError::OutOfPlace(u, v));
                }
                if coloring[u] == coloring[v] {
                    return Err(GenerateError::ImproperGood(u, v));
                }
                edges.push((u, v));
            }
            coloring.clone()
        }
    };

    match &adv.bad {
        BadPolicy::Empty => {}
        BadPolicy::Gnp { q } => {
            check_prob("q", *q)?;
            for u in ng..n {
                for v in u + 1..n {
                    if pair_coin(seed, "bad", u, v) < *q {
                        edges.push((u, v));
                    }
                }
            }
        }
        BadPolicy::Clique => {
            for u in ng..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        BadPolicy::Custom { edges: es } => {
            for &(u, v) in es {
                if u < ng || v < ng || u >= n || v >= n || u == v {
                    return Err(GenerateError::OutOfPlace(u, v));
                }
                edges.push((u, v));
            }
        }
    }

    let mut random_cross = Vec::new();
    for u in 0..ng {
        for b in ng..n {
            if pair_coin(seed, "cross", u, b) < p {
                random_cross.push((u, b));
            }
        }
    }
    let mut extra_cross = Vec::new();
    match &adv.extra {
        CrossPolicy::None => {}
        CrossPolicy::Random { q } => {
            check_prob("q", *q)?;
            for u in 0..ng {
                for b in ng..n {
                    if pair_coin(seed, "extra", u, b) < *q
                        && random_cross.binary_search(&(u, b)).is_err()
                    {
                        extra_cross.push((u, b));
                    }
                }
            }
        }
        CrossPolicy::Custom { edges: es } => {
            for &(a, b) in es {
                let (u, b) = (a.min(b), a.max(b));
                if u >= ng || b < ng || b >= n {
                    return Err(GenerateError::OutOfPlace(a, b));
                }
                if random_cross.binary_search(&(u, b)).is_err() {
                    extra_cross.push((u, b));
                }
            }
            extra_cross.sort_unstable();
            extra_cross.dedup();
        }
    }
    edges.extend_from_slice(&random_cross);
    edges.extend_from_slice(&extra_cross);

    Ok(PlantedInstance {
        graph: Graph::from_edges(n, edges).expect("generated ids are in range"),
        good: (0..ng).collect(),
        bad: (ng..n).collect(),
        p,
        eps,
        k,
        planted_coloring: coloring.into_iter().enumerate().collect(),
        seed,
        adversary: adv.clone(),
        random_cross,
        extra_cross,
    })
}
