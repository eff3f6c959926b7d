use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A color assignment on some vertices together with the discarded set `S`.
///
/// Properness is not an invariant of the type; ask [`is_proper`](Self::is_proper).
/// JSON form: `{"colors": {"<vid>": <cid>, ...}, "discarded": [..], "num_colors": k}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct PartialColoring {
    colors: BTreeMap<usize, usize>,
    discarded: BTreeSet<usize>,
    num_colors: usize,
}

#[derive(Deserialize)]
struct RawColoring {
    colors: BTreeMap<usize, usize>,
    discarded: BTreeSet<usize>,
    num_colors: usize,
}

impl TryFrom<RawColoring> for PartialColoring {
    type Error = String;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        let pc = PartialColoring::new(raw.colors, raw.discarded);
        if pc.num_colors != raw.num_colors {
            return Err(format!(
                "num_colors is {} but {} distinct colors are used",
                raw.num_colors, pc.num_colors
            ));
        }
        Ok(pc)
    }
}

impl PartialColoring {
    pub fn new(colors: BTreeMap<usize, usize>, discarded: BTreeSet<usize>) -> Self {
        let num_colors = colors.values().collect::<BTreeSet<_>>().len();
        PartialColoring {
            colors,
            discarded,
            num_colors,
        }
    }

    /// From a per-vertex table where `None` marks a discarded vertex.
    pub fn from_dense(table: &[Option<usize>]) -> Self {
        let mut colors = BTreeMap::new();
        let mut discarded = BTreeSet::new();
        for (v, c) in table.iter().enumerate() {
            match c {
                Some(c) => {
                    colors.insert(v, *c);
                }
                None => {
                    discarded.insert(v);
                }
            }
        }
        Self::new(colors, discarded)
    }

    pub fn colors(&self) -> &BTreeMap<usize, usize> {
        &self.colors
    }

    pub fn discarded(&self) -> &BTreeSet<usize> {
        &self.discarded
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    /// Dense table indexed by vertex, after checking that colored and
    /// discarded vertices partition `0..n`.
    pub fn to_dense(&self, n: usize) -> Result<Vec<Option<usize>>, GraphError> {
        let mut table = vec![None; n];
        let mut covered = vec![false; n];
        for (&v, &c) in &self.colors {
            if v >= n {
                return Err(GraphError::ColoringDomain(format!(
                    "colored vertex {v} outside 0..{n}"
                )));
            }
            table[v] = Some(c);
            covered[v] = true;
        }
        for &v in &self.discarded {
            if v >= n {
                return Err(GraphError::ColoringDomain(format!(
                    "discarded vertex {v} outside 0..{n}"
                )));
            }
            if covered[v] {
                return Err(GraphError::ColoringDomain(format!(
                    "vertex {v} is both colored and discarded"
                )));
            }
            covered[v] = true;
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(GraphError::ColoringDomain(format!(
                "vertex {v} is neither colored nor discarded"
            )));
        }
        Ok(table)
    }

    /// True iff no edge joins two colored vertices of equal color. Edges
    /// touching discarded vertices are ignored.
    pub fn is_proper(&self, g: &Graph) -> Result<bool, GraphError> {
        let table = self.to_dense(g.n())?;
        Ok(g.edges().all(|(u, v)| match (table[u], table[v]) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        }))
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| match (self.color_of(u), self.color_of(v)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            })
    }
}
