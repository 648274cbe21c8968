//! Exact colouring numbers and dicolouring checks.

mod chromatic;
mod dichromatic;
mod paths;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{find_cycle, induced, Digraph, VertexSet};

pub use chromatic::{chromatic_number_undirected, independence_number, maximum_stable_set};
pub use dichromatic::{
    dichromatic_at_most, dichromatic_number, dichromatic_number_of_subset, greedy_dicoloring, is_k_colocal, is_k_local,
    ExactDicoloring, MAX_COMPONENT,
};
pub use paths::{gallai_roy_bound, longest_path_vertices};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    /// The search ran out of budget. The true value lies in `lower..=upper`.
    #[error("search budget exceeded after {nodes} nodes; value in [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize, nodes: u64 },
    #[error("colouring has {got} entries for a digraph on {n} vertices")]
    PartialColoring { got: usize, n: usize },
    #[error("strong component of {size} vertices exceeds the exact-search limit of {max}")]
    ComponentTooLarge { size: usize, max: usize },
}

/// A vertex colouring. `k` is an upper bound on the colours used: every entry
/// of `colors` is below `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dicoloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Dicoloring {
    /// Wraps a colour vector with `k` = largest colour + 1.
    pub fn new(colors: Vec<usize>) -> Self {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Self { colors, k }
    }

    /// Number of distinct colours actually present.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colors {
            if c < self.k {
                seen[c] = true;
            }
        }
        seen.into_iter().filter(|&b| b).count()
    }

    /// Colour classes, indexed by colour.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes.into_iter().map(VertexSet::from).collect()
    }

    /// Renumbers colours to `0..used` in order of first appearance.
    pub fn compacted(&self) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Self { colors, k: map.len() }
    }
}

/// `true` iff every colour class induces an acyclic subdigraph and every
/// colour is below `f.k`.
pub fn verify_dicoloring(d: &Digraph, f: &Dicoloring) -> Result<bool, SolverError> {
    Ok(monochromatic_cycle(d, f)?.is_none() && f.colors.iter().all(|&c| c < f.k))
}

/// A directed cycle inside one colour class, if there is one.
pub fn monochromatic_cycle(d: &Digraph, f: &Dicoloring) -> Result<Option<Vec<usize>>, SolverError> {
    if f.colors.len() != d.n() {
        return Err(SolverError::PartialColoring {
            got: f.colors.len(),
            n: d.n(),
        });
    }
    let mut by_colour: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (v, &c) in f.colors.iter().enumerate() {
        by_colour.entry(c).or_default().push(v);
    }
    for class in by_colour.into_values() {
        let sub = induced(d, &class.into());
        if let Some(cycle) = find_cycle(&sub.graph) {
            return Ok(Some(cycle.into_iter().map(|v| sub.map[v]).collect()));
        }
    }
    Ok(None)
}
