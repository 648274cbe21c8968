use super::DecompositionError;
use crate::digraph::{induced, is_acyclic, Digraph, VertexSet};

fn dominates(d: &Digraph, b: &VertexSet, s: &VertexSet) -> bool {
    s.difference(b)
        .iter()
        .all(|v| !d.in_neighbors(&VertexSet::singleton(v)).is_disjoint(b))
}

/// An inclusion-minimal `B ⊆ S` such that every vertex of `S ∖ B` is seen
/// by some vertex of `B`. Vertices are dropped in order while possible.
pub fn minimal_dominating_set(d: &Digraph, s: &VertexSet) -> VertexSet {
    let mut b = s.clone();
    for v in s.iter() {
        let without = b.difference(&VertexSet::singleton(v));
        if dominates(d, &without, s) {
            b = without;
        }
    }
    b
}

/// Vertices of `S` with no in-neighbour in `S`.
pub fn source_layer(d: &Digraph, s: &VertexSet) -> Result<VertexSet, DecompositionError> {
    if !is_acyclic(&induced(d, s).graph) {
        return Err(DecompositionError::NotAcyclic);
    }
    Ok(s.iter()
        .filter(|&v| d.in_neighbors(&VertexSet::singleton(v)).is_disjoint(s))
        .collect())
}
