//! Vertices around a path `v1 … vm`, split by where they first and last
//! touch it. Indices are 0-based positions on the path.

use serde::{Deserialize, Serialize};

use super::DecompositionError;
use crate::digraph::{Digraph, VertexSet};

/// `A⁻`/`A⁺`: first path neighbour is an in-/out-neighbour.
/// `B⁻`/`B⁺`: last path neighbour is an in-/out-neighbour.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstLast {
    pub a_minus: VertexSet,
    pub a_plus: VertexSet,
    pub b_minus: VertexSet,
    pub b_plus: VertexSet,
}

/// Splits `N(path) ∖ excluded`.
pub fn partition_first_last(d: &Digraph, path: &[usize], excluded: &VertexSet) -> FirstLast {
    let on_path: VertexSet = path.iter().copied().collect();
    let around = d.neighbors(&on_path).difference(excluded);
    let (mut am, mut ap, mut bm, mut bp) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for v in around.iter() {
        let touching: Vec<usize> = path.iter().copied().filter(|&p| d.adjacent(p, v)).collect();
        let (first, last) = (touching[0], touching[touching.len() - 1]);
        if d.has_arc(first, v) {
            am.push(v)
        } else {
            ap.push(v)
        }
        if d.has_arc(last, v) {
            bm.push(v)
        } else {
            bp.push(v)
        }
    }
    FirstLast {
        a_minus: am.into(),
        a_plus: ap.into(),
        b_minus: bm.into(),
        b_plus: bp.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerMode {
    /// Smallest `i` with `vi → v`.
    FirstIn,
    /// Smallest `i` with `v → vi`.
    FirstOut,
}

/// `layers[i]`: vertices of `c` whose first neighbour of the given kind is
/// `path[i]`.
pub fn layer_decomposition(
    d: &Digraph,
    path: &[usize],
    c: &VertexSet,
    mode: LayerMode,
) -> Result<Vec<VertexSet>, DecompositionError> {
    let mut layers = vec![Vec::new(); path.len()];
    for v in c.iter() {
        let i = path
            .iter()
            .position(|&p| match mode {
                LayerMode::FirstIn => d.has_arc(p, v),
                LayerMode::FirstOut => d.has_arc(v, p),
            })
            .ok_or(DecompositionError::UncoveredVertex(v))?;
        layers[i].push(v);
    }
    Ok(layers.into_iter().map(VertexSet::from).collect())
}

/// `classes[j]`: the union of the layers with index `≡ j (mod modulus)`.
pub fn residue_classes(layers: &[VertexSet], modulus: usize) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::new(); modulus];
    for (i, l) in layers.iter().enumerate() {
        classes[i % modulus] = classes[i % modulus].union(l);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_and_last() {
        // path 0 → 1 → 2 → 3 → 4; vertex 5 seen by v2 only; vertex 6 sees
        // v1 and is seen by v5.
        let d = Digraph::from_edge_list(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (6, 0), (4, 6)]).unwrap();
        let path = [0, 1, 2, 3, 4];
        let s = partition_first_last(&d, &path, &VertexSet::new());
        assert!(s.a_minus.contains(5) && s.b_minus.contains(5));
        assert!(s.a_plus.contains(6) && s.b_minus.contains(6));
        assert!(!s.a_minus.union(&s.a_plus).contains(7));
        let s = partition_first_last(&d, &path, &VertexSet::singleton(5));
        assert!(!s.a_minus.contains(5));
    }

    #[test]
    fn layers_and_residues() {
        let d = Digraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (2, 4), (1, 4)]).unwrap();
        let layers = layer_decomposition(&d, &[0, 1, 2], &VertexSet::singleton(4), LayerMode::FirstIn).unwrap();
        assert_eq!(layers[1], VertexSet::singleton(4));
        assert!(
            layer_decomposition(&d, &[0, 1, 2], &VertexSet::new(), LayerMode::FirstIn)
                .unwrap()
                .iter()
                .all(VertexSet::is_empty)
        );
        assert_eq!(
            layer_decomposition(&d, &[0, 1, 2], &VertexSet::singleton(4), LayerMode::FirstOut),
            Err(DecompositionError::UncoveredVertex(4))
        );
        let layers: Vec<VertexSet> = (0..11).map(VertexSet::singleton).collect();
        let c = residue_classes(&layers, 5);
        assert_eq!(c[0], VertexSet::from(vec![0, 5, 10]));
        let c = residue_classes(&layers[..6], 3);
        assert_eq!(c[0], VertexSet::from(vec![0, 3]));
        assert!(residue_classes(&[], 3).iter().all(VertexSet::is_empty));
    }
}
