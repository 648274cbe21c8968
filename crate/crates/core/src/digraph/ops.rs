//! Induced subgraphs and the union/join algebra used to assemble patterns.

use super::{Builder, Digraph, VertexSet};

/// An induced subdigraph together with the map back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Digraph,
    /// `map[i]` is the host vertex of local vertex `i`; strictly increasing.
    pub map: Vec<usize>,
}

impl Induced {
    pub fn host_of(&self, local: usize) -> usize {
        self.map[local]
    }

    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|v| self.map[v]).collect()
    }

    /// Local id of a host vertex, if it belongs to the subgraph.
    pub fn local_of(&self, host: usize) -> Option<usize> {
        self.map.binary_search(&host).ok()
    }
}

/// `D[S]`. Local vertex `i` is the `i`-th smallest member of `S`.
pub fn induced(d: &Digraph, s: &VertexSet) -> Induced {
    let map: Vec<usize> = s.iter().collect();
    let mut local = vec![usize::MAX; d.n()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let mut b = Builder::new(map.len());
    for (i, &u) in map.iter().enumerate() {
        for &v in d.out_adj(u) {
            if local[v] != usize::MAX {
                b.add_arc(i, local[v]).expect("induced subgraph of a simple digraph");
            }
        }
    }
    Induced { graph: b.finish(), map }
}

/// `D1 + D2`; the vertices of `D2` are shifted by `|D1|`.
pub fn disjoint_union(d1: &Digraph, d2: &Digraph) -> Digraph {
    let off = d1.n();
    Digraph::from_arcs(
        off + d2.n(),
        d1.arcs().chain(d2.arcs().map(|(u, v)| (u + off, v + off))),
    )
    .expect("disjoint union of simple digraphs")
}

/// `rD`: `r` disjoint copies of `D`.
pub fn copies(r: usize, d: &Digraph) -> Digraph {
    let n = d.n();
    Digraph::from_arcs(
        r * n,
        (0..r).flat_map(|c| d.arcs().map(move |(u, v)| (u + c * n, v + c * n))),
    )
    .expect("copies of a simple digraph")
}

/// `D1 ⇒ D2`: the disjoint union plus every arc from the first part to the second.
pub fn join_forward(d1: &Digraph, d2: &Digraph) -> Digraph {
    let off = d1.n();
    let cross = (0..d1.n()).flat_map(|a| (0..d2.n()).map(move |b| (a, b + off)));
    Digraph::from_arcs(
        off + d2.n(),
        d1.arcs().chain(d2.arcs().map(|(u, v)| (u + off, v + off))).chain(cross),
    )
    .expect("forward join of simple digraphs")
}

/// `Δ(D1, D2, D3)`: complete one-way joins `D1 → D2 → D3 → D1`.
pub fn triangle_join(d1: &Digraph, d2: &Digraph, d3: &Digraph) -> Digraph {
    let parts = [d1, d2, d3];
    let mut offsets = [0usize; 3];
    for i in 1..3 {
        offsets[i] = offsets[i - 1] + parts[i - 1].n();
    }
    let n = offsets[2] + d3.n();
    let mut b = Builder::new(n);
    for (i, p) in parts.iter().enumerate() {
        for (u, v) in p.arcs() {
            b.add_arc(u + offsets[i], v + offsets[i]).expect("part is simple");
        }
    }
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        for a in 0..parts[i].n() {
            for c in 0..parts[j].n() {
                b.add_arc(a + offsets[i], c + offsets[j]).expect("parts are disjoint");
            }
        }
    }
    b.finish()
}

/// Every arc flipped.
pub fn reverse(d: &Digraph) -> Digraph {
    Digraph::from_arcs(d.n(), d.arcs().map(|(u, v)| (v, u))).expect("reversal of a simple digraph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{cyclic_triangle, directed_path, scc_condensation, transitive_tournament};

    #[test]
    fn induced_pair_of_triangle() {
        let d = cyclic_triangle();
        let ind = induced(&d, &vec![0, 1].into());
        assert_eq!(ind.graph.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(ind.map, vec![0, 1]);
    }

    #[test]
    fn induced_whole_is_identity() {
        let d = transitive_tournament(4);
        let ind = induced(&d, &d.all());
        assert_eq!(ind.graph, d);
        assert_eq!(ind.map, vec![0, 1, 2, 3]);
        assert_eq!(ind.local_of(2), Some(2));
    }

    #[test]
    fn unions_and_copies() {
        assert_eq!(copies(2, &Digraph::empty(1)), Digraph::empty(2));
        let u = disjoint_union(&Digraph::empty(1), &directed_path(3));
        assert_eq!(u.n(), 4);
        assert_eq!(u.arcs().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        let c = copies(3, &cyclic_triangle());
        assert_eq!((c.n(), c.arc_count()), (9, 9));
    }

    #[test]
    fn forward_joins() {
        let single = Digraph::empty(1);
        assert_eq!(join_forward(&single, &single), directed_path(2));
        assert_eq!(
            join_forward(&transitive_tournament(2), &single),
            transitive_tournament(3)
        );
        let hero = join_forward(&cyclic_triangle(), &transitive_tournament(2));
        assert_eq!((hero.n(), hero.arc_count()), (5, 10));
    }

    #[test]
    fn triangle_joins() {
        let k1 = Digraph::empty(1);
        assert_eq!(triangle_join(&k1, &k1, &k1), cyclic_triangle());
        let d = triangle_join(&k1, &k1, &transitive_tournament(2));
        assert_eq!(d.n(), 4);
        assert_eq!(scc_condensation(&d).components.len(), 1);
        let d = triangle_join(&k1, &transitive_tournament(3), &k1);
        assert_eq!((d.n(), d.arc_count()), (5, 10));
        assert!(d.is_tournament());
    }

    #[test]
    fn reverse_is_involution() {
        let d = join_forward(&cyclic_triangle(), &directed_path(3));
        assert_eq!(reverse(&reverse(&d)), d);
        let star = Digraph::from_edge_list(3, &[(1, 0), (2, 0)]).unwrap();
        assert_eq!(reverse(&star).arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }
}
