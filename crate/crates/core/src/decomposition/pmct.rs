use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::DecompositionError;
use crate::digraph::{induced, maximum_cliques, scc_condensation, Digraph, VertexSet};

/// A path-minimizing closed tournament: a maximum tournament `K`, and, when
/// `K` is not strong, a path from a sink vertex of `K` to a source vertex of
/// `K`, chosen to minimize `|K ∪ V(P)|`. The path may run through the middle
/// components of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pmct {
    pub k: VertexSet,
    /// Empty when `K` is strong; otherwise `p1 … pm` with `p1` a sink vertex
    /// and `pm` a source vertex of `K`.
    pub path: Vec<usize>,
}

impl Pmct {
    pub fn vertices(&self) -> VertexSet {
        self.k.union(&self.path.iter().copied().collect())
    }

    /// `|V(C)|`.
    pub fn len(&self) -> usize {
        self.k.len() + self.path.iter().filter(|&&v| !self.k.contains(v)).count()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// Path vertices strictly between the two ends.
    pub fn interior(&self) -> &[usize] {
        if self.path.len() < 2 {
            &[]
        } else {
            &self.path[1..self.path.len() - 1]
        }
    }
}

/// Sink and source vertices of a tournament `k` (the last and first strong
/// components of its condensation).
pub(crate) fn sinks_and_sources(d: &Digraph, k: &VertexSet) -> (VertexSet, VertexSet) {
    let sub = induced(d, k);
    let cond = scc_condensation(&sub.graph);
    let last = cond.components.len() - 1;
    (sub.lift(&cond.components[last]), sub.lift(&cond.components[0]))
}

/// A sink-to-source path of `k` minimizing first the number of vertices
/// outside `k`, then the number of vertices. Interior vertices avoid the
/// ends of `k`; a shortest path never needs them.
fn closing_path(d: &Digraph, k: &VertexSet) -> Option<Vec<usize>> {
    let (sinks, sources) = sinks_and_sources(d, k);
    let ends = sinks.union(&sources);
    let mut cost = vec![(usize::MAX, usize::MAX); d.n()];
    let mut parent = vec![usize::MAX; d.n()];
    let mut heap = BinaryHeap::new();
    for s in sinks.iter() {
        cost[s] = (0, 1);
        parent[s] = s;
        heap.push(Reverse(((0, 1), s)));
    }
    let mut best: Option<((usize, usize), usize, usize)> = None;
    while let Some(Reverse((c, u))) = heap.pop() {
        if c > cost[u] || best.is_some_and(|(b, _, _)| c >= b) {
            continue;
        }
        for &w in d.out_adj(u) {
            let step = (c.0 + usize::from(!k.contains(w)), c.1 + 1);
            if sources.contains(w) {
                if best.is_none_or(|(b, _, _)| step < b) {
                    best = Some((step, u, w));
                }
            } else if !ends.contains(w) && step < cost[w] {
                cost[w] = step;
                parent[w] = u;
                heap.push(Reverse((step, w)));
            }
        }
    }
    let (_, mut x, end) = best?;
    let mut path = vec![end, x];
    while parent[x] != x {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    Some(path)
}

/// A PMCT of a strongly connected digraph. A strong maximum tournament is
/// preferred; otherwise `|V(C)|` is minimized. Ties go to the
/// lexicographically first tournament.
pub fn find_pmct(d: &Digraph) -> Result<Pmct, DecompositionError> {
    if d.n() == 0 || !scc_condensation(d).is_strongly_connected() {
        return Err(DecompositionError::NotStronglyConnected);
    }
    let cliques = maximum_cliques(d);
    if let Some(k) = cliques
        .iter()
        .find(|k| scc_condensation(&induced(d, k).graph).is_strongly_connected())
    {
        return Ok(Pmct {
            k: k.clone(),
            path: Vec::new(),
        });
    }
    let mut best: Option<Pmct> = None;
    for k in cliques {
        if let Some(path) = closing_path(d, &k) {
            let cand = Pmct { k, path };
            if best.as_ref().is_none_or(|b| cand.len() < b.len()) {
                best = Some(cand);
            }
        }
    }
    Ok(best.expect("a strong digraph closes every tournament"))
}

/// `X`: vertices outside `C` with an in- and an out-neighbour in `C`;
/// `Z = N(C) ∖ X`; `Y = N(X) ∖ N[C]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourhoodSplit {
    pub x: VertexSet,
    pub z: VertexSet,
    pub y: VertexSet,
}

pub fn broom_neighborhood_split(d: &Digraph, c: &Pmct) -> NeighbourhoodSplit {
    let cv = c.vertices();
    let nc = d.neighbors(&cv);
    let x: VertexSet = nc
        .iter()
        .filter(|&v| {
            let one = VertexSet::singleton(v);
            !d.in_neighbors(&one).is_disjoint(&cv) && !d.out_neighbors(&one).is_disjoint(&cv)
        })
        .collect();
    let z = nc.difference(&x);
    let y = d.neighbors(&x).difference(&nc.union(&cv));
    NeighbourhoodSplit { x, z, y }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{cyclic_triangle, triangle_join};

    fn arcs(n: usize, a: &[(usize, usize)]) -> Digraph {
        Digraph::from_edge_list(n, a).unwrap()
    }

    #[test]
    fn strong_tournament_is_its_own_pmct() {
        let p = find_pmct(&cyclic_triangle()).unwrap();
        assert_eq!(p.k, VertexSet::from(vec![0, 1, 2]));
        assert!(p.path.is_empty());
    }

    #[test]
    fn transitive_triangle_closed_by_a_path() {
        // a=0, b=1, c=2, d=3, e=4
        let d = arcs(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 0)]);
        let p = find_pmct(&d).unwrap();
        assert_eq!(p.k, VertexSet::from(vec![0, 1, 2]));
        assert_eq!(p.path, vec![2, 3, 4, 0]);
        assert_eq!(p.vertices().len(), 5);
    }

    #[test]
    fn delta_prefers_a_strong_tournament() {
        let t = triangle_join(
            &Digraph::empty(1),
            &Digraph::empty(1),
            &crate::digraph::transitive_tournament(2),
        );
        let p = find_pmct(&t).unwrap();
        assert!(p.path.is_empty());
        assert!(scc_condensation(&induced(&t, &p.k).graph).is_strongly_connected());
        assert_eq!(p.k.len(), 4);
    }

    #[test]
    fn not_strong_is_rejected() {
        assert_eq!(
            find_pmct(&crate::digraph::transitive_tournament(3)),
            Err(DecompositionError::NotStronglyConnected)
        );
    }

    #[test]
    fn split_definitions() {
        let c = Pmct {
            k: vec![0, 1, 2].into(),
            path: vec![],
        };
        assert_eq!(
            broom_neighborhood_split(&cyclic_triangle(), &c),
            NeighbourhoodSplit::default()
        );
        let d = arcs(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]);
        let s = broom_neighborhood_split(&d, &c);
        assert_eq!(s.x, VertexSet::from(vec![3]));
        let d = arcs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        let s = broom_neighborhood_split(&d, &c);
        assert_eq!((s.x.len(), s.z, s.y.len()), (0, VertexSet::from(vec![3]), 0));
        let d = arcs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (4, 3)]);
        let s = broom_neighborhood_split(&d, &c);
        assert_eq!(s.y, VertexSet::from(vec![4]));
    }
}
