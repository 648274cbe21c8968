//! Simple finite digraphs on dense vertex ids.
//!
//! A [`Digraph`] has at most one arc per unordered pair and no loops. Rows are
//! kept as bitsets in both directions so neighbourhood intersections are word
//! operations; sorted adjacency lists are kept alongside for iteration.

mod clique;
pub mod io;
mod ops;
mod scc;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use clique::{maximum_clique, maximum_cliques, underlying_clique_number, CliqueRows};
pub use ops::{copies, disjoint_union, induced, join_forward, reverse, triangle_join, Induced};
pub use scc::{find_cycle, is_acyclic, scc_condensation, topological_order, Condensation};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("arc ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("arc ({u}, {v}) conflicts with the opposite arc ({v}, {u})")]
    DuplicateOppositeArc { u: usize, v: usize },
    #[error("vertex {v} is not in a digraph on {n} vertices")]
    VertexNotInGraph { v: usize, n: usize },
}

/// An ordered set of vertex ids: sorted, without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        Self(bits.ones().collect())
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Fails if any id is not a vertex of `d`.
    pub fn check_in(&self, d: &Digraph) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= d.n() => Err(GraphError::VertexNotInGraph { v, n: d.n() }),
            _ => Ok(()),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple digraph on vertices `0..n`.
///
/// Immutable once built. Every constructor enforces that no pair carries arcs
/// in both directions.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arcs: usize,
}

impl Digraph {
    /// `n` isolated vertices (`nK1`).
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            out: vec![FixedBitSet::with_capacity(n); n],
            inn: vec![FixedBitSet::with_capacity(n); n],
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arcs: 0,
        }
    }

    /// Builds a digraph from an arc list. Repeating an arc in the same
    /// direction is harmless; listing a pair in both directions is an error.
    pub fn from_edge_list(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_arcs(n, arcs.iter().copied())
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = Builder::new(n);
        for (u, v) in arcs {
            b.add_arc(u, v)?;
        }
        Ok(b.finish())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v) || self.inn[u].contains(v)
    }

    #[inline]
    pub fn out_row(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    #[inline]
    pub fn in_row(&self, v: usize) -> &FixedBitSet {
        &self.inn[v]
    }

    /// Underlying-graph neighbourhood of `v` as a bitset.
    pub fn neighbor_row(&self, v: usize) -> FixedBitSet {
        let mut row = self.out[v].clone();
        row.union_with(&self.inn[v]);
        row
    }

    pub fn out_adj(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_adj(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_adj[u].iter().map(move |&v| (u, v)))
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_tournament(&self) -> bool {
        self.arcs == self.n * self.n.saturating_sub(1) / 2
    }

    /// Every pair of distinct vertices of `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }

    /// `N⁺(S)`: vertices outside `S` seen by some member of `S`.
    pub fn out_neighbors(&self, s: &VertexSet) -> VertexSet {
        self.union_rows(s, &self.out)
    }

    /// `N⁻(S)`: vertices outside `S` that see some member of `S`.
    pub fn in_neighbors(&self, s: &VertexSet) -> VertexSet {
        self.union_rows(s, &self.inn)
    }

    /// `N(S) = N⁺(S) ∪ N⁻(S)`.
    pub fn neighbors(&self, s: &VertexSet) -> VertexSet {
        self.out_neighbors(s).union(&self.in_neighbors(s))
    }

    /// `N[S] = S ∪ N(S)`.
    pub fn closed_neighbors(&self, s: &VertexSet) -> VertexSet {
        s.union(&self.neighbors(s))
    }

    /// `N⁰(S)`: vertices outside `S` adjacent to no member of `S`
    /// (the intersection of the individual non-neighbourhoods).
    pub fn non_neighbors(&self, s: &VertexSet) -> VertexSet {
        let mut acc = FixedBitSet::with_capacity(self.n);
        acc.insert_range(..);
        for v in s {
            acc.difference_with(&self.out[v]);
            acc.difference_with(&self.inn[v]);
        }
        for v in s {
            acc.set(v, false);
        }
        VertexSet::from_bits(&acc)
    }

    fn union_rows(&self, s: &VertexSet, rows: &[FixedBitSet]) -> VertexSet {
        let mut acc = FixedBitSet::with_capacity(self.n);
        for v in s {
            acc.union_with(&rows[v]);
        }
        for v in s {
            acc.set(v, false);
        }
        VertexSet::from_bits(&acc)
    }
}

impl AsRef<Digraph> for Digraph {
    fn as_ref(&self) -> &Digraph {
        self
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental construction with the simplicity checks applied per arc.
pub(crate) struct Builder {
    g: Digraph,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        Self { g: Digraph::empty(n) }
    }

    pub(crate) fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.g.n;
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { u, v });
        }
        if self.g.out[v].contains(u) {
            return Err(GraphError::DuplicateOppositeArc { u, v });
        }
        if !self.g.out[u].put(v) {
            self.g.inn[v].insert(u);
            self.g.arcs += 1;
        }
        Ok(())
    }

    pub(crate) fn finish(mut self) -> Digraph {
        let g = &mut self.g;
        for v in 0..g.n {
            g.out_adj[v] = g.out[v].ones().collect();
            g.in_adj[v] = g.inn[v].ones().collect();
        }
        self.g
    }
}

/// The transitive tournament `TT_k` with arcs `i → j` for `i < j`.
pub fn transitive_tournament(k: usize) -> Digraph {
    Digraph::from_arcs(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
        .expect("transitive tournament is simple")
}

/// The directed path `0 → 1 → … → m-1`.
pub fn directed_path(m: usize) -> Digraph {
    Digraph::from_arcs(m, (1..m).map(|i| (i - 1, i))).expect("path is simple")
}

/// The directed cycle on `m ≥ 3` vertices.
pub fn directed_cycle(m: usize) -> Digraph {
    assert!(m >= 3, "a simple directed cycle needs at least 3 vertices");
    Digraph::from_arcs(m, (0..m).map(|i| (i, (i + 1) % m))).expect("cycle is simple")
}

/// `Δ(1,1,1)`: `0 → 1 → 2 → 0`.
pub fn cyclic_triangle() -> Digraph {
    directed_cycle(3)
}
