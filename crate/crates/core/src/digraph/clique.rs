//! Maximum cliques of the underlying undirected graph.
//!
//! Branch and bound with a greedy-colouring bound over bitset rows. The same
//! kernel runs on complement rows to get stable sets.

use fixedbitset::FixedBitSet;

use super::{Digraph, VertexSet};
use crate::budget::{Budget, Exhausted, Meter};

/// Symmetric adjacency rows for the clique kernel.
#[derive(Clone, Debug)]
pub struct CliqueRows {
    rows: Vec<FixedBitSet>,
}

impl CliqueRows {
    /// Rows of the underlying undirected graph of `d`.
    pub fn underlying(d: &Digraph) -> Self {
        Self {
            rows: d.vertices().map(|v| d.neighbor_row(v)).collect(),
        }
    }

    /// Rows of the complement of the underlying graph (cliques here are
    /// stable sets of `d`).
    pub fn complement(d: &Digraph) -> Self {
        let n = d.n();
        let rows = d
            .vertices()
            .map(|v| {
                let mut r = d.neighbor_row(v);
                r.toggle_range(..);
                r.set(v, false);
                debug_assert_eq!(r.len(), n);
                r
            })
            .collect();
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// A maximum clique; among several, the first one found in the
    /// deterministic search order.
    pub fn max_clique(&self, meter: &mut Meter) -> Result<VertexSet, Exhausted> {
        let mut p = FixedBitSet::with_capacity(self.n());
        p.insert_range(..);
        let mut best = Vec::new();
        let mut r = Vec::new();
        self.expand(&mut r, p, &mut best, meter)?;
        Ok(best.into())
    }

    fn expand(
        &self,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        best: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Result<(), Exhausted> {
        meter.tick()?;
        if p.is_clear() {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return Ok(());
        }
        let (order, bounds) = self.colour_bound(&p);
        for idx in (0..order.len()).rev() {
            if r.len() + bounds[idx] <= best.len() {
                return Ok(());
            }
            let v = order[idx];
            let mut next = p.clone();
            next.intersect_with(&self.rows[v]);
            r.push(v);
            self.expand(r, next, best, meter)?;
            r.pop();
            p.set(v, false);
        }
        Ok(())
    }

    /// Greedy colouring of `p`; vertices listed by non-decreasing colour with
    /// the colour index (1-based) as a bound on any clique among the prefix.
    fn colour_bound(&self, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.clone();
        let mut order = Vec::with_capacity(p.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                q.difference_with(&self.rows[v]);
                uncoloured.set(v, false);
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }

    /// Every clique of size exactly `size`, in lexicographic order.
    pub fn cliques_of_size(&self, size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut p = FixedBitSet::with_capacity(self.n());
        p.insert_range(..);
        let mut r = Vec::new();
        self.enumerate(&mut r, p, size, &mut out);
        out
    }

    fn enumerate(&self, r: &mut Vec<usize>, p: FixedBitSet, size: usize, out: &mut Vec<VertexSet>) {
        if r.len() == size {
            out.push(r.clone().into());
            return;
        }
        if r.len() + p.count_ones(..) < size {
            return;
        }
        let cands: Vec<usize> = p.ones().collect();
        for (i, &v) in cands.iter().enumerate() {
            if r.len() + cands.len() - i < size {
                break;
            }
            let mut next = p.clone();
            next.intersect_with(&self.rows[v]);
            next.set_range(..v + 1, false);
            r.push(v);
            self.enumerate(r, next, size, out);
            r.pop();
        }
    }
}

/// A maximum clique of the underlying graph of `d`.
pub fn maximum_clique(d: &Digraph) -> VertexSet {
    CliqueRows::underlying(d)
        .max_clique(&mut Meter::new(&Budget::unlimited()))
        .expect("unlimited budget")
}

/// `ω(D)`: clique number of the underlying undirected graph.
pub fn underlying_clique_number(d: &Digraph) -> usize {
    maximum_clique(d).len()
}

/// All cliques of size `ω(D)` in the underlying graph.
pub fn maximum_cliques(d: &Digraph) -> Vec<VertexSet> {
    let rows = CliqueRows::underlying(d);
    let omega = underlying_clique_number(d);
    rows.cliques_of_size(omega)
}
