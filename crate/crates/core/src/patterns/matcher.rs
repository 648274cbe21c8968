//! Backtracking search for pattern embeddings.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::{Pattern, PatternError};
use crate::budget::{Budget, Meter};
use crate::digraph::Digraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchMode {
    /// Arcs and non-arcs of the pattern are both preserved.
    Induced,
    /// Only arcs are preserved.
    Subgraph,
}

/// `map[p]` is the host vertex of pattern vertex `p`; injective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the arc conditions of `mode`.
    pub fn is_valid(&self, host: &Digraph, pattern: &Digraph, mode: MatchMode) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(host.n());
        if self.map.iter().any(|&h| seen.put(h)) {
            return false;
        }
        for u in pattern.vertices() {
            for v in pattern.vertices() {
                if u == v {
                    continue;
                }
                let want = pattern.has_arc(u, v);
                let got = host.has_arc(self.map[u], self.map[v]);
                match mode {
                    MatchMode::Induced if want != got => return false,
                    MatchMode::Subgraph if want && !got => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// The first pattern (by list position) that embeds induced, with its
/// embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub embedding: Embedding,
}

struct Search<'a> {
    host: &'a Digraph,
    pattern: &'a Digraph,
    mode: MatchMode,
    order: Vec<usize>,
    /// Host vertices whose degrees can accommodate each pattern vertex.
    fits: Vec<FixedBitSet>,
    map: Vec<usize>,
    used: FixedBitSet,
    meter: Meter,
}

impl Search<'_> {
    fn candidates(&self, p: usize) -> FixedBitSet {
        let mut cand = self.fits[p].clone();
        cand.difference_with(&self.used);
        for &q in &self.order {
            let h = self.map[q];
            if h == usize::MAX {
                break;
            }
            if self.pattern.has_arc(p, q) {
                cand.intersect_with(self.host.in_row(h));
            } else if self.pattern.has_arc(q, p) {
                cand.intersect_with(self.host.out_row(h));
            } else if self.mode == MatchMode::Induced {
                cand.difference_with(self.host.out_row(h));
                cand.difference_with(self.host.in_row(h));
            }
        }
        cand
    }

    fn extend(&mut self, depth: usize) -> Result<bool, PatternError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.meter.tick().map_err(|_| PatternError::BudgetExceeded {
            nodes: self.meter.nodes(),
        })?;
        let p = self.order[depth];
        for h in self.candidates(p).ones() {
            self.map[p] = h;
            self.used.insert(h);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used.set(h, false);
            self.map[p] = usize::MAX;
        }
        Ok(false)
    }
}

/// Root at the pattern vertex with the fewest host candidates, then grow by
/// most links into the placed set.
fn search_order(pattern: &Digraph, fits: &[FixedBitSet]) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links = order.iter().filter(|&&q| pattern.adjacent(p, q)).count();
                (
                    links,
                    std::cmp::Reverse(fits[p].count_ones(..)),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

fn find(
    host: &Digraph,
    pattern: &Digraph,
    mode: MatchMode,
    budget: &Budget,
) -> Result<Option<Embedding>, PatternError> {
    if pattern.n() > host.n() {
        return Ok(None);
    }
    let fits: Vec<FixedBitSet> = pattern
        .vertices()
        .map(|p| {
            let mut f = FixedBitSet::with_capacity(host.n());
            for h in host.vertices() {
                if host.out_degree(h) >= pattern.out_degree(p) && host.in_degree(h) >= pattern.in_degree(p) {
                    f.insert(h);
                }
            }
            f
        })
        .collect();
    let order = search_order(pattern, &fits);
    let mut s = Search {
        host,
        pattern,
        mode,
        order,
        fits,
        map: vec![usize::MAX; pattern.n()],
        used: FixedBitSet::with_capacity(host.n()),
        meter: Meter::new(budget),
    };
    Ok(s.extend(0)?.then_some(Embedding { map: s.map }))
}

/// An induced copy of `pattern` in `host`.
pub fn find_induced(
    host: &Digraph,
    pattern: impl AsRef<Digraph>,
    budget: &Budget,
) -> Result<Option<Embedding>, PatternError> {
    find(host, pattern.as_ref(), MatchMode::Induced, budget)
}

/// A (not necessarily induced) copy of `pattern` in `host`.
pub fn find_subgraph(
    host: &Digraph,
    pattern: impl AsRef<Digraph>,
    budget: &Budget,
) -> Result<Option<Embedding>, PatternError> {
    find(host, pattern.as_ref(), MatchMode::Subgraph, budget)
}

/// `host` has no induced copy of `pattern`.
pub fn is_free(host: &Digraph, pattern: impl AsRef<Digraph>, budget: &Budget) -> Result<bool, PatternError> {
    find_induced(host, pattern, budget).map(|e| e.is_none())
}

/// `None` when `host` is free of every pattern; otherwise the first hit.
pub fn first_violation(
    host: &Digraph,
    patterns: &[Pattern],
    budget: &Budget,
) -> Result<Option<Violation>, PatternError> {
    for (index, p) in patterns.iter().enumerate() {
        if let Some(embedding) = find_induced(host, p, budget)? {
            return Ok(Some(Violation { index, embedding }));
        }
    }
    Ok(None)
}
