//! Exact dichromatic number.
//!
//! Strong components are solved separately, since every directed cycle lives
//! inside one. Within a component the search deepens on `k` and assigns
//! vertices in a degeneracy order; a vertex may join a class only if no path
//! inside the class runs from one of its out-neighbours back to one of its
//! in-neighbours. Classes are `u128` masks, which caps a component at 128
//! vertices.

use super::{Dicoloring, SolverError};
use crate::budget::{Budget, Exhausted, Meter};
use crate::digraph::{induced, scc_condensation, Digraph, VertexSet};

/// Largest strong component the exact search accepts.
pub const MAX_COMPONENT: usize = 128;

/// An optimal dicolouring together with the search effort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDicoloring {
    pub chi: usize,
    pub coloring: Dicoloring,
    pub nodes: u64,
}

struct Kernel {
    /// Host vertex at each search position.
    order: Vec<usize>,
    out: Vec<u128>,
    inn: Vec<u128>,
}

impl Kernel {
    fn new(d: &Digraph) -> Result<Self, SolverError> {
        if d.n() > MAX_COMPONENT {
            return Err(SolverError::ComponentTooLarge {
                size: d.n(),
                max: MAX_COMPONENT,
            });
        }
        let order = degeneracy_order(d);
        let mut pos = vec![0; d.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u128; d.n()];
        let mut inn = vec![0u128; d.n()];
        for (u, v) in d.arcs() {
            out[pos[u]] |= 1 << pos[v];
            inn[pos[v]] |= 1 << pos[u];
        }
        Ok(Self { order, out, inn })
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    /// Would adding position `v` to `class` close a directed cycle?
    #[inline]
    fn closes_cycle(&self, v: usize, class: u128) -> bool {
        let target = self.inn[v] & class;
        if target == 0 {
            return false;
        }
        let mut frontier = self.out[v] & class;
        let mut seen = frontier;
        while frontier != 0 {
            if frontier & target != 0 {
                return true;
            }
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                next |= self.out[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= class & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }

    /// First-fit in search order.
    fn greedy(&self) -> Vec<usize> {
        let mut classes: Vec<u128> = Vec::new();
        let mut colors = vec![0; self.n()];
        for (v, color) in colors.iter_mut().enumerate() {
            let c = (0..classes.len())
                .find(|&c| !self.closes_cycle(v, classes[c]))
                .unwrap_or_else(|| {
                    classes.push(0);
                    classes.len() - 1
                });
            classes[c] |= 1 << v;
            *color = c;
        }
        colors
    }

    fn colour_with(&self, k: usize, meter: &mut Meter) -> Result<Option<Vec<usize>>, Exhausted> {
        let mut classes = vec![0u128; k];
        let mut colors = vec![0; self.n()];
        if self.search(0, 0, k, &mut classes, &mut colors, meter)? {
            Ok(Some(colors))
        } else {
            Ok(None)
        }
    }

    fn search(
        &self,
        v: usize,
        used: usize,
        k: usize,
        classes: &mut [u128],
        colors: &mut [usize],
        meter: &mut Meter,
    ) -> Result<bool, Exhausted> {
        if v == self.n() {
            return Ok(true);
        }
        meter.tick()?;
        // Colours above `used` are interchangeable, so only the first is tried.
        for c in 0..(used + 1).min(k) {
            if self.closes_cycle(v, classes[c]) {
                continue;
            }
            classes[c] |= 1 << v;
            colors[v] = c;
            if self.search(v + 1, used.max(c + 1), k, classes, colors, meter)? {
                return Ok(true);
            }
            classes[c] &= !(1 << v);
        }
        Ok(false)
    }

    /// Colours indexed by host-local vertex.
    fn unpermute(&self, by_pos: &[usize]) -> Vec<usize> {
        let mut colors = vec![0; self.n()];
        for (p, &v) in self.order.iter().enumerate() {
            colors[v] = by_pos[p];
        }
        colors
    }
}

/// Smallest-last order of the underlying graph, reversed so dense cores are
/// coloured first.
fn degeneracy_order(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let mut deg: Vec<usize> = d.vertices().map(|v| d.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex left");
        removed[v] = true;
        seq.push(v);
        for w in d.out_adj(v).iter().chain(d.in_adj(v)) {
            if !removed[*w] {
                deg[*w] -= 1;
            }
        }
    }
    seq.reverse();
    seq
}

fn components(d: &Digraph) -> Vec<VertexSet> {
    scc_condensation(d).components
}

/// First-fit dicolouring; each strong component is coloured from colour 0.
pub fn greedy_dicoloring(d: &Digraph) -> Result<Dicoloring, SolverError> {
    let mut colors = vec![0; d.n()];
    for comp in components(d) {
        if comp.len() == 1 {
            continue;
        }
        let sub = induced(d, &comp);
        let kernel = Kernel::new(&sub.graph)?;
        let local = kernel.unpermute(&kernel.greedy());
        for (i, c) in local.into_iter().enumerate() {
            colors[sub.map[i]] = c;
        }
    }
    Ok(Dicoloring::new(colors))
}

/// `χ⃗(D)` with an optimal witness. Deterministic for a fixed input.
pub fn dichromatic_number(d: &Digraph, budget: &Budget) -> Result<ExactDicoloring, SolverError> {
    let mut meter = Meter::new(budget);
    let mut colors = vec![0; d.n()];
    let mut chi = usize::from(d.n() > 0);
    let mut lower = chi;
    let mut upper = chi;
    let mut exhausted = false;

    for comp in components(d) {
        if comp.len() == 1 {
            continue;
        }
        let sub = induced(d, &comp);
        let kernel = Kernel::new(&sub.graph)?;
        let greedy = kernel.greedy();
        let greedy_k = greedy.iter().max().map_or(0, |&c| c + 1);
        // A nontrivial strong component contains a cycle.
        let mut k = 2;
        let mut best = greedy;
        let mut best_k = greedy_k;
        if !exhausted {
            while k < best_k {
                match kernel.colour_with(k, &mut meter) {
                    Ok(Some(c)) => {
                        best = c;
                        best_k = k;
                    }
                    Ok(None) => k += 1,
                    Err(Exhausted) => {
                        exhausted = true;
                        break;
                    }
                }
            }
        }
        if exhausted {
            lower = lower.max(k.min(best_k));
            upper = upper.max(best_k);
            continue;
        }
        let local = kernel.unpermute(&best);
        for (i, c) in local.into_iter().enumerate() {
            colors[sub.map[i]] = c;
        }
        chi = chi.max(best_k);
        lower = lower.max(best_k);
        upper = upper.max(best_k);
    }

    if exhausted {
        return Err(SolverError::BudgetExceeded {
            lower,
            upper,
            nodes: meter.nodes(),
        });
    }
    Ok(ExactDicoloring {
        chi,
        coloring: Dicoloring { colors, k: chi },
        nodes: meter.nodes(),
    })
}

/// `χ⃗(D[S])`.
pub fn dichromatic_number_of_subset(d: &Digraph, s: &VertexSet, budget: &Budget) -> Result<usize, SolverError> {
    if s.is_empty() {
        return Ok(0);
    }
    dichromatic_number(&induced(d, s).graph, budget).map(|r| r.chi)
}

/// A dicolouring with at most `k` colours, or `None` if there is none.
pub fn dichromatic_at_most(d: &Digraph, k: usize, budget: &Budget) -> Result<Option<Dicoloring>, SolverError> {
    if d.n() == 0 {
        return Ok(Some(Dicoloring { colors: Vec::new(), k }));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut meter = Meter::new(budget);
    let mut colors = vec![0; d.n()];
    for comp in components(d) {
        if comp.len() == 1 {
            continue;
        }
        if k == 1 {
            return Ok(None);
        }
        let sub = induced(d, &comp);
        let kernel = Kernel::new(&sub.graph)?;
        let greedy = kernel.greedy();
        let by_pos = if greedy.iter().all(|&c| c < k) {
            greedy
        } else {
            match kernel.colour_with(k, &mut meter) {
                Ok(Some(c)) => c,
                Ok(None) => return Ok(None),
                Err(Exhausted) => {
                    return Err(SolverError::BudgetExceeded {
                        lower: 2,
                        upper: greedy.iter().max().map_or(0, |&c| c + 1),
                        nodes: meter.nodes(),
                    })
                }
            }
        };
        for (i, c) in kernel.unpermute(&by_pos).into_iter().enumerate() {
            colors[sub.map[i]] = c;
        }
    }
    Ok(Some(Dicoloring { colors, k }))
}

/// Every out-neighbourhood has `χ⃗ ≤ k`.
pub fn is_k_local(d: &Digraph, k: usize, budget: &Budget) -> Result<bool, SolverError> {
    neighbourhoods_bounded(d, k, budget, |v| d.out_neighbors(&VertexSet::singleton(v)))
}

/// Every in-neighbourhood has `χ⃗ ≤ k`.
pub fn is_k_colocal(d: &Digraph, k: usize, budget: &Budget) -> Result<bool, SolverError> {
    neighbourhoods_bounded(d, k, budget, |v| d.in_neighbors(&VertexSet::singleton(v)))
}

fn neighbourhoods_bounded(
    d: &Digraph,
    k: usize,
    budget: &Budget,
    nbhd: impl Fn(usize) -> VertexSet,
) -> Result<bool, SolverError> {
    for v in d.vertices() {
        let sub = induced(d, &nbhd(v));
        if dichromatic_at_most(&sub.graph, k, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
