//! Undirected colouring and stable sets of the underlying graph.

use super::SolverError;
use crate::budget::{Budget, Exhausted, Meter};
use crate::digraph::{CliqueRows, Digraph, VertexSet};

const NONE: usize = usize::MAX;

/// DSATUR branch and bound, seeded with a maximum clique.
struct Dsatur<'a> {
    adj: Vec<Vec<usize>>,
    colour: Vec<usize>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    lower: usize,
    best: usize,
    best_colour: Vec<usize>,
    meter: &'a mut Meter,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.counts[w][c] += 1;
            if self.counts[w][c] == 1 {
                self.sat[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = NONE;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.colour.len())
            .filter(|&v| self.colour[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.adj[v].len(), std::cmp::Reverse(v)))
    }

    fn search(&mut self, used: usize) -> Result<(), Exhausted> {
        if used >= self.best {
            return Ok(());
        }
        let Some(v) = self.pick() else {
            self.best = used;
            self.best_colour = self.colour.clone();
            return Ok(());
        };
        self.meter.tick()?;
        for c in 0..(used + 1).min(self.best - 1) {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1))?;
            self.unassign(v);
            if self.best == self.lower {
                break;
            }
        }
        Ok(())
    }
}

/// `χ` of the underlying undirected graph, with an optimal colouring.
pub fn chromatic_number_undirected(d: &Digraph, budget: &Budget) -> Result<(usize, Vec<usize>), SolverError> {
    let n = d.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut meter = Meter::new(budget);
    let clique = CliqueRows::underlying(d)
        .max_clique(&mut meter)
        .map_err(|_| SolverError::BudgetExceeded {
            lower: 1,
            upper: n,
            nodes: meter.nodes(),
        })?;
    let adj: Vec<Vec<usize>> = d.vertices().map(|v| d.neighbor_row(v).ones().collect()).collect();
    let lower = clique.len();
    let mut s = Dsatur {
        adj,
        colour: vec![NONE; n],
        counts: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        lower,
        best: n + 1,
        best_colour: Vec::new(),
        meter: &mut meter,
    };
    for (c, v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    let outcome = s.search(lower);
    let (best, best_colour) = (s.best, std::mem::take(&mut s.best_colour));
    match outcome {
        Ok(()) => Ok((best, best_colour)),
        Err(Exhausted) => Err(SolverError::BudgetExceeded {
            lower,
            upper: best.min(n),
            nodes: meter.nodes(),
        }),
    }
}

/// A maximum stable set of the underlying graph.
pub fn maximum_stable_set(d: &Digraph, budget: &Budget) -> Result<VertexSet, SolverError> {
    let mut meter = Meter::new(budget);
    CliqueRows::complement(d)
        .max_clique(&mut meter)
        .map_err(|_| SolverError::BudgetExceeded {
            lower: usize::from(d.n() > 0),
            upper: d.n(),
            nodes: meter.nodes(),
        })
}

/// `α` of the underlying graph.
pub fn independence_number(d: &Digraph, budget: &Budget) -> Result<usize, SolverError> {
    maximum_stable_set(d, budget).map(|s| s.len())
}
