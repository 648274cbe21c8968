//! Longest directed paths, counted in vertices.

use super::SolverError;
use crate::budget::{Budget, Meter};
use crate::digraph::{topological_order, Digraph};

/// Above this many vertices the subset DP gives way to budgeted DFS.
const SUBSET_DP_LIMIT: usize = 22;

/// Number of vertices on a longest directed path (not necessarily induced).
pub fn longest_path_vertices(d: &Digraph, budget: &Budget) -> Result<usize, SolverError> {
    let n = d.n();
    if n == 0 {
        return Ok(0);
    }
    if let Some(order) = topological_order(d) {
        let mut len = vec![1usize; n];
        for &v in &order {
            for &w in d.out_adj(v) {
                len[w] = len[w].max(len[v] + 1);
            }
        }
        return Ok(len.into_iter().max().unwrap_or(0));
    }
    if n <= SUBSET_DP_LIMIT {
        return Ok(subset_dp(d));
    }
    dfs(d, budget)
}

/// `ends[mask]` holds the possible last vertices of a path with vertex set `mask`.
fn subset_dp(d: &Digraph) -> usize {
    let n = d.n();
    let out: Vec<u32> = d
        .vertices()
        .map(|v| d.out_adj(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1usize..(1 << n) {
        let mut e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = out[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

fn dfs(d: &Digraph, budget: &Budget) -> Result<usize, SolverError> {
    let n = d.n();
    let mut meter = Meter::new(budget);
    let mut on_path = vec![false; n];
    let mut best = 1;
    for root in d.vertices() {
        on_path[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&(v, pos)) = stack.last() {
            if meter.tick().is_err() {
                return Err(SolverError::BudgetExceeded {
                    lower: best,
                    upper: n,
                    nodes: meter.nodes(),
                });
            }
            let outs = d.out_adj(v);
            match outs[pos..].iter().position(|&w| !on_path[w]) {
                Some(off) => {
                    let w = outs[pos + off];
                    stack.last_mut().expect("frame").1 = pos + off + 1;
                    on_path[w] = true;
                    stack.push((w, 0));
                    best = best.max(stack.len());
                    if best == n {
                        return Ok(n);
                    }
                }
                None => {
                    on_path[v] = false;
                    stack.pop();
                }
            }
        }
    }
    Ok(best)
}

/// The Gallai–Roy bound `χ(underlying D) ≤ L`, with `L` the vertex count of
/// a longest directed path.
pub fn gallai_roy_bound(d: &Digraph, budget: &Budget) -> Result<usize, SolverError> {
    longest_path_vertices(d, budget)
}
