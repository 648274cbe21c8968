use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Digraph, VertexSet};

/// Strongly connected components with the contracted digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    /// Components in a topological order of `dag`.
    pub components: Vec<VertexSet>,
    /// Arc `i → j` iff some arc leaves component `i` for component `j`.
    pub dag: Digraph,
    /// Component index of each vertex.
    pub component_of: Vec<usize>,
}

impl Condensation {
    pub fn is_strongly_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Components with no incoming arc in `dag`.
    pub fn sources(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dag.n()).filter(|&c| self.dag.in_degree(c) == 0)
    }

    /// Components with no outgoing arc in `dag`.
    pub fn sinks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dag.n()).filter(|&c| self.dag.out_degree(c) == 0)
    }
}

/// Tarjan's algorithm, iterative. Components come out sinks-first and are
/// reversed into a topological order.
pub fn scc_condensation(d: &Digraph) -> Condensation {
    let n = d.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut next = 0usize;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, pos)) = call.last() {
            let outs = d.out_adj(v);
            if pos < outs.len() {
                let w = outs[pos];
                call.last_mut().expect("frame").1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }

    comps.reverse();
    let mut component_of = vec![0usize; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            component_of[v] = i;
        }
    }
    let dag = Digraph::from_arcs(
        comps.len(),
        d.arcs()
            .map(|(u, v)| (component_of[u], component_of[v]))
            .filter(|(a, b)| a != b),
    )
    .expect("condensation of a digraph is acyclic");
    Condensation {
        components: comps.into_iter().map(VertexSet::from).collect(),
        dag,
        component_of,
    }
}

/// Kahn's algorithm, always taking the smallest available vertex.
pub fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let mut indeg: Vec<usize> = d.vertices().map(|v| d.in_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = d.vertices().filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(d.n());
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in d.out_adj(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    (order.len() == d.n()).then_some(order)
}

pub fn is_acyclic(d: &Digraph) -> bool {
    topological_order(d).is_some()
}

/// Some directed cycle as a vertex sequence `c0 → c1 → … → c0`, or `None` if
/// `d` is acyclic.
pub fn find_cycle(d: &Digraph) -> Option<Vec<usize>> {
    // 0 = unseen, 1 = on the current path, 2 = finished
    let mut state = vec![0u8; d.n()];
    let mut parent = vec![usize::MAX; d.n()];
    for root in d.vertices() {
        if state[root] != 0 {
            continue;
        }
        let mut call = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&(v, pos)) = call.last() {
            let outs = d.out_adj(v);
            if pos == outs.len() {
                state[v] = 2;
                call.pop();
                continue;
            }
            call.last_mut().expect("frame").1 += 1;
            let w = outs[pos];
            match state[w] {
                0 => {
                    state[w] = 1;
                    parent[w] = v;
                    call.push((w, 0));
                }
                1 => {
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                _ => {}
            }
        }
    }
    None
}
