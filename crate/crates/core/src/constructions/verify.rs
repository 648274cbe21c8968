use serde::{Deserialize, Serialize};

use super::{ArcClass, LabeledConstruction};
use crate::budget::Budget;
use crate::digraph::{induced, Digraph, VertexSet};
use crate::solver::{chromatic_number_undirected, maximum_stable_set, SolverError};

/// Neighbours of one vertex split by arc class and direction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourhoodGroups {
    pub x_in: VertexSet,
    pub x_out: VertexSet,
    /// `Y` out-neighbours: `(•, …, a1, …, ah)`.
    pub a: VertexSet,
    /// `Y` in-neighbours: `(ah, …, ak, •, …)`.
    pub b: VertexSet,
    /// `Z1` neighbours.
    pub m: VertexSet,
    /// `Z2` neighbours.
    pub n: VertexSet,
}

pub fn neighbourhood_groups(c: &LabeledConstruction, v: usize) -> NeighbourhoodGroups {
    let mut g: [Vec<usize>; 6] = Default::default();
    for &u in c.graph.in_adj(v) {
        let slot = match c.classes[&(u, v)] {
            ArcClass::X => 0,
            ArcClass::Y => 3,
            ArcClass::Z1 => 4,
            ArcClass::Z2 => 5,
        };
        g[slot].push(u);
    }
    for &u in c.graph.out_adj(v) {
        let slot = match c.classes[&(v, u)] {
            ArcClass::X => 1,
            ArcClass::Y => 2,
            ArcClass::Z1 => 4,
            ArcClass::Z2 => 5,
        };
        g[slot].push(u);
    }
    let [x_in, x_out, a, b, m, n] = g.map(VertexSet::from);
    NeighbourhoodGroups {
        x_in,
        x_out,
        a,
        b,
        m,
        n,
    }
}

/// Outcome of [`verify_neighborhood_tournament_partition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum NeighbourhoodPartition {
    /// Nonempty parts, each a tournament.
    Partition { parts: Vec<VertexSet> },
    /// The grouping failed; `max_stable` is a largest stable set of `N(v)`,
    /// so more than `max_parts` vertices there rules out any such partition.
    Violation { stable_pairs: usize, max_stable: VertexSet },
}

/// Splits `N(v)` into at most `max_parts` tournaments using the arc classes.
/// For `k = 7` the parts are `X⁻`, `X⁺`, `A ∪ M`, `B ∪ N`; for `k = 5` they
/// are `X⁻ ∪ X⁺`, `A ∪ M`, `B ∪ N`. Other `k` keep the six groups apart.
pub fn verify_neighborhood_tournament_partition(
    c: &LabeledConstruction,
    v: usize,
    max_parts: usize,
    budget: &Budget,
) -> Result<NeighbourhoodPartition, SolverError> {
    let g = neighbourhood_groups(c, v);
    let parts = match c.k {
        7 => vec![g.x_in.clone(), g.x_out.clone(), g.a.union(&g.m), g.b.union(&g.n)],
        5 => vec![g.x_in.union(&g.x_out), g.a.union(&g.m), g.b.union(&g.n)],
        _ => vec![g.x_in, g.x_out, g.a, g.b, g.m, g.n],
    };
    let parts: Vec<VertexSet> = parts.into_iter().filter(|p| !p.is_empty()).collect();
    if parts.len() <= max_parts && parts.iter().all(|p| c.graph.is_clique(p)) {
        return Ok(NeighbourhoodPartition::Partition { parts });
    }
    let nbhd = c.graph.neighbors(&VertexSet::singleton(v));
    let ns = nbhd.as_slice();
    let stable_pairs = ns
        .iter()
        .enumerate()
        .map(|(i, &x)| ns[i + 1..].iter().filter(|&&y| !c.graph.adjacent(x, y)).count())
        .sum();
    let sub = induced(&c.graph, &nbhd);
    let max_stable = sub.lift(&maximum_stable_set(&sub.graph, budget)?);
    Ok(NeighbourhoodPartition::Violation {
        stable_pairs,
        max_stable,
    })
}

/// The first cyclic triangle `u → v → w → u`, scanning arcs `(u, v)`
/// lexicographically and taking the smallest `w`.
pub fn verify_no_cyclic_triangle(d: &Digraph) -> Option<[usize; 3]> {
    d.arcs().find_map(|(u, v)| {
        let mut closing = d.out_row(v).clone();
        closing.intersect_with(d.in_row(u));
        closing.ones().next().map(|w| [u, v, w])
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleWitness {
    pub vertices: [usize; 3],
    pub classes: [ArcClass; 3],
}

/// The first cyclic triangle whose arc classes are not two `X` and one `Y`.
pub fn verify_triangle_profile_f5(c: &LabeledConstruction) -> Option<TriangleWitness> {
    let d = &c.graph;
    for (u, v) in d.arcs() {
        let mut closing = d.out_row(v).clone();
        closing.intersect_with(d.in_row(u));
        // Report each triangle once, from its smallest vertex.
        for w in closing.ones().filter(|&w| u < v && u < w) {
            let classes = [c.classes[&(u, v)], c.classes[&(v, w)], c.classes[&(w, u)]];
            let xs = classes.iter().filter(|&&k| k == ArcClass::X).count();
            let ys = classes.iter().filter(|&&k| k == ArcClass::Y).count();
            if (xs, ys) != (2, 1) {
                return Some(TriangleWitness {
                    vertices: [u, v, w],
                    classes,
                });
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiRoyLowerBound {
    /// χ of the underlying shift graph.
    pub chi_shift: usize,
    /// Longest directed path (in vertices) inside one colour class.
    pub divisor: usize,
    /// `⌈chi_shift / divisor⌉`.
    pub bound: usize,
}

/// `χ⃗ ≥ ⌈χ(shift) / (h − 1)⌉` with `h = (k + 1) / 2`: a colour class
/// with no directed path on `h` vertices induces an `X`-subgraph of
/// chromatic number at most `h − 1`.
pub fn dichromatic_lower_bound_via_gallai_roy(
    c: &LabeledConstruction,
    budget: &Budget,
) -> Result<GallaiRoyLowerBound, SolverError> {
    let (chi_shift, _) = chromatic_number_undirected(&c.class_subgraph(ArcClass::X), budget)?;
    let divisor = (c.k.div_ceil(2) - 1).max(1);
    Ok(GallaiRoyLowerBound {
        chi_shift,
        divisor,
        bound: chi_shift.div_ceil(divisor),
    })
}
