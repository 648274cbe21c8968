//! Nice sets, closed tournaments, the broom-free colourer, and the
//! bag-chain and domination predicates.

mod bags;
mod brooms;
mod domination;
mod layers;
mod nice;
mod pmct;

use thiserror::Error;

use crate::digraph::VertexSet;
use crate::patterns::{Embedding, PatternError};
use crate::solver::SolverError;

pub use bags::{
    bag_chain_failure, check_partition_lemma, extend_bag_chain_greedy, layered_partition_check, verify_bag_chain,
    zone_partition, BagChain, BagMode, LemmaCheck, PartitionLemmaCheck, ZoneAssignment,
};
pub use brooms::{dicolor_broom_free, verify_ncx_nice, BroomCase, BroomColoring, BroomPair, LevelTrace, PaletteSpan};
pub use domination::{minimal_dominating_set, source_layer};
pub use layers::{layer_decomposition, partition_first_last, residue_classes, FirstLast, LayerMode};
pub use nice::{
    color_via_nice_sets, nice_certificate, nice_set_failure, verify_nice_set, NiceSetCertificate, NiceSetOracle,
};
pub use pmct::{broom_neighborhood_split, find_pmct, NeighbourhoodSplit, Pmct};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("oracle returned an invalid certificate: {0}")]
    OracleFailure(String),
    #[error("internal colouring invariant failed: {0}")]
    ColorBudgetBug(String),
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("vertex {vertex} has more than k outside in-neighbours and out-neighbours")]
    NicenessViolated {
        vertex: usize,
        outside_in: VertexSet,
        outside_out: VertexSet,
    },
    #[error("vertex {0} has no neighbour of the required kind on the path")]
    UncoveredVertex(usize),
    #[error("digraph contains forbidden broom {index}")]
    FreenessViolated { index: usize, embedding: Embedding },
    #[error("the two brooms do not have opposing orientations")]
    NotOpposing,
    #[error("set is not acyclic")]
    NotAcyclic,
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// `C(a + b − 2, a − 1)`, an upper bound on the Ramsey number `R(a, b)`:
/// every graph on this many vertices has a stable set of size `a` or a
/// clique of size `b`. Saturates at `usize::MAX`.
pub fn ramsey_upper(a: usize, b: usize) -> usize {
    if a <= 1 || b <= 1 {
        return 1;
    }
    let (n, k) = (a + b - 2, (a - 1).min(b - 1));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// The nice-set size threshold used at clique number `omega` for brooms with
/// `r` and `s` leaves: `ramsey_upper(max(r, s), omega + 1)`.
pub fn broom_k(r: usize, s: usize, omega: usize) -> usize {
    ramsey_upper(r.max(s), omega + 1)
}

/// `b(1) = 1`, `b(ω) = 2(ω(γ + 1) + γ(6k + 25) + 2)(k + 1)` with
/// `γ = b(ω − 1)` and `k = broom_k(r, s, ω)`. `b(0) = 0`. Saturates.
pub fn broom_bound(r: usize, s: usize, omega: usize) -> u128 {
    let mut b: u128 = if omega == 0 { 0 } else { 1 };
    for w in 2..=omega {
        let k = broom_k(r, s, w) as u128;
        let (w, g) = (w as u128, b);
        let inner = w
            .saturating_mul(g.saturating_add(1))
            .saturating_add(g.saturating_mul(k.saturating_mul(6).saturating_add(25)))
            .saturating_add(2);
        b = inner.saturating_mul(2).saturating_mul(k.saturating_add(1));
    }
    b
}
