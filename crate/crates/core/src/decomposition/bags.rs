//! Bag chains, zones, and instance checks of the two layered-partition
//! colouring lemmas.

use serde::{Deserialize, Serialize};

use super::DecompositionError;
use crate::budget::Budget;
use crate::digraph::{Digraph, VertexSet};
use crate::solver::{dichromatic_number, dichromatic_number_of_subset};

/// `bags[i]` has `χ⃗ = beta`; for `v ∈ bags[i]`, `χ⃗(N⁺(v) ∩ bags[i−1]) ≤ c`
/// and `χ⃗(N⁻(v) ∩ bags[i+1]) ≤ c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BagChain {
    pub bags: Vec<VertexSet>,
    pub c: usize,
    pub beta: usize,
}

impl BagChain {
    pub fn vertices(&self) -> VertexSet {
        self.bags.iter().fold(VertexSet::new(), |a, b| a.union(b))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BagMode {
    /// `χ⃗(B) = β`.
    #[default]
    Exact,
    /// `χ⃗(B) ≥ β`.
    AtLeast,
}

fn check_disjoint(d: &Digraph, sets: &[VertexSet]) -> Result<(), DecompositionError> {
    let mut seen = vec![false; d.n()];
    for s in sets {
        for v in s.iter() {
            if v >= d.n() {
                return Err(DecompositionError::BadPartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(DecompositionError::BadPartition(format!("vertex {v} is in two sets")));
            }
        }
    }
    Ok(())
}

fn chi(d: &Digraph, s: &VertexSet, budget: &Budget) -> Result<usize, DecompositionError> {
    Ok(dichromatic_number_of_subset(d, s, budget)?)
}

fn out_of(d: &Digraph, v: usize) -> VertexSet {
    d.out_neighbors(&VertexSet::singleton(v))
}

fn in_of(d: &Digraph, v: usize) -> VertexSet {
    d.in_neighbors(&VertexSet::singleton(v))
}

pub fn verify_bag_chain(
    d: &Digraph,
    chain: &BagChain,
    mode: BagMode,
    budget: &Budget,
) -> Result<bool, DecompositionError> {
    Ok(bag_chain_failure(d, chain, mode, budget)?.is_none())
}

/// The first condition `chain` breaks, if any.
pub fn bag_chain_failure(
    d: &Digraph,
    chain: &BagChain,
    mode: BagMode,
    budget: &Budget,
) -> Result<Option<String>, DecompositionError> {
    check_disjoint(d, &chain.bags)?;
    for (i, bag) in chain.bags.iter().enumerate() {
        let x = chi(d, bag, budget)?;
        let ok = match mode {
            BagMode::Exact => x == chain.beta,
            BagMode::AtLeast => x >= chain.beta,
        };
        if !ok {
            return Ok(Some(format!("bag {i} has χ⃗ = {x}, beta is {}", chain.beta)));
        }
        for v in bag.iter() {
            if i > 0 {
                let x = chi(d, &out_of(d, v).intersection(&chain.bags[i - 1]), budget)?;
                if x > chain.c {
                    return Ok(Some(format!(
                        "vertex {v} of bag {i} has out-neighbours of χ⃗ {x} in bag {}",
                        i - 1
                    )));
                }
            }
            if let Some(next) = chain.bags.get(i + 1) {
                let x = chi(d, &in_of(d, v).intersection(next), budget)?;
                if x > chain.c {
                    return Ok(Some(format!(
                        "vertex {v} of bag {i} has in-neighbours of χ⃗ {x} in bag {}",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Starts from `seed` and appends bags greedily: each new bag takes, in
/// vertex order, every unused vertex that keeps both neighbourhood
/// conditions and `χ⃗ ≤ beta`. Stops when a bag falls short of `beta`.
pub fn extend_bag_chain_greedy(
    d: &Digraph,
    c: usize,
    beta: usize,
    seed: &VertexSet,
    budget: &Budget,
) -> Result<BagChain, DecompositionError> {
    check_disjoint(d, std::slice::from_ref(seed))?;
    if chi(d, seed, budget)? != beta {
        return Err(DecompositionError::BadPartition("seed bag does not have χ⃗ = β".into()));
    }
    let mut chain = BagChain {
        bags: vec![seed.clone()],
        c,
        beta,
    };
    loop {
        let used = chain.vertices();
        let last = chain.bags.last().expect("nonempty chain").clone();
        let mut bag = VertexSet::new();
        for v in d.vertices().filter(|&v| !used.contains(v)) {
            if chi(d, &out_of(d, v).intersection(&last), budget)? > c {
                continue;
            }
            let grown = bag.union(&VertexSet::singleton(v));
            if chi(d, &grown, budget)? > beta {
                continue;
            }
            let mut fits = true;
            for u in in_of(d, v).intersection(&last).iter() {
                if chi(d, &in_of(d, u).intersection(&grown), budget)? > c {
                    fits = false;
                    break;
                }
            }
            if fits {
                bag = grown;
            }
        }
        if bag.is_empty() || chi(d, &bag, budget)? != beta {
            return Ok(chain);
        }
        chain.bags.push(bag);
    }
}

/// `zones[v]`: `None` on the chain; otherwise the largest 1-based `i` with
/// `χ⃗(N⁻(v) ∩ B_i) > c`, or `0` if there is none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZoneAssignment {
    pub zones: Vec<Option<usize>>,
}

impl ZoneAssignment {
    pub fn zone(&self, i: usize) -> VertexSet {
        (0..self.zones.len()).filter(|&v| self.zones[v] == Some(i)).collect()
    }
}

pub fn zone_partition(
    d: &Digraph,
    chain: &BagChain,
    c: usize,
    budget: &Budget,
) -> Result<ZoneAssignment, DecompositionError> {
    check_disjoint(d, &chain.bags)?;
    let on_chain = chain.vertices();
    let mut zones = vec![None; d.n()];
    for v in d.vertices().filter(|&v| !on_chain.contains(v)) {
        let mut zone = 0;
        for (i, bag) in chain.bags.iter().enumerate().rev() {
            if chi(d, &in_of(d, v).intersection(bag), budget)? > c {
                zone = i + 1;
                break;
            }
        }
        zones[v] = Some(zone);
    }
    Ok(ZoneAssignment { zones })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LemmaCheck {
    /// Hypotheses hold and `chi ≤ bound`.
    Holds {
        bound: usize,
        chi: usize,
    },
    HypothesisFails {
        reason: String,
    },
    ConclusionFails {
        bound: usize,
        chi: usize,
    },
}

fn check_partition(d: &Digraph, parts: &[VertexSet]) -> Result<Vec<usize>, DecompositionError> {
    check_disjoint(d, parts)?;
    let mut part_of = vec![usize::MAX; d.n()];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(DecompositionError::BadPartition(format!("vertex {v} is in no part")));
    }
    Ok(part_of)
}

fn span(parts: &[VertexSet], from: usize, to: usize) -> VertexSet {
    parts[from..to].iter().fold(VertexSet::new(), |a, p| a.union(p))
}

/// Hypotheses: every part has `χ⃗ ≤ k`, and an arc from `X_j` back to `X_i`
/// forces `χ⃗(X_{i+1} ∪ … ∪ X_j) ≤ k`. Conclusion: `χ⃗(D) ≤ 2k`.
pub fn layered_partition_check(
    d: &Digraph,
    parts: &[VertexSet],
    k: usize,
    budget: &Budget,
) -> Result<LemmaCheck, DecompositionError> {
    let part_of = check_partition(d, parts)?;
    for (i, p) in parts.iter().enumerate() {
        let x = chi(d, p, budget)?;
        if x > k {
            return Ok(LemmaCheck::HypothesisFails {
                reason: format!("part {i} has χ⃗ = {x} > {k}"),
            });
        }
    }
    for (u, v) in d.arcs() {
        let (j, i) = (part_of[u], part_of[v]);
        if i < j {
            let x = chi(d, &span(parts, i + 1, j + 1), budget)?;
            if x > k {
                return Ok(LemmaCheck::HypothesisFails {
                    reason: format!("back arc ({u}, {v}) spans parts {}..={j} with χ⃗ = {x} > {k}", i + 1),
                });
            }
        }
    }
    let chi = dichromatic_number(d, budget)?.chi;
    let bound = 2 * k;
    Ok(if chi <= bound {
        LemmaCheck::Holds { bound, chi }
    } else {
        LemmaCheck::ConclusionFails { bound, chi }
    })
}

/// Instance form of the forward/backward partition lemma. `m_prime` is the
/// largest of `χ⃗(X_i)`, `χ⃗(N⁺(v) ∩ X_{<i})` and `χ⃗(N⁻(v) ∩ X_{>i})`;
/// `m` is the largest of `χ⃗(N⁰(v))` and, over back arcs `u → v` with
/// `u ∈ X_j`, `v ∈ X_i`, `χ⃗(N⁺(v) ∩ N⁻(u) ∩ X_{i+1..j−1})`. With these,
/// `χ⃗(D) ≤ 6(m + m′) + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionLemmaCheck {
    pub m: usize,
    pub m_prime: usize,
    pub bound: usize,
    pub chi: usize,
}

impl PartitionLemmaCheck {
    pub fn holds(&self) -> bool {
        self.chi <= self.bound
    }
}

pub fn check_partition_lemma(
    d: &Digraph,
    parts: &[VertexSet],
    budget: &Budget,
) -> Result<PartitionLemmaCheck, DecompositionError> {
    let part_of = check_partition(d, parts)?;
    let n = parts.len();
    let mut m_prime = 0;
    for (i, p) in parts.iter().enumerate() {
        m_prime = m_prime.max(chi(d, p, budget)?);
        let before = span(parts, 0, i);
        let after = span(parts, i + 1, n);
        for v in p.iter() {
            m_prime = m_prime.max(chi(d, &out_of(d, v).intersection(&before), budget)?);
            m_prime = m_prime.max(chi(d, &in_of(d, v).intersection(&after), budget)?);
        }
    }
    let mut m = 0;
    for v in d.vertices() {
        m = m.max(chi(d, &d.non_neighbors(&VertexSet::singleton(v)), budget)?);
    }
    for (u, v) in d.arcs() {
        let (j, i) = (part_of[u], part_of[v]);
        if i + 1 < j {
            let between = span(parts, i + 1, j);
            let x = out_of(d, v).intersection(&in_of(d, u)).intersection(&between);
            m = m.max(chi(d, &x, budget)?);
        }
    }
    Ok(PartitionLemmaCheck {
        m,
        m_prime,
        bound: 6 * (m + m_prime) + 2,
        chi: dichromatic_number(d, budget)?.chi,
    })
}
