//! Recognition of heroes in tournaments.
//!
//! A tournament is a hero iff it is `K1`, a forward join `H1 ⇒ H2` of heroes,
//! or `Δ(1, H1, m)` / `Δ(1, m, H1)` with `H1` a hero and `m ≥ 1`.
//!
//! A forward join splits a tournament exactly at a cut of its condensation,
//! so a tournament that is not strong is a hero iff each strong component is.
//! For a strong tournament and apex `a`, `Δ(1, H1, m)` puts `H1` on `N⁺(a)`
//! and `TT_m` on `N⁻(a)`; `Δ(1, m, H1)` swaps them. Either way every arc
//! between the two neighbourhoods runs from `N⁺(a)` to `N⁻(a)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::budget::{Budget, Meter};
use crate::digraph::{induced, is_acyclic, scc_condensation, Digraph, VertexSet};

/// Largest tournament the recognizer accepts (vertex sets are `u64` masks).
pub const MAX_HERO_VERTICES: usize = 64;

/// A derivation in the hero grammar, on host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum HeroDerivation {
    Single {
        vertex: usize,
    },
    /// `left ⇒ right`.
    Join {
        left: Box<HeroDerivation>,
        right: Box<HeroDerivation>,
    },
    /// `Δ(1, H1, m)`: `apex → hero → transitive → apex`.
    DeltaHeroFirst {
        apex: usize,
        hero: Box<HeroDerivation>,
        transitive: Vec<usize>,
    },
    /// `Δ(1, m, H1)`: `apex → transitive → hero → apex`.
    DeltaTransitiveFirst {
        apex: usize,
        transitive: Vec<usize>,
        hero: Box<HeroDerivation>,
    },
}

impl HeroDerivation {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Self::Single { vertex } => VertexSet::singleton(*vertex),
            Self::Join { left, right } => left.vertices().union(&right.vertices()),
            Self::DeltaHeroFirst { apex, hero, transitive } | Self::DeltaTransitiveFirst { apex, transitive, hero } => {
                hero.vertices()
                    .union(&VertexSet::from(transitive.clone()))
                    .union(&VertexSet::singleton(*apex))
            }
        }
    }

    /// The derivation of the reversed tournament on the same vertex ids.
    pub fn mirrored(&self) -> Self {
        match self {
            Self::Single { vertex } => Self::Single { vertex: *vertex },
            Self::Join { left, right } => Self::Join {
                left: Box::new(right.mirrored()),
                right: Box::new(left.mirrored()),
            },
            Self::DeltaHeroFirst { apex, hero, transitive } => Self::DeltaTransitiveFirst {
                apex: *apex,
                transitive: transitive.iter().rev().copied().collect(),
                hero: Box::new(hero.mirrored()),
            },
            Self::DeltaTransitiveFirst { apex, transitive, hero } => Self::DeltaHeroFirst {
                apex: *apex,
                hero: Box::new(hero.mirrored()),
                transitive: transitive.iter().rev().copied().collect(),
            },
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Self::Single { .. } => 1,
            Self::Join { left, right } => 1 + left.depth().max(right.depth()),
            Self::DeltaHeroFirst { hero, .. } | Self::DeltaTransitiveFirst { hero, .. } => 1 + hero.depth(),
        }
    }
}

/// `true` iff `t` derives exactly the tournament `h`.
pub fn verify_hero_derivation(h: &Digraph, t: &HeroDerivation) -> bool {
    t.vertices() == h.all() && verify_on(h, t)
}

fn complete_to(h: &Digraph, from: &VertexSet, to: &VertexSet) -> bool {
    from.iter().all(|u| to.iter().all(|v| h.has_arc(u, v)))
}

fn is_transitive_part(h: &Digraph, part: &[usize]) -> bool {
    let set = VertexSet::from(part.to_vec());
    !part.is_empty() && set.len() == part.len() && h.is_clique(&set) && is_acyclic(&induced(h, &set).graph)
}

fn verify_on(h: &Digraph, t: &HeroDerivation) -> bool {
    match t {
        HeroDerivation::Single { vertex } => *vertex < h.n(),
        HeroDerivation::Join { left, right } => {
            let (l, r) = (left.vertices(), right.vertices());
            l.is_disjoint(&r) && complete_to(h, &l, &r) && verify_on(h, left) && verify_on(h, right)
        }
        HeroDerivation::DeltaHeroFirst { apex, hero, transitive }
        | HeroDerivation::DeltaTransitiveFirst { apex, transitive, hero } => {
            let a = VertexSet::singleton(*apex);
            let hs = hero.vertices();
            let ts = VertexSet::from(transitive.clone());
            if *apex >= h.n() || hs.contains(*apex) || ts.contains(*apex) || !hs.is_disjoint(&ts) {
                return false;
            }
            let (first, second) = match t {
                HeroDerivation::DeltaHeroFirst { .. } => (&hs, &ts),
                _ => (&ts, &hs),
            };
            complete_to(h, &a, first)
                && complete_to(h, first, second)
                && complete_to(h, second, &a)
                && is_transitive_part(h, transitive)
                && verify_on(h, hero)
        }
    }
}

struct Recognizer<'a> {
    out: Vec<u64>,
    inn: Vec<u64>,
    h: &'a Digraph,
    memo: HashMap<u64, Option<HeroDerivation>>,
    meter: Meter,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn to_set(mask: u64) -> VertexSet {
    bits(mask).collect()
}

impl Recognizer<'_> {
    /// A tournament is transitive iff its out-degrees are pairwise distinct.
    fn transitive_order(&self, mask: u64) -> Option<Vec<usize>> {
        let mut by_score: Vec<(u32, usize)> = bits(mask).map(|v| ((self.out[v] & mask).count_ones(), v)).collect();
        by_score.sort_unstable_by(|a, b| b.cmp(a));
        let distinct = by_score.windows(2).all(|w| w[0].0 != w[1].0);
        distinct.then(|| by_score.into_iter().map(|(_, v)| v).collect())
    }

    fn derive(&mut self, mask: u64) -> Result<Option<HeroDerivation>, PatternError> {
        if let Some(hit) = self.memo.get(&mask) {
            return Ok(hit.clone());
        }
        self.meter.tick().map_err(|_| PatternError::BudgetExceeded {
            nodes: self.meter.nodes(),
        })?;
        let result = self.derive_uncached(mask)?;
        self.memo.insert(mask, result.clone());
        Ok(result)
    }

    fn derive_uncached(&mut self, mask: u64) -> Result<Option<HeroDerivation>, PatternError> {
        if mask.count_ones() == 1 {
            return Ok(Some(HeroDerivation::Single {
                vertex: mask.trailing_zeros() as usize,
            }));
        }
        let sub = induced(self.h, &to_set(mask));
        let cond = scc_condensation(&sub.graph);
        if !cond.is_strongly_connected() {
            let first: u64 = cond.components[0].iter().fold(0, |m, v| m | 1 << sub.map[v]);
            let Some(left) = self.derive(first)? else {
                return Ok(None);
            };
            let Some(right) = self.derive(mask & !first)? else {
                return Ok(None);
            };
            return Ok(Some(HeroDerivation::Join {
                left: Box::new(left),
                right: Box::new(right),
            }));
        }
        for apex in bits(mask) {
            let out = self.out[apex] & mask;
            let inn = self.inn[apex] & mask;
            if out == 0 || inn == 0 || bits(out).any(|u| self.out[u] & inn != inn) {
                continue;
            }
            if let Some(transitive) = self.transitive_order(inn) {
                if let Some(hero) = self.derive(out)? {
                    return Ok(Some(HeroDerivation::DeltaHeroFirst {
                        apex,
                        hero: Box::new(hero),
                        transitive,
                    }));
                }
            }
            if let Some(transitive) = self.transitive_order(out) {
                if let Some(hero) = self.derive(inn)? {
                    return Ok(Some(HeroDerivation::DeltaTransitiveFirst {
                        apex,
                        transitive,
                        hero: Box::new(hero),
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// A derivation of `h` in the hero grammar, or `None` if `h` is not a hero
/// in tournaments.
pub fn is_hero_in_tournaments(h: &Digraph, budget: &Budget) -> Result<Option<HeroDerivation>, PatternError> {
    for u in h.vertices() {
        for v in u + 1..h.n() {
            if !h.adjacent(u, v) {
                return Err(PatternError::NotATournament { u, v });
            }
        }
    }
    if h.n() == 0 {
        return Ok(None);
    }
    if h.n() > MAX_HERO_VERTICES {
        return Err(PatternError::BudgetExceeded { nodes: 0 });
    }
    let mask_of = |adj: &[usize]| adj.iter().fold(0u64, |m, &w| m | 1 << w);
    let mut r = Recognizer {
        out: h.vertices().map(|v| mask_of(h.out_adj(v))).collect(),
        inn: h.vertices().map(|v| mask_of(h.in_adj(v))).collect(),
        h,
        memo: HashMap::new(),
        meter: Meter::new(budget),
    };
    let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    r.derive(full)
}
