//! Colouring digraphs that exclude two opposing brooms.
//!
//! Each strong component is coloured on its own. Inside a strong component
//! the set `S = N[C ∪ X]` around a PMCT `C` is `k`-nice, so the component is
//! coloured by colouring `S`, recursing on the rest, and combining the two as
//! in the nice-set lemma. `S` is split into parts with disjoint palettes:
//!
//! | part | colouring | palette budget |
//! |------|-----------|----------------|
//! | `K` | one colour per vertex | `ω` |
//! | `N(K)` | by first neighbour in `K`, recursively | `ωγ` |
//! | `P` | alternate along the path | `2` |
//! | `N(Q)` | by first neighbour among the path ends | `4γ` |
//! | `N(P′)` | per broom case, see below | `γ(4k + 19)` |
//! | `Y` | nice sets `N(x) ∩ Y′` | `2γ(k + 1)` |
//!
//! with `γ = b(ω − 1)`. `N(P′)` is split into `A±`/`B±` (coloured by nice
//! sets `N±(vi) ∩ ·`) and, for the mixed cases, a remainder coloured by
//! layers along `P′` folded modulo 3 or 5.

use serde::{Deserialize, Serialize};

use super::layers::{layer_decomposition, partition_first_last, residue_classes, LayerMode};
use super::nice::{combine_layer, compact_into, nice_certificate, peel_and_combine, NiceSetCertificate, Peel, UNSET};
use super::pmct::{broom_neighborhood_split, find_pmct, sinks_and_sources, NeighbourhoodSplit, Pmct};
use super::{broom_bound, broom_k, DecompositionError};
use crate::budget::Budget;
use crate::digraph::{induced, is_acyclic, scc_condensation, underlying_clique_number, CliqueRows, Digraph, VertexSet};
use crate::patterns::{build, first_violation, BroomSpec, BroomType, PatternTag};
use crate::solver::{verify_dicoloring, Dicoloring};

/// Two brooms of opposing orientation, ordered so that `b` has `v2 → v3`
/// (type 1 or 3) and `b_prime` has `v3 → v2` (type 2 or 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BroomPair {
    pub b: BroomSpec,
    pub b_prime: BroomSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BroomCase {
    /// `A⁻` and `A⁺`.
    OneTwo,
    /// `B⁻` and `B⁺`.
    ThreeFour,
    /// `A⁺`, `B⁻`, layers by first in-neighbour modulo 3.
    TwoThree,
    /// `A⁻`, `B⁺`, layers by first out-neighbour modulo 5.
    OneFour,
}

impl BroomPair {
    pub fn new(x: BroomSpec, y: BroomSpec) -> Result<Self, DecompositionError> {
        let (tx, ty) = (BroomType::of(&x), BroomType::of(&y));
        match (tx.central_forward(), ty.central_forward()) {
            (true, false) => Ok(Self { b: x, b_prime: y }),
            (false, true) => Ok(Self { b: y, b_prime: x }),
            _ => Err(DecompositionError::NotOpposing),
        }
    }

    pub fn case(&self) -> BroomCase {
        match (BroomType::of(&self.b), BroomType::of(&self.b_prime)) {
            (BroomType::One, BroomType::Two) => BroomCase::OneTwo,
            (BroomType::Three, BroomType::Four) => BroomCase::ThreeFour,
            (BroomType::Three, BroomType::Two) => BroomCase::TwoThree,
            _ => BroomCase::OneFour,
        }
    }

    pub fn k(&self, omega: usize) -> usize {
        broom_k(self.b.r, self.b_prime.r, omega)
    }

    pub fn bound(&self, omega: usize) -> u128 {
        broom_bound(self.b.r, self.b_prime.r, omega)
    }
}

/// A block of consecutive colours given to one part of a nice set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteSpan {
    pub part: String,
    pub start: usize,
    pub len: usize,
    /// The size the bound allows for this part.
    pub budget: u128,
}

/// One strong component handled by the colourer. Vertex ids are those of
/// the input digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTrace {
    pub depth: usize,
    pub vertices: VertexSet,
    pub omega: usize,
    pub k: usize,
    pub gamma: u128,
    pub pmct: Pmct,
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
    pub nice_set: VertexSet,
    /// Set when the path is long enough to split `N(P′)` by case.
    pub case: Option<BroomCase>,
    pub layers: Vec<VertexSet>,
    pub modulus: Option<usize>,
    pub palette: Vec<PaletteSpan>,
    pub nice_set_colors: usize,
    pub colors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BroomColoring {
    pub coloring: Dicoloring,
    pub b: String,
    pub b_prime: String,
    pub omega: usize,
    pub k: usize,
    pub k_policy: String,
    /// `b(ω(D))`.
    pub bound: u128,
    /// `b(t − 1)` when `t` was given.
    pub class_bound: Option<u128>,
    pub levels: Vec<LevelTrace>,
}

impl BroomColoring {
    pub fn colors(&self) -> usize {
        self.coloring.used()
    }

    pub fn within_bound(&self) -> bool {
        (self.colors() as u128) <= self.bound
    }
}

/// `N[C ∪ X]` with its `k`-nice partition, `k = broom_k(r, s, ω(D))`.
pub fn verify_ncx_nice(
    d: &Digraph,
    c: &Pmct,
    b: &BroomSpec,
    b_prime: &BroomSpec,
) -> Result<NiceSetCertificate, DecompositionError> {
    let pair = BroomPair::new(*b, *b_prime)?;
    let split = broom_neighborhood_split(d, c);
    let cx = c.vertices().union(&split.x);
    let s = cx.union(&d.neighbors(&cx));
    nice_certificate(d, &d.all(), &s, pair.k(underlying_clique_number(d)))
}

/// Colours a `{b, b_prime}`-free digraph.
pub fn dicolor_broom_free(
    d: &Digraph,
    b: &BroomSpec,
    b_prime: &BroomSpec,
    t: Option<usize>,
    budget: &Budget,
) -> Result<BroomColoring, DecompositionError> {
    let pair = BroomPair::new(*b, *b_prime)?;
    let tags = [PatternTag::Broom(*b), PatternTag::Broom(*b_prime)];
    let patterns = tags.iter().map(build).collect::<Result<Vec<_>, _>>()?;
    if let Some(v) = first_violation(d, &patterns, budget)? {
        return Err(DecompositionError::FreenessViolated {
            index: v.index,
            embedding: v.embedding,
        });
    }
    let mut c = Colourer {
        pair,
        levels: Vec::new(),
    };
    let host: Vec<usize> = d.vertices().collect();
    let colors = c.colour(d, &host, 0)?;
    let coloring = Dicoloring::new(colors).compacted();
    if !verify_dicoloring(d, &coloring)? {
        return Err(DecompositionError::ColorBudgetBug(
            "output has a monochromatic cycle".into(),
        ));
    }
    let omega = underlying_clique_number(d);
    Ok(BroomColoring {
        coloring,
        b: tags[0].to_string(),
        b_prime: tags[1].to_string(),
        omega,
        k: pair.k(omega),
        k_policy: "ramsey_upper(max(r, s), omega + 1)".into(),
        bound: pair.bound(omega),
        class_bound: t.map(|t| pair.bound(t.saturating_sub(1))),
        levels: c.levels,
    })
}

#[derive(Clone, Copy)]
enum Side {
    AMinus,
    APlus,
    BMinus,
    BPlus,
}

struct Palette {
    colors: Vec<usize>,
    next: usize,
    spans: Vec<PaletteSpan>,
}

impl Palette {
    fn open(&mut self, part: &str, budget: u128) {
        self.spans.push(PaletteSpan {
            part: part.into(),
            start: self.next,
            len: 0,
            budget,
        });
    }

    /// Writes `cols` on `set` shifted to the current position and advances
    /// by `width`.
    fn put(&mut self, set: &VertexSet, cols: &[usize], width: usize) {
        for v in set.iter() {
            self.colors[v] = self.next + cols[v];
        }
        self.advance(width);
    }

    fn advance(&mut self, width: usize) {
        self.next += width;
        self.spans.last_mut().expect("open span").len += width;
    }
}

struct NiceColouring {
    colors: Vec<usize>,
    count: usize,
    spans: Vec<PaletteSpan>,
    case: Option<BroomCase>,
    layers: Vec<VertexSet>,
    modulus: Option<usize>,
}

struct Colourer {
    pair: BroomPair,
    levels: Vec<LevelTrace>,
}

fn lift_host(host: &[usize], s: &VertexSet) -> VertexSet {
    s.iter().map(|v| host[v]).collect()
}

impl Colourer {
    /// Compacted colours of `g`, local ids.
    fn colour(&mut self, g: &Digraph, host: &[usize], depth: usize) -> Result<Vec<usize>, DecompositionError> {
        if is_acyclic(g) {
            return Ok(vec![0; g.n()]);
        }
        let mut colors = vec![0; g.n()];
        for comp in scc_condensation(g).components {
            if comp.len() < 2 {
                continue;
            }
            let sub = induced(g, &comp);
            let h: Vec<usize> = sub.map.iter().map(|&v| host[v]).collect();
            let cols = self.colour_strong(&sub.graph, &h, depth)?;
            for (i, &v) in sub.map.iter().enumerate() {
                colors[v] = cols[i];
            }
        }
        Ok(colors)
    }

    /// Colours `D[set]`; `g`-indexed, `UNSET` off `set`.
    fn colour_subset(
        &mut self,
        g: &Digraph,
        host: &[usize],
        set: &VertexSet,
        depth: usize,
    ) -> Result<(Vec<usize>, usize), DecompositionError> {
        let mut out = vec![UNSET; g.n()];
        if set.is_empty() {
            return Ok((out, 0));
        }
        let sub = induced(g, set);
        let h: Vec<usize> = sub.map.iter().map(|&v| host[v]).collect();
        let cols = self.colour(&sub.graph, &h, depth + 1)?;
        for (i, &v) in sub.map.iter().enumerate() {
            out[v] = cols[i];
        }
        let count = compact_into(set, &out.clone(), &mut out);
        Ok((out, count))
    }

    fn colour_strong(&mut self, g: &Digraph, host: &[usize], depth: usize) -> Result<Vec<usize>, DecompositionError> {
        let omega = underlying_clique_number(g);
        let k = self.pair.k(omega);
        let pmct = find_pmct(g)?;
        let split = broom_neighborhood_split(g, &pmct);
        let cx = pmct.vertices().union(&split.x);
        let s = cx.union(&g.neighbors(&cx));
        let all = g.all();
        let cert = nice_certificate(g, &all, &s, k).map_err(|e| match e {
            DecompositionError::NicenessViolated {
                vertex,
                outside_in,
                outside_out,
            } => DecompositionError::NicenessViolated {
                vertex: host[vertex],
                outside_in: lift_host(host, &outside_in),
                outside_out: lift_host(host, &outside_out),
            },
            e => e,
        })?;
        let nice = self.colour_nice_set(g, host, depth, &pmct, &split, &s, omega, k)?;

        let mut out = vec![UNSET; g.n()];
        let rest = all.difference(&s);
        if !rest.is_empty() {
            let (cols, _) = self.colour_subset(g, host, &rest, depth)?;
            for v in rest.iter() {
                out[v] = cols[v];
            }
        }
        let peel = Peel {
            cert,
            colors: nice.colors,
            count: nice.count,
        };
        let total = combine_layer(g, &all, &peel, k, &mut out)?;

        let lift = |set: &VertexSet| lift_host(host, set);
        self.levels.push(LevelTrace {
            depth,
            vertices: host.iter().copied().collect(),
            omega,
            k,
            gamma: self.pair.bound(omega - 1),
            pmct: Pmct {
                k: lift(&pmct.k),
                path: pmct.path.iter().map(|&v| host[v]).collect(),
            },
            x: lift(&split.x),
            y: lift(&split.y),
            z: lift(&split.z),
            nice_set: lift(&s),
            case: nice.case,
            layers: nice.layers.iter().map(lift).collect(),
            modulus: nice.modulus,
            palette: nice.spans,
            nice_set_colors: nice.count,
            colors: total,
        });
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn colour_nice_set(
        &mut self,
        g: &Digraph,
        host: &[usize],
        depth: usize,
        pmct: &Pmct,
        split: &NeighbourhoodSplit,
        s: &VertexSet,
        omega: usize,
        k: usize,
    ) -> Result<NiceColouring, DecompositionError> {
        let gamma = self.pair.bound(omega - 1);
        let w = omega as u128;
        let kk = k as u128;
        let mut pal = Palette {
            colors: vec![UNSET; g.n()],
            next: 0,
            spans: Vec::new(),
        };
        let mut assigned = pmct.k.clone();

        pal.open("K", w);
        for (i, v) in pmct.k.iter().enumerate() {
            pal.colors[v] = i;
        }
        pal.advance(pmct.k.len());

        pal.open("N(K)", w.saturating_mul(gamma));
        let nk = g.neighbors(&pmct.k).intersection(s);
        for kv in pmct.k.iter() {
            let part = g
                .neighbors(&VertexSet::singleton(kv))
                .intersection(&nk)
                .difference(&assigned);
            let (cols, width) = self.colour_subset(g, host, &part, depth)?;
            pal.put(&part, &cols, width);
            assigned = assigned.union(&part);
        }

        let (mut case, mut layers, mut modulus) = (None, Vec::new(), None);
        if !pmct.path.is_empty() {
            let path = &pmct.path;
            pal.open("P", 2);
            let mut used = 0;
            for (i, &v) in path.iter().enumerate() {
                if !assigned.contains(v) {
                    pal.colors[v] = pal.next + i % 2;
                    used = used.max(i % 2 + 1);
                }
            }
            pal.advance(used);
            assigned = assigned.union(&path.iter().copied().collect());

            pal.open("N(Q)", gamma.saturating_mul(4));
            let ends: Vec<usize> = if path.len() <= 4 {
                pmct.interior().to_vec()
            } else {
                vec![path[1], path[path.len() - 2]]
            };
            for &q in &ends {
                let part = g
                    .neighbors(&VertexSet::singleton(q))
                    .intersection(s)
                    .difference(&assigned);
                let (cols, width) = self.colour_subset(g, host, &part, depth)?;
                pal.put(&part, &cols, width);
                assigned = assigned.union(&part);
            }

            if path.len() >= 5 {
                let inner = &path[2..path.len() - 2];
                let fl = partition_first_last(g, inner, &assigned);
                let bc = self.pair.case();
                case = Some(bc);
                let nice_budget = gamma.saturating_mul(2).saturating_mul(kk + 1);
                let (first, second) = match bc {
                    BroomCase::OneTwo => ((Side::AMinus, &fl.a_minus), (Side::APlus, &fl.a_plus)),
                    BroomCase::ThreeFour => ((Side::BMinus, &fl.b_minus), (Side::BPlus, &fl.b_plus)),
                    BroomCase::TwoThree => ((Side::APlus, &fl.a_plus), (Side::BMinus, &fl.b_minus)),
                    BroomCase::OneFour => ((Side::AMinus, &fl.a_minus), (Side::BPlus, &fl.b_plus)),
                };
                let second_set = second.1.difference(first.1);
                for (side, set, name) in [
                    (first.0, first.1.clone(), side_name(first.0)),
                    (second.0, second_set, side_name(second.0)),
                ] {
                    pal.open(name, nice_budget);
                    let (cols, width) = self.colour_path_side(g, host, depth, &set, side, inner, k)?;
                    pal.put(&set, &cols, width);
                    assigned = assigned.union(&set);
                }
                let around = fl.a_minus.union(&fl.a_plus);
                let remainder = around.difference(&assigned);
                match bc {
                    BroomCase::TwoThree => {
                        pal.open("C'", gamma.saturating_mul(3));
                        layers = layer_decomposition(g, inner, &remainder, LayerMode::FirstIn)?;
                        modulus = Some(3);
                        self.colour_residues(g, host, depth, &layers, 3, None, &mut pal)?;
                    }
                    BroomCase::OneFour => {
                        pal.open("C'", gamma.saturating_mul(15));
                        layers = layer_decomposition(g, inner, &remainder, LayerMode::FirstOut)?;
                        modulus = Some(5);
                        self.colour_residues(g, host, depth, &layers, 5, Some(omega), &mut pal)?;
                    }
                    _ => {
                        if !remainder.is_empty() {
                            return Err(DecompositionError::ColorBudgetBug(
                                "first/last split left vertices uncovered".into(),
                            ));
                        }
                    }
                }
                assigned = assigned.union(&remainder);
            }
        }

        pal.open("Y", gamma.saturating_mul(2).saturating_mul(kk + 1));
        let y = split.y.intersection(s).difference(&assigned);
        if !y.is_empty() {
            let (cols, width) = self.colour_y(g, host, depth, &y, &split.x, k)?;
            pal.put(&y, &cols, width);
            assigned = assigned.union(&y);
        }

        if let Some(v) = s.difference(&assigned).iter().next() {
            return Err(DecompositionError::ColorBudgetBug(format!(
                "vertex {} of the nice set was not coloured",
                host[v]
            )));
        }
        Ok(NiceColouring {
            colors: pal.colors,
            count: pal.next,
            spans: pal.spans,
            case,
            layers,
            modulus,
        })
    }

    /// Folds `layers` into residue classes, each with its own palette.
    /// Layers of one class share the palette; with `ends` set, a class is
    /// instead split into tournament sinks, sources and the rest, each with
    /// a disjoint sub-palette.
    #[allow(clippy::too_many_arguments)]
    fn colour_residues(
        &mut self,
        g: &Digraph,
        host: &[usize],
        depth: usize,
        layers: &[VertexSet],
        modulus: usize,
        ends: Option<usize>,
        pal: &mut Palette,
    ) -> Result<(), DecompositionError> {
        for (r, class) in residue_classes(layers, modulus).into_iter().enumerate() {
            if class.is_empty() {
                continue;
            }
            let mut width = 0;
            let mut class_cols = vec![UNSET; g.n()];
            match ends {
                None => {
                    for layer in layers.iter().skip(r).step_by(modulus) {
                        let (cols, w) = self.colour_subset(g, host, layer, depth)?;
                        for v in layer.iter() {
                            class_cols[v] = cols[v];
                        }
                        width = width.max(w);
                    }
                }
                Some(omega) => {
                    for piece in split_by_tournament_ends(g, &class, omega) {
                        let (cols, w) = self.colour_subset(g, host, &piece, depth)?;
                        for v in piece.iter() {
                            class_cols[v] = width + cols[v];
                        }
                        width += w;
                    }
                }
            }
            let sub = induced(g, &class);
            let local: Vec<usize> = sub.map.iter().map(|&v| class_cols[v]).collect();
            if !verify_dicoloring(&sub.graph, &Dicoloring::new(local))? {
                return Err(DecompositionError::ColorBudgetBug(format!(
                    "a residue class modulo {modulus} has a monochromatic cycle"
                )));
            }
            pal.put(&class, &class_cols, width);
        }
        Ok(())
    }

    /// Colours one of `A±`/`B±` by nice sets `N±(vi) ∩ ·`, taking the first
    /// `i` for `A` and the last for `B`.
    #[allow(clippy::too_many_arguments)]
    fn colour_path_side(
        &mut self,
        g: &Digraph,
        host: &[usize],
        depth: usize,
        set: &VertexSet,
        side: Side,
        path: &[usize],
        k: usize,
    ) -> Result<(Vec<usize>, usize), DecompositionError> {
        let mut out = vec![UNSET; g.n()];
        if set.is_empty() {
            return Ok((out, 0));
        }
        let count = peel_and_combine(
            g,
            set,
            k,
            |alive| {
                let nbhd = |p: usize| {
                    let one = VertexSet::singleton(p);
                    match side {
                        Side::AMinus | Side::BMinus => g.out_neighbors(&one),
                        Side::APlus | Side::BPlus => g.in_neighbors(&one),
                    }
                    .intersection(alive)
                };
                let hit = match side {
                    Side::AMinus | Side::APlus => path.iter().map(|&p| nbhd(p)).find(|n| !n.is_empty()),
                    Side::BMinus | Side::BPlus => path.iter().rev().map(|&p| nbhd(p)).find(|n| !n.is_empty()),
                };
                let chosen = hit.ok_or_else(|| DecompositionError::UncoveredVertex(host[alive.as_slice()[0]]))?;
                self.peel(g, host, depth, alive, &chosen, k)
            },
            &mut out,
        )?;
        Ok((out, count))
    }

    /// Colours `Y` by nice sets `N(x) ∩ Y′` with `x` the first vertex of `X`
    /// that has a neighbour left.
    fn colour_y(
        &mut self,
        g: &Digraph,
        host: &[usize],
        depth: usize,
        y: &VertexSet,
        x: &VertexSet,
        k: usize,
    ) -> Result<(Vec<usize>, usize), DecompositionError> {
        let mut out = vec![UNSET; g.n()];
        let count = peel_and_combine(
            g,
            y,
            k,
            |alive| {
                let chosen = x
                    .iter()
                    .map(|xv| g.neighbors(&VertexSet::singleton(xv)).intersection(alive))
                    .find(|n| !n.is_empty())
                    .ok_or_else(|| DecompositionError::UncoveredVertex(host[alive.as_slice()[0]]))?;
                self.peel(g, host, depth, alive, &chosen, k)
            },
            &mut out,
        )?;
        Ok((out, count))
    }

    fn peel(
        &mut self,
        g: &Digraph,
        host: &[usize],
        depth: usize,
        alive: &VertexSet,
        chosen: &VertexSet,
        k: usize,
    ) -> Result<Peel, DecompositionError> {
        let cert = nice_certificate(g, alive, chosen, k).map_err(|e| match e {
            DecompositionError::NicenessViolated {
                vertex,
                outside_in,
                outside_out,
            } => DecompositionError::NicenessViolated {
                vertex: host[vertex],
                outside_in: lift_host(host, &outside_in),
                outside_out: lift_host(host, &outside_out),
            },
            e => e,
        })?;
        let (colors, count) = self.colour_subset(g, host, chosen, depth)?;
        Ok(Peel { cert, colors, count })
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::AMinus => "A-",
        Side::APlus => "A+",
        Side::BMinus => "B-",
        Side::BPlus => "B+",
    }
}

/// Sinks of maximum tournaments in `class`, then their sources, then the
/// rest.
fn split_by_tournament_ends(g: &Digraph, class: &VertexSet, omega: usize) -> Vec<VertexSet> {
    let sub = induced(g, class);
    let (mut sinks, mut sources) = (VertexSet::new(), VertexSet::new());
    for t in CliqueRows::underlying(&sub.graph).cliques_of_size(omega) {
        let (si, so) = sinks_and_sources(g, &sub.lift(&t));
        sinks = sinks.union(&si);
        sources = sources.union(&so);
    }
    let sources = sources.difference(&sinks);
    let rest = class.difference(&sinks).difference(&sources);
    vec![sinks, sources, rest]
}
