//! Shift graphs and the shift-digraph families built on them.
//!
//! Vertices are strictly increasing `k`-tuples over `1..=n`, numbered in
//! lexicographic order. With `h = (k + 1) / 2` (so the first and last `h`
//! positions overlap in exactly one coordinate), the arc classes are:
//!
//! - `X`: `(a1, …, ak) → (a2, …, ak, •)`, the shift orientation;
//! - `Y`: `(a1, …, ah, •, …) → (•, …, a1, …, ah)`;
//! - `Z1`: tuples sharing their first `h` coordinates, oriented along a total
//!   order of the vertices;
//! - `Z2`: the same for the last `h` coordinates.
//!
//! [`build_f7`] is the `k = 7` family and [`build_f5`] the `k = 5` one.

mod verify;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::io::{parse_edge_list_document, write_edge_list_with_comments, ParseError};
use crate::digraph::{Builder, Digraph};

pub use verify::{
    dichromatic_lower_bound_via_gallai_roy, neighbourhood_groups, verify_neighborhood_tournament_partition,
    verify_no_cyclic_triangle, verify_triangle_profile_f5, GallaiRoyLowerBound, NeighbourhoodGroups,
    NeighbourhoodPartition, TriangleWitness,
};

/// Largest vertex count a construction may have. Matches the edge-list limit.
pub const MAX_CONSTRUCTION_VERTICES: usize = crate::digraph::io::MAX_VERTICES;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bad labelled file: {0}")]
    Labels(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcClass {
    X,
    Y,
    Z1,
    Z2,
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::X => "X",
            Self::Y => "Y",
            Self::Z1 => "Z1",
            Self::Z2 => "Z2",
        })
    }
}

impl FromStr for ArcClass {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" => Ok(Self::X),
            "Y" => Ok(Self::Y),
            "Z1" => Ok(Self::Z1),
            "Z2" => Ok(Self::Z2),
            _ => Err(ConstructionError::Labels(format!("unknown arc class {s:?}"))),
        }
    }
}

/// The total order used to orient `Z1` and `Z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZOrder {
    /// Lexicographic on tuples, which is vertex-id order.
    Lex,
    /// A uniformly random permutation drawn from a ChaCha8 stream.
    Random(u64),
}

impl ZOrder {
    /// `rank[v]`: position of `v` in the order.
    pub fn ranks(self, n: usize) -> Vec<usize> {
        match self {
            Self::Lex => (0..n).collect(),
            Self::Random(seed) => {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                let mut rank = vec![0; n];
                for (i, &v) in perm.iter().enumerate() {
                    rank[v] = i;
                }
                rank
            }
        }
    }
}

impl fmt::Display for ZOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lex => f.write_str("lex"),
            Self::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for ZOrder {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "lex" {
            return Ok(Self::Lex);
        }
        s.strip_prefix("random:")
            .and_then(|seed| seed.parse().ok())
            .map(Self::Random)
            .ok_or_else(|| ConstructionError::BadParameter(format!("order must be lex or random:SEED, got {s:?}")))
    }
}

/// A construction with its tuple labels and per-arc classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub k: usize,
    pub n: usize,
    pub order: ZOrder,
    pub graph: Digraph,
    /// `labels[v]`: the 1-based tuple of vertex `v`.
    pub labels: Vec<Vec<u16>>,
    pub classes: HashMap<(usize, usize), ArcClass>,
}

impl LabeledConstruction {
    pub fn class_of(&self, u: usize, v: usize) -> Option<ArcClass> {
        self.classes.get(&(u, v)).copied()
    }

    /// Arcs of one class, lexicographically.
    pub fn arcs_of(&self, class: ArcClass) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> = self
            .classes
            .iter()
            .filter(|(_, &c)| c == class)
            .map(|(&a, _)| a)
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn class_count(&self, class: ArcClass) -> usize {
        self.classes.values().filter(|&&c| c == class).count()
    }

    /// The subdigraph formed by one class of arcs.
    pub fn class_subgraph(&self, class: ArcClass) -> Digraph {
        Digraph::from_arcs(self.graph.n(), self.arcs_of(class)).expect("subgraph of a simple digraph")
    }

    /// `m(v) = a_h`, the middle coordinate.
    pub fn m(&self, v: usize) -> u16 {
        self.labels[v][overlap(self.k) - 1]
    }

    /// Labelled edge list: `#params`, `#label` and `#class` comment lines
    /// followed by the plain edge list.
    pub fn to_edge_list(&self) -> String {
        let mut comments = vec![format!("params k={} n={} order={}", self.k, self.n, self.order)];
        for (v, t) in self.labels.iter().enumerate() {
            let coords: Vec<String> = t.iter().map(u16::to_string).collect();
            comments.push(format!("label {v} {}", coords.join(" ")));
        }
        for (u, v) in self.graph.arcs() {
            comments.push(format!("class {u} {v} {}", self.classes[&(u, v)]));
        }
        write_edge_list_with_comments(&self.graph, &comments)
    }

    /// Reads the format written by [`to_edge_list`](Self::to_edge_list). The
    /// labels and classes are checked for shape, not against the arc rules;
    /// use [`matches_rules`](Self::matches_rules) for that.
    pub fn from_edge_list(text: &str) -> Result<Self, ConstructionError> {
        let doc = parse_edge_list_document(text)?;
        let bad = |m: String| ConstructionError::Labels(m);
        let mut params: Option<(usize, usize, ZOrder)> = None;
        let mut labels: Vec<Option<Vec<u16>>> = vec![None; doc.graph.n()];
        let mut classes = HashMap::new();
        for c in &doc.comments {
            let mut words = c.split_whitespace();
            match words.next() {
                Some("params") => {
                    let (mut k, mut n, mut order) = (None, None, None);
                    for w in words {
                        match w.split_once('=') {
                            Some(("k", v)) => k = v.parse().ok(),
                            Some(("n", v)) => n = v.parse().ok(),
                            Some(("order", v)) => order = v.parse().ok(),
                            _ => return Err(bad(format!("bad params entry {w:?}"))),
                        }
                    }
                    match (k, n, order) {
                        (Some(k), Some(n), Some(o)) => params = Some((k, n, o)),
                        _ => return Err(bad("params needs k, n and order".into())),
                    }
                }
                Some("label") => {
                    let nums: Option<Vec<usize>> = words.map(|w| w.parse().ok()).collect();
                    let nums = nums.ok_or_else(|| bad(format!("bad label line {c:?}")))?;
                    let (&v, tuple) = nums.split_first().ok_or_else(|| bad("empty label line".into()))?;
                    let slot = labels
                        .get_mut(v)
                        .ok_or_else(|| bad(format!("label for missing vertex {v}")))?;
                    let tuple: Option<Vec<u16>> = tuple.iter().map(|&x| u16::try_from(x).ok()).collect();
                    if slot
                        .replace(tuple.ok_or_else(|| bad("label coordinate too large".into()))?)
                        .is_some()
                    {
                        return Err(bad(format!("vertex {v} labelled twice")));
                    }
                }
                Some("class") => {
                    let parts: Vec<&str> = words.collect();
                    let [u, v, cls] = parts[..] else {
                        return Err(bad(format!("bad class line {c:?}")));
                    };
                    let (u, v): (usize, usize) = match (u.parse(), v.parse()) {
                        (Ok(u), Ok(v)) => (u, v),
                        _ => return Err(bad(format!("bad class line {c:?}"))),
                    };
                    if !doc.graph.has_arc(u, v) {
                        return Err(bad(format!("class given for non-arc ({u}, {v})")));
                    }
                    if classes.insert((u, v), cls.parse()?).is_some() {
                        return Err(bad(format!("arc ({u}, {v}) classified twice")));
                    }
                }
                _ => {}
            }
        }
        let (k, n, order) = params.ok_or_else(|| bad("missing params line".into()))?;
        let labels: Option<Vec<Vec<u16>>> = labels.into_iter().collect();
        let labels = labels.ok_or_else(|| bad("some vertex has no label".into()))?;
        for t in &labels {
            let increasing = t.windows(2).all(|w| w[0] < w[1]);
            if t.len() != k || !increasing || t.iter().any(|&x| x == 0 || usize::from(x) > n) {
                return Err(bad(format!("label {t:?} is not an increasing {k}-tuple over 1..={n}")));
            }
        }
        if classes.len() != doc.graph.arc_count() {
            return Err(bad("some arc has no class".into()));
        }
        Ok(Self {
            k,
            n,
            order,
            graph: doc.graph,
            labels,
            classes,
        })
    }

    /// `true` iff this is exactly the construction the arc rules produce for
    /// its `(k, n, order)`, classes included.
    pub fn matches_rules(&self) -> bool {
        let rebuilt = match self
            .classes
            .values()
            .any(|c| matches!(c, ArcClass::Y | ArcClass::Z1 | ArcClass::Z2))
        {
            true => build_family(self.k, self.n, self.order),
            false => shift_digraph(self.k, self.n),
        };
        rebuilt.is_ok_and(|r| r == *self)
    }
}

fn overlap(k: usize) -> usize {
    k.div_ceil(2)
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for i in 0..k.min(n.saturating_sub(k)) {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(if k > n { 0 } else { acc })
}

/// All increasing `k`-tuples over `1..=n`, lexicographically.
fn tuples(k: usize, n: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = (1..=k as u16).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Rightmost coordinate that can still grow.
        let Some(i) = (0..k).rev().find(|&i| usize::from(cur[i]) < n - (k - 1 - i)) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn check_params(k: usize, n: usize) -> Result<(), ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::BadParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if n < k {
        return Err(ConstructionError::BadParameter(format!(
            "n must be at least k = {k}, got {n}"
        )));
    }
    if n > usize::from(u16::MAX) {
        return Err(ConstructionError::BadParameter(format!("n = {n} is too large")));
    }
    match binomial(n, k) {
        Some(c) if c <= MAX_CONSTRUCTION_VERTICES => Ok(()),
        _ => Err(ConstructionError::BadParameter(format!(
            "C({n}, {k}) vertices exceeds the limit of {MAX_CONSTRUCTION_VERTICES}"
        ))),
    }
}

/// Number of vertices of any construction on `k`-tuples over `1..=n`, or
/// `None` on overflow.
pub fn vertex_count(k: usize, n: usize) -> Option<usize> {
    binomial(n, k)
}

struct Index {
    labels: Vec<Vec<u16>>,
    id: HashMap<Vec<u16>, usize>,
}

impl Index {
    fn new(k: usize, n: usize) -> Self {
        let labels = tuples(k, n);
        let id = labels.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Self { labels, id }
    }
}

fn shift_arcs(idx: &Index, n: usize) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for (u, t) in idx.labels.iter().enumerate() {
        let last = *t.last().expect("k >= 2");
        for x in last + 1..=n as u16 {
            let mut s: Vec<u16> = t[1..].to_vec();
            s.push(x);
            arcs.push((u, idx.id[&s]));
        }
    }
    arcs
}

/// The `k`-tuple shift graph, as its shift orientation (use the underlying
/// graph). Requires `k ≥ 2` and `n ≥ k`.
pub fn shift_graph(k: usize, n: usize) -> Result<Digraph, ConstructionError> {
    shift_digraph(k, n).map(|c| c.graph)
}

/// The shift orientation with its arcs labelled `X`.
pub fn shift_digraph(k: usize, n: usize) -> Result<LabeledConstruction, ConstructionError> {
    check_params(k, n)?;
    let idx = Index::new(k, n);
    let arcs = shift_arcs(&idx, n);
    let graph = Digraph::from_arcs(idx.labels.len(), arcs.iter().copied()).expect("shift arcs are simple");
    Ok(LabeledConstruction {
        k,
        n,
        order: ZOrder::Lex,
        graph,
        labels: idx.labels,
        classes: arcs.into_iter().map(|a| (a, ArcClass::X)).collect(),
    })
}

fn build_family(k: usize, n: usize, order: ZOrder) -> Result<LabeledConstruction, ConstructionError> {
    check_params(k, n)?;
    let h = overlap(k);
    let idx = Index::new(k, n);
    let nv = idx.labels.len();
    let rank = order.ranks(nv);
    let mut classes: HashMap<(usize, usize), ArcClass> = HashMap::new();
    let mut add = |u: usize, v: usize, c: ArcClass| {
        classes.entry((u, v)).or_insert(c);
    };

    for (u, v) in shift_arcs(&idx, n) {
        add(u, v, ArcClass::X);
    }

    let mut by_prefix: HashMap<&[u16], Vec<usize>> = HashMap::new();
    let mut by_suffix: HashMap<&[u16], Vec<usize>> = HashMap::new();
    for (v, t) in idx.labels.iter().enumerate() {
        by_prefix.entry(&t[..h]).or_default().push(v);
        by_suffix.entry(&t[k - h..]).or_default().push(v);
    }
    // Y: the prefix of the tail equals the suffix of the head.
    for (suffix, heads) in &by_suffix {
        if let Some(tails) = by_prefix.get(suffix) {
            for &u in tails {
                for &v in heads {
                    add(u, v, ArcClass::Y);
                }
            }
        }
    }
    for (groups, class) in [(&by_prefix, ArcClass::Z1), (&by_suffix, ArcClass::Z2)] {
        for members in groups.values() {
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    let (a, b) = if rank[u] < rank[v] { (u, v) } else { (v, u) };
                    add(a, b, class);
                }
            }
        }
    }

    let mut b = Builder::new(nv);
    let mut arcs: Vec<_> = classes.keys().copied().collect();
    arcs.sort_unstable();
    for (u, v) in arcs {
        b.add_arc(u, v).expect("arc classes never produce opposite arcs");
    }
    Ok(LabeledConstruction {
        k,
        n,
        order,
        graph: b.finish(),
        labels: idx.labels,
        classes,
    })
}

/// The 7-tuple family (`n ≥ 8`).
pub fn build_f7(n: usize, order: ZOrder) -> Result<LabeledConstruction, ConstructionError> {
    if n < 8 {
        return Err(ConstructionError::BadParameter(format!(
            "n must be at least 8, got {n}"
        )));
    }
    build_family(7, n, order)
}

/// The 5-tuple family (`n ≥ 6`).
pub fn build_f5(n: usize, order: ZOrder) -> Result<LabeledConstruction, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::BadParameter(format!(
            "n must be at least 6, got {n}"
        )));
    }
    build_family(5, n, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{is_acyclic, underlying_clique_number};

    #[test]
    fn shift_graph_2_4() {
        let g = shift_graph(2, 4).unwrap();
        assert_eq!(g.n(), 6);
        // (1,2)(1,3)(1,4)(2,3)(2,4)(3,4)
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 3), (0, 4), (1, 5), (3, 5)]);
        assert_eq!(shift_graph(2, 5).unwrap().n(), 10);
    }

    #[test]
    fn shift_digraphs_are_single_arcs_at_minimum() {
        for (k, n) in [(7, 8), (5, 6)] {
            let c = shift_digraph(k, n).unwrap();
            assert_eq!(c.graph.n(), n);
            assert_eq!(c.graph.arc_count(), 1);
            assert!(is_acyclic(&c.graph));
        }
    }

    #[test]
    fn f7_8_counts() {
        let c = build_f7(8, ZOrder::Lex).unwrap();
        assert_eq!(c.graph.n(), 8);
        let counts: Vec<usize> = [ArcClass::X, ArcClass::Y, ArcClass::Z1, ArcClass::Z2]
            .iter()
            .map(|&cl| c.class_count(cl))
            .collect();
        assert_eq!(counts, vec![1, 0, 6, 6]);
        assert_eq!(c.graph.arc_count(), 13);
        assert_eq!(underlying_clique_number(&c.graph), 4);
    }

    #[test]
    fn f5_6_counts() {
        let c = build_f5(6, ZOrder::Lex).unwrap();
        let counts: Vec<usize> = [ArcClass::X, ArcClass::Y, ArcClass::Z1, ArcClass::Z2]
            .iter()
            .map(|&cl| c.class_count(cl))
            .collect();
        assert_eq!(counts, vec![1, 0, 3, 3]);
    }

    #[test]
    fn parameters_are_checked() {
        assert!(build_f7(7, ZOrder::Lex).is_err());
        assert!(build_f5(5, ZOrder::Lex).is_err());
        assert!(shift_graph(1, 4).is_err());
        assert!(shift_graph(3, 2).is_err());
        assert!(shift_graph(7, 60).is_err());
    }

    #[test]
    fn labelled_round_trip() {
        for c in [
            build_f5(7, ZOrder::Random(3)).unwrap(),
            build_f7(9, ZOrder::Lex).unwrap(),
            shift_digraph(3, 6).unwrap(),
        ] {
            let text = c.to_edge_list();
            let back = LabeledConstruction::from_edge_list(&text).unwrap();
            assert_eq!(back, c);
            assert!(back.matches_rules());
            assert_eq!(back.to_edge_list(), text);
        }
    }

    #[test]
    fn tampered_file_fails_rules() {
        let c = build_f5(7, ZOrder::Lex).unwrap();
        let text = c.to_edge_list().replacen(" X\n", " Y\n", 1);
        let back = LabeledConstruction::from_edge_list(&text).unwrap();
        assert!(!back.matches_rules());
    }

    #[test]
    fn orders_parse() {
        assert_eq!("lex".parse::<ZOrder>().unwrap(), ZOrder::Lex);
        assert_eq!("random:42".parse::<ZOrder>().unwrap(), ZOrder::Random(42));
        assert!("random:".parse::<ZOrder>().is_err());
    }
}
