//! Named small digraphs, embedding search and the hero grammar.
//!
//! Every pattern is built from a [`PatternTag`], which has a compact string
//! form used on the command line:
//!
//! | tag | digraph |
//! |-----|---------|
//! | `tt:5` | transitive tournament, `i → j` for `i < j` |
//! | `dipath:4` | `0 → 1 → 2 → 3` |
//! | `path:->-><-` | oriented path, one arrow per arc |
//! | `star:in=2,out=3` | centre 0, in-leaves first, then out-leaves |
//! | `broom:r=3,v12=fwd,v23=bwd,leaf=in` | `v1 v2 v3 w1..wr` as vertices `0..r+3` |
//! | `c3`, `it`, `ot` | cyclic, in- and out-triangle (apex is vertex 3) |
//! | `empty:3` | `3K1` |
//! | `plus:2,c3` | `2K1 + C3`, isolated vertices first |
//! | `join:A,B` | `A ⇒ B` |
//! | `delta:A,B,C` | `Δ(A, B, C)` |
//!
//! Inside `join`, `plus` and `delta` a bare integer `m` stands for `TT_m`,
//! arguments may be parenthesised, and the last argument takes the rest of
//! the string.

mod broom;
mod hero;
mod matcher;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::digraph::{
    copies, cyclic_triangle, directed_path, disjoint_union, join_forward, reverse, transitive_tournament,
    triangle_join, Digraph,
};

pub use broom::{classify_broom_type, recognize_broom, BroomType};
pub use hero::{is_hero_in_tournaments, verify_hero_derivation, HeroDerivation};
pub use matcher::{find_induced, find_subgraph, first_violation, is_free, Embedding, MatchMode, Violation};

/// Patterns larger than this are rejected when built.
pub const MAX_PATTERN_VERTICES: usize = 256;

const MAX_NESTING: usize = 32;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse pattern tag {tag:?}: {reason}")]
    Parse { tag: String, reason: String },
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("not a tournament: {u} and {v} are non-adjacent")]
    NotATournament { u: usize, v: usize },
    #[error("not a valid broom orientation: {0}")]
    NotValidOrientation(String),
}

/// Direction of a single arc relative to the listed vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    /// Earlier vertex to later vertex.
    Fwd,
    Bwd,
}

/// Direction of the broom leaves relative to `v3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafDir {
    /// `w → v3`.
    In,
    /// `v3 → w`.
    Out,
}

/// An orientation of `B_r` with all leaves oriented the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BroomSpec {
    pub r: usize,
    pub v12: Dir,
    pub v23: Dir,
    pub leaf: LeafDir,
}

impl BroomSpec {
    /// The same broom with every arc reversed.
    pub fn reversed(self) -> Self {
        let flip = |d| match d {
            Dir::Fwd => Dir::Bwd,
            Dir::Bwd => Dir::Fwd,
        };
        Self {
            r: self.r,
            v12: flip(self.v12),
            v23: flip(self.v23),
            leaf: match self.leaf {
                LeafDir::In => LeafDir::Out,
                LeafDir::Out => LeafDir::In,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternTag {
    Tt(usize),
    DirPath(usize),
    OrientedPath(Vec<Dir>),
    Star {
        in_leaves: usize,
        out_leaves: usize,
    },
    Broom(BroomSpec),
    CyclicTriangle,
    InTriangle,
    OutTriangle,
    Empty(usize),
    Rk1Plus {
        r: usize,
        inner: Box<PatternTag>,
    },
    Join(Box<PatternTag>, Box<PatternTag>),
    Delta(Box<PatternTag>, Box<PatternTag>, Box<PatternTag>),
    /// A digraph given directly rather than by construction.
    Raw,
}

/// A digraph together with the tag it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub graph: Digraph,
    pub tag: PatternTag,
}

impl Pattern {
    pub fn raw(graph: Digraph) -> Self {
        Self {
            graph,
            tag: PatternTag::Raw,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

impl AsRef<Digraph> for Pattern {
    fn as_ref(&self) -> &Digraph {
        &self.graph
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        build(&s.parse()?)
    }
}

impl PatternTag {
    /// Vertex count, or `None` on overflow.
    pub fn vertex_count(&self) -> Option<usize> {
        use PatternTag::*;
        match self {
            Tt(k) | DirPath(k) | Empty(k) => Some(*k),
            OrientedPath(arrows) => arrows.len().checked_add(1),
            Star { in_leaves, out_leaves } => in_leaves.checked_add(*out_leaves)?.checked_add(1),
            Broom(b) => b.r.checked_add(3),
            CyclicTriangle => Some(3),
            InTriangle | OutTriangle => Some(4),
            Rk1Plus { r, inner } => r.checked_add(inner.vertex_count()?),
            Join(a, b) => a.vertex_count()?.checked_add(b.vertex_count()?),
            Delta(a, b, c) => a
                .vertex_count()?
                .checked_add(b.vertex_count()?)?
                .checked_add(c.vertex_count()?),
            Raw => None,
        }
    }
}

/// Builds the digraph for `tag` with the vertex numbering documented on the
/// module.
pub fn build(tag: &PatternTag) -> Result<Pattern, PatternError> {
    match tag.vertex_count() {
        Some(n) if n <= MAX_PATTERN_VERTICES => {}
        Some(n) => {
            return Err(PatternError::BadParameter(format!(
                "{n} vertices exceeds the pattern limit of {MAX_PATTERN_VERTICES}"
            )))
        }
        None if *tag == PatternTag::Raw => {
            return Err(PatternError::BadParameter("raw patterns carry their own graph".into()))
        }
        None => return Err(PatternError::BadParameter("pattern size overflows".into())),
    }
    Ok(Pattern {
        graph: build_graph(tag)?,
        tag: tag.clone(),
    })
}

fn positive(k: usize, what: &str) -> Result<usize, PatternError> {
    if k == 0 {
        Err(PatternError::BadParameter(format!("{what} must be positive")))
    } else {
        Ok(k)
    }
}

fn build_graph(tag: &PatternTag) -> Result<Digraph, PatternError> {
    use PatternTag::*;
    let simple = "pattern constructions are simple";
    Ok(match tag {
        Tt(k) => transitive_tournament(positive(*k, "tt size")?),
        DirPath(m) => directed_path(positive(*m, "dipath length")?),
        OrientedPath(arrows) => Digraph::from_arcs(
            arrows.len() + 1,
            arrows.iter().enumerate().map(|(i, d)| match d {
                Dir::Fwd => (i, i + 1),
                Dir::Bwd => (i + 1, i),
            }),
        )
        .expect(simple),
        Star { in_leaves, out_leaves } => Digraph::from_arcs(
            1 + in_leaves + out_leaves,
            (1..=*in_leaves)
                .map(|w| (w, 0))
                .chain((in_leaves + 1..=in_leaves + out_leaves).map(|w| (0, w))),
        )
        .expect(simple),
        Broom(b) => {
            positive(b.r, "broom r")?;
            let orient = |d: Dir, u, v| match d {
                Dir::Fwd => (u, v),
                Dir::Bwd => (v, u),
            };
            let leaves = (3..3 + b.r).map(|w| match b.leaf {
                LeafDir::In => (w, 2),
                LeafDir::Out => (2, w),
            });
            Digraph::from_arcs(
                3 + b.r,
                [orient(b.v12, 0, 1), orient(b.v23, 1, 2)].into_iter().chain(leaves),
            )
            .expect(simple)
        }
        CyclicTriangle => cyclic_triangle(),
        InTriangle => in_triangle(),
        OutTriangle => reverse(&in_triangle()),
        Empty(r) => Digraph::empty(positive(*r, "empty size")?),
        Rk1Plus { r, inner } => disjoint_union(&copies(*r, &Digraph::empty(1)), &build_graph(inner)?),
        Join(a, b) => join_forward(&build_graph(a)?, &build_graph(b)?),
        Delta(a, b, c) => triangle_join(&build_graph(a)?, &build_graph(b)?, &build_graph(c)?),
        Raw => return Err(PatternError::BadParameter("raw patterns carry their own graph".into())),
    })
}

/// Cyclic triangle `0 → 1 → 2 → 0` with vertex 3 receiving an arc from each.
fn in_triangle() -> Digraph {
    Digraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]).expect("in-triangle is simple")
}

/// All six oriented stars with `degree` leaves.
pub fn stars_of_degree(degree: usize) -> Vec<Pattern> {
    (0..=degree)
        .map(|i| {
            build(&PatternTag::Star {
                in_leaves: i,
                out_leaves: degree - i,
            })
            .expect("star within limits")
        })
        .collect()
}

// ---------------------------------------------------------------- parsing

impl FromStr for PatternTag {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tag(s, 0)
    }
}

fn parse_err(tag: &str, reason: impl Into<String>) -> PatternError {
    PatternError::Parse {
        tag: tag.to_string(),
        reason: reason.into(),
    }
}

fn parse_tag(s: &str, depth: usize) -> Result<PatternTag, PatternError> {
    if depth > MAX_NESTING {
        return Err(parse_err(s, "nesting too deep"));
    }
    let s = s.trim();
    if let Some(inner) = strip_outer_parens(s) {
        return parse_tag(inner, depth + 1);
    }
    if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(PatternTag::Tt(parse_num(s, s)?));
    }
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    let args = args.trim();
    let no_args = |t: PatternTag| {
        if args.is_empty() {
            Ok(t)
        } else {
            Err(parse_err(s, "takes no arguments"))
        }
    };
    match name.trim() {
        "tt" => Ok(PatternTag::Tt(parse_num(s, args)?)),
        "dipath" => Ok(PatternTag::DirPath(parse_num(s, args)?)),
        "empty" => Ok(PatternTag::Empty(parse_num(s, args)?)),
        "path" => parse_arrows(s, args).map(PatternTag::OrientedPath),
        "star" => parse_star(s, args),
        "broom" => parse_broom(s, args).map(PatternTag::Broom),
        "c3" => no_args(PatternTag::CyclicTriangle),
        "it" => no_args(PatternTag::InTriangle),
        "ot" => no_args(PatternTag::OutTriangle),
        "plus" => {
            let [r, inner] = split_args::<2>(s, args)?;
            Ok(PatternTag::Rk1Plus {
                r: parse_num(s, r)?,
                inner: Box::new(parse_tag(inner, depth + 1)?),
            })
        }
        "join" => {
            let [a, b] = split_args::<2>(s, args)?;
            Ok(PatternTag::Join(
                Box::new(parse_tag(a, depth + 1)?),
                Box::new(parse_tag(b, depth + 1)?),
            ))
        }
        "delta" => {
            let [a, b, c] = split_args::<3>(s, args)?;
            Ok(PatternTag::Delta(
                Box::new(parse_tag(a, depth + 1)?),
                Box::new(parse_tag(b, depth + 1)?),
                Box::new(parse_tag(c, depth + 1)?),
            ))
        }
        other => Err(parse_err(s, format!("unknown pattern name {other:?}"))),
    }
}

fn parse_num(tag: &str, s: &str) -> Result<usize, PatternError> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(tag, format!("expected a non-negative integer, got {s:?}")))
}

/// `Some(inner)` if `s` is `( inner )` with the outer pair matching.
fn strip_outer_parens(s: &str) -> Option<&str> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    (depth == 0).then_some(inner)
}

/// Splits at the first `N - 1` top-level commas.
fn split_args<'a, const N: usize>(tag: &str, args: &'a str) -> Result<[&'a str; N], PatternError> {
    let mut out = [""; N];
    let mut start = 0;
    let mut depth = 0i32;
    let mut k = 0;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(tag, "unbalanced parentheses"));
                }
            }
            ',' if depth == 0 && k + 1 < N => {
                out[k] = &args[start..i];
                k += 1;
                start = i + 1;
            }
            _ => {}
        }
    }
    if k + 1 != N {
        return Err(parse_err(tag, format!("expected {N} arguments")));
    }
    out[k] = &args[start..];
    if out.iter().any(|a| a.trim().is_empty()) {
        return Err(parse_err(tag, "empty argument"));
    }
    Ok(out)
}

fn parse_arrows(tag: &str, args: &str) -> Result<Vec<Dir>, PatternError> {
    let compact: String = args.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut arrows = Vec::new();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix("->") {
            arrows.push(Dir::Fwd);
            rest = r;
        } else if let Some(r) = rest.strip_prefix("<-") {
            arrows.push(Dir::Bwd);
            rest = r;
        } else {
            return Err(parse_err(tag, "path arrows must be -> or <-"));
        }
    }
    Ok(arrows)
}

fn key_values<'a>(tag: &str, args: &'a str) -> Result<Vec<(&'a str, &'a str)>, PatternError> {
    if args.is_empty() {
        return Ok(Vec::new());
    }
    args.split(',')
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| parse_err(tag, format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn parse_star(tag: &str, args: &str) -> Result<PatternTag, PatternError> {
    let (mut in_leaves, mut out_leaves) = (None, None);
    for (k, v) in key_values(tag, args)? {
        let slot = match k {
            "in" => &mut in_leaves,
            "out" => &mut out_leaves,
            _ => return Err(parse_err(tag, format!("unknown star key {k:?}"))),
        };
        if slot.replace(parse_num(tag, v)?).is_some() {
            return Err(parse_err(tag, format!("repeated key {k:?}")));
        }
    }
    Ok(PatternTag::Star {
        in_leaves: in_leaves.unwrap_or(0),
        out_leaves: out_leaves.unwrap_or(0),
    })
}

fn parse_broom(tag: &str, args: &str) -> Result<BroomSpec, PatternError> {
    let (mut r, mut v12, mut v23, mut leaf) = (None, None, None, None);
    let dir = |v: &str| match v {
        "fwd" => Ok(Dir::Fwd),
        "bwd" => Ok(Dir::Bwd),
        _ => Err(parse_err(tag, format!("expected fwd or bwd, got {v:?}"))),
    };
    for (k, v) in key_values(tag, args)? {
        let dup = match k {
            "r" => r.replace(parse_num(tag, v)?).is_some(),
            "v12" => v12.replace(dir(v)?).is_some(),
            "v23" => v23.replace(dir(v)?).is_some(),
            "leaf" => leaf
                .replace(match v {
                    "in" => LeafDir::In,
                    "out" => LeafDir::Out,
                    _ => return Err(parse_err(tag, format!("expected in or out, got {v:?}"))),
                })
                .is_some(),
            _ => return Err(parse_err(tag, format!("unknown broom key {k:?}"))),
        };
        if dup {
            return Err(parse_err(tag, format!("repeated key {k:?}")));
        }
    }
    let missing = |k: &str| parse_err(tag, format!("missing broom key {k:?}"));
    Ok(BroomSpec {
        r: r.ok_or_else(|| missing("r"))?,
        v12: v12.ok_or_else(|| missing("v12"))?,
        v23: v23.ok_or_else(|| missing("v23"))?,
        leaf: leaf.ok_or_else(|| missing("leaf"))?,
    })
}

// ---------------------------------------------------------------- display

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::Fwd => "fwd",
            Dir::Bwd => "bwd",
        })
    }
}

impl fmt::Display for BroomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leaf = match self.leaf {
            LeafDir::In => "in",
            LeafDir::Out => "out",
        };
        write!(f, "broom:r={},v12={},v23={},leaf={leaf}", self.r, self.v12, self.v23)
    }
}

struct Arg<'a>(&'a PatternTag);

impl fmt::Display for Arg<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let PatternTag::Tt(k) = self.0 {
            return write!(f, "{k}");
        }
        let s = self.0.to_string();
        if s.contains(',') {
            write!(f, "({s})")
        } else {
            f.write_str(&s)
        }
    }
}

impl fmt::Display for PatternTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternTag::*;
        match self {
            Tt(k) => write!(f, "tt:{k}"),
            DirPath(m) => write!(f, "dipath:{m}"),
            OrientedPath(arrows) => {
                f.write_str("path:")?;
                for a in arrows {
                    f.write_str(match a {
                        Dir::Fwd => "->",
                        Dir::Bwd => "<-",
                    })?;
                }
                Ok(())
            }
            Star { in_leaves, out_leaves } => write!(f, "star:in={in_leaves},out={out_leaves}"),
            Broom(b) => write!(f, "{b}"),
            CyclicTriangle => f.write_str("c3"),
            InTriangle => f.write_str("it"),
            OutTriangle => f.write_str("ot"),
            Empty(r) => write!(f, "empty:{r}"),
            Rk1Plus { r, inner } => write!(f, "plus:{r},{}", Arg(inner)),
            Join(a, b) => write!(f, "join:{},{}", Arg(a), Arg(b)),
            Delta(a, b, c) => write!(f, "delta:{},{},{}", Arg(a), Arg(b), Arg(c)),
            Raw => f.write_str("raw"),
        }
    }
}
