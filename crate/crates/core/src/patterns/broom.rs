//! Broom orientation types.
//!
//! Types are keyed on the two path arcs; the leaf direction does not matter.
//!
//! | type | `v1 v2` | `v2 v3` |
//! |------|---------|---------|
//! | 1 | `v1 → v2` | `v2 → v3` |
//! | 2 | `v1 → v2` | `v3 → v2` |
//! | 3 | `v2 → v1` | `v2 → v3` |
//! | 4 | `v2 → v1` | `v3 → v2` |
//!
//! Types 1 and 3 have `v2 → v3`, types 2 and 4 have `v3 → v2`, so two brooms
//! are opposing exactly when one lies in each pair.

use serde::{Deserialize, Serialize};

use super::{BroomSpec, Dir, LeafDir, Pattern, PatternError, PatternTag};
use crate::digraph::Digraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BroomType {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl BroomType {
    pub fn of(spec: &BroomSpec) -> Self {
        match (spec.v12, spec.v23) {
            (Dir::Fwd, Dir::Fwd) => Self::One,
            (Dir::Fwd, Dir::Bwd) => Self::Two,
            (Dir::Bwd, Dir::Fwd) => Self::Three,
            (Dir::Bwd, Dir::Bwd) => Self::Four,
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }

    /// `v2 → v3`.
    pub fn central_forward(self) -> bool {
        matches!(self, Self::One | Self::Three)
    }
}

/// Type of a broom pattern. Raw patterns are read with [`recognize_broom`].
pub fn classify_broom_type(p: &Pattern) -> Result<BroomType, PatternError> {
    match &p.tag {
        PatternTag::Broom(spec) => Ok(BroomType::of(spec)),
        _ => recognize_broom(&p.graph).map(|s| BroomType::of(&s)),
    }
}

/// Reads `d` as a broom with vertices `v1 v2 v3 w1..wr` numbered `0..r+3`.
pub fn recognize_broom(d: &Digraph) -> Result<BroomSpec, PatternError> {
    let bad = |why: &str| PatternError::NotValidOrientation(why.to_string());
    let n = d.n();
    if n < 4 {
        return Err(bad("a broom has at least four vertices"));
    }
    if d.arc_count() != n - 1 {
        return Err(bad("wrong number of arcs for a broom"));
    }
    let dir = |u, v| {
        if d.has_arc(u, v) {
            Some(Dir::Fwd)
        } else if d.has_arc(v, u) {
            Some(Dir::Bwd)
        } else {
            None
        }
    };
    let v12 = dir(0, 1).ok_or_else(|| bad("v1 and v2 are not adjacent"))?;
    let v23 = dir(1, 2).ok_or_else(|| bad("v2 and v3 are not adjacent"))?;
    let mut leaf = None;
    for w in 3..n {
        let this = match dir(2, w) {
            Some(Dir::Fwd) => LeafDir::Out,
            Some(Dir::Bwd) => LeafDir::In,
            None => return Err(bad("a leaf is not attached to v3")),
        };
        if *leaf.get_or_insert(this) != this {
            return Err(bad("leaves are not all oriented the same way"));
        }
    }
    Ok(BroomSpec {
        r: n - 3,
        v12,
        v23,
        leaf: leaf.expect("at least one leaf"),
    })
}
