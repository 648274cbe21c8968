use serde::{Deserialize, Serialize};

use super::DecompositionError;
use crate::budget::Budget;
use crate::digraph::{induced, Digraph, VertexSet};
use crate::solver::{dichromatic_number, verify_dicoloring, Dicoloring};

pub(crate) const UNSET: usize = usize::MAX;

/// `S = s1 ∪ s2`: every vertex of `s1` has at most `k` in-neighbours outside
/// `S`, every vertex of `s2` at most `k` out-neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceSetCertificate {
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub k: usize,
}

impl NiceSetCertificate {
    pub fn set(&self) -> VertexSet {
        self.s1.union(&self.s2)
    }
}

/// The first failing condition of `cert` inside `D[alive]`, if any.
pub(crate) fn nice_failure(d: &Digraph, alive: &VertexSet, cert: &NiceSetCertificate) -> Option<String> {
    if !cert.s1.is_disjoint(&cert.s2) {
        return Some("s1 and s2 overlap".into());
    }
    let s = cert.set();
    if s.is_empty() {
        return Some("the set is empty".into());
    }
    if !s.difference(alive).is_empty() {
        return Some("the set leaves the current vertex set".into());
    }
    let outside = alive.difference(&s);
    for v in cert.s1.iter() {
        let n = d.in_neighbors(&VertexSet::singleton(v)).intersection(&outside).len();
        if n > cert.k {
            return Some(format!("vertex {v} of s1 has {n} outside in-neighbours"));
        }
    }
    for v in cert.s2.iter() {
        let n = d.out_neighbors(&VertexSet::singleton(v)).intersection(&outside).len();
        if n > cert.k {
            return Some(format!("vertex {v} of s2 has {n} outside out-neighbours"));
        }
    }
    None
}

/// `true` iff `cert` is a `k`-nice set of `d`.
pub fn verify_nice_set(d: &Digraph, cert: &NiceSetCertificate) -> Result<bool, DecompositionError> {
    if !cert.s1.is_disjoint(&cert.s2) {
        return Err(DecompositionError::BadPartition("s1 and s2 overlap".into()));
    }
    Ok(nice_set_failure(d, cert)?.is_none())
}

/// The first condition `cert` breaks in `d`, if any.
pub fn nice_set_failure(d: &Digraph, cert: &NiceSetCertificate) -> Result<Option<String>, DecompositionError> {
    if cert.set().iter().any(|v| v >= d.n()) {
        return Err(DecompositionError::BadPartition("vertex out of range".into()));
    }
    Ok(nice_failure(d, &d.all(), cert))
}

/// Splits `s` into the `≤ k` in side and, failing that, the `≤ k` out side,
/// measuring against `alive ∖ s`.
pub fn nice_certificate(
    d: &Digraph,
    alive: &VertexSet,
    s: &VertexSet,
    k: usize,
) -> Result<NiceSetCertificate, DecompositionError> {
    let outside = alive.difference(s);
    let (mut s1, mut s2) = (Vec::new(), Vec::new());
    for v in s.iter() {
        let one = VertexSet::singleton(v);
        let outside_in = d.in_neighbors(&one).intersection(&outside);
        if outside_in.len() <= k {
            s1.push(v);
            continue;
        }
        let outside_out = d.out_neighbors(&one).intersection(&outside);
        if outside_out.len() <= k {
            s2.push(v);
            continue;
        }
        return Err(DecompositionError::NicenessViolated {
            vertex: v,
            outside_in,
            outside_out,
        });
    }
    Ok(NiceSetCertificate {
        s1: s1.into(),
        s2: s2.into(),
        k,
    })
}

/// Supplies nice sets for every vertex set reached by peeling.
pub trait NiceSetOracle {
    /// A nonempty `k`-nice set of `D[alive]`.
    fn nice_set(&mut self, d: &Digraph, alive: &VertexSet) -> Result<NiceSetCertificate, DecompositionError>;

    /// A dicolouring of `D[s]`, indexed like `s`. Exact by default.
    fn color_set(&mut self, d: &Digraph, s: &VertexSet) -> Result<Vec<usize>, DecompositionError> {
        Ok(dichromatic_number(&induced(d, s).graph, &Budget::default())?
            .coloring
            .colors)
    }
}

impl<F> NiceSetOracle for F
where
    F: FnMut(&Digraph, &VertexSet) -> Result<NiceSetCertificate, DecompositionError>,
{
    fn nice_set(&mut self, d: &Digraph, alive: &VertexSet) -> Result<NiceSetCertificate, DecompositionError> {
        self(d, alive)
    }
}

/// One peeled layer: the certificate and a colouring of its set (host
/// indexed, `UNSET` elsewhere) with `count` colours.
pub(crate) struct Peel {
    pub cert: NiceSetCertificate,
    pub colors: Vec<usize>,
    pub count: usize,
}

/// Peels nice sets off `alive` until nothing is left, then rebuilds the
/// colouring from the innermost layer outwards. Writes colours for `alive`
/// into `out` (compacted) and returns the number used.
pub(crate) fn peel_and_combine(
    d: &Digraph,
    alive: &VertexSet,
    k: usize,
    mut next: impl FnMut(&VertexSet) -> Result<Peel, DecompositionError>,
    out: &mut [usize],
) -> Result<usize, DecompositionError> {
    let mut layers = Vec::new();
    let mut rest = alive.clone();
    while !rest.is_empty() {
        let peel = next(&rest)?;
        if let Some(why) = nice_failure(d, &rest, &peel.cert) {
            return Err(DecompositionError::OracleFailure(why));
        }
        if peel.cert.k > k {
            return Err(DecompositionError::OracleFailure(format!(
                "certificate bound {} exceeds k = {k}",
                peel.cert.k
            )));
        }
        let s = peel.cert.set();
        if s.iter()
            .any(|v| peel.colors[v] == UNSET || peel.colors[v] >= peel.count)
        {
            return Err(DecompositionError::OracleFailure("set colouring is incomplete".into()));
        }
        let remaining = rest.difference(&s);
        layers.push((rest, peel));
        rest = remaining;
    }
    let mut count = 0;
    for (scope, peel) in layers.into_iter().rev() {
        count = combine_layer(d, &scope, &peel, k, out)?;
    }
    Ok(count)
}

/// Colours `scope` from a colouring of the nice set `peel` and the
/// compacted colouring already in `out` on the rest of `scope`. Colour
/// `(m, x)` is encoded as `x·(k + 1) + m`; rest colours decode the same way.
pub(crate) fn combine_layer(
    d: &Digraph,
    scope: &VertexSet,
    peel: &Peel,
    k: usize,
    out: &mut [usize],
) -> Result<usize, DecompositionError> {
    let s = peel.cert.set();
    let k1 = k.min(scope.len()) + 1;
    let mut fresh = vec![UNSET; d.n()];
    for v in scope.difference(&s).iter() {
        fresh[v] = out[v];
    }
    for (side, offset) in [(&peel.cert.s1, 0), (&peel.cert.s2, peel.count)] {
        for v in side.iter() {
            let one = VertexSet::singleton(v);
            let seen = if offset == 0 {
                d.in_neighbors(&one)
            } else {
                d.out_neighbors(&one)
            };
            let mut blocked = vec![false; k1];
            for u in seen.iter().filter(|&u| scope.contains(u) && !s.contains(u)) {
                blocked[out[u] % k1] = true;
            }
            let m = blocked
                .iter()
                .position(|&b| !b)
                .ok_or_else(|| DecompositionError::ColorBudgetBug(format!("no free first coordinate at {v}")))?;
            fresh[v] = (offset + peel.colors[v]) * k1 + m;
        }
    }
    Ok(compact_into(scope, &fresh, out))
}

/// Renumbers `colors` on `scope` to `0..` in vertex order; returns the count.
pub(crate) fn compact_into(scope: &VertexSet, colors: &[usize], out: &mut [usize]) -> usize {
    let mut map = std::collections::HashMap::new();
    for v in scope.iter() {
        let next = map.len();
        out[v] = *map.entry(colors[v]).or_insert(next);
    }
    map.len()
}

/// Colours `d` by repeatedly asking `oracle` for a `k`-nice set whose
/// `χ⃗` is at most `c`; uses at most `2c(k + 1)` colours.
pub fn color_via_nice_sets(
    d: &Digraph,
    oracle: &mut impl NiceSetOracle,
    c: usize,
    k: usize,
) -> Result<Dicoloring, DecompositionError> {
    let mut out = vec![UNSET; d.n()];
    let count = peel_and_combine(
        d,
        &d.all(),
        k,
        |alive| {
            let cert = oracle.nice_set(d, alive)?;
            let s = cert.set();
            if s.iter().any(|v| !alive.contains(v)) {
                return Err(DecompositionError::OracleFailure(
                    "the set leaves the current vertex set".into(),
                ));
            }
            let mut colors = vec![UNSET; d.n()];
            let mut count = 0;
            // S1 and S2 are coloured separately, each within c colours.
            for side in [&cert.s1, &cert.s2] {
                if side.is_empty() {
                    continue;
                }
                let local = oracle.color_set(d, side)?;
                let used = local.iter().map(|&x| x + 1).max().unwrap_or(0);
                if used > c {
                    return Err(DecompositionError::OracleFailure(format!(
                        "a side of the nice set needs {used} > c = {c} colours"
                    )));
                }
                if !verify_dicoloring(&induced(d, side).graph, &Dicoloring::new(local.clone()))? {
                    return Err(DecompositionError::OracleFailure(
                        "side colouring is not a dicolouring".into(),
                    ));
                }
                for (v, x) in side.iter().zip(local) {
                    colors[v] = x;
                }
                count = count.max(used);
            }
            Ok(Peel { cert, colors, count })
        },
        &mut out,
    )?;
    let f = Dicoloring { colors: out, k: count };
    if !verify_dicoloring(d, &f)? {
        return Err(DecompositionError::ColorBudgetBug(
            "combined colouring has a monochromatic cycle".into(),
        ));
    }
    if count > 2 * c * (k + 1) {
        return Err(DecompositionError::ColorBudgetBug(format!(
            "{count} colours exceed 2c(k + 1)"
        )));
    }
    Ok(f)
}
