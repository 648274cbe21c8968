//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here calls the library's search code; only `Digraph` accessors.

#![allow(dead_code)]

use dichroma::{Digraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every simple digraph on `n` labelled vertices: each pair is absent,
/// forward or backward.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let ps = pairs(n);
    let total = 3usize.pow(ps.len() as u32);
    (0..total).map(move |mut code| {
        let mut arcs = Vec::new();
        for &(u, v) in &ps {
            match code % 3 {
                1 => arcs.push((u, v)),
                2 => arcs.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        Digraph::from_edge_list(n, &arcs).unwrap()
    })
}

/// Every tournament on `n` labelled vertices.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let ps = pairs(n);
    (0..1usize << ps.len()).map(move |code| {
        let arcs: Vec<_> = ps
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if code >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Digraph::from_edge_list(n, &arcs).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Smallest adjacency bit code over all relabellings (`n ≤ 8`).
pub fn canonical_code(d: &Digraph, perms: &[Vec<usize>]) -> u64 {
    let n = d.n();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for u in 0..n {
                for v in 0..n {
                    code = code << 1 | d.has_arc(p[u], p[v]) as u64;
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

pub fn random_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::new();
    for (u, v) in pairs(n) {
        if rng.random_bool(p) {
            arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    Digraph::from_edge_list(n, &arcs).unwrap()
}

pub fn subset(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Acyclicity of `D[mask]` by repeatedly deleting a vertex with no
/// in-neighbour left.
pub fn acyclic_mask(d: &Digraph, mut mask: u64) -> bool {
    while mask != 0 {
        let source = (0..d.n())
            .filter(|&v| mask >> v & 1 == 1)
            .find(|&v| (0..d.n()).all(|u| mask >> u & 1 == 0 || !d.has_arc(u, v)));
        match source {
            Some(v) => mask &= !(1 << v),
            None => return false,
        }
    }
    true
}

pub fn acyclic_set(d: &Digraph, s: &VertexSet) -> bool {
    acyclic_mask(d, s.iter().fold(0, |m, v| m | 1 << v))
}

/// `χ⃗` by minimising over all set partitions (restricted growth strings).
pub fn brute_dichromatic(d: &Digraph) -> usize {
    let n = d.n();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    let mut blocks = vec![0u64; n];
    fn go(d: &Digraph, v: usize, used: usize, blocks: &mut Vec<u64>, best: &mut usize) {
        if used >= *best {
            return;
        }
        if v == d.n() {
            *best = used;
            return;
        }
        for b in 0..=used.min(d.n() - 1) {
            blocks[b] |= 1 << v;
            if acyclic_mask(d, blocks[b]) {
                go(d, v + 1, used.max(b + 1), blocks, best);
            }
            blocks[b] &= !(1 << v);
        }
    }
    go(d, 0, 0, &mut blocks, &mut best);
    best
}

/// A colouring is proper when every class is acyclic.
pub fn valid_dicoloring(d: &Digraph, colors: &[usize]) -> bool {
    let k = colors.iter().copied().max().map_or(0, |m| m + 1);
    (0..k).all(|c| {
        let mask = (0..d.n()).filter(|&v| colors[v] == c).fold(0, |m, v| m | 1u64 << v);
        acyclic_mask(d, mask)
    })
}

pub fn is_clique_mask(d: &Digraph, mask: u64) -> bool {
    let vs: Vec<usize> = (0..d.n()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| d.adjacent(u, v)))
}

pub fn is_stable_mask(d: &Digraph, mask: u64) -> bool {
    let vs: Vec<usize> = (0..d.n()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !d.adjacent(u, v)))
}

pub fn brute_independence(d: &Digraph, within: u64) -> usize {
    (0..1u64 << d.n())
        .filter(|&m| m & !within == 0 && is_stable_mask(d, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Reachability closure of `D[mask]` from `v`.
fn reach(d: &Digraph, v: usize, mask: u64) -> u64 {
    let mut seen = 1u64 << v;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in 0..d.n() {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 && d.has_arc(u, w) {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn strongly_connected_mask(d: &Digraph, mask: u64) -> bool {
    match (0..d.n()).find(|&v| mask >> v & 1 == 1) {
        None => false,
        Some(v) => {
            reach(d, v, mask) == mask
                && (0..d.n())
                    .filter(|&u| mask >> u & 1 == 1)
                    .all(|u| reach(d, u, mask) >> v & 1 == 1)
        }
    }
}

/// Sink and source vertex masks of the tournament `D[mask]`: a vertex is a
/// source when it reaches every vertex of the tournament, a sink when
/// every vertex reaches it.
fn tournament_ends(d: &Digraph, mask: u64) -> (u64, u64) {
    let (mut sinks, mut sources) = (0, 0);
    for v in (0..d.n()).filter(|&v| mask >> v & 1 == 1) {
        if reach(d, v, mask) == mask {
            sources |= 1 << v;
        }
        if (0..d.n())
            .filter(|&u| mask >> u & 1 == 1)
            .all(|u| reach(d, u, mask) >> v & 1 == 1)
        {
            sinks |= 1 << v;
        }
    }
    (sinks, sources)
}

/// Minimum `|V(C)|` over all closed tournaments, by enumerating every
/// maximum tournament `K` and every simple path from a sink vertex to a
/// source vertex of `K`, counting `|K ∪ V(P)|`.
pub fn brute_pmct_size(d: &Digraph) -> usize {
    fn dfs(d: &Digraph, u: usize, visited: u64, k: u64, sources: u64, best: &mut usize) {
        for w in 0..d.n() {
            if !d.has_arc(u, w) || visited >> w & 1 == 1 {
                continue;
            }
            let next = visited | 1 << w;
            if sources >> w & 1 == 1 {
                *best = (*best).min((next | k).count_ones() as usize);
            }
            dfs(d, w, next, k, sources, best);
        }
    }
    let n = d.n();
    let cliques: Vec<u64> = (1..1u64 << n).filter(|&m| is_clique_mask(d, m)).collect();
    let omega = cliques.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    let mut best = usize::MAX;
    for &k in cliques.iter().filter(|m| m.count_ones() == omega) {
        if strongly_connected_mask(d, k) {
            best = best.min(omega as usize);
            continue;
        }
        let (sinks, sources) = tournament_ends(d, k);
        for s in (0..n).filter(|&v| sinks >> v & 1 == 1) {
            dfs(d, s, 1 << s, k, sources, &mut best);
        }
    }
    best
}

/// Heroes in tournaments by direct search over the grammar on vertex masks.
pub struct HeroOracle<'a> {
    d: &'a Digraph,
    memo: std::collections::HashMap<u64, bool>,
}

impl<'a> HeroOracle<'a> {
    pub fn new(d: &'a Digraph) -> Self {
        Self {
            d,
            memo: Default::default(),
        }
    }

    fn all_arcs(&self, from: u64, to: u64) -> bool {
        (0..self.d.n()).filter(|&u| from >> u & 1 == 1).all(|u| {
            (0..self.d.n())
                .filter(|&v| to >> v & 1 == 1)
                .all(|v| self.d.has_arc(u, v))
        })
    }

    pub fn is_hero(&mut self, mask: u64) -> bool {
        if let Some(&h) = self.memo.get(&mask) {
            return h;
        }
        let h = self.compute(mask);
        self.memo.insert(mask, h);
        h
    }

    fn compute(&mut self, mask: u64) -> bool {
        if mask.count_ones() == 1 {
            return true;
        }
        // Proper nonempty submasks.
        let mut a = (mask - 1) & mask;
        while a != 0 {
            let b = mask & !a;
            if self.all_arcs(a, b) && self.is_hero(a) && self.is_hero(b) {
                return true;
            }
            a = (a - 1) & mask;
        }
        for apex in (0..self.d.n()).filter(|&v| mask >> v & 1 == 1) {
            let rest = mask & !(1 << apex);
            let mut t = rest;
            while t != 0 {
                let h = rest & !t;
                if h != 0 && acyclic_mask(self.d, t) {
                    let a = 1u64 << apex;
                    let hero_first = self.all_arcs(a, h) && self.all_arcs(h, t) && self.all_arcs(t, a);
                    let trans_first = self.all_arcs(a, t) && self.all_arcs(t, h) && self.all_arcs(h, a);
                    if (hero_first || trans_first) && self.is_hero(h) {
                        return true;
                    }
                }
                t = (t - 1) & rest;
            }
        }
        false
    }
}

/// A random transitive acyclic digraph on `n` vertices: a random relation
/// along a random order, closed under composition.
pub fn random_transitive_dag(n: usize, p: f64, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        for cell in &mut row[i + 1..] {
            *cell = rng.random_bool(p);
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][m] && rel[m][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rel[i][j] {
                arcs.push((order[i], order[j]));
            }
        }
    }
    arcs
}

/// Random arcs added in random pair order while both ends stay below
/// `max_degree`; long induced paths are common.
pub fn bounded_degree(n: usize, max_degree: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut ps = pairs(n);
    ps.shuffle(rng);
    let mut deg = vec![0; n];
    let mut arcs = Vec::new();
    for (u, v) in ps {
        if deg[u] < max_degree && deg[v] < max_degree && rng.random_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    Digraph::from_edge_list(n, &arcs).unwrap()
}
