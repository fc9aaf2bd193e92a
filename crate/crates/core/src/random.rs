//! Seeded random instance generators with rejection audits.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::berge::has_cycle_at_least;
use crate::connectivity::is_2connected;
use crate::hypergraph::{EdgeFamily, Hypergraph};
use crate::vertex_set::VertexSet;

/// Attempts, acceptances and rejection reasons of a sampling run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleAudit {
    pub attempts: u64,
    pub accepted: u64,
    pub rejected: BTreeMap<String, u64>,
}

impl SampleAudit {
    fn reject(&mut self, why: &str) {
        *self.rejected.entry(why.to_string()).or_insert(0) += 1;
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn push_if_free(f: &mut EdgeFamily, e: VertexSet) -> bool {
    if e.len() < 2 || f.edges.iter().any(|c| c.comparable(e)) {
        return false;
    }
    f.push(e);
    true
}

fn shuffled(f: &EdgeFamily, rng: &mut ChaCha8Rng) -> Option<Hypergraph> {
    let mut perm: Vec<usize> = (0..f.n).collect();
    perm.shuffle(rng);
    let mut g = EdgeFamily::new(f.n, f.r);
    for &e in &f.edges {
        g.push(e.map(&perm));
    }
    g.build().ok()
}

/// One attempt at a happy Sperner `r⁻`-graph on `n` vertices: a few
/// complete `s`-uniform blocks on `s+1` vertices plus random pairs.
pub fn happy_sperner_attempt(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Option<Hypergraph> {
    let mut f = EdgeFamily::new(n, r);
    let blocks = rng.gen_range(1..=3);
    for _ in 0..blocks {
        let s = rng.gen_range(2..=r.min(n - 1).max(2));
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(rng);
        let b: VertexSet = vs[..(s + 1).min(n)].iter().copied().collect();
        for e in b.subsets_of_size(s) {
            push_if_free(&mut f, e);
        }
    }
    let pairs = rng.gen_range(n / 2..=2 * n);
    for _ in 0..pairs {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            push_if_free(&mut f, VertexSet::singleton(u).with(v));
        }
    }
    f.canonicalize();
    f.build().ok()
}

/// `count` happy Sperner instances with `n` drawn from `ns` and rank `r`.
pub fn sample_happy_sperner(
    seed: u64,
    count: usize,
    ns: std::ops::RangeInclusive<usize>,
    r: usize,
) -> (Vec<Hypergraph>, SampleAudit) {
    let mut rng = rng(seed);
    let mut audit = SampleAudit::default();
    let mut out = Vec::new();
    while out.len() < count {
        audit.attempts += 1;
        let n = rng.gen_range(ns.clone());
        let Some(h) = happy_sperner_attempt(&mut rng, n, r) else {
            audit.reject("invalid");
            continue;
        };
        if !h.is_happy() {
            audit.reject("unhappy");
            continue;
        }
        if h.num_edges() == 0 {
            audit.reject("empty");
            continue;
        }
        audit.accepted += 1;
        out.push(h);
    }
    (out, audit)
}

/// One attempt at a 2-connected Sperner `r⁻`-graph on `n` vertices: a
/// cycle, then ears through new vertices, then edges thickened by extra
/// vertices and a few chords. Labels are shuffled at the end.
pub fn two_connected_attempt(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Option<Hypergraph> {
    let c0 = rng.gen_range(3..=n.saturating_sub(1).max(3));
    let mut edges: Vec<VertexSet> = (0..c0).map(|i| VertexSet::singleton(i).with((i + 1) % c0)).collect();
    let mut used = c0;
    while used < n {
        let len = rng.gen_range(1..=3.min(n - used));
        let a = rng.gen_range(0..used);
        let mut b = rng.gen_range(0..used);
        while b == a {
            b = rng.gen_range(0..used);
        }
        let mut prev = a;
        for v in used..used + len {
            edges.push(VertexSet::singleton(prev).with(v));
            prev = v;
        }
        edges.push(VertexSet::singleton(prev).with(b));
        used += len;
    }
    let mut f = EdgeFamily::new(n, r);
    for base in edges {
        let mut e = base;
        while e.len() < r && rng.gen_bool(0.5) {
            e = e.with(rng.gen_range(0..n));
        }
        if !push_if_free(&mut f, e) && !push_if_free(&mut f, base) {
            return None;
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let size = rng.gen_range(2..=r);
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(rng);
        push_if_free(&mut f, vs[..size].iter().copied().collect());
    }
    shuffled(&f, rng)
}

/// Inputs for the shrink engine: unhappy, 2-connected, Sperner `r⁻`-graphs
/// on `n ∈ ns` vertices with no Berge cycle of length `n`.
pub fn sample_shrink_inputs(
    seed: u64,
    count: usize,
    ns: std::ops::RangeInclusive<usize>,
    r: usize,
) -> (Vec<Hypergraph>, SampleAudit) {
    let mut rng = rng(seed);
    let mut audit = SampleAudit::default();
    let mut out = Vec::new();
    while out.len() < count {
        audit.attempts += 1;
        let n = rng.gen_range(ns.clone());
        let Some(h) = two_connected_attempt(&mut rng, n, r) else {
            audit.reject("containment");
            continue;
        };
        if !is_2connected(&h) {
            audit.reject("not 2-connected");
            continue;
        }
        if h.is_happy() {
            audit.reject("happy");
            continue;
        }
        if has_cycle_at_least(&h, n) {
            audit.reject("hamiltonian");
            continue;
        }
        audit.accepted += 1;
        out.push(h);
    }
    (out, audit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_filters_and_seed() {
        let (a, audit) = sample_happy_sperner(7, 40, 4..=12, 4);
        assert_eq!(audit.accepted, 40);
        assert!(a.iter().all(|h| h.is_happy() && h.is_sperner() && h.max_edge_size() <= 4));
        let (b, _) = sample_happy_sperner(7, 40, 4..=12, 4);
        assert_eq!(a, b);
        let (s, audit) = sample_shrink_inputs(3, 20, 5..=10, 3);
        assert_eq!(audit.accepted, 20);
        for h in &s {
            assert!(h.is_sperner() && is_2connected(h) && !h.is_happy());
            assert!(!has_cycle_at_least(h, h.n()));
        }
    }
}
