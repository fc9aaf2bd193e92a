//! Exhaustive generation of small hypergraphs, labeled or up to isomorphism.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::berge::{has_cycle_at_least, has_path_at_least};
use crate::canon::{canonical_form, Certificate};
use crate::connectivity::is_2connected;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Any,
    /// No Berge cycle of length `k` or longer.
    CycleBelow(usize),
    /// No Berge path of length `k`.
    PathBelow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedup {
    Labeled,
    Isomorph,
    /// Labeled for `n <= 5`, isomorph rejection from `n = 6`.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub n: usize,
    pub r: usize,
    pub sperner: bool,
    pub connected: bool,
    pub two_connected: bool,
    pub objective: Objective,
    pub dedup: Dedup,
}

impl SearchSpace {
    pub fn new(n: usize, r: usize) -> Self {
        SearchSpace {
            n,
            r,
            sperner: false,
            connected: false,
            two_connected: false,
            objective: Objective::Any,
            dedup: Dedup::Auto,
        }
    }

    pub fn sperner(mut self) -> Self {
        self.sperner = true;
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn two_connected(mut self) -> Self {
        self.two_connected = true;
        self
    }

    pub fn objective(mut self, o: Objective) -> Self {
        self.objective = o;
        self
    }

    pub fn dedup(mut self, d: Dedup) -> Self {
        self.dedup = d;
        self
    }

    fn isomorph(&self) -> bool {
        match self.dedup {
            Dedup::Labeled => false,
            Dedup::Isomorph => true,
            Dedup::Auto => self.n >= 6,
        }
    }

    fn objective_ok(&self, h: &Hypergraph) -> bool {
        match self.objective {
            Objective::Any => true,
            Objective::CycleBelow(k) => !has_cycle_at_least(h, k),
            Objective::PathBelow(k) => !has_path_at_least(h, k),
        }
    }

    fn leaf_ok(&self, h: &Hypergraph) -> bool {
        (!self.connected || h.is_connected()) && (!self.two_connected || is_2connected(h))
    }

    /// Whether `h` satisfies every filter and the objective.
    pub fn admits(&self, h: &Hypergraph) -> bool {
        h.n() == self.n
            && h.max_edge_size() <= self.r
            && (!self.sperner || h.is_sperner())
            && self.objective_ok(h)
            && self.leaf_ok(h)
    }

    /// Candidate edges (sizes `2..=r`) in canonical order.
    pub fn candidate_edges(&self) -> Vec<VertexSet> {
        let all = VertexSet::full(self.n);
        let mut c: Vec<VertexSet> = (2..=self.r.min(self.n)).flat_map(|s| all.subsets_of_size(s)).collect();
        c.sort();
        c
    }
}

/// Hard limits on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub exhaustive: usize,
    pub pruned: usize,
    pub random: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { exhaustive: 7, pruned: 10, random: 64 }
    }
}

impl Caps {
    /// Defaults, with `BERGE_CAP` overriding both enumeration caps.
    pub fn from_env() -> Self {
        let mut c = Caps::default();
        if let Some(v) = std::env::var("BERGE_CAP").ok().and_then(|s| s.parse().ok()) {
            c.exhaustive = v;
            c.pruned = v;
        }
        c
    }

    pub fn check(&self, space: &SearchSpace) -> Result<()> {
        let cap = if space.isomorph() || space.objective != Objective::Any { self.pruned } else { self.exhaustive };
        if space.n > cap {
            return Err(Error::CapExceeded { n: space.n, cap });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    /// Hypergraphs passing every filter.
    pub visited: u64,
    /// Subtrees cut because the objective failed.
    pub pruned_subtrees: u64,
    /// Filter-passing hypergraphs inside cut subtrees (audit runs only).
    pub skipped: Option<u64>,
}

impl EnumStats {
    fn merge(self, o: EnumStats) -> EnumStats {
        EnumStats {
            visited: self.visited + o.visited,
            pruned_subtrees: self.pruned_subtrees + o.pruned_subtrees,
            skipped: match (self.skipped, o.skipped) {
                (Some(a), Some(b)) => Some(a + b),
                (a, b) => a.or(b),
            },
        }
    }
}

struct Dfs<'a, T, F> {
    space: &'a SearchSpace,
    cands: &'a [VertexSet],
    audit: bool,
    fold: &'a F,
    acc: T,
    stats: EnumStats,
}

impl<T, F: Fn(T, &Hypergraph) -> T> Dfs<'_, T, F> {
    fn hyper(&self, chosen: &[VertexSet]) -> Hypergraph {
        Hypergraph::from_sets(self.space.n, self.space.r, chosen.to_vec()).expect("candidate edges are valid")
    }

    fn compatible(&self, chosen: &[VertexSet], e: VertexSet) -> bool {
        !self.space.sperner || chosen.iter().all(|c| !c.comparable(e))
    }

    fn count_subtree(&self, i: usize, chosen: &mut Vec<VertexSet>) -> u64 {
        if i == self.cands.len() {
            let mut sorted = chosen.clone();
            sorted.sort();
            return u64::from(self.space.leaf_ok(&self.hyper(&sorted)));
        }
        let mut total = self.count_subtree(i + 1, chosen);
        let e = self.cands[i];
        if self.compatible(chosen, e) {
            chosen.push(e);
            total += self.count_subtree(i + 1, chosen);
            chosen.pop();
        }
        total
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
}

/// Folds over every hypergraph of the space. Work is split by the first
/// chosen edge; shard results merge left to right, so the outcome does not
/// depend on `workers`.
pub fn fold<T, I, F, M>(space: &SearchSpace, caps: &Caps, workers: usize, init: I, f: F, merge: M) -> Result<(T, EnumStats)>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &Hypergraph) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    caps.check(space)?;
    if space.isomorph() {
        return fold_isomorph(space, workers, init, f, merge);
    }
    fold_labeled(space, workers, false, init, f, merge)
}

fn fold_labeled<T, I, F, M>(space: &SearchSpace, workers: usize, audit: bool, init: I, f: F, merge: M) -> Result<(T, EnumStats)>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &Hypergraph) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let cands = space.candidate_edges();
    let wrapped = |acc: Option<T>, h: &Hypergraph| Some(f(acc.expect("accumulator present"), h));
    let shard = |first: Option<usize>| -> (T, EnumStats) {
        let mut d = Dfs { space, cands: &cands, audit, fold: &wrapped, acc: Some(init()), stats: EnumStats::default() };
        if audit {
            d.stats.skipped = Some(0);
        }
        match first {
            None => {
                let h = d.hyper(&[]);
                if space.leaf_ok(&h) && space.objective_ok(&h) {
                    d.stats.visited += 1;
                    let acc = d.acc.take();
                    d.acc = wrapped(acc, &h);
                }
            }
            Some(j) => {
                let mut chosen = vec![cands[j]];
                if space.objective_ok(&d.hyper(&chosen)) {
                    d.run_opt(j + 1, &mut chosen);
                } else {
                    d.stats.pruned_subtrees += 1;
                    if audit {
                        let n = d.count_subtree(j + 1, &mut chosen);
                        *d.stats.skipped.get_or_insert(0) += n;
                    }
                }
            }
        }
        (d.acc.take().expect("accumulator present"), d.stats)
    };
    let firsts: Vec<Option<usize>> = std::iter::once(None).chain((0..cands.len()).map(Some)).collect();
    let results: Vec<(T, EnumStats)> = pool(workers)?.install(|| firsts.into_par_iter().map(shard).collect());
    let mut it = results.into_iter();
    let (mut acc, mut stats) = it.next().expect("at least one shard");
    for (a, s) in it {
        acc = merge(acc, a);
        stats = stats.merge(s);
    }
    Ok((acc, stats))
}

impl<T, F: Fn(Option<T>, &Hypergraph) -> Option<T>> Dfs<'_, Option<T>, F> {
    fn run_opt(&mut self, i: usize, chosen: &mut Vec<VertexSet>) {
        if i == self.cands.len() {
            let mut sorted = chosen.clone();
            sorted.sort();
            let h = self.hyper(&sorted);
            if self.space.leaf_ok(&h) {
                self.stats.visited += 1;
                let acc = self.acc.take();
                self.acc = (self.fold)(acc, &h);
            }
            return;
        }
        self.run_opt(i + 1, chosen);
        let e = self.cands[i];
        if !self.compatible(chosen, e) {
            return;
        }
        chosen.push(e);
        let mut sorted = chosen.clone();
        sorted.sort();
        if self.space.objective_ok(&self.hyper(&sorted)) {
            self.run_opt(i + 1, chosen);
        } else {
            self.stats.pruned_subtrees += 1;
            if self.audit {
                let n = self.count_subtree(i + 1, chosen);
                *self.stats.skipped.get_or_insert(0) += n;
            }
        }
        chosen.pop();
    }
}

fn fold_isomorph<T, I, F, M>(space: &SearchSpace, workers: usize, init: I, f: F, merge: M) -> Result<(T, EnumStats)>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(T, &Hypergraph) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let cands = space.candidate_edges();
    let pool = pool(workers)?;
    let mut stats = EnumStats::default();
    let empty = Hypergraph::from_sets(space.n, space.r, Vec::new()).expect("empty hypergraph");
    let mut level: Vec<Hypergraph> = if space.objective_ok(&empty) { vec![empty] } else { Vec::new() };
    let mut acc = init();
    while !level.is_empty() {
        let chunk: Vec<T> = pool.install(|| {
            level
                .par_iter()
                .map(|h| if space.leaf_ok(h) { f(init(), h) } else { init() })
                .collect()
        });
        stats.visited += level.iter().filter(|h| space.leaf_ok(h)).count() as u64;
        for a in chunk {
            acc = merge(acc, a);
        }
        let children: Vec<Vec<(Certificate, Hypergraph)>> = pool.install(|| {
            level
                .par_iter()
                .map(|h| {
                    cands
                        .iter()
                        .filter(|&&e| h.edge_index(e).is_none())
                        .filter(|&&e| !space.sperner || h.edges().iter().all(|c| !c.comparable(e)))
                        .map(|&e| {
                            let mut es = h.edges().to_vec();
                            es.push(e);
                            es.sort();
                            let g = canonical_form(&Hypergraph::from_sets(space.n, space.r, es).expect("valid"));
                            (Certificate { n: g.n(), edges: g.edges().to_vec() }, g)
                        })
                        .collect()
                })
                .collect()
        });
        let mut unique: BTreeMap<Certificate, Hypergraph> = BTreeMap::new();
        for (c, g) in children.into_iter().flatten() {
            unique.entry(c).or_insert(g);
        }
        let reps: Vec<Hypergraph> = unique.into_values().collect();
        let keep: Vec<bool> = pool.install(|| reps.par_iter().map(|g| space.objective_ok(g)).collect());
        stats.pruned_subtrees += keep.iter().filter(|&&k| !k).count() as u64;
        level = reps.into_iter().zip(keep).filter(|p| p.1).map(|p| p.0).collect();
    }
    Ok((acc, stats))
}

/// Calls `visit` on every member; returns the statistics.
pub fn visit<V: Fn(&Hypergraph) + Sync>(space: &SearchSpace, caps: &Caps, workers: usize, visit: V) -> Result<EnumStats> {
    fold(space, caps, workers, || (), |(), h| visit(h), |(), ()| ()).map(|p| p.1)
}

/// All members in deterministic order.
pub fn collect(space: &SearchSpace, caps: &Caps, workers: usize) -> Result<(Vec<Hypergraph>, EnumStats)> {
    fold(
        space,
        caps,
        workers,
        Vec::new,
        |mut v, h| {
            v.push(h.clone());
            v
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// Single-threaded labeled run that also counts what pruning skipped.
pub fn audit(space: &SearchSpace, caps: &Caps) -> Result<EnumStats> {
    caps.check(space)?;
    let labeled = SearchSpace { dedup: Dedup::Labeled, ..*space };
    fold_labeled(&labeled, 1, true, || (), |(), _| (), |(), ()| ()).map(|p| p.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cycle,
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub max_edges: usize,
    pub witness: Option<Hypergraph>,
    pub stats: EnumStats,
}

/// Largest edge count over Sperner `r⁻`-graphs on `n` vertices that are
/// 2-connected without a Berge cycle of length `>= k` (cycle mode), or
/// connected without a Berge path of length `k` (path mode).
pub fn extremal_number(n: usize, k: usize, r: usize, mode: Mode, caps: &Caps, workers: usize) -> Result<Extremal> {
    let base = SearchSpace::new(n, r).sperner();
    let space = match mode {
        Mode::Cycle => base.two_connected().objective(Objective::CycleBelow(k)),
        Mode::Path => base.connected().objective(Objective::PathBelow(k)),
    };
    extremal_in(&space, caps, workers)
}

pub fn extremal_in(space: &SearchSpace, caps: &Caps, workers: usize) -> Result<Extremal> {
    let better = |a: Option<Hypergraph>, b: Option<Hypergraph>| match (a, b) {
        (Some(x), Some(y)) => Some(if y.num_edges() > x.num_edges() { y } else { x }),
        (x, y) => x.or(y),
    };
    let (best, stats) = fold(
        space,
        caps,
        workers,
        || None,
        |acc: Option<Hypergraph>, h| better(acc, Some(h.clone())),
        better,
    )?;
    Ok(Extremal { max_edges: best.as_ref().map_or(0, |h| h.num_edges()), witness: best, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_graphs_on_four() {
        let (v, s) = collect(&SearchSpace::new(4, 2), &Caps::default(), 1).unwrap();
        assert_eq!(v.len(), 64);
        assert_eq!(s.visited, 64);
        let iso = collect(&SearchSpace::new(4, 2).dedup(Dedup::Isomorph), &Caps::default(), 2).unwrap();
        assert_eq!(iso.0.len(), 11);
        let five = collect(&SearchSpace::new(5, 2).dedup(Dedup::Isomorph), &Caps::default(), 2).unwrap();
        assert_eq!(five.0.len(), 34);
    }

    #[test]
    fn cap_refuses() {
        let e = collect(&SearchSpace::new(8, 2).dedup(Dedup::Labeled), &Caps::default(), 1);
        assert!(matches!(e, Err(Error::CapExceeded { n: 8, cap: 7 })));
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let s = SearchSpace::new(5, 3).sperner().two_connected().objective(Objective::CycleBelow(4));
        let a = collect(&s, &Caps::default(), 1).unwrap();
        let b = collect(&s, &Caps::default(), 4).unwrap();
        assert_eq!(a, b);
        assert!(a.0.iter().all(|h| s.admits(h)));
    }
}
