use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Cycle,
    Path,
}

/// Base vertices and distinct edges of a Berge cycle or path.
/// For a cycle edge `i` holds `base[i]` and `base[(i + 1) % len]`; for a
/// path it holds `base[i]` and `base[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub kind: WitnessKind,
    pub base: Vec<usize>,
    pub edges: Vec<usize>,
}

impl BergeWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn base_set(&self) -> VertexSet {
        self.base.iter().copied().collect()
    }

    /// Checks the witness against `h` directly from the definition.
    pub fn validate(&self, h: &Hypergraph) -> Result<(), String> {
        let l = self.edges.len();
        match self.kind {
            WitnessKind::Cycle => {
                if l < 2 {
                    return Err(format!("cycle length {l} < 2"));
                }
                if self.base.len() != l {
                    return Err("cycle needs as many base vertices as edges".into());
                }
            }
            WitnessKind::Path => {
                if l < 1 {
                    return Err("path length 0".into());
                }
                if self.base.len() != l + 1 {
                    return Err("path needs one more base vertex than edges".into());
                }
            }
        }
        if self.base.iter().any(|&v| v >= h.n()) {
            return Err("base vertex out of range".into());
        }
        if self.base_set().len() != self.base.len() {
            return Err("repeated base vertex".into());
        }
        let mut seen = vec![false; h.num_edges()];
        for &e in &self.edges {
            if e >= h.num_edges() {
                return Err(format!("edge index {e} out of range"));
            }
            if seen[e] {
                return Err(format!("edge {e} repeated"));
            }
            seen[e] = true;
        }
        for i in 0..l {
            let u = self.base[i];
            let v = self.base[(i + 1) % self.base.len()];
            let e = h.edge(self.edges[i]);
            if !e.contains(u) || !e.contains(v) {
                return Err(format!("edge {} misses pair {{{u},{v}}}", self.edges[i]));
            }
        }
        Ok(())
    }
}

/// Outcome of a longest-object search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Exact maximum, or a lower bound reaching the cutoff.
    pub length: usize,
    pub witness: Option<BergeWitness>,
    /// False when the search stopped early at the cutoff.
    pub exact: bool,
}

const NONE: usize = usize::MAX;

/// Depth-first search over base-vertex sequences with incremental
/// pair-to-edge matching.
struct Searcher {
    n: usize,
    m: usize,
    shadow: Vec<VertexSet>,
    cands: Vec<Vec<usize>>,
    owner: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    pair_edge: Vec<usize>,
    mark: Vec<u32>,
    stamp: u32,
    seq: Vec<usize>,
    best: usize,
    best_base: Vec<usize>,
    best_edges: Vec<usize>,
    cutoff: usize,
}

impl Searcher {
    fn new(h: &Hypergraph, cutoff: Option<usize>) -> Self {
        let n = h.n();
        let m = h.num_edges();
        let g = h.shadow_graph();
        let mut cands = vec![Vec::new(); n * n];
        for (i, e) in h.edges().iter().enumerate() {
            for u in e.iter() {
                for v in e.iter() {
                    if u != v {
                        cands[u * n + v].push(i);
                    }
                }
            }
        }
        Searcher {
            n,
            m,
            shadow: g.adj,
            cands,
            owner: vec![NONE; m],
            pairs: Vec::new(),
            pair_edge: Vec::new(),
            mark: vec![0; m],
            stamp: 0,
            seq: Vec::new(),
            best: 0,
            best_base: Vec::new(),
            best_edges: Vec::new(),
            cutoff: cutoff.unwrap_or(usize::MAX),
        }
    }

    fn augment(&mut self, p: usize) -> bool {
        let (u, v) = self.pairs[p];
        let idx = u * self.n + v;
        for j in 0..self.cands[idx].len() {
            let e = self.cands[idx][j];
            if self.mark[e] == self.stamp {
                continue;
            }
            self.mark[e] = self.stamp;
            let o = self.owner[e];
            if o == NONE || self.augment(o) {
                self.owner[e] = p;
                self.pair_edge[p] = e;
                return true;
            }
        }
        false
    }

    fn push_pair(&mut self, u: usize, v: usize) -> bool {
        if self.pairs.len() >= self.m {
            return false;
        }
        self.pairs.push((u, v));
        self.pair_edge.push(NONE);
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|x| *x = 0);
            self.stamp = 1;
        }
        let p = self.pairs.len() - 1;
        if self.augment(p) {
            true
        } else {
            self.pairs.pop();
            self.pair_edge.pop();
            false
        }
    }

    fn pop_pair(&mut self) {
        self.pairs.pop();
        let e = self.pair_edge.pop().expect("pair present");
        self.owner[e] = NONE;
    }

    fn reach(&self, from: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::EMPTY;
        let mut frontier = VertexSet::singleton(from);
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.shadow[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    fn record(&mut self, len: usize) {
        self.best = len;
        self.best_base = self.seq.clone();
        self.best_edges = self.pair_edge.clone();
    }

    fn done(&self) -> bool {
        self.best >= self.cutoff
    }

    fn cycles_from(&mut self, s: usize, v: usize, free: VertexSet) {
        let len = self.seq.len();
        if len >= 2 && self.shadow[v].contains(s) && self.push_pair(v, s) {
            if len > self.best {
                self.record(len);
            }
            self.pop_pair();
            if self.done() {
                return;
            }
        }
        let reach = self.reach(v, free);
        if reach.with(v).intersection(self.shadow[s]).is_empty() {
            return;
        }
        if (len + reach.len()).min(self.m) <= self.best {
            return;
        }
        for w in self.shadow[v].intersection(free) {
            if self.push_pair(v, w) {
                self.seq.push(w);
                self.cycles_from(s, w, free.without(w));
                self.seq.pop();
                self.pop_pair();
                if self.done() {
                    return;
                }
            }
        }
    }

    fn paths_from(&mut self, v: usize, free: VertexSet, target: Option<usize>) {
        let len = self.seq.len() - 1;
        match target {
            Some(t) if v == t => {
                if len > self.best {
                    self.record(len);
                }
                return;
            }
            None if len > self.best => self.record(len),
            _ => {}
        }
        if self.done() {
            return;
        }
        let reach = self.reach(v, free);
        if let Some(t) = target {
            if !reach.contains(t) {
                return;
            }
        }
        if (len + reach.len()).min(self.m) <= self.best {
            return;
        }
        for w in self.shadow[v].intersection(free) {
            if self.push_pair(v, w) {
                self.seq.push(w);
                self.paths_from(w, free.without(w), target);
                self.seq.pop();
                self.pop_pair();
                if self.done() {
                    return;
                }
            }
        }
    }

    fn result(self, kind: WitnessKind) -> SearchResult {
        let exact = self.best < self.cutoff;
        let witness = (self.best > 0).then_some(BergeWitness { kind, base: self.best_base, edges: self.best_edges });
        SearchResult { length: self.best, witness, exact }
    }
}

/// Length of a longest Berge cycle (0 if none). With a cutoff `L` the search
/// may stop once a cycle of length at least `L` is found.
pub fn circumference(h: &Hypergraph, cutoff: Option<usize>) -> SearchResult {
    let mut s = Searcher::new(h, cutoff);
    let all = VertexSet::full(h.n());
    for start in 0..h.n() {
        let free = all.intersection(VertexSet::above(start));
        if s.reach(start, free).len() < s.best {
            continue;
        }
        s.seq = vec![start];
        s.cycles_from(start, start, free);
        if s.done() {
            break;
        }
    }
    s.result(WitnessKind::Cycle)
}

/// Whether `h` has a Berge cycle of length at least `k`.
pub fn has_cycle_at_least(h: &Hypergraph, k: usize) -> bool {
    circumference(h, Some(k)).length >= k
}

/// Length (number of edges) of a longest Berge path.
pub fn longest_berge_path(h: &Hypergraph, cutoff: Option<usize>) -> SearchResult {
    let mut s = Searcher::new(h, cutoff);
    let all = VertexSet::full(h.n());
    for start in 0..h.n() {
        s.seq = vec![start];
        s.paths_from(start, all.without(start), None);
        if s.done() {
            break;
        }
    }
    s.result(WitnessKind::Path)
}

pub fn has_path_at_least(h: &Hypergraph, k: usize) -> bool {
    longest_berge_path(h, Some(k)).length >= k
}

/// Longest Berge path with end vertices `x` and `y`.
pub fn longest_berge_xy_path(h: &Hypergraph, x: usize, y: usize, cutoff: Option<usize>) -> SearchResult {
    let mut s = Searcher::new(h, cutoff);
    if x != y {
        s.seq = vec![x];
        s.paths_from(x, VertexSet::full(h.n()).without(x), Some(y));
    }
    s.result(WitnessKind::Path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, r: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, &e.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn circumference_examples() {
        let tri = h(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        let c = circumference(&tri, None);
        assert_eq!(c.length, 3);
        assert_eq!(c.witness.as_ref().unwrap().base, vec![0, 1, 2]);
        c.witness.unwrap().validate(&tri).unwrap();

        let two = h(4, 3, &[&[0, 1, 2], &[0, 1, 3]]);
        let c = circumference(&two, None);
        assert_eq!(c.length, 2);
        assert_eq!(c.witness.as_ref().unwrap().base, vec![0, 1]);
        c.witness.unwrap().validate(&two).unwrap();

        assert_eq!(circumference(&h(3, 2, &[&[0, 1], &[1, 2]]), None).length, 0);
    }

    #[test]
    fn path_examples() {
        assert_eq!(longest_berge_path(&h(2, 2, &[&[0, 1]]), None).length, 1);
        let two = h(4, 3, &[&[0, 1, 2], &[0, 1, 3]]);
        let p = longest_berge_path(&two, None);
        assert_eq!(p.length, 2);
        p.witness.unwrap().validate(&two).unwrap();
        let tri = h(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        let p = longest_berge_path(&tri, None);
        assert_eq!(p.length, 2);
        assert_eq!(p.witness.unwrap().base, vec![0, 1, 2]);
    }

    #[test]
    fn cutoff_stops_early() {
        let k5 = crate::graph::Graph::complete(6).to_hypergraph();
        let c = circumference(&k5, Some(4));
        assert!(c.length >= 4);
        assert!(!c.exact);
        assert_eq!(circumference(&k5, None).length, 6);
    }

    #[test]
    fn xy_path() {
        let c5 = crate::graph::Graph::cycle(5).to_hypergraph();
        assert_eq!(longest_berge_xy_path(&c5, 0, 1, None).length, 4);
        assert_eq!(longest_berge_xy_path(&c5, 0, 2, None).length, 3);
    }

    #[test]
    fn witness_validation_rejects_bad_input() {
        let tri = h(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        let bad = BergeWitness { kind: WitnessKind::Cycle, base: vec![0, 1, 2], edges: vec![0, 0, 1] };
        assert!(bad.validate(&tri).is_err());
        let bad = BergeWitness { kind: WitnessKind::Cycle, base: vec![0, 1, 2], edges: vec![1, 0, 2] };
        assert!(bad.validate(&tri).is_err());
    }
}
