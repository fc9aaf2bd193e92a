//! Canonical labelling of small hypergraphs by color refinement and
//! individualization, with transposition-automorphism pruning.

use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Isomorphism-invariant certificate: the least relabelled edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<VertexSet>,
}

struct Canon<'a> {
    n: usize,
    edges: &'a [VertexSet],
    incident: Vec<Vec<usize>>,
    best: Option<Vec<VertexSet>>,
}

impl<'a> Canon<'a> {
    fn refine(&self, mut color: Vec<usize>) -> Vec<usize> {
        loop {
            let cells = color.iter().collect::<std::collections::BTreeSet<_>>().len();
            let keys: Vec<(usize, Vec<Vec<usize>>)> = (0..self.n)
                .map(|v| {
                    let mut sig: Vec<Vec<usize>> = self.incident[v]
                        .iter()
                        .map(|&e| {
                            let mut cs: Vec<usize> = self.edges[e].iter().filter(|&u| u != v).map(|u| color[u]).collect();
                            cs.sort_unstable();
                            cs
                        })
                        .collect();
                    sig.sort();
                    (color[v], sig)
                })
                .collect();
            let ranks: BTreeMap<&(usize, Vec<Vec<usize>>), usize> =
                keys.iter().collect::<std::collections::BTreeSet<_>>().into_iter().enumerate().map(|(i, k)| (k, i)).collect();
            let next: Vec<usize> = keys.iter().map(|k| ranks[k]).collect();
            let done = ranks.len() == cells;
            color = next;
            if done {
                return color;
            }
        }
    }

    fn is_transposition_automorphism(&self, a: usize, b: usize) -> bool {
        let swap = |e: VertexSet| {
            let (ha, hb) = (e.contains(a), e.contains(b));
            if ha == hb {
                e
            } else if ha {
                e.without(a).with(b)
            } else {
                e.without(b).with(a)
            }
        };
        self.incident[a].iter().chain(&self.incident[b]).all(|&e| {
            let s = swap(self.edges[e]);
            s == self.edges[e] || self.edges.binary_search(&s).is_ok()
        })
    }

    fn search(&mut self, color: Vec<usize>) {
        let color = self.refine(color);
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in color.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let Some(target) = cells.values().find(|c| c.len() > 1).cloned() else {
            let mut relabelled: Vec<VertexSet> = self.edges.iter().map(|e| e.map(&color)).collect();
            relabelled.sort();
            if self.best.as_ref().is_none_or(|b| relabelled < *b) {
                self.best = Some(relabelled);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &w in &target {
            if tried.iter().any(|&t| self.is_transposition_automorphism(t, w)) {
                continue;
            }
            tried.push(w);
            // split the cell: w first, the rest after it
            let next: Vec<usize> = color.iter().enumerate().map(|(v, &c)| 2 * c + usize::from(c == color[w] && v != w)).collect();
            self.search(next);
        }
    }
}

/// Certificate equal for two hypergraphs iff they are isomorphic.
pub fn certificate(h: &Hypergraph) -> Certificate {
    let n = h.n();
    let mut incident = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            incident[v].push(i);
        }
    }
    let mut c = Canon { n, edges: h.edges(), incident, best: None };
    if n == 0 {
        return Certificate { n, edges: Vec::new() };
    }
    c.search(vec![0; n]);
    Certificate { n, edges: c.best.expect("search reaches a leaf") }
}

/// The canonical representative of `h`'s isomorphism class.
pub fn canonical_form(h: &Hypergraph) -> Hypergraph {
    let c = certificate(h);
    Hypergraph::from_sets(c.n, h.rank(), c.edges).expect("relabelling preserves validity")
}
