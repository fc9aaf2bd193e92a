//! α-disintegration, cores `H(G, α)` and the Kopylov dichotomy.

use serde::{Deserialize, Serialize};

use crate::berge;
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisintegrationTrace {
    pub alpha: usize,
    /// Removed vertices with their degree at removal time.
    pub removal_order: Vec<(usize, usize)>,
    pub core: VertexSet,
}

/// Tie-breaking among vertices eligible for removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    LowestFirst,
    HighestFirst,
}

/// Removes vertices of degree at most `alpha`, lowest index first.
pub fn disintegrate(g: &Graph, alpha: usize) -> DisintegrationTrace {
    disintegrate_ordered(g, alpha, Order::LowestFirst)
}

pub fn disintegrate_ordered(g: &Graph, alpha: usize, order: Order) -> DisintegrationTrace {
    let mut alive = g.vertices();
    let mut removal_order = Vec::new();
    loop {
        let eligible: VertexSet = alive.iter().filter(|&v| g.adj[v].intersection(alive).len() <= alpha).collect();
        let pick = match order {
            Order::LowestFirst => eligible.min(),
            Order::HighestFirst => eligible.max(),
        };
        let Some(v) = pick else { break };
        removal_order.push((v, g.adj[v].intersection(alive).len()));
        alive.remove(v);
    }
    DisintegrationTrace { alpha, removal_order, core: alive }
}

/// Vertex set of the `(alpha+1)`-core `H(G, alpha)`.
pub fn core(g: &Graph, alpha: usize) -> VertexSet {
    disintegrate(g, alpha).core
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum KopylovCase {
    Disintegrable,
    Core { s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KopylovReport {
    pub k: usize,
    pub t: usize,
    pub case: KopylovCase,
    /// Whether `H(G, t) = H(G, k - s)`; `None` in the disintegrable case.
    pub equality_check: Option<bool>,
}

impl KopylovReport {
    /// Whether the dichotomy's guarantees hold for this graph.
    pub fn holds(&self) -> bool {
        match self.case {
            KopylovCase::Disintegrable => true,
            KopylovCase::Core { s } => self.t + 2 <= s && s + 2 <= self.k && self.equality_check == Some(true),
        }
    }
}

/// Classifies a 2-connected graph with `n >= k >= 5` and no cycle of
/// length `k` or longer.
pub fn kopylov_case(g: &Graph, k: usize) -> Result<KopylovReport> {
    if k < 5 {
        return Err(precondition("k < 5"));
    }
    if g.n < k {
        return Err(precondition("n < k"));
    }
    if !g.is_2connected() {
        return Err(precondition("graph is not 2-connected"));
    }
    if berge::has_cycle_at_least(&g.to_hypergraph(), k) {
        return Err(precondition(format!("graph has a cycle of length at least {k}")));
    }
    Ok(classify(g, k))
}

/// The classification without checking preconditions.
pub fn classify(g: &Graph, k: usize) -> KopylovReport {
    let t = (k - 1) / 2;
    let ht = core(g, t);
    if ht.is_empty() {
        return KopylovReport { k, t, case: KopylovCase::Disintegrable, equality_check: None };
    }
    let s = ht.len();
    let equal = s <= k && core(g, k - s) == ht;
    KopylovReport { k, t, case: KopylovCase::Core { s }, equality_check: Some(equal) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_hnka;
    use proptest::prelude::*;

    #[test]
    fn simple_cores() {
        assert!(core(&Graph::path(4), 1).is_empty());
        assert_eq!(core(&Graph::cycle(5), 1), VertexSet::full(5));
        let tr = disintegrate(&Graph::path(4), 1);
        assert_eq!(tr.removal_order, vec![(0, 1), (1, 1), (2, 1), (3, 0)]);
    }

    #[test]
    fn kopylov_graph_core() {
        let g = build_hnka(14, 11, 3).unwrap().graph().unwrap();
        let tr = disintegrate(&g, 5);
        let ac: VertexSet = (0..3).chain(9..14).collect();
        assert_eq!(tr.core, ac);
        assert!(tr.removal_order.iter().all(|&(v, d)| (3..9).contains(&v) && d == 3));
        let rep = kopylov_case(&g, 11).unwrap();
        assert_eq!(rep.case, KopylovCase::Core { s: 8 });
        assert_eq!(rep.equality_check, Some(true));
        assert!(rep.holds());
    }

    #[test]
    fn a_equals_two_instance() {
        let g = build_hnka(8, 7, 2).unwrap().graph().unwrap();
        let rep = kopylov_case(&g, 7).unwrap();
        assert_eq!(rep.case, KopylovCase::Core { s: 5 });
        assert!(rep.holds());
    }

    #[test]
    fn theta_graph_disintegrates() {
        // x = 0, y = 1, three paths with two inner vertices each
        let g = Graph::from_edges(8, &[(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]);
        let rep = kopylov_case(&g, 7).unwrap();
        assert_eq!(rep.case, KopylovCase::Disintegrable);
        assert!(kopylov_case(&g, 6).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn core_is_order_independent_and_nested(g in arb_graph(), alpha in 0usize..5) {
            let lo = disintegrate(&g, alpha);
            let hi = disintegrate_ordered(&g, alpha, Order::HighestFirst);
            prop_assert_eq!(lo.core, hi.core);
            prop_assert!(lo.removal_order.iter().all(|&(_, d)| d <= alpha));
            prop_assert!(lo.core.iter().all(|v| g.adj[v].intersection(lo.core).len() > alpha));
            prop_assert!(core(&g, alpha + 1).is_subset(lo.core));
        }
    }
}
