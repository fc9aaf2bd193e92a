//! Sperner families of cliques: enumeration, the LYM-type cap, and exact
//! `N_Sp(G, r)` as a maximum antichain of the containment poset.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::berge;
use crate::bounds::{capped_binom, f, hsp};
use crate::graph::Graph;
use crate::matching::{hopcroft_karp, konig_cover, Bipartite};
use crate::paths::{is_k_path_connected, is_l_hamiltonian};
use crate::vertex_set::VertexSet;

/// Whether single vertices count as cliques.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Singletons {
    #[default]
    Include,
    Exclude,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueFamily {
    pub members: Vec<VertexSet>,
}

impl CliqueFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_sperner(&self) -> bool {
        let m = &self.members;
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| !m[i].comparable(m[j])))
    }

    /// Every member is a clique of `g` with size in `1..=r`.
    pub fn is_valid(&self, g: &Graph, r: usize) -> bool {
        self.members.iter().all(|&c| (1..=r).contains(&c.len()) && g.is_clique(c))
    }
}

/// `C(h, min{r, ⌊h/2⌋})`.
pub fn lym_bound(h: usize, r: usize) -> BigUint {
    capped_binom(h, r)
}

/// All cliques of size `1..=r`, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, r: usize) -> CliqueFamily {
    let mut out = Vec::new();
    for v in 0..g.n {
        extend(g, r, VertexSet::singleton(v), g.adj[v].intersection(VertexSet::above(v)), &mut out);
    }
    out.sort();
    CliqueFamily { members: out }
}

fn extend(g: &Graph, r: usize, clique: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
    if clique.len() > r {
        return;
    }
    out.push(clique);
    for w in cand {
        extend(g, r, clique.with(w), cand.intersection(g.adj[w]).intersection(VertexSet::above(w)), out);
    }
}

/// Number of cliques with exactly `s` vertices.
pub fn count_cliques(g: &Graph, s: usize) -> usize {
    enumerate_cliques(g, s).members.iter().filter(|c| c.len() == s).count()
}

/// Maximum antichain of a family of distinct sets under inclusion, via
/// minimum chain cover duality.
pub fn max_antichain(sets: &[VertexSet]) -> Vec<VertexSet> {
    let p = sets.len();
    let mut b = Bipartite::new(p, p);
    for i in 0..p {
        for j in 0..p {
            if sets[i].is_proper_subset(sets[j]) {
                b.add_edge(i, j);
            }
        }
    }
    let m = hopcroft_karp(&b);
    let (cl, cr) = konig_cover(&b, &m);
    (0..p).filter(|&i| !cl[i] && !cr[i]).map(|i| sets[i]).collect()
}

/// `N_Sp(G, r)` with a witnessing family, singletons included.
pub fn max_sperner_cliques(g: &Graph, r: usize) -> (usize, CliqueFamily) {
    max_sperner_cliques_with(g, r, Singletons::Include)
}

pub fn max_sperner_cliques_with(g: &Graph, r: usize, singletons: Singletons) -> (usize, CliqueFamily) {
    let mut all = enumerate_cliques(g, r).members;
    if singletons == Singletons::Exclude {
        all.retain(|c| c.len() >= 2);
    }
    let members = max_antichain(&all);
    (members.len(), CliqueFamily { members })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum CheckStatus {
    Holds,
    Violated,
    OutOfDomain(String),
}

impl CheckStatus {
    pub fn is_violation(&self) -> bool {
        matches!(self, CheckStatus::Violated)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NspReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub nsp: usize,
    pub circumference: usize,
    /// `max{f(n,k,r,2), f(n,k,r,⌊(k-1)/2⌋)}` when in domain.
    pub cycle_bound: Option<BigUint>,
    pub cycle_check: CheckStatus,
    /// Whether `N_Sp·(k-3) > (n-2)·C(k-1, min{r,⌊(k-1)/2⌋})`.
    pub kpath_premise: Option<bool>,
    pub k_path_connected: Option<bool>,
    pub kpath_check: CheckStatus,
}

impl NspReport {
    pub fn has_violation(&self) -> bool {
        self.cycle_check.is_violation() || self.kpath_check.is_violation()
    }
}

/// Checks the clique bound for graphs without long cycles and the
/// k-path-connectivity criterion on `g`.
pub fn nsp_bound_check(g: &Graph, k: usize, r: usize) -> NspReport {
    let n = g.n;
    let (nsp, _) = max_sperner_cliques(g, r);
    let two = g.is_2connected();
    let circ = berge::circumference(&g.to_hypergraph(), Some(k)).length;
    let mut report = NspReport {
        n,
        k,
        r,
        nsp,
        circumference: circ,
        cycle_bound: None,
        cycle_check: CheckStatus::Holds,
        kpath_premise: None,
        k_path_connected: None,
        kpath_check: CheckStatus::Holds,
    };
    report.cycle_check = if !two {
        CheckStatus::OutOfDomain("not 2-connected".into())
    } else if n < k {
        CheckStatus::OutOfDomain("n < k".into())
    } else if k < 5 {
        CheckStatus::OutOfDomain("k < 5".into())
    } else if r == 0 {
        CheckStatus::OutOfDomain("r = 0".into())
    } else if circ >= k {
        CheckStatus::OutOfDomain(format!("circumference >= {k}"))
    } else {
        let bound = f(n, k, r, 2).expect("domain").max(f(n, k, r, (k - 1) / 2).expect("domain"));
        let ok = BigUint::from(nsp) <= bound;
        report.cycle_bound = Some(bound);
        if ok {
            CheckStatus::Holds
        } else {
            CheckStatus::Violated
        }
    };
    report.kpath_check = if !two {
        CheckStatus::OutOfDomain("not 2-connected".into())
    } else if n < 4 {
        CheckStatus::OutOfDomain("n < 4".into())
    } else if k < 4 {
        CheckStatus::OutOfDomain("k < 4".into())
    } else {
        let premise = BigUint::from(nsp) * (k - 3) > BigUint::from(n - 2) * capped_binom(k - 1, r);
        report.kpath_premise = Some(premise);
        if premise {
            let conn = is_k_path_connected(g, k);
            report.k_path_connected = Some(conn);
            if conn {
                CheckStatus::Holds
            } else {
                CheckStatus::Violated
            }
        } else {
            CheckStatus::Holds
        }
    };
    report
}

/// Clique bound for graphs of minimum degree `d` that are not `l`-hamiltonian,
/// checked for every admissible `d`.
pub fn pps_check(g: &Graph, l: usize, r: usize) -> CheckStatus {
    let n = g.n;
    if n == 0 || n + l < 1 {
        return CheckStatus::OutOfDomain("empty graph".into());
    }
    let top = (n + l - 1) / 2;
    let delta = g.min_degree();
    if delta <= l || top <= l {
        return CheckStatus::OutOfDomain("no d with l < d <= min degree".into());
    }
    if l >= n {
        return CheckStatus::OutOfDomain("l >= n".into());
    }
    if is_l_hamiltonian(g, l) {
        return CheckStatus::OutOfDomain(format!("graph is {l}-hamiltonian"));
    }
    let nsp = BigUint::from(max_sperner_cliques(g, r).0);
    let cap = hsp(n, l, r, top).expect("domain");
    for d in l + 1..=top.min(delta) {
        let bound = hsp(n, l, r, d).expect("domain").max(cap.clone());
        if nsp > bound {
            return CheckStatus::Violated;
        }
    }
    CheckStatus::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Largest antichain by exhaustive branching.
    fn brute_antichain(sets: &[VertexSet]) -> usize {
        fn rec(sets: &[VertexSet], i: usize, chosen: &mut Vec<VertexSet>) -> usize {
            if i == sets.len() {
                return chosen.len();
            }
            let mut best = rec(sets, i + 1, chosen);
            if chosen.iter().all(|c| !c.comparable(sets[i])) {
                chosen.push(sets[i]);
                best = best.max(rec(sets, i + 1, chosen));
                chosen.pop();
            }
            best
        }
        rec(sets, 0, &mut Vec::new())
    }

    #[test]
    fn lym_values() {
        assert_eq!(lym_bound(4, 2), BigUint::from(6u32));
        assert_eq!(lym_bound(5, 3), BigUint::from(10u32));
        assert_eq!(lym_bound(10, 3), BigUint::from(120u32));
    }

    #[test]
    fn clique_counts() {
        assert_eq!(enumerate_cliques(&Graph::complete(3), 2).len(), 6);
        assert_eq!(enumerate_cliques(&Graph::complete(4), 3).len(), 14);
        assert_eq!(enumerate_cliques(&Graph::cycle(5), 3).len(), 10);
        assert_eq!(count_cliques(&Graph::complete(5), 3), 10);
    }

    #[test]
    fn nsp_examples() {
        let (s, fam) = max_sperner_cliques(&Graph::complete(4), 3);
        assert_eq!(s, 6);
        assert!(fam.is_sperner() && fam.is_valid(&Graph::complete(4), 3));
        assert_eq!(max_sperner_cliques(&Graph::cycle(5), 2).0, 5);
        assert_eq!(max_sperner_cliques(&Graph::path(3), 2).0, 3);
        assert_eq!(max_sperner_cliques_with(&Graph::path(3), 2, Singletons::Exclude).0, 2);
        assert_eq!(max_sperner_cliques_with(&Graph::path(3), 1, Singletons::Exclude).0, 0);
    }

    #[test]
    fn bound_check_examples() {
        let rep = nsp_bound_check(&Graph::complete(4), 5, 2);
        assert_eq!(rep.nsp, 6);
        assert!(matches!(rep.cycle_check, CheckStatus::OutOfDomain(_)));
        let rep = nsp_bound_check(&Graph::cycle(5), 4, 2);
        assert!(matches!(rep.cycle_check, CheckStatus::OutOfDomain(_)));
        assert!(!rep.has_violation());
        let rep = nsp_bound_check(&Graph::cycle(6), 5, 3);
        assert_eq!(rep.circumference, 6);
    }

    #[test]
    fn pps_on_cycle() {
        assert_eq!(pps_check(&Graph::cycle(5), 1, 2), CheckStatus::Holds);
    }

    fn arb_graph(n: usize) -> impl Strategy<Value = Graph> {
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
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn dilworth_matches_brute_force(g in (2usize..7).prop_flat_map(arb_graph), r in 1usize..4) {
            let all = enumerate_cliques(&g, r).members;
            prop_assume!(all.len() <= 20);
            let (s, fam) = max_sperner_cliques(&g, r);
            prop_assert_eq!(s, brute_antichain(&all));
            prop_assert!(fam.is_sperner() && fam.is_valid(&g, r));
            prop_assert!(BigUint::from(s) <= lym_bound(g.n, r));
            for size in 1..=r {
                prop_assert!(s >= count_cliques(&g, size));
            }
        }
    }
}
