use berge_core::berge::{circumference, has_cycle_at_least, longest_berge_path};
use berge_core::bounds::{f, fstar, main_cycle_bound};
use berge_core::connectivity::{cut_nodes, is_2connected, CutNodes};
use berge_core::constructions::build_hcal;
use berge_core::enumerate::{audit, collect, Caps, Dedup, Objective, SearchSpace};
use berge_core::lifting::lift_shadow_cycle;
use berge_core::oracle;
use berge_core::paths::cycles;
use berge_core::random::{sample_happy_sperner, sample_shrink_inputs};
use berge_core::shrink::{
    apply_params, apply_t1, reduce_to_happy, shrink_step, validate_step, Metrics, StepOutcome, StepParams, Terminal,
};
use berge_core::verify::{verify, Grid, Theorem};
use berge_core::{Error, Hypergraph, VertexSet};
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_hypergraph(n: usize, r: usize) -> impl Strategy<Value = Hypergraph> {
    proptest::collection::vec(proptest::collection::btree_set(0..n, 2..=r), 0..8).prop_map(move |es| {
        let mut sets: Vec<VertexSet> = es.into_iter().map(|e| e.into_iter().collect()).collect();
        sets.sort();
        sets.dedup();
        Hypergraph::from_sets(n, r, sets).unwrap()
    })
}

/// Incidence-bigraph 2-connectivity by deleting each node in turn.
fn two_connected_oracle(h: &Hypergraph) -> bool {
    let nodes = h.num_edges() + h.n();
    if nodes < 3 {
        return false;
    }
    let adj = |x: usize| -> Vec<usize> {
        if x < h.num_edges() {
            h.edge(x).iter().map(|v| h.num_edges() + v).collect()
        } else {
            h.incident_edges(x - h.num_edges())
        }
    };
    let connected_without = |gone: Option<usize>| {
        let start = (0..nodes).find(|&x| Some(x) != gone).unwrap();
        let mut seen = vec![false; nodes];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for y in adj(x) {
                if Some(y) != gone && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..nodes).all(|x| Some(x) == gone || seen[x])
    };
    connected_without(None) && (0..nodes).all(|x| connected_without(Some(x)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn two_connectivity_matches_node_deletion(h in arb_hypergraph(6, 3)) {
        prop_assert_eq!(is_2connected(&h), two_connected_oracle(&h));
        let cut = cut_nodes(&h.incidence_bigraph());
        if let CutNodes::Nodes(ns) = cut {
            prop_assert_eq!(ns.is_empty(), two_connected_oracle(&h) || h.num_edges() + h.n() < 3);
        }
    }

    #[test]
    fn shadow_cycles_of_happy_hypergraphs_lift(seed in any::<u64>(), r in 3usize..5) {
        let (hs, _) = sample_happy_sperner(seed, 1, (r + 1)..=9, r);
        let h = &hs[0];
        let c = circumference(h, None).length;
        for cyc in cycles(&h.shadow_graph(), r, 50) {
            let w = lift_shadow_cycle(h, &cyc).unwrap();
            prop_assert!(w.validate(h).is_ok());
            prop_assert_eq!(&w.base, &cyc);
            prop_assert!(c >= cyc.len());
        }
    }

    #[test]
    fn shrink_steps_decrease_and_preserve(seed in any::<u64>()) {
        let (hs, _) = sample_shrink_inputs(seed, 1, 5..=8, 3);
        let h = &hs[0];
        let k = h.n();
        let tr = reduce_to_happy(h, k).unwrap();
        prop_assert!(tr.checks.all_hold(), "{:?}", tr.checks);
        let mut cur = h.clone();
        for s in &tr.steps {
            let after = apply_params(&cur, &s.params).unwrap().build().unwrap();
            let (m, prev) = (Metrics::of(&after), Metrics::of(&cur));
            prop_assert_eq!(&s.after, &m);
            prop_assert!(m.size_sum + m.vertices < prev.size_sum + prev.vertices);
            prop_assert!(after.is_sperner() && is_2connected(&after));
            prop_assert!(!has_cycle_at_least(&after, k));
            cur = after;
        }
        let last = tr.final_hypergraph().unwrap();
        prop_assert_eq!(tr.replay().unwrap(), last.clone());
        if tr.terminal == Terminal::Happy {
            prop_assert!(last.is_happy());
        }
    }

    #[test]
    fn fstar_never_exceeds_f(n in 1usize..30, k in 1usize..15, r in 1usize..7, a in 0usize..15) {
        if let (Ok(x), Ok(y)) = (f(n, k, r, a), fstar(n, k, r, a)) {
            prop_assert!(y <= x);
        }
    }

    #[test]
    fn path_search_matches_oracle(h in arb_hypergraph(6, 3)) {
        prop_assert_eq!(longest_berge_path(&h, None).length, oracle::longest_path(&h));
    }
}

#[test]
fn hcal_has_no_long_cycle_at_small_sizes() {
    for (n, k, r, a) in [(8, 6, 3, 2), (9, 7, 3, 2), (9, 7, 3, 3), (10, 8, 4, 2), (10, 8, 4, 3), (9, 9, 3, 4)] {
        let h = build_hcal(n, k, r, a).unwrap().hypergraph;
        assert_eq!(BigUint::from(h.num_edges()), f(n, k, r, a).unwrap());
        let c = oracle::circumference(&h);
        assert!(c < k, "c(HCal({n},{k},{r},{a})) = {c}");
        assert_eq!(circumference(&h, None).length, c);
    }
}

#[test]
fn t1_example_validates() {
    let h = Hypergraph::new(4, 3, &[vec![0, 1, 2], vec![0, 1], vec![2, 3], vec![0, 3]]).unwrap();
    assert!(!h.is_sperner());
    let e = h.edge_index(VertexSet::from_iter([0, 1, 2])).unwrap();
    let after = apply_t1(&h, e, 0).unwrap();
    let check = validate_step(&h, &after, 5, &StepParams::T1 { edge: vec![0, 1, 2], vertex: 0 });
    assert!(check.valid(), "{check:?}");
    assert!(matches!(shrink_step(&h, 5), Err(Error::Precondition(_))));
}

#[test]
fn hcal_is_already_happy() {
    let h = build_hcal(8, 6, 3, 2).unwrap().hypergraph;
    assert!(matches!(shrink_step(&h, 6).unwrap(), StepOutcome::AlreadyHappy));
    let tr = reduce_to_happy(&h, 6).unwrap();
    assert!(tr.steps.is_empty());
    assert_eq!(tr.terminal, Terminal::Happy);
}

#[test]
fn audit_accounts_for_every_admissible_hypergraph() {
    for (n, k) in [(4, 3), (4, 4), (5, 4)] {
        let space = SearchSpace::new(n, 3).sperner().two_connected().objective(Objective::CycleBelow(k));
        let stats = audit(&space, &Caps::default()).unwrap();
        let (all, _) = collect(&SearchSpace::new(n, 3).sperner().two_connected(), &Caps::default(), 1).unwrap();
        let below = all.iter().filter(|h| oracle::circumference(h) < k).count() as u64;
        assert_eq!(stats.visited, below);
        assert_eq!(stats.visited + stats.skipped.unwrap(), all.len() as u64);
    }
}

#[test]
fn sperner_family_count_on_four_vertices() {
    // brute force over all subsets of the 10 candidate edges
    let cands: Vec<VertexSet> = VertexSet::full(4)
        .subsets_of_size(2)
        .into_iter()
        .chain(VertexSet::full(4).subsets_of_size(3))
        .collect();
    let mut want = 0;
    for mask in 0u32..(1 << cands.len()) {
        let es: Vec<VertexSet> = (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
        if es.iter().enumerate().all(|(i, a)| es[i + 1..].iter().all(|b| !a.comparable(*b))) {
            want += 1;
        }
    }
    let (got, _) = collect(&SearchSpace::new(4, 3).sperner().dedup(Dedup::Labeled), &Caps::default(), 2).unwrap();
    assert_eq!(got.len(), want);
}

#[test]
fn extremal_numbers_respect_the_cycle_bound() {
    let rep = verify(Theorem::Main2Conn, &Grid::new(5, &[4, 5], &[3])).unwrap();
    assert!(rep.holds());
    for p in &rep.points {
        let bound = main_cycle_bound(p.n, p.k, p.r).unwrap().to_string();
        assert_eq!(p.bound.as_deref(), Some(bound.as_str()));
    }
}

#[test]
fn structural_lemmas_on_small_instances() {
    for t in [Theorem::CycleComponent, Theorem::Cutedge] {
        let rep = verify(t, &Grid::new(5, &[3, 4], &[3])).unwrap();
        assert!(rep.holds(), "{}", rep.to_csv());
    }
    for t in [Theorem::Pps, Theorem::Kpath] {
        let rep = verify(t, &Grid::new(6, &[4, 5], &[2, 3])).unwrap();
        assert!(rep.holds(), "{}", rep.to_csv());
    }
}
