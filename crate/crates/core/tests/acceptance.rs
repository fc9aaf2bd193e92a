//! Acceptance suite: one pass/fail line per criterion.

use std::time::{Duration, Instant};

use berge_core::bounds::{convexity_check, f, fstar, hsp, n_threshold, Threshold};
use berge_core::clique::{enumerate_cliques, max_sperner_cliques};
use berge_core::connectivity::is_2connected;
use berge_core::constructions::{build_hcal, build_hcal_literal, build_hnka};
use berge_core::enumerate::{collect, Caps, Dedup, SearchSpace};
use berge_core::oracle;
use berge_core::random::sample_shrink_inputs;
use berge_core::shrink::{reduce_to_happy, ShrinkTrace};
use berge_core::verify::{shrink_finding, verify, Grid, Theorem, VerificationReport};
use berge_core::{Graph, Hypergraph, VertexSet};
use num_bigint::BigUint;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report_ok(rep: &VerificationReport) -> Result<u64, String> {
    let bad: Vec<String> =
        rep.failures().map(|p| format!("n={} k={} r={}: {:?} {:?}", p.n, p.k, p.r, p.status, p.witness)).collect();
    if !bad.is_empty() {
        return Err(format!("{} violations [{}]", rep.theorem, bad.join("; ")));
    }
    Ok(rep.points.iter().map(|p| p.checked).sum())
}

fn grid(nmax: usize, ks: &[usize], rs: &[usize], workers: usize) -> Grid {
    let mut g = Grid::new(nmax, ks, rs);
    g.workers = workers;
    g
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).min(8)
}

fn c1_formulas() -> Outcome {
    let u = |x: u64| BigUint::from(x);
    let e = |r: berge_core::Result<BigUint>| r.map_err(|e| e.to_string());
    ensure(e(f(20, 10, 3, 4))? == u(104), "f(20,10,3,4)")?;
    ensure(e(f(8, 6, 3, 2))? == u(14), "f(8,6,3,2)")?;
    ensure(e(fstar(8, 6, 3, 2))? == u(8), "fstar(8,6,3,2)")?;
    ensure(e(hsp(6, 1, 3, 2))? == u(12), "hsp(6,1,3,2)")?;
    ensure(n_threshold(12, 3).map_err(|e| e.to_string())? == Threshold::At(17), "n_threshold(12,3)")?;
    Ok("5 values exact".into())
}

fn c2_constructions() -> Outcome {
    let h = build_hnka(14, 11, 3).map_err(|e| e.to_string())?;
    ensure(h.num_edges() == 46, format!("e(Hnka(14,11,3)) = {}", h.num_edges()))?;
    let mut points = Vec::new();
    for r in [3, 4] {
        for k in r..=10 {
            for n in k..=16 {
                for a in 1..=(k - 1) / 2 {
                    points.push((n, k, r, a));
                }
            }
        }
    }
    let checked: Vec<Result<(), String>> = points
        .par_iter()
        .map(|&(n, k, r, a)| {
            let want = f(n, k, r, a).map_err(|e| e.to_string())?;
            let lit = build_hcal_literal(n, k, r, a).map_err(|e| e.to_string())?;
            ensure(BigUint::from(lit.len()) == want, format!("literal count at {n},{k},{r},{a}"))?;
            if a >= 2 {
                let c = build_hcal(n, k, r, a).map_err(|e| format!("({n},{k},{r},{a}): {e}"))?;
                let h = &c.hypergraph;
                ensure(BigUint::from(h.num_edges()) == want, format!("count at {n},{k},{r},{a}"))?;
                ensure(h.is_sperner(), format!("not Sperner at {n},{k},{r},{a}"))?;
                ensure(is_2connected(h), format!("not 2-connected at {n},{k},{r},{a}"))?;
            }
            Ok(())
        })
        .collect();
    checked.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("Hnka(14,11,3) has 46 edges; {} HCal grid points", points.len()))
}

fn c3_circumference() -> Outcome {
    let h = build_hcal(8, 6, 3, 2).map_err(|e| e.to_string())?.hypergraph;
    let c = berge_core::berge::circumference(&h, None).length;
    ensure(c == 5, format!("c(HCal(8,6,3,2)) = {c}"))?;
    ensure(oracle::circumference(&h) == 5, "oracle disagrees on HCal(8,6,3,2)")?;
    let g = build_hnka(6, 5, 2).map_err(|e| e.to_string())?.hypergraph;
    let c = berge_core::berge::circumference(&g, None).length;
    ensure(c == 4, format!("c(Hnka(6,5,2)) = {c}"))?;
    ensure(oracle::circumference(&g) == 4, "oracle disagrees on Hnka(6,5,2)")?;
    Ok("5 and 4".into())
}

fn c4_main_cycles() -> Outcome {
    let g = grid(5, &[4, 5], &[3], workers());
    let mut g = g;
    g.caps = Caps::default();
    let rep = verify(Theorem::Main2Conn, &g).map_err(|e| e.to_string())?;
    let n = report_ok(&rep)?;
    Ok(format!("{} points, {n} hypergraphs", rep.points.len()))
}

fn c5_main_paths() -> Outcome {
    let mut g = grid(5, &[3, 4, 5], &[3], workers());
    g.caps = Caps::default();
    let rep = verify(Theorem::MainPaths, &g).map_err(|e| e.to_string())?;
    let n = report_ok(&rep)?;
    Ok(format!("{} points, {n} hypergraphs", rep.points.len()))
}

fn c6_kopylov() -> Outcome {
    let mut g = grid(8, &[5, 6, 7], &[2], workers());
    g.caps = Caps::default();
    let rep = verify(Theorem::Kopylov, &g).map_err(|e| e.to_string())?;
    let n = report_ok(&rep)?;
    Ok(format!("{n} graphs classified"))
}

fn c7_lifting() -> Outcome {
    let mut g = grid(12, &[], &[3, 4], workers());
    g.samples = 250;
    g.seed = 7;
    let rep = verify(Theorem::Lifting, &g).map_err(|e| e.to_string())?;
    let n = report_ok(&rep)?;
    ensure(n >= 500, format!("only {n} instances"))?;
    Ok(format!("{n} happy instances, all shadow cycles lifted"))
}

fn c8_shrink() -> Outcome {
    let (hs, _) = sample_shrink_inputs(11, 200, 5..=10, 3);
    ensure(hs.len() >= 200, "sampler short")?;
    let findings: Vec<Option<String>> = hs
        .par_iter()
        .map(|h| match reduce_to_happy(h, h.n()) {
            Ok(tr) => shrink_finding(&tr),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    if let Some((i, w)) = findings.iter().enumerate().find_map(|(i, w)| w.as_ref().map(|w| (i, w))) {
        return Err(format!("instance {:?}: {w}", hs[i].to_data().edges));
    }
    let worked =
        Hypergraph::new(6, 3, &[vec![0, 1, 2], vec![0, 3], vec![1, 4], vec![2, 5], vec![3, 4], vec![4, 5]]).unwrap();
    let golden = include_str!("data/worked_trace.json");
    let tr = reduce_to_happy(&worked, 6).map_err(|e| e.to_string())?;
    ensure(tr.to_json() == golden.trim_end(), "worked trace differs from its log")?;
    ensure(ShrinkTrace::from_json(golden).map_err(|e| e.to_string())? == tr, "golden trace does not parse back")?;
    Ok(format!("{} instances reduced; worked trace bit-exact", hs.len()))
}

fn brute_antichain(sets: &[VertexSet]) -> usize {
    fn rec(sets: &[VertexSet], i: usize, chosen: &mut Vec<VertexSet>) -> usize {
        if i == sets.len() {
            return chosen.len();
        }
        let skip = rec(sets, i + 1, chosen);
        if chosen.iter().any(|c| c.comparable(sets[i])) {
            return skip;
        }
        chosen.push(sets[i]);
        let take = rec(sets, i + 1, chosen);
        chosen.pop();
        skip.max(take)
    }
    rec(sets, 0, &mut Vec::new())
}

fn c9_nsp() -> Outcome {
    let mut compared = 0usize;
    for n in 1..=6 {
        let (gs, _) = collect(&SearchSpace::new(n, 2).dedup(Dedup::Isomorph), &Caps::default(), 1)
            .map_err(|e| e.to_string())?;
        for h in &gs {
            let g = Graph::from_hypergraph(h).expect("rank 2");
            for r in 1..=n {
                let poset = enumerate_cliques(&g, r).members;
                if poset.len() > 20 {
                    continue;
                }
                let (m, fam) = max_sperner_cliques(&g, r);
                ensure(fam.is_valid(&g, r), format!("invalid family on {:?}", g.edges()))?;
                let b = brute_antichain(&poset);
                ensure(m == b, format!("N_Sp {m} vs brute {b} on {:?}, r = {r}", g.edges()))?;
                compared += 1;
            }
        }
    }
    let mut g = grid(7, &[5, 6], &[2, 3], workers());
    g.caps = Caps::default();
    let rep = verify(Theorem::Kopyblock, &g).map_err(|e| e.to_string())?;
    let n = report_ok(&rep)?;
    Ok(format!("{compared} clique posets match brute force; bound holds on {n} graph checks"))
}

fn c10_convexity() -> Outcome {
    let mut count = 0;
    for n in 1..=30 {
        for k in 1..=15 {
            for r in 1..=6 {
                let rep = convexity_check(n, k, r).map_err(|e| e.to_string())?;
                ensure(rep.holds(), format!("not convex at n={n} k={k} r={r}: {:?}", rep.violations))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples convex"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 formula exactness", c1_formulas, Duration::from_secs(1)),
        ("2 construction fidelity", c2_constructions, Duration::from_secs(60)),
        ("3 circumference sharpness", c3_circumference, Duration::from_secs(10)),
        ("4 cycle bound, n <= 5", c4_main_cycles, Duration::from_secs(600)),
        ("5 path bound, n <= 5", c5_main_paths, Duration::from_secs(600)),
        ("6 Kopylov dichotomy, n <= 8", c6_kopylov, Duration::from_secs(900)),
        ("7 lifting lemma", c7_lifting, Duration::from_secs(300)),
        ("8 shrink engine", c8_shrink, Duration::from_secs(600)),
        ("9 N_Sp machinery", c9_nsp, Duration::from_secs(600)),
        ("10 convexity", c10_convexity, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let res = run();
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > budget => Err(format!("{msg}; over budget {budget:?}")),
            other => other,
        };
        match res {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({took:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
