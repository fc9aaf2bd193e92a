//! Theorem-by-theorem verification over enumerated and sampled instances.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::berge::{longest_berge_path, BergeWitness};
use crate::bounds::{main_cycle_bound, main_path_bound};
use crate::clique::{nsp_bound_check, pps_check, CheckStatus};
use crate::connectivity::{cut_nodes, CutNodes};
use crate::bigraph::BigraphNode;
use crate::disintegration::kopylov_case;
use crate::enumerate::{self, extremal_number, Caps, Dedup, Mode, Objective, SearchSpace};
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{EdgeFamily, Hypergraph, HypergraphData};
use crate::lifting::lift_shadow_cycle;
use crate::oracle;
use crate::paths::cycles;
use crate::random::{sample_happy_sperner, sample_shrink_inputs};
use crate::shrink::{reduce_to_happy, Terminal};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    Main2Conn,
    MainPaths,
    Kopyblock,
    Kopylov,
    Pps,
    Kpath,
    Lifting,
    Shrink,
    CycleComponent,
    Cutedge,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Main2Conn,
        Theorem::MainPaths,
        Theorem::Kopyblock,
        Theorem::Kopylov,
        Theorem::Pps,
        Theorem::Kpath,
        Theorem::Lifting,
        Theorem::Shrink,
        Theorem::CycleComponent,
        Theorem::Cutedge,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Main2Conn => "main2conn",
            Theorem::MainPaths => "main-paths",
            Theorem::Kopyblock => "kopyblock",
            Theorem::Kopylov => "kopylov",
            Theorem::Pps => "pps",
            Theorem::Kpath => "kpath",
            Theorem::Lifting => "lifting",
            Theorem::Shrink => "shrink",
            Theorem::CycleComponent => "cycle-component",
            Theorem::Cutedge => "cutedge",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| domain(format!("unknown theorem id {s:?}")))
    }
}

/// Parameter grid. `samples` and `seed` drive the randomized checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub nmin: usize,
    pub nmax: usize,
    pub ks: Vec<usize>,
    pub rs: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
    pub caps: Caps,
}

impl Grid {
    pub fn new(nmax: usize, ks: &[usize], rs: &[usize]) -> Self {
        Grid {
            nmin: 1,
            nmax,
            ks: ks.to_vec(),
            rs: rs.to_vec(),
            samples: 100,
            seed: 0,
            workers: 1,
            caps: Caps::from_env(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum PointStatus {
    Holds,
    OutOfDomain(String),
    /// Violation confirmed by the independent oracle.
    Failure(String),
    /// The fast search and the oracle disagree on the witness.
    EngineMismatch(String),
}

impl PointStatus {
    pub fn label(&self) -> &'static str {
        match self {
            PointStatus::Holds => "holds",
            PointStatus::OutOfDomain(_) => "out-of-domain",
            PointStatus::Failure(_) => "FAILURE",
            PointStatus::EngineMismatch(_) => "engine-mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Largest value of the bounded quantity seen at this point.
    pub extremal: Option<String>,
    pub bound: Option<String>,
    /// Instances examined.
    pub checked: u64,
    pub status: PointStatus,
    pub witness: Option<HypergraphData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub points: Vec<PointResult>,
}

impl VerificationReport {
    /// No failures and no engine mismatches.
    pub fn holds(&self) -> bool {
        self.points.iter().all(|p| matches!(p.status, PointStatus::Holds | PointStatus::OutOfDomain(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &PointResult> {
        self.points.iter().filter(|p| matches!(p.status, PointStatus::Failure(_) | PointStatus::EngineMismatch(_)))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("theorem,n,k,r,extremal,bound,status\n");
        for p in &self.points {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.theorem,
                p.n,
                p.k,
                p.r,
                p.extremal.as_deref().unwrap_or(""),
                p.bound.as_deref().unwrap_or(""),
                p.status.label()
            ));
        }
        s
    }
}

/// Running tally over the instances of one grid point.
#[derive(Clone, Debug, Default)]
struct Tally {
    checked: u64,
    max: Option<BigUint>,
    failure: Option<(Hypergraph, String)>,
}

impl Tally {
    fn see(mut self, value: Option<BigUint>, fail: Option<(Hypergraph, String)>) -> Self {
        self.checked += 1;
        if let Some(v) = value {
            if self.max.as_ref().is_none_or(|m| v > *m) {
                self.max = Some(v);
            }
        }
        if self.failure.is_none() {
            self.failure = fail;
        }
        self
    }

    fn merge(mut self, o: Tally) -> Self {
        self.checked += o.checked;
        if let Some(v) = o.max {
            if self.max.as_ref().is_none_or(|m| v > *m) {
                self.max = Some(v);
            }
        }
        if self.failure.is_none() {
            self.failure = o.failure;
        }
        self
    }

    fn into_point(self, n: usize, k: usize, r: usize, bound: Option<String>) -> PointResult {
        let (status, witness) = match self.failure {
            Some((h, why)) => (PointStatus::Failure(why), Some(h.to_data())),
            None => (PointStatus::Holds, None),
        };
        PointResult { n, k, r, extremal: self.max.map(|m| m.to_string()), bound, checked: self.checked, status, witness }
    }
}

fn out_of_domain(n: usize, k: usize, r: usize, why: impl Into<String>) -> PointResult {
    PointResult {
        n,
        k,
        r,
        extremal: None,
        bound: None,
        checked: 0,
        status: PointStatus::OutOfDomain(why.into()),
        witness: None,
    }
}

fn graph_tally<F>(space: SearchSpace, grid: &Grid, check: F) -> Result<Tally>
where
    F: Fn(&Graph) -> (Option<BigUint>, Option<String>) + Sync,
{
    let (t, _) = enumerate::fold(
        &space,
        &grid.caps,
        grid.workers,
        Tally::default,
        |t, h| {
            let g = Graph::from_hypergraph(h).expect("rank-2 space");
            let (v, fail) = check(&g);
            t.see(v, fail.map(|why| (h.clone(), why)))
        },
        Tally::merge,
    )?;
    Ok(t)
}

fn hyper_tally<F>(space: SearchSpace, grid: &Grid, check: F) -> Result<Tally>
where
    F: Fn(&Hypergraph) -> (Option<BigUint>, Option<String>) + Sync,
{
    let (t, _) = enumerate::fold(
        &space,
        &grid.caps,
        grid.workers,
        Tally::default,
        |t, h| {
            let (v, fail) = check(h);
            t.see(v, fail.map(|why| (h.clone(), why)))
        },
        Tally::merge,
    )?;
    Ok(t)
}

fn graph_space(n: usize, k: Option<usize>) -> SearchSpace {
    let s = SearchSpace::new(n, 2).two_connected().dedup(Dedup::Isomorph);
    match k {
        Some(k) => s.objective(Objective::CycleBelow(k)),
        None => s,
    }
}

fn extremal_point(n: usize, k: usize, r: usize, mode: Mode, grid: &Grid) -> Result<PointResult> {
    let bound = match mode {
        Mode::Cycle => main_cycle_bound(n, k, r),
        Mode::Path => main_path_bound(n, k, r),
    };
    let bound = match bound {
        Ok(b) => b,
        Err(e) => return Ok(out_of_domain(n, k, r, e.to_string())),
    };
    let ex = extremal_number(n, k, r, mode, &grid.caps, grid.workers)?;
    let mut p = PointResult {
        n,
        k,
        r,
        extremal: Some(ex.max_edges.to_string()),
        bound: Some(bound.to_string()),
        checked: ex.stats.visited,
        status: PointStatus::Holds,
        witness: None,
    };
    if BigUint::from(ex.max_edges) > bound {
        let h = ex.witness.expect("a maximum exists");
        let confirmed = match mode {
            Mode::Cycle => oracle::circumference(&h) < k,
            Mode::Path => oracle::longest_path(&h) < k,
        };
        let why = format!("{} edges exceed bound {bound}", ex.max_edges);
        p.status = if confirmed { PointStatus::Failure(why) } else { PointStatus::EngineMismatch(why) };
        p.witness = Some(h.to_data());
    }
    Ok(p)
}

fn components_without(h: &Hypergraph, skip: usize) -> Vec<VertexSet> {
    let n = h.n();
    let mut comp: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    for (i, &e) in h.edges().iter().enumerate() {
        if i == skip {
            continue;
        }
        let touched: Vec<usize> = (0..comp.len()).filter(|&c| !comp[c].intersection(e).is_empty()).collect();
        let merged = touched.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(comp[c]));
        for &c in touched.iter().rev() {
            comp.swap_remove(c);
        }
        comp.push(merged);
    }
    comp.sort();
    comp
}

/// Shrinking a cut edge inside one component never lengthens paths and
/// keeps the hypergraph connected and Sperner.
fn cutedge_check(h: &Hypergraph) -> Option<String> {
    let CutNodes::Nodes(cuts) = cut_nodes(&h.incidence_bigraph()) else { return None };
    let before = longest_berge_path(h, None).length;
    for node in cuts {
        let BigraphNode::Edge(e) = node else { continue };
        let edge = h.edge(e);
        for c in components_without(h, e) {
            let inside = c.intersection(edge);
            if inside.len() < 2 {
                continue;
            }
            let keep = inside.min().expect("nonempty");
            let shrunk = edge.difference(inside).with(keep);
            let mut f: EdgeFamily = h.family();
            f.edges[e] = shrunk;
            let Ok(g) = f.build() else {
                return Some(format!("shrinking edge {:?} gives an invalid hypergraph", edge.to_vec()));
            };
            if !g.is_sperner() || !g.is_connected() {
                return Some(format!("shrinking edge {:?} breaks Sperner or connectivity", edge.to_vec()));
            }
            let after = longest_berge_path(&g, None).length;
            if after > before {
                return Some(format!("shrinking edge {:?} lengthens paths {before} -> {after}", edge.to_vec()));
            }
        }
    }
    None
}

/// Base sets of Berge `k`-cycles are closed under incident edges.
fn cycle_component_check(h: &Hypergraph, k: usize) -> Option<String> {
    for base in VertexSet::full(h.n()).subsets_of_size(k) {
        if !oracle::has_cycle_on(h, &base.to_vec()) {
            continue;
        }
        if let Some(e) = h.edges().iter().find(|e| !e.intersection(base).is_empty() && !e.is_subset(base)) {
            return Some(format!("cycle on {:?} meets edge {:?}", base.to_vec(), e.to_vec()));
        }
    }
    None
}

fn lifting_failure(h: &Hypergraph, r: usize) -> Option<String> {
    for c in cycles(&h.shadow_graph(), r, 200) {
        match lift_shadow_cycle(h, &c) {
            Ok(w) => {
                if let Err(e) = w.validate(h) {
                    return Some(format!("lift of {c:?} does not validate: {e}"));
                }
                if w.base != c {
                    return Some(format!("lift of {c:?} changed its base"));
                }
            }
            Err(e) => return Some(format!("cycle {c:?}: {e}")),
        }
    }
    None
}

/// Checks one theorem over the grid.
pub fn verify(theorem: Theorem, grid: &Grid) -> Result<VerificationReport> {
    let mut points = Vec::new();
    let ns = grid.nmin.max(1)..=grid.nmax;
    match theorem {
        Theorem::Main2Conn | Theorem::MainPaths => {
            let mode = if theorem == Theorem::Main2Conn { Mode::Cycle } else { Mode::Path };
            for &r in &grid.rs {
                for &k in &grid.ks {
                    for n in ns.clone().filter(|&n| n >= k) {
                        points.push(extremal_point(n, k, r, mode, grid)?);
                    }
                }
            }
        }
        Theorem::Kopyblock | Theorem::Kpath => {
            for &r in &grid.rs {
                for &k in &grid.ks {
                    for n in ns.clone().filter(|&n| n >= 3) {
                        let objective = (theorem == Theorem::Kopyblock).then_some(k);
                        let t = graph_tally(graph_space(n, objective), grid, |g| {
                            let rep = nsp_bound_check(g, k, r);
                            let status = if theorem == Theorem::Kopyblock { rep.cycle_check } else { rep.kpath_check };
                            let fail = status.is_violation().then(|| format!("N_Sp = {}", rep.nsp));
                            (Some(BigUint::from(rep.nsp)), fail)
                        })?;
                        let bound = (theorem == Theorem::Kopyblock && n >= k && k >= 5).then(|| {
                            crate::bounds::f(n, k, r, 2).expect("domain").max(crate::bounds::f(n, k, r, (k - 1) / 2).expect("domain")).to_string()
                        });
                        if theorem == Theorem::Kopyblock && (n < k || k < 5) {
                            points.push(out_of_domain(n, k, r, "needs n >= k >= 5"));
                        } else {
                            points.push(t.into_point(n, k, r, bound));
                        }
                    }
                }
            }
        }
        Theorem::Kopylov => {
            for &k in &grid.ks {
                for n in ns.clone() {
                    if k < 5 || n < k {
                        points.push(out_of_domain(n, k, 2, "needs n >= k >= 5"));
                        continue;
                    }
                    let t = graph_tally(graph_space(n, Some(k)), grid, |g| match kopylov_case(g, k) {
                        Ok(rep) => {
                            let s = match rep.case {
                                crate::disintegration::KopylovCase::Disintegrable => 0,
                                crate::disintegration::KopylovCase::Core { s } => s,
                            };
                            (Some(BigUint::from(s)), (!rep.holds()).then(|| format!("{:?}", rep.case)))
                        }
                        Err(e) => (None, Some(e.to_string())),
                    })?;
                    points.push(t.into_point(n, k, 2, Some(format!("{}..={}", (k - 1) / 2 + 2, k - 2))));
                }
            }
        }
        Theorem::Pps => {
            for &r in &grid.rs {
                for &l in &grid.ks {
                    for n in ns.clone().filter(|&n| n >= 3) {
                        let t = graph_tally(graph_space(n, None), grid, |g| {
                            let s = pps_check(g, l, r);
                            (None, matches!(s, CheckStatus::Violated).then(|| "N_Sp above bound".to_string()))
                        })?;
                        points.push(t.into_point(n, l, r, None));
                    }
                }
            }
        }
        Theorem::CycleComponent | Theorem::Cutedge => {
            for &r in &grid.rs {
                for &k in &grid.ks {
                    for n in ns.clone().filter(|&n| n >= 2) {
                        let space = SearchSpace::new(n, r)
                            .sperner()
                            .connected()
                            .objective(Objective::PathBelow(k))
                            .dedup(Dedup::Labeled);
                        let t = hyper_tally(space, grid, |h| {
                            let fail =
                                if theorem == Theorem::Cutedge { cutedge_check(h) } else { cycle_component_check(h, k) };
                            (None, fail)
                        })?;
                        points.push(t.into_point(n, k, r, None));
                    }
                }
            }
        }
        Theorem::Lifting => {
            for &r in &grid.rs {
                let lo = grid.nmin.max(r + 1);
                if lo > grid.nmax {
                    points.push(out_of_domain(grid.nmax, r, r, "n range too small"));
                    continue;
                }
                let (hs, _) = sample_happy_sperner(grid.seed, grid.samples, lo..=grid.nmax, r);
                let results: Vec<Option<String>> = hs.par_iter().map(|h| lifting_failure(h, r)).collect();
                let mut t = Tally::default();
                for (h, fail) in hs.iter().zip(results) {
                    t = t.see(None, fail.map(|w| (h.clone(), w)));
                }
                points.push(t.into_point(grid.nmax, r, r, None));
            }
        }
        Theorem::Shrink => {
            for &r in &grid.rs {
                let lo = grid.nmin.max(5);
                let (hs, _) = sample_shrink_inputs(grid.seed, grid.samples, lo..=grid.nmax, r);
                let results: Vec<Result<Option<String>>> = hs
                    .par_iter()
                    .map(|h| {
                        let tr = reduce_to_happy(h, h.n())?;
                        Ok(shrink_finding(&tr))
                    })
                    .collect();
                let mut t = Tally::default();
                for (h, res) in hs.iter().zip(results) {
                    t = t.see(None, res?.map(|w| (h.clone(), w)));
                }
                points.push(t.into_point(grid.nmax, grid.nmax, r, None));
            }
        }
    }
    Ok(VerificationReport { theorem, points })
}

/// A description of what went wrong in a trace, if anything.
pub fn shrink_finding(tr: &crate::shrink::ShrinkTrace) -> Option<String> {
    if !tr.checks.all_hold() {
        return Some(format!("trace checks: {:?}", tr.checks));
    }
    match &tr.terminal {
        Terminal::Happy => None,
        Terminal::Stuck(None) => Some("stuck without a block report".into()),
        Terminal::Stuck(Some(rep)) if !(rep.b5 && rep.at_most_one_long) => Some("block report fails its clauses".into()),
        Terminal::Stuck(Some(_)) => None,
    }
}

/// Re-validates a witness of a Berge object with the fast checker.
pub fn witness_ok(h: &Hypergraph, w: &BergeWitness) -> bool {
    w.validate(h).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn small_main_grid() {
        let rep = verify(Theorem::Main2Conn, &Grid::new(4, &[4], &[3])).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.points.len(), 1);
        assert!(rep.to_csv().starts_with("theorem,n,k,r,extremal,bound,status\nmain2conn,4,4,3,"));
    }

    #[test]
    fn cutedge_components() {
        let h = Hypergraph::new(5, 3, &[vec![0, 1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let c = components_without(&h, 0);
        assert_eq!(c.len(), 3);
        assert!(cutedge_check(&h).is_none());
    }
}
