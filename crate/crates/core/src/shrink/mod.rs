//! Shrinking a 2-connected Sperner hypergraph with short cycles to a happy
//! one through the transformations T1-T5.

mod blocks;
mod transforms;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::berge::has_cycle_at_least;
use crate::bounds::{binom, capped_binom};
use crate::connectivity::is_2connected;
use crate::error::{precondition, Error, Result};
use crate::hypergraph::{EdgeFamily, Hypergraph, HypergraphData};

pub use blocks::{find_block_report, BlockCandidate, BlockReport};
pub use transforms::{
    apply_params, apply_t1, apply_t2, apply_t3, apply_t4, apply_t5, candidates, is_special_vertex, special_edges,
    special_vertices, StepKind, StepParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub vertices: usize,
    pub edges: usize,
    pub size_sum: usize,
}

impl Metrics {
    pub fn of(h: &Hypergraph) -> Self {
        Metrics { vertices: h.n(), edges: h.num_edges(), size_sum: h.size_sum() }
    }

    fn of_family(f: &EdgeFamily) -> Self {
        Metrics { vertices: f.n, edges: f.len(), size_sum: f.size_sum() }
    }
}

/// Outcome of checking one candidate transformation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCheck {
    /// No empty, singleton or duplicate edges.
    pub valid_build: bool,
    pub sperner: bool,
    pub two_connected: bool,
    /// `Σ' + V' < Σ + V` with `Σ' <= Σ` and `V' <= V`.
    pub accounting_i: bool,
    /// Edge loss bounded by vertex loss (scaled by the block factor for T5).
    pub accounting_ii: bool,
    pub circumference_below_k: bool,
    /// `|E(B)| <= C(t, min{r-1, ⌊t/2⌋}) (|V(B)| - 2)` for T5 blocks.
    pub t5_density: Option<bool>,
    pub issues: Vec<String>,
}

impl StepCheck {
    pub fn valid(&self) -> bool {
        self.valid_build
            && self.sperner
            && self.two_connected
            && self.accounting_i
            && self.accounting_ii
            && self.circumference_below_k
            && self.t5_density != Some(false)
    }
}

/// The factor `C(t, min{r-1, ⌊t/2⌋})` with `t = ⌊(k-1)/2⌋`.
pub fn t5_factor(k: usize, r: usize) -> u128 {
    let t = k.saturating_sub(1) / 2;
    let c = if r == 0 { binom(t, 0) } else { capped_binom(t, r - 1) };
    c.try_into().unwrap_or(u128::MAX)
}

/// Checks the result `after` of applying `params` to `before`.
pub fn validate_step(before: &Hypergraph, after: &EdgeFamily, k: usize, params: &StepParams) -> StepCheck {
    let mut c = StepCheck::default();
    let built = match after.build() {
        Ok(h) => {
            c.valid_build = true;
            c.sperner = true;
            Some(h)
        }
        Err(report) => {
            c.sperner = after.is_sperner();
            c.valid_build = after.edges.iter().all(|e| e.len() >= 2) && !report.has_duplicates();
            c.issues.push(format!("build: {report}"));
            None
        }
    };
    let (m0, m1) = (Metrics::of(before), Metrics::of_family(after));
    c.accounting_i =
        m1.size_sum + m1.vertices < m0.size_sum + m0.vertices && m1.size_sum <= m0.size_sum && m1.vertices <= m0.vertices;
    if !c.accounting_i {
        c.issues.push(format!("(i): {m0:?} -> {m1:?}"));
    }
    let lost_e = m0.edges as i128 - m1.edges as i128;
    let lost_v = m0.vertices as i128 - m1.vertices as i128;
    if let StepParams::T5 { vertices, edges, .. } = params {
        let factor = t5_factor(k, before.rank()) as i128;
        c.accounting_ii = lost_e <= factor * lost_v;
        c.t5_density = Some(edges.len() as i128 <= factor * (vertices.len() as i128 - 2));
        if c.t5_density == Some(false) {
            c.issues.push(format!("T5 density: {} edges on {} vertices", edges.len(), vertices.len()));
        }
    } else {
        c.accounting_ii = lost_e <= lost_v;
    }
    if !c.accounting_ii {
        c.issues.push(format!("(ii): lost {lost_e} edges, {lost_v} vertices"));
    }
    if let Some(h) = built {
        c.two_connected = is_2connected(&h);
        if !c.two_connected {
            c.issues.push("not 2-connected".into());
        }
        if c.valid() || (c.two_connected && c.accounting_i && c.accounting_ii) {
            c.circumference_below_k = !has_cycle_at_least(&h, k);
            if !c.circumference_below_k {
                c.issues.push(format!("has a Berge cycle of length >= {k}"));
            }
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkStep {
    pub params: StepParams,
    pub before: Metrics,
    pub after: Metrics,
    pub check: StepCheck,
}

impl ShrinkStep {
    pub fn kind(&self) -> StepKind {
        self.params.kind()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "terminal", content = "report", rename_all = "lowercase")]
pub enum Terminal {
    Happy,
    /// No transformation applies; carries the block structure found.
    Stuck(Option<BlockReport>),
}

pub enum StepOutcome {
    AlreadyHappy,
    Applied { next: Hypergraph, step: ShrinkStep },
    Stuck(Option<BlockReport>),
}

fn check_input(h: &Hypergraph, k: usize) -> Result<()> {
    if !h.is_sperner() {
        return Err(precondition("hypergraph is not Sperner"));
    }
    if !is_2connected(h) {
        return Err(precondition("hypergraph is not 2-connected"));
    }
    if has_cycle_at_least(h, k) {
        return Err(precondition(format!("hypergraph has a Berge cycle of length >= {k}")));
    }
    Ok(())
}

/// One step of Rule (e1): the first valid candidate among T1, ..., T5.
pub fn shrink_step(h: &Hypergraph, k: usize) -> Result<StepOutcome> {
    check_input(h, k)?;
    Ok(step_unchecked(h, k))
}

fn step_unchecked(h: &Hypergraph, k: usize) -> StepOutcome {
    if h.is_happy() {
        return StepOutcome::AlreadyHappy;
    }
    for kind in [StepKind::T1, StepKind::T2, StepKind::T3, StepKind::T4, StepKind::T5] {
        let found = candidates(h, kind).into_par_iter().find_map_first(|p| {
            let after = apply_params(h, &p).ok()?;
            let check = validate_step(h, &after, k, &p);
            if !check.valid() {
                return None;
            }
            let next = after.build().ok()?;
            Some((next, p, Metrics::of_family(&after), check))
        });
        if let Some((next, params, after, check)) = found {
            let step = ShrinkStep { params, before: Metrics::of(h), after, check };
            return StepOutcome::Applied { next, step };
        }
    }
    StepOutcome::Stuck(find_block_report(h, k))
}

/// Properties of a whole run checked against the hypergraphs it visited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceChecks {
    pub steps_valid: bool,
    /// No T1 directly after T2, T3 or T4.
    pub no_t1_after_t2_t3_t4: bool,
    /// Before each non-T1 step, thick pairs inside every unhappy edge form a matching.
    pub thick_pairs_matching: bool,
    /// Before each step other than T1 and T2, every pair inside an unhappy edge is thin.
    pub unhappy_pairs_thin: bool,
    /// Total edge loss within the sum of per-step allowances.
    pub cumulative_accounting: bool,
    pub t5_density: bool,
    /// `|E| <= C(k-2, min{r, ⌊(k-2)/2⌋}) + 2` for an unhappy start on at least
    /// `k` vertices ending happy on `k-1` vertices without T5.
    pub k_minus_one_cap: Option<bool>,
}

impl TraceChecks {
    pub fn all_hold(&self) -> bool {
        self.steps_valid
            && self.no_t1_after_t2_t3_t4
            && self.thick_pairs_matching
            && self.unhappy_pairs_thin
            && self.cumulative_accounting
            && self.t5_density
            && self.k_minus_one_cap != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkTrace {
    pub k: usize,
    pub initial: HypergraphData,
    pub steps: Vec<ShrinkStep>,
    #[serde(rename = "final")]
    pub final_: HypergraphData,
    pub terminal: Terminal,
    pub checks: TraceChecks,
}

impl ShrinkTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn final_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::from_data(&self.final_)
    }

    /// Re-applies the recorded parameters from the initial hypergraph.
    pub fn replay(&self) -> Result<Hypergraph> {
        let mut h = Hypergraph::from_data(&self.initial)?;
        for s in &self.steps {
            h = apply_params(&h, &s.params)?.build().map_err(Error::Invalid)?;
        }
        Ok(h)
    }
}

fn pairs(e: crate::VertexSet) -> Vec<(usize, usize)> {
    let v = e.to_vec();
    let mut out = Vec::new();
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

fn thick_pairs_form_matching(h: &Hypergraph) -> bool {
    h.unhappy_edges().into_iter().all(|e| {
        let mut used = crate::VertexSet::EMPTY;
        for (a, b) in pairs(h.edge(e)) {
            if h.codegree(a, b) >= 2 {
                if used.contains(a) || used.contains(b) {
                    return false;
                }
                used = used.with(a).with(b);
            }
        }
        true
    })
}

fn unhappy_pairs_thin(h: &Hypergraph) -> bool {
    h.unhappy_edges().into_iter().all(|e| pairs(h.edge(e)).into_iter().all(|(a, b)| h.codegree(a, b) == 1))
}

/// Applies Rule (e1) until the hypergraph is happy or no step applies.
pub fn reduce_to_happy(h: &Hypergraph, k: usize) -> Result<ShrinkTrace> {
    check_input(h, k)?;
    let r = h.rank();
    let initial_unhappy = !h.is_happy();
    let mut cur = h.clone();
    let mut steps: Vec<ShrinkStep> = Vec::new();
    let mut ordering = true;
    let mut matching = true;
    let mut thin = true;
    let terminal = loop {
        match step_unchecked(&cur, k) {
            StepOutcome::AlreadyHappy => break Terminal::Happy,
            StepOutcome::Stuck(report) => break Terminal::Stuck(report),
            StepOutcome::Applied { next, step } => {
                let kind = step.kind();
                if kind != StepKind::T1 && !thick_pairs_form_matching(&cur) {
                    matching = false;
                }
                if !matches!(kind, StepKind::T1 | StepKind::T2) && !unhappy_pairs_thin(&cur) {
                    thin = false;
                }
                if kind == StepKind::T1
                    && steps.last().is_some_and(|s| matches!(s.kind(), StepKind::T2 | StepKind::T3 | StepKind::T4))
                {
                    ordering = false;
                }
                steps.push(step);
                cur = next;
            }
        }
    };
    let factor = t5_factor(k, r) as i128;
    let allowance: i128 = steps
        .iter()
        .map(|s| {
            let lost_v = s.before.vertices as i128 - s.after.vertices as i128;
            if s.kind() == StepKind::T5 {
                factor * lost_v
            } else {
                lost_v
            }
        })
        .sum();
    let lost_e = h.num_edges() as i128 - cur.num_edges() as i128;
    let used_t5 = steps.iter().any(|s| s.kind() == StepKind::T5);
    let k_minus_one_cap = (initial_unhappy
        && h.n() >= k
        && terminal == Terminal::Happy
        && cur.n() + 1 == k
        && !used_t5)
        .then(|| {
            let cap = capped_binom(k - 2, r) + 2u32;
            num_bigint::BigUint::from(cur.num_edges()) <= cap
        });
    let checks = TraceChecks {
        steps_valid: steps.iter().all(|s| s.check.valid()),
        no_t1_after_t2_t3_t4: ordering,
        thick_pairs_matching: matching,
        unhappy_pairs_thin: thin,
        cumulative_accounting: lost_e <= allowance,
        t5_density: steps.iter().all(|s| s.check.t5_density != Some(false)),
        k_minus_one_cap,
    };
    Ok(ShrinkTrace { k, initial: h.to_data(), steps, final_: cur.to_data(), terminal, checks })
}
