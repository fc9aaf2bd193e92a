//! Lifting shadow cycles and paths to Berge cycles and paths on the same
//! base vertices through a pair-to-edge matching.

use crate::berge::{BergeWitness, WitnessKind};
use crate::error::{precondition, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::{hopcroft_karp, Bipartite};
use crate::vertex_set::VertexSet;

fn check_walk(h: &Hypergraph, seq: &[usize], closed: bool) -> Result<()> {
    if seq.iter().any(|&v| v >= h.n()) {
        return Err(precondition("vertex out of range"));
    }
    let set: VertexSet = seq.iter().copied().collect();
    if set.len() != seq.len() {
        return Err(precondition("repeated vertex"));
    }
    let g = h.shadow_graph();
    let pairs = seq.len() - usize::from(!closed);
    for i in 0..pairs {
        let (u, v) = (seq[i], seq[(i + 1) % seq.len()]);
        if !g.has_edge(u, v) {
            return Err(precondition(format!("pair {{{u},{v}}} is not in the 2-shadow")));
        }
    }
    Ok(())
}

/// Matches consecutive pairs of `seq` to distinct edges, skipping `banned`.
fn match_pairs(h: &Hypergraph, seq: &[usize], closed: bool, banned: Option<usize>) -> Option<Vec<usize>> {
    let l = seq.len() - usize::from(!closed);
    let mut f = Bipartite::new(l, h.num_edges());
    for i in 0..l {
        let pair = VertexSet::singleton(seq[i]).with(seq[(i + 1) % seq.len()]);
        for (j, &e) in h.edges().iter().enumerate() {
            if Some(j) != banned && pair.is_subset(e) {
                f.add_edge(i, j);
            }
        }
    }
    let m = hopcroft_karp(&f);
    (m.size == l).then(|| m.left.iter().map(|x| x.expect("saturated")).collect())
}

/// Berge cycle on the base vertices of a shadow cycle of length at least
/// the largest edge size, in a happy Sperner hypergraph.
pub fn lift_shadow_cycle(h: &Hypergraph, cycle: &[usize]) -> Result<BergeWitness> {
    let l = cycle.len();
    if l < 3 {
        return Err(precondition("a shadow cycle needs at least 3 vertices"));
    }
    if !h.is_sperner() {
        return Err(precondition("hypergraph is not Sperner"));
    }
    if !h.is_happy() {
        return Err(precondition("hypergraph is not happy"));
    }
    if l < h.max_edge_size() {
        return Err(precondition(format!("cycle length {l} below edge size {}", h.max_edge_size())));
    }
    check_walk(h, cycle, true)?;
    let base: VertexSet = cycle.iter().copied().collect();
    let banned = h.edge_index(base);
    match match_pairs(h, cycle, true, banned) {
        Some(edges) => Ok(BergeWitness { kind: WitnessKind::Cycle, base: cycle.to_vec(), edges }),
        None => Err(Error::NoLift(format!("cycle {cycle:?}"))),
    }
}

/// Berge path on the base vertices of a shadow path in a happy hypergraph.
pub fn lift_shadow_path(h: &Hypergraph, path: &[usize]) -> Result<BergeWitness> {
    if path.len() < 2 {
        return Err(precondition("a shadow path needs at least 2 vertices"));
    }
    if !h.is_happy() {
        return Err(precondition("hypergraph is not happy"));
    }
    check_walk(h, path, false)?;
    match match_pairs(h, path, false, None) {
        Some(edges) => Ok(BergeWitness { kind: WitnessKind::Path, base: path.to_vec(), edges }),
        None => Err(Error::NoLift(format!("path {path:?}"))),
    }
}
