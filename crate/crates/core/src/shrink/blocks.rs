use serde::{Deserialize, Serialize};

use crate::berge::longest_berge_xy_path;
use crate::connectivity::{is_2connected, is_2connected_part};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A piece `B` hanging off the unhappy edge `a` through `x` (outside `a`)
/// and `y` (its only vertex in `a`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCandidate {
    pub x: usize,
    pub y: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
    /// `B` is 2-connected and Sperner.
    pub b2: bool,
    /// The rest `H - (B - x) - a` is Sperner and 2-connected.
    pub b4: bool,
    /// `B` has an `x`-`y` Berge path whose incidence length `2ℓ` is at least `k`.
    pub long_xy_path: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub edge: Vec<usize>,
    pub blocks: Vec<BlockCandidate>,
    /// Pairwise vertex intersections have size at most 1, with equality
    /// exactly when the `x` vertices agree.
    pub b5: bool,
    /// At most one block has a long `x`-`y` path.
    pub at_most_one_long: bool,
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = v;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

fn candidates_for(h: &Hypergraph, a: usize, x: usize, k: usize) -> Vec<BlockCandidate> {
    let n = h.n();
    let ea = h.edge(a);
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, &e) in h.edges().iter().enumerate() {
        if i == a {
            continue;
        }
        let rest = e.without(x).to_vec();
        for w in rest.windows(2) {
            let (p, q) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[p] = q;
        }
    }
    let mut comps: Vec<VertexSet> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| v != x) {
        let r = find(&mut parent, v);
        match roots.iter().position(|&q| q == r) {
            Some(i) => comps[i].insert(v),
            None => {
                roots.push(r);
                comps.push(VertexSet::singleton(v));
            }
        }
    }
    let mut out = Vec::new();
    for ky in comps {
        let hits = ky.intersection(ea);
        if hits.len() != 1 {
            continue;
        }
        let y = hits.min().expect("one vertex");
        let ka: Vec<usize> =
            (0..h.num_edges()).filter(|&i| i != a && !h.edge(i).without(x).intersection(ky).is_empty()).collect();
        let bv = ky.with(x);
        let b2 = is_2connected_part(h, bv, &ka);
        let rest: Vec<usize> = (0..h.num_edges()).filter(|&i| i != a && !ka.contains(&i)).collect();
        let (sub_rest, verts) = h.compact_subhypergraph(&rest);
        let b4 = verts.len() == n - ky.len() && sub_rest.is_sperner() && is_2connected(&sub_rest);
        let long_xy_path = b2 && {
            let (sub, vmap) = h.compact_subhypergraph(&ka);
            let pos = |v: usize| vmap.iter().position(|&u| u == v);
            match (pos(x), pos(y)) {
                (Some(px), Some(py)) => 2 * longest_berge_xy_path(&sub, px, py, Some(k.div_ceil(2))).length >= k,
                _ => false,
            }
        };
        out.push(BlockCandidate {
            x,
            y,
            vertices: bv.to_vec(),
            edges: ka.iter().map(|&i| h.edge(i).to_vec()).collect(),
            b2,
            b4,
            long_xy_path,
        });
    }
    out
}

fn b5(blocks: &[&BlockCandidate]) -> bool {
    for (i, p) in blocks.iter().enumerate() {
        for q in &blocks[i + 1..] {
            let vp: VertexSet = p.vertices.iter().copied().collect();
            let vq: VertexSet = q.vertices.iter().copied().collect();
            let meet = vp.intersection(vq).len();
            if meet > 1 || (meet == 1) != (p.x == q.x) {
                return false;
            }
        }
    }
    true
}

/// Searches for three pieces satisfying B1-B5 around some unhappy edge.
pub fn find_block_report(h: &Hypergraph, k: usize) -> Option<BlockReport> {
    for a in h.unhappy_edges() {
        let ea = h.edge(a);
        let cands: Vec<BlockCandidate> = (0..h.n())
            .filter(|&x| !ea.contains(x))
            .flat_map(|x| candidates_for(h, a, x, k))
            .filter(|c| c.b2 && c.b4)
            .collect();
        let m = cands.len();
        for i in 0..m {
            for j in i + 1..m {
                for l in j + 1..m {
                    let trio = [&cands[i], &cands[j], &cands[l]];
                    if b5(&trio) {
                        let long = trio.iter().filter(|c| c.long_xy_path).count();
                        return Some(BlockReport {
                            edge: ea.to_vec(),
                            blocks: trio.iter().map(|&c| c.clone()).collect(),
                            b5: true,
                            at_most_one_long: long <= 1,
                        });
                    }
                }
            }
        }
    }
    None
}
