use serde::{Deserialize, Serialize};

use crate::connectivity::special_two_blocks;
use crate::error::{precondition, Result};
use crate::hypergraph::{EdgeFamily, Hypergraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StepKind {
    T1,
    T2,
    T3,
    T4,
    T5,
}

/// Parameters of a transformation, in the labels of the hypergraph it is
/// applied to. Edges are given by their vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StepParams {
    T1 { edge: Vec<usize>, vertex: usize },
    T2 { vertex: usize, e1: Vec<usize>, e2: Vec<usize> },
    T3 { v: usize, u: usize, e1: Vec<usize>, e2: Vec<usize> },
    T4 { edge: Vec<usize>, keep: usize },
    T5 { vertices: Vec<usize>, edges: Vec<Vec<usize>>, x: usize, y: usize },
}

impl StepParams {
    pub fn kind(&self) -> StepKind {
        match self {
            StepParams::T1 { .. } => StepKind::T1,
            StepParams::T2 { .. } => StepKind::T2,
            StepParams::T3 { .. } => StepKind::T3,
            StepParams::T4 { .. } => StepKind::T4,
            StepParams::T5 { .. } => StepKind::T5,
        }
    }
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn edge_of(h: &Hypergraph, e: &[usize]) -> Result<usize> {
    h.edge_index(set(e)).ok_or_else(|| precondition(format!("{e:?} is not an edge")))
}

/// Degree-2 vertices whose two incident edges are each unhappy or of size 2.
pub fn special_vertices(h: &Hypergraph) -> Vec<usize> {
    (0..h.n()).filter(|&v| is_special_vertex(h, v)).collect()
}

pub fn is_special_vertex(h: &Hypergraph, v: usize) -> bool {
    let inc = h.incident_edges(v);
    inc.len() == 2 && inc.iter().all(|&e| h.edge(e).len() == 2 || !h.is_happy_edge(e))
}

/// Size-2 edges `vu` with `v`, `u` special and both flanking edges unhappy,
/// as `(edge, v, u, e1, e2)` with `e1 ∋ v`, `e2 ∋ u`.
pub fn special_edges(h: &Hypergraph) -> Vec<(usize, usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, &e) in h.edges().iter().enumerate() {
        if e.len() != 2 {
            continue;
        }
        let vs = e.to_vec();
        let (v, u) = (vs[0], vs[1]);
        if !is_special_vertex(h, v) || !is_special_vertex(h, u) {
            continue;
        }
        let other = |w: usize| h.incident_edges(w).into_iter().find(|&f| f != i).expect("degree 2");
        let (e1, e2) = (other(v), other(u));
        if !h.is_happy_edge(e1) && !h.is_happy_edge(e2) {
            out.push((i, v, u, e1, e2));
        }
    }
    out
}

fn family(h: &Hypergraph) -> EdgeFamily {
    h.family()
}

/// Replaces the unhappy edge `e` by `e - v`.
pub fn apply_t1(h: &Hypergraph, e: usize, v: usize) -> Result<EdgeFamily> {
    if e >= h.num_edges() {
        return Err(precondition("T1: edge index out of range"));
    }
    if h.is_happy_edge(e) {
        return Err(precondition("T1: edge is happy"));
    }
    if !h.edge(e).contains(v) {
        return Err(precondition("T1: vertex not in edge"));
    }
    let mut f = family(h);
    f.edges[e] = h.edge(e).without(v);
    Ok(f)
}

/// Deletes the special vertex `v`; incident graph edges disappear and
/// larger incident edges lose `v`.
pub fn apply_t2(h: &Hypergraph, v: usize) -> Result<EdgeFamily> {
    if v >= h.n() || !is_special_vertex(h, v) {
        return Err(precondition("T2: vertex is not special"));
    }
    let mut f = EdgeFamily::new(h.n(), h.rank());
    for &e in h.edges() {
        if !e.contains(v) {
            f.push(e);
        } else if e.len() > 2 {
            f.push(e.without(v));
        }
    }
    Ok(f.remove_vertices(VertexSet::singleton(v)))
}

/// Deletes the special edge `vu` with its ends; `e1` loses `v`, `e2` loses `u`.
pub fn apply_t3(h: &Hypergraph, e: usize) -> Result<EdgeFamily> {
    let Some(&(_, v, u, _, _)) = special_edges(h).iter().find(|s| s.0 == e) else {
        return Err(precondition("T3: edge is not special"));
    };
    let gone = VertexSet::singleton(v).with(u);
    let mut f = EdgeFamily::new(h.n(), h.rank());
    for (i, &x) in h.edges().iter().enumerate() {
        if i != e {
            f.push(x);
        }
    }
    Ok(f.remove_vertices(gone))
}

/// Glues `e - keep` into its smallest vertex.
pub fn apply_t4(h: &Hypergraph, e: usize, keep: usize) -> Result<EdgeFamily> {
    if e >= h.num_edges() {
        return Err(precondition("T4: edge index out of range"));
    }
    if h.is_happy_edge(e) {
        return Err(precondition("T4: edge is happy"));
    }
    let edge = h.edge(e);
    if !edge.contains(keep) {
        return Err(precondition("T4: kept vertex not in edge"));
    }
    let glue = edge.without(keep);
    let star = glue.min().expect("unhappy edges have at least 3 vertices");
    let mut f = EdgeFamily::new(h.n(), h.rank());
    for &x in h.edges() {
        if x.intersection(glue).is_empty() {
            f.push(x);
        } else {
            f.push(x.difference(glue).with(star));
        }
    }
    Ok(f.remove_vertices(glue.without(star)))
}

/// Removes the interior of a special 2-block with outer vertices `x`, `y`
/// and the edges meeting it, then adds `{x, y}` if absent.
pub fn apply_t5(h: &Hypergraph, vertices: &[usize], x: usize, y: usize) -> Result<EdgeFamily> {
    let vs = set(vertices);
    let ok = special_two_blocks(h).iter().any(|b| b.vertex_set() == vs && b.outer == (x, y));
    if !ok {
        return Err(precondition("T5: not a special 2-block with these outer vertices"));
    }
    let interior = vs.without(x).without(y);
    let mut f = EdgeFamily::new(h.n(), h.rank());
    for &e in h.edges() {
        if e.intersection(interior).is_empty() {
            f.push(e);
        }
    }
    let xy = VertexSet::singleton(x).with(y);
    if !f.edges.contains(&xy) {
        f.push(xy);
    }
    Ok(f.remove_vertices(interior))
}

/// Applies a recorded transformation.
pub fn apply_params(h: &Hypergraph, p: &StepParams) -> Result<EdgeFamily> {
    match p {
        StepParams::T1 { edge, vertex } => apply_t1(h, edge_of(h, edge)?, *vertex),
        StepParams::T2 { vertex, .. } => apply_t2(h, *vertex),
        StepParams::T3 { v, u, .. } => apply_t3(h, edge_of(h, &[*v.min(u), *v.max(u)])?),
        StepParams::T4 { edge, keep } => apply_t4(h, edge_of(h, edge)?, *keep),
        StepParams::T5 { vertices, x, y, .. } => apply_t5(h, vertices, *x, *y),
    }
}

/// Candidate parameters of one kind in canonical order: edges by index,
/// vertices ascending, glue sets lexicographically.
pub fn candidates(h: &Hypergraph, kind: StepKind) -> Vec<StepParams> {
    let unhappy = h.unhappy_edges();
    match kind {
        StepKind::T1 => unhappy
            .iter()
            .flat_map(|&e| h.edge(e).iter().filter(move |&v| h.find_menace(e, v).is_none()).map(move |v| (e, v)))
            .map(|(e, v)| StepParams::T1 { edge: h.edge(e).to_vec(), vertex: v })
            .collect(),
        StepKind::T2 => special_vertices(h)
            .into_iter()
            .map(|v| {
                let inc = h.incident_edges(v);
                StepParams::T2 { vertex: v, e1: h.edge(inc[0]).to_vec(), e2: h.edge(inc[1]).to_vec() }
            })
            .collect(),
        StepKind::T3 => special_edges(h)
            .into_iter()
            .map(|(_, v, u, e1, e2)| StepParams::T3 { v, u, e1: h.edge(e1).to_vec(), e2: h.edge(e2).to_vec() })
            .collect(),
        StepKind::T4 => unhappy
            .iter()
            .flat_map(|&e| {
                let mut keeps = h.edge(e).to_vec();
                keeps.reverse();
                keeps.into_iter().map(move |keep| StepParams::T4 { edge: h.edge(e).to_vec(), keep })
            })
            .collect(),
        StepKind::T5 => special_two_blocks(h)
            .into_iter()
            .map(|b| StepParams::T5 {
                edges: b.edges.iter().map(|&e| h.edge(e).to_vec()).collect(),
                vertices: b.vertices,
                x: b.outer.0,
                y: b.outer.1,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, r: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, &e.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn worked() -> Hypergraph {
        h(6, 3, &[&[0, 1, 2], &[0, 3], &[1, 4], &[2, 5], &[3, 4], &[4, 5]])
    }

    fn lists(f: &EdgeFamily) -> Vec<Vec<usize>> {
        let mut f = f.clone();
        f.canonicalize();
        f.edges.iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn special_detection() {
        assert_eq!(special_vertices(&worked()), vec![0, 1, 2, 3, 5]);
        let tri = h(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(special_vertices(&tri), vec![0, 1, 2]);
        assert!(special_vertices(&crate::graph::Graph::complete(4).to_hypergraph()).is_empty());
        assert!(special_edges(&worked()).is_empty());
    }

    #[test]
    fn t1_rewrite() {
        let g = h(4, 3, &[&[0, 1, 2], &[0, 1], &[2, 3], &[0, 3]]);
        let e = g.edge_index(VertexSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(lists(&apply_t1(&g, e, 0).unwrap()), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(apply_t1(&g, g.edge_index(VertexSet::from_iter([0, 1])).unwrap(), 0).is_err());
    }

    #[test]
    fn t2_on_worked_instance() {
        let f = apply_t2(&worked(), 1).unwrap();
        assert_eq!(f.n, 5);
        assert_eq!(lists(&f), vec![vec![0, 1], vec![0, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
        assert!(apply_t2(&worked(), 4).is_err());
    }

    #[test]
    fn t3_on_path_gadget() {
        // edge {3,4} between special vertices whose other edges are unhappy
        let g = h(
            7,
            3,
            &[&[0, 1, 3], &[0, 2, 4], &[3, 4], &[0, 1, 5], &[1, 2, 5], &[1, 2, 6], &[0, 2, 6]],
        );
        let sp = special_edges(&g);
        let e34 = g.edge_index(VertexSet::from_iter([3, 4])).unwrap();
        assert_eq!(sp.iter().map(|s| s.0).collect::<Vec<_>>(), vec![e34]);
        let f = apply_t3(&g, e34).unwrap();
        assert_eq!(f.n, 5);
        assert!(f.edges.contains(&VertexSet::from_iter([0, 1])));
        assert!(f.edges.contains(&VertexSet::from_iter([0, 2])));
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn t4_glue() {
        let g = worked();
        let e = g.edge_index(VertexSet::from_iter([0, 1, 2])).unwrap();
        let f = apply_t4(&g, e, 2).unwrap();
        assert_eq!(f.size_sum(), 12);
        assert_eq!(lists(&f), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 4], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn t5_gadget() {
        let g = h(6, 3, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3], &[3, 4, 5], &[0, 5], &[0, 4]]);
        let f = apply_t5(&g, &[0, 1, 2, 3], 0, 3).unwrap();
        assert_eq!(lists(&f), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn t4_candidates_keep_descending() {
        let g = worked();
        let c = candidates(&g, StepKind::T4);
        let keeps: Vec<usize> = c
            .iter()
            .map(|p| match p {
                StepParams::T4 { keep, .. } => *keep,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(keeps, vec![2, 1, 0]);
    }
}
