use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bigraph::LayeredBigraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Serialized form: `{"n": .., "r": .., "edges": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphData {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    TooManyVertices { n: usize },
    VertexOutOfRange { edge: usize, vertex: usize },
    RepeatedVertex { edge: usize, vertex: usize },
    EdgeTooSmall { edge: usize, size: usize },
    RankExceeded { edge: usize, size: usize, r: usize },
    DuplicateEdge { first: usize, second: usize },
    EdgeNotAscending { edge: usize },
    EdgeListUnsorted { edge: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Issue::TooManyVertices { n } => write!(f, "n = {n} exceeds {MAX_VERTICES}"),
            Issue::VertexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge}: vertex {vertex} out of range")
            }
            Issue::RepeatedVertex { edge, vertex } => {
                write!(f, "edge {edge}: vertex {vertex} repeated")
            }
            Issue::EdgeTooSmall { edge, size } => write!(f, "edge {edge}: size {size} < 2"),
            Issue::RankExceeded { edge, size, r } => {
                write!(f, "edge {edge}: rank exceeded ({size} > {r})")
            }
            Issue::DuplicateEdge { first, second } => {
                write!(f, "duplicate edge: {first} and {second}")
            }
            Issue::EdgeNotAscending { edge } => write!(f, "edge {edge}: not sorted ascending"),
            Issue::EdgeListUnsorted { edge } => {
                write!(f, "edge list not lexicographically sorted at {edge}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn has_duplicates(&self) -> bool {
        self.issues.iter().any(|i| matches!(i, Issue::DuplicateEdge { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// Checks every hypergraph invariant, including canonical form.
pub fn validate(data: &HypergraphData) -> ValidationReport {
    let mut issues = Vec::new();
    if data.n > MAX_VERTICES {
        issues.push(Issue::TooManyVertices { n: data.n });
    }
    let mut sets = Vec::with_capacity(data.edges.len());
    for (i, e) in data.edges.iter().enumerate() {
        let mut set = VertexSet::EMPTY;
        for &v in e {
            if v >= data.n || v >= MAX_VERTICES {
                issues.push(Issue::VertexOutOfRange { edge: i, vertex: v });
            } else if set.contains(v) {
                issues.push(Issue::RepeatedVertex { edge: i, vertex: v });
            } else {
                set.insert(v);
            }
        }
        if e.len() < 2 {
            issues.push(Issue::EdgeTooSmall { edge: i, size: e.len() });
        }
        if e.len() > data.r {
            issues.push(Issue::RankExceeded { edge: i, size: e.len(), r: data.r });
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            issues.push(Issue::EdgeNotAscending { edge: i });
        }
        sets.push(set);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] == sets[j] {
                issues.push(Issue::DuplicateEdge { first: i, second: j });
            }
        }
    }
    for i in 1..data.edges.len() {
        if data.edges[i - 1] > data.edges[i] {
            issues.push(Issue::EdgeListUnsorted { edge: i });
        }
    }
    ValidationReport { issues }
}

/// Relaxed edge list: may hold duplicates, singletons or unsorted edges.
/// Transformations build these and [`EdgeFamily::build`] re-validates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeFamily {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<VertexSet>,
}

impl EdgeFamily {
    pub fn new(n: usize, r: usize) -> Self {
        EdgeFamily { n, r, edges: Vec::new() }
    }

    pub fn push(&mut self, e: VertexSet) {
        self.edges.push(e);
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn size_sum(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    /// Deletes `gone` from the vertex set and renumbers the survivors
    /// `0..n-|gone|` in their original order. Edges lose the deleted vertices.
    pub fn remove_vertices(&self, gone: VertexSet) -> EdgeFamily {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let edges = self.edges.iter().map(|e| e.difference(gone).map(&map)).collect();
        EdgeFamily { n: next, r: self.r, edges }
    }

    /// Sorts into canonical order without checking anything.
    pub fn canonicalize(&mut self) {
        self.edges.sort();
    }

    pub fn to_data(&self) -> HypergraphData {
        HypergraphData { n: self.n, r: self.r, edges: self.edges.iter().map(|e| e.to_vec()).collect() }
    }

    /// Canonicalizes and validates.
    pub fn build(&self) -> std::result::Result<Hypergraph, ValidationReport> {
        let mut f = self.clone();
        f.canonicalize();
        let report = validate(&f.to_data());
        if report.is_valid() {
            Ok(Hypergraph { n: f.n, rank: f.r, edges: f.edges })
        } else {
            Err(report)
        }
    }

    pub fn is_sperner(&self) -> bool {
        is_antichain(&self.edges)
    }
}

fn is_antichain(edges: &[VertexSet]) -> bool {
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if a.comparable(b) {
                return false;
            }
        }
    }
    true
}

/// Classification of a vertex pair by codegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    Absent,
    Thin,
    Thick,
}

/// A hypergraph of upper rank `rank` on vertices `0..n`, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    rank: usize,
    edges: Vec<VertexSet>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, {:?})", self.n, self.rank, self.edges)
    }
}

impl Hypergraph {
    /// Builds from loose edge lists, canonicalizing order.
    pub fn new(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let data = HypergraphData {
            n,
            r,
            edges: edges
                .iter()
                .map(|e| {
                    let mut e = e.clone();
                    e.sort_unstable();
                    e
                })
                .collect(),
        };
        let mut sorted = data.clone();
        sorted.edges.sort();
        Self::from_data(&sorted)
    }

    /// Strict: the data must already be canonical.
    pub fn from_data(data: &HypergraphData) -> Result<Self> {
        let report = validate(data);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let edges = data.edges.iter().map(|e| e.iter().copied().collect()).collect();
        Ok(Hypergraph { n: data.n, rank: data.r, edges })
    }

    pub fn from_sets(n: usize, r: usize, edges: Vec<VertexSet>) -> Result<Self> {
        EdgeFamily { n, r, edges }.build().map_err(Error::Invalid)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let data: HypergraphData = serde_json::from_str(s)?;
        Self::from_data(&data)
    }

    pub fn to_data(&self) -> HypergraphData {
        HypergraphData { n: self.n, r: self.rank, edges: self.edges.iter().map(|e| e.to_vec()).collect() }
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_data()).expect("plain data serializes")
    }

    pub fn family(&self) -> EdgeFamily {
        EdgeFamily { n: self.n, r: self.rank, edges: self.edges.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> VertexSet {
        self.edges[i]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, e: VertexSet) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Largest edge size actually present.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn size_sum(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].contains(v)).collect()
    }

    pub fn is_sperner(&self) -> bool {
        is_antichain(&self.edges)
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// All `p`-sets lying in some edge, in canonical order.
    pub fn shadow(&self, p: usize) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> =
            self.edges.iter().filter(|e| e.len() >= p).flat_map(|e| e.subsets_of_size(p)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The 2-shadow as a graph: each edge spans a clique.
    pub fn shadow_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &e in &self.edges {
            for u in e {
                g.adj[u] = g.adj[u].union(e.without(u));
            }
        }
        g
    }

    pub fn codegree(&self, u: usize, v: usize) -> usize {
        let pair = VertexSet::singleton(u).with(v);
        self.edges.iter().filter(|e| pair.is_subset(**e)).count()
    }

    pub fn pair_class(&self, u: usize, v: usize) -> PairClass {
        match self.codegree(u, v) {
            0 => PairClass::Absent,
            1 => PairClass::Thin,
            _ => PairClass::Thick,
        }
    }

    /// Every pair inside the edge has codegree at least `|e| - 1`.
    pub fn is_happy_edge(&self, i: usize) -> bool {
        let e = self.edges[i];
        let need = e.len() - 1;
        let verts = e.to_vec();
        for (a, &u) in verts.iter().enumerate() {
            for &v in &verts[a + 1..] {
                if self.codegree(u, v) < need {
                    return false;
                }
            }
        }
        true
    }

    pub fn unhappy_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| !self.is_happy_edge(i)).collect()
    }

    pub fn is_happy(&self) -> bool {
        (0..self.edges.len()).all(|i| self.is_happy_edge(i))
    }

    /// Another edge containing `e - v`, if any.
    pub fn find_menace(&self, e: usize, v: usize) -> Option<usize> {
        let rest = self.edges[e].without(v);
        (0..self.edges.len()).find(|&m| m != e && rest.is_subset(self.edges[m]))
    }

    pub fn incidence_bigraph(&self) -> LayeredBigraph {
        LayeredBigraph::from_hypergraph(self)
    }

    /// Sub-hypergraph spanned by a subset of edges, on the same vertex set.
    pub fn edge_subhypergraph(&self, edges: &[usize]) -> Hypergraph {
        let mut sets: Vec<VertexSet> = edges.iter().map(|&i| self.edges[i]).collect();
        sets.sort();
        Hypergraph { n: self.n, rank: self.rank, edges: sets }
    }

    /// Sub-hypergraph on the given edges, with vertices renumbered to the
    /// union of those edges (in increasing order).
    pub fn compact_subhypergraph(&self, edges: &[usize]) -> (Hypergraph, Vec<usize>) {
        let support = edges.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(self.edges[i]));
        let verts = support.to_vec();
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            map[old] = new;
        }
        let mut sets: Vec<VertexSet> = edges.iter().map(|&i| self.edges[i].map(&map)).collect();
        sets.sort();
        (Hypergraph { n: verts.len(), rank: self.rank, edges: sets }, verts)
    }

    /// Applies the vertex permutation `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        let mut sets: Vec<VertexSet> = self.edges.iter().map(|e| e.map(perm)).collect();
        sets.sort();
        Hypergraph { n: self.n, rank: self.rank, edges: sets }
    }

    /// Same edges with a different rank parameter.
    pub fn with_rank(&self, r: usize) -> Result<Hypergraph> {
        Hypergraph::from_sets(self.n, r, self.edges.clone())
    }

    /// Connectedness of the incidence bigraph restricted to non-isolated
    /// structure: every vertex lies in an edge and the edges link up.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        if self.edges.is_empty() {
            return self.n == 1;
        }
        let mut seen = self.edges[0];
        let mut used = vec![false; self.edges.len()];
        used[0] = true;
        loop {
            let mut grew = false;
            for (i, &e) in self.edges.iter().enumerate() {
                if !used[i] && !e.intersection(seen).is_empty() {
                    used[i] = true;
                    seen = seen.union(e);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        seen == VertexSet::full(self.n)
    }
}
