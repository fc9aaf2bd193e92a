use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Simple undirected graph on `0..n` with bitset adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    pub n: usize,
    pub adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::EMPTY; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].intersection(VertexSet::above(u)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Induced subgraph on `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            map[old] = new;
        }
        let mut g = Graph::new(verts.len());
        for (new, &old) in verts.iter().enumerate() {
            g.adj[new] = self.adj[old].intersection(keep).map(&map);
        }
        g
    }

    /// Component of `start` inside the vertex set `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0, self.vertices()) == self.vertices()
    }

    fn connected_without(&self, gone: VertexSet) -> bool {
        let rest = self.vertices().difference(gone);
        match rest.min() {
            None => true,
            Some(s) => self.reach(s, rest) == rest,
        }
    }

    /// Vertex 2-connectivity: at least 3 vertices, connected, no cut vertex.
    pub fn is_2connected(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && (0..self.n).all(|v| self.connected_without(VertexSet::singleton(v)))
    }

    /// Vertex 3-connectivity: at least 4 vertices and no separating pair.
    pub fn is_3connected(&self) -> bool {
        if self.n < 4 || !self.is_2connected() {
            return false;
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.connected_without(VertexSet::singleton(u).with(v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Graph viewed as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self.edges().into_iter().map(|(u, v)| VertexSet::singleton(u).with(v)).collect();
        Hypergraph::from_sets(self.n, 2, edges).expect("simple graphs are valid 2-graphs")
    }

    /// Reads a hypergraph whose edges are all pairs.
    pub fn from_hypergraph(h: &Hypergraph) -> Option<Graph> {
        let mut g = Graph::new(h.n());
        for e in h.edges() {
            if e.len() != 2 {
                return None;
            }
            let v = e.to_vec();
            g.add_edge(v[0], v[1]);
        }
        Some(g)
    }

    pub fn to_json(&self) -> String {
        self.to_hypergraph().to_json()
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let h = Hypergraph::from_json(s)?;
        Graph::from_hypergraph(&h)
            .ok_or_else(|| crate::error::domain("graph input must contain only 2-element edges"))
    }

    /// Applies the permutation `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}
