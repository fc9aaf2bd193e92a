use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A node of a layered bigraph: an edge-node in `A` or a vertex-node in `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BigraphNode {
    Edge(usize),
    Vertex(usize),
}

/// Bipartite graph `(A, Y; E)`. Flat node ids put `A` first: edge-node `a`
/// is `a`, vertex-node `y` is `|A| + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredBigraph {
    pub a_adj: Vec<VertexSet>,
    pub y_adj: Vec<Vec<usize>>,
}

impl LayeredBigraph {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let a_adj = h.edges().to_vec();
        let mut y_adj = vec![Vec::new(); h.n()];
        for (i, e) in a_adj.iter().enumerate() {
            for y in e.iter() {
                y_adj[y].push(i);
            }
        }
        LayeredBigraph { a_adj, y_adj }
    }

    pub fn num_a(&self) -> usize {
        self.a_adj.len()
    }

    pub fn num_y(&self) -> usize {
        self.y_adj.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.num_a() + self.num_y()
    }

    pub fn num_incidences(&self) -> usize {
        self.a_adj.iter().map(|a| a.len()).sum()
    }

    pub fn node(&self, id: usize) -> BigraphNode {
        if id < self.num_a() {
            BigraphNode::Edge(id)
        } else {
            BigraphNode::Vertex(id - self.num_a())
        }
    }

    pub fn id(&self, node: BigraphNode) -> usize {
        match node {
            BigraphNode::Edge(a) => a,
            BigraphNode::Vertex(y) => self.num_a() + y,
        }
    }

    pub fn a_degree(&self, a: usize) -> usize {
        self.a_adj[a].len()
    }

    pub fn y_degree(&self, y: usize) -> usize {
        self.y_adj[y].len()
    }

    /// Adjacency lists over flat node ids.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let m = self.num_a();
        let mut adj: Vec<Vec<usize>> = self.a_adj.iter().map(|a| a.iter().map(|y| m + y).collect()).collect();
        adj.extend(self.y_adj.iter().cloned());
        adj
    }

    /// Whether both layers list each incidence.
    pub fn is_symmetric(&self) -> bool {
        let forward = self.a_adj.iter().enumerate().all(|(a, ys)| ys.iter().all(|y| self.y_adj[y].contains(&a)));
        let backward =
            self.y_adj.iter().enumerate().all(|(y, as_)| as_.iter().all(|&a| self.a_adj[a].contains(y)));
        forward && backward
    }

    /// The neighborhoods `N(a)` form an antichain.
    pub fn is_sperner(&self) -> bool {
        for (i, &a) in self.a_adj.iter().enumerate() {
            for &b in &self.a_adj[i + 1..] {
                if a.comparable(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Reads the bigraph back as a hypergraph of rank `r`.
    pub fn to_hypergraph(&self, r: usize) -> Result<Hypergraph> {
        Hypergraph::from_sets(self.num_y(), r, self.a_adj.clone())
    }
}
