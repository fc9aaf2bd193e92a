use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bigraph::{BigraphNode, LayeredBigraph};
use crate::error::{precondition, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Lowpoint data for an undirected graph given by adjacency lists.
struct LowLink {
    connected: bool,
    is_cut: Vec<bool>,
    /// Node sets of biconnected components (bridges give 2-node components).
    components: Vec<Vec<usize>>,
}

fn lowlink(adj: &[Vec<usize>]) -> LowLink {
    let n = adj.len();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut components = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut roots = 0;

    // explicit stack of (node, parent, next neighbor position)
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        roots += 1;
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut root_children = 0;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if order[w] == usize::MAX {
                    edge_stack.push((v, w));
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && order[w] < order[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= order[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut comp = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            comp.insert(a);
                            comp.insert(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        components.push(comp.into_iter().collect());
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    LowLink { connected: roots <= 1, is_cut, components }
}

/// Articulation nodes of a bigraph, or the marker for disconnected input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutNodes {
    Disconnected,
    Nodes(Vec<BigraphNode>),
}

pub fn cut_nodes(b: &LayeredBigraph) -> CutNodes {
    let ll = lowlink(&b.adjacency());
    if !ll.connected {
        return CutNodes::Disconnected;
    }
    CutNodes::Nodes((0..b.num_nodes()).filter(|&i| ll.is_cut[i]).map(|i| b.node(i)).collect())
}

/// Whether the incidence bigraph is 2-connected.
pub fn is_2connected(h: &Hypergraph) -> bool {
    let b = h.incidence_bigraph();
    if b.num_nodes() < 4 {
        return false;
    }
    matches!(cut_nodes(&b), CutNodes::Nodes(ref v) if v.is_empty())
}

/// Edges `edges` of `h` together with `vertices` form a 2-connected hypergraph.
pub fn is_2connected_part(h: &Hypergraph, vertices: VertexSet, edges: &[usize]) -> bool {
    let support = edges.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(h.edge(i)));
    if support != vertices {
        return false;
    }
    let (sub, _) = h.compact_subhypergraph(edges);
    is_2connected(&sub)
}

/// A block of the incidence bigraph read back as a sub-hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    pub cut_edges: Vec<usize>,
    /// Edges that belong to more than one block.
    pub shared_edges: Vec<usize>,
}

impl BlockDecomposition {
    /// Sum over blocks of `|V(B)| - 1`.
    pub fn vertex_excess(&self) -> usize {
        self.blocks.iter().map(|b| b.vertices.len().saturating_sub(1)).sum()
    }
}

/// Blocks of a connected hypergraph. Each cycle-carrying biconnected component
/// of `I(h)` yields a block on its edge-nodes; an edge in no such component
/// forms a single-edge block.
pub fn blocks(h: &Hypergraph) -> Result<BlockDecomposition> {
    let b = h.incidence_bigraph();
    let ll = lowlink(&b.adjacency());
    if !ll.connected || b.num_nodes() == 0 {
        return Err(precondition("hypergraph is disconnected"));
    }
    let m = b.num_a();
    let mut count = vec![0usize; m];
    let mut out: Vec<Block> = Vec::new();
    for comp in &ll.components {
        if comp.len() <= 2 {
            continue;
        }
        let edges: Vec<usize> = comp.iter().copied().filter(|&i| i < m).collect();
        for &e in &edges {
            count[e] += 1;
        }
        out.push(block_of(h, edges));
    }
    for (e, &c) in count.iter().enumerate() {
        if c == 0 {
            out.push(block_of(h, vec![e]));
        }
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    let cut_vertices = (0..h.n()).filter(|&y| ll.is_cut[m + y]).collect();
    let cut_edges = (0..m).filter(|&a| ll.is_cut[a]).collect();
    let shared_edges = (0..m).filter(|&a| count[a] > 1).collect();
    Ok(BlockDecomposition { blocks: out, cut_vertices, cut_edges, shared_edges })
}

fn block_of(h: &Hypergraph, edges: Vec<usize>) -> Block {
    let vertices = edges.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(h.edge(i))).to_vec();
    Block { edges, vertices }
}

/// A 2-connected proper part of `h` with exactly two vertices touching
/// edges outside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBlock {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub outer: (usize, usize),
    pub special: bool,
    /// The unique outside edge at `outer.1` when special.
    pub outside_edge: Option<usize>,
}

impl TwoBlock {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Member vertices with an incident edge outside the block.
    pub fn boundary(&self, h: &Hypergraph) -> Vec<usize> {
        boundary(h, self.vertex_set(), &self.edges)
    }
}

fn boundary(h: &Hypergraph, vertices: VertexSet, edges: &[usize]) -> Vec<usize> {
    let inside: BTreeSet<usize> = edges.iter().copied().collect();
    vertices
        .iter()
        .filter(|&v| (0..h.num_edges()).any(|e| !inside.contains(&e) && h.edge(e).contains(v)))
        .collect()
}

fn components_without(adj: &[Vec<usize>], removed: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    for &r in removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Outside edges at `v` relative to the edge list `edges`.
fn outside_edges_at(h: &Hypergraph, v: usize, edges: &[usize]) -> Vec<usize> {
    (0..h.num_edges()).filter(|e| !edges.contains(e) && h.edge(*e).contains(v)).collect()
}

fn special_orientation(h: &Hypergraph, edges: &[usize], x: usize, y: usize) -> Option<usize> {
    let out = outside_edges_at(h, y, edges);
    (out.len() == 1 && !h.edge(out[0]).contains(x)).then(|| out[0])
}

/// 2-blocks arising from separating pairs of `I(h)`: vertex/edge pairs
/// `{x, a}` and vertex/vertex pairs `{x, y}`, one component at a time.
pub fn two_blocks(h: &Hypergraph) -> Vec<TwoBlock> {
    let b = h.incidence_bigraph();
    let adj = b.adjacency();
    let m = b.num_a();
    let mut found: BTreeSet<(Vec<usize>, (usize, usize))> = BTreeSet::new();
    let mut out = Vec::new();
    let mut consider = |vertices: VertexSet, edges: Vec<usize>, pref: (usize, usize)| {
        if edges.len() < 2 || edges.len() == h.num_edges() {
            return;
        }
        let bd = boundary(h, vertices, &edges);
        if bd.len() != 2 || !vertices.contains(pref.0) || !vertices.contains(pref.1) {
            return;
        }
        let key = (edges.clone(), (bd[0], bd[1]));
        if found.contains(&key) || !is_2connected_part(h, vertices, &edges) {
            return;
        }
        found.insert(key);
        let happy = {
            let (sub, _) = h.compact_subhypergraph(&edges);
            sub.is_happy()
        };
        let (x, y) = pref;
        let mut tb = TwoBlock { vertices: vertices.to_vec(), edges, outer: (x, y), special: false, outside_edge: None };
        if happy {
            for (x, y) in [(x, y), (y, x)] {
                if let Some(a) = special_orientation(h, &tb.edges, x, y) {
                    tb.outer = (x, y);
                    tb.special = true;
                    tb.outside_edge = Some(a);
                    break;
                }
            }
        }
        out.push(tb);
    };

    for x in 0..h.n() {
        // vertex/edge separating pairs
        for a in 0..m {
            if h.edge(a).contains(x) {
                continue;
            }
            for comp in components_without(&adj, &[m + x, a]) {
                let ys: Vec<usize> = comp.iter().filter(|&&i| i >= m).map(|&i| i - m).collect();
                let on_a: Vec<usize> = ys.iter().copied().filter(|&y| h.edge(a).contains(y)).collect();
                if on_a.len() != 1 {
                    continue;
                }
                let edges: Vec<usize> = comp.iter().copied().filter(|&i| i < m).collect();
                let vertices = ys.iter().copied().collect::<VertexSet>().with(x);
                consider(vertices, edges, (x, on_a[0]));
            }
        }
        // vertex/vertex separating pairs
        for y in x + 1..h.n() {
            for comp in components_without(&adj, &[m + x, m + y]) {
                let edges: Vec<usize> = comp.iter().copied().filter(|&i| i < m).collect();
                let vertices = comp.iter().filter(|&&i| i >= m).map(|&i| i - m).collect::<VertexSet>().with(x).with(y);
                consider(vertices, edges, (x, y));
            }
        }
    }
    out.sort_by(|p, q| (&p.edges, p.outer).cmp(&(&q.edges, q.outer)));
    out
}

pub fn special_two_blocks(h: &Hypergraph) -> Vec<TwoBlock> {
    two_blocks(h).into_iter().filter(|t| t.special).collect()
}
