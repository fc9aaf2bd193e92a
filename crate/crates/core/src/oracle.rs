//! Slow reference searches on the incidence bigraph, independent of the
//! matching-based search in [`crate::berge`].

use crate::hypergraph::Hypergraph;

/// Longest Berge cycle length: half the longest cycle of `I(h)`.
pub fn circumference(h: &Hypergraph) -> usize {
    let adj = h.incidence_bigraph().adjacency();
    let nodes = adj.len();
    let mut best = 0;
    for s in 0..nodes {
        let mut on = vec![false; nodes];
        on[s] = true;
        cycle_dfs(&adj, s, s, 1, &mut on, &mut best);
    }
    best / 2
}

fn cycle_dfs(adj: &[Vec<usize>], s: usize, v: usize, len: usize, on: &mut [bool], best: &mut usize) {
    for &w in &adj[v] {
        if w == s && len >= 4 {
            *best = (*best).max(len);
        }
        // only nodes above the start, so each cycle is rooted at its minimum
        if w > s && !on[w] {
            on[w] = true;
            cycle_dfs(adj, s, w, len + 1, on, best);
            on[w] = false;
        }
    }
}

/// Longest Berge path length: longest `I(h)` path between vertex-nodes.
pub fn longest_path(h: &Hypergraph) -> usize {
    let adj = h.incidence_bigraph().adjacency();
    let m = h.num_edges();
    let mut best = 0;
    for s in m..adj.len() {
        let mut on = vec![false; adj.len()];
        on[s] = true;
        path_dfs(&adj, m, s, 0, &mut on, &mut best);
    }
    best / 2
}

fn path_dfs(adj: &[Vec<usize>], m: usize, v: usize, len: usize, on: &mut [bool], best: &mut usize) {
    if v >= m {
        *best = (*best).max(len);
    }
    for &w in &adj[v] {
        if !on[w] {
            on[w] = true;
            path_dfs(adj, m, w, len + 1, on, best);
            on[w] = false;
        }
    }
}

/// Exhaustive check that `h` contains a Berge cycle exactly on `base`.
pub fn has_cycle_on(h: &Hypergraph, base: &[usize]) -> bool {
    if base.len() < 2 {
        return false;
    }
    let first = base[0];
    let rest: Vec<usize> = base[1..].to_vec();
    let mut used = vec![false; h.num_edges()];
    let mut placed = vec![false; rest.len()];
    fn rec(
        h: &Hypergraph,
        first: usize,
        cur: usize,
        rest: &[usize],
        placed: &mut [bool],
        used: &mut [bool],
        depth: usize,
    ) -> bool {
        if depth == rest.len() {
            return (0..h.num_edges()).any(|e| !used[e] && h.edge(e).contains(cur) && h.edge(e).contains(first));
        }
        for i in 0..rest.len() {
            if placed[i] {
                continue;
            }
            let w = rest[i];
            for e in 0..h.num_edges() {
                if !used[e] && h.edge(e).contains(cur) && h.edge(e).contains(w) {
                    used[e] = true;
                    placed[i] = true;
                    let ok = rec(h, first, w, rest, placed, used, depth + 1);
                    used[e] = false;
                    placed[i] = false;
                    if ok {
                        return true;
                    }
                }
            }
        }
        false
    }
    rec(h, first, first, &rest, &mut placed, &mut used, 0)
}
