use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximum number of vertices on an `x,y`-path in `g` (0 if none).
pub fn longest_xy_path(g: &Graph, x: usize, y: usize) -> usize {
    assert!(x != y, "endpoints must differ");
    let mut best = 0;
    xy_dfs(g, y, x, VertexSet::singleton(x), 1, &mut best);
    best
}

fn xy_dfs(g: &Graph, y: usize, v: usize, used: VertexSet, count: usize, best: &mut usize) {
    if v == y {
        *best = (*best).max(count);
        return;
    }
    let free = g.vertices().difference(used);
    let reach = g.reach(v, free);
    if !reach.contains(y) || count + reach.len() <= *best {
        return;
    }
    for w in g.adj[v].difference(used) {
        xy_dfs(g, y, w, used.with(w), count + 1, best);
        if *best == g.n {
            return;
        }
    }
}

/// Every pair of vertices is joined by a path with at least `k` vertices.
pub fn is_k_path_connected(g: &Graph, k: usize) -> bool {
    for x in 0..g.n {
        for y in x + 1..g.n {
            if longest_xy_path(g, x, y) < k {
                return false;
            }
        }
    }
    true
}

/// Minimum over pairs of the longest `x,y`-path vertex count.
pub fn path_connectivity(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for x in 0..g.n {
        for y in x + 1..g.n {
            best = best.min(longest_xy_path(g, x, y));
        }
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

/// All linear forests with `l` edges on `0..n` (edges as ordered pairs `u < v`).
pub fn linear_forests(n: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut deg = vec![0u8; n];
    let mut dsu: Vec<usize> = (0..n).collect();
    forests(&pairs, 0, l, &mut cur, &mut deg, &mut dsu, &mut out);
    out
}

fn find(dsu: &[usize], mut v: usize) -> usize {
    while dsu[v] != v {
        v = dsu[v];
    }
    v
}

fn forests(
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    cur: &mut Vec<(usize, usize)>,
    deg: &mut [u8],
    dsu: &mut Vec<usize>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for i in from..pairs.len() {
        let (u, v) = pairs[i];
        if deg[u] >= 2 || deg[v] >= 2 {
            continue;
        }
        let (ru, rv) = (find(dsu, u), find(dsu, v));
        if ru == rv {
            continue;
        }
        let saved = dsu.clone();
        dsu[ru] = rv;
        deg[u] += 1;
        deg[v] += 1;
        cur.push((u, v));
        forests(pairs, i + 1, left - 1, cur, deg, dsu, out);
        cur.pop();
        deg[u] -= 1;
        deg[v] -= 1;
        *dsu = saved;
    }
}

/// Hamiltonian cycle of `g` that uses every edge of `forced`.
pub fn hamiltonian_cycle_through(g: &Graph, forced: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = g.n;
    if n < 3 {
        return None;
    }
    let mut lf = vec![VertexSet::EMPTY; n];
    for &(u, v) in forced {
        lf[u].insert(v);
        lf[v].insert(u);
    }
    let mut h = g.clone();
    for &(u, v) in forced {
        if !h.has_edge(u, v) {
            h.add_edge(u, v);
        }
    }
    let mut seq = vec![0];
    if ham_dfs(&h, &lf, &mut seq, VertexSet::singleton(0)) {
        Some(seq)
    } else {
        None
    }
}

fn ham_dfs(h: &Graph, lf: &[VertexSet], seq: &mut Vec<usize>, used: VertexSet) -> bool {
    let v = *seq.last().expect("nonempty");
    let prev = if seq.len() >= 2 { Some(seq[seq.len() - 2]) } else { None };
    if seq.len() == h.n {
        if !h.has_edge(v, seq[0]) {
            return false;
        }
        // every forced edge must appear consecutively
        let mut ok = vec![VertexSet::EMPTY; h.n];
        for i in 0..h.n {
            let (a, b) = (seq[i], seq[(i + 1) % h.n]);
            ok[a].insert(b);
            ok[b].insert(a);
        }
        return (0..h.n).all(|u| lf[u].is_subset(ok[u]));
    }
    let choices = if seq.len() == 1 {
        // reversing the cycle lets the first step take a forced edge
        match lf[v].min() {
            Some(w) => VertexSet::singleton(w),
            None => h.adj[v],
        }
    } else {
        let mut pending = lf[v];
        if let Some(p) = prev {
            pending.remove(p);
        }
        match pending.len() {
            0 => h.adj[v].difference(used),
            1 if !used.contains(pending.min().expect("one element")) => pending,
            _ => return false,
        }
    };
    for w in choices {
        seq.push(w);
        if ham_dfs(h, lf, seq, used.with(w)) {
            return true;
        }
        seq.pop();
    }
    false
}

/// For every linear forest `L` with `l` edges, `g ∪ L` has a hamiltonian
/// cycle containing `L`. With `l = 0` this is hamiltonicity.
pub fn is_l_hamiltonian(g: &Graph, l: usize) -> bool {
    if l == 0 {
        return hamiltonian_cycle_through(g, &[]).is_some();
    }
    linear_forests(g.n, l).iter().all(|f| hamiltonian_cycle_through(g, f).is_some())
}

/// Cycles of `g` with at least `min_len` vertices, each listed once starting
/// at its minimum vertex with second vertex below the last; stops after `limit`.
pub fn cycles(g: &Graph, min_len: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq = Vec::new();
    for s in 0..g.n {
        if out.len() >= limit {
            break;
        }
        seq.clear();
        seq.push(s);
        cycle_dfs(g, s, VertexSet::singleton(s), min_len.max(3), limit, &mut seq, &mut out);
    }
    out
}

fn cycle_dfs(
    g: &Graph,
    s: usize,
    used: VertexSet,
    min_len: usize,
    limit: usize,
    seq: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *seq.last().expect("nonempty");
    if seq.len() >= min_len && g.has_edge(v, s) && seq[1] < v {
        out.push(seq.clone());
        if out.len() >= limit {
            return;
        }
    }
    for w in g.adj[v].difference(used).difference(VertexSet::full(s + 1)) {
        seq.push(w);
        cycle_dfs(g, s, used.with(w), min_len, limit, seq, out);
        seq.pop();
        if out.len() >= limit {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_paths() {
        let k4 = Graph::complete(4);
        assert_eq!(longest_xy_path(&k4, 0, 3), 4);
        assert!(is_k_path_connected(&k4, 4));
    }

    #[test]
    fn five_cycle_paths() {
        let c5 = Graph::cycle(5);
        assert_eq!(longest_xy_path(&c5, 0, 2), 4);
        assert_eq!(longest_xy_path(&c5, 0, 1), 5);
        assert!(is_k_path_connected(&c5, 4));
        assert!(!is_k_path_connected(&c5, 5));
        assert_eq!(path_connectivity(&c5), 4);
    }

    #[test]
    fn disconnected_pair() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(longest_xy_path(&g, 0, 2), 0);
    }

    #[test]
    fn hamiltonicity_examples() {
        assert!(is_l_hamiltonian(&Graph::complete(5), 1));
        assert!(!is_l_hamiltonian(&Graph::cycle(5), 1));
        assert!(is_l_hamiltonian(&Graph::cycle(5), 0));
        assert!(hamiltonian_cycle_through(&Graph::cycle(5), &[(1, 3)]).is_none());
        assert!(hamiltonian_cycle_through(&Graph::cycle(5), &[(1, 2)]).is_some());
    }

    #[test]
    fn cycle_listing() {
        assert_eq!(cycles(&Graph::cycle(5), 3, 100), vec![vec![0, 1, 2, 3, 4]]);
        // K4: four triangles and three 4-cycles
        assert_eq!(cycles(&Graph::complete(4), 3, 100).len(), 7);
        assert_eq!(cycles(&Graph::complete(4), 4, 100).len(), 3);
        assert_eq!(cycles(&Graph::complete(5), 3, 5).len(), 5);
    }

    #[test]
    fn linear_forest_counts() {
        // one edge: all pairs; two edges on 4 vertices: 3 matchings + 12 paths
        assert_eq!(linear_forests(5, 1).len(), 10);
        assert_eq!(linear_forests(4, 2).len(), 15);
        // three edges on 4 vertices: the 12 hamiltonian paths
        assert_eq!(linear_forests(4, 3).len(), 12);
    }

    #[test]
    fn forced_cycle_contains_forced_edges() {
        let k6 = Graph::complete(6);
        let f = vec![(0, 3), (3, 5), (1, 2)];
        let cyc = hamiltonian_cycle_through(&k6, &f).unwrap();
        for (u, v) in f {
            let i = cyc.iter().position(|&x| x == u).unwrap();
            let ok = cyc[(i + 1) % 6] == v || cyc[(i + 5) % 6] == v;
            assert!(ok);
        }
    }
}
