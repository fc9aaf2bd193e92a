use std::collections::VecDeque;

/// Bipartite graph between `left` and `right` parts given by left adjacency.
#[derive(Clone, Debug)]
pub struct Bipartite {
    pub n_left: usize,
    pub n_right: usize,
    pub adj: Vec<Vec<usize>>,
}

impl Bipartite {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        Bipartite { n_left, n_right, adj: vec![Vec::new(); n_left] }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        self.adj[l].push(r);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub size: usize,
}

impl Matching {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left.iter().enumerate().filter_map(|(l, r)| r.map(|r| (l, r))).collect()
    }
}

/// Maximum matching by Hopcroft–Karp.
pub fn hopcroft_karp(g: &Bipartite) -> Matching {
    const INF: usize = usize::MAX;
    let mut ml: Vec<Option<usize>> = vec![None; g.n_left];
    let mut mr: Vec<Option<usize>> = vec![None; g.n_right];
    let mut dist = vec![INF; g.n_left];
    let mut size = 0;
    loop {
        // BFS layering from free left vertices
        let mut q = VecDeque::new();
        for l in 0..g.n_left {
            if ml[l].is_none() {
                dist[l] = 0;
                q.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = q.pop_front() {
            for &r in &g.adj[l] {
                match mr[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == INF => {
                        dist[l2] = dist[l] + 1;
                        q.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; g.n_left];
        for l in 0..g.n_left {
            if ml[l].is_none() && augment(g, l, &mut ml, &mut mr, &mut dist, &mut it) {
                size += 1;
            }
        }
    }
    Matching { left: ml, right: mr, size }
}

fn augment(
    g: &Bipartite,
    l: usize,
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[l] < g.adj[l].len() {
        let r = g.adj[l][it[l]];
        it[l] += 1;
        let ok = match mr[r] {
            None => true,
            Some(l2) => dist[l2] == dist[l] + 1 && augment(g, l2, ml, mr, dist, it),
        };
        if ok {
            ml[l] = Some(r);
            mr[r] = Some(l);
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Either a matching saturating the left part, or a Hall violator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cover {
    Matching(Matching),
    Violator { set: Vec<usize>, neighborhood: Vec<usize> },
}

/// Left vertices reachable from `start` by alternating paths, with their
/// right neighborhoods.
fn alternating_reach(g: &Bipartite, m: &Matching, starts: &[usize]) -> (Vec<bool>, Vec<bool>) {
    let mut zl = vec![false; g.n_left];
    let mut zr = vec![false; g.n_right];
    let mut q: VecDeque<usize> = starts.iter().copied().collect();
    for &s in starts {
        zl[s] = true;
    }
    while let Some(l) = q.pop_front() {
        for &r in &g.adj[l] {
            if !zr[r] {
                zr[r] = true;
                if let Some(l2) = m.right[r] {
                    if !zl[l2] {
                        zl[l2] = true;
                        q.push_back(l2);
                    }
                }
            }
        }
    }
    (zl, zr)
}

pub fn matching_cover(g: &Bipartite) -> Cover {
    let m = hopcroft_karp(g);
    if m.size == g.n_left {
        return Cover::Matching(m);
    }
    let free = (0..g.n_left).find(|&l| m.left[l].is_none()).expect("unsaturated left vertex");
    let (zl, zr) = alternating_reach(g, &m, &[free]);
    Cover::Violator {
        set: (0..g.n_left).filter(|&l| zl[l]).collect(),
        neighborhood: (0..g.n_right).filter(|&r| zr[r]).collect(),
    }
}

/// Minimum vertex cover from a maximum matching (König): returns
/// `(left cover flags, right cover flags)`.
pub fn konig_cover(g: &Bipartite, m: &Matching) -> (Vec<bool>, Vec<bool>) {
    let free: Vec<usize> = (0..g.n_left).filter(|&l| m.left[l].is_none()).collect();
    let (zl, zr) = alternating_reach(g, m, &free);
    (zl.iter().map(|&z| !z).collect(), zr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_max(g: &Bipartite) -> usize {
        fn rec(g: &Bipartite, l: usize, used: &mut Vec<bool>) -> usize {
            if l == g.n_left {
                return 0;
            }
            let mut best = rec(g, l + 1, used);
            for &r in &g.adj[l] {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + rec(g, l + 1, used));
                    used[r] = false;
                }
            }
            best
        }
        rec(g, 0, &mut vec![false; g.n_right])
    }

    #[test]
    fn cover_examples() {
        let mut g = Bipartite::new(1, 2);
        g.add_edge(0, 0);
        g.add_edge(0, 1);
        let Cover::Matching(m) = matching_cover(&g) else { panic!() };
        assert_eq!(m.pairs(), vec![(0, 0)]);

        let mut g = Bipartite::new(2, 1);
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        assert_eq!(matching_cover(&g), Cover::Violator { set: vec![0, 1], neighborhood: vec![0] });
    }

    fn arb_bipartite() -> impl Strategy<Value = Bipartite> {
        (1usize..7, 1usize..7).prop_flat_map(|(nl, nr)| {
            proptest::collection::vec(proptest::collection::vec(0..nr, 0..4), nl).prop_map(move |adj| {
                let mut g = Bipartite::new(nl, nr);
                for (l, rs) in adj.into_iter().enumerate() {
                    let mut rs = rs;
                    rs.sort_unstable();
                    rs.dedup();
                    for r in rs {
                        g.add_edge(l, r);
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn hopcroft_karp_is_maximum(g in arb_bipartite()) {
            let m = hopcroft_karp(&g);
            prop_assert_eq!(m.size, brute_max(&g));
            for (l, r) in m.pairs() {
                prop_assert!(g.adj[l].contains(&r));
                prop_assert_eq!(m.right[r], Some(l));
            }
            let (cl, cr) = konig_cover(&g, &m);
            let cover = cl.iter().filter(|&&c| c).count() + cr.iter().filter(|&&c| c).count();
            prop_assert_eq!(cover, m.size);
            for (l, adj) in g.adj.iter().enumerate().take(g.n_left) {
                for &r in adj {
                    prop_assert!(cl[l] || cr[r]);
                }
            }
        }

        #[test]
        fn violator_breaks_hall(g in arb_bipartite()) {
            if let Cover::Violator { set, neighborhood } = matching_cover(&g) {
                prop_assert!(set.len() > neighborhood.len());
                let mut nb: Vec<usize> = set.iter().flat_map(|&l| g.adj[l].iter().copied()).collect();
                nb.sort_unstable();
                nb.dedup();
                prop_assert_eq!(nb, neighborhood);
            }
        }
    }
}
