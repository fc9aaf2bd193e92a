//! Extremal constructions: the Kopylov graphs `H_{n,k,a}`, the hypergraphs
//! `H_{n,k,r,a}` and the uniform family `F_{n,k,r,s}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::hypergraph::{EdgeFamily, Hypergraph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hnka,
    Hcal,
    Fnkrs,
}

/// Family, parameters and derived part sizes of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
    pub sizes: BTreeMap<String, usize>,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub hypergraph: Hypergraph,
    /// Part label to member vertices.
    pub partition: BTreeMap<String, Vec<usize>>,
    pub notes: Vec<String>,
}

impl Construction {
    /// The underlying graph when every edge has size 2.
    pub fn graph(&self) -> Option<Graph> {
        Graph::from_hypergraph(&self.hypergraph)
    }

    pub fn num_edges(&self) -> usize {
        self.hypergraph.num_edges()
    }

    /// Sidecar JSON object `{"partition": {...}}`.
    pub fn partition_json(&self) -> String {
        serde_json::json!({ "partition": self.partition }).to_string()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(domain(format!("n = {n} exceeds {MAX_VERTICES}")));
    }
    Ok(())
}

fn range(start: usize, len: usize) -> VertexSet {
    (start..start + len).collect()
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn parts(pairs: &[(&str, VertexSet)]) -> BTreeMap<String, Vec<usize>> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v.to_vec())).collect()
}

/// Kopylov's graph `H_{n,k,a}`: parts `A` (a), `B` (n-k+a), `C` (k-2a),
/// all `A`-`B` edges and all pairs inside `A ∪ C`.
pub fn build_hnka(n: usize, k: usize, a: usize) -> Result<Construction> {
    if !(k >= 4 && n >= k && a >= 1 && 2 * a < k) {
        return Err(domain(format!("need k >= 4, n >= k, 1 <= a < k/2; got n = {n}, k = {k}, a = {a}")));
    }
    check_n(n)?;
    let (sa, sb, sc) = (a, n - k + a, k - 2 * a);
    let pa = range(0, sa);
    let pb = range(sa, sb);
    let pc = range(sa + sb, sc);
    let mut g = Graph::new(n);
    for u in pa {
        for v in pb {
            g.add_edge(u, v);
        }
    }
    let ac = pa.union(pc);
    for u in ac {
        for v in ac.difference(VertexSet::full(u + 1)) {
            g.add_edge(u, v);
        }
    }
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::Hnka,
            params: params(&[("n", n), ("k", k), ("a", a)]),
            sizes: params(&[("A", sa), ("B", sb), ("C", sc)]),
        },
        hypergraph: g.to_hypergraph(),
        partition: parts(&[("A", pa), ("B", pb), ("C", pc)]),
        notes: Vec::new(),
    })
}

/// Sizes `(p, q)` of the two edge classes of `H_{n,k,r,a}`.
pub fn hcal_sizes(k: usize, r: usize, a: usize) -> (usize, usize) {
    ((r).min((k - a) / 2), (r - 1).min(a / 2))
}

fn check_hcal(n: usize, k: usize, r: usize, a: usize) -> Result<()> {
    if !(n >= k && k >= r && r >= 2 && a >= 1 && a <= (k - 1) / 2) {
        return Err(domain(format!(
            "need n >= k >= r >= 2 and 1 <= a <= (k-1)/2; got n = {n}, k = {k}, r = {r}, a = {a}"
        )));
    }
    check_n(n)
}

fn hcal_parts(n: usize, k: usize, a: usize) -> (VertexSet, VertexSet, VertexSet) {
    let sa = k - 2 * a;
    (range(0, sa), range(sa, a), range(sa + a, n + a - k))
}

/// The literal edge family: all `p`-subsets of `A ∪ B` and `{c} ∪ e'` with
/// `e'` a `q`-subset of `B`. May contain singletons or comparable edges.
pub fn build_hcal_literal(n: usize, k: usize, r: usize, a: usize) -> Result<EdgeFamily> {
    check_hcal(n, k, r, a)?;
    let (p, q) = hcal_sizes(k, r, a);
    let (pa, pb, pc) = hcal_parts(n, k, a);
    let mut fam = EdgeFamily::new(n, r);
    for e in pa.union(pb).subsets_of_size(p) {
        fam.push(e);
    }
    for c in pc {
        for e in pb.subsets_of_size(q) {
            fam.push(e.with(c));
        }
    }
    fam.canonicalize();
    Ok(fam)
}

/// `H_{n,k,r,a}` as a valid Sperner hypergraph with `f(n,k,r,a)` edges.
/// When `p <= q` the `A ∪ B` class uses complements `(k-a-p)`-subsets,
/// which keeps the count and restores the Sperner property.
pub fn build_hcal(n: usize, k: usize, r: usize, a: usize) -> Result<Construction> {
    check_hcal(n, k, r, a)?;
    let (p, q) = hcal_sizes(k, r, a);
    if q == 0 {
        return Err(domain(format!("a = {a} gives singleton edges {{c}}; no valid hypergraph")));
    }
    let (pa, pb, pc) = hcal_parts(n, k, a);
    let mut notes = Vec::new();
    let inner = if p <= q {
        notes.push(format!("A∪B edges use {}-subsets in place of {p}-subsets", k - a - p));
        k - a - p
    } else {
        p
    };
    let mut fam = EdgeFamily::new(n, r);
    for e in pa.union(pb).subsets_of_size(inner) {
        fam.push(e);
    }
    for c in pc {
        for e in pb.subsets_of_size(q) {
            fam.push(e.with(c));
        }
    }
    fam.canonicalize();
    let hypergraph = fam.build().map_err(crate::error::Error::Invalid)?;
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::Hcal,
            params: params(&[("n", n), ("k", k), ("r", r), ("a", a)]),
            sizes: params(&[("A", pa.len()), ("B", a), ("C", pc.len())]),
        },
        hypergraph,
        partition: parts(&[("A", pa), ("B", pb), ("C", pc)]),
        notes,
    })
}

/// `F_{n,k,r,s}` with `n = k-2+s(r-1)`: all `r`-subsets of `C` (size `k-2`)
/// plus `A_i ∪ {c_j}` for `i ∈ [s]`, `j ∈ [2]`.
pub fn build_fnkrs(k: usize, r: usize, s: usize) -> Result<Construction> {
    if !(r >= 3 && k >= 4 * r && s >= 1) {
        return Err(domain(format!("need k >= 4r >= 12 and s >= 1; got k = {k}, r = {r}, s = {s}")));
    }
    let n = k - 2 + s * (r - 1);
    check_n(n)?;
    let pc = range(0, k - 2);
    let mut fam = EdgeFamily::new(n, r);
    for e in pc.subsets_of_size(r) {
        fam.push(e);
    }
    let mut partition = parts(&[("C", pc), ("c1", VertexSet::singleton(0)), ("c2", VertexSet::singleton(1))]);
    for i in 0..s {
        let ai = range(k - 2 + i * (r - 1), r - 1);
        fam.push(ai.with(0));
        fam.push(ai.with(1));
        partition.insert(format!("A{}", i + 1), ai.to_vec());
    }
    fam.canonicalize();
    let hypergraph = fam.build().map_err(crate::error::Error::Invalid)?;
    let mut sizes = params(&[("C", k - 2), ("n", n)]);
    sizes.insert("A_i".into(), r - 1);
    Ok(Construction {
        spec: ConstructionSpec { family: Family::Fnkrs, params: params(&[("k", k), ("r", r), ("s", s)]), sizes },
        hypergraph,
        partition,
        notes: vec![format!("{} pendant edges A_i ∪ {{c_j}} (2s), not 2(r-1)", 2 * s)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::circumference;
    use crate::bounds::{binom, f};
    use crate::connectivity::is_2connected;
    use num_bigint::BigUint;

    #[test]
    fn hnka_counts() {
        let c = build_hnka(14, 11, 3).unwrap();
        assert_eq!(c.num_edges(), 46);
        assert_eq!(c.partition["C"].len(), 5);
        for k in 5..9 {
            let c = build_hnka(k, k, 2).unwrap();
            assert_eq!(BigUint::from(c.num_edges()), binom(k - 2, 2) + BigUint::from(4u32));
        }
        assert!(build_hnka(6, 6, 3).is_err());
    }

    #[test]
    fn hnka_small_circumference() {
        let h = build_hnka(6, 5, 2).unwrap().hypergraph;
        assert!(is_2connected(&h));
        assert_eq!(circumference(&h, None).length, 4);
    }

    #[test]
    fn hcal_example() {
        let c = build_hcal(8, 6, 3, 2).unwrap();
        assert_eq!(c.num_edges(), 14);
        assert!(c.hypergraph.is_sperner());
        assert!(is_2connected(&c.hypergraph));
        assert_eq!(c.hypergraph.incidence_bigraph().num_incidences(), 28);
        let u = build_hcal(20, 10, 3, 4).unwrap();
        assert!(u.hypergraph.is_uniform(3));
        assert_eq!(BigUint::from(u.num_edges()), f(20, 10, 3, 4).unwrap());
    }

    #[test]
    fn hcal_complement_case() {
        let lit = build_hcal_literal(7, 5, 3, 2).unwrap();
        assert!(lit.edges.iter().any(|e| e.len() == 1));
        let c = build_hcal(7, 5, 3, 2).unwrap();
        assert_eq!(BigUint::from(c.num_edges()), f(7, 5, 3, 2).unwrap());
        assert!(c.graph().is_some());
        assert!(build_hcal(7, 5, 3, 1).is_err());
        assert_eq!(BigUint::from(build_hcal_literal(7, 5, 3, 1).unwrap().len()), f(7, 5, 3, 1).unwrap());
    }

    #[test]
    fn fnkrs_counts() {
        let c = build_fnkrs(12, 3, 2).unwrap();
        assert_eq!(c.hypergraph.n(), 14);
        assert_eq!(c.num_edges(), 124);
        assert!(is_2connected(&c.hypergraph));
        assert_eq!(build_fnkrs(12, 3, 1).unwrap().num_edges(), 122);
        assert!(build_fnkrs(11, 3, 1).is_err());
    }

    #[test]
    fn rebuild_is_identical() {
        let a = build_hcal(9, 7, 3, 3).unwrap().hypergraph.to_json();
        let b = build_hcal(9, 7, 3, 3).unwrap().hypergraph.to_json();
        assert_eq!(a, b);
    }
}
