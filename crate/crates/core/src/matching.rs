//! Matching counts and matching polynomials of uniform hypergraphs.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{EdgeSet, Hypergraph, HypergraphError};
use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("power hypergraphs need a target uniformity of at least 3, got {0}")]
    TargetTooSmall(usize),
    #[error("expected an ordinary graph (r = 2), got r = {0}")]
    NotAGraph(usize),
    #[error("input is not a tree: {0}")]
    NotATree(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Number of k-matchings for every k, plus the matching number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingProfile {
    /// `counts[k]` is the number of k-matchings; the last entry is nonzero.
    pub counts: Vec<u128>,
    pub nu: usize,
    pub order: usize,
}

impl MatchingProfile {
    fn new(counts: Vec<u128>, order: usize) -> Self {
        let nu = counts.len() - 1;
        Self { counts, nu, order }
    }

    /// sum_k (-1)^k m(k) x^(n - k r)
    pub fn polynomial(&self, r: usize) -> IntPoly {
        IntPoly::from_terms(self.counts.iter().enumerate().map(|(k, &c)| {
            let c = BigInt::from(c);
            let deg = (self.order - k * r) as u64;
            (deg, if k % 2 == 0 { c } else { -c })
        }))
    }
}

/// How the deletion recursion chooses the edge to branch on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pivot {
    /// Least edge id.
    First,
    /// Largest edge id.
    Last,
    /// Edge meeting the most other edges (splits trees quickly).
    #[default]
    MaxDegree,
}

/// Matching counts of sub-hypergraphs of one host, memoized by edge set.
///
/// Uses m(k) = m_{H-e}(k) + m_{H-V(e)}(k-1) and multiplies over connected
/// components, so subgraphs of the same host share work.
pub struct MatchingCounter<'a> {
    host: &'a Hypergraph,
    pivot: Pivot,
    // Edges sharing a vertex with each edge, including itself.
    closed_nbhd: Vec<EdgeSet>,
    memo: HashMap<EdgeSet, Vec<u128>>,
}

impl<'a> MatchingCounter<'a> {
    pub fn new(host: &'a Hypergraph, pivot: Pivot) -> Self {
        let m = host.m();
        let closed_nbhd = (0..m)
            .map(|e| {
                EdgeSet::from_ids(
                    m,
                    host.edge(e)
                        .iter()
                        .flat_map(|&v| host.incident_edges(v).iter().copied()),
                )
            })
            .collect();
        Self {
            host,
            pivot,
            closed_nbhd,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Counts for the sub-hypergraph spanned by `edges`.
    pub fn counts(&mut self, edges: &EdgeSet) -> Vec<u128> {
        if edges.is_empty() {
            return vec![1];
        }
        if let Some(c) = self.memo.get(edges) {
            return c.clone();
        }
        let comps = self.split(edges);
        let result = if comps.len() > 1 {
            comps.iter().fold(vec![1u128], |acc, comp| {
                let c = self.counts(comp);
                convolve(&acc, &c)
            })
        } else {
            let e = self.choose_pivot(edges);
            let mut without = edges.clone();
            without.remove(e);
            let a = self.counts(&without);
            let b = self.counts(&edges.difference(&self.closed_nbhd[e]));
            let len = a.len().max(b.len() + 1);
            let mut out = vec![0u128; len];
            for (k, v) in a.iter().enumerate() {
                out[k] += v;
            }
            for (k, v) in b.iter().enumerate() {
                out[k + 1] += v;
            }
            out
        };
        self.memo.insert(edges.clone(), result.clone());
        result
    }

    fn choose_pivot(&self, edges: &EdgeSet) -> usize {
        match self.pivot {
            Pivot::First => edges.first().expect("nonempty"),
            Pivot::Last => edges.iter().last().expect("nonempty"),
            Pivot::MaxDegree => edges
                .iter()
                .max_by_key(|&e| {
                    let nb = &self.closed_nbhd[e];
                    (
                        edges.iter().filter(|&f| nb.contains(f)).count(),
                        std::cmp::Reverse(e),
                    )
                })
                .expect("nonempty"),
        }
    }

    // Connected components of an edge set, each as an edge set.
    fn split(&self, edges: &EdgeSet) -> Vec<EdgeSet> {
        let m = self.host.m();
        let mut remaining = edges.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = EdgeSet::with_capacity(m);
            let mut stack = vec![start];
            remaining.remove(start);
            comp.insert(start);
            while let Some(e) = stack.pop() {
                for f in self.closed_nbhd[e].iter() {
                    if remaining.contains(f) {
                        remaining.remove(f);
                        comp.insert(f);
                        stack.push(f);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

fn convolve(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact k-matching counts of `h`.
pub fn matching_counts(h: &Hypergraph) -> MatchingProfile {
    matching_counts_with(h, Pivot::default())
}

pub fn matching_counts_with(h: &Hypergraph, pivot: Pivot) -> MatchingProfile {
    let mut counter = MatchingCounter::new(h, pivot);
    let counts = counter.counts(&EdgeSet::full(h.m()));
    MatchingProfile::new(counts, h.n())
}

/// phi_H(x) = sum_k (-1)^k m_H(k) x^(n - k r)
pub fn matching_polynomial(h: &Hypergraph) -> IntPoly {
    matching_counts(h).polynomial(h.r())
}

/// Product of the matching polynomials of the components (the matching
/// polynomial of their disjoint union).
pub fn union_matching(hs: &[Hypergraph]) -> IntPoly {
    hs.iter()
        .map(matching_polynomial)
        .fold(IntPoly::one(), |acc, p| &acc * &p)
}

/// The r-th power of a graph: each 2-edge gains `r_target - 2` fresh vertices.
///
/// Fresh vertices are appended after the original ones, edge by edge.
pub fn power_hypergraph(g: &Hypergraph, r_target: usize) -> Result<Hypergraph, MatchingError> {
    if g.r() != 2 {
        return Err(MatchingError::NotAGraph(g.r()));
    }
    if r_target < 3 {
        return Err(MatchingError::TargetTooSmall(r_target));
    }
    let extra = r_target - 2;
    let n = g.n() + g.m() * extra;
    let mut labels = g.labels().to_vec();
    let mut edges = Vec::with_capacity(g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let mut edge = e.clone();
        for j in 0..extra {
            let v = g.n() + i * extra + j;
            edge.push(v);
            labels.push(format!("{}~{}.{}", g.label(e[0]), g.label(e[1]), j + 1));
        }
        edges.push(edge);
    }
    Ok(Hypergraph::with_labels(r_target, n, edges, labels)?)
}

/// Matching polynomial of `T^r` computed from the matching counts of the
/// 2-tree `T`: sum_k (-1)^k m_T(k) x^(|T^r| - k r).
pub fn power_tree_matching(t: &Hypergraph, r: usize) -> Result<IntPoly, MatchingError> {
    if t.r() != 2 {
        return Err(MatchingError::NotAGraph(t.r()));
    }
    if r < 3 {
        return Err(MatchingError::TargetTooSmall(r));
    }
    if !(t.is_connected() && t.m() + 1 == t.n()) {
        return Err(MatchingError::NotATree(format!(
            "{} vertices, {} edges, connected = {}",
            t.n(),
            t.m(),
            t.is_connected()
        )));
    }
    let profile = matching_counts(t);
    let order = t.n() + t.m() * (r - 2);
    Ok(MatchingProfile::new(profile.counts, order).polynomial(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    fn five_edge() -> Hypergraph {
        let e = |a: usize, b: usize, c: usize| vec![a - 1, b - 1, c - 1];
        Hypergraph::new(
            3,
            11,
            vec![e(1, 4, 7), e(1, 2, 3), e(4, 5, 6), e(7, 8, 9), e(7, 10, 11)],
        )
        .unwrap()
    }

    fn desc(coeffs: &[i64]) -> IntPoly {
        let n = coeffs.len();
        IntPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((n - 1 - i) as u64, *c)),
        )
    }

    #[test]
    fn edgeless_graph() {
        let h = Hypergraph::new(3, 4, vec![]).unwrap();
        let p = matching_counts(&h);
        assert_eq!(p.counts, vec![1]);
        assert_eq!(p.nu, 0);
        assert_eq!(matching_polynomial(&h), IntPoly::monomial(1, 4));
    }

    #[test]
    fn five_edge_profile() {
        let p = matching_counts(&five_edge());
        assert_eq!(p.counts, vec![1, 5, 5, 2]);
        assert_eq!(p.nu, 3);
        assert_eq!(
            matching_polynomial(&five_edge()),
            desc(&[1, 0, 0, -5, 0, 0, 5, 0, 0, -2, 0, 0])
        );
    }

    #[test]
    fn two_edge_path() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(matching_counts(&h).counts, vec![1, 2]);
        assert_eq!(matching_polynomial(&h), desc(&[1, 0, 0, -2, 0, 0]));
    }

    #[test]
    fn single_edge_and_vertex() {
        let e = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(matching_polynomial(&e), desc(&[1, 0, 0, 0, -1]));
        let v = Hypergraph::new(3, 1, vec![]).unwrap();
        assert_eq!(matching_polynomial(&v), IntPoly::x());
    }

    #[test]
    fn pivots_agree_on_five_edge() {
        let h = five_edge();
        let a = matching_counts_with(&h, Pivot::First);
        let b = matching_counts_with(&h, Pivot::Last);
        let c = matching_counts_with(&h, Pivot::MaxDegree);
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn union_examples() {
        let e = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let cube = desc(&[1, 0, 0, -1]);
        assert_eq!(union_matching(&[e.clone(), e.clone()]), &cube * &cube);
        let iso = Hypergraph::new(3, 1, vec![]).unwrap();
        assert_eq!(
            union_matching(&[iso.clone(), iso.clone(), iso]),
            IntPoly::monomial(1, 3)
        );
        assert_eq!(union_matching(std::slice::from_ref(&e)), cube);
    }

    #[test]
    fn power_hypergraph_examples() {
        let p2 = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let loose = power_hypergraph(&p2, 3).unwrap();
        assert_eq!((loose.n(), loose.m(), loose.r()), (5, 2, 3));
        let k2 = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let four = power_hypergraph(&k2, 4).unwrap();
        assert_eq!((four.n(), four.m()), (4, 1));
        let p3 = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(power_hypergraph(&p3, 3).unwrap().n(), 7);
        assert!(matches!(
            power_hypergraph(&p3, 2),
            Err(MatchingError::TargetTooSmall(2))
        ));
    }

    #[test]
    fn power_tree_matching_examples() {
        let p2 = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            power_tree_matching(&p2, 4).unwrap(),
            desc(&[1, 0, 0, 0, -2, 0, 0, 0])
        );
        let k2 = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(power_tree_matching(&k2, 3).unwrap(), desc(&[1, 0, 0, -1]));
        let star = Hypergraph::new(2, 4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(
            power_tree_matching(&star, 3).unwrap(),
            desc(&[1, 0, 0, -3, 0, 0, 0, 0])
        );
        let cycle = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(matches!(
            power_tree_matching(&cycle, 3),
            Err(MatchingError::NotATree(_))
        ));
    }
}
