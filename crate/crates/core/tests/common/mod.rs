#![allow(dead_code)]

use std::collections::BTreeMap;

use hypertree_spectra::hypergraph::grow_hypertree;
use hypertree_spectra::Hypergraph;
use rand::Rng;

pub fn five_edge() -> Hypergraph {
    let src = include_str!("../../../../data/five_edge.txt");
    hypertree_spectra::io::parse_text(src)
        .unwrap()
        .into_hypergraph()
        .unwrap()
}

pub fn hyperstar() -> Hypergraph {
    let src = include_str!("../../../../data/hyperstar.txt");
    hypertree_spectra::io::parse_text(src)
        .unwrap()
        .into_hypergraph()
        .unwrap()
}

pub fn random_hypertree(r: usize, m: usize, rng: &mut impl Rng) -> Hypergraph {
    grow_hypertree(r, m, |k| rng.gen_range(0..k))
}

/// Random r-uniform hypergraph (not necessarily a tree) with `m` distinct edges.
pub fn random_hypergraph(r: usize, n: usize, m: usize, rng: &mut impl Rng) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    while edges.len() < m {
        let mut e: Vec<usize> = rand::seq::index::sample(rng, n, r).into_vec();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(r, n, edges).unwrap()
}

// Incidence tree: vertices 0..n, edges n..n+m.
fn incidence(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut adj = vec![Vec::new(); n + h.m()];
    for (e, verts) in h.edges().iter().enumerate() {
        for &v in verts {
            adj[v].push(n + e);
            adj[n + e].push(v);
        }
    }
    adj
}

fn encode(adj: &[Vec<usize>], n: usize, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, n, w, v))
        .collect();
    kids.sort();
    format!("{}({})", if v < n { 'v' } else { 'e' }, kids.concat())
}

/// Canonical form of a hypertree up to isomorphism: AHU encoding of the
/// incidence tree rooted at a center.
pub fn canonical(h: &Hypergraph) -> String {
    let adj = incidence(h);
    let total = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..total).filter(|&v| degree[v] <= 1).collect();
    let mut left = total;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &v in &leaves {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves
        .iter()
        .map(|&c| encode(&adj, h.n(), c, usize::MAX))
        .min()
        .unwrap()
}

/// Every r-uniform hypertree with `m` edges, one per isomorphism class.
pub fn all_hypertrees(r: usize, m: usize) -> Vec<Hypergraph> {
    let mut seen: BTreeMap<String, Hypergraph> = BTreeMap::new();
    let steps: Vec<usize> = (0..m).map(|i| i * (r - 1) + 1).collect();
    let mut picks = vec![0usize; m];
    loop {
        let mut it = picks.iter();
        let h = grow_hypertree(r, m, |_| *it.next().unwrap());
        seen.entry(canonical(&h)).or_insert(h);
        let mut i = 0;
        loop {
            if i == m {
                return seen.into_values().collect();
            }
            picks[i] += 1;
            if picks[i] < steps[i] {
                break;
            }
            picks[i] = 0;
            i += 1;
        }
    }
}
