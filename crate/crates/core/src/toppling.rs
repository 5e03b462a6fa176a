//! Chip-firing on monomials.
//!
//! A configuration puts `d = n(r-2) + 1` chips on the n vertices. Its class
//! is the highest-priority vertex holding at least r-1 chips, and toppling an
//! incidence (v, e) moves r-1 chips off v and one onto each other vertex of e.
//! The toppled digraph has one arc per edge at the class vertex; its
//! adjacency matrix is the Macaulay matrix of the eigen-system up to `l I`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, Hypertree, SubgraphHandle};
use crate::linalg::{charpoly_dense, rank};
use crate::matching::matching_polynomial;
use crate::poly::{FactoredPoly, IntPoly};

pub const DEFAULT_DIGRAPH_CAP: usize = 200_000;
pub const DEFAULT_DENSE_CAP: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopplingError {
    #[error("toppled digraph would have {size} configurations, cap is {cap}")]
    CapExceeded { size: u128, cap: usize },
    #[error("vertex {vertex} holds {chips} chips, fewer than r-1 = {need}")]
    Stable {
        vertex: usize,
        chips: u32,
        need: u32,
    },
    #[error("vertex {vertex} is not the designated vertex {designated} of this configuration")]
    NotDesignated { vertex: usize, designated: usize },
    #[error("edge {edge} does not contain vertex {vertex}")]
    NotIncident { vertex: usize, edge: usize },
    #[error("configuration has {got} chips on {len} vertices, expected {want} chips on {n}")]
    BadConfiguration {
        got: u64,
        want: u64,
        len: usize,
        n: usize,
    },
    #[error("ordering must list every vertex exactly once")]
    BadOrdering,
    #[error("configuration is not critical")]
    NotCritical,
    #[error("strong component has {size} vertices, dense cap is {cap}")]
    DenseCap { size: usize, cap: usize },
    #[error(transparent)]
    Hypergraph(#[from] crate::hypergraph::HypergraphError),
}

/// Vertex priorities: `priority[0]` is the highest, the last entry is the
/// lowest ("x_i last").
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexOrder {
    priority: Vec<usize>,
    #[serde(skip)]
    rank: Vec<usize>,
}

impl VertexOrder {
    pub fn from_priority(priority: Vec<usize>) -> Result<Self, TopplingError> {
        let n = priority.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(TopplingError::BadOrdering);
            }
            rank[v] = n - 1 - i;
        }
        Ok(Self { priority, rank })
    }

    /// The good ordering of a rooted hypertree: larger labels rank higher and
    /// the root comes last.
    pub fn good(t: &Hypertree) -> Self {
        let n = t.n();
        Self::from_priority((0..n).rev().map(|l| t.vertex_at(l)).collect())
            .expect("labels form a permutation")
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// 0 for the lowest vertex, n-1 for the highest.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn lowest(&self) -> usize {
        *self.priority.last().expect("nonempty ordering")
    }

    pub fn len(&self) -> usize {
        self.priority.len()
    }

    pub fn is_empty(&self) -> bool {
        self.priority.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration(pub Vec<u32>);

impl Configuration {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn chips(&self, v: usize) -> u32 {
        self.0[v]
    }
}

/// Number of chips `d = n(r-2) + 1` for n vertices.
pub fn chip_total(n: usize, r: usize) -> usize {
    n * (r - 2) + 1
}

/// The class S_i of a configuration: its highest-priority vertex with at
/// least r-1 chips.
pub fn classify(cfg: &Configuration, r: usize, order: &VertexOrder) -> Option<usize> {
    order
        .priority()
        .iter()
        .copied()
        .find(|&v| cfg.0[v] as usize >= r - 1)
}

/// Topples (v, e), enforcing that v is the designated vertex.
pub fn topple(
    h: &Hypergraph,
    order: &VertexOrder,
    cfg: &Configuration,
    v: usize,
    e: usize,
) -> Result<Configuration, TopplingError> {
    let r = h.r();
    let need = (r - 1) as u32;
    if cfg.0.len() != h.n() {
        return Err(TopplingError::BadConfiguration {
            got: cfg.total(),
            want: chip_total(h.n(), r) as u64,
            len: cfg.0.len(),
            n: h.n(),
        });
    }
    if cfg.0[v] < need {
        return Err(TopplingError::Stable {
            vertex: v,
            chips: cfg.0[v],
            need,
        });
    }
    let designated = classify(cfg, r, order).expect("v is unstable");
    if designated != v {
        return Err(TopplingError::NotDesignated {
            vertex: v,
            designated,
        });
    }
    if !h.edge(e).contains(&v) {
        return Err(TopplingError::NotIncident { vertex: v, edge: e });
    }
    Ok(fire(cfg, h.edge(e), v, need))
}

fn fire(cfg: &Configuration, edge: &[usize], v: usize, need: u32) -> Configuration {
    let mut out = cfg.clone();
    out.0[v] -= need;
    for &w in edge {
        if w != v {
            out.0[w] += 1;
        }
    }
    out
}

/// Colex ranking of weak compositions of `d` into `n` parts.
#[derive(Clone, Debug)]
pub struct CompositionIndex {
    n: usize,
    d: usize,
    // binom[a][b] = C(a, b) for a <= d + n - 1, b <= n - 1
    binom: Vec<Vec<u64>>,
}

impl CompositionIndex {
    pub fn new(n: usize, d: usize) -> Self {
        let top = d + n;
        let width = n.max(1);
        let mut binom = vec![vec![0u64; width + 1]; top + 1];
        for a in 0..=top {
            binom[a][0] = 1;
            for b in 1..=width.min(a) {
                binom[a][b] = binom[a - 1][b - 1].saturating_add(if b <= a - 1 {
                    binom[a - 1][b]
                } else {
                    0
                });
            }
        }
        Self { n, d, binom }
    }

    /// C(d + n - 1, n - 1)
    pub fn count(&self) -> u64 {
        if self.n == 0 {
            return 0;
        }
        self.binom[self.d + self.n - 1][self.n - 1]
    }

    pub fn rank(&self, c: &[u32]) -> u64 {
        let mut prefix = 0usize;
        let mut idx = 0u64;
        for (i, &x) in c.iter().take(self.n.saturating_sub(1)).enumerate() {
            prefix += x as usize;
            idx += self.binom[prefix + i][i + 1];
        }
        idx
    }

    pub fn unrank(&self, mut idx: u64) -> Vec<u32> {
        let n = self.n;
        let mut bars = vec![0usize; n.saturating_sub(1)];
        for i in (0..n.saturating_sub(1)).rev() {
            // largest p with C(p, i+1) <= idx
            let mut p = i;
            while p + 1 <= self.d + n - 1 && self.binom[p + 1][i + 1] <= idx {
                p += 1;
            }
            bars[i] = p;
            idx -= self.binom[p][i + 1];
        }
        let mut out = Vec::with_capacity(n);
        let mut last = 0usize;
        for (i, &p) in bars.iter().enumerate() {
            let s = p - i;
            out.push((s - last) as u32);
            last = s;
        }
        out.push((self.d - last) as u32);
        out
    }
}

/// The toppled digraph on all configurations, stored as CSR.
#[derive(Clone, Debug)]
pub struct ToppledDigraph {
    pub r: usize,
    pub n: usize,
    pub d: usize,
    pub order: VertexOrder,
    index: CompositionIndex,
    edges: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    arc_edges: Vec<u32>,
}

/// Number of configurations of the toppled digraph of `h`.
pub fn config_count(n: usize, r: usize) -> u128 {
    let d = chip_total(n, r) as u128;
    let k = (n as u128).saturating_sub(1);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (d + k - i) / (i + 1);
    }
    acc
}

pub fn build_toppled_digraph(
    h: &Hypergraph,
    order: &VertexOrder,
    cap: usize,
) -> Result<ToppledDigraph, TopplingError> {
    let n = h.n();
    let r = h.r();
    if order.len() != n {
        return Err(TopplingError::BadOrdering);
    }
    let size = config_count(n, r);
    if size > cap as u128 {
        return Err(TopplingError::CapExceeded { size, cap });
    }
    let d = chip_total(n, r);
    let index = CompositionIndex::new(n, d);
    let need = (r - 1) as u32;
    let rows: Vec<(u32, Vec<(u32, u32)>)> = (0..size as u64)
        .into_par_iter()
        .map(|i| {
            let cfg = Configuration(index.unrank(i));
            let k = classify(&cfg, r, order).expect("d chips force an unstable vertex");
            let arcs = h
                .incident_edges(k)
                .iter()
                .map(|&e| {
                    let next = fire(&cfg, h.edge(e), k, need);
                    (index.rank(&next.0) as u32, e as u32)
                })
                .collect();
            (k as u32, arcs)
        })
        .collect();
    let mut class_of = Vec::with_capacity(rows.len());
    let mut offsets = Vec::with_capacity(rows.len() + 1);
    let mut targets = Vec::new();
    let mut arc_edges = Vec::new();
    offsets.push(0);
    for (k, arcs) in rows {
        class_of.push(k);
        for (t, e) in arcs {
            targets.push(t);
            arc_edges.push(e);
        }
        offsets.push(targets.len());
    }
    Ok(ToppledDigraph {
        r,
        n,
        d,
        order: order.clone(),
        index,
        edges: h.edges().to_vec(),
        class_of,
        offsets,
        targets,
        arc_edges,
    })
}

impl ToppledDigraph {
    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    pub fn config(&self, i: usize) -> Configuration {
        Configuration(self.index.unrank(i as u64))
    }

    pub fn index_of(&self, cfg: &Configuration) -> Option<usize> {
        (cfg.0.len() == self.n && cfg.total() == self.d as u64)
            .then(|| self.index.rank(&cfg.0) as usize)
    }

    /// The designated vertex (class S_i) of configuration `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// (target, edge) for every arc out of `i`.
    pub fn arcs(&self, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (a, b) = (self.offsets[i], self.offsets[i + 1]);
        self.targets[a..b]
            .iter()
            .zip(&self.arc_edges[a..b])
            .map(|(&t, &e)| (t as usize, e as usize))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| self.arcs(i).map(|(t, _)| t).collect())
            .collect()
    }
}

/// Strong components, each sorted, ordered by least member.
#[derive(Clone, Debug)]
pub struct SccDecomposition {
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
}

impl SccDecomposition {
    pub fn of_adjacency(adj: &[Vec<usize>]) -> Self {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(adj.len(), 0);
        for _ in 0..adj.len() {
            g.add_node(());
        }
        for (u, outs) in adj.iter().enumerate() {
            for &v in outs {
                g.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
            }
        }
        let mut components: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        components.sort_unstable_by_key(|c| c[0]);
        let mut component_of = vec![0; adj.len()];
        for (k, c) in components.iter().enumerate() {
            for &v in c {
                component_of[v] = k;
            }
        }
        Self {
            components,
            component_of,
        }
    }

    pub fn of(d: &ToppledDigraph) -> Self {
        Self::of_adjacency(&d.adjacency())
    }

    /// Component sizes -> number of components of that size.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.components {
            *h.entry(c.len()).or_insert(0) += 1;
        }
        h
    }
}

fn is_nontrivial(adj: &[Vec<usize>], comp: &[usize]) -> bool {
    comp.len() > 1 || adj[comp[0]].contains(&comp[0])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusLimits {
    /// Cycles longer than this are not followed.
    pub max_len: usize,
    /// Stop after this many cycles in total.
    pub max_cycles: usize,
}

impl Default for CensusLimits {
    fn default() -> Self {
        Self {
            max_len: 64,
            max_cycles: 1_000_000,
        }
    }
}

/// Calls `visit(nodes)` on every simple cycle of `comp` (rooted at its least
/// node) within `limits`. Returns `false` if the enumeration was cut short.
pub fn for_each_cycle(
    adj: &[Vec<usize>],
    comp: &[usize],
    limits: CensusLimits,
    mut visit: impl FnMut(&[usize]),
) -> bool {
    let members: HashSet<usize> = comp.iter().copied().collect();
    let mut found = 0usize;
    let mut complete = true;
    let mut on_path: HashSet<usize> = HashSet::new();
    for &s in comp {
        let mut path = vec![s];
        on_path.clear();
        on_path.insert(s);
        // explicit DFS: stack of (node, next successor position)
        let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            if *pos >= adj[u].len() {
                stack.pop();
                path.pop();
                on_path.remove(&u);
                continue;
            }
            let w = adj[u][*pos];
            *pos += 1;
            if w == s {
                visit(&path);
                found += 1;
                if found >= limits.max_cycles {
                    return false;
                }
                continue;
            }
            if w < s || !members.contains(&w) || on_path.contains(&w) {
                continue;
            }
            if path.len() >= limits.max_len {
                complete = false;
                continue;
            }
            path.push(w);
            on_path.insert(w);
            stack.push((w, 0));
        }
    }
    complete
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    /// cycle length -> number of cycles
    pub lengths: BTreeMap<usize, u64>,
    /// cycles whose toppling sequence contains a hop (cyclically)
    pub cycles_with_hops: u64,
    /// cycles whose toppling sequence is j_e for a single edge e
    pub single_edge_cycles: u64,
    pub nontrivial_components: usize,
    /// true when a limit cut the enumeration short
    pub partial: bool,
}

impl CycleCensus {
    pub fn total(&self) -> u64 {
        self.lengths.values().sum()
    }
}

/// Multiset of cycle lengths over all nontrivial strong components.
pub fn cycle_census(
    d: &ToppledDigraph,
    scc: &SccDecomposition,
    limits: CensusLimits,
) -> CycleCensus {
    let adj = d.adjacency();
    let mut census = CycleCensus::default();
    let mut budget = limits.max_cycles;
    for comp in &scc.components {
        if !is_nontrivial(&adj, comp) {
            continue;
        }
        census.nontrivial_components += 1;
        if budget == 0 {
            census.partial = true;
            break;
        }
        let mut local = 0usize;
        let complete = for_each_cycle(
            &adj,
            comp,
            CensusLimits {
                max_len: limits.max_len,
                max_cycles: budget,
            },
            |cycle| {
                local += 1;
                *census.lengths.entry(cycle.len()).or_insert(0) += 1;
                let seq = toppling_sequence(d, cycle);
                if has_hop(d, &seq) {
                    census.cycles_with_hops += 1;
                }
                if is_single_edge_sequence(d, &seq) {
                    census.single_edge_cycles += 1;
                }
            },
        );
        budget = budget.saturating_sub(local);
        census.partial |= !complete;
    }
    census
}

/// The incidences (v, e) toppled along a cycle of configurations.
pub fn toppling_sequence(d: &ToppledDigraph, cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|k| {
            let (u, w) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            let e = d
                .arcs(u)
                .find(|&(t, _)| t == w)
                .map(|(_, e)| e)
                .expect("consecutive cycle nodes are adjacent");
            (d.class_of(u), e)
        })
        .collect()
}

// A hop: consecutive incidences (i, e), (j, f) with j outside e.
fn has_hop(d: &ToppledDigraph, seq: &[(usize, usize)]) -> bool {
    (0..seq.len()).any(|k| {
        let (_, e) = seq[k];
        let (j, _) = seq[(k + 1) % seq.len()];
        !d.edges[e].contains(&j)
    })
}

fn is_single_edge_sequence(d: &ToppledDigraph, seq: &[(usize, usize)]) -> bool {
    let Some(&(_, e)) = seq.first() else {
        return false;
    };
    let mut seen = HashSet::new();
    seq.len() == d.r && seq.iter().all(|&(v, f)| f == e && seen.insert(v))
}

/// Exact test that every cycle length in `comp` is a multiple of `r`: a
/// labelling by Z_r that increases by one along every arc exists.
pub fn cycle_lengths_divisible(adj: &[Vec<usize>], scc: &SccDecomposition, r: usize) -> bool {
    let mut label = vec![usize::MAX; adj.len()];
    for (k, comp) in scc.components.iter().enumerate() {
        let start = comp[0];
        label[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if scc.component_of[w] != k {
                    continue;
                }
                let want = (label[u] + 1) % r;
                if label[w] == usize::MAX {
                    label[w] = want;
                    queue.push_back(w);
                } else if label[w] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// `seq` is a parking function: sorted, its k-th entry (1-based) lies in 1..=k.
pub fn is_parking(seq: &[i64]) -> bool {
    let mut b = seq.to_vec();
    b.sort_unstable();
    b.iter()
        .enumerate()
        .all(|(i, &x)| 1 <= x && x <= i as i64 + 1)
}

/// Number of parking functions of length k, (k+1)^(k-1), by enumeration.
pub fn count_parking(k: usize) -> u64 {
    let mut cur = vec![1i64; k];
    let mut count = 0;
    loop {
        if is_parking(&cur) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            cur[i] += 1;
            if cur[i] <= k as i64 {
                break;
            }
            cur[i] = 1;
            i += 1;
        }
    }
}

fn complement_is_parking(cfg: &Configuration, slice: &[usize], r: usize) -> bool {
    let seq: Vec<i64> = slice
        .iter()
        .map(|&v| (r - 1) as i64 - cfg.0[v] as i64)
        .collect();
    is_parking(&seq)
}

/// Critical: ((r-1)1 - cfg) restricted to every edge minus its root is a
/// parking function of length r-1.
pub fn is_critical(t: &Hypertree, cfg: &Configuration) -> bool {
    let r = t.r();
    cfg.0.len() == t.n() && (0..t.m()).all(|e| complement_is_parking(cfg, &t.edge_hat(e), r))
}

// All slices gamma in [0, r-2]^(r-1) accepted by `keep`.
fn admissible_slices(r: usize, keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<u32>> {
    let len = r - 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    loop {
        let comp: Vec<i64> = cur.iter().map(|&g| (r - 1) as i64 - g as i64).collect();
        if keep(&comp) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            cur[i] += 1;
            if cur[i] as usize <= r - 2 {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

// Cartesian product of per-edge slices, root filled up to d chips.
fn assemble(
    n: usize,
    d: usize,
    root: usize,
    hats: &[Vec<usize>],
    choices: &[Vec<Vec<u32>>],
    cap: usize,
) -> Result<Vec<Configuration>, TopplingError> {
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > cap as u128 {
        return Err(TopplingError::CapExceeded { size: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut chips = vec![0u32; n];
        for (k, hat) in hats.iter().enumerate() {
            for (&v, &g) in hat.iter().zip(&choices[k][pick[k]]) {
                chips[v] = g;
            }
        }
        let rest: u32 = chips.iter().sum();
        chips[root] = d as u32 - rest;
        out.push(Configuration(chips));
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Every critical configuration of `t`; there are r^((r-2)m).
pub fn critical_configurations(
    t: &Hypertree,
    cap: usize,
) -> Result<Vec<Configuration>, TopplingError> {
    let r = t.r();
    let hats: Vec<Vec<usize>> = (0..t.m()).map(|e| t.edge_hat(e)).collect();
    let slice = admissible_slices(r, is_parking);
    let choices = vec![slice; t.m()];
    assemble(t.n(), chip_total(t.n(), r), t.root(), &hats, &choices, cap)
}

/// One directed r-cycle per edge, from the edge's root through the other
/// vertices in ascending label order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentativeDigraph {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl RepresentativeDigraph {
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |k| (c[k], c[(k + 1) % c.len()])))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.arcs() {
            adj[u].push(v);
        }
        adj
    }
}

pub fn representative_digraph(t: &Hypertree) -> RepresentativeDigraph {
    let cycles = (0..t.m())
        .map(|e| {
            let mut c = vec![t.edge_root(e)];
            c.extend(t.edge_hat(e));
            c
        })
        .collect();
    RepresentativeDigraph { n: t.n(), cycles }
}

/// The class map on a strong component and the directed cycle it induces on
/// each edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentWitness {
    /// (configuration index, vertex it maps to)
    pub bijection: Vec<(usize, usize)>,
    /// (edge, its cycle starting from the lowest-priority vertex)
    pub cycles: Vec<(usize, Vec<usize>)>,
    /// Why the component is not a representative digraph, if it is not.
    pub problem: Option<String>,
}

impl ComponentWitness {
    pub fn is_representative(&self) -> bool {
        self.problem.is_none()
    }
}

/// Checks that the strong component containing `node` is a representative
/// digraph of the subgraph with the given vertices and edges: the class map
/// is a bijection onto `vertices` and the arcs labelled by each edge of
/// `edges` form one directed cycle through that edge, with no other arcs.
pub fn component_witness(
    d: &ToppledDigraph,
    scc: &SccDecomposition,
    node: usize,
    vertices: &[usize],
    edges: &[usize],
) -> ComponentWitness {
    let k = scc.component_of[node];
    let comp = &scc.components[k];
    let mut witness = ComponentWitness {
        bijection: comp.iter().map(|&c| (c, d.class_of(c))).collect(),
        cycles: Vec::new(),
        problem: None,
    };
    let fail = |w: &mut ComponentWitness, msg: String| {
        if w.problem.is_none() {
            w.problem = Some(msg);
        }
    };
    let mut image: Vec<usize> = witness.bijection.iter().map(|&(_, v)| v).collect();
    image.sort_unstable();
    let mut want: Vec<usize> = vertices.to_vec();
    want.sort_unstable();
    if image != want {
        fail(
            &mut witness,
            format!("class map image {image:?} differs from {want:?}"),
        );
        return witness;
    }
    let mut by_edge: BTreeMap<usize, HashMap<usize, usize>> = BTreeMap::new();
    for &u in comp {
        for (w, e) in d.arcs(u) {
            if scc.component_of[w] != k {
                continue;
            }
            if by_edge
                .entry(e)
                .or_default()
                .insert(d.class_of(u), d.class_of(w))
                .is_some()
            {
                fail(
                    &mut witness,
                    format!("edge {e} leaves vertex {} twice", d.class_of(u)),
                );
            }
        }
    }
    let mut want_edges = edges.to_vec();
    want_edges.sort_unstable();
    let got_edges: Vec<usize> = by_edge.keys().copied().collect();
    if got_edges != want_edges {
        fail(
            &mut witness,
            format!("arcs use edges {got_edges:?}, expected {want_edges:?}"),
        );
        return witness;
    }
    for (&e, succ) in &by_edge {
        let verts = &d.edges[e];
        let start = *verts
            .iter()
            .min_by_key(|&&v| d.order.rank(v))
            .expect("edges are nonempty");
        let mut cycle = vec![start];
        let mut cur = start;
        loop {
            match succ.get(&cur) {
                Some(&next) if next == start => break,
                Some(&next) if !cycle.contains(&next) => {
                    cycle.push(next);
                    cur = next;
                }
                _ => {
                    fail(
                        &mut witness,
                        format!("arcs of edge {e} do not close into a cycle"),
                    );
                    break;
                }
            }
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        if sorted != *verts || succ.len() != verts.len() {
            fail(
                &mut witness,
                format!("cycle of edge {e} is {cycle:?}, not the whole edge"),
            );
        }
        witness.cycles.push((e, cycle));
    }
    witness
}

/// Lemma-level check of a critical configuration: its strong component is a
/// representative digraph of `t` and its characteristic polynomial is the
/// matching polynomial of `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalWitness {
    pub component: ComponentWitness,
    pub charpoly_is_matching: bool,
}

pub fn critical_scc_check(
    t: &Hypertree,
    d: &ToppledDigraph,
    scc: &SccDecomposition,
    cfg: &Configuration,
) -> Result<CriticalWitness, TopplingError> {
    if !is_critical(t, cfg) {
        return Err(TopplingError::NotCritical);
    }
    let node = d.index_of(cfg).ok_or(TopplingError::BadConfiguration {
        got: cfg.total(),
        want: d.d as u64,
        len: cfg.0.len(),
        n: d.n,
    })?;
    let vertices: Vec<usize> = (0..t.n()).collect();
    let edges: Vec<usize> = (0..t.m()).collect();
    let component = component_witness(d, scc, node, &vertices, &edges);
    let comp = &scc.components[scc.component_of[node]];
    let charpoly_is_matching = component.is_representative()
        && comp.len() <= DEFAULT_DENSE_CAP
        && charpoly_dense(&sub_adjacency(d, comp)) == matching_polynomial(t.graph());
    Ok(CriticalWitness {
        component,
        charpoly_is_matching,
    })
}

// Adjacency of the subdigraph induced by `comp`, as sparse unit rows.
fn sub_adjacency(d: &ToppledDigraph, comp: &[usize]) -> Vec<Vec<(usize, i64)>> {
    let pos: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    comp.iter()
        .map(|&u| {
            d.arcs(u)
                .filter_map(|(w, _)| pos.get(&w).map(|&j| (j, 1)))
                .collect()
        })
        .collect()
}

/// How an edge of the host constrains its slice in the subgraph census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SliceRule {
    /// edge of H: the complement slice is a parking function
    Parking,
    /// boundary edge: positive, but not a parking function
    NotParking,
    /// any other edge: each entry in 0..=r-2
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphCensus {
    /// least vertex of H, used as the new root
    pub root: usize,
    pub rules: Vec<SliceRule>,
    /// admissible slices per edge
    pub choices: Vec<usize>,
    pub count: BigUint,
}

fn census_setup(
    t: &Hypertree,
    h: &SubgraphHandle,
) -> Result<(Hypertree, Vec<SliceRule>), TopplingError> {
    let u = *h
        .vertices
        .iter()
        .min_by_key(|&&v| t.rank(v))
        .ok_or(TopplingError::BadOrdering)?;
    let tu = t.rerooted(u).map_err(|_| TopplingError::BadOrdering)?;
    let g = t.graph();
    let inside: HashSet<usize> = h.vertices.iter().copied().collect();
    let in_h: HashSet<usize> = h.edges.iter().copied().collect();
    let rules = (0..t.m())
        .map(|e| {
            if in_h.contains(&e) {
                SliceRule::Parking
            } else if g.edge(e).iter().any(|v| inside.contains(v)) {
                SliceRule::NotParking
            } else {
                SliceRule::Free
            }
        })
        .collect();
    Ok((tu, rules))
}

fn slices_for(r: usize, rule: SliceRule) -> Vec<Vec<u32>> {
    match rule {
        SliceRule::Parking => admissible_slices(r, is_parking),
        SliceRule::NotParking => admissible_slices(r, |s| !is_parking(s)),
        SliceRule::Free => admissible_slices(r, |_| true),
    }
}

/// Counts configurations rooted at the least vertex u of H whose slices obey
/// the census rules; the count equals a_H.
pub fn subgraph_config_census(
    t: &Hypertree,
    h: &SubgraphHandle,
) -> Result<SubgraphCensus, TopplingError> {
    let (tu, rules) = census_setup(t, h)?;
    let choices: Vec<usize> = rules
        .iter()
        .map(|&rule| slices_for(t.r(), rule).len())
        .collect();
    let count = choices.iter().map(|&c| BigUint::from(c)).product();
    Ok(SubgraphCensus {
        root: tu.root(),
        rules,
        choices,
        count,
    })
}

/// The configurations counted by [`subgraph_config_census`], together with
/// the hypertree re-rooted at u whose good ordering they live under.
pub fn subgraph_configurations(
    t: &Hypertree,
    h: &SubgraphHandle,
    cap: usize,
) -> Result<(Hypertree, Vec<Configuration>), TopplingError> {
    let (tu, rules) = census_setup(t, h)?;
    let r = t.r();
    let hats: Vec<Vec<usize>> = (0..t.m()).map(|e| tu.edge_hat(e)).collect();
    let choices: Vec<Vec<Vec<u32>>> = rules.iter().map(|&rule| slices_for(r, rule)).collect();
    let cfgs = assemble(t.n(), chip_total(t.n(), r), tu.root(), &hats, &choices, cap)?;
    Ok((tu, cfgs))
}

/// The generalized incidence matrix and the kernel statements about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceKernel {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub row_sums_zero: bool,
    pub col_sums_zero: bool,
    /// B j_e = 0 for every edge
    pub edge_vectors_in_kernel: bool,
    /// the j_e form a basis of ker B
    pub edge_vectors_span: bool,
}

/// n x (m r) matrix; column `e * r + k` is the incidence of the k-th vertex
/// of edge e, with r-1 on that vertex and -1 on the rest of the edge.
pub fn incidence_matrix(h: &Hypergraph) -> Vec<Vec<i64>> {
    let r = h.r();
    let mut b = vec![vec![0i64; h.m() * r]; h.n()];
    for (e, verts) in h.edges().iter().enumerate() {
        for (k, &v) in verts.iter().enumerate() {
            for &w in verts {
                b[w][e * r + k] = if w == v { (r - 1) as i64 } else { -1 };
            }
        }
    }
    b
}

pub fn incidence_matrix_kernel(h: &Hypergraph) -> IncidenceKernel {
    let b = incidence_matrix(h);
    let (rows, cols) = (h.n(), h.m() * h.r());
    let rk = rank(&b);
    let row_sums_zero = b.iter().all(|row| row.iter().sum::<i64>() == 0);
    let col_sums_zero = (0..cols).all(|j| b.iter().map(|row| row[j]).sum::<i64>() == 0);
    let edge_vectors_in_kernel = (0..h.m()).all(|e| {
        b.iter()
            .all(|row| (0..h.r()).map(|k| row[e * h.r() + k]).sum::<i64>() == 0)
    });
    let kernel_dim = cols - rk;
    IncidenceKernel {
        rows,
        cols,
        rank: rk,
        kernel_dim,
        row_sums_zero,
        col_sums_zero,
        edge_vectors_in_kernel,
        // disjoint supports make the j_e independent
        edge_vectors_span: edge_vectors_in_kernel && kernel_dim == h.m(),
    }
}

/// Characteristic polynomial of a digraph as a product over strong
/// components. A component whose cycles all have one length k >= 2 (with
/// distinct vertex sets) uses the cycle-cover count, sum_j (-1)^j c_j
/// l^(size - jk) with c_j the number of j disjoint cycles; any other
/// component is expanded densely.
pub fn digraph_charpoly(
    adj: &[Vec<usize>],
    dense_cap: usize,
    limits: CensusLimits,
) -> Result<FactoredPoly, TopplingError> {
    let scc = SccDecomposition::of_adjacency(adj);
    let mut factors: Vec<(IntPoly, u64)> = Vec::new();
    let mut trivial = 0u64;
    for comp in &scc.components {
        if !is_nontrivial(adj, comp) {
            trivial += 1;
            continue;
        }
        factors.push((component_charpoly(adj, comp, dense_cap, limits)?, 1));
    }
    if trivial > 0 {
        factors.push((IntPoly::x(), trivial));
    }
    Ok(
        FactoredPoly::from_factors(factors.into_iter().map(|(p, e)| (p, e.into())))
            .expect("characteristic polynomials are nonzero"),
    )
}

fn component_charpoly(
    adj: &[Vec<usize>],
    comp: &[usize],
    dense_cap: usize,
    limits: CensusLimits,
) -> Result<IntPoly, TopplingError> {
    let pos: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let complete = for_each_cycle(adj, comp, limits, |c| {
        let mut local: Vec<usize> = c.iter().map(|v| pos[v]).collect();
        local.sort_unstable();
        cycles.push(local);
    });
    if complete {
        let len = cycles[0].len();
        let mut sets = cycles.clone();
        sets.sort();
        sets.dedup();
        if len >= 2 && sets.len() == cycles.len() && cycles.iter().all(|c| c.len() == len) {
            if let Ok(g) = Hypergraph::new(len, comp.len(), cycles) {
                return Ok(matching_polynomial(&g));
            }
        }
    }
    if comp.len() > dense_cap {
        return Err(TopplingError::DenseCap {
            size: comp.len(),
            cap: dense_cap,
        });
    }
    let rows: Vec<Vec<(usize, i64)>> = comp
        .iter()
        .map(|&u| {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for w in &adj[u] {
                if let Some(&j) = pos.get(w) {
                    *row.entry(j).or_insert(0) += 1;
                }
            }
            row.into_iter().collect()
        })
        .collect();
    Ok(charpoly_dense(&rows))
}

/// Dense `det(l I - A)` of a small digraph.
pub fn digraph_charpoly_dense(adj: &[Vec<usize>]) -> IntPoly {
    let rows: Vec<Vec<(usize, i64)>> = adj
        .iter()
        .map(|outs| {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for &w in outs {
                *row.entry(w).or_insert(0) += 1;
            }
            row.into_iter().collect()
        })
        .collect();
    charpoly_dense(&rows)
}

/// Which vertex ordering a toppled digraph is built under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingSpec {
    /// the good ordering of the hypertree rooted at `root`
    Good { root: usize },
    /// explicit priority list, highest first
    Explicit(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToppleChecks {
    /// every cycle has length r and topples a single edge (good ordering only)
    pub single_edge_cycles: Option<bool>,
    /// every cycle length is a multiple of r
    pub lengths_divisible: bool,
    /// every critical component is a representative digraph whose
    /// characteristic polynomial is the matching polynomial (good ordering only)
    pub critical_representative: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToppleReport {
    pub config_count: usize,
    pub arc_count: usize,
    /// component size -> number of components
    pub scc_histogram: BTreeMap<usize, usize>,
    /// cycle length -> number of cycles
    pub cycle_length_census: BTreeMap<usize, u64>,
    pub cycles_with_hops: u64,
    pub census_partial: bool,
    pub critical_count: Option<usize>,
    pub checks: ToppleChecks,
}

/// Builds the toppled digraph under `spec` and runs the structural checks.
pub fn topple_report(
    h: &Hypergraph,
    spec: &OrderingSpec,
    digraph_cap: usize,
    limits: CensusLimits,
) -> Result<ToppleReport, TopplingError> {
    let (tree, order) = match spec {
        OrderingSpec::Good { root } => {
            let t = crate::hypergraph::good_ordering(h, *root)?;
            let order = VertexOrder::good(&t);
            (Some(t), order)
        }
        OrderingSpec::Explicit(p) => {
            if p.len() != h.n() {
                return Err(TopplingError::BadOrdering);
            }
            (None, VertexOrder::from_priority(p.clone())?)
        }
    };
    let d = build_toppled_digraph(h, &order, digraph_cap)?;
    let scc = SccDecomposition::of(&d);
    let census = cycle_census(&d, &scc, limits);
    let lengths_divisible = cycle_lengths_divisible(&d.adjacency(), &scc, h.r());
    let (mut single_edge_cycles, mut critical_representative, mut critical_count) =
        (None, None, None);
    if let Some(t) = &tree {
        single_edge_cycles = Some(
            !census.partial
                && census.lengths.keys().all(|&l| l == h.r())
                && census.single_edge_cycles == census.total(),
        );
        let critical = critical_configurations(t, digraph_cap)?;
        critical_count = Some(critical.len());
        let mut ok = true;
        for cfg in &critical {
            let w = critical_scc_check(t, &d, &scc, cfg)?;
            ok &= w.component.is_representative() && w.charpoly_is_matching;
        }
        critical_representative = Some(ok);
    }
    Ok(ToppleReport {
        config_count: d.len(),
        arc_count: d.arc_count(),
        scc_histogram: scc.histogram(),
        cycle_length_census: census.lengths,
        cycles_with_hops: census.cycles_with_hops,
        census_partial: census.partial,
        critical_count,
        checks: ToppleChecks {
            single_edge_cycles,
            lengths_divisible,
            critical_representative,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{connected_subgraphs, good_ordering};
    use crate::spectra::{exponent_a, ExponentParams};

    fn edge3() -> Hypertree {
        good_ordering(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap(), 0).unwrap()
    }

    fn path3() -> Hypertree {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        good_ordering(&h, 0).unwrap()
    }

    fn cfg(v: &[u32]) -> Configuration {
        Configuration(v.to_vec())
    }

    #[test]
    fn classify_examples() {
        let order = VertexOrder::from_priority(vec![2, 1, 0]).unwrap();
        assert_eq!(classify(&cfg(&[4, 0, 0]), 3, &order), Some(0));
        assert_eq!(classify(&cfg(&[2, 2, 0]), 3, &order), Some(1));
        assert_eq!(classify(&cfg(&[0, 2, 2]), 3, &order), Some(2));
    }

    #[test]
    fn topple_examples() {
        let t = edge3();
        let h = t.graph();
        let order = VertexOrder::good(&t);
        let a = topple(h, &order, &cfg(&[4, 0, 0]), 0, 0).unwrap();
        assert_eq!(a, cfg(&[2, 1, 1]));
        assert_eq!(topple(h, &order, &a, 0, 0).unwrap(), cfg(&[0, 2, 2]));
        assert!(matches!(
            topple(h, &order, &cfg(&[2, 1, 1]), 1, 0),
            Err(TopplingError::Stable { .. })
        ));
        assert!(matches!(
            topple(h, &order, &cfg(&[2, 2, 0]), 0, 0),
            Err(TopplingError::NotDesignated { designated: 1, .. })
        ));
    }

    #[test]
    fn ranking_round_trips() {
        for (n, d) in [(1, 3), (3, 4), (5, 6), (4, 0)] {
            let idx = CompositionIndex::new(n, d);
            let mut seen = HashSet::new();
            for i in 0..idx.count() {
                let c = idx.unrank(i);
                assert_eq!(c.iter().sum::<u32>() as usize, d);
                assert_eq!(idx.rank(&c), i);
                assert!(seen.insert(c));
            }
        }
        assert_eq!(CompositionIndex::new(3, 4).count(), 15);
    }

    #[test]
    fn digraph_sizes() {
        let t = edge3();
        let d = build_toppled_digraph(t.graph(), &VertexOrder::good(&t), 1000).unwrap();
        assert_eq!(d.len(), 15);
        for i in 0..d.len() {
            assert_eq!(d.arcs(i).count(), t.graph().degree(d.class_of(i)));
        }
        let p = path3();
        let d = build_toppled_digraph(p.graph(), &VertexOrder::good(&p), 1000).unwrap();
        assert_eq!(d.len(), 210);
        assert!(matches!(
            build_toppled_digraph(p.graph(), &VertexOrder::good(&p), 209),
            Err(TopplingError::CapExceeded { size: 210, .. })
        ));
        assert_eq!(config_count(9, 3), 43758);
    }

    #[test]
    fn cycles_under_good_orderings() {
        for t in [edge3(), path3()] {
            let d = build_toppled_digraph(t.graph(), &VertexOrder::good(&t), 1000).unwrap();
            let scc = SccDecomposition::of(&d);
            let census = cycle_census(&d, &scc, CensusLimits::default());
            assert!(!census.partial);
            assert_eq!(census.lengths.keys().copied().collect::<Vec<_>>(), vec![3]);
            assert_eq!(census.single_edge_cycles, census.total());
            assert_eq!(census.cycles_with_hops, 0);
            assert!(cycle_lengths_divisible(&d.adjacency(), &scc, 3));
        }
    }

    #[test]
    fn parking_examples() {
        assert!(is_parking(&[1, 1]));
        assert!(!is_parking(&[2, 2]));
        assert!(is_parking(&[1, 2, 2]));
        assert!(!is_parking(&[0, 1]));
        assert_eq!(count_parking(2), 3);
        assert_eq!(count_parking(3), 16);
        assert_eq!(count_parking(4), 125);
    }

    #[test]
    fn critical_counts() {
        let t = edge3();
        assert_eq!(critical_configurations(&t, 100).unwrap().len(), 3);
        assert!(!is_critical(&t, &cfg(&[4, 0, 0])));
        assert_eq!(critical_configurations(&path3(), 100).unwrap().len(), 9);
        for c in critical_configurations(&path3(), 100).unwrap() {
            assert!(is_critical(&path3(), &c));
        }
    }

    #[test]
    fn representative_digraphs() {
        let rep = representative_digraph(&edge3());
        assert_eq!(rep.arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        let rep = representative_digraph(&path3());
        assert_eq!(rep.cycles.len(), 2);
        assert_eq!(
            digraph_charpoly_dense(&rep.adjacency()).to_string(),
            "l^5 - 2*l^2"
        );
    }

    #[test]
    fn critical_components_are_representative() {
        for t in [edge3(), path3()] {
            let d = build_toppled_digraph(t.graph(), &VertexOrder::good(&t), 1000).unwrap();
            let scc = SccDecomposition::of(&d);
            let mut comps = HashSet::new();
            for c in critical_configurations(&t, 100).unwrap() {
                let w = critical_scc_check(&t, &d, &scc, &c).unwrap();
                assert!(w.component.is_representative(), "{:?}", w.component.problem);
                assert!(w.charpoly_is_matching);
                assert_eq!(w.component.bijection.len(), t.n());
                assert!(comps.insert(scc.component_of[d.index_of(&c).unwrap()]));
            }
        }
        let t = edge3();
        let d = build_toppled_digraph(t.graph(), &VertexOrder::good(&t), 1000).unwrap();
        let scc = SccDecomposition::of(&d);
        assert_eq!(
            critical_scc_check(&t, &d, &scc, &cfg(&[4, 0, 0])),
            Err(TopplingError::NotCritical)
        );
    }

    #[test]
    fn census_matches_exponents() {
        let t = path3();
        let params = ExponentParams::new(3, 2);
        for h in connected_subgraphs(t.graph(), 100).unwrap() {
            let census = subgraph_config_census(&t, &h).unwrap();
            assert_eq!(census.count, exponent_a(&params, &h).unwrap(), "{h:?}");
            let (tu, cfgs) = subgraph_configurations(&t, &h, 1000).unwrap();
            assert_eq!(BigUint::from(cfgs.len()), census.count);
            let d = build_toppled_digraph(tu.graph(), &VertexOrder::good(&tu), 1000).unwrap();
            let scc = SccDecomposition::of(&d);
            for c in &cfgs {
                let node = d.index_of(c).unwrap();
                let w = component_witness(&d, &scc, node, &h.vertices, &h.edges);
                assert!(w.is_representative(), "{h:?} {c:?} {:?}", w.problem);
            }
        }
        // one edge of the path: 3 = b^0 c (b-c); an end vertex: 4 = b (b-c)
        let e = SubgraphHandle::from_edges(t.graph(), vec![0]).unwrap();
        assert_eq!(
            subgraph_config_census(&t, &e).unwrap().count,
            BigUint::from(3u32)
        );
        let v = SubgraphHandle::single_vertex(t.graph(), 0);
        assert_eq!(
            subgraph_config_census(&t, &v).unwrap().count,
            BigUint::from(4u32)
        );
    }

    #[test]
    fn incidence_kernels() {
        let k = incidence_matrix_kernel(edge3().graph());
        assert_eq!((k.rank, k.kernel_dim), (2, 1));
        assert!(k.row_sums_zero && k.col_sums_zero && k.edge_vectors_span);
        let k = incidence_matrix_kernel(path3().graph());
        assert_eq!((k.rank, k.kernel_dim), (4, 2));
        assert!(k.edge_vectors_span);
    }

    #[test]
    fn digraph_charpoly_paths() {
        let c3 = vec![vec![1], vec![2], vec![0]];
        let lim = CensusLimits::default();
        assert_eq!(
            digraph_charpoly(&c3, 10, lim).unwrap().to_string(),
            "(l^3 - 1)"
        );
        let dag = vec![vec![1, 2], vec![2], vec![]];
        assert_eq!(digraph_charpoly(&dag, 10, lim).unwrap().to_string(), "l^3");
        // both orientations of a triangle: cycles share a vertex set, dense path
        let both = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        assert_eq!(
            digraph_charpoly(&both, 10, lim)
                .unwrap()
                .expand(&BigUint::from(10u32))
                .unwrap(),
            digraph_charpoly_dense(&both)
        );
        let rep = representative_digraph(&path3());
        assert_eq!(
            digraph_charpoly(&rep.adjacency(), 10, lim)
                .unwrap()
                .to_string(),
            "(l^5 - 2*l^2)"
        );
    }

    #[test]
    fn reports() {
        let p = path3();
        let rep = topple_report(
            p.graph(),
            &OrderingSpec::Good { root: 0 },
            1000,
            CensusLimits::default(),
        )
        .unwrap();
        assert_eq!(rep.config_count, 210);
        assert_eq!(rep.critical_count, Some(9));
        assert_eq!(
            rep.checks,
            ToppleChecks {
                single_edge_cycles: Some(true),
                lengths_divisible: true,
                critical_representative: Some(true)
            }
        );
        let rep = topple_report(
            p.graph(),
            &OrderingSpec::Explicit(vec![2, 0, 1, 3, 4]),
            1000,
            CensusLimits::default(),
        )
        .unwrap();
        assert!(rep.checks.lengths_divisible);
        assert_eq!(rep.checks.critical_representative, None);
        assert!(topple_report(
            p.graph(),
            &OrderingSpec::Explicit(vec![0, 1]),
            1000,
            CensusLimits::default()
        )
        .is_err());
    }

    #[test]
    fn full_digraph_is_divisible_by_theorem() {
        let t = path3();
        let d = build_toppled_digraph(t.graph(), &VertexOrder::good(&t), 1000).unwrap();
        let full =
            digraph_charpoly(&d.adjacency(), DEFAULT_DENSE_CAP, CensusLimits::default()).unwrap();
        let theorem = crate::spectra::charpoly_hypertree(&t, 100)
            .unwrap()
            .factored;
        assert!(theorem.divides(&full));
        assert_eq!(full.degree(), BigUint::from(210u32));
    }
}
