//! Uniform hypergraphs, hypertree validation, good orderings and connected
//! subgraph enumeration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Default ceiling on the number of subgraph handles produced by
/// [`connected_subgraphs`].
pub const DEFAULT_SUBGRAPH_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("edge {index} has {found} distinct vertices, expected {expected}")]
    WrongEdgeSize {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("edge {index} uses vertex {vertex} outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("label list has {labels} entries for {n} vertices")]
    LabelCount { labels: usize, n: usize },
    #[error("not a hypertree: {0}")]
    NotHypertree(String),
    #[error("vertex {0} is not in the hypergraph")]
    UnknownVertex(usize),
    #[error("invalid subgraph handle: {0}")]
    InvalidHandle(String),
    #[error("subgraph enumeration exceeded the cap of {cap} handles")]
    CapExceeded { cap: usize },
}

/// An r-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored sorted and are unique. Every vertex carries a display
/// label (the identifier used in input files).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Vec<String>,
    incident: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph with labels `"0"..` matching the vertex ids.
    pub fn new(r: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::with_labels(r, n, edges, labels)
    }

    pub fn with_labels(
        r: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::BadUniformity(r));
        }
        if labels.len() != n {
            return Err(HypergraphError::LabelCount {
                labels: labels.len(),
                n,
            });
        }
        let mut seen = BTreeSet::new();
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.len() != r {
                return Err(HypergraphError::WrongEdgeSize {
                    index,
                    found: e.len(),
                    expected: r,
                });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
            }
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::DuplicateEdge { index });
            }
            sorted_edges.push(e);
        }
        let mut incident = vec![Vec::new(); n];
        for (i, e) in sorted_edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        Ok(Self {
            r,
            n,
            edges: sorted_edges,
            labels,
            incident,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Vertex id carrying `label`, if any.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edges containing `v` (the set E_v), ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &e in &self.incident[v] {
                    for &w in &self.edges[e] {
                        if comp[w] == usize::MAX {
                            comp[w] = id;
                            members.push(w);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// The vertex-edge incidence graph has no cycle.
    pub fn is_berge_acyclic(&self) -> bool {
        // A graph is a forest iff |E| = |V| - #components.
        let vertices = self.n + self.m();
        let arcs = self.m() * self.r;
        arcs + self.components().len() == vertices
    }

    /// Disjoint union, with vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph, HypergraphError> {
        if self.r != other.r {
            return Err(HypergraphError::BadUniformity(other.r));
        }
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + shift).collect::<Vec<_>>()),
        );
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Hypergraph::with_labels(self.r, self.n + other.n, edges, labels)
    }

    /// Sub-hypergraph spanned by the edges in `edge_ids`, vertices renumbered
    /// in ascending order of their ids here. Returns the new graph and the
    /// original id of each new vertex.
    pub fn edge_induced(&self, edge_ids: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut verts: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| self.edges[e].iter().copied())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        self.restrict(&verts, edge_ids)
    }

    fn restrict(&self, verts: &[usize], edge_ids: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = edge_ids
            .iter()
            .map(|&e| self.edges[e].iter().map(|&v| index[v]).collect())
            .collect();
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let h = Hypergraph::with_labels(self.r, verts.len(), edges, labels)
            .expect("restriction of a valid hypergraph");
        (h, verts.to_vec())
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.r, self.n, self.m())?;
        for e in &self.edges {
            let row: Vec<&str> = e.iter().map(|&v| self.labels[v].as_str()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Edge list that has not been checked for uniformity; what a file parses into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawHypergraph {
    pub r: usize,
    pub labels: Vec<String>,
    pub edges: Vec<Vec<usize>>,
}

impl RawHypergraph {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph, HypergraphError> {
        let n = self.labels.len();
        Hypergraph::with_labels(self.r, n, self.edges, self.labels)
    }
}

/// Structural findings about an edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub r: usize,
    pub n: usize,
    pub m: usize,
    pub uniform: bool,
    pub duplicate_free: bool,
    pub connected: bool,
    pub linear: bool,
    pub berge_acyclic: bool,
    pub hypertree: bool,
    pub order_size_identity: bool,
    pub findings: Vec<String>,
}

impl Validation {
    /// A usable r-uniform hypergraph (possibly not a hypertree).
    pub fn is_valid_hypergraph(&self) -> bool {
        self.uniform && self.duplicate_free
    }
}

/// Reports uniformity, connectedness, linearity and Berge-acyclicity.
pub fn validate(raw: &RawHypergraph) -> Validation {
    let n = raw.n();
    let m = raw.edges.len();
    let mut findings = Vec::new();
    let mut uniform = raw.r >= 2;
    if raw.r < 2 {
        findings.push(format!("uniformity {} is below 2", raw.r));
    }
    for (i, e) in raw.edges.iter().enumerate() {
        let distinct: BTreeSet<_> = e.iter().collect();
        if distinct.len() != raw.r || e.len() != raw.r {
            uniform = false;
            findings.push(format!(
                "edge {} has {} entries ({} distinct), expected {}",
                i + 1,
                e.len(),
                distinct.len(),
                raw.r
            ));
        }
        if let Some(v) = e.iter().find(|&&v| v >= n) {
            uniform = false;
            findings.push(format!("edge {} references unknown vertex {v}", i + 1));
        }
    }
    let mut seen = BTreeSet::new();
    let mut duplicate_free = true;
    for (i, e) in raw.edges.iter().enumerate() {
        let mut s = e.clone();
        s.sort_unstable();
        if !seen.insert(s) {
            duplicate_free = false;
            findings.push(format!("edge {} repeats an earlier edge", i + 1));
        }
    }

    let mut linear = true;
    for i in 0..m {
        for j in i + 1..m {
            let shared = raw.edges[i]
                .iter()
                .filter(|v| raw.edges[j].contains(v))
                .collect::<BTreeSet<_>>()
                .len();
            if shared > 1 {
                linear = false;
                findings.push(format!(
                    "edges {} and {} share {shared} vertices",
                    i + 1,
                    j + 1
                ));
            }
        }
    }

    // Union-find over the bipartite incidence graph: vertices 0..n, edges n..n+m.
    let mut parent: Vec<usize> = (0..n + m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut cycle = false;
    for (i, e) in raw.edges.iter().enumerate() {
        let distinct: BTreeSet<_> = e.iter().copied().filter(|&v| v < n).collect();
        for v in distinct {
            let (a, b) = (find(&mut parent, v), find(&mut parent, n + i));
            if a == b {
                cycle = true;
            } else {
                parent[a] = b;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let connected = n > 0 && roots.len() == 1;
    if !connected {
        findings.push(format!("{} connected components", roots.len()));
    }
    let berge_acyclic = !cycle;
    if cycle {
        findings.push("incidence graph contains a cycle (Berge cycle)".to_string());
    }
    let hypertree = uniform && duplicate_free && connected && berge_acyclic;
    let order_size_identity = m * raw.r.saturating_sub(1) + 1 == n;
    if hypertree && !order_size_identity {
        findings.push("order/size identity m(r-1) = n-1 fails".to_string());
    }
    Validation {
        r: raw.r,
        n,
        m,
        uniform,
        duplicate_free,
        connected,
        linear,
        berge_acyclic,
        hypertree,
        order_size_identity,
        findings,
    }
}

/// A hypertree together with a root and a good ordering of its vertices.
#[derive(Clone, Debug)]
pub struct Hypertree {
    base: Hypergraph,
    root: usize,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
    edge_roots: Vec<usize>,
    levels: Vec<usize>,
}

impl Hypertree {
    /// Validates `h` and builds the good ordering rooted at its vertex 0.
    pub fn new(h: Hypergraph) -> Result<Self, HypergraphError> {
        good_ordering(&h, 0)
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.base
    }

    pub fn r(&self) -> usize {
        self.base.r
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Good-ordering label of each vertex (root is 0).
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// Vertex carrying each label.
    pub fn vertex_at(&self, label: usize) -> usize {
        self.by_rank[label]
    }

    /// Vertex of `e` closest to the root.
    pub fn edge_root(&self, e: usize) -> usize {
        self.edge_roots[e]
    }

    /// Distance from the root to the root of `e`.
    pub fn level(&self, e: usize) -> usize {
        self.levels[e]
    }

    /// The edge without its root, ordered by ascending label.
    pub fn edge_hat(&self, e: usize) -> Vec<usize> {
        let root = self.edge_roots[e];
        let mut rest: Vec<usize> = self.base.edges[e]
            .iter()
            .copied()
            .filter(|&v| v != root)
            .collect();
        rest.sort_by_key(|&v| self.rank[v]);
        rest
    }

    /// The same tree re-rooted at `root`.
    pub fn rerooted(&self, root: usize) -> Result<Hypertree, HypergraphError> {
        good_ordering(&self.base, root)
    }
}

/// Relabels the vertices of hypertree `h` by a good ordering rooted at `root`.
///
/// Vertices are labeled in breadth-first order; when a vertex is dequeued its
/// unvisited edges (ascending id) are processed in turn and each edge's
/// non-root vertices receive consecutive labels in ascending id order.
pub fn good_ordering(h: &Hypergraph, root: usize) -> Result<Hypertree, HypergraphError> {
    if root >= h.n {
        return Err(HypergraphError::UnknownVertex(root));
    }
    let v = validate(&RawHypergraph {
        r: h.r,
        labels: h.labels.clone(),
        edges: h.edges.clone(),
    });
    if !v.hypertree {
        return Err(HypergraphError::NotHypertree(v.findings.join("; ")));
    }
    let mut rank = vec![usize::MAX; h.n];
    let mut by_rank = Vec::with_capacity(h.n);
    let mut edge_roots = vec![usize::MAX; h.m()];
    let mut levels = vec![0; h.m()];
    let mut dist = vec![0usize; h.n];
    rank[root] = 0;
    by_rank.push(root);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &e in &h.incident[u] {
            if edge_roots[e] != usize::MAX {
                continue;
            }
            edge_roots[e] = u;
            levels[e] = dist[u];
            for &w in &h.edges[e] {
                if w == u {
                    continue;
                }
                debug_assert_eq!(rank[w], usize::MAX, "hypertrees reach each vertex once");
                rank[w] = by_rank.len();
                by_rank.push(w);
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(Hypertree {
        base: h.clone(),
        root,
        rank,
        by_rank,
        edge_roots,
        levels,
    })
}

/// Set of edge ids packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn with_capacity(m: usize) -> Self {
        Self {
            words: vec![0; m.div_ceil(64)],
        }
    }

    pub fn from_ids(m: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::with_capacity(m);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn full(m: usize) -> Self {
        Self::from_ids(m, 0..m)
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter().chain(std::iter::repeat(&0)))
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A connected subgraph of a host hypergraph: either one vertex with no
/// edges, or the subgraph spanned by a connected edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphHandle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub boundary_size: usize,
}

impl SubgraphHandle {
    /// |H|
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// e(H)
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn single_vertex(h: &Hypergraph, v: usize) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
            boundary_size: h.degree(v),
        }
    }

    /// Handle for the subgraph spanned by `edges` (which must be connected).
    pub fn from_edges(h: &Hypergraph, edges: Vec<usize>) -> Result<Self, HypergraphError> {
        if edges.is_empty() {
            return Err(HypergraphError::InvalidHandle("empty edge set".into()));
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        if let Some(&e) = edges.iter().find(|&&e| e >= h.m()) {
            return Err(HypergraphError::InvalidHandle(format!("unknown edge {e}")));
        }
        let (sub, _) = h.edge_induced(&edges);
        if !sub.is_connected() {
            return Err(HypergraphError::InvalidHandle(
                "edge set is not connected".into(),
            ));
        }
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&e| h.edges[e].clone()).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut handle = Self {
            vertices,
            edges,
            boundary_size: 0,
        };
        handle.boundary_size = boundary_edges(h, &handle.vertices).len();
        Ok(handle)
    }

    pub fn is_whole(&self, h: &Hypergraph) -> bool {
        self.vertices.len() == h.n() && self.edges.len() == h.m()
    }

    pub fn label(&self, h: &Hypergraph) -> String {
        if self.edges.is_empty() {
            format!("{{{}}}", h.label(self.vertices[0]))
        } else {
            let names: Vec<String> = self.edges.iter().map(|e| format!("e{}", e + 1)).collect();
            format!("{{{}}}", names.join(", "))
        }
    }
}

fn boundary_edges(h: &Hypergraph, vertices: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; h.n];
    for &v in vertices {
        inside[v] = true;
    }
    (0..h.m())
        .filter(|&e| {
            let k = h.edges[e].iter().filter(|&&v| inside[v]).count();
            k > 0 && k < h.r
        })
        .collect()
}

/// Edges meeting both V(H) and its complement.
pub fn boundary(h: &Hypergraph, sub: &SubgraphHandle) -> Result<Vec<usize>, HypergraphError> {
    if sub.vertices.is_empty() {
        return Err(HypergraphError::InvalidHandle("no vertices".into()));
    }
    if let Some(&v) = sub.vertices.iter().find(|&&v| v >= h.n) {
        return Err(HypergraphError::InvalidHandle(format!(
            "unknown vertex {v}"
        )));
    }
    if let Some(&e) = sub.edges.iter().find(|&&e| e >= h.m()) {
        return Err(HypergraphError::InvalidHandle(format!("unknown edge {e}")));
    }
    if sub.edges.is_empty() && sub.vertices.len() != 1 {
        return Err(HypergraphError::InvalidHandle(
            "edgeless handle must be a single vertex".into(),
        ));
    }
    Ok(boundary_edges(h, &sub.vertices))
}

/// Calls `visit` on every connected subgraph: first each single vertex, then
/// every connected edge set exactly once, grown from its least edge id.
///
/// Stops with [`HypergraphError::CapExceeded`] once more than `cap` handles
/// would be produced.
pub fn for_each_connected_subgraph(
    h: &Hypergraph,
    cap: usize,
    mut visit: impl FnMut(SubgraphHandle),
) -> Result<usize, HypergraphError> {
    let mut count = 0usize;
    for v in 0..h.n {
        count += 1;
        if count > cap {
            return Err(HypergraphError::CapExceeded { cap });
        }
        visit(SubgraphHandle::single_vertex(h, v));
    }
    let m = h.m();
    // Edge adjacency (line graph).
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            let mut nb: Vec<usize> = h.edges[e]
                .iter()
                .flat_map(|&v| h.incident[v].iter().copied())
                .filter(|&f| f != e)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();

    let mut walker = Grower {
        h,
        adj: &adj,
        cap,
        count: &mut count,
        in_sub: vec![false; m],
        in_nbhd: vec![0u32; m],
        vertex_mult: vec![0u32; h.n],
        boundary: 0,
        members: Vec::new(),
    };
    for anchor in 0..m {
        walker.push(anchor);
        let ext: Vec<usize> = adj[anchor]
            .iter()
            .copied()
            .filter(|&f| f > anchor)
            .collect();
        walker.extend(anchor, ext, &mut visit)?;
        walker.pop(anchor);
    }
    Ok(count)
}

struct Grower<'a> {
    h: &'a Hypergraph,
    adj: &'a [Vec<usize>],
    cap: usize,
    count: &'a mut usize,
    in_sub: Vec<bool>,
    // Number of members adjacent to (or equal to) each edge.
    in_nbhd: Vec<u32>,
    // Number of member edges containing each vertex.
    vertex_mult: Vec<u32>,
    // Count of edges meeting V(H) that are not fully inside it.
    boundary: usize,
    members: Vec<usize>,
}

impl Grower<'_> {
    fn push(&mut self, e: usize) {
        self.in_sub[e] = true;
        self.in_nbhd[e] += 1;
        for &f in &self.adj[e] {
            self.in_nbhd[f] += 1;
        }
        for &v in &self.h.edges[e] {
            self.vertex_mult[v] += 1;
        }
        self.members.push(e);
    }

    fn pop(&mut self, e: usize) {
        self.in_sub[e] = false;
        self.in_nbhd[e] -= 1;
        for &f in &self.adj[e] {
            self.in_nbhd[f] -= 1;
        }
        for &v in &self.h.edges[e] {
            self.vertex_mult[v] -= 1;
        }
        self.members.pop();
    }

    fn emit(&mut self, visit: &mut impl FnMut(SubgraphHandle)) -> Result<(), HypergraphError> {
        *self.count += 1;
        if *self.count > self.cap {
            return Err(HypergraphError::CapExceeded { cap: self.cap });
        }
        let mut edges = self.members.clone();
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&e| self.h.edges[e].iter().copied())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        // Boundary edges: outside the set but touching one of its vertices.
        let mut boundary = 0;
        for (f, &k) in self.in_nbhd.iter().enumerate() {
            if k > 0 && !self.in_sub[f] && self.h.edges[f].iter().any(|&v| self.vertex_mult[v] == 0)
            {
                boundary += 1;
            }
        }
        self.boundary = boundary;
        visit(SubgraphHandle {
            vertices,
            edges,
            boundary_size: boundary,
        });
        Ok(())
    }

    // ESU-style extension: `ext` holds candidate edges; each is tried once and
    // then excluded, and new candidates must be exclusive neighbours of the
    // edge just added so no set is generated twice.
    fn extend(
        &mut self,
        anchor: usize,
        mut ext: Vec<usize>,
        visit: &mut impl FnMut(SubgraphHandle),
    ) -> Result<(), HypergraphError> {
        self.emit(visit)?;
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.adj[w] {
                if u > anchor && self.in_nbhd[u] == 0 && !next.contains(&u) {
                    next.push(u);
                }
            }
            self.push(w);
            self.extend(anchor, next, visit)?;
            self.pop(w);
        }
        Ok(())
    }
}

/// Every connected subgraph of `h` in canonical order (see
/// [`for_each_connected_subgraph`]).
pub fn connected_subgraphs(
    h: &Hypergraph,
    cap: usize,
) -> Result<Vec<SubgraphHandle>, HypergraphError> {
    let mut out = Vec::new();
    for_each_connected_subgraph(h, cap, |s| out.push(s))?;
    Ok(out)
}

/// A connected piece of a vertex-deleted hypergraph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Hypergraph,
    /// Original vertex id of each component vertex.
    pub vertices: Vec<usize>,
}

/// The subgraph induced on `V \ removed` together with its components.
pub fn delete_vertices(
    h: &Hypergraph,
    removed: &[usize],
) -> Result<(Hypergraph, Vec<Component>), HypergraphError> {
    let mut gone = vec![false; h.n];
    for &v in removed {
        if v >= h.n {
            return Err(HypergraphError::UnknownVertex(v));
        }
        gone[v] = true;
    }
    let keep: Vec<usize> = (0..h.n).filter(|&v| !gone[v]).collect();
    let kept_edges: Vec<usize> = (0..h.m())
        .filter(|&e| h.edges[e].iter().all(|&v| !gone[v]))
        .collect();
    let (induced, originals) = h.restrict(&keep, &kept_edges);
    let components = induced
        .components()
        .into_iter()
        .map(|verts| {
            let edge_ids: Vec<usize> = (0..induced.m())
                .filter(|&e| verts.binary_search(&induced.edges[e][0]).is_ok())
                .collect();
            let (graph, local) = induced.restrict(&verts, &edge_ids);
            Component {
                graph,
                vertices: local.iter().map(|&v| originals[v]).collect(),
            }
        })
        .collect();
    Ok((induced, components))
}

/// An r-uniform hypertree with `m` edges grown one edge at a time: each new
/// edge hangs r-1 fresh vertices off an existing vertex. `pick(k)` must
/// return an index below `k`; feeding it from a seeded RNG gives a random
/// tree, feeding it a constant gives a star or a path.
pub fn grow_hypertree(r: usize, m: usize, mut pick: impl FnMut(usize) -> usize) -> Hypergraph {
    let n = m * (r - 1) + 1;
    let edges = (0..m)
        .map(|i| {
            let used = i * (r - 1) + 1;
            let anchor = pick(used).min(used - 1);
            let mut e = vec![anchor];
            e.extend(used..used + r - 1);
            e
        })
        .collect();
    Hypergraph::new(r, n, edges).expect("grown edges are fresh and uniform")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grown_trees_are_hypertrees() {
        let mut state = 7usize;
        for r in 2..6 {
            for m in 0..8 {
                let h = grow_hypertree(r, m, |k| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    (state >> 33) % k
                });
                assert!(h.is_connected() && h.is_berge_acyclic(), "r={r} m={m}");
                assert_eq!(h.n(), m * (r - 1) + 1);
            }
        }
        let star = grow_hypertree(3, 4, |_| 0);
        assert_eq!(star.max_degree(), 4);
        let path = grow_hypertree(3, 4, |k| k - 1);
        assert_eq!(path.max_degree(), 2);
    }

    pub(crate) fn five_edge() -> Hypergraph {
        // Labels 1..11, ids 0..10.
        let labels = (1..=11).map(|v| v.to_string()).collect();
        let e = |a: usize, b: usize, c: usize| vec![a - 1, b - 1, c - 1];
        Hypergraph::with_labels(
            3,
            11,
            vec![e(1, 4, 7), e(1, 2, 3), e(4, 5, 6), e(7, 8, 9), e(7, 10, 11)],
            labels,
        )
        .unwrap()
    }

    fn raw(h: &Hypergraph) -> RawHypergraph {
        RawHypergraph {
            r: h.r(),
            labels: h.labels().to_vec(),
            edges: h.edges().to_vec(),
        }
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1]]),
            Err(HypergraphError::WrongEdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(HypergraphError::DuplicateEdge { index: 1 })
        ));
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 5]]),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn validate_single_edge_and_non_linear_pair() {
        let one = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(validate(&raw(&one)).hypertree);

        let two = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let v = validate(&raw(&two));
        assert!(!v.linear);
        assert!(!v.hypertree);
        assert!(v.connected);
    }

    #[test]
    fn validate_five_edge() {
        let v = validate(&raw(&five_edge()));
        assert!(v.hypertree && v.order_size_identity);
        assert_eq!((v.n - 1) / (v.r - 1), 5);
    }

    #[test]
    fn validate_flags_non_uniform() {
        let v = validate(&RawHypergraph {
            r: 3,
            labels: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![vec![0, 1]],
        });
        assert!(!v.uniform && !v.hypertree);
        assert!(!v.findings.is_empty());
    }

    #[test]
    fn good_ordering_single_edge() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let t = good_ordering(&h, 0).unwrap();
        assert_eq!(t.ranks(), &[0, 1, 2]);
        let t = good_ordering(&h, 1).unwrap();
        assert_eq!(t.rank(1), 0);
        assert_eq!((t.rank(0), t.rank(2)), (1, 2));
    }

    #[test]
    fn good_ordering_two_edge_path() {
        // {a,b,c},{c,d,e} rooted at a.
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let t = good_ordering(&h, 0).unwrap();
        assert_eq!(t.ranks(), &[0, 1, 2, 3, 4]);
        assert_eq!(t.edge_root(1), 2);
        assert_eq!(t.level(1), 1);
    }

    #[test]
    fn good_ordering_five_edge_from_seven() {
        let h = five_edge();
        let seven = h.vertex_by_label("7").unwrap();
        let t = good_ordering(&h, seven).unwrap();
        assert_eq!(t.edge_root(0), seven);
        assert_eq!(t.edge_root(3), seven);
        assert_eq!(t.edge_root(4), seven);
        assert_eq!(t.edge_root(1), h.vertex_by_label("1").unwrap());
        assert_eq!(t.edge_root(2), h.vertex_by_label("4").unwrap());
        check_good(&t);
    }

    fn check_good(t: &Hypertree) {
        let h = t.graph();
        for e in 0..h.m() {
            let root = t.edge_root(e);
            let hat = t.edge_hat(e);
            let labels: Vec<usize> = hat.iter().map(|&v| t.rank(v)).collect();
            assert!(labels.iter().all(|&l| l > t.rank(root)));
            for w in labels.windows(2) {
                assert_eq!(w[1], w[0] + 1);
            }
        }
    }

    #[test]
    fn good_ordering_rejects_non_tree() {
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(matches!(
            good_ordering(&h, 0),
            Err(HypergraphError::NotHypertree(_))
        ));
    }

    #[test]
    fn boundary_examples() {
        let h = five_edge();
        let whole = SubgraphHandle::from_edges(&h, (0..5).collect()).unwrap();
        assert!(boundary(&h, &whole).unwrap().is_empty());
        let seven = h.vertex_by_label("7").unwrap();
        let single = SubgraphHandle::single_vertex(&h, seven);
        assert_eq!(boundary(&h, &single).unwrap(), h.incident_edges(seven));
        let e45 = SubgraphHandle::from_edges(&h, vec![3, 4]).unwrap();
        assert_eq!(boundary(&h, &e45).unwrap(), vec![0]);
        assert_eq!(e45.boundary_size, 1);
    }

    #[test]
    fn enumeration_counts() {
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(connected_subgraphs(&single, 100).unwrap().len(), 4);
        let path = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(connected_subgraphs(&path, 100).unwrap().len(), 8);
        let subs = connected_subgraphs(&five_edge(), 100).unwrap();
        assert_eq!(subs.len(), 32);
        for s in &subs {
            assert_eq!(boundary(&five_edge(), s).unwrap().len(), s.boundary_size);
        }
    }

    #[test]
    fn enumeration_cap_is_an_error() {
        assert_eq!(
            connected_subgraphs(&five_edge(), 31),
            Err(HypergraphError::CapExceeded { cap: 31 })
        );
    }

    #[test]
    fn delete_vertices_examples() {
        let h = five_edge();
        let seven = h.vertex_by_label("7").unwrap();
        let (rest, comps) = delete_vertices(&h, &[seven]).unwrap();
        assert_eq!(rest.n(), 10);
        assert_eq!(comps.len(), 6);
        assert_eq!(comps.iter().filter(|c| c.graph.m() == 0).count(), 4);
        assert_eq!(comps.iter().filter(|c| c.graph.m() == 1).count(), 2);

        let (same, comps) = delete_vertices(&h, &[]).unwrap();
        assert_eq!(same, h);
        assert_eq!(comps.len(), 1);

        let single = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let (rest, comps) = delete_vertices(&single, &[2]).unwrap();
        assert_eq!(rest.m(), 0);
        assert_eq!(comps.len(), 3);
    }
}
