//! Token addition/removal (TAR, k-TAR) and token jumping (TJ) reconfiguration
//! graphs, their metrics, and the connectivity thresholds `x₀` / `under-x₀`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso;
use crate::properties::{self, satisfies, PropertyKind};
use crate::set::VertexSet;
use crate::sparse::{self, Adjacency, SparseGraph, UNREACHABLE};

/// Default cap on the number of vertices of a reconfiguration graph.
pub const DEFAULT_CAP: usize = 1 << 22;

/// Largest order at which the direct `2^n` subset scan is attempted.
pub const DIRECT_SCAN_LIMIT: usize = 24;

/// Diameters are exact up to this order and sampled beyond it.
pub const EXACT_DIAMETER_LIMIT: usize = 1 << 14;

/// Limits for the hypercube search oracle.
pub const HYPERCUBE_SEARCH_MAX_DIM: usize = 4;
pub const HYPERCUBE_SEARCH_MAX_ORDER: usize = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReconLimits {
    /// Maximum number of reconfiguration-graph vertices.
    pub cap: usize,
}

impl Default for ReconLimits {
    fn default() -> Self {
        ReconLimits { cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReconModel {
    /// All X-sets, adjacent when `|S ⊖ S'| = 1`.
    TarFull,
    /// X-sets of cardinality at most `k`, TAR adjacency.
    TarK(usize),
    /// Minimum X-sets, adjacent when one vertex is exchanged.
    Tj,
}

impl ReconModel {
    pub fn is_tar(self) -> bool {
        !matches!(self, ReconModel::Tj)
    }
}

/// Cardinality bound for [`build_tar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TarBound {
    Full,
    AtMost(usize),
}

/// A reconfiguration graph whose vertices are X-sets of a base graph.
///
/// Vertices are listed in ascending mask order and addressed by position;
/// adjacency is stored as sorted neighbor lists of positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconGraph {
    base: Graph,
    kind: PropertyKind,
    model: ReconModel,
    verts: Vec<VertexSet>,
    adj: SparseGraph,
}

impl ReconGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn kind(&self) -> PropertyKind {
        self.kind
    }

    pub fn model(&self) -> ReconModel {
        self.model
    }

    pub fn verts(&self) -> &[VertexSet] {
        &self.verts
    }

    pub fn position(&self, s: VertexSet) -> Option<usize> {
        self.verts.binary_search(&s).ok()
    }

    /// Edges as position pairs `(p, q)`, `p < q`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj.edges()
    }

    /// The adjacency structure on positions.
    pub fn graph(&self) -> &SparseGraph {
        &self.adj
    }

    /// Reassembles a reconfiguration graph, checking that `verts` is exactly the
    /// vertex family of `model` and `edges` exactly its edge rule.
    pub fn from_parts(
        base: Graph,
        kind: PropertyKind,
        model: ReconModel,
        verts: Vec<VertexSet>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidReconGraph("vertices not strictly ascending"));
        }
        if edges.iter().any(|&(p, q)| p >= q || q >= verts.len()) {
            return Err(Error::InvalidReconGraph("edge endpoints out of order or range"));
        }
        let rebuilt = match model {
            ReconModel::TarFull => build_tar(&base, kind, TarBound::Full, &ReconLimits::default())?,
            ReconModel::TarK(k) => {
                build_tar(&base, kind, TarBound::AtMost(k), &ReconLimits::default())?
            }
            ReconModel::Tj => build_tj(&base, kind, &ReconLimits::default())?,
        };
        if rebuilt.verts != verts {
            return Err(Error::InvalidReconGraph("vertex family does not match the model"));
        }
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() || sorted != rebuilt.edges() {
            return Err(Error::InvalidReconGraph("edge set does not match the model"));
        }
        Ok(rebuilt)
    }
}

impl Adjacency for ReconGraph {
    #[inline]
    fn order(&self) -> usize {
        self.verts.len()
    }

    #[inline]
    fn neighbors(&self, v: usize) -> &[u32] {
        self.adj.neighbors(v)
    }

    fn size(&self) -> usize {
        self.adj.size()
    }
}

fn assemble(
    base: &Graph,
    kind: PropertyKind,
    model: ReconModel,
    verts: Vec<VertexSet>,
    edges: &[(usize, usize)],
) -> ReconGraph {
    let adj = SparseGraph::from_edges(verts.len(), edges);
    ReconGraph {
        base: base.clone(),
        kind,
        model,
        verts,
        adj,
    }
}

fn tar_edges(verts: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (p, &s) in verts.iter().enumerate() {
        // removals only: each edge is found once, from its larger endpoint
        for v in s {
            if let Ok(q) = verts.binary_search(&s.without(v)) {
                edges.push((q, p));
            }
        }
    }
    edges.sort_unstable();
    edges
}

fn resolve_bound(g: &Graph, kind: PropertyKind, bound: TarBound) -> Result<(usize, ReconModel)> {
    match bound {
        TarBound::Full => Ok((g.order(), ReconModel::TarFull)),
        TarBound::AtMost(k) => {
            let x = properties::x_number(g, kind);
            if k < x {
                Err(Error::KBelowXNumber { k, x_number: x })
            } else {
                Ok((k.min(g.order()), ReconModel::TarK(k)))
            }
        }
    }
}

/// The TAR (or k-TAR) graph, built from the minimal X-sets by upward closure.
pub fn build_tar(
    g: &Graph,
    kind: PropertyKind,
    bound: TarBound,
    limits: &ReconLimits,
) -> Result<ReconGraph> {
    let (k, model) = resolve_bound(g, kind, bound)?;
    let verts = tar_sets_by_closure(g, kind, k, limits.cap)?;
    let edges = tar_edges(&verts);
    Ok(assemble(g, kind, model, verts, &edges))
}

/// The same graph as [`build_tar`], but with every subset of `V(G)` tested
/// directly. Kept as an independent oracle for the closure construction.
pub fn build_tar_direct(
    g: &Graph,
    kind: PropertyKind,
    bound: TarBound,
    limits: &ReconLimits,
) -> Result<ReconGraph> {
    let n = g.order();
    if n > DIRECT_SCAN_LIMIT {
        return Err(Error::OrderTooLargeForExhaustive {
            order: n,
            limit: DIRECT_SCAN_LIMIT,
        });
    }
    let (k, model) = resolve_bound(g, kind, bound)?;
    let mut verts = Vec::new();
    for s in 1..1u64 << n {
        if s.count_ones() as usize <= k && satisfies(g, s, kind) {
            if verts.len() == limits.cap {
                return Err(Error::ReconTooLarge { cap: limits.cap });
            }
            verts.push(VertexSet::from_bits(s));
        }
    }
    let edges = tar_edges(&verts);
    Ok(assemble(g, kind, model, verts, &edges))
}

/// Every X-set of cardinality at most `k`: each minimal set and everything
/// reachable from one by adding vertices, generated one cardinality layer at
/// a time.
fn tar_sets_by_closure(g: &Graph, kind: PropertyKind, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let minimal = properties::minimal_x_sets_up_to(g, kind, k);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); k + 1];
    for s in &minimal.sets {
        by_size[s.len()].push(s.bits());
    }
    let full = g.vertices().bits();
    let mut all: Vec<u64> = Vec::new();
    let mut layer: Vec<u64> = Vec::new();
    for bucket in &mut by_size[1..=k] {
        let mut next = core::mem::take(bucket);
        for &s in &layer {
            let mut free = full & !s;
            while free != 0 {
                let b = free & free.wrapping_neg();
                free &= free - 1;
                next.push(s | b);
            }
        }
        next.sort_unstable();
        next.dedup();
        if all.len() + next.len() > cap {
            return Err(Error::ReconTooLarge { cap });
        }
        all.extend_from_slice(&next);
        layer = next;
    }
    all.sort_unstable();
    Ok(all.into_iter().map(VertexSet::from_bits).collect())
}

/// The TJ graph on the minimum X-sets.
///
/// When the minimum X-set is unique the result is `K₁`.
pub fn build_tj(g: &Graph, kind: PropertyKind, limits: &ReconLimits) -> Result<ReconGraph> {
    let verts = properties::minimum_x_sets(g, kind).sets;
    if verts.len() > limits.cap {
        return Err(Error::ReconTooLarge { cap: limits.cap });
    }
    let full = g.vertices();
    let mut edges = Vec::new();
    for (p, &s) in verts.iter().enumerate() {
        for u in s {
            for w in full - s {
                let t = s.without(u).with(w);
                if t > s {
                    if let Ok(q) = verts.binary_search(&t) {
                        edges.push((p, q));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(assemble(g, kind, ReconModel::Tj, verts, &edges))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReconMetrics {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub component_count: usize,
    /// `None` when disconnected.
    pub diameter: Option<usize>,
    /// True when the diameter is a lower bound from sampled BFS sources.
    pub diameter_sampled: bool,
    pub bipartite: bool,
}

/// Metrics of any graph given as an adjacency view.
pub fn graph_metrics<G: Adjacency + ?Sized>(g: &G) -> ReconMetrics {
    let order = g.order();
    let degrees = (0..order).map(|v| g.degree(v));
    let (_, component_count) = sparse::component_labels(g);
    let connected = component_count == 1;
    let (diameter, diameter_sampled) = if !connected {
        (None, false)
    } else if order <= EXACT_DIAMETER_LIMIT {
        (sparse::diameter(g), false)
    } else {
        (Some(sampled_diameter(g)), true)
    };
    ReconMetrics {
        order,
        size: g.size(),
        max_degree: degrees.clone().max().unwrap_or(0),
        min_degree: degrees.min().unwrap_or(0),
        component_count,
        diameter,
        diameter_sampled,
        bipartite: sparse::is_bipartite(g),
    }
}

/// Lower bound on the diameter of a connected graph: repeated double sweeps
/// from evenly spaced start vertices.
fn sampled_diameter<G: Adjacency + ?Sized>(g: &G) -> usize {
    const STARTS: usize = 16;
    let n = g.order();
    let mut best = 0;
    for i in 0..STARTS {
        let start = i * n / STARTS;
        let d = sparse::bfs_distances(g, start);
        let (far, &ecc) = d.iter().enumerate().max_by_key(|(_, &x)| x).unwrap();
        best = best.max(ecc as usize);
        let d2 = sparse::bfs_distances(g, far);
        best = best.max(*d2.iter().max().unwrap() as usize);
    }
    best
}

pub fn recon_metrics(r: &ReconGraph) -> ReconMetrics {
    graph_metrics(r)
}

/// BFS distance and symmetric-difference size between two vertices of a TAR
/// graph. The BFS distance is `None` when they lie in different components.
pub fn tar_distance(r: &ReconGraph, s: VertexSet, t: VertexSet) -> Result<(Option<usize>, usize)> {
    let p = r.position(s).ok_or(Error::NotAVertex { bits: s.bits() })?;
    let q = r.position(t).ok_or(Error::NotAVertex { bits: t.bits() })?;
    let d = sparse::bfs_distances(r, p)[q];
    let bfs = (d != UNREACHABLE).then_some(d as usize);
    Ok((bfs, s.symmetric_difference(t).len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thresholds {
    pub x_number: usize,
    /// Least `k` with the k-TAR graph connected.
    pub under_x0: usize,
    /// Least `k₀` with the k-TAR graph connected for every `k >= k₀`.
    pub x0: usize,
}

/// Connectivity of every k-TAR graph, `k = 0..=n`, as one pass over the full TAR
/// graph: layers are added by cardinality and merged with a union-find.
pub fn k_tar_connectivity(full: &ReconGraph) -> Vec<bool> {
    let n = full.base().order();
    let verts = full.verts();
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (p, s) in verts.iter().enumerate() {
        layers[s.len()].push(p);
    }
    let mut dsu = UnionFind::new(verts.len());
    let mut components = 0usize;
    let mut present = 0usize;
    let mut out = Vec::with_capacity(n + 1);
    for (k, layer) in layers.iter().enumerate() {
        for &q in layer {
            components += 1;
            present += 1;
            for &p in full.neighbors(q) {
                let p = p as usize;
                if verts[p].len() + 1 == k && dsu.union(p, q) {
                    components -= 1;
                }
            }
        }
        out.push(present > 0 && components == 1);
    }
    out
}

pub fn connectivity_thresholds(
    g: &Graph,
    kind: PropertyKind,
    limits: &ReconLimits,
) -> Result<Thresholds> {
    let full = build_tar(g, kind, TarBound::Full, limits)?;
    thresholds_from_tar(&full)
}

/// Thresholds read off an already built full TAR graph.
pub fn thresholds_from_tar(full: &ReconGraph) -> Result<Thresholds> {
    if full.model() != ReconModel::TarFull {
        return Err(Error::InvalidReconGraph("thresholds need the full TAR graph"));
    }
    let n = full.base().order();
    let x = full.verts().iter().map(|s| s.len()).min().expect("V(G) is an X-set");
    let connected = k_tar_connectivity(full);
    let under_x0 = (x..=n)
        .find(|&k| connected[k])
        .expect("the full TAR graph is connected");
    let x0 = (x..=n).rev().find(|&k| !connected[k]).map_or(x, |k| k + 1);
    Ok(Thresholds {
        x_number: x,
        under_x0,
        x0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypercubeMode {
    /// `n - X(G)`.
    Formula,
    /// Largest `t <= 4` with an induced `Q_t` found by explicit search.
    Search,
}

/// Largest dimension of a hypercube induced in the full TAR graph.
pub fn hypercube_dimension(
    g: &Graph,
    kind: PropertyKind,
    mode: HypercubeMode,
    limits: &ReconLimits,
) -> Result<usize> {
    match mode {
        HypercubeMode::Formula => Ok(g.order() - properties::x_number(g, kind)),
        HypercubeMode::Search => {
            let tar = build_tar(
                g,
                kind,
                TarBound::Full,
                &ReconLimits {
                    cap: limits.cap.min(HYPERCUBE_SEARCH_MAX_ORDER),
                },
            )
            .map_err(|e| match e {
                Error::ReconTooLarge { .. } => Error::SearchTooLarge {
                    order: g.order(),
                    limit: HYPERCUBE_SEARCH_MAX_ORDER,
                },
                other => other,
            })?;
            let mut best = 0;
            for t in 1..=HYPERCUBE_SEARCH_MAX_DIM {
                let cube = SparseGraph::hypercube(t);
                if iso::find_induced_subgraph(&cube, &tar).is_some() {
                    best = t;
                } else {
                    break;
                }
            }
            Ok(best)
        }
    }
}

/// Best `s + t` over splits of the minimal X-sets into two groups whose unions
/// are disjoint (`s`, `t` the largest cardinality in each group).
///
/// Sets that share a vertex must land in the same group, so the groups are
/// unions of components of the overlap relation. `None` when the minimal sets
/// cannot be split that way.
pub fn disjoint_minimal_bound(g: &Graph, kind: PropertyKind) -> Option<usize> {
    let minimal = properties::minimal_x_sets(g, kind).sets;
    let mut dsu = UnionFind::new(minimal.len());
    for i in 0..minimal.len() {
        for j in i + 1..minimal.len() {
            if !minimal[i].is_disjoint(minimal[j]) {
                dsu.union(i, j);
            }
        }
    }
    let mut best_per_root: Vec<(usize, usize)> = Vec::new();
    for (i, s) in minimal.iter().enumerate() {
        let root = dsu.find(i);
        match best_per_root.iter_mut().find(|(r, _)| *r == root) {
            Some(entry) => entry.1 = entry.1.max(s.len()),
            None => best_per_root.push((root, s.len())),
        }
    }
    if best_per_root.len() < 2 {
        return None;
    }
    let mut sizes: Vec<usize> = best_per_root.into_iter().map(|(_, m)| m).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes[0] + sizes[1])
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Returns true if the two elements were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb as u32,
            core::cmp::Ordering::Greater => self.parent[rb] = ra as u32,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra as u32;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
