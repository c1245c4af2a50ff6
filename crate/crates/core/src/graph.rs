//! Base graphs on at most 64 vertices, the named families used throughout the
//! crate, and the composition operators that build new base graphs from old.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Largest supported base-graph order: one vertex per bit of a [`VertexSet`].
pub const MAX_ORDER: usize = 64;

/// A finite simple graph on vertices `0..n`, `1 <= n <= 64`.
///
/// `adj[v]` is the open neighborhood of `v` as a bitmask. Graphs are
/// immutable once built; every constructor checks symmetry and loop-freeness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { order: n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            name: None,
        })
    }

    /// Builds a graph directly from neighborhood masks, validating the invariants.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { order: n });
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    order: n,
                });
            }
            if row & (1u64 << v) != 0 {
                return Err(Error::SelfLoop { vertex: v });
            }
            for u in VertexSet::from_bits(row) {
                if rows[u] & (1u64 << v) == 0 {
                    return Err(Error::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn clear_name(mut self) -> Self {
        self.name = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighborhood masks, indexed by vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | (1u64 << v))
    }

    /// `N[S]`.
    #[inline]
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = s.bits();
        for v in s {
            out |= self.adj[v];
        }
        VertexSet::from_bits(out)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u] >> u >> 1 << u << 1) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices of degree zero.
    pub fn isolated(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Vertex sets of the connected components, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1u64 << v) != 0 {
                continue;
            }
            let comp = self.reach(VertexSet::singleton(v));
            seen |= comp.bits();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(VertexSet::singleton(0)) == self.vertices()
    }

    /// All vertices reachable from `start`.
    fn reach(&self, start: VertexSet) -> VertexSet {
        let mut seen = start;
        let mut frontier = start;
        while !frontier.is_empty() {
            let next = self.closed_neighborhood(frontier) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// BFS distances from `src` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            for v in frontier {
                dist[v] = d;
            }
            let next = self.closed_neighborhood(frontier) - seen;
            seen = seen | next;
            frontier = next;
            d += 1;
        }
        dist
    }

    /// The subgraph induced by `keep`, relabeled `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        if !keep.fits(self.n) {
            return Err(Error::SetOutOfRange {
                bits: keep.bits(),
                order: self.n,
            });
        }
        let slots: Vec<usize> = keep.iter().collect();
        let mut rows = vec![0u64; slots.len()];
        for (i, &v) in slots.iter().enumerate() {
            rows[i] = compress(self.adj[v] & keep.bits(), keep.bits());
        }
        Graph::from_adjacency(rows)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                rows[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph {
            n: self.n,
            adj: rows,
            name: self.name.clone(),
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let rows = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph {
            n: self.n,
            adj: rows,
            name: None,
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.fits(self.n) {
            Ok(())
        } else {
            Err(Error::SetOutOfRange {
                bits: s.bits(),
                order: self.n,
            })
        }
    }
}

/// Gathers the bits of `bits` selected by `mask` into the low end.
#[inline]
pub(crate) fn compress(bits: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m & m.wrapping_neg();
        if bits & b != 0 {
            out |= 1u64 << i;
        }
        i += 1;
        m &= m - 1;
    }
    out
}

/// The named graph families.
///
/// Vertex conventions (all 0-based):
/// * `Path(n)`, `Cycle(n)`, `Complete(n)`: `v_1..v_n` map to `0..n`.
/// * `CompleteBipartite(a, b)`: part `A = 0..a`, part `B = a..a+b`.
/// * `Wheel(n)`: hub `0`, rim cycle `1..n`.
/// * `Star(t)` is `K_{1,t}` (order `t + 1`): center `0`, leaves `1..=t`.
/// * `StarEdge(t)` is `K_{1,t}(e)`: `Star(t)` plus the edge `{1, 2}`.
/// * `StarPendant(t)` is `K_{1,t}(ℓ)`: `Star(t)` plus vertex `t + 1` adjacent to leaf `1`.
/// * `K2tEdge(t)` is `K_{2,t}(e)`: `CompleteBipartite(2, t)` plus the edge `{0, 1}`.
/// * `Hypercube(d)`: vertex `x` adjacent to `x ^ (1 << i)`.
/// * `PaperGn(n)`: `u_1..u_{n-1}` are `0..n-1`, then block `S_{n,i}` (`i = 1..=n`)
///   holds `v^i_1..v^i_n` at `n - 1 + (i - 1) n + (j - 1)`.
/// * `Grid(a, b)` is `P_a □ P_b`: row `x`, column `y` at `x * b + y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Star(usize),
    StarEdge(usize),
    StarPendant(usize),
    K2tEdge(usize),
    Hypercube(usize),
    PaperGn(usize),
    Grid(usize, usize),
}

fn out_of_range(family: &'static str, detail: &'static str) -> Error {
    Error::ParamOutOfRange { family, detail }
}

/// Builds the named graph with the conventions documented on [`FamilySpec`].
pub fn generate(spec: FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match spec {
        Path(n) => {
            if n == 0 {
                return Err(out_of_range("path", "n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)?.with_name(format!("P{n}"))
        }
        Cycle(n) => {
            if n < 3 {
                return Err(out_of_range("cycle", "n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)?.with_name(format!("C{n}"))
        }
        Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)?.with_name(format!("K{n}"))
        }
        CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(out_of_range("complete_bipartite", "a, b >= 1"));
            }
            Graph::new(a + b, &bipartite_edges(a, b))?.with_name(format!("K{a},{b}"))
        }
        Wheel(n) => {
            if n < 4 {
                return Err(out_of_range("wheel", "n >= 4"));
            }
            let rim = n - 1;
            let mut edges: Vec<_> = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)).collect();
            edges.extend((1..n).map(|i| (0, i)));
            Graph::new(n, &edges)?.with_name(format!("W{n}"))
        }
        Star(t) => {
            if t == 0 {
                return Err(out_of_range("star", "t >= 1"));
            }
            Graph::new(t + 1, &star_edges(t))?.with_name(format!("K1,{t}"))
        }
        StarEdge(t) => {
            if t < 2 {
                return Err(out_of_range("star_edge", "t >= 2"));
            }
            let mut edges = star_edges(t);
            edges.push((1, 2));
            Graph::new(t + 1, &edges)?.with_name(format!("K1,{t}(e)"))
        }
        StarPendant(t) => {
            if t == 0 {
                return Err(out_of_range("star_pendant", "t >= 1"));
            }
            let mut edges = star_edges(t);
            edges.push((1, t + 1));
            Graph::new(t + 2, &edges)?.with_name(format!("K1,{t}(l)"))
        }
        K2tEdge(t) => {
            if t == 0 {
                return Err(out_of_range("k2t_edge", "t >= 1"));
            }
            let mut edges = bipartite_edges(2, t);
            edges.push((0, 1));
            Graph::new(t + 2, &edges)?.with_name(format!("K2,{t}(e)"))
        }
        Hypercube(d) => {
            if d > 6 {
                return Err(Error::OrderOutOfRange {
                    order: 1usize << d.min(63),
                });
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for x in 0..n {
                for i in 0..d {
                    let y = x ^ (1 << i);
                    if x < y {
                        edges.push((x, y));
                    }
                }
            }
            Graph::new(n, &edges)?.with_name(format!("Q{d}"))
        }
        PaperGn(n) => paper_gn(n)?,
        Grid(a, b) => {
            if a == 0 || b == 0 {
                return Err(out_of_range("grid", "a, b >= 1"));
            }
            let pa = generate(Path(a))?;
            let pb = generate(Path(b))?;
            cartesian_product(&pa, &pb)?.with_name(format!("P{a}xP{b}"))
        }
    };
    Ok(g)
}

fn star_edges(t: usize) -> Vec<(usize, usize)> {
    (1..=t).map(|i| (0, i)).collect()
}

fn bipartite_edges(a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(a * b);
    for x in 0..a {
        for y in 0..b {
            edges.push((x, a + y));
        }
    }
    edges
}

/// Index of `u_j` (`1 <= j <= n - 1`) in `PaperGn(n)`.
pub fn gn_u(_n: usize, j: usize) -> usize {
    j - 1
}

/// Index of `v^i_j` (`1 <= i, j <= n`) in `PaperGn(n)`.
pub fn gn_v(n: usize, i: usize, j: usize) -> usize {
    n - 1 + (i - 1) * n + (j - 1)
}

fn paper_gn(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(out_of_range("paper_Gn", "n >= 3"));
    }
    let order = n * n + n - 1;
    if order > MAX_ORDER {
        return Err(Error::OrderOutOfRange { order });
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        // each block S_{n,i} is a clique; v^i_n is the one member without a u-neighbor
        for p in 1..=n {
            for q in p + 1..=n {
                edges.push((gn_v(n, i, p), gn_v(n, i, q)));
            }
        }
        for j in 1..n {
            edges.push((gn_u(n, j), gn_v(n, i, j)));
        }
    }
    Ok(Graph::new(order, &edges)?.with_name(format!("G{n}")))
}

/// `G □ H`: vertex `(g, h)` is `g * |V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let order = ng * nh;
    let mut out = Graph::empty(order)?;
    for a in 0..ng {
        for b in 0..nh {
            let v = a * nh + b;
            let mut row = 0u64;
            for a2 in g.neighbors(a) {
                row |= 1u64 << (a2 * nh + b);
            }
            for b2 in h.neighbors(b) {
                row |= 1u64 << (a * nh + b2);
            }
            out.adj[v] = row;
        }
    }
    Ok(out)
}

/// `G ⊔ H` with `H` shifted past `G`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.order();
    let mut out = Graph::empty(shift + h.order())?;
    out.adj[..shift].copy_from_slice(&g.adj);
    for v in 0..h.order() {
        out.adj[shift + v] = h.adj[v] << shift;
    }
    Ok(out)
}

/// Where [`add_leaves`] attaches new leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafTarget {
    Vertex(usize),
    /// Every original vertex: the corona `G ∘ rK₁`.
    All,
}

/// Appends `r` new leaves at the target vertex (or at every vertex, in vertex order).
pub fn add_leaves(g: &Graph, target: LeafTarget, r: usize) -> Result<Graph> {
    let hosts: Vec<usize> = match target {
        LeafTarget::Vertex(v) => {
            g.check_vertex(v)?;
            vec![v]
        }
        LeafTarget::All => (0..g.order()).collect(),
    };
    let order = g.order() + hosts.len() * r;
    let mut out = Graph::empty(order)?;
    out.adj[..g.order()].copy_from_slice(&g.adj);
    let mut next = g.order();
    for &v in &hosts {
        for _ in 0..r {
            out.adj[v] |= 1u64 << next;
            out.adj[next] = 1u64 << v;
            next += 1;
        }
    }
    Ok(out)
}

/// `G ∘ rK₁`.
pub fn corona(g: &Graph, r: usize) -> Result<Graph> {
    add_leaves(g, LeafTarget::All, r)
}

/// Replaces every edge `{u, v}` by three paths `u - s - v`.
///
/// Original vertices keep their indices; the three subdividers of each edge are
/// appended in lexicographic edge order.
pub fn k23_expansion(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    let order = g.order() + 3 * edges.len();
    let mut out = Graph::empty(order)?;
    let mut next = g.order();
    for (u, v) in edges {
        for _ in 0..3 {
            out.adj[u] |= 1u64 << next;
            out.adj[v] |= 1u64 << next;
            out.adj[next] = (1u64 << u) | (1u64 << v);
            next += 1;
        }
    }
    Ok(out)
}

/// Summary statistics of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    /// `deg(v)` indexed by vertex.
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub component_count: usize,
    pub bipartite: bool,
    /// Diameter of each component, components ordered by lowest vertex.
    pub diameters: Vec<usize>,
    pub isolated: VertexSet,
}

impl GraphStats {
    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }
}

pub fn analyze(g: &Graph) -> GraphStats {
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let comps = g.components();
    let mut diameters = Vec::with_capacity(comps.len());
    let mut bipartite = true;
    for comp in &comps {
        let mut diam = 0;
        for v in *comp {
            let dist = g.distances_from(v);
            for u in *comp {
                diam = diam.max(dist[u]);
            }
            // an odd cycle shows up as an edge between equal BFS levels
            if v == comp.first().unwrap() {
                for u in *comp {
                    if g.neighbors(u).iter().any(|w| dist[w] == dist[u]) {
                        bipartite = false;
                    }
                }
            }
        }
        diameters.push(diam);
    }
    GraphStats {
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        degrees,
        component_count: comps.len(),
        bipartite,
        diameters,
        isolated: g.isolated(),
    }
}
