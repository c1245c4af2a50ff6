//! Graphs of unbounded order with sorted adjacency lists.
//!
//! Reconfiguration graphs and isomorphism targets (`K_a □ K_b`, `H(d, r)`, ...)
//! routinely exceed the 64-vertex limit of a base [`Graph`], so the traversal
//! and isomorphism machinery runs on the [`Adjacency`] trait instead.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Read access to a simple undirected graph with sorted neighbor lists.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[u32];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn size(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }
}

/// An undirected simple graph stored as sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl SparseGraph {
    /// Builds from an edge list; duplicate edges are merged, loops are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for order {n}");
            if u != v {
                lists[u].push(v as u32);
                lists[v].push(u as u32);
            }
        }
        Self::from_lists(lists)
    }

    pub(crate) fn from_lists(mut lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        SparseGraph { offsets, targets }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for &v in self.neighbors(u) {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// `K_{1,t}` with center `0`.
    pub fn star(t: usize) -> Self {
        let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
        Self::from_edges(t + 1, &edges)
    }

    /// The Hamming graph `H(d, r) = K_r □ ... □ K_r` (`d` factors).
    pub fn hamming(d: usize, r: usize) -> Self {
        let mut g = Self::complete(1);
        for _ in 0..d {
            g = g.cartesian_product(&Self::complete(r));
        }
        g
    }

    /// `Q_d = H(d, 2)`.
    pub fn hypercube(d: usize) -> Self {
        Self::hamming(d, 2)
    }

    /// `self □ other`, vertex `(a, b)` at `a * |other| + b`. No order cap.
    pub fn cartesian_product(&self, other: &SparseGraph) -> Self {
        let (na, nb) = (self.order(), other.order());
        let mut lists = vec![Vec::new(); na * nb];
        for a in 0..na {
            for b in 0..nb {
                let list = &mut lists[a * nb + b];
                for &a2 in self.neighbors(a) {
                    list.push((a2 as usize * nb + b) as u32);
                }
                for &b2 in other.neighbors(b) {
                    list.push((a * nb + b2 as usize) as u32);
                }
            }
        }
        Self::from_lists(lists)
    }

    /// `self ⊔ other`, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &SparseGraph) -> Self {
        let shift = self.order();
        let mut lists: Vec<Vec<u32>> = (0..shift).map(|v| self.neighbors(v).to_vec()).collect();
        for v in 0..other.order() {
            lists.push(other.neighbors(v).iter().map(|&u| u + shift as u32).collect());
        }
        Self::from_lists(lists)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut lists = vec![Vec::new(); self.order()];
        for u in 0..self.order() {
            for &v in self.neighbors(u) {
                lists[perm[u]].push(perm[v as usize] as u32);
            }
        }
        Self::from_lists(lists)
    }
}

impl Adjacency for SparseGraph {
    #[inline]
    fn order(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    #[inline]
    fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn size(&self) -> usize {
        self.targets.len() / 2
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> Self {
        let lists = (0..g.order())
            .map(|v| g.neighbors(v).iter().map(|u| u as u32).collect())
            .collect();
        SparseGraph::from_lists(lists)
    }
}

/// Copies any adjacency view into an owned [`SparseGraph`].
pub fn to_sparse<G: Adjacency + ?Sized>(g: &G) -> SparseGraph {
    let lists = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    SparseGraph::from_lists(lists)
}

/// Marker for an unreachable vertex in BFS distance vectors.
pub const UNREACHABLE: u32 = u32::MAX;

pub fn bfs_distances<G: Adjacency + ?Sized>(g: &G, src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == UNREACHABLE {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Component label per vertex and the number of components.
pub fn component_labels<G: Adjacency + ?Sized>(g: &G) -> (Vec<u32>, usize) {
    let n = g.order();
    let mut label = vec![UNREACHABLE; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != UNREACHABLE {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w as usize] == UNREACHABLE {
                    label[w as usize] = count;
                    stack.push(w as usize);
                }
            }
        }
        count += 1;
    }
    (label, count as usize)
}

pub fn is_bipartite<G: Adjacency + ?Sized>(g: &G) -> bool {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let w = w as usize;
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact diameter by BFS from every vertex; `None` when disconnected or empty.
pub fn diameter<G: Adjacency + ?Sized>(g: &G) -> Option<usize> {
    diameter_from(g, 0..g.order())
}

/// Largest eccentricity over the given sources; `None` if any source misses a vertex.
pub fn diameter_from<G: Adjacency + ?Sized, I: IntoIterator<Item = usize>>(
    g: &G,
    sources: I,
) -> Option<usize> {
    if g.order() == 0 {
        return None;
    }
    let mut best = 0;
    for s in sources {
        for d in bfs_distances(g, s) {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d as usize);
        }
    }
    Some(best)
}

/// Degrees sorted non-increasing.
pub fn degree_multiset<G: Adjacency + ?Sized>(g: &G) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// True when some three mutually adjacent vertices exist.
pub fn has_triangle<G: Adjacency + ?Sized>(g: &G) -> bool {
    for u in 0..g.order() {
        let nu = g.neighbors(u);
        for &v in nu {
            if (v as usize) <= u {
                continue;
            }
            // sorted-list intersection restricted to w > v
            let nv = g.neighbors(v as usize);
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        if nu[i] > v {
                            return true;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    false
}
