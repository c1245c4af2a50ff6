//! Canonical labeling, isomorphism and induced-subgraph search, small-graph
//! enumeration, and the TAR uniqueness search built on them.
//!
//! Canonical forms come from individualization-refinement: colorings are
//! refined to equitable partitions, the first non-singleton cell is split by
//! individualizing each member in turn, and the lexicographically least
//! adjacency certificate over all discrete leaves wins. Automorphisms found
//! along the way prune children in the same orbit.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::PropertyKind;
use crate::recon::{self, ReconLimits, TarBound, UnionFind};
use crate::sparse::{self, Adjacency, SparseGraph};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 512;

/// Largest order accepted by [`enumerate_graphs`].
pub const ENUMERATION_LIMIT: usize = 7;

/// An isomorphism-invariant encoding: the upper triangle of the adjacency
/// matrix under the canonical relabeling, row-major, most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<u64>,
}

impl CanonicalForm {
    /// `"<n>:<hex words>"`.
    pub fn to_hex(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}:", self.n);
        for w in &self.bits {
            let _ = write!(s, "{w:016x}");
        }
        s
    }
}

/// Canonical form and the relabeling (`v -> canonical position`) realizing it.
pub fn canonical_labeling<G: Adjacency + ?Sized>(g: &G) -> Result<(CanonicalForm, Vec<u32>)> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLargeForCanonical {
            order: n,
            limit: CANONICAL_LIMIT,
        });
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.explore(vec![0; n], &mut prefix);
    let (bits, lab) = search.best.unwrap_or_default();
    Ok((CanonicalForm { n, bits }, lab))
}

pub fn canonical_form<G: Adjacency + ?Sized>(g: &G) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

struct Search<'a, G: ?Sized> {
    g: &'a G,
    n: usize,
    first: Option<(Vec<u64>, Vec<u32>)>,
    best: Option<(Vec<u64>, Vec<u32>)>,
    autos: Vec<Vec<u32>>,
}

impl<G: Adjacency + ?Sized> Search<'_, G> {
    fn explore(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut colors);
        let n = self.n;
        let mut counts = vec![0u32; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let mut orbits = UnionFind::new(n);
                for a in &self.autos {
                    if prefix.iter().all(|&p| a[p] as usize == p) {
                        for (x, &y) in a.iter().enumerate() {
                            orbits.union(x, y as usize);
                        }
                    }
                }
                let rv = orbits.find(v);
                if explored.iter().any(|&u| orbits.find(u) == rv) {
                    continue;
                }
            }
            let mut child = colors.clone();
            for &u in &cell {
                if u != v {
                    child[u] = target as u32 + 1;
                }
            }
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, lab: Vec<u32>) {
        let cert = certificate(self.g, &lab);
        let Some((first_cert, first_lab)) = &self.first else {
            self.first = Some((cert.clone(), lab.clone()));
            self.best = Some((cert, lab));
            return;
        };
        if cert == *first_cert {
            self.autos.push(automorphism(first_lab, &lab));
            return;
        }
        let (best_cert, best_lab) = self.best.as_ref().expect("set with first");
        match cert.cmp(best_cert) {
            core::cmp::Ordering::Equal => self.autos.push(automorphism(best_lab, &lab)),
            core::cmp::Ordering::Less => self.best = Some((cert, lab)),
            core::cmp::Ordering::Greater => {}
        }
    }
}

/// `γ = a⁻¹ ∘ b` for two labelings with equal certificates.
fn automorphism(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut inv_a = vec![0u32; a.len()];
    for (v, &p) in a.iter().enumerate() {
        inv_a[p as usize] = v as u32;
    }
    b.iter().map(|&p| inv_a[p as usize]).collect()
}

fn certificate<G: Adjacency + ?Sized>(g: &G, lab: &[u32]) -> Vec<u64> {
    let n = lab.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; pairs.div_ceil(64)];
    for u in 0..n {
        for &w in g.neighbors(u) {
            let (a, b) = (lab[u] as usize, lab[w as usize] as usize);
            if a < b {
                let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
                bits[idx / 64] |= 1u64 << (63 - idx % 64);
            }
        }
    }
    bits
}

/// Refines `colors` (cell-start convention: a vertex's color is the position of
/// its cell in the sorted order) until the partition is equitable.
fn refine<G: Adjacency + ?Sized>(g: &G, colors: &mut [u32]) {
    let n = colors.len();
    let mut cells = distinct(colors);
    let mut keyed: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        keyed.clear();
        for v in 0..n {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w as usize]).collect();
            nb.sort_unstable();
            keyed.push((colors[v], nb, v));
        }
        keyed.sort_unstable();
        let mut start = 0;
        for i in 0..n {
            if i > 0 && (keyed[i].0 != keyed[i - 1].0 || keyed[i].1 != keyed[i - 1].1) {
                start = i;
            }
            colors[keyed[i].2] = start as u32;
        }
        let now = distinct(colors);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut count = 0;
    for &c in colors {
        if !core::mem::replace(&mut seen[c as usize], true) {
            count += 1;
        }
    }
    count
}

/// Cheap invariants compared before any canonical labeling.
fn invariants_match<A: Adjacency + ?Sized, B: Adjacency + ?Sized>(g: &A, h: &B) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && sparse::degree_multiset(g) == sparse::degree_multiset(h)
        && sparse::is_bipartite(g) == sparse::is_bipartite(h)
}

/// An isomorphism `m` (`u ~ v` in `g` iff `m[u] ~ m[v]` in `h`), if one exists.
pub fn are_isomorphic<A: Adjacency + ?Sized, B: Adjacency + ?Sized>(
    g: &A,
    h: &B,
) -> Result<Option<Vec<usize>>> {
    if !invariants_match(g, h) {
        return Ok(None);
    }
    let (fg, lg) = canonical_labeling(g)?;
    let (fh, lh) = canonical_labeling(h)?;
    if fg != fh {
        return Ok(None);
    }
    let mut inv_h = vec![0usize; lh.len()];
    for (v, &p) in lh.iter().enumerate() {
        inv_h[p as usize] = v;
    }
    let m: Vec<usize> = lg.iter().map(|&p| inv_h[p as usize]).collect();
    for u in 0..g.order() {
        let mut mapped: Vec<u32> = g.neighbors(u).iter().map(|&w| m[w as usize] as u32).collect();
        mapped.sort_unstable();
        assert_eq!(mapped, h.neighbors(m[u]), "canonical forms agree but the mapping fails");
    }
    Ok(Some(m))
}

/// An injection `f` from pattern vertices to host vertices with
/// `u ~ v` iff `f(u) ~ f(v)` for all pattern vertices, if one exists.
pub fn find_induced_subgraph<P: Adjacency + ?Sized, H: Adjacency + ?Sized>(
    pattern: &P,
    host: &H,
) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    // BFS order per component, so each vertex after a component root has an
    // already placed neighbor to draw candidates from.
    let mut order = Vec::with_capacity(k);
    let mut anchor = vec![None; k];
    let mut seen = vec![false; k];
    for root in 0..k {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in pattern.neighbors(u) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    anchor[w] = Some(u);
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.order()];
    if place(pattern, host, &order, &anchor, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn place<P: Adjacency + ?Sized, H: Adjacency + ?Sized>(
    pattern: &P,
    host: &H,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let candidates: Vec<usize> = match anchor[p] {
        Some(a) => host.neighbors(map[a]).iter().map(|&x| x as usize).collect(),
        None => (0..host.order()).collect(),
    };
    for c in candidates {
        if used[c] || host.degree(c) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(c, map[q]));
        if !consistent {
            continue;
        }
        map[p] = c;
        used[c] = true;
        if place(pattern, host, order, anchor, depth + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[p] = usize::MAX;
    }
    false
}

/// The labeled graph on `0..n` whose edges are the set bits of `mask`, pair
/// `(u, v)`, `u < v`, taken in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut rows = g.rows().to_vec();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    g = Graph::from_adjacency(rows)?;
    Ok(g)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphConstraints {
    pub connected: bool,
    pub no_isolated: bool,
    /// Keep one canonically relabeled representative per isomorphism class.
    pub dedup: bool,
}

/// All graphs of order `n` meeting `c`.
///
/// With `dedup`, one canonical representative per class, sorted by canonical
/// form. Without it, every labeled graph in edge-mask order.
pub fn enumerate_graphs(n: usize, c: GraphConstraints) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::OrderTooLargeForEnumeration {
            order: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut labeled = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let mut deg = [0u8; ENUMERATION_LIMIT];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        // every class has a labeling with degrees non-increasing by index
        if c.dedup && deg[..n].windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        if c.no_isolated && deg[..n].contains(&0) && n > 0 {
            continue;
        }
        let g = labeled_graph(n, mask)?;
        if c.connected && !g.is_connected() {
            continue;
        }
        if c.dedup {
            let (form, lab) = canonical_labeling(&SparseGraph::from(&g))?;
            classes.entry(form).or_insert_with(|| {
                let perm: Vec<usize> = lab.iter().map(|&p| p as usize).collect();
                g.permuted(&perm)
            });
        } else {
            labeled.push(g);
        }
    }
    Ok(if c.dedup {
        classes.into_values().collect()
    } else {
        labeled
    })
}

/// Every graph of order `n` without isolated vertices (one per isomorphism
/// class) whose full TAR graph for `kind` is isomorphic to `target`.
pub fn uniqueness_search<T: Adjacency + ?Sized>(
    target: &T,
    n: usize,
    kind: PropertyKind,
    limits: &ReconLimits,
) -> Result<Vec<Graph>> {
    let candidates = enumerate_graphs(
        n,
        GraphConstraints {
            connected: false,
            no_isolated: true,
            dedup: true,
        },
    )?;
    let target_form = canonical_form(target)?;
    let mut out = Vec::new();
    for g in candidates {
        let tar = recon::build_tar(&g, kind, TarBound::Full, limits)?;
        if !invariants_match(&tar, target) {
            continue;
        }
        if canonical_form(&tar)? == target_form {
            out.push(g);
        }
    }
    Ok(out)
}
