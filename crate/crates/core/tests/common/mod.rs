//! Naive reference implementations shared by the integration tests.
//!
//! Everything here works on `Vec<bool>` adjacency and plain loops so that it
//! shares no code with the bitset engine under test.

#![allow(dead_code)]

use pdrecon_core::properties::PropertyKind;
use pdrecon_core::{Graph, VertexSet};
use proptest::prelude::*;

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v][u])
    }

    fn members(&self, s: u64) -> Vec<bool> {
        (0..self.n).map(|v| s >> v & 1 == 1).collect()
    }

    /// The vertex a observed `v` would force, if exactly one neighbor is unobserved.
    fn forced_by(&self, obs: &[bool], v: usize) -> Option<usize> {
        let open: Vec<usize> = self.nbrs(v).filter(|&u| !obs[u]).collect();
        (open.len() == 1).then(|| open[0])
    }

    /// All forces of a round are decided on the state before the round.
    pub fn simultaneous_closure(&self, mut obs: Vec<bool>) -> Vec<bool> {
        loop {
            let forced: Vec<usize> =
                (0..self.n).filter(|&v| obs[v]).filter_map(|v| self.forced_by(&obs, v)).collect();
            if forced.iter().all(|&u| obs[u]) {
                return obs;
            }
            for u in forced {
                obs[u] = true;
            }
        }
    }

    /// One force per step, always the lowest forcing vertex.
    pub fn sequential_closure(&self, mut obs: Vec<bool>) -> Vec<bool> {
        while let Some(u) = (0..self.n).filter(|&v| obs[v]).find_map(|v| self.forced_by(&obs, v)) {
            obs[u] = true;
        }
        obs
    }

    pub fn dominated(&self, s: u64) -> Vec<bool> {
        let inside = self.members(s);
        (0..self.n).map(|v| inside[v] || self.nbrs(v).any(|u| inside[u])).collect()
    }

    pub fn is_x_set(&self, s: u64, kind: PropertyKind) -> bool {
        let all = |obs: Vec<bool>| obs.into_iter().all(|b| b);
        match kind {
            PropertyKind::Domination => all(self.dominated(s)),
            PropertyKind::PowerDomination => s != 0 && all(self.simultaneous_closure(self.dominated(s))),
            PropertyKind::ZeroForcing => s != 0 && all(self.simultaneous_closure(self.members(s))),
        }
    }

    pub fn x_sets(&self, kind: PropertyKind) -> Vec<u64> {
        (0..1u64 << self.n).filter(|&s| self.is_x_set(s, kind)).collect()
    }

    /// X-sets none of whose one-smaller subsets is an X-set.
    pub fn minimal(&self, kind: PropertyKind) -> Vec<u64> {
        let sets = self.x_sets(kind);
        sets.iter()
            .copied()
            .filter(|&s| (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| !self.is_x_set(s & !(1 << v), kind)))
            .collect()
    }

    pub fn minimum(&self, kind: PropertyKind) -> Vec<u64> {
        let sets = self.x_sets(kind);
        let best = sets.iter().map(|s| s.count_ones()).min().unwrap();
        sets.into_iter().filter(|s| s.count_ones() == best).collect()
    }

    pub fn min_vertex_covers(&self) -> Vec<u64> {
        let covers: Vec<u64> = (0..1u64 << self.n)
            .filter(|&s| {
                (0..self.n).all(|u| (u + 1..self.n).all(|v| !self.adj[u][v] || (s >> u | s >> v) & 1 == 1))
            })
            .collect();
        let best = covers.iter().map(|s| s.count_ones()).min().unwrap();
        covers.into_iter().filter(|s| s.count_ones() == best).collect()
    }
}

pub fn bits(sets: &[VertexSet]) -> Vec<u64> {
    sets.iter().map(|s| s.bits()).collect()
}

pub fn graph_from_mask(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn graphs(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_mask(n, &b))
    })
}

pub fn graphs_without_isolated(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graphs(min_n, max_n).prop_filter("isolated vertex", |g| !g.has_isolated())
}

pub fn kinds() -> impl Strategy<Value = PropertyKind> {
    prop::sample::select(PropertyKind::ALL.to_vec())
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).map(move |m| {
        let b: Vec<bool> = (0..pairs).map(|i| m >> i & 1 == 1).collect();
        graph_from_mask(n, &b)
    })
}
