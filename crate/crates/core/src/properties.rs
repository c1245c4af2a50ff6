//! Monotone vertex-set properties: domination, power domination and zero forcing.
//!
//! Each [`PropertyKind`] decides which vertex sets are *X-sets*. All three are
//! closed under supersets, exclude `∅`, decompose over components, and accept
//! every `(n-1)`-subset of a graph without isolated vertices; [`validate_axioms`]
//! checks those four conditions exhaustively on a given graph.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{deposit, KSubsets, VertexSet};

/// Largest order for which [`validate_axioms`] scans every subset.
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyKind {
    /// `N[S] = V`.
    Domination,
    /// Domination step followed by unique-unobserved-neighbor forcing.
    PowerDomination,
    /// Color-change rule without the domination step.
    ZeroForcing,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 3] = [
        PropertyKind::Domination,
        PropertyKind::PowerDomination,
        PropertyKind::ZeroForcing,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            PropertyKind::Domination => "domination",
            PropertyKind::PowerDomination => "power_domination",
            PropertyKind::ZeroForcing => "zero_forcing",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "domination" | "dom" => Some(PropertyKind::Domination),
            "power_domination" | "pd" => Some(PropertyKind::PowerDomination),
            "zero_forcing" | "zf" => Some(PropertyKind::ZeroForcing),
            _ => None,
        }
    }
}

/// Round-by-round record of the power-domination observation process.
///
/// `layers[0]` is the start set and `layers[1]` its closed neighborhood; each
/// further layer adds every vertex that is the only unobserved neighbor of an
/// observed vertex. Layers are recorded only while they grow, so the last one
/// is the fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationTrace {
    pub start: VertexSet,
    pub layers: Vec<VertexSet>,
    /// `new_per_round[i] = layers[i] \ layers[i-1]`; entry 0 is the start set.
    pub new_per_round: Vec<VertexSet>,
    pub success: bool,
}

impl ObservationTrace {
    /// Rounds until the fixpoint.
    pub fn rounds(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn fixpoint(&self) -> VertexSet {
        *self.layers.last().expect("trace has a start layer")
    }
}

/// One simultaneous forcing round: every observed vertex with exactly one
/// unobserved neighbor observes it, judged against `observed` as it was.
#[inline]
fn force_round(g: &Graph, observed: u64) -> u64 {
    let rows = g.rows();
    let mut next = observed;
    let mut it = observed;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let open = rows[v] & !observed;
        if open != 0 && open & (open - 1) == 0 {
            next |= open;
        }
    }
    next
}

/// Forcing closure with forces applied as soon as they are found.
///
/// Reaches the same fixpoint as repeated [`force_round`] calls since forcing is
/// monotone in the observed set; it just needs fewer passes.
#[inline]
fn force_closure(rows: &[u64], mut observed: u64, full: u64) -> u64 {
    loop {
        let before = observed;
        let mut it = observed;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let open = rows[v] & !observed;
            if open != 0 && open & (open - 1) == 0 {
                observed |= open;
            }
        }
        if observed == before || observed == full {
            return observed;
        }
    }
}

#[inline]
fn closed_nbhd(rows: &[u64], s: u64) -> u64 {
    let mut out = s;
    let mut it = s;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        out |= rows[v];
    }
    out
}

/// Membership test without range checks. `s` must fit the graph.
#[inline]
pub(crate) fn satisfies(g: &Graph, s: u64, kind: PropertyKind) -> bool {
    let rows = g.rows();
    let full = g.vertices().bits();
    match kind {
        PropertyKind::Domination => closed_nbhd(rows, s) == full,
        PropertyKind::PowerDomination => {
            if s == 0 {
                return false;
            }
            force_closure(rows, closed_nbhd(rows, s), full) == full
        }
        PropertyKind::ZeroForcing => s != 0 && force_closure(rows, s, full) == full,
    }
}

/// Runs the power-domination observation process from `s`.
pub fn propagate(g: &Graph, s: VertexSet) -> Result<ObservationTrace> {
    g.check_set(s)?;
    let full = g.vertices();
    let mut layers = Vec::new();
    let mut new_per_round = Vec::new();
    layers.push(s);
    new_per_round.push(s);
    let mut current = s.bits();
    let mut round = 1;
    loop {
        let next = if round == 1 {
            closed_nbhd(g.rows(), current)
        } else {
            force_round(g, current)
        };
        if next == current {
            break;
        }
        layers.push(VertexSet::from_bits(next));
        new_per_round.push(VertexSet::from_bits(next & !current));
        current = next;
        round += 1;
    }
    Ok(ObservationTrace {
        start: s,
        success: !s.is_empty() && current == full.bits(),
        layers,
        new_per_round,
    })
}

/// Zero-forcing fixpoint of `s`, one simultaneous round at a time.
pub fn zero_forcing_closure(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut current = s.bits();
    loop {
        let next = force_round(g, current);
        if next == current {
            return Ok(VertexSet::from_bits(current));
        }
        current = next;
    }
}

pub fn is_x_set(g: &Graph, s: VertexSet, kind: PropertyKind) -> Result<bool> {
    g.check_set(s)?;
    Ok(satisfies(g, s.bits(), kind))
}

/// How a [`SetFamily`] was selected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyRole {
    Minimal,
    Minimum,
    /// Every X-set of cardinality at most `k`.
    AllUpTo(usize),
}

/// A family of vertex sets in ascending mask order.
///
/// `kind` is `None` for families that do not come from a [`PropertyKind`]
/// (the vertex covers returned by [`min_vertex_covers`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub sets: Vec<VertexSet>,
    pub role: FamilyRole,
    pub kind: Option<PropertyKind>,
}

impl SetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn max_cardinality(&self) -> usize {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }
}

/// Subset search over the non-isolated vertices with the isolated ones forced
/// in, since every X-set of every kind contains all isolated vertices.
struct Search<'g> {
    g: &'g Graph,
    kind: PropertyKind,
    forced: u64,
    free: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, kind: PropertyKind) -> Self {
        let forced = g.isolated();
        Search {
            g,
            kind,
            forced: forced.bits(),
            free: (g.vertices() - forced).iter().collect(),
        }
    }

    /// Total cardinality of the sets produced at free-cardinality `k`.
    fn total(&self, k: usize) -> usize {
        self.forced.count_ones() as usize + k
    }

    /// X-sets whose free part has cardinality `k`.
    fn x_sets_of(&self, k: usize) -> impl Iterator<Item = u64> + '_ {
        KSubsets::new(self.free.len(), k)
            .map(move |packed| self.forced | deposit(packed, &self.free))
            .filter(move |&s| satisfies(self.g, s, self.kind))
    }

    fn is_minimal(&self, s: u64) -> bool {
        let mut it = s & !self.forced;
        while it != 0 {
            let b = it & it.wrapping_neg();
            it &= it - 1;
            if satisfies(self.g, s & !b, self.kind) {
                return false;
            }
        }
        true
    }
}

/// `X(G)`: least cardinality of an X-set.
pub fn x_number(g: &Graph, kind: PropertyKind) -> usize {
    let search = Search::new(g, kind);
    for k in 0..=search.free.len() {
        if search.x_sets_of(k).next().is_some() {
            return search.total(k);
        }
    }
    unreachable!("the full vertex set is an X-set of every kind")
}

/// All X-sets of cardinality `X(G)`.
pub fn minimum_x_sets(g: &Graph, kind: PropertyKind) -> SetFamily {
    let search = Search::new(g, kind);
    for k in 0..=search.free.len() {
        let mut sets: Vec<VertexSet> = search.x_sets_of(k).map(VertexSet::from_bits).collect();
        if !sets.is_empty() {
            sets.sort_unstable();
            return SetFamily {
                sets,
                role: FamilyRole::Minimum,
                kind: Some(kind),
            };
        }
    }
    unreachable!("the full vertex set is an X-set of every kind")
}

/// All minimal X-sets (no single deletion stays an X-set).
pub fn minimal_x_sets(g: &Graph, kind: PropertyKind) -> SetFamily {
    minimal_x_sets_up_to(g, kind, g.order())
}

/// Minimal X-sets of cardinality at most `k`.
pub fn minimal_x_sets_up_to(g: &Graph, kind: PropertyKind, k: usize) -> SetFamily {
    let search = Search::new(g, kind);
    let mut sets = Vec::new();
    for free_k in 0..=search.free.len() {
        if search.total(free_k) > k {
            break;
        }
        sets.extend(
            search
                .x_sets_of(free_k)
                .filter(|&s| search.is_minimal(s))
                .map(VertexSet::from_bits),
        );
    }
    sets.sort_unstable();
    SetFamily {
        sets,
        role: FamilyRole::Minimal,
        kind: Some(kind),
    }
}

/// Every X-set of cardinality at most `k`, by direct subset scan.
pub fn x_sets_up_to(g: &Graph, kind: PropertyKind, k: usize) -> SetFamily {
    let search = Search::new(g, kind);
    let mut sets = Vec::new();
    for free_k in 0..=search.free.len() {
        if search.total(free_k) > k {
            break;
        }
        sets.extend(search.x_sets_of(free_k).map(VertexSet::from_bits));
    }
    sets.sort_unstable();
    SetFamily {
        sets,
        role: FamilyRole::AllUpTo(k),
        kind: Some(kind),
    }
}

/// Upper X number: the largest cardinality of a minimal X-set.
pub fn upper_x(g: &Graph, kind: PropertyKind) -> usize {
    minimal_x_sets(g, kind).max_cardinality()
}

#[inline]
fn is_vertex_cover(g: &Graph, s: u64) -> bool {
    // every vertex outside S must have all of its neighbors inside S
    let mut outside = g.vertices().bits() & !s;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if g.rows()[v] & !s != 0 {
            return false;
        }
    }
    true
}

/// All minimum vertex covers, by cardinality-ascending search.
pub fn min_vertex_covers(g: &Graph) -> SetFamily {
    let n = g.order();
    for k in 0..=n {
        let sets: Vec<VertexSet> = KSubsets::new(n, k)
            .filter(|&s| is_vertex_cover(g, s))
            .map(VertexSet::from_bits)
            .collect();
        if !sets.is_empty() {
            return SetFamily {
                sets,
                role: FamilyRole::Minimum,
                kind: None,
            };
        }
    }
    unreachable!("V(G) covers every edge")
}

/// Outcome of checking the four framework conditions on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// (1) supersets of X-sets are X-sets.
    pub superset_closed: bool,
    /// (2) `∅` is not an X-set.
    pub empty_excluded: bool,
    /// (3) X-sets are exactly the unions of X-sets of the components;
    /// `None` for connected graphs.
    pub component_decomposition: Option<bool>,
    /// (4) every `(n-1)`-subset is an X-set; `None` when `G` has an isolated vertex.
    pub co_singletons: Option<bool>,
    /// Isolated vertices belong to every X-set.
    pub isolated_forced: bool,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.superset_closed
            && self.empty_excluded
            && self.component_decomposition != Some(false)
            && self.co_singletons != Some(false)
            && self.isolated_forced
    }
}

/// Checks the framework conditions by scanning all `2^n` subsets.
pub fn validate_axioms(g: &Graph, kind: PropertyKind) -> Result<AxiomReport> {
    let n = g.order();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OrderTooLargeForExhaustive {
            order: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let table: Vec<bool> = (0..1u64 << n).map(|s| satisfies(g, s, kind)).collect();

    let superset_closed = (0..1usize << n)
        .filter(|&s| table[s])
        .all(|s| (0..n).all(|v| table[s | 1 << v]));

    let empty_excluded = !table[0];

    let comps = g.components();
    let component_decomposition = if comps.len() > 1 {
        let parts: Vec<(Graph, u64)> = comps
            .iter()
            .map(|&c| (g.induced(c).expect("component fits"), c.bits()))
            .collect();
        Some((0..1u64 << n).all(|s| {
            let by_parts = parts.iter().all(|(h, mask)| {
                satisfies(h, crate::graph::compress(s & mask, *mask), kind)
            });
            table[s as usize] == by_parts
        }))
    } else {
        None
    };

    let full = g.vertices().bits();
    let co_singletons = if g.has_isolated() {
        None
    } else {
        Some((0..n).all(|v| table[(full & !(1u64 << v)) as usize]))
    };

    let iso = g.isolated().bits();
    let isolated_forced = (0..1u64 << n)
        .filter(|&s| table[s as usize])
        .all(|s| s & iso == iso);

    Ok(AxiomReport {
        superset_closed,
        empty_excluded,
        component_decomposition,
        co_singletons,
        isolated_forced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        add_leaves, disjoint_union, generate, gn_u, gn_v, k23_expansion, FamilySpec::*, LeafTarget,
    };
    use PropertyKind::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    /// Brute-force enumeration of every subset: the independent oracle for the
    /// search-based family functions.
    fn oracle_sets(g: &Graph, kind: PropertyKind) -> Vec<u64> {
        (0..1u64 << g.order()).filter(|&s| satisfies(g, s, kind)).collect()
    }

    #[test]
    fn propagate_examples() {
        let c4 = generate(Cycle(4)).unwrap();
        let t = propagate(&c4, vs(&[0])).unwrap();
        assert!(t.success && t.rounds() <= 3);
        assert_eq!(t.layers[1], vs(&[0, 1, 3]));

        let k33 = generate(CompleteBipartite(3, 3)).unwrap();
        let t = propagate(&k33, vs(&[0])).unwrap();
        assert!(!t.success);
        assert_eq!(t.fixpoint().len(), 4);

        let g4 = generate(PaperGn(4)).unwrap();
        let tn = vs(&[gn_u(4, 1), gn_u(4, 2), gn_u(4, 3)]);
        let t = propagate(&g4, tn).unwrap();
        assert!(t.success);
        let last: VertexSet = (1..=4).map(|i| gn_v(4, i, 4)).collect();
        assert_eq!(t.layers[1], g4.vertices() - last);
        assert_eq!(t.new_per_round[2], last);
        assert_eq!(t.rounds(), 2);
    }

    #[test]
    fn propagate_edge_cases() {
        let p3 = generate(Path(3)).unwrap();
        let t = propagate(&p3, VertexSet::EMPTY).unwrap();
        assert!(!t.success);
        assert_eq!(t.layers, [VertexSet::EMPTY]);
        let t = propagate(&p3, p3.vertices()).unwrap();
        assert!(t.success && t.rounds() == 0);
        assert!(matches!(
            propagate(&p3, vs(&[3])),
            Err(Error::SetOutOfRange { .. })
        ));
    }

    #[test]
    fn trace_layer_invariants() {
        let g = generate(Grid(3, 5)).unwrap();
        for s in 1..(1u64 << 15) {
            let t = propagate(&g, VertexSet::from_bits(s)).unwrap();
            assert_eq!(t.layers[0].bits(), s);
            if t.layers.len() > 1 {
                assert_eq!(t.layers[1], g.closed_neighborhood(t.start));
            }
            for i in 1..t.layers.len() {
                assert!(t.layers[i - 1].is_subset(t.layers[i]));
                assert_ne!(t.layers[i - 1], t.layers[i]);
                assert_eq!(t.new_per_round[i], t.layers[i] - t.layers[i - 1]);
            }
            assert_eq!(t.success, satisfies(&g, s, PowerDomination));
        }
    }

    #[test]
    fn is_x_set_examples() {
        let star = generate(Star(5)).unwrap();
        assert!(is_x_set(&star, vs(&[0]), PowerDomination).unwrap());
        for kind in PropertyKind::ALL {
            assert!(!is_x_set(&star, VertexSet::EMPTY, kind).unwrap());
            let k1 = generate(Complete(1)).unwrap();
            assert!(!is_x_set(&k1, VertexSet::EMPTY, kind).unwrap());
        }
        let p4 = generate(Path(4)).unwrap();
        assert!(!is_x_set(&p4, vs(&[1]), Domination).unwrap());
        assert!(is_x_set(&p4, vs(&[1, 2]), Domination).unwrap());
        // an end vertex forces the whole path
        assert!(is_x_set(&p4, vs(&[0]), ZeroForcing).unwrap());
        assert!(!is_x_set(&p4, vs(&[1]), ZeroForcing).unwrap());
        assert!(is_x_set(&p4, vs(&[1]), PowerDomination).unwrap());
    }

    #[test]
    fn x_numbers() {
        for (a, b) in [(3, 3), (3, 5), (4, 6)] {
            let g = generate(CompleteBipartite(a, b)).unwrap();
            assert_eq!(x_number(&g, PowerDomination), 2);
        }
        assert_eq!(x_number(&generate(PaperGn(4)).unwrap(), PowerDomination), 3);
        assert_eq!(x_number(&generate(Grid(5, 12)).unwrap(), PowerDomination), 2);
        assert_eq!(x_number(&generate(Cycle(6)).unwrap(), Domination), 2);
        assert_eq!(x_number(&generate(Complete(5)).unwrap(), ZeroForcing), 4);
        assert_eq!(x_number(&generate(Path(5)).unwrap(), ZeroForcing), 1);
    }

    #[test]
    fn minimum_families() {
        // K_{4,4}: only the mixed pairs
        let k44 = generate(CompleteBipartite(4, 4)).unwrap();
        let mut mixed: Vec<_> = (0..4)
            .flat_map(|i| (4..8).map(move |j| vs(&[i, j])))
            .collect();
        mixed.sort();
        assert_eq!(minimum_x_sets(&k44, PowerDomination).sets, mixed);

        // K_{3,3}: a same-side pair leaves one vertex for a single force, so all 15 pairs
        let k33 = generate(CompleteBipartite(3, 3)).unwrap();
        let fam = minimum_x_sets(&k33, PowerDomination);
        assert_eq!(fam.len(), 15);
        assert!(fam.contains(vs(&[0, 1])));

        let star = generate(Star(4)).unwrap();
        assert_eq!(minimum_x_sets(&star, PowerDomination).sets, [vs(&[0])]);

        let k2 = generate(Complete(2)).unwrap();
        let two = disjoint_union(&k2, &k2).unwrap();
        assert_eq!(
            minimum_x_sets(&two, PowerDomination).sets,
            [vs(&[0, 2]), vs(&[1, 2]), vs(&[0, 3]), vs(&[1, 3])]
        );
    }

    #[test]
    fn minimal_families() {
        let k23 = generate(CompleteBipartite(2, 3)).unwrap();
        let fam = minimal_x_sets(&k23, PowerDomination);
        assert_eq!(
            fam.sets,
            [vs(&[0]), vs(&[1]), vs(&[2, 3]), vs(&[2, 4]), vs(&[3, 4])]
        );
        assert_eq!(minimal_x_sets(&generate(StarEdge(4)).unwrap(), PowerDomination).len(), 5);
        assert_eq!(minimal_x_sets(&generate(StarPendant(4)).unwrap(), PowerDomination).len(), 8);
    }

    #[test]
    fn families_match_brute_force() {
        for spec in [Path(6), Cycle(7), Wheel(6), StarEdge(5), K2tEdge(4), Grid(2, 4)] {
            let g = generate(spec).unwrap();
            for kind in PropertyKind::ALL {
                let all = oracle_sets(&g, kind);
                let min_card = all.iter().map(|s| s.count_ones()).min().unwrap();
                let minimum: Vec<u64> = all
                    .iter()
                    .copied()
                    .filter(|s| s.count_ones() == min_card)
                    .collect();
                let minimal: Vec<u64> = all
                    .iter()
                    .copied()
                    .filter(|&s| !all.iter().any(|&t| t != s && t & !s == 0))
                    .collect();
                let bits = |f: SetFamily| f.sets.iter().map(|s| s.bits()).collect::<Vec<_>>();
                assert_eq!(x_number(&g, kind), min_card as usize);
                assert_eq!(bits(minimum_x_sets(&g, kind)), minimum);
                assert_eq!(bits(minimal_x_sets(&g, kind)), minimal);
                assert_eq!(bits(x_sets_up_to(&g, kind, g.order())), all);
            }
        }
    }

    #[test]
    fn upper_numbers() {
        for n in 4..=8 {
            let star = generate(Star(n - 1)).unwrap();
            assert_eq!(upper_x(&star, PowerDomination), n - 2);
        }
        assert_eq!(upper_x(&generate(CompleteBipartite(3, 5)).unwrap(), PowerDomination), 4);
        assert_eq!(upper_x(&generate(PaperGn(4)).unwrap(), PowerDomination), 3);
    }

    #[test]
    fn vertex_covers() {
        let c5 = generate(Cycle(5)).unwrap();
        // oracle: brute force over all 2^5 subsets
        let covers: Vec<u64> = (0u64..32)
            .filter(|&s| c5.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
            .collect();
        let best = covers.iter().map(|s| s.count_ones()).min().unwrap();
        let expected: Vec<u64> = covers.into_iter().filter(|s| s.count_ones() == best).collect();
        let fam = min_vertex_covers(&c5);
        assert_eq!(fam.sets.iter().map(|s| s.bits()).collect::<Vec<_>>(), expected);
        assert_eq!((fam.len(), fam.sets[0].len()), (5, 3));

        let k2 = generate(Complete(2)).unwrap();
        assert_eq!(min_vertex_covers(&k2).sets, [vs(&[0]), vs(&[1])]);
        let p4 = generate(Path(4)).unwrap();
        assert_eq!(
            min_vertex_covers(&p4).sets,
            [vs(&[0, 2]), vs(&[1, 2]), vs(&[1, 3])]
        );
    }

    #[test]
    fn vertex_cover_correspondence_small() {
        for spec in [Path(4), Cycle(5), Complete(3), Star(3)] {
            let g = generate(spec).unwrap();
            let big = k23_expansion(&g).unwrap();
            assert_eq!(
                minimum_x_sets(&big, PowerDomination).sets,
                min_vertex_covers(&g).sets
            );
        }
    }

    #[test]
    fn axiom_examples() {
        let p4 = generate(Path(4)).unwrap();
        for kind in PropertyKind::ALL {
            let r = validate_axioms(&p4, kind).unwrap();
            assert!(r.passes(), "{kind:?}: {r:?}");
            assert_eq!(r.component_decomposition, None);
        }
        let c3 = generate(Cycle(3)).unwrap();
        let two = disjoint_union(&c3, &c3).unwrap();
        let r = validate_axioms(&two, PowerDomination).unwrap();
        assert_eq!(r.component_decomposition, Some(true));
        assert!(r.passes());

        let g = disjoint_union(&generate(Complete(2)).unwrap(), &generate(Complete(1)).unwrap())
            .unwrap();
        let r = validate_axioms(&g, PowerDomination).unwrap();
        assert!(r.isolated_forced && r.co_singletons.is_none());
        assert!(minimal_x_sets(&g, PowerDomination).sets.iter().all(|s| s.contains(2)));

        let big = generate(Path(21)).unwrap();
        assert!(matches!(
            validate_axioms(&big, Domination),
            Err(Error::OrderTooLargeForExhaustive { .. })
        ));
    }

    #[test]
    fn leaves_keep_minimum_sets() {
        // the center of K_{1,3} lies in every minimum PDS
        let g = generate(Path(3)).unwrap();
        let g = add_leaves(&g, LeafTarget::Vertex(1), 1).unwrap();
        let base = minimum_x_sets(&g, PowerDomination);
        assert_eq!(base.sets, [vs(&[1])]);
        let more = add_leaves(&g, LeafTarget::Vertex(1), 2).unwrap();
        assert_eq!(minimum_x_sets(&more, PowerDomination).sets, base.sets);
    }
}
