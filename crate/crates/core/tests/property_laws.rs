mod common;

use common::{all_graphs, bits, graphs, graphs_without_isolated, kinds, Naive};
use pdrecon_core::graph;
use pdrecon_core::properties::{self, FamilyRole, PropertyKind};
use pdrecon_core::VertexSet;
use proptest::prelude::*;

fn obs_bits(obs: &[bool]) -> u64 {
    obs.iter().enumerate().filter(|(_, &b)| b).fold(0, |acc, (v, _)| acc | 1 << v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_oracle(g in graphs(1, 9), s in any::<u64>(), kind in kinds()) {
        let s = s & VertexSet::full(g.order()).bits();
        let naive = Naive::new(&g);
        prop_assert_eq!(
            properties::is_x_set(&g, VertexSet::from_bits(s), kind).unwrap(),
            naive.is_x_set(s, kind)
        );
    }

    #[test]
    fn families_match_oracle(g in graphs(1, 9), kind in kinds()) {
        let naive = Naive::new(&g);
        let minimal = properties::minimal_x_sets(&g, kind);
        prop_assert_eq!(minimal.role, FamilyRole::Minimal);
        prop_assert_eq!(bits(&minimal.sets), naive.minimal(kind));
        prop_assert_eq!(bits(&properties::minimum_x_sets(&g, kind).sets), naive.minimum(kind));
        let min = naive.minimum(kind)[0].count_ones() as usize;
        prop_assert_eq!(properties::x_number(&g, kind), min);
        let upper = naive.minimal(kind).iter().map(|s| s.count_ones()).max().unwrap() as usize;
        prop_assert_eq!(properties::upper_x(&g, kind), upper);
        let k = min + 1;
        let up_to: Vec<u64> = naive.x_sets(kind).into_iter().filter(|s| s.count_ones() as usize <= k).collect();
        prop_assert_eq!(bits(&properties::x_sets_up_to(&g, kind, k).sets), up_to);
    }

    /// One force at a time reaches the same fixpoint as simultaneous rounds.
    #[test]
    fn round_splitting(g in graphs(1, 12), s in any::<u64>()) {
        let s = s & VertexSet::full(g.order()).bits();
        let naive = Naive::new(&g);
        let start = naive.dominated(s);
        let fix = obs_bits(&naive.simultaneous_closure(start.clone()));
        prop_assert_eq!(obs_bits(&naive.sequential_closure(start)), fix);
        let trace = properties::propagate(&g, VertexSet::from_bits(s)).unwrap();
        prop_assert_eq!(trace.fixpoint().bits(), fix);
        prop_assert_eq!(trace.success, s != 0 && fix == VertexSet::full(g.order()).bits());

        let members: Vec<bool> = (0..g.order()).map(|v| s >> v & 1 == 1).collect();
        let zf = obs_bits(&naive.sequential_closure(members));
        prop_assert_eq!(properties::zero_forcing_closure(&g, VertexSet::from_bits(s)).unwrap().bits(), zf);
    }

    /// Layers grow strictly and each round adds exactly the vertices a naive round adds.
    #[test]
    fn trace_layers(g in graphs(1, 12), s in any::<u64>()) {
        let s = VertexSet::from_bits(s & VertexSet::full(g.order()).bits());
        let t = properties::propagate(&g, s).unwrap();
        prop_assert_eq!(t.layers[0], s);
        prop_assert_eq!(t.rounds() + 1, t.layers.len());
        if t.layers.len() > 1 {
            prop_assert_eq!(t.layers[1], g.closed_neighborhood(s));
        }
        for w in t.layers.windows(2) {
            prop_assert!(w[0].is_subset(w[1]) && w[0] != w[1]);
        }
        for (i, layer) in t.new_per_round.iter().enumerate().skip(1) {
            prop_assert_eq!(*layer, t.layers[i] - t.layers[i - 1]);
        }
    }

    #[test]
    fn monotone(g in graphs(1, 12), s in any::<u64>(), extra in any::<u64>(), kind in kinds()) {
        let full = VertexSet::full(g.order()).bits();
        let s = VertexSet::from_bits(s & full);
        let t = VertexSet::from_bits((s.bits() | extra) & full);
        if properties::is_x_set(&g, s, kind).unwrap() {
            prop_assert!(properties::is_x_set(&g, t, kind).unwrap());
        }
    }

    #[test]
    fn minimal_sets_form_antichain(g in graphs(1, 10), kind in kinds()) {
        let fam = properties::minimal_x_sets(&g, kind).sets;
        for (i, a) in fam.iter().enumerate() {
            for b in &fam[i + 1..] {
                prop_assert!(!a.is_subset(*b) && !b.is_subset(*a));
            }
        }
    }

    #[test]
    fn number_bounds(g in graphs_without_isolated(2, 12), kind in kinds()) {
        let x = properties::x_number(&g, kind);
        let upper = properties::upper_x(&g, kind);
        prop_assert!(1 <= x && x <= upper && upper < g.order());
        prop_assert!(properties::x_number(&g, PropertyKind::PowerDomination) <= properties::x_number(&g, PropertyKind::Domination));
        prop_assert!(properties::x_number(&g, PropertyKind::PowerDomination) <= properties::x_number(&g, PropertyKind::ZeroForcing));
    }

    /// The complement of a minimal power dominating set dominates and covers it.
    #[test]
    fn complement_of_minimal_dominates(g in graphs_without_isolated(2, 10)) {
        let full = g.vertices();
        for s in properties::minimal_x_sets(&g, PropertyKind::PowerDomination).sets {
            let rest = full - s;
            prop_assert!(properties::is_x_set(&g, rest, PropertyKind::Domination).unwrap());
            let open: VertexSet = rest.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v));
            prop_assert!(s.is_subset(open));
        }
    }

    #[test]
    fn vertex_cover_correspondence(g in graphs(2, 8).prop_filter("small and connected", |g| g.size() <= 14 && g.is_connected())) {
        let h = graph::k23_expansion(&g).unwrap();
        let covers = properties::min_vertex_covers(&g);
        prop_assert_eq!(bits(&covers.sets), Naive::new(&g).min_vertex_covers());
        prop_assert_eq!(properties::minimum_x_sets(&h, PropertyKind::PowerDomination).sets, covers.sets);
    }
}

#[test]
fn exhaustive_small_orders() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let naive = Naive::new(&g);
            for kind in PropertyKind::ALL {
                assert_eq!(bits(&properties::minimal_x_sets(&g, kind).sets), naive.minimal(kind), "{kind:?} {:?}", g.edges());
                let report = properties::validate_axioms(&g, kind).unwrap();
                assert!(report.passes(), "{kind:?} {:?}: {report:?}", g.edges());
            }
        }
    }
}

#[test]
fn complement_property_exhaustive() {
    for n in 2..=6 {
        for g in all_graphs(n).filter(|g| !g.has_isolated()) {
            for s in properties::minimal_x_sets(&g, PropertyKind::PowerDomination).sets {
                assert!(properties::is_x_set(&g, g.vertices() - s, PropertyKind::Domination).unwrap());
            }
        }
    }
}
