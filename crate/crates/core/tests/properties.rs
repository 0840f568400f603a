//! Structural invariants, checked with proptest.

mod common;

use num_traits::ToPrimitive;
use pathcover_core::constructive::{spine_cover_bound, spine_region};
use pathcover_core::families::FamilySpec::{self, *};
use pathcover_core::freeness::target_family;
use pathcover_core::*;
use proptest::prelude::*;

fn small_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for k in 1..=7 {
        specs.extend([Complete(k), Path(k), Star(k), KStar(k)]);
        if k >= 3 {
            specs.push(Cycle(k));
        }
    }
    for m in 1..=5 {
        for n in 1..=5 {
            specs.extend([F1(m, n), F2(m, n), F3(m, n), F4(m, n)]);
        }
    }
    for s in 2..=3 {
        for t in 3..=5 {
            specs.extend([H1(s, t), H2(s, t), H3(s, t), H4(s, t)]);
        }
    }
    specs
}

#[test]
fn generators_match_closed_forms() {
    for spec in small_specs() {
        let graph = spec.generate().unwrap();
        assert_eq!((graph.order(), graph.size()), spec.order_and_size().unwrap(), "{spec}");
        let reparsed: FamilySpec = spec.to_string().parse().unwrap();
        assert_eq!(reparsed, spec);
    }
}

#[test]
fn variant_families_add_the_stated_edges() {
    let diff = |a: &Graph, b: &Graph| -> Vec<(usize, usize)> {
        b.edges().filter(|&(u, v)| !a.has_edge(u, v)).collect()
    };
    for m in 1..=4 {
        for n in 1..=4 {
            let (f1, f2) = (F1(m, n).generate().unwrap(), F2(m, n).generate().unwrap());
            assert_eq!(diff(&f1, &f2).len(), 1);
            assert!(f1.edges().all(|(u, v)| f2.has_edge(u, v)));
            assert!(f2.has_edge(families::f_y(1), families::f_z(m, 1)));
            let (f3, f4) = (F3(m, n).generate().unwrap(), F4(m, n).generate().unwrap());
            assert_eq!(diff(&f3, &f4), diff(&f1, &f2));
            assert!(f1.is_connected() && f2.is_connected() && f3.is_connected() && f4.is_connected());
        }
    }
    for s in 2..=4 {
        for t in 3..=5 {
            let (h1, h2) = (H1(s, t).generate().unwrap(), H2(s, t).generate().unwrap());
            let (h3, h4) = (H3(s, t).generate().unwrap(), H4(s, t).generate().unwrap());
            assert_eq!(diff(&h1, &h2).len(), s - 1);
            assert_eq!(diff(&h1, &h2), diff(&h3, &h4));
            assert!([&h1, &h2, &h3, &h4].iter().all(|h| h.is_connected()));
        }
    }
    assert!(is_isomorphic(&Star(3).generate().unwrap(), &F1(1, 1).generate().unwrap()));
    assert!(is_isomorphic(&KStar(2).generate().unwrap(), &Path(4).generate().unwrap()));
    assert!(is_isomorphic(&F3(1, 1).generate().unwrap(), &Cycle(4).generate().unwrap()));
}

#[test]
fn ramsey_and_layer_bounds() {
    for a in 2..=8 {
        for b in 2..=8 {
            let v = |x, y| ramsey_upper(x, y).unwrap().value;
            assert_eq!(v(a, b), v(a - 1, b) + v(a, b - 1));
            assert!(v(a, b) >= a.max(b).into());
        }
    }
    for n in 2..=4 {
        let seq = alpha_sequence(n).unwrap();
        for i in 1..seq.len() {
            // the Ramsey helper takes machine-word arguments
            let Some(prev) = seq[i - 1].value().to_usize().filter(|&v| v < 1 << 40) else {
                break;
            };
            let r = ramsey_upper(n, prev + 1).unwrap().value;
            assert_eq!(*seq[i].value(), r * (n - 1) - 1u32);
            if i >= 2 {
                assert!(seq[i - 1].value() <= seq[i].value());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(graph in common::arb_graph(0, 70)) {
        let text = to_graph6(&graph);
        prop_assert_eq!(from_graph6(&text).unwrap(), graph);
    }

    #[test]
    fn set_operations(graph in common::arb_graph(1, 12), bits in any::<u16>()) {
        let x: VertexSet = (0..graph.order()).filter(|&v| bits >> v & 1 == 1).collect();
        let nx = graph.neighborhood(&x).unwrap();
        prop_assert!(nx.is_disjoint(&x));
        for v in nx.iter() {
            prop_assert!(x.iter().any(|u| graph.has_edge(u, v)));
        }
        prop_assert_eq!(graph.induced_subgraph(&graph.vertices()).unwrap(), graph.clone());
        let comps = graph.components();
        let mut union = VertexSet::new();
        for c in &comps {
            prop_assert!(union.is_disjoint(c));
            union.union_with(c);
        }
        prop_assert_eq!(union, graph.vertices());
        prop_assert_eq!(graph.is_connected(), comps.len() == 1);
    }

    #[test]
    fn cover_chain_and_greedy(graph in common::arb_graph(1, 9)) {
        let pc = path_cover_number(&graph).unwrap().0;
        let pp = path_partition_number(&graph).unwrap().0;
        let alpha = independence_number(&graph);
        prop_assert!(pc <= pp && pp <= alpha);
        prop_assert_eq!(has_hamiltonian_path(&graph), pp == 1);
        let greedy = greedy_path_partition(&graph);
        prop_assert!(greedy.validate(&graph).is_ok());
        prop_assert!(greedy.len() <= alpha);
        prop_assert!(graph.is_independent(&solvers::designated_ends(&greedy)));
        let cycles = greedy_cycle_partition(&graph);
        prop_assert!(cycles.validate(&graph).is_ok());
        let r = ramsey_upper(alpha + 1, alpha + 1).unwrap().value;
        prop_assert!(num_bigint::BigUint::from(cycles.len() + 1) <= r);
        prop_assert!(cycle_partition_number(&graph).unwrap().0 <= cycles.len());
    }

    #[test]
    fn subadditivity(graph in common::arb_graph(2, 9), labels in proptest::collection::vec(0usize..3, 9)) {
        let mut parts = vec![VertexSet::new(); 3];
        for v in 0..graph.order() {
            parts[labels[v]].insert(v);
        }
        let (mut pc_sum, mut pp_sum) = (0, 0);
        for part in parts.iter().filter(|p| !p.is_empty()) {
            let sub = graph.induced_subgraph(part).unwrap();
            pc_sum += path_cover_number(&sub).unwrap().0;
            pp_sum += path_partition_number(&sub).unwrap().0;
        }
        prop_assert!(path_cover_number(&graph).unwrap().0 <= pc_sum);
        prop_assert!(path_partition_number(&graph).unwrap().0 <= pp_sum);
    }

    #[test]
    fn induced_containment_is_monotone(
        graph in common::arb_graph(1, 8),
        pattern in common::arb_graph(1, 4),
        extra in common::arb_graph(0, 3),
    ) {
        prop_assert!(find_induced(&graph, &Graph::empty(1)).is_some());
        let bigger = graph.disjoint_union(&extra);
        if find_induced(&graph, &pattern).is_some() {
            prop_assert!(find_induced(&bigger, &pattern).is_some());
        }
    }

    #[test]
    fn family_order(
        a in proptest::collection::vec(common::arb_graph(1, 4), 1..3),
        b in proptest::collection::vec(common::arb_graph(1, 5), 1..3),
        c in proptest::collection::vec(common::arb_graph(1, 6), 1..3),
        sample in proptest::collection::vec(common::arb_graph(1, 9), 20),
    ) {
        prop_assert!(family_leq(&a, &a).unwrap());
        if family_leq(&a, &b).unwrap() && family_leq(&b, &c).unwrap() {
            prop_assert!(family_leq(&a, &c).unwrap());
        }
        if family_leq(&a, &b).unwrap() {
            for g in &sample {
                if is_family_free(g, &a) {
                    prop_assert!(is_family_free(g, &b));
                }
            }
        }
    }

    #[test]
    fn decomposition_invariants(graph in common::arb_connected_graph(1, 12), n in 2usize..=4) {
        let d = decompose(&graph, n).unwrap();
        let spine = d.spine_set();
        prop_assert!(d.layers[0].is_subset(&spine));
        let mut seen = spine.union(&d.attached);
        prop_assert!(spine.is_disjoint(&d.attached));
        for layer in d.layers.iter().skip(1) {
            prop_assert!(seen.is_disjoint(layer));
            seen.union_with(layer);
        }
        prop_assert_eq!(seen == graph.vertices(), d.predicates.layers_terminate);
        let mut slot_union = VertexSet::new();
        for s in &d.slots {
            prop_assert!(slot_union.is_disjoint(&s.members));
            slot_union.union_with(&s.members);
            prop_assert_eq!(s.next.union(&s.skip), s.members.clone());
            prop_assert!(s.next.is_disjoint(&s.skip));
        }
        prop_assert_eq!(slot_union, d.attached.clone());
    }

    #[test]
    fn pipeline_on_free_graphs(graph in common::arb_connected_graph(1, 10)) {
        let n = 3;
        if is_family_free(&graph, &target_family(Characterization::A1, n).unwrap()) {
            let d = decompose(&graph, n).unwrap();
            prop_assert!(d.predicates.all());
            let spine = spine_cover(&graph, &d).unwrap();
            prop_assert!(spine.len() <= spine_cover_bound(n));
            prop_assert!(spine.validate_on(&graph, &spine_region(&d)).is_ok());
            let (sys, cert) = bounded_path_cover(&graph, n, false).unwrap();
            prop_assert!(sys.validate(&graph).is_ok());
            prop_assert!(cert.holds());
            prop_assert!(sys.len() >= path_cover_number(&graph).unwrap().0);
        }
    }
}
