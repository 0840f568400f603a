//! The bounded cover pipeline on graphs with vertices attached to the middle
//! of a long spine, checked against the exact solvers.

use pathcover_core::constructive::{spine_cover_bound, spine_region};
use pathcover_core::families::FamilySpec::*;
use pathcover_core::freeness::target_family;
use pathcover_core::sample::{distinct_graphs, random_graph, Model};
use pathcover_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn attached_sweep(n: usize, orders: std::ops::RangeInclusive<usize>, count: usize) -> Vec<Graph> {
    let family = target_family(Characterization::A1, n).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
    distinct_graphs(
        || {
            let order = rng.gen_range(orders.clone());
            let p = rng.gen_range(0.0..0.1);
            random_graph(&mut rng, order, p, Model::PathBackbone)
        },
        |g| {
            g.is_connected()
                && is_family_free(g, &family)
                && !decompose(g, n).unwrap().attached.is_empty()
        },
        count,
        200_000,
    )
}

fn check(n: usize, graphs: &[Graph]) -> usize {
    let extra = [F3(n, n).generate().unwrap(), F4(n, n).generate().unwrap()];
    let mut partitions = 0;
    for g in graphs {
        let g6 = to_graph6(g);
        let d = decompose(g, n).unwrap();
        assert!(d.predicates.all(), "{g6}");
        let spine = spine_cover(g, &d).unwrap_or_else(|e| panic!("{g6}: {e}"));
        spine.validate_on(g, &spine_region(&d)).unwrap();
        assert!(spine.len() <= spine_cover_bound(n), "{g6}");
        let (cover, cert) = bounded_path_cover(g, n, true).unwrap_or_else(|e| panic!("{g6}: {e}"));
        cover.validate(g).unwrap();
        assert!(cert.holds());
        assert!(cover.len() >= path_cover_number(g).unwrap().0);
        if is_family_free(g, &extra) {
            partitions += 1;
            let (part, cert) = bounded_path_partition(g, n, true).unwrap_or_else(|e| panic!("{g6}: {e}"));
            part.validate(g).unwrap();
            assert_eq!(cert.spine_part_count, 1);
            assert!(cert.holds());
            assert!(part.len() >= path_partition_number(g).unwrap().0);
        }
    }
    partitions
}

#[test]
fn attached_vertices_n3() {
    let graphs = attached_sweep(3, 9..=12, 150);
    assert!(graphs.len() >= 100, "only {} instances", graphs.len());
    let partitions = check(3, &graphs);
    assert!(partitions > 0);
}

#[test]
fn attached_vertices_n4() {
    let graphs = attached_sweep(4, 12..=14, 30);
    assert!(graphs.len() >= 20, "only {} instances", graphs.len());
    check(4, &graphs);
}

#[test]
fn non_free_inputs_are_reported() {
    // two independent ears on the same spine edge form a claw with u_4
    let mut g = Path(9).generate().unwrap().disjoint_union(&Graph::empty(2));
    for y in [9, 10] {
        g.add_edge(y, 4).unwrap();
        g.add_edge(y, 5).unwrap();
    }
    assert!(matches!(bounded_path_cover(&g, 3, true), Err(Error::NotFree { .. })));
    assert!(matches!(
        bounded_path_cover(&g, 3, false),
        Err(Error::HypothesisViolated { .. })
    ));
}
