use proptest::prelude::*;

use clar::generators::{named, random_instance, SizeParams, NAMES};
use clar::io::{instance_to_json, parse_instance};
use clar::matching::has_perfect_matching;
use clar::plane_graph::check_invariants;
use clar::solver::subdivide;
use clar::tjoin::odd_join_of;
use clar::PlaneGraph;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn assert_lifted_faces_traced(g: &PlaneGraph) {
    let join = odd_join_of(g).unwrap();
    let sub = subdivide(g, &join.edges);
    let traced = sub.to_plane_graph().unwrap();
    assert_eq!(traced.n(), sub.vertex_count());
    assert_eq!(traced.m(), sub.edge_count());
    assert_eq!(traced.face_count(), g.face_count());
    assert!(traced.is_bipartite(), "every face of G' is even");
    for col in &sub.face_columns {
        let want = sorted(col.vertices.clone());
        assert!(
            traced
                .faces()
                .iter()
                .any(|f| sorted(f.vertices.clone()) == want),
            "lifted face {} not found by tracing",
            col.face
        );
    }
}

#[test]
fn named_instances_satisfy_invariants() {
    for name in NAMES
        .iter()
        .filter(|n| !n.contains('('))
        .chain(["grid(4,5)", "cycle(6)", "nanotube(3)"].iter())
    {
        let g = named(name).unwrap();
        assert!(
            check_invariants(&g).is_empty(),
            "{name}: {:?}",
            check_invariants(&g)
        );
        assert_eq!(g.n() + g.face_count(), g.m() + 2, "{name}");
        let back = parse_instance(&instance_to_json(&g)).unwrap();
        assert_eq!(back.rotation_lists(), g.rotation_lists());
        assert_eq!(back.outer_face(), g.outer_face());
        if g.odd_faces().len() <= 12 {
            assert_lifted_faces_traced(&g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_instances_are_valid_and_round_trip(seed in 0u64..1_000_000) {
        let g = random_instance(seed, &SizeParams::default()).unwrap();
        prop_assert!(check_invariants(&g).is_empty());
        prop_assert!(g.n() <= 16);
        let json = instance_to_json(&g);
        let back = parse_instance(&json).unwrap();
        prop_assert_eq!(back.rotation_lists(), g.rotation_lists());
        prop_assert_eq!(instance_to_json(&back), json);
        let lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        let back_lens: Vec<usize> = back.faces().iter().map(|f| f.len()).collect();
        prop_assert_eq!(lens, back_lens);
    }

    #[test]
    fn subdivision_matches_independent_face_tracing(seed in 0u64..1_000_000) {
        let g = random_instance(seed, &SizeParams::default()).unwrap();
        assert_lifted_faces_traced(&g);
    }

    #[test]
    fn dual_degrees_are_face_lengths(seed in 0u64..1_000_000) {
        let g = random_instance(seed, &SizeParams::default()).unwrap();
        let dual = g.dual();
        for f in g.faces() {
            prop_assert_eq!(dual.degree(f.id), f.len());
        }
        prop_assert_eq!(dual.odd_degree_nodes(), g.odd_faces());
    }
}

#[test]
fn same_seed_same_instance() {
    let p = SizeParams::default();
    for seed in [0, 1, 99, 12345] {
        assert_eq!(
            instance_to_json(&random_instance(seed, &p).unwrap()),
            instance_to_json(&random_instance(seed, &p).unwrap())
        );
    }
}

#[test]
fn five_hundred_seeds_validate_and_are_matchable() {
    let p = SizeParams::default();
    for seed in 0..500 {
        let g = random_instance(seed, &p).unwrap();
        assert!(check_invariants(&g).is_empty(), "seed {seed}");
        assert!(has_perfect_matching(&g.to_graph()), "seed {seed}");
    }
}
