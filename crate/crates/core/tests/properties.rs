use proptest::prelude::*;

use stacked::complex::{is_subset, SimplicialComplex};
use stacked::generators::random_stacked;
use stacked::maps::{blocks_scattered, facet_to_vertex, restriction_compatible, vertex_to_facet};
use stacked::oracle::EnumerationSpec;
use stacked::paths::{reduce_walk, Gallery};
use stacked::textio::{emit_complex, emit_partition, parse_complex, parse_partition};
use stacked::{GroundKind, Partition};

fn stacked_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=3, 1usize..=9, any::<u64>())
        .prop_map(|(d, n, seed)| random_stacked(d, n, seed).unwrap())
}

fn gallery() -> impl Strategy<Value = Gallery> {
    stacked_complex().prop_map(|x| Gallery::new(x).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complex_text_round_trip(x in stacked_complex()) {
        let text = emit_complex(&x);
        let back = parse_complex(&text).unwrap();
        prop_assert_eq!(emit_complex(&back), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn partition_text_round_trip(x in stacked_complex(), tags in prop::collection::vec(0usize..4, 20)) {
        for (kind, size) in [
            (GroundKind::Vertices, x.vertex_count()),
            (GroundKind::Facets, x.facet_count()),
        ] {
            let p = Partition::from_assignment(kind, &tags[..size]);
            let text = emit_partition(&x, &p);
            prop_assert_eq!(parse_partition(&text, &x, Some(kind)).unwrap(), p);
        }
    }

    #[test]
    fn face_paths_keep_ends_out_of_interior_cuts(g in gallery()) {
        let x = g.complex();
        for v in 0..x.vertex_count() {
            for w in 0..x.vertex_count() {
                if let Ok(fp) = g.face_path(&[v], &[w]) {
                    prop_assert!(fp.satisfies_invariants(x));
                }
            }
        }
        for f in 0..x.facet_count() {
            for (ridge, _) in x.ridges() {
                let fp = g.face_path(x.facet(f), ridge).unwrap();
                prop_assert!(fp.satisfies_invariants(x));
            }
        }
    }

    #[test]
    fn new_vertices_lie_on_one_facet(g in gallery(), pick in any::<prop::sample::Index>()) {
        let x = g.complex();
        let ridges: Vec<Vec<usize>> = x.ridges().map(|(r, _)| r.to_vec()).collect();
        let ridge = &ridges[pick.index(ridges.len())];
        let mut previous = g.distance_neighborhood(ridge, 0).unwrap();
        for m in 1..=x.facet_count() {
            let nb = g.distance_neighborhood(ridge, m).unwrap();
            for (v, containing) in &nb.new_vertices {
                prop_assert_eq!(containing.len(), 1);
                let rest: Vec<usize> =
                    x.facet(containing[0]).iter().copied().filter(|u| u != v).collect();
                prop_assert!(is_subset(&rest, &previous.vertices));
            }
            prop_assert!(is_subset(&previous.facets, &nb.facets));
            previous = nb;
        }
        prop_assert_eq!(previous.facets.len(), x.facet_count());
    }

    #[test]
    fn walks_reduce_to_the_unique_path(g in gallery(), steps in prop::collection::vec(any::<prop::sample::Index>(), 0..30)) {
        let x = g.complex();
        let dual = x.dual_adjacency();
        let mut walk = vec![0];
        for s in &steps {
            let nbrs = dual.neighbors(*walk.last().unwrap());
            if nbrs.is_empty() {
                break;
            }
            walk.push(nbrs[s.index(nbrs.len())]);
        }
        let reduced = reduce_walk(x, &walk).unwrap();
        prop_assert!(reduced.is_path(x));
        prop_assert_eq!(reduced, g.facet_path(0, *walk.last().unwrap()));
    }

    #[test]
    fn maps_are_mutually_inverse(g in gallery(), r in 1usize..=3, s in 1usize..=2) {
        let d = g.complex().dim();
        for q in EnumerationSpec::facets(&g, r, s).enumerate().take(50) {
            let p = facet_to_vertex(&g, &q).unwrap();
            prop_assert_eq!(p.block_count(), r + d);
            prop_assert!(blocks_scattered(&g, &p, s + 1));
            prop_assert_eq!(vertex_to_facet(&g, &p).unwrap(), q);
        }
    }

    #[test]
    fn restriction_to_every_neighborhood(g in gallery(), tags in prop::collection::vec(0usize..3, 9)) {
        let x = g.complex();
        let q = Partition::from_assignment(GroundKind::Facets, &tags[..x.facet_count()]);
        for (ridge, _) in x.ridges() {
            for m in 0..=x.facet_count() {
                prop_assert!(restriction_compatible(&g, &q, ridge, m).unwrap());
            }
        }
    }

    #[test]
    fn restrict_is_monotone(x in stacked_complex(), cut in 0usize..12) {
        let small: Vec<usize> = (0..x.vertex_count().min(cut)).collect();
        let large: Vec<usize> = (0..x.vertex_count()).collect();
        prop_assert!(is_subset(&x.restrict(&small), &x.restrict(&large)));
        prop_assert_eq!(x.restrict(&large).len(), x.facet_count());
    }
}
