mod common;

use corona_invariants::graph::{complete, encode_graph6};
use corona_invariants::harness::{census_graphs, CensusKind};
use corona_invariants::{
    corona, geodetic_number, k_geodetic_number, steiner_distance, steiner_number, SearchOptions,
    VertexSet,
};

#[test]
fn census_files_are_connected_and_distinct() {
    for n in 1..=7 {
        let connected = census_graphs(CensusKind::Connected, n).unwrap();
        let all = census_graphs(CensusKind::All, n).unwrap();
        assert!(connected.iter().all(|g| g.order() == n && g.is_connected()));
        assert!(all.iter().all(|g| g.order() == n));
        assert_eq!(
            all.iter().filter(|g| g.is_connected()).count(),
            connected.len()
        );
        let mut codes: Vec<String> = all.iter().map(|g| encode_graph6(g).unwrap()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }
}

#[test]
fn extreme_vertices_match_double_loop() {
    for g in common::all_census(1..=7) {
        let want: Vec<usize> = (0..g.order())
            .filter(|&v| {
                let nb: Vec<usize> = (0..g.order()).filter(|&u| g.has_edge(u, v)).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            })
            .collect();
        assert_eq!(g.extreme_vertices().to_vec(), want);
    }
}

#[test]
fn geodetic_number_bounded_by_k_geodetic_numbers() {
    let opts = SearchOptions::geodetic();
    for g in common::connected_census(1..=7) {
        let gv = geodetic_number(&g, &opts).unwrap().value;
        for k in 2..=g.diameter().unwrap() {
            assert!(gv <= k_geodetic_number(&g, k, &opts).unwrap().value);
        }
    }
}

#[test]
fn full_order_exactly_for_complete_graphs() {
    for g in common::connected_census(1..=7) {
        let n = g.order();
        let gv = geodetic_number(&g, &SearchOptions::geodetic()).unwrap().value;
        let sv = steiner_number(&g, &SearchOptions::steiner()).unwrap().value;
        assert_eq!(gv == n, g.is_complete());
        assert_eq!(sv == n, g.is_complete());
    }
}

#[test]
fn hub_never_lowers_the_steiner_number() {
    let opts = SearchOptions::steiner();
    for g in common::connected_census(1..=6) {
        let (k1g, _) = corona(&complete(1).unwrap(), &g).unwrap();
        assert!(steiner_number(&k1g, &opts).unwrap().value >= steiner_number(&g, &opts).unwrap().value);
    }
}

#[test]
fn two_terminal_steiner_distance_is_distance() {
    for g in common::connected_census(1..=7) {
        let d = g.distances();
        for u in 0..g.order() {
            for v in 0..g.order() {
                let w = VertexSet::from_vertices(g.order(), [u, v]).unwrap();
                assert_eq!(Some(steiner_distance(&g, &w).unwrap()), d.get(u, v));
            }
        }
    }
}
