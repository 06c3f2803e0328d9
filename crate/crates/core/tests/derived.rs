//! Small reference values, each computed by the brute-force oracles and
//! frozen here; the engines must reproduce them.

mod common;

use corona_invariants::graph::{complete, cycle, empty, encode_graph6, parse_graph6, path, wheel};
use corona_invariants::harness::{
    census_graphs, check_corona_g_le_s, check_corona_structure_geo, check_diam2_steiner_geodetic,
    check_geo_bounds, check_geo_corona_eq, check_geo_lower_minus1, check_steiner_corona_eq,
    CensusKind, CheckConfig, Verdict,
};
use corona_invariants::{
    corona, geodetic_number, interval, k_geodetic_number, steiner_distance, steiner_hull,
    steiner_number, GeodesicIndex, SearchOptions, VertexSet,
};

fn vs(n: usize, v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, v.iter().copied()).unwrap()
}

#[test]
fn graph6_examples() {
    let star = parse_graph6("D?{").unwrap();
    let edges: Vec<_> = star.edges().collect();
    assert_eq!(edges, [(0, 4), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
    assert_eq!(encode_graph6(&complete(2).unwrap()).unwrap(), "A_");
}

#[test]
fn interval_examples() {
    let c4 = cycle(4).unwrap();
    assert_eq!(common::interval_by_paths(&c4, 0, 2), [0, 1, 2, 3]);
    assert_eq!(interval(&c4.distances(), 0, 2).unwrap().to_vec(), [0, 1, 2, 3]);
    let c6 = cycle(6).unwrap();
    let idx = GeodesicIndex::new(&c6).unwrap();
    assert_eq!(idx.closure_mask(vs(6, &[0, 3]).mask()), 0b111111);
    assert_eq!(common::interval_by_paths(&c6, 0, 3), [0, 1, 2, 3, 4, 5]);
}

#[test]
fn geodetic_examples() {
    let opts = SearchOptions::geodetic();
    let c4 = cycle(4).unwrap();
    assert_eq!(common::geodetic_number(&c4), 2);
    assert_eq!(geodetic_number(&c4, &opts).unwrap().value, 2);

    let p4 = path(4).unwrap();
    assert_eq!(common::k_geodetic_number(&p4, 2), 3);
    assert_eq!(k_geodetic_number(&p4, 2, &opts).unwrap().value, 3);
    assert_eq!(common::k_geodetic_number(&c4, 2), 2);
    assert_eq!(k_geodetic_number(&c4, 2, &opts).unwrap().value, 2);

    let p5 = path(5).unwrap();
    assert_eq!(common::k_geodetic_number(&p5, 2), 3);
    assert_eq!(k_geodetic_number(&p5, 2, &opts).unwrap().value, 3);

    // F_{1,2} is the triangle
    let (f2, _) = corona(&complete(1).unwrap(), &path(2).unwrap()).unwrap();
    assert_eq!(common::geodetic_number(&f2), 3);
}

#[test]
fn corona_geodetic_examples() {
    let cfg = CheckConfig::default();
    let (c3n2, _) = corona(&cycle(3).unwrap(), &empty(2).unwrap()).unwrap();
    assert_eq!(common::geodetic_number(&c3n2), 6);
    let (k1n2, _) = corona(&complete(1).unwrap(), &empty(2).unwrap()).unwrap();
    assert_eq!(common::geodetic_number(&k1n2), 2);
    let r = check_geo_corona_eq(&cycle(3).unwrap(), &empty(2).unwrap(), &cfg);
    assert_eq!((r.verdict, r.value("g_product")), (Verdict::PASS, Some(6)));

    let (k2c4, _) = corona(&complete(2).unwrap(), &cycle(4).unwrap()).unwrap();
    assert_eq!(common::geodetic_number(&k2c4), 4);
    let r = check_geo_bounds(&complete(2).unwrap(), &cycle(4).unwrap(), &cfg);
    assert_eq!((r.verdict, r.value("g_product")), (Verdict::PASS, Some(4)));

    let r = check_corona_structure_geo(&cycle(3).unwrap(), &cycle(4).unwrap(), &cfg);
    assert_eq!(r.verdict, Verdict::PASS);
    let w1_4 = wheel(4).unwrap();
    let d = common::floyd_warshall(&w1_4);
    let witness = &r.witness.as_ref().unwrap()[0];
    for i in 0..3 {
        let local: Vec<usize> = witness
            .iter()
            .filter(|&&v| (3 + 4 * i..3 + 4 * (i + 1)).contains(&v))
            .map(|&v| v - (3 + 4 * i) + 1)
            .collect();
        assert!(common::is_geodetic(&w1_4, &d, &local), "copy {i}: {local:?}");
    }

    let r = check_geo_lower_minus1(&complete(2).unwrap(), &path(5).unwrap(), &cfg);
    assert_eq!(r.verdict, Verdict::PASS);
    assert_eq!(r.value("g2_h"), Some(3));
}

#[test]
fn steiner_examples() {
    let c6 = cycle(6).unwrap();
    assert_eq!(common::steiner(&c6, &[0, 2, 4]).0, 4);
    assert_eq!(steiner_distance(&c6, &vs(6, &[0, 2, 4])).unwrap(), 4);
    assert_eq!(common::steiner(&c6, &[0, 3]).1, [0, 1, 2, 3, 4, 5]);
    assert_eq!(steiner_hull(&c6, &vs(6, &[0, 3])).unwrap().len(), 6);

    let opts = SearchOptions::steiner();
    for (g, s) in [(cycle(4).unwrap(), 2), (cycle(5).unwrap(), 3)] {
        assert_eq!(common::steiner_number(&g), s);
        assert_eq!(steiner_number(&g, &opts).unwrap().value, s);
    }
}

#[test]
fn corona_steiner_examples() {
    let cfg = CheckConfig::default();
    let (p2p2, _) = corona(&path(2).unwrap(), &path(2).unwrap()).unwrap();
    assert_eq!(common::steiner_number(&p2p2), 4);
    let r = check_steiner_corona_eq(&path(2).unwrap(), &path(2).unwrap(), &cfg);
    assert_eq!(r.value("s_product"), Some(4));
    assert_eq!(r.value("s_product_unpruned"), Some(4));

    let (c3p2, _) = corona(&cycle(3).unwrap(), &path(2).unwrap()).unwrap();
    assert_eq!(common::steiner_number(&c3p2), 6);
    let r = check_corona_g_le_s(&path(2).unwrap(), &path(3).unwrap(), &cfg);
    assert_eq!((r.value("g_product"), r.value("s_product")), (Some(4), Some(6)));
}

#[test]
fn diameter_two_examples() {
    let c4 = cycle(4).unwrap();
    let d = common::floyd_warshall(&c4);
    let steiner_sets: Vec<_> = common::subsets(4)
        .filter(|w| common::is_steiner_set(&c4, w))
        .collect();
    assert!(steiner_sets.iter().all(|w| common::is_geodetic(&c4, &d, w)));
    let r = check_diam2_steiner_geodetic(&c4, &CheckConfig::default());
    assert_eq!(r.verdict, Verdict::PASS);
    assert_eq!(r.value("steiner_sets"), Some(steiner_sets.len() as i64));

    let petersen = parse_graph6("IheA@GUAo").unwrap();
    let r = check_diam2_steiner_geodetic(&petersen, &CheckConfig::default());
    assert_eq!(r.verdict, Verdict::PASS);
    assert_eq!((r.value("g"), r.value("s")), (Some(4), Some(4)));
    assert_eq!(common::steiner_number(&petersen), 4);
}

#[test]
fn census_sizes() {
    assert_eq!(census_graphs(CensusKind::Connected, 4).unwrap().len(), 6);
}

#[test]
fn diameter_two_graph_where_the_hub_raises_the_steiner_number() {
    let h = parse_graph6("EyUG").unwrap();
    assert_eq!(common::diameter(&h), 2);
    let (k1h, _) = corona(&complete(1).unwrap(), &h).unwrap();
    assert_eq!(common::steiner_number(&h), 3);
    assert_eq!(common::steiner_number(&k1h), 4);
    let opts = SearchOptions::steiner();
    assert_eq!(steiner_number(&h, &opts).unwrap().value, 3);
    assert_eq!(steiner_number(&k1h, &opts).unwrap().value, 4);
}

#[test]
fn diameter_two_graph_with_a_non_geodetic_steiner_set() {
    let g = parse_graph6("FhcYG").unwrap();
    assert_eq!(common::diameter(&g), 2);
    let d = common::floyd_warshall(&g);
    assert!(common::is_steiner_set(&g, &[0, 2, 5]));
    assert!(!common::is_geodetic(&g, &d, &[0, 2, 5]));
    assert_eq!((common::geodetic_number(&g), common::steiner_number(&g)), (4, 3));
    let r = check_diam2_steiner_geodetic(&g, &CheckConfig::default());
    assert_eq!(r.verdict, Verdict::FAIL);
}
