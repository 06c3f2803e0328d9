use proptest::prelude::*;

use corona_invariants::graph::{complete, encode_graph6, parse_edge_list, parse_graph6, write_edge_list};
use corona_invariants::{
    corona, geodetic_number, interval_closure, k_geodetic_number, steiner_distance,
    steiner_number, Graph, SearchOptions, VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Random graph plus a random spanning path, so always connected.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (graph(max_n), any::<u64>()).prop_map(|(g, salt)| {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt);
        let mut edges: Vec<_> = g.edges().collect();
        edges.extend(order.windows(2).map(|w| (w[0], w[1])));
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

fn with_set(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = (Graph, VertexSet)> {
    g.prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 1u64..1 << n).prop_map(move |(g, m)| (g, VertexSet::from_mask(n, m)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(8)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_large(g in graph(62)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(10)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn corona_order_and_size_laws(g in connected(5), h in graph(5)) {
        let (p, layout) = corona(&g, &h).unwrap();
        let (n1, n2) = (g.order(), h.order());
        prop_assert_eq!(p.order(), n1 * (1 + n2));
        prop_assert_eq!(p.size(), g.size() + n1 * h.size() + n1 * n2);
        for i in 0..n1 {
            for x in layout.copy_indices(i) {
                let outside = p.neighbors(x).difference(&layout.copy_set(i));
                prop_assert_eq!(outside.to_vec(), vec![i]);
            }
        }
    }

    #[test]
    fn hub_corona_has_diameter_at_most_two(h in graph(7)) {
        let (p, _) = corona(&complete(1).unwrap(), &h).unwrap();
        let d = p.diameter().unwrap();
        prop_assert!(d <= 2);
        prop_assert_eq!(d == 2, !h.is_complete());
    }

    #[test]
    fn closure_is_extensive_and_monotone((g, s) in with_set(connected(8)), extra in any::<u64>()) {
        let d = g.distances();
        let bigger = s.union(&VertexSet::from_mask(g.order(), extra & g.vertices().mask()));
        let cs = interval_closure(&d, &s).unwrap();
        prop_assert!(s.is_subset(&cs));
        prop_assert!(cs.is_subset(&interval_closure(&d, &bigger).unwrap()));
    }

    #[test]
    fn steiner_distance_bounds_and_monotonicity((g, w) in with_set(connected(8)), extra in any::<u64>()) {
        let d = steiner_distance(&g, &w).unwrap() as usize;
        prop_assert!(w.len() - 1 <= d && d < g.order());
        let bigger = w.union(&VertexSet::from_mask(g.order(), extra & g.vertices().mask()));
        prop_assert!(d <= steiner_distance(&g, &bigger).unwrap() as usize);
    }

    #[test]
    fn two_terminal_steiner_distance_is_distance(g in connected(8), a in any::<usize>(), b in any::<usize>()) {
        let n = g.order();
        let (u, v) = (a % n, b % n);
        let w = VertexSet::from_vertices(n, [u, v]).unwrap();
        prop_assert_eq!(Some(steiner_distance(&g, &w).unwrap()), g.distances().get(u, v));
    }

    #[test]
    fn parallel_search_is_canonical(g in connected(10)) {
        let seq = SearchOptions::geodetic();
        let par = seq.with_parallel(true);
        prop_assert_eq!(geodetic_number(&g, &seq).unwrap(), geodetic_number(&g, &par).unwrap());
        let seq = SearchOptions::steiner();
        let par = seq.with_parallel(true);
        prop_assert_eq!(steiner_number(&g, &seq).unwrap(), steiner_number(&g, &par).unwrap());
    }

    #[test]
    fn geodetic_number_is_at_most_k_geodetic_number(g in connected(8)) {
        let opts = SearchOptions::geodetic();
        let gv = geodetic_number(&g, &opts).unwrap().value;
        for k in 2..=g.diameter().unwrap() {
            prop_assert!(gv <= k_geodetic_number(&g, k, &opts).unwrap().value);
        }
    }

    #[test]
    fn geodetic_witness_contains_extremes(g in connected(9)) {
        let r = geodetic_number(&g, &SearchOptions::geodetic()).unwrap();
        prop_assert!(g.extreme_vertices().is_subset(&r.witness));
    }
}
