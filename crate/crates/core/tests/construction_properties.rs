//! Invariants of the certified constructions, recomputed from the returned
//! graphs rather than read off the reports.

use hoffgraph::constructions::{
    build_gk, build_gk_wn, build_triangle_free, default_partitions, semiregular_bipartite,
};
use hoffgraph::graph::{find_induced, is_cocktail_party, is_line_graph, PatternKind};
use hoffgraph::hoffman::{verify_decomposition, CatalogName};
use hoffgraph::spectra::{alpha0, alpha1, graph_lambda_min};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn semiregular_bipartite_invariants(k in 3usize..=12, a in 1usize..=5) {
        let b = semiregular_bipartite(k, a).unwrap();
        prop_assert_eq!(b.side_r.len(), a * (k - 1));
        prop_assert_eq!(b.side_y.len(), a * k);
        prop_assert!(b.graph.is_connected());
        prop_assert!(b.side_r.iter().all(|&v| b.graph.degree(v) == k));
        prop_assert!(b.side_y.iter().all(|&v| b.graph.degree(v) == k - 1));
        prop_assert!(b.side_r.iter().all(|&u| b.side_r.iter().all(|&v| !b.graph.has_edge(u, v))));
    }

    #[test]
    fn gk_invariants(k in 3usize..=8, a in 1usize..=3) {
        let r = build_gk(&semiregular_bipartite(k, a).unwrap()).unwrap();
        let g = &r.graph;
        prop_assert_eq!(g.is_regular(), Some(k));
        prop_assert_eq!(g.order(), 3 * a * k * (k - 1));
        let lambda = graph_lambda_min(g, 1e-12).unwrap();
        prop_assert!(lambda >= alpha0() - TOL && lambda < -2.0);
        prop_assert!(find_induced(g, PatternKind::ThreeClaw).is_some());
        prop_assert!(!is_line_graph(g).unwrap().is_line);
        prop_assert_eq!(is_cocktail_party(g), None);
        prop_assert!(verify_decomposition(&r.hoffman, &r.parts).unwrap());
        prop_assert!((r.hoffman.lambda_min(1e-12).unwrap() - CatalogName::H8.documented_lambda_min()).abs() < TOL);
    }

    #[test]
    fn triangle_free_invariants(n in 2usize..=6) {
        let r = build_triangle_free(n).unwrap();
        let g = &r.graph;
        prop_assert_eq!(g.is_regular(), Some(3));
        prop_assert!(g.is_triangle_free());
        prop_assert_eq!(g.order(), 8 * n);
        let lambda = graph_lambda_min(g, 1e-12).unwrap();
        prop_assert!(lambda >= alpha0() - TOL && lambda < -2.0);
        prop_assert!(verify_decomposition(&r.hoffman, &r.parts).unwrap());
    }
}

#[test]
fn gk_wn_invariants_below_the_threshold() {
    for k in 4..=7 {
        let r = build_gk_wn(k, &default_partitions(k, 1).unwrap()).unwrap();
        let g = &r.graph;
        assert_eq!(g.is_regular(), Some(k));
        assert!(g.is_connected());
        let lambda = graph_lambda_min(g, 1e-12).unwrap();
        // Below N* the graph need not go under -1-sqrt2, but never under alpha1.
        assert!(lambda >= alpha1() - TOL, "k={k}: {lambda}");
        assert!(verify_decomposition(&r.hoffman, &r.parts).unwrap());
        assert!((r.hoffman.lambda_min(1e-12).unwrap() - alpha1()).abs() < TOL);
    }
}

#[test]
fn orders_separate_the_multipliers() {
    for k in 3..=8 {
        let orders: Vec<usize> = (1..=3).map(|a| build_gk(&semiregular_bipartite(k, a).unwrap()).unwrap().order).collect();
        assert!(orders[0] < orders[1] && orders[1] < orders[2]);
    }
}
