//! Graph-layer invariants checked against independent brute force.

use hoffgraph::graph::{
    canonical_form, cubic_line_check, find_induced, graph6, is_isomorphic, is_line_graph, PatternKind, SimpleGraph,
};
use hoffgraph::search::connected_cubic_graphs;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Exhaustive isomorphism test: extend a partial map vertex by vertex,
/// keeping adjacency to every mapped vertex consistent.
fn brute_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    fn go(g: &SimpleGraph, h: &SimpleGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if go(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    g.order() == h.order() && g.size() == h.size() && go(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_subgraph_keeps_adjacency(g in graph(8), mask in proptest::collection::vec(any::<bool>(), 8)) {
        let subset: Vec<usize> = (0..g.order()).filter(|&v| mask[v]).collect();
        let h = g.induced_subgraph(&subset).unwrap();
        prop_assert_eq!(h.order(), subset.len());
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate() {
                prop_assert_eq!(h.has_edge(i, j), i != j && g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(8)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_complete_invariant(
        (g, perm) in graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) }),
        other in graph(9),
    ) {
        let relabelled = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&relabelled).unwrap(), canonical_form(&g).unwrap());
        let same = canonical_form(&g).unwrap() == canonical_form(&other).unwrap();
        prop_assert_eq!(same, brute_isomorphic(&g, &other));
        prop_assert_eq!(is_isomorphic(&g, &other).unwrap(), same);
    }

    #[test]
    fn three_claw_rules_out_line_graphs(g in graph(9)) {
        if find_induced(&g, PatternKind::ThreeClaw).is_some() {
            prop_assert!(!is_line_graph(&g).unwrap().is_line);
        }
    }
}

#[test]
fn graph6_round_trip_is_exhaustive_up_to_five_vertices() {
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = SimpleGraph::from_edges(n, &edges).unwrap();
            assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
        }
    }
}

#[test]
fn canonical_forms_of_similar_graphs_separate() {
    // Isomorphic pairs are the rare case for random graphs, so test them directly
    // on small orders where every pair can be enumerated.
    let n = 4;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let graphs: Vec<SimpleGraph> = (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
        .collect();
    let mut classes = std::collections::BTreeSet::new();
    for g in &graphs {
        classes.insert(canonical_form(g).unwrap());
        for h in &graphs {
            assert_eq!(canonical_form(g).unwrap() == canonical_form(h).unwrap(), brute_isomorphic(g, h));
        }
    }
    // There are 11 graphs on four vertices up to isomorphism.
    assert_eq!(classes.len(), 11);
}

#[test]
fn cubic_line_check_matches_full_recognition() {
    let mut all = Vec::new();
    for n in (4..=14).step_by(2) {
        all.extend(connected_cubic_graphs(n).unwrap());
    }
    // 1 + 2 + 5 + 19 + 85 + 509 connected cubic graphs.
    assert_eq!(all.len(), 621);
    let mut checked = 0;
    for g in &all {
        assert_eq!(cubic_line_check(g).unwrap(), is_line_graph(g).unwrap().is_line, "{}", graph6::encode(g));
        checked += 1;
    }
    // Disconnected cubic graphs up to 14 vertices.
    let small: Vec<&SimpleGraph> = all.iter().filter(|g| g.order() <= 10).collect();
    for (i, g) in small.iter().enumerate() {
        for h in &small[i..] {
            if g.order() + h.order() <= 14 {
                let u = g.disjoint_union(h);
                assert_eq!(cubic_line_check(&u).unwrap(), is_line_graph(&u).unwrap().is_line);
                checked += 1;
            }
        }
    }
    assert!(checked > 621);
}
