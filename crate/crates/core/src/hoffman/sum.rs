//! Sums of Hoffman graphs and decomposition checks.

use std::collections::HashMap;

use super::{HoffmanGraph, Label};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Summands plus the fat vertices to identify. Each class lists
/// `(summand, vertex)` pairs naming fat vertices; every class becomes one
/// fat vertex of the sum. Fat vertices not named in any class stay private.
#[derive(Clone, Debug, Default)]
pub struct SumSpec {
    pub summands: Vec<HoffmanGraph>,
    pub fat_classes: Vec<Vec<(usize, usize)>>,
}

/// Result of [`hsum`]. Slim vertices come first, grouped by summand in
/// summand order; then one fat vertex per class in class order; then the
/// private fats in (summand, vertex) order.
#[derive(Clone, Debug)]
pub struct HoffmanSum {
    pub hoffman: HoffmanGraph,
    /// Slim vertices of the sum contributed by each summand.
    pub parts: Vec<Vec<usize>>,
    /// For each slim vertex of the sum, its `(summand, vertex)` origin.
    pub slim_origin: Vec<(usize, usize)>,
    /// For each fat vertex of the sum (in order), the summand fats merged
    /// into it.
    pub fat_origin: Vec<Vec<(usize, usize)>>,
}

impl HoffmanSum {
    /// The part index owning each slim vertex.
    pub fn slim_partition(&self) -> Vec<usize> {
        self.slim_origin.iter().map(|&(s, _)| s).collect()
    }
}

pub fn hsum(spec: &SumSpec) -> Result<HoffmanSum> {
    let k = spec.summands.len();
    if k == 0 {
        return Err(Error::input("a sum needs at least one summand"));
    }
    // Map every summand fat to its merged class.
    let mut class_of: Vec<Vec<Option<usize>>> =
        spec.summands.iter().map(|h| vec![None; h.order()]).collect();
    for (c, class) in spec.fat_classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::SumValidity(format!("fat class {c} is empty")));
        }
        let mut summands_seen = Vec::with_capacity(class.len());
        for &(s, v) in class {
            let h = spec
                .summands
                .get(s)
                .ok_or_else(|| Error::SumValidity(format!("fat class {c} names summand {s}, which does not exist")))?;
            if v >= h.order() || !h.is_fat(v) {
                return Err(Error::SumValidity(format!(
                    "fat class {c} names vertex {v} of summand {s}, which is not a fat vertex"
                )));
            }
            if summands_seen.contains(&s) {
                return Err(Error::SumValidity(format!(
                    "fat class {c} contains two fat vertices of summand {s}"
                )));
            }
            summands_seen.push(s);
            if let Some(other) = class_of[s][v] {
                return Err(Error::SumValidity(format!(
                    "fat vertex {v} of summand {s} is in classes {other} and {c}"
                )));
            }
            class_of[s][v] = Some(c);
        }
    }
    let mut fat_count = spec.fat_classes.len();
    for (s, h) in spec.summands.iter().enumerate() {
        for f in h.fat_vertices() {
            if class_of[s][f].is_none() {
                class_of[s][f] = Some(fat_count);
                fat_count += 1;
            }
        }
    }

    // Slim numbering.
    let mut slim_index: Vec<Vec<usize>> = spec.summands.iter().map(|h| vec![usize::MAX; h.order()]).collect();
    let mut slim_origin = Vec::new();
    let mut parts = Vec::with_capacity(k);
    for (s, h) in spec.summands.iter().enumerate() {
        let mut part = Vec::new();
        for x in h.slim_vertices() {
            slim_index[s][x] = slim_origin.len();
            part.push(slim_origin.len());
            slim_origin.push((s, x));
        }
        parts.push(part);
    }
    let n_slim = slim_origin.len();
    let mut fat_origin = vec![Vec::new(); fat_count];
    for (s, h) in spec.summands.iter().enumerate() {
        for f in h.fat_vertices() {
            fat_origin[class_of[s][f].expect("every fat has a class")].push((s, f));
        }
    }
    let total = n_slim + fat_count;

    let mut edges = Vec::new();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); fat_count];
    for (s, h) in spec.summands.iter().enumerate() {
        for (u, v) in h.graph().edges() {
            match (h.is_fat(u), h.is_fat(v)) {
                (false, false) => edges.push((slim_index[s][u], slim_index[s][v])),
                (false, true) | (true, false) => {
                    let (x, f) = if h.is_fat(v) { (u, v) } else { (v, u) };
                    let c = class_of[s][f].expect("every fat has a class");
                    edges.push((slim_index[s][x], n_slim + c));
                    members[c].push(slim_index[s][x]);
                }
                (true, true) => unreachable!("summands are valid Hoffman graphs"),
            }
        }
    }
    // Cross-summand slim pairs sharing merged fats.
    let owner = |x: usize| slim_origin[x].0;
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for (c, m) in members.iter().enumerate() {
        for (i, &x) in m.iter().enumerate() {
            for &y in &m[i + 1..] {
                if owner(x) == owner(y) {
                    continue;
                }
                let key = (x.min(y), x.max(y));
                let count = shared.entry(key).or_default();
                *count += 1;
                if *count > 1 {
                    return Err(Error::SumValidity(format!(
                        "slim vertices {} and {} (summands {} and {}) share more than one fat vertex, the second being class {c}",
                        key.0,
                        key.1,
                        owner(key.0),
                        owner(key.1)
                    )));
                }
            }
        }
    }
    let mut shared: Vec<(usize, usize)> = shared.into_keys().collect();
    shared.sort_unstable();
    edges.extend(shared);

    let graph = SimpleGraph::from_edges(total, &edges)?;
    let mut labels = vec![Label::Slim; n_slim];
    labels.resize(total, Label::Fat);
    let hoffman = HoffmanGraph::new(graph, &labels)?;
    Ok(HoffmanSum {
        hoffman,
        parts,
        slim_origin,
        fat_origin,
    })
}

/// True iff `h` is the sum of the induced Hoffman subgraphs on the given
/// parts of its slim vertices (each part together with its fat
/// neighbours): two slim vertices in different parts have at most one
/// common fat neighbour, and have one exactly when adjacent.
pub fn verify_decomposition(h: &HoffmanGraph, parts: &[Vec<usize>]) -> Result<bool> {
    let mut part_of = vec![usize::MAX; h.order()];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::input(format!("part {i} is empty")));
        }
        for &x in part {
            if x >= h.order() || h.is_fat(x) {
                return Err(Error::input(format!("part {i} contains {x}, which is not a slim vertex")));
            }
            if part_of[x] != usize::MAX {
                return Err(Error::input(format!("slim vertex {x} is in two parts")));
            }
            part_of[x] = i;
        }
    }
    if let Some(x) = h.slim_vertices().into_iter().find(|&x| part_of[x] == usize::MAX) {
        return Err(Error::input(format!("slim vertex {x} is in no part")));
    }
    let mut common: HashMap<(usize, usize), usize> = HashMap::new();
    for f in h.fat_vertices() {
        let m: Vec<usize> = h.slim_neighbors(f).collect();
        for (i, &x) in m.iter().enumerate() {
            for &y in &m[i + 1..] {
                if part_of[x] != part_of[y] {
                    *common.entry((x.min(y), x.max(y))).or_default() += 1;
                }
            }
        }
    }
    if common.values().any(|&c| c > 1) {
        return Ok(false);
    }
    // Cross-part adjacency must coincide with having a common fat.
    for (x, y) in h.graph().edges() {
        if h.is_fat(x) || h.is_fat(y) || part_of[x] == part_of[y] {
            continue;
        }
        if !common.contains_key(&(x, y)) {
            return Ok(false);
        }
    }
    Ok(common.keys().all(|&(x, y)| h.graph().has_edge(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, standard_graph, StandardFamily};
    use crate::hoffman::{catalog, CatalogName};
    use proptest::prelude::*;

    #[test]
    fn two_h2_sharing_a_fat() {
        let h2 = catalog(CatalogName::H2);
        let spec = SumSpec {
            summands: vec![h2.clone(), h2],
            fat_classes: vec![vec![(0, 1), (1, 1)]],
        };
        let s = hsum(&spec).unwrap();
        assert_eq!(s.hoffman.slim_graph(), standard_graph(StandardFamily::Complete, &[2]).unwrap());
        assert_eq!(s.hoffman.fat_count(), 3);
        assert!(verify_decomposition(&s.hoffman, &s.parts).unwrap());
        assert_eq!(s.slim_partition(), vec![0, 1]);
    }

    #[test]
    fn sum_without_sharing_is_disjoint_union() {
        let h8 = catalog(CatalogName::H8);
        let wn = catalog(CatalogName::HWN);
        let s = hsum(&SumSpec {
            summands: vec![h8.clone(), wn.clone()],
            fat_classes: vec![],
        })
        .unwrap();
        assert_eq!(s.hoffman.slim_graph(), h8.slim_graph().disjoint_union(&wn.slim_graph()));
    }

    #[test]
    fn double_sharing_is_rejected() {
        let h2 = catalog(CatalogName::H2);
        let spec = SumSpec {
            summands: vec![h2.clone(), h2],
            fat_classes: vec![vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)]],
        };
        assert!(matches!(hsum(&spec), Err(Error::SumValidity(_))));
    }

    #[test]
    fn malformed_specs() {
        let h2 = catalog(CatalogName::H2);
        let bad = |classes: Vec<Vec<(usize, usize)>>| {
            hsum(&SumSpec {
                summands: vec![h2.clone(), h2.clone()],
                fat_classes: classes,
            })
        };
        assert!(matches!(bad(vec![vec![(0, 0)]]), Err(Error::SumValidity(_))));
        assert!(matches!(bad(vec![vec![(0, 1), (0, 2)]]), Err(Error::SumValidity(_))));
        assert!(matches!(bad(vec![vec![(0, 1)], vec![(0, 1)]]), Err(Error::SumValidity(_))));
        assert!(matches!(bad(vec![vec![(5, 1)]]), Err(Error::SumValidity(_))));
        assert!(matches!(bad(vec![vec![]]), Err(Error::SumValidity(_))));
    }

    #[test]
    fn decomposition_examples() {
        let k3 = HoffmanGraph::all_slim(standard_graph(StandardFamily::Complete, &[3]).unwrap());
        assert!(!verify_decomposition(&k3, &[vec![0], vec![1], vec![2]]).unwrap());
        assert!(verify_decomposition(&k3, &[vec![0, 1, 2]]).unwrap());
        assert!(verify_decomposition(&k3, &[vec![0, 1]]).is_err());
    }

    /// Random sums of catalog entries: summand `i` shares a fat with an
    /// earlier summand only where that keeps every cross pair to at most
    /// one common fat, which [`hsum`] enforces anyway.
    fn random_spec() -> impl Strategy<Value = SumSpec> {
        let names = prop_oneof![
            Just(CatalogName::H2),
            Just(CatalogName::H3),
            Just(CatalogName::H8),
            Just(CatalogName::H9),
            Just(CatalogName::HWN),
        ];
        (proptest::collection::vec(names, 2..6), proptest::collection::vec((0usize..8, 0usize..8, 0usize..8), 0..6))
            .prop_map(|(names, links)| {
                let summands: Vec<HoffmanGraph> = names.into_iter().map(catalog).collect();
                let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
                let mut used: Vec<(usize, usize)> = Vec::new();
                for (a, b, pick) in links {
                    let (a, b) = (a % summands.len(), b % summands.len());
                    if a == b {
                        continue;
                    }
                    let fa = summands[a].fat_vertices();
                    let fb = summands[b].fat_vertices();
                    let (x, y) = ((a, fa[pick % fa.len()]), (b, fb[(pick / 2) % fb.len()]));
                    if used.contains(&x) || used.contains(&y) {
                        continue;
                    }
                    used.push(x);
                    used.push(y);
                    classes.push(vec![x, y]);
                }
                SumSpec { summands, fat_classes: classes }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn sum_theorem(spec in random_spec()) {
            let s = match hsum(&spec) {
                Ok(s) => s,
                Err(Error::SumValidity(_)) => return Ok(()),
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            prop_assert!(verify_decomposition(&s.hoffman, &s.parts).unwrap());
            let whole = s.hoffman.lambda_min(1e-11).unwrap();
            let parts = spec.summands.iter().map(|h| h.lambda_min(1e-11).unwrap()).fold(f64::INFINITY, f64::min);
            prop_assert!((whole - parts).abs() < 1e-9);
        }

        #[test]
        fn sums_are_associative(spec in random_spec()) {
            prop_assume!(spec.summands.len() >= 3);
            let Ok(flat) = hsum(&spec) else { return Ok(()); };
            // Group the first two summands, then add the rest.
            let inner_spec = SumSpec {
                summands: spec.summands[..2].to_vec(),
                fat_classes: spec.fat_classes.iter().filter(|c| c.iter().all(|&(s, _)| s < 2)).cloned().collect(),
            };
            let inner = hsum(&inner_spec).unwrap();
            // Locate each original fat of summands 0,1 inside `inner`.
            let n_inner_slim = inner.slim_origin.len();
            let fat_in_inner = |s: usize, v: usize| -> usize {
                n_inner_slim + inner.fat_origin.iter().position(|o| o.contains(&(s, v))).unwrap()
            };
            let mut outer_classes = Vec::new();
            for c in &spec.fat_classes {
                if c.iter().all(|&(s, _)| s < 2) {
                    continue;
                }
                let mut merged = Vec::new();
                let mut seen_inner = false;
                for &(s, v) in c {
                    if s < 2 {
                        if !seen_inner {
                            merged.push((0, fat_in_inner(s, v)));
                            seen_inner = true;
                        }
                    } else {
                        merged.push((s - 1, v));
                    }
                }
                outer_classes.push(merged);
            }
            let mut outer_summands = vec![inner.hoffman.clone()];
            outer_summands.extend(spec.summands[2..].iter().cloned());
            let Ok(grouped) = hsum(&SumSpec { summands: outer_summands, fat_classes: outer_classes }) else {
                return Err(TestCaseError::fail("grouped sum rejected"));
            };
            prop_assert!(is_isomorphic(flat.hoffman.graph(), grouped.hoffman.graph()).unwrap());
        }
    }
}
