//! Brute-force enumeration of connected cubic graphs, independent of the
//! spectral search: no eigenvalues, no induced-subgraph growth.
//!
//! A state is a connected graph whose lowest deficient vertex is filled up
//! to degree 3 in one step, choosing its new neighbours among the other
//! deficient vertices and fresh ones. The completions reachable from a state
//! depend only on its isomorphism class, so states are deduplicated by
//! canonical form.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, SimpleGraph, CANON_LIMIT};

/// All connected cubic graphs on `n` vertices, one per isomorphism class,
/// as canonical forms in increasing order of their canonical code.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > CANON_LIMIT.min(22) {
        return Err(Error::Capacity { what: "cubic enumeration", size: n, limit: CANON_LIMIT.min(22) });
    }
    if n < 4 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut seen = HashSet::new();
    let mut found = Vec::new();
    let mut stack = vec![SimpleGraph::empty(1)];
    while let Some(g) = stack.pop() {
        let Some(v) = (0..g.order()).find(|&v| g.degree(v) < 3) else {
            if g.order() == n {
                found.push(canonical_form(&g)?);
            }
            continue;
        };
        let need = 3 - g.degree(v);
        let others: Vec<usize> = (v + 1..g.order())
            .filter(|&u| g.degree(u) < 3 && !g.has_edge(v, u))
            .collect();
        for old in 0..=need.min(others.len()) {
            let fresh = need - old;
            if g.order() + fresh > n {
                continue;
            }
            for chosen in subsets(&others, old) {
                let mut h = g.clone();
                for &u in &chosen {
                    h.add_edge(v, u)?;
                }
                for _ in 0..fresh {
                    let w = h.add_vertex();
                    h.add_edge(v, w)?;
                }
                if seen.insert(canonical_form(&h)?) {
                    stack.push(h);
                }
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found.iter().map(|c| c.graph()).collect())
}

/// All `r`-element subsets of `items`, in lexicographic order.
pub(crate) fn subsets(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::with_capacity(r), &mut out);
    out
}
