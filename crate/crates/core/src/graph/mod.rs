//! Finite simple undirected graphs.
//!
//! Vertices are always the dense range `0..n`. Neighbour lists are kept
//! sorted, so adjacency tests are a binary search and iteration order is
//! deterministic. Conventions for degenerate inputs: the empty graph is
//! connected and 0-regular.

mod canon;
mod generators;
pub mod graph6;
mod line;
mod patterns;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CANON_LIMIT};
pub use generators::{cartesian_product, standard_graph, StandardFamily};
pub use line::{
    cubic_line_check, is_cocktail_party, is_line_graph, is_line_graph_with_limit, LineGraphVerdict,
    KRAUSZ_LIMIT,
};
pub use patterns::{find_induced, PatternKind};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge #{idx} ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("edge #{idx} is a loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(SimpleGraph { adj })
    }

    /// Builds a graph from neighbour lists that are already symmetric and
    /// loop-free. Lists are sorted and deduplicated here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| row.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        SimpleGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// `Some(k)` iff every vertex has degree `k`. The empty graph is 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|row| row.len() == k).then_some(k)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row.iter().filter(|&&v| v > u) {
                if sorted_intersects(&self.adj[u], &self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgraph induced on `subset`, relabelled densely in the order given.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<SimpleGraph> {
        let n = self.order();
        let mut position = std::collections::HashMap::with_capacity(subset.len());
        for (i, &v) in subset.iter().enumerate() {
            if v >= n {
                return Err(Error::input(format!("vertex {v} outside 0..{n}")));
            }
            if position.insert(v, i).is_some() {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
        }
        let adj = subset
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|w| position.get(w).copied())
                    .collect()
            })
            .collect();
        Ok(SimpleGraph::from_adjacency(adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SimpleGraph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation of 0..n"));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|&v| perm[v]).collect();
        }
        Ok(SimpleGraph::from_adjacency(adj))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&v| v + shift).collect()),
        );
        SimpleGraph { adj }
    }

    /// Adds edge `u`–`v`; no-op when present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n || u == v {
            return Err(Error::input(format!("cannot add edge ({u},{v}) on {n} vertices")));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut m = vec![vec![0i64; n]; n];
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                m[u][v] = 1;
            }
        }
        m
    }
}

pub(crate) fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Adjacency-list JSON document: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Self> {
        let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(doc.n, &edges)
    }
}

impl SimpleGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph JSON serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: json_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })?;
        SimpleGraph::try_from(doc)
    }
}

pub(crate) fn json_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let before: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    before + column.saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let g = SimpleGraph::from_edges(0, &[]).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.size(), 0);

        assert_eq!(paw().degrees(), vec![3, 2, 2, 1]);

        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn make_graph_rejects_bad_edges() {
        assert!(matches!(
            SimpleGraph::from_edges(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            SimpleGraph::from_edges(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = standard_graph(StandardFamily::Complete, &[4]).unwrap();
        let k3 = k4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3.is_regular(), Some(2));
        assert_eq!(k3.order(), 3);

        let sub = paw().induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1)]);

        let c5 = standard_graph(StandardFamily::Cycle, &[5]).unwrap();
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);

        assert!(paw().induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn degree_and_connectivity_queries() {
        let k23 = standard_graph(StandardFamily::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
        assert_eq!(k23.is_regular(), None);

        let c6 = standard_graph(StandardFamily::Cycle, &[6]).unwrap();
        assert_eq!(c6.is_regular(), Some(2));
        assert!(c6.is_connected());
        assert!(c6.is_triangle_free());

        let two_edges = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn empty_graph_conventions() {
        let g = SimpleGraph::empty(0);
        assert!(g.is_connected());
        assert_eq!(g.is_regular(), Some(0));
        assert!(g.is_triangle_free());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = paw();
        let text = g.to_json();
        assert_eq!(text, r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2]]}"#);
        assert_eq!(SimpleGraph::from_json(&text).unwrap(), g);
        assert!(matches!(
            SimpleGraph::from_json("{\"n\": 2,\n \"edges\": [[0,]]}"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            SimpleGraph::from_json(r#"{"n":2,"edges":[[0,5]]}"#),
            Err(Error::Input(_))
        ));
    }
}
