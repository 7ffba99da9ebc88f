//! Connected `(k, k−1)`-semiregular bipartite graphs.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Bipartite graph with `a(k−1)` vertices of degree `k` (side R, numbered
/// first) and `ak` vertices of degree `k−1` (side Y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiregularBipartite {
    pub graph: SimpleGraph,
    pub side_r: Vec<usize>,
    pub side_y: Vec<usize>,
    pub k: usize,
    pub a: usize,
}

impl SemiregularBipartite {
    /// Checks every invariant; `Err` names the first one violated.
    pub fn validate(&self) -> Result<()> {
        let (k, a) = (self.k, self.a);
        let fail = |what: &str| Err(Error::construction("semiregular_bipartite", what.to_string()));
        if k < 3 || a < 1 {
            return fail("needs k >= 3 and a >= 1");
        }
        if self.side_r.len() != a * (k - 1) || self.side_y.len() != a * k {
            return fail("side sizes differ from a(k-1) and ak");
        }
        if self.graph.order() != self.side_r.len() + self.side_y.len() {
            return fail("order differs from |R| + |Y|");
        }
        let mut side = vec![None; self.graph.order()];
        for &r in &self.side_r {
            side[r] = Some(true);
        }
        for &y in &self.side_y {
            if side[y].is_some() {
                return fail("R and Y overlap");
            }
            side[y] = Some(false);
        }
        if side.iter().any(Option::is_none) {
            return fail("R and Y do not cover the vertex set");
        }
        if self.side_r.iter().any(|&r| self.graph.degree(r) != k) {
            return fail("an R vertex has degree other than k");
        }
        if self.side_y.iter().any(|&y| self.graph.degree(y) != k - 1) {
            return fail("a Y vertex has degree other than k-1");
        }
        if self.graph.edges().iter().any(|&(u, v)| side[u] == side[v]) {
            return fail("an edge joins two vertices on the same side");
        }
        if !self.graph.is_connected() {
            return fail("not connected");
        }
        Ok(())
    }

    /// Edges as `(r, y)` pairs in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }
}

/// Deterministic instance. R-slots list each R vertex `k` times in a row,
/// Y-slots cycle through the Y vertices; slot `i` is matched with slot `i`.
/// This is simple by construction but splits into `a` components when
/// `a > 1`, which degree-preserving 2-edge swaps then join.
pub fn semiregular_bipartite(k: usize, a: usize) -> Result<SemiregularBipartite> {
    if k < 3 || a < 1 {
        return Err(Error::input(format!("semiregular_bipartite needs k >= 3 and a >= 1, got k={k}, a={a}")));
    }
    let nr = a * (k - 1);
    let ny = a * k;
    let mut edges: Vec<(usize, usize)> = (0..nr * k).map(|s| (s / k, nr + s % ny)).collect();

    let limit = 4 * (a + 1);
    for _ in 0..limit {
        let g = SimpleGraph::from_edges(nr + ny, &edges)?;
        let comps = g.components();
        if comps.len() == 1 {
            break;
        }
        let mut comp_of = vec![0; nr + ny];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = c;
            }
        }
        // A non-bridge edge of component 0 and any edge of component 1.
        let e1 = (0..edges.len())
            .find(|&i| comp_of[edges[i].0] == 0 && !is_bridge(&g, edges[i]))
            .ok_or_else(|| Error::construction("semiregular_bipartite", "no non-bridge edge to swap"))?;
        let e2 = (0..edges.len())
            .find(|&i| comp_of[edges[i].0] == 1)
            .expect("every component has an edge");
        let ((r1, y1), (r2, y2)) = (edges[e1], edges[e2]);
        edges[e1] = (r1, y2);
        edges[e2] = (r2, y1);
    }
    edges.sort_unstable();
    let b = SemiregularBipartite {
        graph: SimpleGraph::from_edges(nr + ny, &edges)?,
        side_r: (0..nr).collect(),
        side_y: (nr..nr + ny).collect(),
        k,
        a,
    };
    b.validate()?;
    Ok(b)
}

fn is_bridge(g: &SimpleGraph, (u, v): (usize, usize)) -> bool {
    let mut seen = vec![false; g.order()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if (x, w) == (u, v) || seen[w] {
                continue;
            }
            if w == v {
                return false;
            }
            seen[w] = true;
            stack.push(w);
        }
    }
    true
}
