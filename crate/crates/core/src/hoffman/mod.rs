//! Hoffman graphs: graphs whose vertices are labelled slim or fat, with
//! fat vertices pairwise non-adjacent and each adjacent to a slim vertex.
//!
//! The eigenvalues of a Hoffman graph are those of `B = A_s - C Cᵀ`, where
//! `A_s` is the adjacency matrix of the slim graph and `C` the slim-fat
//! incidence matrix. Rows and columns of `B` follow the slim vertices in
//! increasing vertex order.

mod catalog;
mod sum;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{json_offset, SimpleGraph};
use crate::spectra::{lambda_min, SymMatrix, DENSE_LIMIT};

pub use catalog::{catalog, Catalog, CatalogName};
pub use sum::{hsum, verify_decomposition, HoffmanSum, SumSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    Slim,
    Fat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanGraph {
    graph: SimpleGraph,
    fat: Vec<bool>,
}

impl HoffmanGraph {
    /// Validates the labelling: fat vertices are pairwise non-adjacent and
    /// each has a slim neighbour.
    pub fn new(graph: SimpleGraph, labels: &[Label]) -> Result<Self> {
        if labels.len() != graph.order() {
            return Err(Error::input(format!(
                "{} labels for a graph on {} vertices",
                labels.len(),
                graph.order()
            )));
        }
        let fat: Vec<bool> = labels.iter().map(|&l| l == Label::Fat).collect();
        for v in 0..graph.order() {
            if !fat[v] {
                continue;
            }
            if let Some(&w) = graph.neighbors(v).iter().find(|&&w| fat[w]) {
                return Err(Error::Validity(format!("fat vertices {v} and {w} are adjacent")));
            }
            if graph.degree(v) == 0 {
                return Err(Error::Validity(format!("fat vertex {v} has no slim neighbour")));
            }
        }
        Ok(HoffmanGraph { graph, fat })
    }

    /// Same as [`HoffmanGraph::new`] with the fat vertices listed.
    pub fn with_fat(graph: SimpleGraph, fat: &[usize]) -> Result<Self> {
        let mut labels = vec![Label::Slim; graph.order()];
        for &f in fat {
            if f >= graph.order() {
                return Err(Error::input(format!("fat vertex {f} is out of range")));
            }
            labels[f] = Label::Fat;
        }
        Self::new(graph, &labels)
    }

    /// An ordinary graph viewed as a Hoffman graph with no fat vertices.
    pub fn all_slim(graph: SimpleGraph) -> Self {
        let n = graph.order();
        HoffmanGraph {
            graph,
            fat: vec![false; n],
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn is_fat(&self, v: usize) -> bool {
        self.fat[v]
    }

    pub fn labels(&self) -> Vec<Label> {
        self.fat
            .iter()
            .map(|&f| if f { Label::Fat } else { Label::Slim })
            .collect()
    }

    pub fn slim_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| !self.fat[v]).collect()
    }

    pub fn fat_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.fat[v]).collect()
    }

    pub fn slim_count(&self) -> usize {
        self.fat.iter().filter(|&&f| !f).count()
    }

    pub fn fat_count(&self) -> usize {
        self.fat.iter().filter(|&&f| f).count()
    }

    pub fn fat_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(|&w| self.fat[w])
    }

    pub fn slim_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(|&w| !self.fat[w])
    }

    /// The subgraph induced on the slim vertices, relabelled in order.
    pub fn slim_graph(&self) -> SimpleGraph {
        self.graph
            .induced_subgraph(&self.slim_vertices())
            .expect("slim vertices are in range")
    }

    /// Sparse rows of `B`, diagonal included, indexed by slim position.
    pub fn b_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let slim = self.slim_vertices();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in slim.iter().enumerate() {
            pos[v] = i;
        }
        slim.iter()
            .map(|&x| {
                let mut row: HashMap<usize, i64> = HashMap::new();
                for y in self.slim_neighbors(x) {
                    *row.entry(pos[y]).or_default() += 1;
                }
                for f in self.fat_neighbors(x) {
                    for y in self.slim_neighbors(f) {
                        *row.entry(pos[y]).or_default() -= 1;
                    }
                }
                let mut row: Vec<(usize, i64)> = row.into_iter().filter(|&(_, b)| b != 0).collect();
                row.sort_unstable();
                row
            })
            .collect()
    }

    /// `B = A_s - C Cᵀ` as a dense integer matrix.
    pub fn b_matrix(&self) -> Vec<Vec<i64>> {
        let rows = self.b_rows();
        let n = rows.len();
        rows.into_iter()
            .map(|r| {
                let mut dense = vec![0; n];
                for (j, b) in r {
                    dense[j] = b;
                }
                dense
            })
            .collect()
    }

    /// Smallest eigenvalue of `B`, computed block by block over the
    /// connected components of its nonzero pattern.
    pub fn lambda_min(&self, tol: f64) -> Result<f64> {
        let rows = self.b_rows();
        if rows.is_empty() {
            return Err(Error::input("a Hoffman graph without slim vertices has no eigenvalues"));
        }
        let mut best = f64::INFINITY;
        let mut local = vec![usize::MAX; rows.len()];
        for block in pattern_components(&rows) {
            if block.len() > DENSE_LIMIT {
                return Err(Error::Capacity {
                    what: "B-matrix block",
                    size: block.len(),
                    limit: DENSE_LIMIT,
                });
            }
            for (i, &v) in block.iter().enumerate() {
                local[v] = i;
            }
            let dense: Vec<Vec<i64>> = block
                .iter()
                .map(|&v| {
                    let mut r = vec![0; block.len()];
                    for &(j, b) in &rows[v] {
                        r[local[j]] = b;
                    }
                    r
                })
                .collect();
            best = best.min(lambda_min(&SymMatrix::from_int_rows(&dense)?, tol)?);
        }
        Ok(best)
    }

    /// Induced Hoffman subgraph on `vertices` (kept in the given order).
    /// Fails if a kept fat vertex loses all its slim neighbours.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<HoffmanGraph> {
        let graph = self.graph.induced_subgraph(vertices)?;
        let labels: Vec<Label> = vertices
            .iter()
            .map(|&v| if self.fat[v] { Label::Fat } else { Label::Slim })
            .collect();
        HoffmanGraph::new(graph, &labels)
    }

    /// Induced Hoffman subgraph on a set of slim vertices together with
    /// every fat vertex adjacent to one of them; slim vertices first.
    pub fn around_slim(&self, slim: &[usize]) -> Result<HoffmanGraph> {
        let mut fats: Vec<usize> = slim.iter().flat_map(|&x| self.fat_neighbors(x)).collect();
        fats.sort_unstable();
        fats.dedup();
        let mut vertices = slim.to_vec();
        vertices.extend(fats);
        self.induced_subgraph(&vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HoffmanJson::from(self)).expect("Hoffman JSON serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: HoffmanJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: json_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })?;
        HoffmanGraph::try_from(doc)
    }
}

/// Connected components of the nonzero pattern of a symmetric sparse matrix.
fn pattern_components(rows: &[Vec<(usize, i64)>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &(w, _) in &rows[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Replaces every fat vertex by an `n`-clique joined to its slim
/// neighbours. Slim vertices keep their order and come first; the clique of
/// the `i`-th fat vertex occupies the next `n` positions.
pub fn clique_extension(h: &HoffmanGraph, n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::input("clique extension needs n >= 1"));
    }
    let slim = h.slim_vertices();
    let fats = h.fat_vertices();
    let mut pos = vec![usize::MAX; h.order()];
    for (i, &v) in slim.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<(usize, usize)> = h
        .slim_graph()
        .edges();
    let total = slim.len() + n * fats.len();
    for (i, &f) in fats.iter().enumerate() {
        let base = slim.len() + i * n;
        for a in 0..n {
            for b in a + 1..n {
                edges.push((base + a, base + b));
            }
            for x in h.slim_neighbors(f) {
                edges.push((pos[x], base + a));
            }
        }
    }
    SimpleGraph::from_edges(total, &edges)
}

/// `{"n": int, "edges": [[u, v], ...], "fat": [vertex, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoffmanJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub fat: Vec<usize>,
}

impl From<&HoffmanGraph> for HoffmanJson {
    fn from(h: &HoffmanGraph) -> Self {
        HoffmanJson {
            n: h.order(),
            edges: h.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            fat: h.fat_vertices(),
        }
    }
}

impl TryFrom<HoffmanJson> for HoffmanGraph {
    type Error = Error;

    fn try_from(doc: HoffmanJson) -> Result<Self> {
        let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        HoffmanGraph::with_fat(SimpleGraph::from_edges(doc.n, &edges)?, &doc.fat)
    }
}

/// Summary used in reports: counts and the smallest eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HoffmanSummary {
    pub slim: usize,
    pub fat: usize,
    pub lambda_min: f64,
    pub fat_degrees: BTreeMap<usize, usize>,
}

impl HoffmanGraph {
    pub fn summary(&self, tol: f64) -> Result<HoffmanSummary> {
        let mut fat_degrees = BTreeMap::new();
        for f in self.fat_vertices() {
            *fat_degrees.entry(self.graph.degree(f)).or_default() += 1;
        }
        Ok(HoffmanSummary {
            slim: self.slim_count(),
            fat: self.fat_count(),
            lambda_min: self.lambda_min(tol)?,
            fat_degrees,
        })
    }
}
