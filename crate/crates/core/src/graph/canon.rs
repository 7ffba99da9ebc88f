//! Exact canonical labelling for small graphs.
//!
//! Equitable-partition refinement followed by a full individualisation
//! search; the canonical form is the lexicographically largest adjacency
//! code over all leaves. Automorphisms found between leaves prune sibling
//! branches that lie in the same orbit of the prefix stabiliser.

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 64;

/// Adjacency rows of the canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> SimpleGraph {
        let adj = self
            .rows
            .iter()
            .map(|&r| (0..self.n).filter(|&j| r >> j & 1 == 1).collect())
            .collect();
        SimpleGraph::from_adjacency(adj)
    }
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form plus the labelling `vertex -> canonical position`.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::Capacity {
            what: "canonical labelling",
            size: n,
            limit: CANON_LIMIT,
        });
    }
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let mut search = Search {
        rows: &rows,
        n,
        best: None,
        best_path: Vec::new(),
        first_leaf: None,
        first_path: Vec::new(),
        generators: Vec::new(),
    };
    let root = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    search.descend(root, &mut Vec::new());
    let (code, labels) = search.best.unwrap_or_default();
    Ok((CanonicalForm { n, rows: code }, labels))
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    best_path: Vec<usize>,
    first_leaf: Option<(Vec<u64>, Vec<usize>)>,
    first_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn mask(cell: &[usize]) -> u64 {
        cell.iter().fold(0u64, |acc, &v| acc | 1 << v)
    }

    /// Splits cells by neighbour counts into splitter cells until stable.
    /// Sub-cells are ordered by count, so the result is label-invariant.
    fn refine(&self, mut cells: Cells) -> Cells {
        'outer: loop {
            for s in 0..cells.len() {
                let splitter = Self::mask(&cells[s]);
                for i in 0..cells.len() {
                    if cells[i].len() < 2 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[i]
                        .iter()
                        .map(|&v| ((self.rows[v] & splitter).count_ones(), v))
                        .collect();
                    if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut parts: Cells = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            parts.push(Vec::new());
                            last = Some(c);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    cells.splice(i..=i, parts);
                    continue 'outer;
                }
            }
            return cells;
        }
    }

    fn leaf_code(&self, cells: &Cells) -> (Vec<u64>, Vec<usize>) {
        let mut labels = vec![0; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labels[cell[0]] = pos;
        }
        let mut code = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = self.rows[v];
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                code[labels[v]] |= 1 << labels[w];
            }
        }
        (code, labels)
    }

    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        // a, b: vertex -> position; gamma = a^-1 . b
        let mut inv = vec![0; self.n];
        for (v, &p) in a.iter().enumerate() {
            inv[p] = v;
        }
        let gamma: Vec<usize> = b.iter().map(|&p| inv[p]).collect();
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(gamma);
        }
    }

    /// Handles a discrete partition. Returns the depth to jump back to when
    /// the leaf is equivalent to the first or best leaf: the subtree below
    /// the divergence point is then an automorphic image of one already seen.
    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let (code, labels) = self.leaf_code(cells);
        let Some((first_code, first_labels)) = &self.first_leaf else {
            self.first_leaf = Some((code.clone(), labels.clone()));
            self.first_path = path.to_vec();
            self.best = Some((code, labels));
            self.best_path = path.to_vec();
            return None;
        };
        if *first_code == code {
            let first_labels = first_labels.clone();
            self.record_automorphism(&first_labels, &labels);
            return Some(common_prefix(&self.first_path, path));
        }
        let (best_code, best_labels) = self.best.as_ref().expect("best leaf set with first");
        match best_code.cmp(&code) {
            std::cmp::Ordering::Equal => {
                let best_labels = best_labels.clone();
                self.record_automorphism(&best_labels, &labels);
                Some(common_prefix(&self.best_path, path))
            }
            std::cmp::Ordering::Greater => None,
            std::cmp::Ordering::Less => {
                self.best = Some((code, labels));
                self.best_path = path.to_vec();
                None
            }
        }
    }

    /// Orbit representatives under generators fixing `prefix` pointwise.
    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let mut tried_roots: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            let roots = self.orbit_roots(prefix);
            if tried_roots.iter().any(|&t| roots[t] == roots[v]) {
                continue;
            }
            tried_roots.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardFamily};

    fn std(f: StandardFamily, p: &[usize]) -> SimpleGraph {
        standard_graph(f, p).unwrap()
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c5 = std(StandardFamily::Cycle, &[5]);
        let shuffled = c5.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c5, &shuffled).unwrap());
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled).unwrap());
    }

    #[test]
    fn non_isomorphic_pairs() {
        let paw = std(StandardFamily::Paw, &[]);
        let claw = std(StandardFamily::Claw, &[]);
        let p4 = std(StandardFamily::Path, &[4]);
        assert!(!is_isomorphic(&paw, &claw).unwrap());
        assert!(!is_isomorphic(&p4, &claw).unwrap());
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&claw).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let pet = std(StandardFamily::Petersen, &[]);
        let (form, labels) = canonical_labeling(&pet).unwrap();
        assert_eq!(pet.permute(&labels).unwrap(), form.graph());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for g in [
            std(StandardFamily::Complete, &[20]),
            SimpleGraph::empty(30),
            std(StandardFamily::Cocktail, &[10]),
            std(StandardFamily::CompleteBipartite, &[12, 12]),
        ] {
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.graph().size(), g.size());
        }
    }

    #[test]
    fn capacity_limit() {
        assert!(matches!(
            canonical_form(&SimpleGraph::empty(65)),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(canonical_form(&SimpleGraph::empty(0)).unwrap().order(), 0);
    }
}
