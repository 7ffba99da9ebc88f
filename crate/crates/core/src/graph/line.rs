//! Line-graph recognition via Krausz partitions.
//!
//! A graph is a line graph iff its edge set splits into cliques such that
//! every vertex lies in at most two of them (two such cliques then share at
//! most one vertex automatically). Recognition first looks for an induced
//! claw, which rules a graph out at any size; only the backtracking search
//! is subject to the size limit.

use std::collections::HashSet;

use serde::Serialize;

use super::{find_induced, PatternKind, SimpleGraph};
use crate::error::{Error, Result};

/// Size limit for the Krausz backtracking search.
pub const KRAUSZ_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineGraphVerdict {
    pub is_line: bool,
    /// Krausz partition (each clique sorted) when `is_line`.
    pub partition: Option<Vec<Vec<usize>>>,
    /// Induced claw `[centre, leaves..]` when one was found.
    pub claw: Option<Vec<usize>>,
}

pub fn is_line_graph(g: &SimpleGraph) -> Result<LineGraphVerdict> {
    is_line_graph_with_limit(g, KRAUSZ_LIMIT)
}

pub fn is_line_graph_with_limit(g: &SimpleGraph, limit: usize) -> Result<LineGraphVerdict> {
    if let Some(claw) = find_induced(g, PatternKind::ThreeClaw) {
        return Ok(LineGraphVerdict {
            is_line: false,
            partition: None,
            claw: Some(claw),
        });
    }
    if g.order() > limit {
        return Err(Error::Capacity {
            what: "line graph recognition",
            size: g.order(),
            limit,
        });
    }
    let mut search = Krausz::new(g);
    let partition = search.run().then(|| {
        let mut cliques = search.cliques;
        for c in &mut cliques {
            c.sort_unstable();
        }
        cliques.sort();
        cliques
    });
    Ok(LineGraphVerdict {
        is_line: partition.is_some(),
        partition,
        claw: None,
    })
}

struct Krausz<'a> {
    g: &'a SimpleGraph,
    covered: HashSet<(usize, usize)>,
    clique_count: Vec<u8>,
    cliques: Vec<Vec<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<'a> Krausz<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        Krausz {
            g,
            covered: HashSet::new(),
            clique_count: vec![0; g.order()],
            cliques: Vec::new(),
        }
    }

    fn uncovered_neighbors(&self, u: usize) -> Vec<usize> {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| !self.covered.contains(&key(u, v)))
            .collect()
    }

    fn free_edge(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v) && !self.covered.contains(&key(u, v))
    }

    /// Next vertex to settle: one already in a clique if possible (its
    /// remaining edges are forced), otherwise the largest uncovered degree.
    fn pick(&self) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for u in 0..self.g.order() {
            let open = self.uncovered_neighbors(u);
            if open.is_empty() {
                continue;
            }
            if self.clique_count[u] >= 1 {
                return Some((u, open));
            }
            if best.as_ref().map_or(true, |(_, b)| open.len() > b.len()) {
                best = Some((u, open));
            }
        }
        best
    }

    fn is_free_clique(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.free_edge(a, b)))
    }

    fn push_clique(&mut self, clique: Vec<usize>) {
        for (i, &a) in clique.iter().enumerate() {
            self.clique_count[a] += 1;
            for &b in &clique[i + 1..] {
                self.covered.insert(key(a, b));
            }
        }
        self.cliques.push(clique);
    }

    fn pop_clique(&mut self) {
        let clique = self.cliques.pop().expect("clique stack underflow");
        for (i, &a) in clique.iter().enumerate() {
            self.clique_count[a] -= 1;
            for &b in &clique[i + 1..] {
                self.covered.remove(&key(a, b));
            }
        }
    }

    fn try_cliques(&mut self, cliques: Vec<Vec<usize>>) -> bool {
        let mut pushed = 0;
        let mut ok = true;
        for c in cliques {
            if !self.is_free_clique(&c) || c.iter().any(|&v| self.clique_count[v] >= 2) {
                ok = false;
                break;
            }
            self.push_clique(c);
            pushed += 1;
        }
        if ok && self.run() {
            return true;
        }
        for _ in 0..pushed {
            self.pop_clique();
        }
        false
    }

    fn run(&mut self) -> bool {
        let Some((u, open)) = self.pick() else {
            return true;
        };
        match self.clique_count[u] {
            2 => false,
            1 => {
                let mut clique = open;
                clique.push(u);
                self.try_cliques(vec![clique])
            }
            _ => {
                let anchor = open[0];
                let mut first = vec![u, anchor];
                let mut second = vec![u];
                self.split_neighbourhood(&open[1..], &mut first, &mut second)
            }
        }
    }

    /// Assigns each remaining open neighbour of the current vertex to one of
    /// its two cliques, trying the first clique before the second.
    fn split_neighbourhood(
        &mut self,
        rest: &[usize],
        first: &mut Vec<usize>,
        second: &mut Vec<usize>,
    ) -> bool {
        let Some((&w, tail)) = rest.split_first() else {
            let mut plan = vec![first.clone()];
            if second.len() > 1 {
                plan.push(second.clone());
            }
            return self.try_cliques(plan);
        };
        for target in 0..2 {
            let side = if target == 0 { &mut *first } else { &mut *second };
            if side.iter().all(|&x| self.free_edge(x, w)) {
                side.push(w);
                let ok = self.split_neighbourhood(tail, first, second);
                if target == 0 { first.pop(); } else { second.pop(); }
                if ok {
                    return true;
                }
            }
        }
        false
    }
}


/// Line-graph test for cubic graphs: every component is `K_4` or has every
/// open neighbourhood inducing one edge plus an isolated vertex. A
/// neighbourhood induces a triangle exactly when the component is `K_4`.
pub fn cubic_line_check(g: &SimpleGraph) -> Result<bool> {
    if g.is_regular() != Some(3) {
        return Err(Error::Precondition("cubic_line_check needs a 3-regular graph".into()));
    }
    Ok((0..g.order()).all(|x| {
        let nb = g.neighbors(x);
        let inner = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| g.has_edge(nb[i], nb[j]))
            .count();
        inner == 1 || inner == 3
    }))
}

/// `Some(m)` iff the graph is the cocktail party graph `K_{m x 2}`.
pub fn is_cocktail_party(g: &SimpleGraph) -> Option<usize> {
    let n = g.order();
    if n < 2 || n % 2 != 0 {
        return None;
    }
    (g.is_regular() == Some(n - 2)).then_some(n / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, standard_graph, StandardFamily};

    fn std(f: StandardFamily, p: &[usize]) -> SimpleGraph {
        standard_graph(f, p).unwrap()
    }

    fn check_partition(g: &SimpleGraph, parts: &[Vec<usize>]) {
        let mut seen = HashSet::new();
        let mut count = vec![0; g.order()];
        for c in parts {
            for (i, &a) in c.iter().enumerate() {
                count[a] += 1;
                for &b in &c[i + 1..] {
                    assert!(g.has_edge(a, b));
                    assert!(seen.insert(key(a, b)), "edge covered twice");
                }
            }
        }
        assert_eq!(seen.len(), g.size());
        assert!(count.iter().all(|&c| c <= 2));
    }

    #[test]
    fn line_graph_examples() {
        let k3 = std(StandardFamily::Complete, &[3]);
        let v = is_line_graph(&k3).unwrap();
        assert!(v.is_line);
        check_partition(&k3, v.partition.as_ref().unwrap());

        let claw = std(StandardFamily::Claw, &[]);
        let v = is_line_graph(&claw).unwrap();
        assert!(!v.is_line);
        assert_eq!(v.claw, Some(vec![0, 1, 2, 3]));

        let diamond = std(StandardFamily::Diamond, &[]);
        let v = is_line_graph(&diamond).unwrap();
        assert!(v.is_line);
        check_partition(&diamond, v.partition.as_ref().unwrap());
    }

    #[test]
    fn claw_free_non_line_graphs_are_rejected() {
        // K_5 minus an edge and the wheel W_5 are claw-free Beineke graphs.
        let mut k5e = std(StandardFamily::Complete, &[5]);
        k5e = SimpleGraph::from_edges(
            5,
            &k5e.edges().into_iter().filter(|&e| e != (0, 1)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(!is_line_graph(&k5e).unwrap().is_line);

        let mut w5 = std(StandardFamily::Cycle, &[5]);
        let hub = w5.add_vertex();
        for v in 0..5 {
            w5.add_edge(hub, v).unwrap();
        }
        assert!(!is_line_graph(&w5).unwrap().is_line);
    }

    #[test]
    fn complete_graphs_are_line_graphs_of_stars() {
        let k7 = std(StandardFamily::Complete, &[7]);
        let v = is_line_graph(&k7).unwrap();
        assert!(v.is_line);
        assert_eq!(v.partition.unwrap().len(), 1);
    }

    #[test]
    fn capacity_limit_applies_to_claw_free_inputs() {
        let c = std(StandardFamily::Cycle, &[10]);
        assert!(matches!(
            is_line_graph_with_limit(&c, 8),
            Err(Error::Capacity { .. })
        ));
        let star = std(StandardFamily::CompleteBipartite, &[1, 20]);
        assert!(!is_line_graph_with_limit(&star, 8).unwrap().is_line);
    }

    #[test]
    fn cubic_line_check_examples() {
        assert!(cubic_line_check(&std(StandardFamily::Complete, &[4])).unwrap());
        assert!(!cubic_line_check(&std(StandardFamily::CompleteBipartite, &[3, 3])).unwrap());
        let prism = cartesian_product(&std(StandardFamily::Complete, &[3]), &std(StandardFamily::Complete, &[2])).unwrap();
        assert!(cubic_line_check(&prism).unwrap());
        assert!(is_line_graph(&prism).unwrap().is_line);
        assert!(matches!(
            cubic_line_check(&std(StandardFamily::Cycle, &[5])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cocktail_party_examples() {
        assert_eq!(is_cocktail_party(&std(StandardFamily::Cocktail, &[3])), Some(3));
        assert_eq!(is_cocktail_party(&std(StandardFamily::Cycle, &[4])), Some(2));
        assert_eq!(is_cocktail_party(&std(StandardFamily::Cycle, &[5])), None);
        assert_eq!(is_cocktail_party(&std(StandardFamily::Petersen, &[])), None);
    }
}
