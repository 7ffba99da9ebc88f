use serde::{Deserialize, Serialize};

use super::SimpleGraph;

/// Small induced patterns. Occurrences are reported as vertex tuples:
/// - `ThreeClaw` (K_{1,3}): `[centre, leaf, leaf, leaf]`;
/// - `Diamond` (K_{2,1,1}): `[u, v, w, x]` with `u ~ v` the shared edge and
///   `w`, `x` the two non-adjacent vertices;
/// - `Triangle`: `[a, b, c]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PatternKind {
    ThreeClaw,
    Diamond,
    Triangle,
}

impl PatternKind {
    pub fn template(self) -> SimpleGraph {
        use super::{standard_graph, StandardFamily};
        let family = match self {
            PatternKind::ThreeClaw => StandardFamily::Claw,
            PatternKind::Diamond => StandardFamily::Diamond,
            PatternKind::Triangle => return standard_graph(StandardFamily::Complete, &[3]).unwrap(),
        };
        standard_graph(family, &[]).unwrap()
    }
}

/// First induced occurrence of `kind`, scanning vertices in increasing order.
pub fn find_induced(g: &SimpleGraph, kind: PatternKind) -> Option<Vec<usize>> {
    match kind {
        PatternKind::ThreeClaw => find_claw(g),
        PatternKind::Diamond => find_diamond(g),
        PatternKind::Triangle => find_triangle(g),
    }
}

fn find_claw(g: &SimpleGraph) -> Option<Vec<usize>> {
    for c in 0..g.order() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(vec![c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

fn find_diamond(g: &SimpleGraph) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        let common: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        for (i, &w) in common.iter().enumerate() {
            for &x in &common[i + 1..] {
                if !g.has_edge(w, x) {
                    return Some(vec![u, v, w, x]);
                }
            }
        }
    }
    None
}

fn find_triangle(g: &SimpleGraph) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| w > v && g.has_edge(u, w)) {
            return Some(vec![u, v, w]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardFamily};

    #[test]
    fn claw_found_centre_first() {
        let claw = standard_graph(StandardFamily::Claw, &[]).unwrap();
        assert_eq!(find_induced(&claw, PatternKind::ThreeClaw), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn hexagon_has_no_claw_or_diamond() {
        let c6 = standard_graph(StandardFamily::Cycle, &[6]).unwrap();
        assert_eq!(find_induced(&c6, PatternKind::ThreeClaw), None);
        assert_eq!(find_induced(&c6, PatternKind::Diamond), None);
        assert_eq!(find_induced(&c6, PatternKind::Triangle), None);
    }

    #[test]
    fn diamond_and_triangle() {
        let d = standard_graph(StandardFamily::Diamond, &[]).unwrap();
        assert_eq!(find_induced(&d, PatternKind::Diamond), Some(vec![0, 1, 2, 3]));
        assert_eq!(find_induced(&d, PatternKind::Triangle), Some(vec![0, 1, 2]));
        let k4 = standard_graph(StandardFamily::Complete, &[4]).unwrap();
        assert_eq!(find_induced(&k4, PatternKind::Diamond), None);
        assert_eq!(find_induced(&k4, PatternKind::ThreeClaw), None);
    }

    #[test]
    fn occurrences_are_induced_copies() {
        let petersen = standard_graph(StandardFamily::Petersen, &[]).unwrap();
        let occ = find_induced(&petersen, PatternKind::ThreeClaw).unwrap();
        let sub = petersen.induced_subgraph(&occ).unwrap();
        assert_eq!(sub.degrees(), vec![3, 1, 1, 1]);
    }
}
