//! Named graph families.
//!
//! Vertex numbering:
//! - `Cycle(n)`: `i ~ i+1 (mod n)`.
//! - `Path(n)`: `i ~ i+1`.
//! - `Complete(n)`: all pairs.
//! - `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
//! - `Cocktail(m)`: the non-adjacent pairs are `{2i, 2i+1}`.
//! - `Claw`: centre 0, leaves 1, 2, 3.
//! - `Diamond`: shared edge 0–1, vertices 2 and 3 joined to both.
//! - `Paw`: triangle 0, 1, 2 with pendant 3 on vertex 0.
//! - `Petersen`: outer cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.

use std::fmt;
use std::str::FromStr;

use super::SimpleGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardFamily {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Cocktail,
    Claw,
    Diamond,
    Paw,
    Petersen,
}

impl StandardFamily {
    fn arity(self) -> usize {
        match self {
            StandardFamily::CompleteBipartite => 2,
            StandardFamily::Claw
            | StandardFamily::Diamond
            | StandardFamily::Paw
            | StandardFamily::Petersen => 0,
            _ => 1,
        }
    }
}

impl FromStr for StandardFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "cycle" => StandardFamily::Cycle,
            "path" => StandardFamily::Path,
            "complete" => StandardFamily::Complete,
            "complete_bipartite" => StandardFamily::CompleteBipartite,
            "cocktail" => StandardFamily::Cocktail,
            "claw" => StandardFamily::Claw,
            "diamond" => StandardFamily::Diamond,
            "paw" => StandardFamily::Paw,
            "petersen" => StandardFamily::Petersen,
            other => return Err(Error::input(format!("unknown graph family `{other}`"))),
        })
    }
}

impl fmt::Display for StandardFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StandardFamily::Cycle => "cycle",
            StandardFamily::Path => "path",
            StandardFamily::Complete => "complete",
            StandardFamily::CompleteBipartite => "complete_bipartite",
            StandardFamily::Cocktail => "cocktail",
            StandardFamily::Claw => "claw",
            StandardFamily::Diamond => "diamond",
            StandardFamily::Paw => "paw",
            StandardFamily::Petersen => "petersen",
        };
        f.write_str(name)
    }
}

pub fn standard_graph(family: StandardFamily, params: &[usize]) -> Result<SimpleGraph> {
    if params.len() != family.arity() {
        return Err(Error::input(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    let mut edges = Vec::new();
    let n = match family {
        StandardFamily::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(Error::input("cycle needs n >= 3"));
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        StandardFamily::Path => {
            let n = params[0];
            if n == 0 {
                return Err(Error::input("path needs n >= 1"));
            }
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        StandardFamily::Complete => {
            let n = params[0];
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        StandardFamily::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(Error::input("complete bipartite needs both parts non-empty"));
            }
            for u in 0..a {
                edges.extend((a..a + b).map(|v| (u, v)));
            }
            a + b
        }
        StandardFamily::Cocktail => {
            let m = params[0];
            if m == 0 {
                return Err(Error::input("cocktail party needs m >= 1"));
            }
            let n = 2 * m;
            for u in 0..n {
                edges.extend((u + 1..n).filter(|&v| v / 2 != u / 2).map(|v| (u, v)));
            }
            n
        }
        StandardFamily::Claw => {
            edges.extend([(0, 1), (0, 2), (0, 3)]);
            4
        }
        StandardFamily::Diamond => {
            edges.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
            4
        }
        StandardFamily::Paw => {
            edges.extend([(0, 1), (0, 2), (0, 3), (1, 2)]);
            4
        }
        StandardFamily::Petersen => {
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            10
        }
    };
    SimpleGraph::from_edges(n, &edges)
}

/// Cartesian product; vertex `(u, v)` is numbered `u * |H| + v`.
pub fn cartesian_product(g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
    let (ng, nh) = (g.order(), h.order());
    if ng == 0 || nh == 0 {
        return Err(Error::input("cartesian product of an empty graph"));
    }
    let mut edges = Vec::new();
    for u in 0..ng {
        for (v1, v2) in h.edges() {
            edges.push((u * nh + v1, u * nh + v2));
        }
    }
    for (u1, u2) in g.edges() {
        for v in 0..nh {
            edges.push((u1 * nh + v, u2 * nh + v));
        }
    }
    SimpleGraph::from_edges(ng * nh, &edges)
}
