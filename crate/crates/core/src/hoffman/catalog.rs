//! The special Hoffman graphs used by the constructions.
//!
//! In every entry the slim vertices come first, numbered `x1, x2, ...` from
//! 0, followed by the fat vertices.
//!
//! - `H2`: one slim vertex with two fat neighbours; `B = [-2]`.
//! - `H3`: slim `K_2`, one fat shared by both slim vertices and one private
//!   fat on each; `B = -2I`.
//! - `H8`: slim path `x1 x2 x3` with a private fat on each slim vertex;
//!   `B = A(P_3) - I`, smallest eigenvalue `-1-√2`.
//! - `H9`: slim edges `x1x2, x1x3, x3x4`; fats `F ~ x1`, `E ~ x3`,
//!   `D ~ {x2, x4}`. `B` is a signed 4-cycle minus `I`, eigenvalues
//!   `-1 ± √2`, each twice.
//! - `HWN`: slim paw (triangle `x1x2x3`, pendant `x4` on `x1`) with a
//!   private fat on each slim vertex; `det(xI - B) = (x+2)(x³+2x²-2x-2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HoffmanGraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::spectra::{alpha0, alpha1, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CatalogName {
    H2,
    H3,
    H8,
    H9,
    HWN,
}

impl CatalogName {
    pub const ALL: [CatalogName; 5] = [
        CatalogName::H2,
        CatalogName::H3,
        CatalogName::H8,
        CatalogName::H9,
        CatalogName::HWN,
    ];

    /// Polynomial whose smallest root is the entry's smallest eigenvalue.
    pub fn certificate_poly(self) -> IntPolynomial {
        match self {
            CatalogName::H2 | CatalogName::H3 => IntPolynomial::from_i64(&[2, 1]),
            CatalogName::H8 | CatalogName::H9 => IntPolynomial::from_i64(&[-1, 2, 1]),
            CatalogName::HWN => IntPolynomial::from_i64(&[-2, -2, 2, 1]),
        }
    }

    pub fn documented_lambda_min(self) -> f64 {
        match self {
            CatalogName::H2 | CatalogName::H3 => -2.0,
            CatalogName::H8 | CatalogName::H9 => alpha0(),
            CatalogName::HWN => alpha1(),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "H2" => Ok(CatalogName::H2),
            "H3" => Ok(CatalogName::H3),
            "H8" => Ok(CatalogName::H8),
            "H9" => Ok(CatalogName::H9),
            "HWN" => Ok(CatalogName::HWN),
            "H5" | "H7" => Err(Error::input(format!(
                "catalog entry {s} is not available: its structure is not determined by any stated property"
            ))),
            _ => Err(Error::input(format!(
                "unknown catalog entry `{s}` (expected H2, H3, H8, H9 or HWN)"
            ))),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn build(n: usize, edges: &[(usize, usize)], fat: &[usize]) -> HoffmanGraph {
    let g = SimpleGraph::from_edges(n, edges).expect("catalog edges are valid");
    HoffmanGraph::with_fat(g, fat).expect("catalog entries are valid Hoffman graphs")
}

pub fn catalog(name: CatalogName) -> HoffmanGraph {
    match name {
        CatalogName::H2 => build(3, &[(0, 1), (0, 2)], &[1, 2]),
        CatalogName::H3 => build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)], &[2, 3, 4]),
        CatalogName::H8 => build(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)], &[3, 4, 5]),
        // F = 4, E = 5, D = 6
        CatalogName::H9 => build(
            7,
            &[(0, 1), (0, 2), (2, 3), (0, 4), (2, 5), (1, 6), (3, 6)],
            &[4, 5, 6],
        ),
        CatalogName::HWN => build(
            8,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7)],
            &[4, 5, 6, 7],
        ),
    }
}

/// A set of catalog entries. Normally [`Catalog::standard`]; tests and the
/// verification driver can swap an entry to check that the certificates
/// notice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<CatalogName, HoffmanGraph>,
}

impl Catalog {
    pub fn standard() -> Self {
        Catalog {
            entries: CatalogName::ALL.iter().map(|&n| (n, catalog(n))).collect(),
        }
    }

    pub fn with_entry(mut self, name: CatalogName, h: HoffmanGraph) -> Self {
        self.entries.insert(name, h);
        self
    }

    pub fn get(&self, name: CatalogName) -> &HoffmanGraph {
        &self.entries[&name]
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}
