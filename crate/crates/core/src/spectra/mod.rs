//! Eigenvalues of symmetric matrices, exact characteristic polynomials and
//! root isolation.
//!
//! Numeric path: Householder tridiagonalisation, then bisection on Sturm
//! sign counts, so every eigenvalue comes with an absolute error bound.
//! Exact path: Berkowitz characteristic polynomial over big integers and
//! Sturm-sequence root isolation over the rationals.

mod charpoly;
mod constants;
mod lanczos;
mod poly;
mod roots;
mod tridiag;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use charpoly::char_poly;
pub use constants::{
    alpha0, alpha1, beta, constant, constant_with_precision, AlgebraicConstant, ConstantName,
    DEFAULT_PRECISION,
};
pub use lanczos::{lanczos_min, lanczos_min_vector};
pub use poly::{poly_divides, IntPolynomial};
pub use roots::{min_root, real_root_count, roots_below, sign_at};
pub use tridiag::{householder, Tridiagonal};

/// Default absolute eigenvalue tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest dimension handled by the dense solver.
pub const DENSE_LIMIT: usize = 2048;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Checks exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::input(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let rows: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn adjacency(g: &SimpleGraph) -> Self {
        let n = g.order();
        let mut data = vec![0.0; n * n];
        for (u, v) in g.edges() {
            data[u * n + v] = 1.0;
            data[v * n + u] = 1.0;
        }
        SymMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn tridiagonal(&self, tol: f64) -> Result<Tridiagonal> {
        if !(tol > 0.0) {
            return Err(Error::input(format!("tolerance must be positive, got {tol}")));
        }
        if self.n == 0 {
            return Err(Error::input("the 0 x 0 matrix has no eigenvalues"));
        }
        if self.n > DENSE_LIMIT {
            return Err(Error::Capacity {
                what: "dense eigenvalue solver",
                size: self.n,
                limit: DENSE_LIMIT,
            });
        }
        Ok(householder(self.data.clone(), self.n))
    }
}

/// Smallest eigenvalue within absolute error `tol`.
pub fn lambda_min(m: &SymMatrix, tol: f64) -> Result<f64> {
    Ok(m.tridiagonal(tol)?.kth_eigenvalue(0, tol))
}

/// All eigenvalues in increasing order, each within `tol`.
pub fn spectrum(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    let t = m.tridiagonal(tol)?;
    Ok((0..t.len()).map(|k| t.kth_eigenvalue(k, tol)).collect())
}

/// Smallest adjacency eigenvalue of a graph.
pub fn graph_lambda_min(g: &SimpleGraph, tol: f64) -> Result<f64> {
    lambda_min(&SymMatrix::adjacency(g), tol)
}

pub fn graph_char_poly(g: &SimpleGraph) -> IntPolynomial {
    char_poly(&g.adjacency_matrix()).expect("adjacency matrices are square")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub lambda_min: f64,
    pub tolerance: f64,
    pub char_poly: Option<IntPolynomial>,
    pub spectrum: Option<Vec<f64>>,
}

impl SpectralReport {
    pub fn for_graph(g: &SimpleGraph, tol: f64, with_spectrum: bool, exact: bool) -> Result<Self> {
        let m = SymMatrix::adjacency(g);
        let spectrum = if with_spectrum { Some(spectrum(&m, tol)?) } else { None };
        let lambda_min = match &spectrum {
            Some(s) => s[0],
            None => lambda_min(&m, tol)?,
        };
        Ok(SpectralReport {
            lambda_min,
            tolerance: tol,
            char_poly: exact.then(|| graph_char_poly(g)),
            spectrum,
        })
    }
}
