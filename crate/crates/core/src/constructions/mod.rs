//! The certified regular families.
//!
//! - [`build_gk`]: `k`-regular graphs with λ_min in `[−1−√2, −2)`, one 𝔥₈
//!   summand per edge of a `(k, k−1)`-semiregular bipartite graph;
//! - [`build_triangle_free`]: cubic triangle-free graphs with λ_min in
//!   `[−1−√2, −2)`, two 𝔥₉ summands per odd position of `C_{2n}`;
//! - [`build_gk_wn`]: `k`-regular graphs with λ_min in `[α₁, −1−√2)` for
//!   `k ≥ N*`, one 𝔥_WN summand per element of a triple partition.
//!
//! Every builder recomputes its checks and fails with
//! [`Error::Construction`](crate::Error::Construction) naming the first
//! failed check.

mod gk;
mod limit;
mod partitions;
mod semiregular;
mod triangle_free;
mod wn;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hoffman::HoffmanSum;
use crate::spectra::{graph_lambda_min, lanczos_min_vector, DENSE_LIMIT};
use crate::HoffmanGraph;

pub use gk::{build_gk, build_gk_with};
pub use limit::{compute_threshold_n, compute_threshold_n_with, limit_sequence, limit_sequence_with, LimitPoint};
pub use partitions::{default_partitions, remark_partitions, TriplePartition};
pub use semiregular::{semiregular_bipartite, SemiregularBipartite};
pub use triangle_free::{build_triangle_free, build_triangle_free_with};
pub use wn::{build_gk_wn, build_gk_wn_with, WnOptions};

/// Tolerance used by the builders' own eigenvalue computations.
pub const REPORT_TOL: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gk,
    TriangleFree,
    GkWn,
}

/// How `lambda_min` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaMethod {
    /// Dense tridiagonalisation; the bounds are `λ ± tol`.
    Dense,
    /// Lower bound λ_min(B) of the Hoffman graph, upper bound from an induced
    /// subgraph or a Rayleigh quotient, point value a Lanczos estimate
    /// clamped into the bracket.
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CheckValue {
    Flag(bool),
    Real(f64),
    Count(usize),
    Vertices(Vec<usize>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub passed: bool,
    /// Informational checks are reported but never fail the build.
    pub required: bool,
    pub value: CheckValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
    pub order: usize,
    pub fat_count: usize,
    pub lambda_min: f64,
    pub lambda_bounds: (f64, f64),
    pub method: LambdaMethod,
    pub checks: BTreeMap<String, Check>,
    pub repairs: Vec<String>,
    #[serde(skip)]
    pub graph: SimpleGraph,
    #[serde(skip)]
    pub hoffman: HoffmanGraph,
    /// Slim vertices of each summand.
    #[serde(skip)]
    pub parts: Vec<Vec<usize>>,
}

impl ConstructionReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.passed || !c.required)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// Accumulates checks in insertion-independent (sorted) order.
#[derive(Default)]
struct Checks {
    map: BTreeMap<String, Check>,
    first_failure: Option<(String, String)>,
}

impl Checks {
    fn require(&mut self, name: &str, passed: bool, value: CheckValue) {
        if !passed && self.first_failure.is_none() {
            self.first_failure = Some((name.to_string(), format!("{value:?}")));
        }
        self.map.insert(name.to_string(), Check { passed, required: true, value });
    }

    fn inform(&mut self, name: &str, passed: bool, value: CheckValue) {
        self.map.insert(name.to_string(), Check { passed, required: false, value });
    }

    fn finish(self) -> Result<BTreeMap<String, Check>> {
        match self.first_failure {
            Some((check, detail)) => Err(Error::construction(check, detail)),
            None => Ok(self.map),
        }
    }
}

struct Lambda {
    value: f64,
    bounds: (f64, f64),
    method: LambdaMethod,
}

/// λ_min of the slim graph of `sum`. Dense when the graph is small enough;
/// otherwise a certified bracket: `λ_min(B)` below, and above the smaller of
/// the dense λ_min of the first summand's closed neighbourhood and the
/// rounding-corrected Rayleigh quotient of a Lanczos Ritz vector.
fn certified_lambda(graph: &SimpleGraph, sum: &HoffmanSum) -> Result<Lambda> {
    let tol = REPORT_TOL;
    if graph.order() <= DENSE_LIMIT {
        let value = graph_lambda_min(graph, tol)?;
        return Ok(Lambda { value, bounds: (value - tol, value + tol), method: LambdaMethod::Dense });
    }
    let lower = sum.hoffman.lambda_min(tol)? - tol;
    let mut ball: Vec<usize> = sum.parts[0].clone();
    for &x in &sum.parts[0] {
        ball.extend_from_slice(graph.neighbors(x));
    }
    ball.sort_unstable();
    ball.dedup();
    let local = graph_lambda_min(&graph.induced_subgraph(&ball)?, tol)? + tol;
    let (estimate, v) = lanczos_min_vector(graph.order(), 120, |x, y| {
        for (v, out) in y.iter_mut().enumerate() {
            *out = graph.neighbors(v).iter().map(|&w| x[w]).sum();
        }
    });
    let upper = local.min(rayleigh_upper(graph, &v));
    Ok(Lambda {
        value: estimate.clamp(lower, upper),
        bounds: (lower, upper),
        method: LambdaMethod::Bracket,
    })
}

/// Upper bound for λ_min from the Rayleigh quotient of `x`, widened by the
/// standard worst-case error of the floating-point sums involved.
fn rayleigh_upper(graph: &SimpleGraph, x: &[f64]) -> f64 {
    let (mut num, mut abs_num, mut den) = (0.0, 0.0, 0.0);
    let mut max_degree = 0;
    for (v, &xv) in x.iter().enumerate() {
        let nb = graph.neighbors(v);
        max_degree = max_degree.max(nb.len());
        num += xv * nb.iter().map(|&w| x[w]).sum::<f64>();
        abs_num += xv.abs() * nb.iter().map(|&w| x[w].abs()).sum::<f64>();
        den += xv * xv;
    }
    let gamma = (graph.order() + max_degree + 2) as f64 * f64::EPSILON;
    let q = num / den;
    q + 2.0 * gamma * (abs_num + q.abs() * den) / den
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}
