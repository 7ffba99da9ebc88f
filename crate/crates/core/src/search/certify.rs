//! Pruning rule and exact certificates for cubic graphs near β.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::spectra::{beta, graph_char_poly, graph_lambda_min, poly_divides, roots_below, ConstantName, IntPolynomial};

/// Accuracy of the numeric eigenvalues used by the search.
pub(crate) const EIGEN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PruneDecision {
    Keep,
    Prune,
}

/// Prunes iff λ_min < β − tol. Graphs in the band `[β − tol, β)` are kept
/// and left to the exact certificate.
pub fn prune_test(g: &SimpleGraph, tol: f64) -> Result<PruneDecision> {
    if g.order() == 0 {
        return Ok(PruneDecision::Keep);
    }
    Ok(if graph_lambda_min(g, EIGEN_TOL)? < beta() - tol {
        PruneDecision::Prune
    } else {
        PruneDecision::Keep
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BetaVerdict {
    /// The sextic divides the characteristic polynomial and λ_min is its
    /// smallest root.
    EqualsBeta,
    /// `β − tol ≤ λ_min < −2`, the upper inequality decided exactly.
    InInterval,
    Out,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BetaCertificate {
    pub char_poly: IntPolynomial,
    pub divisible_by_sextic: bool,
    pub lambda_min: f64,
    pub below_minus_two: bool,
    pub verdict: BetaVerdict,
}

pub fn certify_beta(g: &SimpleGraph, tol: f64) -> Result<BetaCertificate> {
    if g.is_regular() != Some(3) || !g.is_connected() {
        return Err(Error::Precondition("certify_beta needs a connected cubic graph".into()));
    }
    let char_poly = graph_char_poly(g);
    let divisible_by_sextic = poly_divides(&ConstantName::Beta.minimal_poly(), &char_poly);
    let lambda_min = graph_lambda_min(g, EIGEN_TOL)?;
    let below_minus_two = roots_below(&char_poly, -2.0)? > 0;
    let b = beta();
    let verdict = if divisible_by_sextic && (lambda_min - b).abs() <= tol {
        BetaVerdict::EqualsBeta
    } else if lambda_min >= b - tol && below_minus_two {
        BetaVerdict::InInterval
    } else {
        BetaVerdict::Out
    };
    Ok(BetaCertificate { char_poly, divisible_by_sextic, lambda_min, below_minus_two, verdict })
}
