//! Clique-extension sequences and the threshold `N*`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hoffman::{clique_extension, Catalog, CatalogName};
use crate::spectra::{alpha0, graph_lambda_min};

use super::REPORT_TOL;

/// Past this the scan gives up; the true threshold is far below it.
const THRESHOLD_SCAN_LIMIT: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitPoint {
    pub n: usize,
    pub lambda_min: f64,
    pub min_degree: usize,
}

/// Smallest `N ≥ 4` with `λ_min(𝔥_WN^(N−3)) < −1−√2 − tol`. The sequence
/// decreases in `n`, so the first hit is the threshold.
pub fn compute_threshold_n(tol: f64) -> Result<usize> {
    compute_threshold_n_with(&Catalog::standard(), tol)
}

pub fn compute_threshold_n_with(catalog: &Catalog, tol: f64) -> Result<usize> {
    if !(tol > 0.0) {
        return Err(Error::input(format!("tolerance must be positive, got {tol}")));
    }
    let hwn = catalog.get(CatalogName::HWN);
    let target = alpha0() - tol;
    for n in 4..THRESHOLD_SCAN_LIMIT {
        let g = clique_extension(hwn, n - 3)?;
        if graph_lambda_min(&g, REPORT_TOL.min(tol / 10.0))? < target {
            return Ok(n);
        }
    }
    Err(Error::Domain(format!("no threshold below {THRESHOLD_SCAN_LIMIT}")))
}

/// `(n, λ_min(𝔥^(n)), δ(𝔥^(n)))` for `n = 1..=n_max`.
pub fn limit_sequence(name: CatalogName, n_max: usize) -> Result<Vec<LimitPoint>> {
    limit_sequence_with(&Catalog::standard(), name, n_max)
}

pub fn limit_sequence_with(catalog: &Catalog, name: CatalogName, n_max: usize) -> Result<Vec<LimitPoint>> {
    if n_max < 2 {
        return Err(Error::input(format!("limit_sequence needs n_max >= 2, got {n_max}")));
    }
    let h = catalog.get(name);
    (1..=n_max)
        .map(|n| {
            let g = clique_extension(h, n)?;
            Ok(LimitPoint { n, lambda_min: graph_lambda_min(&g, REPORT_TOL)?, min_degree: g.min_degree() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::alpha1;

    #[test]
    fn threshold_is_23() {
        let n = compute_threshold_n(1e-9).unwrap();
        assert_eq!(n, 23);
        let hwn = crate::hoffman::catalog(CatalogName::HWN);
        let below = graph_lambda_min(&clique_extension(&hwn, n - 3).unwrap(), 1e-12).unwrap();
        let above = graph_lambda_min(&clique_extension(&hwn, n - 4).unwrap(), 1e-12).unwrap();
        assert!(below < alpha0() && above >= alpha0());
        assert!(compute_threshold_n(0.0).is_err());
    }

    #[test]
    fn sequences_decrease_to_their_limits() {
        for (name, limit) in [(CatalogName::H9, alpha0()), (CatalogName::HWN, alpha1())] {
            let s = limit_sequence(name, 10).unwrap();
            assert_eq!(s.len(), 10);
            for w in s.windows(2) {
                assert!(w[1].lambda_min <= w[0].lambda_min + 1e-10);
                assert!(w[1].min_degree > w[0].min_degree);
            }
            assert!(s.iter().all(|p| p.lambda_min > limit - 1e-9));
        }
        assert!(limit_sequence(CatalogName::H9, 1).is_err());
    }
}
