//! `k`-regular graphs with λ_min in `[α₁, −1−√2)`: one 𝔥_WN summand per
//! element of a triple partition.
//!
//! Element `m` owns summand `m−1` with slim paw `x1` (centre), `x2`, `x3`
//! (triangle) and `x4` (pendant) at positions `4(m−1)..4m`. `F_i` joins the
//! `x1`'s over `p_i`, `E_j` the `x4`'s over `q_j`, `D_l` the `x2`'s and
//! `C_l` the `x3`'s over `r_l`.

use super::{certified_lambda, compute_threshold_n_with, params, CheckValue, Checks, ConstructionReport, Family};
use super::{TriplePartition, REPORT_TOL};
use crate::error::{Error, Result};
use crate::hoffman::{hsum, verify_decomposition, Catalog, CatalogName, HoffmanSum, SumSpec};
use crate::spectra::{alpha0, alpha1};

const FAT_X1: usize = 4;
const FAT_X2: usize = 5;
const FAT_X3: usize = 6;
const FAT_X4: usize = 7;

#[derive(Clone, Debug)]
pub struct WnOptions {
    pub catalog: Catalog,
    /// Swap elements between `R` blocks until the graph is connected.
    pub repair: bool,
    pub max_repairs: usize,
}

impl Default for WnOptions {
    fn default() -> Self {
        WnOptions { catalog: Catalog::standard(), repair: true, max_repairs: 64 }
    }
}

pub fn build_gk_wn(k: usize, t: &TriplePartition) -> Result<ConstructionReport> {
    build_gk_wn_with(k, t, &WnOptions::default())
}

fn assemble(t: &TriplePartition, catalog: &Catalog) -> Result<HoffmanSum> {
    let mut fat_classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for (blocks, fat) in [(&t.p, FAT_X1), (&t.q, FAT_X4), (&t.r, FAT_X2), (&t.r, FAT_X3)] {
        for b in blocks {
            fat_classes.push(b.iter().map(|&e| (e - 1, fat)).collect());
        }
    }
    let hwn = catalog.get(CatalogName::HWN);
    hsum(&SumSpec { summands: vec![hwn.clone(); t.m], fat_classes })
}

pub fn build_gk_wn_with(k: usize, t: &TriplePartition, opts: &WnOptions) -> Result<ConstructionReport> {
    t.validate(k)?;
    let mut t = t.clone();
    let mut repairs = Vec::new();
    let (sum, g) = loop {
        let sum = assemble(&t, &opts.catalog)?;
        let g = sum.hoffman.slim_graph();
        let comps = g.components();
        if comps.len() == 1 {
            break (sum, g);
        }
        if !opts.repair {
            return Err(Error::construction("connected", format!("{} components, repair disabled", comps.len())));
        }
        if repairs.len() == opts.max_repairs {
            return Err(Error::construction("connected", format!("{} components after {} repairs", comps.len(), repairs.len())));
        }
        // An R block is inside one component (its x2's form a clique).
        let mut comp_of = vec![0; g.order()];
        for (c, comp) in comps.iter().enumerate() {
            comp.iter().for_each(|&v| comp_of[v] = c);
        }
        let block_comp = |l: usize| comp_of[4 * (t.r[l][0] - 1)];
        let l1 = 0;
        let l2 = (1..t.r.len())
            .find(|&l| block_comp(l) != block_comp(l1))
            .ok_or_else(|| Error::construction("connected", "every R block lies in one component"))?;
        let (e1, e2) = (t.r[l1][0], t.r[l2][0]);
        t.r[l1][0] = e2;
        t.r[l2][0] = e1;
        t.r[l1].sort_unstable();
        t.r[l2].sort_unstable();
        repairs.push(format!("swapped elements {e1} and {e2} between R blocks {} and {}", l1 + 1, l2 + 1));
    };
    let lambda = certified_lambda(&g, &sum)?;

    let (a0, a1) = (alpha0(), alpha1());
    let mut checks = Checks::default();
    checks.require("k_regular", g.is_regular() == Some(k), CheckValue::Count(k));
    checks.require("connected", true, CheckValue::Flag(true));
    checks.require("slim_count", g.order() == 4 * t.m, CheckValue::Count(g.order()));
    // 2a(2k²−4k+1) with a = m / (k(k−1)(k−2)).
    let fat_expected = 2 * t.m * (2 * k * k - 4 * k + 1);
    let denom = k * (k - 1) * (k - 2);
    let fat = sum.hoffman.fat_count();
    checks.require(
        "fat_count",
        fat_expected % denom == 0 && fat == fat_expected / denom,
        CheckValue::Count(fat),
    );
    let n_slim = g.order();
    let sizes: Vec<usize> = (0..fat).map(|c| sum.hoffman.graph().degree(n_slim + c)).collect();
    let (np, nq, nr) = (t.p.len(), t.q.len(), t.r.len());
    let expected = |c: usize| match c {
        c if c < np => k - 2,
        c if c < np + nq => k,
        c if c < np + nq + 2 * nr => k - 1,
        _ => usize::MAX,
    };
    let bad: Vec<usize> = (0..fat).filter(|&c| sizes[c] != expected(c)).collect();
    checks.require("fat_slim_degrees", bad.is_empty(), CheckValue::Vertices(bad));
    let hl = sum.hoffman.lambda_min(REPORT_TOL)?;
    checks.require("hoffman_lambda_min", (hl - a1).abs() < 1e-9, CheckValue::Real(hl));
    checks.require(
        "decomposition",
        verify_decomposition(&sum.hoffman, &sum.parts)?,
        CheckValue::Count(sum.parts.len()),
    );
    checks.require("lambda_lower", lambda.bounds.0 >= a1 - 1e-9, CheckValue::Real(lambda.bounds.0));
    let threshold = compute_threshold_n_with(&opts.catalog, 1e-9)?;
    if k >= threshold {
        checks.require("lambda_below_alpha0", lambda.bounds.1 < a0 - 1e-7, CheckValue::Real(lambda.bounds.1));
    } else {
        checks.inform("lambda_below_alpha0", lambda.bounds.1 < a0, CheckValue::Real(lambda.bounds.1));
    }
    checks.inform("threshold", true, CheckValue::Count(threshold));

    Ok(ConstructionReport {
        family: Family::GkWn,
        params: params(&[("k", k), ("m", t.m)]),
        order: g.order(),
        fat_count: fat,
        lambda_min: lambda.value,
        lambda_bounds: lambda.bounds,
        method: lambda.method,
        checks: checks.finish()?,
        repairs,
        graph: g,
        hoffman: sum.hoffman,
        parts: sum.parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{default_partitions, remark_partitions};

    #[test]
    fn remark_instance() {
        let r = build_gk_wn(4, &remark_partitions()).unwrap();
        assert_eq!(r.order, 48);
        assert_eq!(r.graph.is_regular(), Some(4));
        assert!((r.lambda_min - alpha1()).abs() < 1e-9);
        assert_eq!(r.fat_count, 17);
        assert!(r.repairs.is_empty());
    }

    #[test]
    fn default_instances() {
        for k in 4..=7 {
            let r = build_gk_wn(k, &default_partitions(k, 1).unwrap()).unwrap();
            assert_eq!(r.order, 4 * k * (k - 1) * (k - 2));
            assert_eq!(r.fat_count, 2 * (2 * k * k - 4 * k + 1));
            assert!(r.lambda_min >= alpha1() - 1e-9);
            assert!(r.repairs.is_empty());
        }
    }

    #[test]
    fn repair_joins_components() {
        // Two copies of the remark partitions on disjoint halves of 1..24.
        let base = remark_partitions();
        let shift = |bs: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            bs.iter().cloned().chain(bs.iter().map(|b| b.iter().map(|e| e + 12).collect())).collect()
        };
        let t = TriplePartition { m: 24, p: shift(&base.p), q: shift(&base.q), r: shift(&base.r) };
        let off = WnOptions { repair: false, ..WnOptions::default() };
        assert!(matches!(build_gk_wn_with(4, &t, &off), Err(Error::Construction { .. })));
        let r = build_gk_wn(4, &t).unwrap();
        assert!(r.graph.is_connected());
        assert_eq!(r.repairs.len(), 1);
        assert_eq!(r.graph.is_regular(), Some(4));
    }
}
