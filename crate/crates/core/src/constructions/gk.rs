//! `G_k`: slim graph of a sum of 𝔥₈ copies, one per edge of a
//! `(k, k−1)`-semiregular bipartite graph.
//!
//! Summand `s` sits on edge `(i, j)`, `i ∈ R`, `j ∈ Y`. Its slim path is
//! `x1 x2 x3` at positions `3s, 3s+1, 3s+2`; `F_i` collects the fats of the
//! `x1`'s at `i`, `E_i` those of the `x3`'s, `D_j` those of the `x2`'s at `j`.

use super::{certified_lambda, params, CheckValue, Checks, ConstructionReport, Family, SemiregularBipartite};
use crate::error::Result;
use crate::graph::{find_induced, is_cocktail_party, is_line_graph, PatternKind};
use crate::hoffman::{hsum, verify_decomposition, Catalog, CatalogName, SumSpec};
use crate::spectra::alpha0;

const FAT_X1: usize = 3;
const FAT_X2: usize = 4;
const FAT_X3: usize = 5;

pub fn build_gk(b: &SemiregularBipartite) -> Result<ConstructionReport> {
    build_gk_with(b, &Catalog::standard())
}

pub fn build_gk_with(b: &SemiregularBipartite, catalog: &Catalog) -> Result<ConstructionReport> {
    b.validate()?;
    let k = b.k;
    let edges = b.edges();
    let h8 = catalog.get(CatalogName::H8);
    let n_vertices = b.graph.order();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for (s, &(i, j)) in edges.iter().enumerate() {
        at[i].push(s);
        at[j].push(s);
    }
    let mut fat_classes = Vec::new();
    for &i in &b.side_r {
        fat_classes.push(at[i].iter().map(|&s| (s, FAT_X1)).collect());
    }
    for &i in &b.side_r {
        fat_classes.push(at[i].iter().map(|&s| (s, FAT_X3)).collect());
    }
    for &j in &b.side_y {
        fat_classes.push(at[j].iter().map(|&s| (s, FAT_X2)).collect());
    }
    let sum = hsum(&SumSpec { summands: vec![h8.clone(); edges.len()], fat_classes })?;
    let g = sum.hoffman.slim_graph();
    let lambda = certified_lambda(&g, &sum)?;

    let a0 = alpha0();
    let mut checks = Checks::default();
    checks.require("k_regular", g.is_regular() == Some(k), CheckValue::Count(k));
    checks.require("connected", g.is_connected(), CheckValue::Flag(g.is_connected()));
    checks.require(
        "vertex_count",
        g.order() == 3 * k * b.side_r.len(),
        CheckValue::Count(g.order()),
    );
    let hl = sum.hoffman.lambda_min(super::REPORT_TOL)?;
    checks.require("hoffman_lambda_min", (hl - a0).abs() < 1e-9, CheckValue::Real(hl));
    checks.require(
        "decomposition",
        verify_decomposition(&sum.hoffman, &sum.parts)?,
        CheckValue::Count(sum.parts.len()),
    );
    checks.require("lambda_lower", lambda.bounds.0 >= a0 - 1e-9, CheckValue::Real(lambda.bounds.0));
    checks.require("lambda_below_minus_two", lambda.bounds.1 < -2.0, CheckValue::Real(lambda.bounds.1));

    // x2 of summand 0 with x1, x3 of summand 0 and x2 of a summand sharing D_j.
    let j = edges[0].1;
    let sibling = at[j].iter().copied().find(|&s| s != 0);
    let witness = sibling.map(|s| vec![1, 0, 2, 3 * s + 1]);
    let witness_ok = witness.as_ref().is_some_and(|w| {
        let (c, l) = (w[0], &w[1..]);
        l.iter().all(|&x| g.has_edge(c, x))
            && !g.has_edge(l[0], l[1])
            && !g.has_edge(l[0], l[2])
            && !g.has_edge(l[1], l[2])
    });
    checks.require("claw_witness", witness_ok, CheckValue::Vertices(witness.unwrap_or_default()));
    let claw = find_induced(&g, PatternKind::ThreeClaw);
    checks.require("three_claw", claw.is_some(), CheckValue::Vertices(claw.unwrap_or_default()));
    let line = is_line_graph(&g)?.is_line;
    checks.require("not_line_graph", !line, CheckValue::Flag(line));
    let cocktail = is_cocktail_party(&g);
    checks.require("not_cocktail_party", cocktail.is_none(), CheckValue::Flag(cocktail.is_some()));

    Ok(ConstructionReport {
        family: Family::Gk,
        params: params(&[("k", k), ("a", b.a)]),
        order: g.order(),
        fat_count: sum.hoffman.fat_count(),
        lambda_min: lambda.value,
        lambda_bounds: lambda.bounds,
        method: lambda.method,
        checks: checks.finish()?,
        repairs: Vec::new(),
        graph: g,
        hoffman: sum.hoffman,
        parts: sum.parts,
    })
}
