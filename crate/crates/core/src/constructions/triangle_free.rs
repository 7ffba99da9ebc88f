//! `G′`: cubic triangle-free graphs from `C_{2n}`.
//!
//! Cycle positions are `1..=2n`. For each odd `o` there are two 𝔥₉
//! summands, `(o, o+1)` and `(o, o−1)` (mod `2n`), so every even position
//! also lies on exactly two summands. `F_o` and `E_o` join the `x1`'s and
//! the `x3`'s of the two summands at `o`; `D_e` joins the `{x2, x4}` pairs
//! of the two summands at `e`. Summand `s` has slim vertices `4s..4s+4`.

use super::{certified_lambda, params, CheckValue, Checks, ConstructionReport, Family};
use crate::error::{Error, Result};
use crate::graph::{find_induced, is_cocktail_party, is_line_graph, PatternKind};
use crate::hoffman::{hsum, verify_decomposition, Catalog, CatalogName, SumSpec};
use crate::spectra::alpha0;

const FAT_F: usize = 4;
const FAT_E: usize = 5;
const FAT_D: usize = 6;

pub fn build_triangle_free(n: usize) -> Result<ConstructionReport> {
    build_triangle_free_with(n, &Catalog::standard())
}

pub fn build_triangle_free_with(n: usize, catalog: &Catalog) -> Result<ConstructionReport> {
    if n < 2 {
        return Err(Error::input(format!("the triangle-free family needs n >= 2, got {n}")));
    }
    let len = 2 * n;
    let wrap = |p: usize| (p + len - 1) % len + 1;
    // (odd, even) position of each summand.
    let summands: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| [(2 * i - 1, wrap(2 * i)), (2 * i - 1, wrap(2 * i + len - 2))])
        .collect();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); len + 1];
    for (s, &(o, e)) in summands.iter().enumerate() {
        at[o].push(s);
        at[e].push(s);
    }
    let mut fat_classes = Vec::new();
    for o in (1..=len).step_by(2) {
        fat_classes.push(at[o].iter().map(|&s| (s, FAT_F)).collect());
        fat_classes.push(at[o].iter().map(|&s| (s, FAT_E)).collect());
    }
    for e in (2..=len).step_by(2) {
        fat_classes.push(at[e].iter().map(|&s| (s, FAT_D)).collect());
    }
    let h9 = catalog.get(CatalogName::H9);
    let sum = hsum(&SumSpec { summands: vec![h9.clone(); summands.len()], fat_classes })?;
    let g = sum.hoffman.slim_graph();
    let lambda = certified_lambda(&g, &sum)?;

    let a0 = alpha0();
    let mut checks = Checks::default();
    checks.require("cubic", g.is_regular() == Some(3), CheckValue::Flag(g.is_regular() == Some(3)));
    checks.require("triangle_free", g.is_triangle_free(), CheckValue::Flag(g.is_triangle_free()));
    checks.require("vertex_count", g.order() == 8 * n, CheckValue::Count(g.order()));
    checks.inform("connected", true, CheckValue::Flag(g.is_connected()));
    let hl = sum.hoffman.lambda_min(super::REPORT_TOL)?;
    checks.require("hoffman_lambda_min", (hl - a0).abs() < 1e-9, CheckValue::Real(hl));
    checks.require(
        "decomposition",
        verify_decomposition(&sum.hoffman, &sum.parts)?,
        CheckValue::Count(sum.parts.len()),
    );
    checks.require("lambda_lower", lambda.bounds.0 >= a0 - 1e-9, CheckValue::Real(lambda.bounds.0));
    checks.require("lambda_below_minus_two", lambda.bounds.1 < -2.0, CheckValue::Real(lambda.bounds.1));

    // N(x1) = {x2, x3, x1 of the other summand at o};
    // N(x2) = {x1, x2 and x4 of the other summand at e}.
    let x = |s: usize, t: usize| 4 * s + t - 1;
    let other = |list: &Vec<usize>, s: usize| list.iter().copied().find(|&t| t != s).expect("two summands");
    let mut bad = Vec::new();
    for (s, &(o, e)) in summands.iter().enumerate() {
        let so = other(&at[o], s);
        let se = other(&at[e], s);
        let mut want1 = vec![x(s, 2), x(s, 3), x(so, 1)];
        let mut want2 = vec![x(s, 1), x(se, 2), x(se, 4)];
        want1.sort_unstable();
        want2.sort_unstable();
        if g.neighbors(x(s, 1)) != want1.as_slice() || g.neighbors(x(s, 2)) != want2.as_slice() {
            bad.push(s);
        }
    }
    checks.require("neighbour_pattern", bad.is_empty(), CheckValue::Vertices(bad));
    let line = is_line_graph(&g)?.is_line;
    checks.require("not_line_graph", !line, CheckValue::Flag(line));
    let claw = find_induced(&g, PatternKind::ThreeClaw);
    checks.inform("three_claw", claw.is_some(), CheckValue::Vertices(claw.unwrap_or_default()));
    let cocktail = is_cocktail_party(&g);
    checks.require("not_cocktail_party", cocktail.is_none(), CheckValue::Flag(cocktail.is_some()));

    Ok(ConstructionReport {
        family: Family::TriangleFree,
        params: params(&[("n", n)]),
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        for n in 2..=6 {
            let r = build_triangle_free(n).unwrap();
            assert_eq!(r.order, 8 * n);
            assert_eq!(r.fat_count, 3 * n);
            assert!(r.lambda_min >= alpha0() - 1e-9 && r.lambda_min < -2.0 - 1e-7, "{n}");
            for v in 0..r.order {
                let nb = r.graph.neighbors(v);
                for (i, &u) in nb.iter().enumerate() {
                    assert!(nb[i + 1..].iter().all(|&w| !r.graph.has_edge(u, w)));
                }
            }
        }
    }

    #[test]
    fn rejects_n1() {
        assert!(matches!(build_triangle_free(1), Err(Error::Input(_))));
    }
}
