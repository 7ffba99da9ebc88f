//! Division-free characteristic polynomial (Berkowitz).

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// `det(xI - M)` for a square integer matrix, computed exactly.
///
/// Berkowitz: with `A_k` the leading `k x k` block, `R_k = M[k][..k]` and
/// `S_k = M[..k][k]`, the coefficient vector of the char poly of `A_{k+1}`
/// is the Toeplitz matrix of `(1, -m_kk, -R S, -R A S, -R A² S, ...)`
/// applied to that of `A_k`.
pub fn char_poly(m: &[Vec<i64>]) -> Result<IntPolynomial> {
    let n = m.len();
    if let Some((i, row)) = m.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::input(format!(
            "matrix is not square: row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    // Highest degree first while accumulating.
    let mut p: Vec<BigInt> = vec![BigInt::from(1)];
    for k in 0..n {
        let mut col = Vec::with_capacity(k + 2);
        col.push(BigInt::from(1));
        col.push(BigInt::from(-m[k][k]));
        let mut v: Vec<BigInt> = (0..k).map(|i| BigInt::from(m[i][k])).collect();
        for _ in 0..k {
            let dot: BigInt = (0..k).map(|j| &v[j] * m[k][j]).sum();
            col.push(-dot);
            v = (0..k)
                .map(|i| {
                    (0..k)
                        .filter(|&j| m[i][j] != 0)
                        .map(|j| &v[j] * m[i][j])
                        .sum()
                })
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (r, slot) in next.iter_mut().enumerate() {
            for (c, pc) in p.iter().enumerate().take(r + 1) {
                *slot += &col[r - c] * pc;
            }
        }
        p = next;
    }
    p.reverse();
    Ok(IntPolynomial::new(p))
}
