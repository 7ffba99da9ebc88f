//! Triple partitions `P`, `Q`, `R` of `{1..m}` with block sizes `k−2`, `k`
//! and `k−1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplePartition {
    pub m: usize,
    pub p: Vec<Vec<usize>>,
    pub q: Vec<Vec<usize>>,
    pub r: Vec<Vec<usize>>,
}

impl TriplePartition {
    /// Checks that `P`, `Q`, `R` partition `{1..m}` with block sizes
    /// `k−2`, `k`, `k−1`.
    pub fn validate(&self, k: usize) -> Result<()> {
        if k < 4 {
            return Err(Error::input(format!("triple partitions need k >= 4, got {k}")));
        }
        for (name, blocks, size) in [("P", &self.p, k - 2), ("Q", &self.q, k), ("R", &self.r, k - 1)] {
            let mut seen = vec![false; self.m + 1];
            for b in blocks {
                if b.len() != size {
                    return Err(Error::input(format!("{name} has a block of size {}, expected {size}", b.len())));
                }
                for &e in b {
                    if e == 0 || e > self.m || seen[e] {
                        return Err(Error::input(format!("{name} is not a partition of 1..{}: element {e}", self.m)));
                    }
                    seen[e] = true;
                }
            }
            if seen[1..].iter().any(|&s| !s) {
                return Err(Error::input(format!("{name} does not cover 1..{}", self.m)));
            }
        }
        Ok(())
    }

    /// `(i, j, l)`: the 0-based `P`, `Q`, `R` blocks of every element,
    /// indexed by element − 1.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut t = vec![(0, 0, 0); self.m];
        for (i, b) in self.p.iter().enumerate() {
            b.iter().for_each(|&e| t[e - 1].0 = i);
        }
        for (j, b) in self.q.iter().enumerate() {
            b.iter().for_each(|&e| t[e - 1].1 = j);
        }
        for (l, b) in self.r.iter().enumerate() {
            b.iter().for_each(|&e| t[e - 1].2 = l);
        }
        t
    }
}

/// Elements are coordinates `(X, y, z) ∈ [ak] × [k−1] × [k−2]` encoded as
/// `1 + y + (k−1)(z + (k−2)X)`. `R` blocks vary `y` (consecutive runs),
/// `P` blocks vary `z` (stride `k−1`), and the `Q` block `(y, z, c)` takes
/// `X = ck + t + y mod ak` for `t ∈ [k]`.
pub fn default_partitions(k: usize, a: usize) -> Result<TriplePartition> {
    if k < 4 || a < 1 {
        return Err(Error::input(format!("default_partitions needs k >= 4 and a >= 1, got k={k}, a={a}")));
    }
    let (nx, ny, nz) = (a * k, k - 1, k - 2);
    let code = |x: usize, y: usize, z: usize| 1 + y + ny * (z + nz * x);
    let mut p = Vec::with_capacity(nx * ny);
    let mut r = Vec::with_capacity(nx * nz);
    for x in 0..nx {
        for y in 0..ny {
            p.push((0..nz).map(|z| code(x, y, z)).collect());
        }
        for z in 0..nz {
            r.push((0..ny).map(|y| code(x, y, z)).collect());
        }
    }
    let mut q = Vec::with_capacity(ny * nz * a);
    for y in 0..ny {
        for z in 0..nz {
            for c in 0..a {
                let mut b: Vec<usize> = (0..k).map(|t| code((c * k + t + y) % nx, y, z)).collect();
                b.sort_unstable();
                q.push(b);
            }
        }
    }
    let t = TriplePartition { m: nx * ny * nz, p, q, r };
    t.validate(k)?;
    Ok(t)
}

/// The partitions of `{1..12}` for `k = 4`: `p_i = {i, i+6}`,
/// `q_j = {j, j+3, j+6, j+9}`, `r_l = {3l−2, 3l−1, 3l}`.
pub fn remark_partitions() -> TriplePartition {
    TriplePartition {
        m: 12,
        p: (1..=6).map(|i| vec![i, i + 6]).collect(),
        q: (1..=3).map(|j| vec![j, j + 3, j + 6, j + 9]).collect(),
        r: (1..=4).map(|l| vec![3 * l - 2, 3 * l - 1, 3 * l]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(t: &TriplePartition) -> (usize, usize, usize, usize) {
        (t.m, t.p.len(), t.q.len(), t.r.len())
    }

    #[test]
    fn remark_shape() {
        let t = remark_partitions();
        t.validate(4).unwrap();
        assert_eq!(shape(&t), (12, 6, 3, 4));
        assert_eq!(t.triples()[0], (0, 0, 0));
        assert_eq!(t.triples()[11], (5, 2, 3));
    }

    #[test]
    fn default_shapes() {
        assert_eq!(shape(&default_partitions(4, 1).unwrap()), (24, 12, 6, 8));
        assert_eq!(shape(&default_partitions(5, 1).unwrap()), (60, 20, 12, 15));
        for k in 4..=9 {
            for a in 1..=3 {
                let t = default_partitions(k, a).unwrap();
                assert_eq!(shape(&t), (a * k * (k - 1) * (k - 2), a * k * (k - 1), a * (k - 1) * (k - 2), a * k * (k - 2)));
            }
        }
    }

    #[test]
    fn blocks_from_different_partitions_meet_at_most_once() {
        for (k, a) in [(4, 1), (5, 2), (6, 1), (7, 3)] {
            let t = default_partitions(k, a).unwrap();
            let tr = t.triples();
            let mut seen = std::collections::HashSet::new();
            for &(i, j, _) in &tr {
                assert!(seen.insert(("pq", i, j)));
            }
            for &(i, _, l) in &tr {
                assert!(seen.insert(("pr", i, l)));
            }
            for &(_, j, l) in &tr {
                assert!(seen.insert(("qr", j, l)));
            }
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(default_partitions(3, 1).is_err());
        let mut t = remark_partitions();
        t.q[0][0] = 2;
        assert!(t.validate(4).is_err());
        assert!(remark_partitions().validate(5).is_err());
    }
}
