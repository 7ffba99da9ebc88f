//! Householder reduction to tridiagonal form and Sturm-count bisection.

/// Symmetric tridiagonal matrix: `diag[0..n]`, `off[i]` couples `i` and `i+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

/// Reduces the dense symmetric `n x n` matrix `a` (row-major) in place by
/// orthogonal similarity.
pub fn householder(mut a: Vec<f64>, n: usize) -> Tridiagonal {
    assert_eq!(a.len(), n * n);
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let col = |a: &[f64], i: usize| a[(k + 1 + i) * n + k];
        let norm = (0..m).map(|i| col(&a, i).powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = col(&a, 0);
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in 0..m {
            v[i] = col(&a, i);
        }
        v[0] -= alpha;
        let vnorm = v[..m].iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for x in &mut v[..m] {
            *x /= vnorm;
        }
        // p = A_sub v, K = v.p, q = p - K v; A_sub -= 2 (v q^T + q v^T)
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            p[i] = a[row..row + m].iter().zip(&v[..m]).map(|(x, y)| x * y).sum();
        }
        let kk: f64 = p[..m].iter().zip(&v[..m]).map(|(x, y)| x * y).sum();
        for i in 0..m {
            p[i] -= kk * v[i];
        }
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            let (vi, qi) = (v[i], p[i]);
            for j in 0..m {
                a[row + j] -= 2.0 * (vi * p[j] + qi * v[j]);
            }
        }
        a[(k + 1) * n + k] = alpha;
        a[k * n + k + 1] = alpha;
        for i in 1..m {
            a[(k + 1 + i) * n + k] = 0.0;
            a[k * n + k + 1 + i] = 0.0;
        }
    }
    Tridiagonal {
        diag: (0..n).map(|i| a[i * n + i]).collect(),
        off: (1..n).map(|i| a[i * n + i - 1]).collect(),
    }
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of the
    /// LDLᵀ factorisation of `T - xI`).
    pub fn count_below(&self, x: f64) -> usize {
        let guard = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q: f64 = 1.0;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            let safe = if q.abs() < guard { guard.copysign(q) } else { q };
            q = self.diag[i] - x - coupling / safe;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo - 1.0, hi + 1.0)
    }

    /// The `k`-th smallest eigenvalue (0-based) to within `tol`.
    pub fn kth_eigenvalue(&self, k: usize, tol: f64) -> f64 {
        assert!(k < self.len());
        let (mut lo, mut hi) = self.bounds();
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_preserves_trace_and_frobenius_norm() {
        let n = 5;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = ((i * 3 + j * 3 + i * j) % 7) as f64 - 3.0;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let t = householder(a, n);
        let t_trace: f64 = t.diag.iter().sum();
        let t_frob: f64 =
            t.diag.iter().map(|x| x * x).sum::<f64>() + 2.0 * t.off.iter().map(|x| x * x).sum::<f64>();
        assert!((trace - t_trace).abs() < 1e-12);
        assert!((frob - t_frob).abs() < 1e-10);
    }

    #[test]
    fn bisection_on_known_tridiagonal() {
        // Path P_4: eigenvalues 2 cos(k pi / 5).
        let t = Tridiagonal {
            diag: vec![0.0; 4],
            off: vec![1.0; 3],
        };
        for k in 0..4 {
            let expected = 2.0 * ((4 - k) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((t.kth_eigenvalue(k, 1e-12) - expected).abs() < 1e-11);
        }
        assert_eq!(t.count_below(-10.0), 0);
        assert_eq!(t.count_below(10.0), 4);
    }
}
