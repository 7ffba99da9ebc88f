//! Lanczos estimate of the smallest eigenvalue of a large sparse operator.
//!
//! Only an estimate: callers that need a guarantee pair it with rigorous
//! bounds and clamp.

use super::tridiag::Tridiagonal;

/// Runs `steps` Lanczos iterations with full reorthogonalisation on the
/// symmetric operator `matvec` of dimension `n` and returns the smallest
/// Ritz value.
pub fn lanczos_min<F>(n: usize, steps: usize, matvec: F) -> f64
where
    F: FnMut(&[f64], &mut [f64]),
{
    let (_, t) = run(n, steps, matvec);
    t.kth_eigenvalue(0, 1e-12)
}

/// Smallest Ritz value and its unit Ritz vector. The Rayleigh quotient of
/// the vector is an upper bound for the smallest eigenvalue.
pub fn lanczos_min_vector<F>(n: usize, steps: usize, matvec: F) -> (f64, Vec<f64>)
where
    F: FnMut(&[f64], &mut [f64]),
{
    let (basis, t) = run(n, steps, matvec);
    let theta = t.kth_eigenvalue(0, 1e-13);
    let s = tridiagonal_eigenvector(&t, theta);
    let mut y = vec![0.0; n];
    for (c, q) in s.iter().zip(&basis) {
        for (yi, qi) in y.iter_mut().zip(q) {
            *yi += c * qi;
        }
    }
    normalize(&mut y);
    (theta, y)
}

fn run<F>(n: usize, steps: usize, mut matvec: F) -> (Vec<Vec<f64>>, Tridiagonal)
where
    F: FnMut(&[f64], &mut [f64]),
{
    assert!(n > 0);
    let steps = steps.clamp(1, n);
    // Deterministic start vector with no special symmetry.
    let mut q: Vec<f64> = (0..n)
        .map(|i| 1.0 + ((i.wrapping_mul(2_654_435_761) >> 7) % 1000) as f64 / 1000.0)
        .collect();
    normalize(&mut q);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(steps);
    let mut alpha = Vec::with_capacity(steps);
    let mut beta: Vec<f64> = Vec::with_capacity(steps);
    let mut w = vec![0.0; n];
    for j in 0..steps {
        matvec(&q, &mut w);
        let a = dot(&w, &q);
        alpha.push(a);
        for (wi, qi) in w.iter_mut().zip(&q) {
            *wi -= a * qi;
        }
        if let (Some(prev), Some(&b)) = (basis.last(), beta.last()) {
            for (wi, pi) in w.iter_mut().zip(prev) {
                *wi -= b * pi;
            }
        }
        basis.push(q.clone());
        for v in &basis {
            let c = dot(&w, v);
            for (wi, vi) in w.iter_mut().zip(v) {
                *wi -= c * vi;
            }
        }
        let b = dot(&w, &w).sqrt();
        if j + 1 == steps || b < 1e-10 {
            break;
        }
        beta.push(b);
        q.copy_from_slice(&w);
        for x in &mut q {
            *x /= b;
        }
    }
    beta.truncate(alpha.len() - 1);
    (basis, Tridiagonal { diag: alpha, off: beta })
}

/// Inverse iteration with a shift just below `theta`, where `T − σI` is
/// positive definite and the unpivoted LDLᵀ solve is stable.
fn tridiagonal_eigenvector(t: &Tridiagonal, theta: f64) -> Vec<f64> {
    let m = t.diag.len();
    let sigma = theta - 1e-9 * (1.0 + theta.abs());
    let mut d = vec![0.0; m];
    let mut l = vec![0.0; m];
    d[0] = t.diag[0] - sigma;
    for i in 1..m {
        l[i] = t.off[i - 1] / d[i - 1];
        d[i] = t.diag[i] - sigma - l[i] * t.off[i - 1];
    }
    let mut z = vec![1.0; m];
    for _ in 0..4 {
        for i in 1..m {
            z[i] -= l[i] * z[i - 1];
        }
        for i in 0..m {
            z[i] /= d[i];
        }
        for i in (0..m - 1).rev() {
            z[i] -= l[i + 1] * z[i + 1];
        }
        normalize(&mut z);
    }
    z
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    for x in v {
        *x /= norm;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_estimate() {
        // C_400: λ_min = −2.
        let n = 400;
        let est = lanczos_min(n, 200, |x, y| {
            for i in 0..n {
                y[i] = x[(i + 1) % n] + x[(i + n - 1) % n];
            }
        });
        assert!((est + 2.0).abs() < 1e-3, "{est}");
        assert!(est >= -2.0 - 1e-9);
    }

    #[test]
    fn ritz_vector_is_an_eigenvector_of_a_small_operator() {
        // Path P_7: the Krylov space is the whole space after 7 steps.
        let n = 7;
        let op = |x: &[f64], y: &mut [f64]| {
            for i in 0..n {
                y[i] = if i > 0 { x[i - 1] } else { 0.0 } + if i + 1 < n { x[i + 1] } else { 0.0 };
            }
        };
        let (theta, v) = lanczos_min_vector(n, 7, op);
        let expected = -2.0 * (std::f64::consts::PI / 8.0).cos();
        assert!((theta - expected).abs() < 1e-10);
        let mut av = vec![0.0; n];
        op(&v, &mut av);
        for (a, b) in av.iter().zip(&v) {
            assert!((a - theta * b).abs() < 1e-8);
        }
    }
}
