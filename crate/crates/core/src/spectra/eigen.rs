//! Eigenvalues of a dense real symmetric matrix: Householder reduction to
//! tridiagonal form followed by the implicit QL iteration with Wilkinson
//! shifts (the EISPACK `tred2`/`tql2` pair without eigenvectors).

/// Per-eigenvalue iteration cap; the QL iteration converges cubically, so
/// hitting it means the input was not symmetric or contained NaN.
const MAX_SWEEPS: usize = 60;

/// Reduces `a` (destroyed) to tridiagonal form. Returns the diagonal and
/// the off-diagonal, where `e[i]` couples `i` and `i + 1` and `e[n-1] = 0`.
fn tridiagonalize(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut e = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let x: Vec<f64> = (k + 1..n).map(|i| a[i][k]).collect();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let mut v = x;
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|t| t * t).sum();
        if vv == 0.0 {
            e[k] = alpha;
            continue;
        }
        let beta = 2.0 / vv;
        let m = n - k - 1;
        // p = beta * B v, B the trailing block.
        let p: Vec<f64> = (0..m)
            .map(|i| beta * (0..m).map(|j| a[k + 1 + i][k + 1 + j] * v[j]).sum::<f64>())
            .collect();
        let kk = 0.5 * beta * v.iter().zip(&p).map(|(a, b)| a * b).sum::<f64>();
        let q: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - kk * vi).collect();
        for i in 0..m {
            for j in 0..m {
                a[k + 1 + i][k + 1 + j] -= v[i] * q[j] + q[i] * v[j];
            }
        }
        e[k] = alpha;
    }
    if n >= 2 {
        e[n - 2] = a[n - 1][n - 2];
    }
    let d = (0..n).map(|i| a[i][i]).collect();
    (d, e)
}

/// Implicit QL on a symmetric tridiagonal matrix; returns eigenvalues in
/// no particular order.
fn tridiagonal_ql(mut d: Vec<f64>, mut e: Vec<f64>) -> Vec<f64> {
    let n = d.len();
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                assert!(
                    sweeps <= MAX_SWEEPS,
                    "internal error: QL iteration failed to converge (input not symmetric or not finite)"
                );
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    d
}

/// All eigenvalues of a symmetric matrix, sorted descending.
pub(crate) fn symmetric_eigenvalues(a: Vec<Vec<f64>>) -> Vec<f64> {
    if a.is_empty() {
        return Vec::new();
    }
    let (d, e) = tridiagonalize(a);
    let mut vals = tridiagonal_ql(d, e);
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn diagonal_and_tiny() {
        assert_eq!(symmetric_eigenvalues(vec![vec![3.0]]), vec![3.0]);
        let v = symmetric_eigenvalues(vec![vec![2.0, 0.0], vec![0.0, -1.0]]);
        assert_eq!(v, vec![2.0, -1.0]);
        let v = symmetric_eigenvalues(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!(close(&v, &[1.0, -1.0], 1e-15));
    }

    #[test]
    fn dense_symmetric() {
        // Eigenvalues of [[4,1,2],[1,3,0],[2,0,1]] by the cubic's roots,
        // checked through the trace and determinant invariants.
        let a = vec![
            vec![4.0, 1.0, 2.0],
            vec![1.0, 3.0, 0.0],
            vec![2.0, 0.0, 1.0],
        ];
        let v = symmetric_eigenvalues(a);
        let tr: f64 = v.iter().sum();
        let det: f64 = v.iter().product();
        assert!((tr - 8.0).abs() < 1e-12);
        // det = 4*3*1 - 1*1*1 - 2*2*3 = 12 - 1 - 12 = -1
        assert!((det + 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_matrix() {
        let v = symmetric_eigenvalues(vec![vec![0.0; 5]; 5]);
        assert!(v.iter().all(|&x| x == 0.0));
    }
}
