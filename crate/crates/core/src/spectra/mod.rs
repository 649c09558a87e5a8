//! Floating-point spectra of the adjacency, Laplacian and signless Laplacian
//! matrices.
//!
//! Tolerance policy: eigenvalues are computed to about [`TARGET_ACCURACY`]
//! and compared with a slack of [`COMPARISON_SLACK`]. Strict inequalities
//! that matter (λ₂ < 2, λ₁ < p, λ_n > -2) are also certified exactly in
//! [`crate::exact`]; multiplicities and cospectrality are never decided from
//! floats.

mod eigen;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::MatrixKind;
use crate::graph::Graph;

pub const COMPARISON_SLACK: f64 = 1e-9;
pub const TARGET_ACCURACY: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub kind: MatrixKind,
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Absolute error bound per eigenvalue.
    pub err_bound: f64,
}

impl SpectrumReport {
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }
}

/// All eigenvalues of the chosen matrix.
///
/// The bound is the backward-error estimate of Householder reduction plus QL,
/// `8 n ε ‖M‖_F`: the computed values are exact eigenvalues of a matrix
/// within that distance of `M`, and by Weyl's inequality each is within
/// the bound of its true counterpart.
pub fn eigenvalues(g: &Graph, kind: MatrixKind) -> SpectrumReport {
    let m: Vec<Vec<f64>> = kind
        .matrix(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    let frob = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let n = g.order();
    let err_bound = (8.0 * n as f64 * f64::EPSILON * frob).max(f64::EPSILON);
    SpectrumReport {
        kind,
        values: eigen::symmetric_eigenvalues(m),
        err_bound,
    }
}

/// ρ(G) = λ₁ of the adjacency matrix; zero for the null graph.
pub fn spectral_radius(g: &Graph) -> f64 {
    eigenvalues(g, MatrixKind::Adjacency)
        .largest()
        .unwrap_or(0.0)
}

/// λ₂ of the adjacency matrix.
pub fn second_largest(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::InvalidArgument(
            "second largest eigenvalue needs at least 2 vertices".into(),
        ));
    }
    Ok(eigenvalues(g, MatrixKind::Adjacency).values[1])
}

/// λ_n of the adjacency matrix; zero for the null graph.
pub fn smallest(g: &Graph) -> f64 {
    eigenvalues(g, MatrixKind::Adjacency)
        .smallest()
        .unwrap_or(0.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interlacing {
    pub holds: bool,
    /// First index `i` (0-based) at which λ_i(G) ≥ λ_i(H) ≥ λ_{n-m+i}(G)
    /// fails beyond the comparison slack.
    pub first_violation: Option<usize>,
}

/// Checks Cauchy interlacing between `g` and its induced subgraph `h`,
/// where `h`'s vertex `i` is `g`'s vertex `map[i]`.
pub fn check_interlacing(g: &Graph, h: &Graph, map: &[usize]) -> Result<Interlacing> {
    if map.len() != h.order() {
        return Err(Error::NotInduced);
    }
    let induced = g.induced_subgraph(map).map_err(|_| Error::NotInduced)?;
    if &induced != h {
        return Err(Error::NotInduced);
    }
    let lg = eigenvalues(g, MatrixKind::Adjacency).values;
    let lh = eigenvalues(h, MatrixKind::Adjacency).values;
    let (n, m) = (lg.len(), lh.len());
    let first_violation = (0..m)
        .find(|&i| lg[i] < lh[i] - COMPARISON_SLACK || lh[i] < lg[n - m + i] - COMPARISON_SLACK);
    Ok(Interlacing {
        holds: first_violation.is_none(),
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{certify_rho_le, charpoly};
    use crate::graph::{make_family, Family};
    use crate::transforms::subdivision;
    use num_rational::Rational64;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn assert_values(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn examples() {
        let s = 2f64.sqrt();
        let r = eigenvalues(&fam(Family::Path { n: 3 }), MatrixKind::Adjacency);
        assert_values(&r.values, &[s, 0.0, -s], TARGET_ACCURACY);
        assert!(r.err_bound <= TARGET_ACCURACY);
        let r = eigenvalues(&fam(Family::Complete { n: 4 }), MatrixKind::Adjacency);
        assert_values(&r.values, &[3.0, -1.0, -1.0, -1.0], TARGET_ACCURACY);
        let r = eigenvalues(&fam(Family::Star { k: 3 }), MatrixKind::SignlessLaplacian);
        assert_values(&r.values, &[4.0, 1.0, 1.0, 0.0], TARGET_ACCURACY);
    }

    #[test]
    fn radius_examples() {
        // Kite_4^0 = K_4 sits at the endpoint.
        assert!((spectral_radius(&fam(Family::Kite { p: 4, q: 0 })) - 3.0).abs() < TARGET_ACCURACY);
        for q in 1..=20 {
            let rho = spectral_radius(&fam(Family::Kite { p: 4, q }));
            assert!(rho > 3.0 && rho < 4.0);
        }
        for n in 3..12 {
            assert!((spectral_radius(&fam(Family::Cycle { n })) - 2.0).abs() < TARGET_ACCURACY);
        }
        assert!((spectral_radius(&fam(Family::Path { n: 2 })) - 1.0).abs() < TARGET_ACCURACY);
    }

    #[test]
    fn second_largest_examples() {
        for p in 4..=11 {
            for q in 0..=20 {
                assert!(second_largest(&fam(Family::Kite { p, q })).unwrap() < 2.0 - 1e-8);
            }
        }
        assert!(
            (second_largest(&fam(Family::Cycle { n: 6 })).unwrap() - 1.0).abs() < TARGET_ACCURACY
        );
        assert!(
            (second_largest(&fam(Family::Complete { n: 4 })).unwrap() + 1.0).abs()
                < TARGET_ACCURACY
        );
        assert!(second_largest(&Graph::empty(1)).is_err());
    }

    #[test]
    fn paths_match_closed_form() {
        for n in 1..=32 {
            let r = eigenvalues(&fam(Family::Path { n }), MatrixKind::Adjacency);
            let want: Vec<f64> = (1..=n)
                .map(|j| 2.0 * (PI * j as f64 / (n + 1) as f64).cos())
                .collect();
            assert_values(&r.values, &want, TARGET_ACCURACY);
        }
    }

    #[test]
    fn cycle_spectrum_oracle() {
        let r = eigenvalues(&fam(Family::Cycle { n: 6 }), MatrixKind::Adjacency);
        let mut want: Vec<f64> = (0..6)
            .map(|j| 2.0 * (2.0 * PI * j as f64 / 6.0).cos())
            .collect();
        want.sort_by(|a, b| b.total_cmp(a));
        assert_values(&r.values, &want, TARGET_ACCURACY);
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let p = rng.gen_range(0.1..0.9);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn report_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(&mut rng, n);
            for kind in MatrixKind::ALL {
                let r = eigenvalues(&g, kind);
                assert!(r.values.windows(2).all(|w| w[0] >= w[1]));
                let trace: f64 = kind
                    .matrix(&g)
                    .iter()
                    .enumerate()
                    .map(|(i, row)| row[i] as f64)
                    .sum();
                let sum: f64 = r.values.iter().sum();
                assert!((sum - trace).abs() <= n as f64 * r.err_bound);
                if kind == MatrixKind::Adjacency {
                    let sq: f64 = r.values.iter().map(|x| x * x).sum();
                    assert!((sq - 2.0 * g.size() as f64).abs() <= 1e-9);
                }
            }
            let rho = spectral_radius(&g);
            if certify_rho_le(&g, Rational64::from_integer(2)).is_proved() {
                assert!(rho <= 2.0 + COMPARISON_SLACK);
            }
        }
    }

    #[test]
    fn bipartite_spectra_are_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let n = rng.gen_range(2..=8);
            let s = subdivision(&random_graph(&mut rng, n));
            let v = eigenvalues(&s, MatrixKind::Adjacency).values;
            let k = v.len();
            for i in 0..k {
                assert!((v[i] + v[k - 1 - i]).abs() <= COMPARISON_SLACK);
            }
        }
    }

    #[test]
    fn values_are_roots_of_the_exact_polynomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n);
            let r = eigenvalues(&g, MatrixKind::Adjacency);
            let p = charpoly(&g, MatrixKind::Adjacency).unwrap();
            let coeffs: Vec<f64> = p
                .coeffs()
                .iter()
                .map(|c| c.to_string().parse::<f64>().unwrap())
                .collect();
            for &lam in &r.values {
                // |P(λ)| ≤ |P'(λ)|·err + O(err²) for simple roots; a loose
                // bound covering clusters is Σ|c_k| k (|λ|+1)^k · err.
                let val: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * lam + c);
                let scale: f64 = coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.abs() * k as f64 * (lam.abs() + 1.0).powi(k as i32))
                    .sum();
                assert!(
                    val.abs() <= scale * (r.err_bound + 1e-12),
                    "{g:?}: P({lam}) = {val}"
                );
            }
        }
    }

    #[test]
    fn interlacing_examples() {
        let p3 = fam(Family::Path { n: 3 });
        let p2 = fam(Family::Path { n: 2 });
        assert!(check_interlacing(&p3, &p2, &[0, 1]).unwrap().holds);
        assert!(check_interlacing(&p3, &p3, &[0, 1, 2]).unwrap().holds);
        assert_eq!(check_interlacing(&p3, &p2, &[0, 2]), Err(Error::NotInduced));
        assert_eq!(check_interlacing(&p3, &p2, &[0]), Err(Error::NotInduced));
    }

    #[test]
    fn random_interlacing() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n);
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(&mut rng);
            vs.truncate(rng.gen_range(1..=n));
            let h = g.induced_subgraph(&vs).unwrap();
            assert!(check_interlacing(&g, &h, &vs).unwrap().holds);
        }
    }
}
