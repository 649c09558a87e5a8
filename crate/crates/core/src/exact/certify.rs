//! Exact spectral-bound certificates.
//!
//! Two independent routes are provided. The matrix route decides positive
//! (semi)definiteness of an integer matrix by fraction-free symmetric
//! elimination; it backs the `certify_*` functions. The polynomial route
//! counts eigenvalues on either side of a rational bound from the
//! characteristic polynomial alone: the polynomial of a symmetric matrix is
//! real-rooted, so Descartes' rule of signs is exact for it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{charpoly, IntPoly, MatrixKind};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Proved,
    Refuted,
}

impl Certificate {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Certificate::Proved
        } else {
            Certificate::Refuted
        }
    }

    pub fn is_proved(self) -> bool {
        self == Certificate::Proved
    }
}

/// Positive semidefiniteness (or definiteness, when `strict`) of a symmetric
/// integer matrix.
///
/// Each step eliminates the first row. A negative pivot refutes; a zero
/// pivot refutes in the strict case and otherwise requires its whole row to
/// vanish. The Schur complement is kept integral by scaling with the
/// (positive) pivot and then dividing out the content of the matrix, which
/// preserves the sign structure.
pub fn is_psd_matrix(matrix: &[Vec<BigInt>], strict: bool) -> bool {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    while !a.is_empty() {
        let pivot = a[0][0].clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if strict || a[0].iter().skip(1).any(|x| !x.is_zero()) {
                return false;
            }
            a = a
                .into_iter()
                .skip(1)
                .map(|row| row.into_iter().skip(1).collect())
                .collect();
            continue;
        }
        let k = a.len();
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(k - 1);
        let mut content = BigInt::zero();
        for i in 1..k {
            let mut row = Vec::with_capacity(k - 1);
            for j in 1..k {
                let v = &pivot * &a[i][j] - &a[i][0] * &a[0][j];
                content = content.gcd(&v);
                row.push(v);
            }
            next.push(row);
        }
        if content > BigInt::from(1) {
            for row in next.iter_mut() {
                for v in row.iter_mut() {
                    *v = &*v / &content;
                }
            }
        }
        a = next;
    }
    true
}

fn scaled(g: &Graph, diag: &BigInt, off: &BigInt) -> Vec<Vec<BigInt>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        diag.clone()
                    } else if g.has_edge(i, j) {
                        off.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn parts(bound: Rational64) -> (BigInt, BigInt) {
    // Ratio keeps the denominator positive.
    (BigInt::from(*bound.numer()), BigInt::from(*bound.denom()))
}

/// λ₁(A) ≤ bound, via q·bound·I - q·A ⪰ 0 with bound = p/q.
pub fn certify_rho_le(g: &Graph, bound: Rational64) -> Certificate {
    let (p, q) = parts(bound);
    Certificate::from_bool(is_psd_matrix(&scaled(g, &p, &-q), false))
}

/// λ₁(A) < bound.
pub fn certify_rho_lt(g: &Graph, bound: Rational64) -> Certificate {
    let (p, q) = parts(bound);
    Certificate::from_bool(is_psd_matrix(&scaled(g, &p, &-q), true))
}

/// λ_n(A) ≥ bound, via q·A - p·I ⪰ 0.
pub fn certify_lambda_min_ge(g: &Graph, bound: Rational64) -> Certificate {
    let (p, q) = parts(bound);
    Certificate::from_bool(is_psd_matrix(&scaled(g, &-p, &q), false))
}

/// λ_n(A) > bound.
pub fn certify_lambda_min_gt(g: &Graph, bound: Rational64) -> Certificate {
    let (p, q) = parts(bound);
    Certificate::from_bool(is_psd_matrix(&scaled(g, &-p, &q), true))
}

/// Numbers of roots below, at and above a bound, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCount {
    pub below: usize,
    pub equal: usize,
    pub above: usize,
}

/// Counts the roots of a real-rooted polynomial relative to `bound`.
///
/// With bound = p/q the polynomial R(y) = q^d · P((y + p)/q) has a positive
/// root for every root of P above the bound and a zero root for every root
/// at it. Descartes' rule counts positive roots exactly when all roots are
/// real. The answer is meaningless for polynomials with complex roots.
pub fn root_count(poly: &IntPoly, bound: &BigRational) -> RootCount {
    let Some(d) = poly.degree() else {
        return RootCount {
            below: 0,
            equal: 0,
            above: 0,
        };
    };
    let (p, q) = (bound.numer().clone(), bound.denom().clone());
    // S(x) = q^d P(x / q)
    let mut qpow = BigInt::from(1);
    let mut s = vec![BigInt::zero(); d + 1];
    for k in (0..=d).rev() {
        s[k] = poly.coeff(k) * &qpow;
        qpow *= &q;
    }
    let r = IntPoly::new(s).shift(&p);
    let equal = r.x_valuation();
    let above = r.sign_variations();
    RootCount {
        below: d - equal - above,
        equal,
        above,
    }
}

/// Eigenvalue counts of the chosen matrix of `g` around `bound`, from the
/// exact characteristic polynomial.
pub fn eigenvalue_count(g: &Graph, kind: MatrixKind, bound: &BigRational) -> Result<RootCount> {
    Ok(root_count(&charpoly(g, kind)?, bound))
}
