use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::delete_vertex;

/// Largest order accepted by [`charpoly`].
pub const CHARPOLY_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// A(G)
    Adjacency,
    /// D(G) - A(G)
    Laplacian,
    /// D(G) + A(G)
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
        }
    }

    pub fn matrix(self, g: &Graph) -> Vec<Vec<i64>> {
        let mut m = g.adjacency_matrix();
        if self == MatrixKind::Adjacency {
            return m;
        }
        let sign = if self == MatrixKind::Laplacian { -1 } else { 1 };
        for (v, row) in m.iter_mut().enumerate() {
            let d = g.degree(v) as i64;
            for x in row.iter_mut() {
                *x *= sign;
            }
            row[v] = d;
        }
        m
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "laplacian" | "l" => Ok(MatrixKind::Laplacian),
            "signless" | "signless_laplacian" | "signless-laplacian" | "q" => {
                Ok(MatrixKind::SignlessLaplacian)
            }
            other => Err(Error::InvalidArgument(format!(
                "unknown matrix kind `{other}`"
            ))),
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Ring operations for the Berkowitz recurrence; `None` signals overflow.
trait Ring: Clone {
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Division-free Berkowitz algorithm. Returns the coefficients of
/// det(xI - M) in descending order.
fn berkowitz<T: Ring>(m: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = m.len();
    let zero = T::from_i64(0);
    let one = T::from_i64(1);
    if n == 0 {
        return Some(vec![one]);
    }
    let mut vect = vec![one.clone(), T::from_i64(m[0][0]).neg()?];
    for r in 1..n {
        // col = [1, -a_rr, -R S, -R C S, ..., -R C^{r-1} S]
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(T::from_i64(m[r][r]).neg()?);
        let mut v: Vec<T> = (0..r).map(|i| T::from_i64(m[i][r])).collect();
        for k in 0..r {
            let mut dot = zero.clone();
            for (j, vj) in v.iter().enumerate() {
                if m[r][j] != 0 {
                    dot = dot.add(&T::from_i64(m[r][j]).mul(vj)?)?;
                }
            }
            col.push(dot.neg()?);
            if k + 1 < r {
                let mut next = Vec::with_capacity(r);
                for row in m.iter().take(r) {
                    let mut acc = zero.clone();
                    for (j, vj) in v.iter().enumerate() {
                        if row[j] != 0 {
                            acc = acc.add(&T::from_i64(row[j]).mul(vj)?)?;
                        }
                    }
                    next.push(acc);
                }
                v = next;
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for (j, vj) in vect.iter().enumerate().take(i.min(r) + 1) {
                acc = acc.add(&col[i - j].mul(vj)?)?;
            }
            next.push(acc);
        }
        vect = next;
    }
    Some(vect)
}

/// Characteristic polynomial det(xI - M) of an integer square matrix.
pub fn charpoly_of_matrix(m: &[Vec<i64>]) -> IntPoly {
    let desc: Vec<BigInt> = match berkowitz::<i128>(m) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => berkowitz::<BigInt>(m).expect("big-integer arithmetic cannot overflow"),
    };
    IntPoly::new(desc.into_iter().rev().collect())
}

/// Exact characteristic polynomial of the chosen matrix of `g`; monic of
/// degree `n`.
pub fn charpoly(g: &Graph, kind: MatrixKind) -> Result<IntPoly> {
    if g.order() > CHARPOLY_CAP {
        return Err(Error::CapExceeded {
            operation: "charpoly",
            order: g.order(),
            cap: CHARPOLY_CAP,
        });
    }
    Ok(charpoly_of_matrix(&kind.matrix(g)))
}

/// P_A(G) = x P_A(G - x1) - P_A(G - x1 - x2) for a pendant vertex `x1`
/// with neighbour `x2`.
pub fn charpoly_pendant_recurrence(g: &Graph, x1: usize) -> Result<IntPoly> {
    g.check_vertex(x1)?;
    let mut nb = g.neighbors(x1);
    let (Some(x2), None) = (nb.next(), nb.next()) else {
        return Err(Error::NotPendant(x1));
    };
    let g1 = delete_vertex(g, x1)?;
    let x2_in_g1 = if x2 > x1 { x2 - 1 } else { x2 };
    let g2 = delete_vertex(&g1, x2_in_g1)?;
    let p1 = charpoly(&g1, MatrixKind::Adjacency)?;
    let p2 = charpoly(&g2, MatrixKind::Adjacency)?;
    Ok(&(&IntPoly::x() * &p1) - &p2)
}

/// The discriminant d_G, the product of (λ_i + 2) over the adjacency
/// spectrum, evaluated exactly as (-1)^n P_A(-2).
pub fn discriminant(g: &Graph) -> Result<BigInt> {
    let p = charpoly(g, MatrixKind::Adjacency)?;
    let v = p.eval(&BigInt::from(-2));
    Ok(if g.order().is_multiple_of(2) { v } else { -v })
}

/// tr(A^i) for i = 1..=k_max, exactly.
pub fn trace_powers(g: &Graph, k_max: usize) -> Vec<BigInt> {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    // power = A^i, starting from the identity.
    let mut power: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        power = power
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| nbrs[j].iter().map(|&k| &row[k]).sum())
                    .collect()
            })
            .collect();
        out.push((0..n).map(|i| &power[i][i]).sum());
    }
    out
}
