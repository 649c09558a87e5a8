//! Exact checks of the line-graph and subdivision polynomial identities.

use serde::Serialize;

use super::{charpoly, IntPoly, MatrixKind};
use crate::error::Result;
use crate::graph::Graph;
use crate::transforms::{line_graph_simple, subdivision};

/// Outcome of an identity check; on failure both sides are the witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    #[serde(serialize_with = "ser_poly")]
    pub lhs: IntPoly,
    #[serde(serialize_with = "ser_poly")]
    pub rhs: IntPoly,
}

fn ser_poly<S: serde::Serializer>(p: &IntPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_ascending_string())
}

impl IdentityCheck {
    fn new(lhs: IntPoly, rhs: IntPoly) -> Self {
        IdentityCheck {
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

/// P_{A(L(G))}(x) = (x+2)^{m-n} P_{Q(G)}(x+2). When m < n the factor is
/// moved to the left: (x+2)^{n-m} P_{A(L(G))}(x) = P_{Q(G)}(x+2).
pub fn verify_line_identity(g: &Graph) -> Result<IdentityCheck> {
    let (n, m) = (g.order(), g.size());
    let pl = charpoly(&line_graph_simple(g), MatrixKind::Adjacency)?;
    let pq = charpoly(g, MatrixKind::SignlessLaplacian)?.shift(&2.into());
    Ok(if m >= n {
        IdentityCheck::new(pl, &IntPoly::linear_power(2, m - n) * &pq)
    } else {
        IdentityCheck::new(&IntPoly::linear_power(2, n - m) * &pl, pq)
    })
}

/// P_{A(S(G))}(x) = x^{m-n} P_{Q(G)}(x²), rearranged as above when m < n.
pub fn verify_subdivision_identity(g: &Graph) -> Result<IdentityCheck> {
    let (n, m) = (g.order(), g.size());
    let ps = charpoly(&subdivision(g), MatrixKind::Adjacency)?;
    let pq = charpoly(g, MatrixKind::SignlessLaplacian)?.inflate(2);
    Ok(if m >= n {
        IdentityCheck::new(ps, &IntPoly::monomial(m - n) * &pq)
    } else {
        IdentityCheck::new(&IntPoly::monomial(n - m) * &ps, pq)
    })
}
