//! Exact integer characteristic polynomials and the identities and bounds
//! built on them. Nothing in this module rounds.

mod certify;
mod charpoly;
mod identities;
mod poly;

pub use certify::{
    certify_lambda_min_ge, certify_lambda_min_gt, certify_rho_le, certify_rho_lt, eigenvalue_count,
    is_psd_matrix, root_count, Certificate, RootCount,
};
pub use charpoly::{
    charpoly, charpoly_of_matrix, charpoly_pendant_recurrence, discriminant, trace_powers,
    MatrixKind, CHARPOLY_CAP,
};
pub use identities::{verify_line_identity, verify_subdivision_identity, IdentityCheck};
pub use poly::IntPoly;
