//! One-variable orthogonal polynomials: Gram–Schmidt from moments, classical
//! recurrences, derivative Gram matrices, projected multiplication and
//! Wronskians, plus the Bell/Charlier and binomial-moment suites.

pub mod bell;
mod family;
mod functional;
mod projected;

pub use bell::{
    bell_moments, bell_polys, bell_triangle, bell_triangle_gf, binomial_hankel_check,
    binomial_moments, charlier_pprime_closed, krawtchouk_det_x, lawden_check, lawden_check_u,
    sequence_transform_check, SequenceTransform,
};
pub use family::{classical_family, ClassicalTag, MonicPolynomialFamily};
pub use functional::{
    check_orthogonal, monic_from_moments, pprime_gram, squared_norms, MomentFunctional,
};
pub use projected::{
    karlin_szego_check, projected_mult_det, superfactorial, wronskian, wronskian_at,
    ProjectedMultiplication,
};
