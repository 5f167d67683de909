//! Exact integration against Selberg-type measures, symmetric Jacobi
//! polynomials and Kaneko's integral with its hyperdeterminant and
//! moment-functional forms.

mod expand;
mod identities;
mod measure;
mod symmetric;

pub use expand::{
    kaneko_integrand, kaneko_integrand_diagonal, vandermonde_power_poly, x_vars, y_vars,
};
pub use identities::{
    heine_hyperdet_check, jacobi_rect, kaneko_check, kaneko_lhs, kaneko_lhs_diagonal,
    leclerc_check, leclerc_wronskian_check, HeineNorm, JacobiRoute,
};
pub use measure::{measure_moment, MeasureKind, PiPoly, SelbergMeasure};
pub use symmetric::{affine_map, gram_schmidt_sym, jacobi_eigen, sym_orthogonal, MultiSymPoly};
