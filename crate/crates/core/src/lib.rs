//! Exact Hankel hyperdeterminants.
//!
//! Kernels for Cayley's first hyperdeterminant of Hankel and Toeplitz tensors,
//! closed forms coming from Selberg-type integrals, orthogonal polynomial
//! machinery, Kaneko-type multivariate integrals and a symmetric function
//! toolkit. Everything is exact: rationals, polynomials over the rationals and
//! rationals times half-integer powers of pi.

pub mod exact;
pub mod hyperdet;
pub mod json;
pub mod kaneko;
pub mod orthopoly;
pub mod selberg;
pub mod symfun;
pub mod turanians;

mod error;

pub use error::{Error, Result};
pub use exact::{
    gamma_exact, pochhammer, poly_derivative, poly_eval, stirling, ExactScalar, MultiPoly, Poly,
    RationalFunction, Ring, StirlingKind, UniPoly, Value, Q,
};
pub use hyperdet::{
    det_even, det_plus, hankel_fast, pfaffian, toeplitz_det, HyperTensor, MomentSequence,
    SkewMatrix,
};
pub use kaneko::{MultiSymPoly, SelbergMeasure};
pub use orthopoly::{MomentFunctional, MonicPolynomialFamily, ProjectedMultiplication};
pub use selberg::{SelbergParams, SequenceFamily};
pub use symfun::{Basis, Partition, SymExpansion};
pub use turanians::{TuranianFamily, TuranianSpec};
