//! Exact scalars, polynomials and rational functions.

mod multipoly;
mod poly;
mod ratfun;
mod ring;
mod scalar;
mod value;

pub use multipoly::{vars, MultiPoly, Vars};
pub use poly::{poly_derivative, poly_eval, Poly, UniPoly};
pub use ratfun::RationalFunction;
pub use ring::{fmt_q, parse_q, q, qf, ring_product, ring_sum, Ring, Q};
pub use scalar::{
    binomial, double_factorial, factorial, factorial_q, gamma_exact, pochhammer, stirling,
    ExactScalar, StirlingKind,
};
pub use value::Value;
