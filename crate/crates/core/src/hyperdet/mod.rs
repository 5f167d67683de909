//! Hyperdeterminant kernels.
//!
//! `det_even` and `det_plus` are the brute-force alternating sums and serve as
//! the oracle for everything else. `hankel_fast` sums over strictly lower
//! triangular matrices with entries in `0..=2k`, which is exponentially cheaper
//! than permutation tuples for Hankel tensors.

mod fast;
mod kernels;
mod pfaffian;
mod tensor;

pub use fast::{
    hankel_fast, hankel_fast_exact, hankel_from_terms, hankel_terms, hankel_weights, HankelTerm,
};
pub use kernels::{
    det, det_even, det_even_exact, det_plus, det_plus_exact, factor_pi, factor_pi_moments,
    permutations, toeplitz_det,
};
pub use pfaffian::{det4_via_pfaffian, pfaffian};
pub use tensor::{HyperTensor, MomentSequence, SkewMatrix};
