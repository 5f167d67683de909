//! Inputs shared by the criterion benches.

use hyperdet_core::exact::{factorial_q, Q};
use hyperdet_core::orthopoly::bell_polys;
use hyperdet_core::{MomentSequence, UniPoly};

pub fn factorial_moments(len: usize) -> MomentSequence<Q> {
    MomentSequence::new((0..len as u64).map(factorial_q).collect())
}

pub fn bell_moments(len: usize) -> MomentSequence<UniPoly> {
    MomentSequence::new(bell_polys(len))
}
