//! Selberg and Laguerre–Selberg integrals and the closed forms they give for
//! Hankel hyperdeterminants of classical sequences.

mod appendix;
mod families;
mod integrals;

pub use appendix::{
    appendix_a_consistency, hypergeom_r_extract, hypergeom_symbols, pseudo_bruteforce,
    pseudo_closed_form, AppendixAReport, PseudoCase,
};
pub use families::{
    bell_wronskian, catalan_product, closed_form_hankel, factorial_closed, hankel_family,
    hilbert_closed, inverse_factorial_closed, two_n_over_n_product, FamilyMoments,
    SequenceFamily,
};
pub use integrals::{beta_value, laguerre_selberg_value, selberg_value, SelbergParams};
