//! Symmetric functions at a fixed number of variables: partitions, basis
//! changes, the `phi` map and the Schur expansion of Hankel hyperdeterminants.

mod expansion;
mod hankel;
mod laurent;
mod partition;
mod ubiquitous;

pub use expansion::{alternant, schur_poly, sym_vars, Basis, SymExpansion};
pub use hankel::{hankel_hyperdet_schur, vandermonde_power, HankelSchurReport};
pub use laurent::{phi_identity_check, phi_map, LaurentPoly};
pub use partition::{to_monomial_basis, Partition};
pub use ubiquitous::{ubiquitous_identities, UbiquitousCase, UbiquitousReport};
