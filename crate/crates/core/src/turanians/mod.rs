//! Hankel hyperdeterminants of classical orthogonal polynomial values:
//! brute force, product formulas and shifted routes.

mod bruteforce;
mod closed;
mod family;
mod laplacian;

pub use bruteforce::{family_values, turanian_bruteforce};
pub use closed::{default_route, turanian_closed_form, turanian_route, TuranianRoute};
pub use family::{TuranianFamily, TuranianSpec};
pub use laplacian::{laplacian_power_check, LaplacianReport};
