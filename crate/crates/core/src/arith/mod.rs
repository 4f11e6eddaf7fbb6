//! Exact arithmetic shared by every other layer: F_p scalars, Laurent
//! polynomials over F_p and base-p digit utilities.

pub mod fp;
pub mod laurent;
pub mod padic;
pub mod valuation;

pub use fp::{binomial_mod_p, factorial_mod_p, inverse_mod_p, is_prime, Fp};
pub use laurent::LaurentPoly;
pub use padic::{padic_digits, pow_usize, res_mod, PadicDigits};
pub use valuation::Valuation;
