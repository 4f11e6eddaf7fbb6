//! Exact computation with the Hopf algebras `H_{n,r,f}` over `K = F_p((T))`,
//! their action on purely inseparable extensions `L = K(x)`, `x^{p^n} = β`,
//! the resulting scaffolds, and freeness of fractional ideals over their
//! associated orders.

pub mod action;
pub mod arith;
pub mod dual;
pub mod error;
pub mod field;
pub mod hopf;
pub mod linalg;
pub mod module_structure;
pub mod scaffold;
mod text;

pub use error::{Error, Result};
