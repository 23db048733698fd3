//! Exact bivariate zeta functions of the class-2 nilpotent lattices F_{n,δ}, G_n and H_n.

pub mod error;
pub mod exactalg;
pub mod lattices;
pub mod oracle;
pub mod zeta;

pub use error::{Error, Result};
pub mod verdict;
pub mod weyl;

pub use verdict::Verdict;
