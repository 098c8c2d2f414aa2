//! Exact-arithmetic kernel for finite-dimensional algebras and coalgebras
//! over Q and GF(p): dualization, twisted tensor products, crossed product
//! coalgebras and bialgebras, and truncated quantum planes at roots of unity.

pub mod algebra;
pub mod coalgebra;
pub mod codec;
pub mod criteria;
pub mod error;
pub mod kernel;
pub mod oracle;
pub mod qplane;
pub mod twist;

pub use error::{Error, Result};
