//! Exact computations with cyclic quasi-symmetric functions.

pub mod arith;
pub mod combinatorics;
pub mod cqsym;
pub mod descent;
pub mod enumer;
pub mod error;
pub mod qsym;
pub mod schur;
pub mod toric;
pub mod verify;

pub use arith::Rat;
pub use error::{Error, Result};
