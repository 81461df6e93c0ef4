//! Exact enumeration of rectangle-pattern and bond statistics on
//! permutations, signed permutations, and words, with transfer-matrix
//! generating functions and brute-force cross-checks.

pub mod algebra;
pub mod binword;
pub mod error;
pub mod golden;
pub mod lego;
pub mod oracle;
pub mod perm;
pub mod sequences;
pub mod signed;
pub mod transfer;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
