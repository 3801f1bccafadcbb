//! Charge statistics, catabolizability, and monomial bases for Garsia-Procesi
//! quotient rings, with an exact Gröbner back-end for certification.
//!
//! Tableaux use French convention throughout: row 0 is the bottom row.

pub mod basis;
pub mod catabolism;
pub mod chains;
pub mod charge;
pub mod cli;
pub mod error;
pub mod partition;
pub mod perm;
pub mod qpoly;
pub mod quotient;
pub mod symfun;
pub mod tableau;
pub mod theorems;

pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use perm::Permutation;
pub use tableau::Tableau;
