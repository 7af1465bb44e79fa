//! Exact enumeration of alternating permutations by cycle type, fixed
//! points, descent classes and related statistics, via symmetric functions
//! evaluated at umbral Euler-number specializations.

pub mod cli;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod perms;
pub mod symfunc;
pub mod useries;

pub use error::{Error, Result};
