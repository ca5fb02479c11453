//! Exact computations for gl(m|n) supermodules.

pub mod algebra;
pub mod atypicality;
pub mod cli;
pub mod clifford;
pub mod cohomology;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod roots;
pub mod support;

pub use error::{Error, Result};
