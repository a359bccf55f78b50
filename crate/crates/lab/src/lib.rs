//! Command-line laboratory around the `dold` library: OEIS b-file loading,
//! local realizability scans and report rendering.

pub mod bfile;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod fetch;
pub mod fixtures;
pub mod report;
pub mod source;

pub use error::{LabError, Result};
