//! Command-line front end, random corpora and tightness benchmarking for
//! the `rootbound` crate.

pub mod cli;
pub mod gen;
pub mod report;
pub mod tightness;

pub use cli::run;
