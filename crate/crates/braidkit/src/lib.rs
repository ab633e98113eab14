//! Numerics, file formats and the command-line front end on top of
//! `braidkit-core`.

pub use braidkit_core as core;

pub mod io;
pub mod limit;
pub mod reps;
pub mod report;
pub mod suites;
pub mod cli;
