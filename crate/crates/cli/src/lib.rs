//! Front end for the `isoclifford` binary.

pub mod masses;
pub mod report;
pub mod run;
pub mod suites;

pub use run::{run, Outcome};
