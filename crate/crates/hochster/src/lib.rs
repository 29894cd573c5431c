//! Command line, file formats and parallel drivers over `hochster_core`.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod parallel;
pub mod verify;
