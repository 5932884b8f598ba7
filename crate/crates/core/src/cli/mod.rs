//! Command-line front end: documents, fixtures, reports and subcommands.

pub mod commands;
pub mod document;
pub mod fixtures;
pub mod report;

pub use commands::{parse_matrix, parse_vector, resolve_algebra, resolve_bimodule, run, RunOutput};
pub use document::{load, load_algebra, load_bimodule, save_algebra, save_bimodule, AlgebraDocument, BimoduleDocument, Loaded};
pub use report::Report;
