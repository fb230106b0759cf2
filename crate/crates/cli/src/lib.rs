//! File formats, report serialization and command implementations behind the
//! `liefields` binary.

pub mod commands;
pub mod error;
pub mod files;
pub mod report;

pub use error::CliError;
