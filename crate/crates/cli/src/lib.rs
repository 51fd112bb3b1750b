//! File formats, command implementations and the verification suite behind
//! the `quandle` binary.

pub mod commands;
pub mod error;
pub mod formats;
pub mod verify;

pub use error::CliError;
