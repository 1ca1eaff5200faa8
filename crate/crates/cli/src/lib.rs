//! Library side of the `motzkin` binary: argument definitions, command
//! implementations and the b-file reader.

pub mod bfile;
pub mod commands;

pub use commands::{run, Cli, Outcome, Status};
