//! Library side of the `igoppa` command-line tool: subcommand
//! implementations, file formats, and exit-code classification.

pub mod commands;
pub mod error;
pub mod formats;
