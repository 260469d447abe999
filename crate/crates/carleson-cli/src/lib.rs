//! Library surface of the command-line tool: input/report schemas, the
//! command implementations, and the exit-code taxonomy. The `carleson`
//! binary is a thin argument-parsing wrapper around these.

pub mod commands;
pub mod error;
pub mod reports;
pub mod schema;
