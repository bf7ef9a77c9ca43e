//! IO companion to `semifree-core`: the `.act` file format and the `semifree`
//! command-line tool.

pub mod commands;
pub mod format;

pub use commands::{run, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_THEOREM, EXIT_VALIDATION};
pub use format::{parse_action, serialize_action, ParseError};
