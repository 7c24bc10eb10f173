//! File formats, verification suites and the command-line front end for
//! `plethora-core`.

mod app;
pub mod formats;
pub mod verify;

pub use app::{run, Cli, Command, Outcome, EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFY_FAILED, MAX_STATES_VAR};
