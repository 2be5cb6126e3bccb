//! One module per subcommand; each builds a [`crate::report::Report`] and
//! prints it to stdout.

pub mod classify;
pub mod little_bloch;
pub mod normal_form;
pub mod predict;
pub mod truncate;
pub mod verify;
