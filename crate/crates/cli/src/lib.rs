//! Command implementations for the `dicyclic` binary.
//!
//! Every command returns its rendered output as a string so the binary stays
//! a thin argument parser and the tests can call commands directly.

pub mod commands;
pub mod document;
pub mod error;
pub mod verify;

pub use commands::{
    cmd_autos, cmd_elements, cmd_multable, cmd_spaces, inventory, AutoFilters, Format, Selector,
};
pub use error::CliError;
pub use verify::{cmd_verify, Fault, VerifySummary};
