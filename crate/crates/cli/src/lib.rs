//! Command-line front end for the chain dynamics crate: plain-text run
//! configuration, CSV emitters, and the subcommand implementations shared
//! between the binary and the test suite.

pub mod commands;
pub mod config;
pub mod csv;

use std::io;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(#[from] config::ConfigError),
    #[error("{0}")]
    Chain(#[from] chain_core::ChainError),
    #[error("{0}")]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
