//! Check catalogue, configuration and reporting behind the `verify` binary.

pub mod catalogue;
pub mod config;
pub mod context;
pub mod runner;
