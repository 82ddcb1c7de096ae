//! Command-line front end, JSON formats and reference data for `gfdft-core`.

pub mod cli;
pub mod golden;
pub mod input;
pub mod schema;
pub mod tables;
pub mod verify;
