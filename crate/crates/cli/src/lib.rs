//! Command-line front end for the identity verifier: argument parsing,
//! report types, and command implementations live here so both the
//! binary and the integration tests can use them.

pub mod args;
pub mod commands;
pub mod report;
