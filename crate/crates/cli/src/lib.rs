//! Library surface of the shell: flag/config parsing and artifact
//! serialization, shared by the `chernlab` binary and its test suites.

pub mod config;
pub mod output;
