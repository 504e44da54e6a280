//! Command-line front end and file formats for `alexq-core`.

pub mod cli;
pub mod report;
pub mod sample;
pub mod suite;
pub mod table;
