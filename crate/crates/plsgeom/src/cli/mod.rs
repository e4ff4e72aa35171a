//! Command-line front end and file formats.

pub mod commands;
pub mod formats;
