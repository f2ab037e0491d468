//! Command-line front end: evaluate bounds on a family file, fuzz, emit
//! equality families, and tabulate which bound is tightest.

pub mod commands;
pub mod family_file;
pub mod parse;

pub use commands::{Exit, Format};
pub use family_file::FamilyFile;
