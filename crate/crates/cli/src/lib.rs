//! Script front end, executor and reports for the workbench.

pub mod ast;
pub mod cache;
pub mod compile;
pub mod exec;
pub mod parser;
pub mod report;

pub use parser::{load, parse, parse_syntax, ErrorKind, ParseError};
