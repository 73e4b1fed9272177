//! Library surface of the rlz command-line tool: report schema,
//! verification suites, and output rendering. The binary in `main.rs`
//! is a thin argument-parsing layer over these.

pub mod render;
pub mod report;
pub mod suites;
