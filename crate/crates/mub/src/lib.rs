//! Companion crate to `mub-core`: file formats, reports, DOT export,
//! instance generation, and the multi-threaded solver driver used by the
//! `mub` command-line tool.

pub mod branching_doc;
pub mod dot;
pub mod generator;
pub mod parallel;
pub mod report;
