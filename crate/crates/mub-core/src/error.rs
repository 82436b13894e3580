//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::branching::BranchingIssue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Matrix text could not be parsed; positions are 1-based.
    Parse { line: usize, col: usize, msg: String },
    /// Every column of the matrix is all-zero, so there is no digraph.
    EmptyPoset,
    /// A row index does not exist in the matrix.
    RowOutOfRange { row: usize, num_rows: usize },
    /// The poset is wider than the configured solver limit.
    WidthGuard { width: usize, max_width: usize },
    /// A brute-force routine refused an instance above its size limit.
    BruteGuard {
        what: &'static str,
        limit: u128,
        actual: u128,
    },
    /// An arc set failed branching validation.
    InvalidBranching { issues: Vec<BranchingIssue> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::EmptyPoset => {
                write!(f, "matrix has no nonzero column; the containment digraph is empty")
            }
            Error::RowOutOfRange { row, num_rows } => {
                write!(f, "row index {row} out of range (matrix has {num_rows} rows)")
            }
            Error::WidthGuard { width, max_width } => {
                write!(
                    f,
                    "poset width {width} exceeds the solver limit {max_width}; \
                     raise the limit to force an exponentially larger search"
                )
            }
            Error::BruteGuard { what, limit, actual } => {
                write!(f, "{what}: instance size {actual} exceeds brute-force limit {limit}")
            }
            Error::InvalidBranching { issues } => {
                write!(f, "invalid branching:")?;
                for issue in issues {
                    write!(f, " [{issue}]")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for Error {}
