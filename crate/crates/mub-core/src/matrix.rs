//! Binary matrices and their text format.
//!
//! The text format is one row per line, entries `0` or `1`, optionally
//! separated by spaces, tabs or commas. Blank lines and lines starting
//! with `#` are ignored. Serialization always emits the dense unseparated
//! form, so `parse(serialize(m)) == m`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::rowset::RowSet;

/// A dense binary matrix. Rows are samples, columns are characters; the
/// solver only ever looks at column support sets (rows holding a 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl BinaryMatrix {
    /// Builds a matrix from row-major entries. Dimensions must be positive
    /// and `entries.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<bool>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: format!(
                    "bad dimensions: {rows} x {cols} with {} entries",
                    entries.len()
                ),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Convenience constructor for literal matrices in tests and examples.
    /// Panics on ragged rows, empty input, or entries other than 0/1.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "matrix must be nonempty");
        let cols = rows[0].len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            for &e in *row {
                assert!(e <= 1, "entries must be 0 or 1");
                entries.push(e == 1);
            }
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col]
    }

    /// The support set of a column: all rows where it holds a 1.
    pub fn support_set(&self, col: usize) -> RowSet {
        let mut s = RowSet::empty(self.rows);
        for r in 0..self.rows {
            if self.get(r, col) {
                s.insert(r);
            }
        }
        s
    }

    /// Parses the text format. Errors carry 1-based line/column positions.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut entries: Vec<bool> = Vec::new();
        let mut rows = 0usize;
        let mut cols: Option<usize> = None;
        for (line_idx, line) in text.lines().enumerate() {
            let line_no = line_idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut row: Vec<bool> = Vec::new();
            let mut entry_cols: Vec<usize> = Vec::new();
            let mut last_col = 0usize;
            for (char_idx, ch) in line.chars().enumerate() {
                let col_no = char_idx + 1;
                last_col = col_no;
                match ch {
                    '0' => {
                        row.push(false);
                        entry_cols.push(col_no);
                    }
                    '1' => {
                        row.push(true);
                        entry_cols.push(col_no);
                    }
                    ' ' | '\t' | ',' | '\r' => {}
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            col: col_no,
                            msg: format!("unexpected character {other:?}; expected 0 or 1"),
                        })
                    }
                }
            }
            let expected = *cols.get_or_insert(row.len());
            if row.len() != expected {
                // Too long: point at the first extra entry. Too short: point
                // past the end of the line.
                let col = if row.len() > expected {
                    entry_cols[expected]
                } else {
                    last_col + 1
                };
                return Err(Error::Parse {
                    line: line_no,
                    col,
                    msg: format!("row has {} entries, expected {expected}", row.len()),
                });
            }
            if expected == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    col: 1,
                    msg: String::from("row contains no entries"),
                });
            }
            entries.extend_from_slice(&row);
            rows += 1;
        }
        if rows == 0 {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: String::from("no matrix rows found"),
            });
        }
        let cols = cols.unwrap();
        Ok(Self { rows, cols, entries })
    }

    /// Dense text form: one row per line, no separators, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Column pairs `(i, j)`, `i < j`, whose supports intersect but are
    /// inclusion-incomparable. Equivalently: some row sees 1 in both, some
    /// row sees 1 only in `i`, and some row sees 1 only in `j`.
    pub fn conflict_pairs(&self) -> Vec<(usize, usize)> {
        let supports: Vec<RowSet> = (0..self.cols).map(|c| self.support_set(c)).collect();
        let mut pairs = Vec::new();
        for i in 0..self.cols {
            for j in i + 1..self.cols {
                let (a, b) = (&supports[i], &supports[j]);
                if a.intersects(b) && !a.is_subset(b) && !b.is_subset(a) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    pub fn is_conflict_free(&self) -> bool {
        self.conflict_pairs().is_empty()
    }
}
