//! Cayley tables for finite magmas and the loop checks underneath them.
//!
//! A table of order `n` stores `entries[a][b] = a ⊕ b` over the element set
//! `{0, .., n-1}`, with `0` reserved for the identity. The `.gyt` text format
//! is one decimal order line followed by `n` rows of `n` space-separated
//! indices; `#` comment lines are permitted before the header only.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A finite binary operation table over elements `0..n-1`.
///
/// Construction only checks shape (square, nonempty). Structural validity
/// (index range, identity at 0, Latin property) is the job of
/// [`validate_loop`], which reports violations rather than erroring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

/// Errors for programmatic table construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table order must be positive")]
    ZeroOrder,
    #[error("expected {expected} entries for order {order}, got {got}")]
    WrongShape {
        order: usize,
        expected: usize,
        got: usize,
    },
}

/// Errors raised while parsing the `.gyt` text format.
///
/// `line` and `column` are 1-based; `column` counts whitespace-separated
/// tokens on the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {detail}")]
    MalformedHeader { line: usize, detail: String },
    #[error("line {line}: expected {expected} rows, got {got}")]
    WrongRowCount {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}, column {column}: expected {expected} entries in row, got {got}")]
    WrongRowLength {
        line: usize,
        column: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}, column {column}: non-integer token {token:?}")]
    NonInteger {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: index {value} out of range 0..{order}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        value: usize,
        order: usize,
    },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
}

impl CayleyTable {
    /// Builds a table from a flat row-major entry vector.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::ZeroOrder);
        }
        if entries.len() != n * n {
            return Err(TableError::WrongShape {
                order: n,
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(CayleyTable { n, entries })
    }

    /// Builds a table from nested rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::ZeroOrder);
        }
        for row in rows {
            if row.len() != n {
                return Err(TableError::WrongShape {
                    order: n,
                    expected: n * n,
                    got: rows.iter().map(Vec::len).sum(),
                });
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        Ok(CayleyTable { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Looks up `a ⊕ b`.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Parses the `.gyt` format. Structural loop validity is not checked
    /// here; see [`validate_loop`].
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate();

        // Comment lines are only permitted before the header.
        let (header_idx, header) = loop {
            match lines.next() {
                Some((idx, line)) => {
                    let trimmed = line.trim();
                    if trimmed.starts_with('#') || trimmed.is_empty() {
                        continue;
                    }
                    break (idx, trimmed);
                }
                None => {
                    return Err(ParseError::MalformedHeader {
                        line: 1,
                        detail: "missing order line".into(),
                    })
                }
            }
        };

        let n: usize = header.parse().map_err(|_| ParseError::MalformedHeader {
            line: header_idx + 1,
            detail: format!("expected a positive decimal order, got {header:?}"),
        })?;
        if n == 0 {
            return Err(ParseError::MalformedHeader {
                line: header_idx + 1,
                detail: "order must be positive".into(),
            });
        }

        let mut entries = Vec::with_capacity(n * n);
        let mut rows_read = 0;
        let mut last_line = header_idx + 1;
        for (idx, line) in &mut lines {
            last_line = idx + 1;
            if rows_read == n {
                // Only blank space may follow the final row.
                if line.trim().is_empty() {
                    continue;
                }
                return Err(ParseError::TrailingContent { line: idx + 1 });
            }
            let mut count = 0;
            for (col, token) in line.split_whitespace().enumerate() {
                let value: usize = token.parse().map_err(|_| ParseError::NonInteger {
                    line: idx + 1,
                    column: col + 1,
                    token: token.to_string(),
                })?;
                if value >= n {
                    return Err(ParseError::IndexOutOfRange {
                        line: idx + 1,
                        column: col + 1,
                        value,
                        order: n,
                    });
                }
                entries.push(value);
                count += 1;
            }
            if count != n {
                return Err(ParseError::WrongRowLength {
                    line: idx + 1,
                    column: count.max(1),
                    expected: n,
                    got: count,
                });
            }
            rows_read += 1;
        }
        if rows_read != n {
            return Err(ParseError::WrongRowCount {
                line: last_line,
                expected: n,
                got: rows_read,
            });
        }

        Ok(CayleyTable { n, entries })
    }

    /// Serializes to the `.gyt` format. `parse(serialize(t)) == t` for any
    /// well-formed table.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.n.to_string());
        out.push('\n');
        for a in 0..self.n {
            for b in 0..self.n {
                if b > 0 {
                    out.push(' ');
                }
                out.push_str(&self.get(a, b).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// One structural defect found by [`validate_loop`], with witness cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LoopViolation {
    /// `0 ⊕ b != b` or `a ⊕ 0 != a` at the witness cell.
    NoIdentity { row: usize, col: usize, value: usize },
    /// `value` occurs at both witness columns of `row`.
    RowNotPermutation {
        row: usize,
        value: usize,
        cols: (usize, usize),
    },
    /// `value` occurs at both witness rows of `col`.
    ColumnNotPermutation {
        col: usize,
        value: usize,
        rows: (usize, usize),
    },
    /// Entry at the witness cell is not a valid element index.
    OutOfRange { row: usize, col: usize, value: usize },
}

/// Outcome of the loop check: valid iff no violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopCheckResult {
    pub violations: Vec<LoopViolation>,
}

impl LoopCheckResult {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that a table is a loop normalized to identity 0: every entry in
/// range, `0` a two-sided identity, and every row and column a permutation.
///
/// A valid loop has unique solutions to `a ⊕ x = b` and `x ⊕ a = b`, which
/// is the substrate the gyrogroup axioms are tested on.
pub fn validate_loop(t: &CayleyTable) -> LoopCheckResult {
    let n = t.order();
    let mut violations = Vec::new();

    for a in 0..n {
        for b in 0..n {
            let v = t.get(a, b);
            if v >= n {
                violations.push(LoopViolation::OutOfRange {
                    row: a,
                    col: b,
                    value: v,
                });
            }
        }
    }
    if !violations.is_empty() {
        // Range errors poison the remaining checks; report them alone.
        return LoopCheckResult { violations };
    }

    for b in 0..n {
        let v = t.get(0, b);
        if v != b {
            violations.push(LoopViolation::NoIdentity {
                row: 0,
                col: b,
                value: v,
            });
        }
    }
    for a in 1..n {
        let v = t.get(a, 0);
        if v != a {
            violations.push(LoopViolation::NoIdentity {
                row: a,
                col: 0,
                value: v,
            });
        }
    }

    // One violation per offending row/column, witnessed by the first
    // repeated value found.
    for a in 0..n {
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            let v = t.get(a, b);
            if seen[v] != usize::MAX {
                violations.push(LoopViolation::RowNotPermutation {
                    row: a,
                    value: v,
                    cols: (seen[v], b),
                });
                break;
            }
            seen[v] = b;
        }
    }
    for b in 0..n {
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            let v = t.get(a, b);
            if seen[v] != usize::MAX {
                violations.push(LoopViolation::ColumnNotPermutation {
                    col: b,
                    value: v,
                    rows: (seen[v], a),
                });
                break;
            }
            seen[v] = a;
        }
    }

    LoopCheckResult { violations }
}
