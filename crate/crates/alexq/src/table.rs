//! Plain-text quandle tables: a first line holding `n`, then `n` rows of `n`
//! whitespace-separated entries. Row `a`, column `b` holds `a ◁ b`.

use std::fmt::Write as _;

use alexq_core::quandle::AxiomViolation;
use alexq_core::FiniteQuandle;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("entry {value} at row {row}, column {col} is outside 0..{size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("not a quandle: {0}")]
    Axiom(AxiomViolation),
}

impl TableError {
    /// Syntax problems are parse errors; the rest make the table invalid.
    pub fn is_syntax(&self) -> bool {
        matches!(self, TableError::Syntax { .. })
    }
}

/// Parses the rows of a table without checking the quandle axioms. Entries
/// are range-checked.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>, TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(TableError::Syntax {
        line: 1,
        reason: "empty table".into(),
    })?;
    let n: usize = header.parse().map_err(|_| TableError::Syntax {
        line: first,
        reason: format!("expected the table size, found {header:?}"),
    })?;
    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        if rows.len() == n {
            return Err(TableError::Syntax {
                line,
                reason: format!("more than {n} rows"),
            });
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| TableError::Syntax {
                    line,
                    reason: format!("not a nonnegative integer: {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(TableError::Syntax {
                line,
                reason: format!("expected {n} entries, found {}", row.len()),
            });
        }
        if let Some((col, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(TableError::OutOfRange {
                row: rows.len(),
                col,
                value,
                size: n,
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(TableError::Syntax {
            line: first + rows.len() + 1,
            reason: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

pub fn parse_table(text: &str) -> Result<FiniteQuandle, TableError> {
    FiniteQuandle::validate(&parse_rows(text)?).map_err(TableError::Axiom)
}

pub fn format_table(q: &FiniteQuandle) -> String {
    let mut out = format!("{}\n", q.size());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alexq_core::LinearAlexanderParams;

    #[test]
    fn round_trip() {
        let q = FiniteQuandle::alexander(&LinearAlexanderParams::new(5, 2).unwrap());
        assert_eq!(parse_table(&format_table(&q)).unwrap(), q);
    }

    #[test]
    fn range_checked_before_axioms() {
        // row 0 breaks idempotence too, but the range error wins
        let err = parse_table("2\n1 5\n0 1\n").unwrap_err();
        assert_eq!(
            err,
            TableError::OutOfRange {
                row: 0,
                col: 1,
                value: 5,
                size: 2
            }
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_table("").unwrap_err().is_syntax());
        assert!(parse_table("x\n").unwrap_err().is_syntax());
        assert!(parse_table("2\n0 0\n").unwrap_err().is_syntax());
        assert!(parse_table("2\n0 0 1\n1 1\n").unwrap_err().is_syntax());
        assert!(parse_table("2\n0 -1\n1 1\n").unwrap_err().is_syntax());
    }

    #[test]
    fn axiom_violation_reported() {
        let err = parse_table("2\n1 1\n0 0\n").unwrap_err();
        assert!(matches!(err, TableError::Axiom(v) if v.axiom() == "idempotence"));
    }
}
