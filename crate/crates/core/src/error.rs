use core::fmt;

use crate::quandle::{AxiomViolation, GroupDefect};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `t` is not invertible modulo `n` (or `n` is zero).
    NotAUnit {
        t: u64,
        n: u64,
    },
    /// The table handed to a group constructor is not a group.
    NotAGroup(GroupDefect),
    /// The table handed to a quandle constructor breaks an axiom.
    NotAQuandle(AxiomViolation),
    /// A packed element that no word evaluates to.
    NotInImage {
        defect: u64,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// `d_low * d_high` is nonzero.
    NotAComplex,
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit { t, n } => write!(f, "{t} is not a unit modulo {n}"),
            Error::NotAGroup(d) => write!(f, "not a group: {d}"),
            Error::NotAQuandle(v) => write!(f, "not a quandle: {v}"),
            Error::NotInImage { defect } => {
                write!(f, "weight defect {defect} is not in the image of 1 - T")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::NotAComplex => f.write_str("boundary maps do not compose to zero"),
            Error::ShapeMismatch { left, right } => write!(
                f,
                "cannot compose a {}x{} matrix with a {}x{} matrix",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

impl core::error::Error for Error {}
