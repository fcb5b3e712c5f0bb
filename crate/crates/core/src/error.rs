//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while constructing or checking a value.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix dimensions do not match the operation's requirements.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A constructor was handed a NaN or infinite entry.
    NonFinite,
    /// Entry count disagrees with `rows × cols`.
    BadEntryCount { expected: usize, found: usize },
    /// A latin square candidate repeats a symbol within a row.
    DuplicateInRow { row: usize, symbol: usize },
    /// A latin square candidate repeats a symbol within a column.
    DuplicateInColumn { col: usize, symbol: usize },
    /// A symbol lies outside `0..order`.
    SymbolOutOfRange {
        row: usize,
        col: usize,
        symbol: usize,
    },
    /// The table is empty or ragged.
    BadTable,
    /// A permutation candidate is not a bijection on `0..n`.
    BadPermutation,
    /// A group specification has no factors or a zero factor.
    BadGroupSpec,
    /// Unparseable group spec string such as `"Z6"` or `"Z2xZ3"`.
    ParseGroupSpec(String),
    /// The latin square is not a loop with unit 0 where one was required.
    NotALoop,
    /// Supplied vectors are not orthonormal within tolerance.
    NotOrthonormal,
    /// A matrix required to be unitary is not, within tolerance.
    NotUnitary,
    /// The matrix fails the complex Hadamard conditions.
    NotHadamard,
    /// An index is out of range for the structure at hand.
    IndexOutOfRange { index: usize, bound: usize },
    /// Orders of two inputs disagree.
    OrderMismatch { left: usize, right: usize },
    /// The basis does not verify as a unitary error basis.
    NotUeb,
    /// An equivalence transform has a non-unimodular phase.
    NotUnimodular,
    /// `normalize_d2` was handed a basis of the wrong dimension.
    NotDimensionTwo,
    /// A state vector is not normalized within tolerance.
    NotNormalized,
    /// A tolerance was negative or non-finite.
    BadTolerance,
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, found {rows}x{cols}")
            }
            Error::NonFinite => write!(f, "non-finite entry rejected"),
            Error::BadEntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::DuplicateInRow { row, symbol } => {
                write!(f, "row {row} repeats symbol {symbol}")
            }
            Error::DuplicateInColumn { col, symbol } => {
                write!(f, "column {col} repeats symbol {symbol}")
            }
            Error::SymbolOutOfRange { row, col, symbol } => {
                write!(f, "symbol {symbol} at ({row},{col}) is out of range")
            }
            Error::BadTable => write!(f, "table is empty or not square"),
            Error::BadPermutation => write!(f, "not a permutation of 0..n"),
            Error::BadGroupSpec => write!(f, "group spec needs at least one factor >= 1"),
            Error::ParseGroupSpec(s) => write!(f, "cannot parse group spec {s:?}"),
            Error::NotALoop => write!(f, "latin square is not a loop with unit 0"),
            Error::NotOrthonormal => write!(f, "vectors are not orthonormal"),
            Error::NotUnitary => write!(f, "matrix is not unitary"),
            Error::NotHadamard => write!(f, "matrix is not complex Hadamard"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 0..{bound}")
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            Error::NotUeb => write!(f, "basis fails unitary error basis verification"),
            Error::NotUnimodular => write!(f, "phase is not unimodular"),
            Error::NotDimensionTwo => write!(f, "operation requires dimension 2"),
            Error::NotNormalized => write!(f, "state vector is not normalized"),
            Error::BadTolerance => write!(f, "tolerance must be finite and >= 0"),
        }
    }
}
