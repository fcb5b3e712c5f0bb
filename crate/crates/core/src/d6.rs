//! The order-6 worked instance: a non-associative loop, the `C₆⁽⁰⁾` Hadamard
//! matrix, and the twisted multiplication table the generalised construction
//! produces from them, checked cell by cell against a reference rendering.
//!
//! Order 6 is the smallest order carrying both non-isotopic latin squares and
//! inequivalent complex Hadamard matrices, which is what makes this instance
//! interesting: the resulting basis is not obviously equivalent to any plain
//! shift-and-multiply basis.

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Result;
use crate::hadamard::{butson_c6, butson_p, HadamardFamily, HadamardMatrix};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};
use crate::quasigroup::LatinSquare;
use crate::structures::generalized_ls_mult;
use crate::ueb::{generalized_shift_multiply, gsm_diagonal, verify, VerificationReport};

/// The non-associative order-6 loop, symbols a..f as 0..5.
pub fn latin_square() -> LatinSquare {
    LatinSquare::validate(alloc::vec![
        alloc::vec![0, 1, 2, 3, 4, 5],
        alloc::vec![1, 0, 4, 5, 2, 3],
        alloc::vec![2, 5, 1, 0, 3, 4],
        alloc::vec![3, 4, 0, 1, 5, 2],
        alloc::vec![4, 3, 5, 2, 1, 0],
        alloc::vec![5, 2, 3, 4, 0, 1],
    ])
    .expect("fixture is latin")
}

/// The Hadamard matrix of the instance.
pub fn hadamard() -> HadamardMatrix {
    butson_c6()
}

/// The family: six copies of [`hadamard`], twisted at index `k = 0`.
pub fn family() -> HadamardFamily {
    HadamardFamily::uniform(hadamard())
}

/// One cell of the reference rendering of the twisted table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceCell {
    pub symbol: usize,
    /// Coefficient exactly as the reference renders it.
    pub coefficient: Scalar,
    /// Whether the reference renders this cell with the bulk `1/√6` factor.
    /// The six unit-symbol cells are rendered without it.
    pub bulk_scaled: bool,
}

/// The reference table. Cells (4,5) and (5,4) are known misprints — their
/// coefficients are irreconcilable with the instance's own Hadamard matrix
/// under any global factor — and [`build_report`] flags exactly those two.
pub fn reference_table() -> Vec<Vec<ReferenceCell>> {
    let p = butson_p();
    let q = p.conj();
    let one = Scalar::new(1.0, 0.0);
    let s = 1.0 / 6.0f64.sqrt();
    // (symbol, pattern, bulk_scaled); published value = pattern·(1/√6  if bulk).
    let rows: [[(usize, Scalar, bool); 6]; 6] = [
        [
            (0, one, false),
            (1, one, true),
            (2, one, true),
            (3, one, true),
            (4, one, true),
            (5, one, true),
        ],
        [
            (1, one, true),
            (0, -one, false),
            (4, -q, true),
            (5, -q * q, true),
            (2, q * q, true),
            (3, q, true),
        ],
        [
            (2, one, true),
            (5, -p, true),
            (1, one, true),
            (0, q * q, false),
            (3, -q * q * q, true),
            (4, q * q, true),
        ],
        [
            (3, one, true),
            (4, -p * p, true),
            (0, p * p, false),
            (1, -one, true),
            (5, q * q, true),
            (2, -q * q, true),
        ],
        [
            (4, one, true),
            (3, p * p, true),
            (5, -p * p * p, true),
            (2, p * p, true),
            (1, one, true),
            (0, -p, false),
        ],
        [
            (5, one, true),
            (2, p, true),
            (3, p * p, true),
            (4, -p * p, true),
            (0, q, false),
            (1, -one, true),
        ],
    ];
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|&(symbol, pattern, bulk_scaled)| ReferenceCell {
                    symbol,
                    coefficient: if bulk_scaled {
                        pattern * Scalar::new(s, 0.0)
                    } else {
                        pattern
                    },
                    bulk_scaled,
                })
                .collect()
        })
        .collect()
}

/// Comparison of one computed cell against the reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellReport {
    pub row: usize,
    pub col: usize,
    pub symbol: usize,
    pub symbol_ok: bool,
    /// Construction coefficient in the unitary normalization.
    pub computed: Scalar,
    /// Reference coefficient as rendered.
    pub reference: Scalar,
    pub reference_bulk_scaled: bool,
    /// Deviation after removing the documented scale factor of the cell's
    /// class.
    pub deviation: f64,
    pub flagged: bool,
}

/// Full reproduction report for the order-6 instance.
#[derive(Debug, Clone, PartialEq)]
pub struct D6Report {
    pub cells: Vec<CellReport>,
    pub all_symbols_match: bool,
    /// Documented global scale between construction coefficients and the
    /// bulk reference cells, fitted by least squares; `1/√6` by construction.
    pub bulk_factor: Scalar,
    /// Cells whose coefficients no documented factor reconciles.
    pub flagged: Vec<(usize, usize)>,
    pub basis_report: VerificationReport,
    /// Largest off-diagonal modulus over all six diagonal twists, extracted
    /// the indirect way: undoing the shift permutation on the twisted
    /// multiplication slice.
    pub max_twist_offdiagonal: f64,
    pub max_twist_unitarity_defect: f64,
    /// Largest deviation between the two routes to the diagonal twist.
    pub max_twist_cross_deviation: f64,
}

/// Builds the twisted table, compares it cell by cell with the reference,
/// verifies the resulting error basis, and audits the diagonal twists.
pub fn build_report(tol: Tolerance) -> Result<D6Report> {
    let square = latin_square();
    let fam = family();
    let d = 6usize;

    let gen = generalized_ls_mult(&square, &fam, 0)?;
    let reference = reference_table();

    // Construction coefficients read off the twisted multiplication columns.
    let mut computed = [[Scalar::new(0.0, 0.0); 6]; 6];
    for (a, row) in computed.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = gen.mult().get(square.mul(a, b), a * d + b);
        }
    }

    // Least-squares global factor over the bulk cells.
    let mut num = Scalar::new(0.0, 0.0);
    let mut den = 0.0;
    for (r, row) in reference.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if cell.bulk_scaled {
                num += computed[r][c].conj() * cell.coefficient;
                den += computed[r][c].norm_sqr();
            }
        }
    }
    let bulk_factor = num / den;

    let mut cells = Vec::with_capacity(36);
    let mut flagged = Vec::new();
    let mut all_symbols_match = true;
    for (r, row) in reference.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let symbol = square.mul(r, c);
            let symbol_ok = symbol == cell.symbol;
            all_symbols_match &= symbol_ok;
            let factor = if cell.bulk_scaled {
                bulk_factor
            } else {
                Scalar::new(1.0, 0.0)
            };
            let deviation = (computed[r][c] * factor - cell.coefficient).norm();
            let is_flagged = deviation > tol.eps() || !symbol_ok;
            if is_flagged {
                flagged.push((r, c));
            }
            cells.push(CellReport {
                row: r,
                col: c,
                symbol,
                symbol_ok,
                computed: computed[r][c],
                reference: cell.coefficient,
                reference_bulk_scaled: cell.bulk_scaled,
                deviation,
                flagged: is_flagged,
            });
        }
    }

    let basis = generalized_shift_multiply(&square, &fam, 0)?;
    let basis_report = verify(&basis, tol);

    // Twist audit. The indirect route recovers the diagonal from the twisted
    // multiplication by undoing the shift permutation, so its diagonality is
    // a computed fact rather than an artifact of assembly.
    let id = ComplexMatrix::identity(d);
    let mut max_off: f64 = 0.0;
    let mut max_unit: f64 = 0.0;
    let mut max_cross: f64 = 0.0;
    for j in 0..d {
        let ej = ComplexMatrix::basis_column(d, j);
        let slice = gen.mult().matmul(&id.kron(&ej))?;
        let indirect = square.row_permutation_matrix(j).dagger().matmul(&slice)?;
        for r in 0..d {
            for c in 0..d {
                if r != c {
                    max_off = max_off.max(indirect.get(r, c).norm());
                }
            }
        }
        max_unit = max_unit.max(indirect.unitarity_defect()?);
        let direct = gsm_diagonal(j, &fam, 0)?;
        max_cross = max_cross.max(indirect.max_abs_diff(&direct)?);
    }

    Ok(D6Report {
        cells,
        all_symbols_match,
        bulk_factor,
        flagged,
        basis_report,
        max_twist_offdiagonal: max_off,
        max_twist_unitarity_defect: max_unit,
        max_twist_cross_deviation: max_cross,
    })
}
