//! Complex Hadamard matrices.
//!
//! A complex Hadamard matrix of order `d` has unimodular entries and satisfies
//! `H·H† = d·I`. Rescaled by `1/√d` it is unitary, and its columns then form a
//! basis mutually unbiased to the standard one. Group Fourier matrices are the
//! canonical examples; [`butson_c6`] provides an order-6 matrix outside the
//! Fourier family.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use num_complex::Complex;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};
use crate::quasigroup::GroupSpec;

/// A validated complex Hadamard matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HadamardMatrix {
    order: usize,
    m: ComplexMatrix,
}

impl HadamardMatrix {
    /// Validates unimodularity of every entry and `H·H† = d·I`.
    pub fn new(m: ComplexMatrix, tol: Tolerance) -> Result<Self> {
        if !is_hadamard(&m, tol)? {
            return Err(Error::NotHadamard);
        }
        Ok(HadamardMatrix { order: m.rows(), m })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// The unitary `(1/√d)·H`.
    pub fn unitary(&self) -> ComplexMatrix {
        let s = 1.0 / (self.order as f64).sqrt();
        self.m.scale(Scalar::new(s, 0.0))
    }
}

/// `d` complex Hadamard matrices of order `d`, indexed by the shift index.
#[derive(Debug, Clone, PartialEq)]
pub struct HadamardFamily {
    order: usize,
    members: Vec<HadamardMatrix>,
}

impl HadamardFamily {
    /// A family from explicit members; all must share one order and there must
    /// be exactly `order` of them.
    pub fn new(members: Vec<HadamardMatrix>) -> Result<Self> {
        let order = members.first().map(|h| h.order()).ok_or(Error::BadTable)?;
        if members.len() != order {
            return Err(Error::OrderMismatch {
                left: order,
                right: members.len(),
            });
        }
        if let Some(bad) = members.iter().find(|h| h.order() != order) {
            return Err(Error::OrderMismatch {
                left: order,
                right: bad.order(),
            });
        }
        Ok(HadamardFamily { order, members })
    }

    /// The degenerate family: one matrix replicated `d` times, as used by the
    /// minimal construction.
    pub fn uniform(h: HadamardMatrix) -> Self {
        let order = h.order();
        HadamardFamily {
            order,
            members: alloc::vec![h; order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn member(&self, j: usize) -> Result<&HadamardMatrix> {
        self.members.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            bound: self.order,
        })
    }

    pub fn members(&self) -> &[HadamardMatrix] {
        &self.members
    }
}

/// True iff every entry has modulus 1 within `eps` and `m·m† = d·I` within
/// `d·eps`.
pub fn is_hadamard(m: &ComplexMatrix, tol: Tolerance) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let d = m.rows();
    let unimodular = m
        .entries()
        .iter()
        .all(|z| (z.norm() - 1.0).abs() <= tol.eps());
    if !unimodular {
        return Ok(false);
    }
    let gram = m.matmul(&m.dagger())?;
    let target = ComplexMatrix::identity(d).scale(Scalar::new(d as f64, 0.0));
    Ok(gram.max_abs_diff(&target)? <= tol.scaled(d as f64))
}

/// Fourier transform matrix of a finite abelian group:
/// `F[x][y] = Π exp(2πi·xᵢ·yᵢ/nᵢ)` under the mixed-radix decoding.
///
/// Always symmetric, unimodular, and Hadamard; `(1/√d)·F` is unitary.
pub fn fourier_matrix(g: &GroupSpec) -> HadamardMatrix {
    let d = g.order();
    let m = ComplexMatrix::from_fn(d, d, |x, y| {
        let (dx, dy) = (g.decode(x), g.decode(y));
        let angle: f64 = dx
            .iter()
            .zip(dy.iter())
            .zip(g.factors().iter())
            .map(|((&xi, &yi), &ni)| TAU * ((xi * yi) % ni) as f64 / ni as f64)
            .sum();
        Complex::from_polar(1.0, angle)
    });
    HadamardMatrix { order: d, m }
}

/// The constant `p = (1−√3)/2 + i·√(√3/2)` of the order-6 matrix below.
/// The nested-radical reading is the one with `|p| = 1`.
pub fn butson_p() -> Scalar {
    let s3 = 3.0f64.sqrt();
    Scalar::new((1.0 - s3) / 2.0, (s3 / 2.0).sqrt())
}

/// The order-6 complex Hadamard matrix `C₆⁽⁰⁾`, dephased, built on [`butson_p`].
///
/// The published rendering of this matrix carries a sign slip at entry (3,1);
/// the value used here, `−p̄²`, is the unique choice making the matrix
/// Hadamard (and Hermitian), as the validation test pins down.
pub fn butson_c6() -> HadamardMatrix {
    let p = butson_p();
    let q = p.conj();
    let one = Scalar::new(1.0, 0.0);
    let rows: [[Scalar; 6]; 6] = [
        [one, one, one, one, one, one],
        [one, -one, -p, -p * p, p * p, p],
        [one, -q, one, p * p, -p * p * p, p * p],
        [one, -q * q, q * q, -one, p * p, -p * p],
        [one, q * q, -q * q * q, q * q, one, -p],
        [one, q, q * q, -q * q, -q, -one],
    ];
    let entries: Vec<Scalar> = rows.iter().flat_map(|r| r.iter().copied()).collect();
    let m = ComplexMatrix::new(6, 6, entries).expect("finite entries");
    HadamardMatrix { order: 6, m }
}

/// Dephased equivalent: each row is rescaled by the conjugate phase of its
/// first entry, then each column by the conjugate phase of its new first
/// entry. The result has an all-ones first row and column and is
/// Hadamard-equivalent to the input. Idempotent.
pub fn dephase(h: &HadamardMatrix) -> HadamardMatrix {
    let d = h.order;
    let m = &h.m;
    let row_phase: Vec<Scalar> = (0..d).map(|r| m.get(r, 0) / m.get(r, 0).norm()).collect();
    let after_rows = ComplexMatrix::from_fn(d, d, |r, c| m.get(r, c) * row_phase[r].conj());
    let col_phase: Vec<Scalar> = (0..d)
        .map(|c| after_rows.get(0, c) / after_rows.get(0, c).norm())
        .collect();
    let m = ComplexMatrix::from_fn(d, d, |r, c| after_rows.get(r, c) * col_phase[c].conj());
    HadamardMatrix { order: d, m }
}

/// Mutual unbiasedness of two orthonormal bases given as the columns of
/// `basis_a` and `basis_b`: all `d²` overlaps must satisfy
/// `|⟨aᵢ|bⱼ⟩|² = 1/d` within `eps`.
///
/// Rejects non-orthonormal input.
pub fn mub_check(basis_a: &ComplexMatrix, basis_b: &ComplexMatrix, tol: Tolerance) -> Result<bool> {
    for basis in [basis_a, basis_b] {
        if !basis.is_square() {
            return Err(Error::NotSquare {
                rows: basis.rows(),
                cols: basis.cols(),
            });
        }
        if !basis.is_unitary(tol)? {
            return Err(Error::NotOrthonormal);
        }
    }
    if basis_a.rows() != basis_b.rows() {
        return Err(Error::OrderMismatch {
            left: basis_a.rows(),
            right: basis_b.rows(),
        });
    }
    let d = basis_a.rows();
    let overlaps = basis_a.dagger().matmul(basis_b)?;
    let target = 1.0 / d as f64;
    Ok(overlaps
        .entries()
        .iter()
        .all(|z| (z.norm_sqr() - target).abs() <= tol.eps()))
}

/// Orthonormal basis attached to a Hadamard matrix: the normalized rows,
/// returned as the columns of a unitary matrix.
///
/// This is the indexing under which the diagonal of shift-and-multiply uses
/// row `i`: the `i`-th basis vector's entries are `(1/√d)·H[i][·]`. For group
/// Fourier matrices, which are symmetric, it agrees with taking columns.
pub fn row_basis(h: &HadamardMatrix) -> ComplexMatrix {
    let d = h.order();
    let s = 1.0 / (d as f64).sqrt();
    ComplexMatrix::from_fn(d, d, |r, c| h.matrix().get(c, r) * s)
}

impl GroupSpec {
    /// Linear extension of the group operation to a map `H⊗H → H`: the
    /// multiplication of the (non-special) Frobenius algebra whose copyable
    /// states are the unnormalized Fourier basis vectors.
    pub fn group_mult_matrix(&self) -> ComplexMatrix {
        let d = self.order();
        ComplexMatrix::from_fn(d, d * d, |k, ab| {
            let (a, b) = (ab / d, ab % d);
            if k == self.add(a, b) {
                Scalar::new(1.0, 0.0)
            } else {
                Scalar::zero()
            }
        })
    }
}
