//! Dense complex matrix kernel with tolerance-aware predicates.
//!
//! Every other module expresses its identities through this one. Matrices are
//! row-major, immutable after construction, and small (order ≤ ~12 throughout),
//! so no sparse or blocked representations are provided.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type Scalar = Complex<f64>;

/// Absolute entrywise tolerance for all predicates.
///
/// Constructions in this crate are exact up to floating arithmetic, so the
/// default of `1e-9` separates true identities from failures by many orders of
/// magnitude at the matrix orders involved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    /// Default absolute entrywise tolerance.
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::BadTolerance);
        }
        Ok(Tolerance { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Tolerance scaled by a dimension-dependent factor, for predicates that
    /// accumulate over `d` terms.
    pub fn scaled(&self, factor: f64) -> f64 {
        self.eps * factor
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: Self::DEFAULT_EPS,
        }
    }
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// Rejects empty shapes, entry counts disagreeing with `rows × cols`, and
    /// any NaN or infinite entry.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadTable);
        }
        if entries.len() != rows * cols {
            return Err(Error::BadEntryCount {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(ComplexMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested row slices. Convenience for fixtures and tests.
    pub fn from_rows(rows: &[&[Scalar]]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::BadTable);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadTable);
        }
        let entries: Vec<Scalar> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        ComplexMatrix::new(rows.len(), cols, entries)
    }

    /// Builds a matrix entrywise from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ComplexMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::from_fn(d, d, |r, c| {
            if r == c {
                Scalar::new(1.0, 0.0)
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Standard basis column vector `e_i` of dimension `d`.
    pub fn basis_column(d: usize, i: usize) -> Self {
        Self::from_fn(d, 1, |r, _| {
            if r == i {
                Scalar::new(1.0, 0.0)
            } else {
                Scalar::zero()
            }
        })
    }

    /// The `d² × d²` permutation sending `|i⟩⊗|j⟩` to `|j⟩⊗|i⟩`.
    pub fn swap(d: usize) -> Self {
        Self::from_fn(d * d, d * d, |r, c| {
            let (i, j) = (c / d, c % d);
            if r == j * d + i {
                Scalar::new(1.0, 0.0)
            } else {
                Scalar::zero()
            }
        })
    }

    /// Square diagonal matrix from the given entries.
    pub fn diagonal(diag: &[Scalar]) -> Self {
        let d = diag.len();
        Self::from_fn(d, d, |r, c| if r == c { diag[r] } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Standard matrix product.
    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == Scalar::zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.entries[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> ComplexMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> ComplexMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).conj())
    }

    /// Kronecker product, `(a.rows·b.rows) × (a.cols·b.cols)`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let (br, bc) = (other.rows, other.cols);
        Self::from_fn(self.rows * br, self.cols * bc, |r, c| {
            self.get(r / br, c / bc) * other.get(r % br, c % bc)
        })
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Hilbert–Schmidt inner product `tr(self† · other)` of two square
    /// matrices of equal shape.
    pub fn hs_inner(&self, other: &ComplexMatrix) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        // tr(A† B) = Σ conj(A[i][j])·B[i][j]; no intermediate product needed.
        let mut acc = Scalar::zero();
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            acc += a.conj() * b;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + b)
            .collect();
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a - b)
            .collect();
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: Scalar) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * s).collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// Entrywise approximate equality under the given tolerance.
    pub fn approx_eq(&self, other: &ComplexMatrix, tol: Tolerance) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| (a - b).norm() <= tol.eps())
    }

    /// Max-entry deviation of `self†·self` and `self·self†` from the identity.
    pub fn unitarity_defect(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let id = ComplexMatrix::identity(self.rows);
        let left = self.dagger().matmul(self)?.max_abs_diff(&id)?;
        let right = self.matmul(&self.dagger())?.max_abs_diff(&id)?;
        Ok(left.max(right))
    }

    /// True iff both `self†·self` and `self·self†` are the identity within `tol`.
    pub fn is_unitary(&self, tol: Tolerance) -> Result<bool> {
        Ok(self.unitarity_defect()? <= tol.eps())
    }

    /// Euclidean norm when the matrix is a column or row vector.
    pub fn vector_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]])
            .unwrap()
    }

    fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[&[c(1.0, 0.0), c(0.0, 0.0)], &[c(0.0, 0.0), c(-1.0, 0.0)]])
            .unwrap()
    }

    #[test]
    fn constructor_rejects_non_finite() {
        assert_eq!(
            ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        );
        assert_eq!(
            ComplexMatrix::new(1, 1, vec![c(0.0, f64::INFINITY)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn constructor_rejects_bad_entry_count() {
        assert!(matches!(
            ComplexMatrix::new(2, 2, vec![c(1.0, 0.0); 3]),
            Err(Error::BadEntryCount { .. })
        ));
    }

    #[test]
    fn matmul_identity_and_involution() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.matmul(&i2).unwrap(), i2);
        let x = pauli_x();
        assert_eq!(x.matmul(&x).unwrap(), i2);
    }

    #[test]
    fn matmul_z_times_x() {
        // Hand multiplication: Z·X = [[0,1],[-1,0]].
        let zx = pauli_z().matmul(&pauli_x()).unwrap();
        let expected =
            ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(1.0, 0.0)], &[c(-1.0, 0.0), c(0.0, 0.0)]])
                .unwrap();
        assert_eq!(zx, expected);
    }

    #[test]
    fn matmul_shape_error() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn dagger_examples() {
        let d = ComplexMatrix::diagonal(&[c(0.0, 1.0), c(0.0, -1.0)]);
        assert_eq!(
            d.dagger(),
            ComplexMatrix::diagonal(&[c(0.0, -1.0), c(0.0, 1.0)])
        );
        let sym =
            ComplexMatrix::from_rows(&[&[c(1.0, 0.0), c(2.0, 0.0)], &[c(2.0, 0.0), c(3.0, 0.0)]])
                .unwrap();
        assert_eq!(sym.dagger(), sym);
        let n =
            ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(1.0, 0.0)], &[c(0.0, 0.0), c(0.0, 0.0)]])
                .unwrap();
        let nt =
            ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(0.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]])
                .unwrap();
        assert_eq!(n.dagger(), nt);
    }

    #[test]
    fn hs_inner_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.hs_inner(&i2).unwrap(), c(2.0, 0.0));
        assert_eq!(pauli_z().hs_inner(&i2).unwrap(), c(0.0, 0.0));
        assert_eq!(pauli_x().hs_inner(&pauli_x()).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ComplexMatrix::identity(4));
        let z = pauli_z();
        let expected =
            ComplexMatrix::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(z.kron(&i2), expected);
        let e0 = ComplexMatrix::basis_column(2, 0);
        let e1 = ComplexMatrix::basis_column(2, 1);
        assert_eq!(e0.kron(&e1), ComplexMatrix::basis_column(4, 1));
    }

    #[test]
    fn unitarity_examples() {
        let tol = Tolerance::default();
        assert!(ComplexMatrix::identity(2).is_unitary(tol).unwrap());
        let s = 1.0 / 2.0f64.sqrt();
        let h =
            ComplexMatrix::from_rows(&[&[c(s, 0.0), c(s, 0.0)], &[c(s, 0.0), c(-s, 0.0)]]).unwrap();
        assert!(h.is_unitary(tol).unwrap());
        let shear =
            ComplexMatrix::from_rows(&[&[c(1.0, 0.0), c(1.0, 0.0)], &[c(0.0, 0.0), c(1.0, 0.0)]])
                .unwrap();
        assert!(!shear.is_unitary(tol).unwrap());
        assert!(matches!(
            ComplexMatrix::zeros(2, 3).is_unitary(tol),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn swap_exchanges_tensor_factors() {
        let s = ComplexMatrix::swap(2);
        let e0 = ComplexMatrix::basis_column(2, 0);
        let e1 = ComplexMatrix::basis_column(2, 1);
        let v01 = e0.kron(&e1);
        let v10 = e1.kron(&e0);
        assert_eq!(s.matmul(&v01).unwrap(), v10);
        assert!(s.is_unitary(Tolerance::default()).unwrap());
    }

    #[test]
    fn tolerance_rejects_negative() {
        assert_eq!(Tolerance::new(-1.0), Err(Error::BadTolerance));
        assert_eq!(Tolerance::new(f64::NAN), Err(Error::BadTolerance));
    }
}
