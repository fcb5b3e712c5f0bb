//! Construction and verification of unitary error bases.
//!
//! An error basis on dimension `d` is a family of `d²` matrices of size `d×d`
//! indexed by pairs `(i,j)` in row-major order. It verifies as a unitary error
//! basis when every element is unitary and the Hilbert–Schmidt gram matrix
//! equals `d·I`.

mod normalize;
mod spectral;

pub use normalize::{canonical_quadruple, normalize_d2, replay, TransformStep};

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::hadamard::{fourier_matrix, row_basis, HadamardFamily};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};
use crate::quasigroup::{GroupSpec, Isotopy, LatinSquare, Permutation};
use crate::structures::{classical_from_onb, ClassicalStructure};

/// `d²` matrices of size `d×d`, indexed row-major by `(i,j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBasis {
    dim: usize,
    elements: Vec<ComplexMatrix>,
}

impl ErrorBasis {
    pub fn new(dim: usize, elements: Vec<ComplexMatrix>) -> Result<Self> {
        if elements.len() != dim * dim {
            return Err(Error::BadEntryCount {
                expected: dim * dim,
                found: elements.len(),
            });
        }
        if let Some(bad) = elements.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch {
                expected: (dim, dim),
                found: (bad.rows(), bad.cols()),
            });
        }
        Ok(ErrorBasis { dim, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element(&self, i: usize, j: usize) -> &ComplexMatrix {
        &self.elements[i * self.dim + j]
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }
}

/// Outcome of verifying an error basis.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub all_unitary: bool,
    /// `d²×d²` matrix of Hilbert–Schmidt inner products, indexed like the basis.
    pub gram: ComplexMatrix,
    pub max_unitarity_defect: f64,
    pub max_orthogonality_defect: f64,
    pub is_ueb: bool,
}

/// Checks every element for unitarity and the full gram matrix against `d·I`.
/// Failures are carried in the report rather than raised.
pub fn verify(basis: &ErrorBasis, tol: Tolerance) -> VerificationReport {
    let d = basis.dim;
    let n = d * d;
    let mut max_unitarity_defect: f64 = 0.0;
    for e in &basis.elements {
        let defect = e.unitarity_defect().expect("square by construction");
        max_unitarity_defect = max_unitarity_defect.max(defect);
    }
    let gram = ComplexMatrix::from_fn(n, n, |a, b| {
        basis.elements[a]
            .hs_inner(&basis.elements[b])
            .expect("square by construction")
    });
    let mut max_orthogonality_defect: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let target = if a == b { d as f64 } else { 0.0 };
            let dev = (gram.get(a, b) - Scalar::new(target, 0.0)).norm();
            max_orthogonality_defect = max_orthogonality_defect.max(dev);
        }
    }
    let all_unitary = max_unitarity_defect <= tol.eps();
    let is_ueb = all_unitary && max_orthogonality_defect <= tol.eps();
    VerificationReport {
        all_unitary,
        gram,
        max_unitarity_defect,
        max_orthogonality_defect,
        is_ueb,
    }
}

/// The dimension-2 error basis `{I, Z, [[0,e^{iθ}],[1,0]], [[0,−e^{iθ}],[1,0]]}`.
pub fn pauli_basis(theta: f64) -> ErrorBasis {
    let zero = Scalar::new(0.0, 0.0);
    let one = Scalar::new(1.0, 0.0);
    let ph = Scalar::from_polar(1.0, theta);
    let elements = alloc::vec![
        ComplexMatrix::identity(2),
        ComplexMatrix::diagonal(&[one, -one]),
        ComplexMatrix::from_rows(&[&[zero, ph], &[one, zero]]).expect("finite"),
        ComplexMatrix::from_rows(&[&[zero, -ph], &[one, zero]]).expect("finite"),
    ];
    ErrorBasis { dim: 2, elements }
}

/// Diagonal matrix carrying row `i` of the `j`-th family member.
fn hadamard_diag(fam: &HadamardFamily, i: usize, j: usize) -> Result<ComplexMatrix> {
    let h = fam.member(j)?;
    let d = fam.order();
    let diag: Vec<Scalar> = (0..d).map(|c| h.matrix().get(i, c)).collect();
    Ok(ComplexMatrix::diagonal(&diag))
}

/// Shift-and-multiply basis: element `(i,j)` is the shift permutation for
/// column `j` of the latin square composed with the diagonal of row `i` of
/// the `j`-th Hadamard matrix.
pub fn shift_multiply(square: &LatinSquare, fam: &HadamardFamily) -> Result<ErrorBasis> {
    let d = square.order();
    if fam.order() != d {
        return Err(Error::OrderMismatch {
            left: d,
            right: fam.order(),
        });
    }
    let mut elements = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let p = square.row_permutation_matrix(j);
            elements.push(p.matmul(&hadamard_diag(fam, i, j)?)?);
        }
    }
    Ok(ErrorBasis { dim: d, elements })
}

/// Minimal shift-and-multiply basis of an abelian group: its Cayley table
/// with `d` copies of its Fourier matrix.
pub fn minimal_shift_multiply(g: &GroupSpec) -> ErrorBasis {
    let square = LatinSquare::cayley_table(g);
    let fam = HadamardFamily::uniform(fourier_matrix(g));
    shift_multiply(&square, &fam).expect("orders agree by construction")
}

/// MUB error basis of an abelian group, assembled from the complementary
/// pair of classical structures the group induces.
///
/// Element `(i,j)` is `d` times the composite of the black multiplication
/// loaded with white state `i`, the white-cup/black-cap bend, and the white
/// multiplication loaded with black state `j`. On basis states it acts as
/// `|k⟩ ↦ F[i][k]·|j−k⟩`.
pub fn mub_basis(g: &GroupSpec) -> ErrorBasis {
    let d = g.order();
    let tol = Tolerance::default();
    let black = ClassicalStructure::standard(d);
    let white = classical_from_onb(&fourier_matrix(g).unitary(), tol)
        .expect("normalized Fourier basis is orthonormal");
    let id = ComplexMatrix::identity(d);
    // Bend: input pairs into the black cap against one white cup leg, the
    // other cup leg exits. Evaluates to the inversion permutation.
    let bend = id
        .kron(&black.cap())
        .matmul(&white.cup().kron(&id))
        .expect("shapes fixed");
    let scale = Scalar::new(d as f64, 0.0);
    let mut elements = Vec::with_capacity(d * d);
    for i in 0..d {
        let bi = ComplexMatrix::from_fn(d, 1, |r, _| white.basis().get(r, i));
        let load_white = black.mult().matmul(&id.kron(&bi)).expect("shapes fixed");
        for j in 0..d {
            let ej = ComplexMatrix::basis_column(d, j);
            let load_black = white.mult().matmul(&ej.kron(&id)).expect("shapes fixed");
            let m = load_black
                .matmul(&bend)
                .and_then(|x| x.matmul(&load_white))
                .expect("shapes fixed")
                .scale(scale);
            elements.push(m);
        }
    }
    ErrorBasis { dim: d, elements }
}

/// The explicit equivalence between the minimal combinatorial construction
/// and the MUB construction.
///
/// Returns the shift-and-multiply basis built on the group table with its
/// rows permuted by inversion (the isotopy realising "invert the input, then
/// shift") alongside [`mub_basis`] of the same group. The two are equal
/// elementwise, not merely equivalent.
pub fn mub_equivalence_pair(g: &GroupSpec) -> (ErrorBasis, ErrorBasis) {
    let d = g.order();
    let square = LatinSquare::cayley_table(g);
    let iso = Isotopy {
        row_perm: g.inversion_permutation(),
        col_perm: Permutation::identity(d),
        sym_perm: Permutation::identity(d),
    };
    let inverted = square.isotope(&iso).expect("isotopy preserves latinity");
    let fam = HadamardFamily::uniform(fourier_matrix(g));
    let transformed = shift_multiply(&inverted, &fam).expect("orders agree");
    (transformed, mub_basis(g))
}

/// The `j`-indexed diagonal unitary of the generalised construction.
///
/// Entry `m` is the white-`k` loop scalar — the white effect `⟨m|` applied to
/// the white multiplication of (white state `m` ⊗ black state `j`) — rescaled
/// by `√d` so the result is unitary. Under the row-basis convention the entry
/// equals `conj(H^k[m][j])`.
pub fn gsm_diagonal(j: usize, fam: &HadamardFamily, k: usize) -> Result<ComplexMatrix> {
    let d = fam.order();
    if j >= d {
        return Err(Error::IndexOutOfRange { index: j, bound: d });
    }
    let tol = Tolerance::default();
    let white = classical_from_onb(&row_basis(fam.member(k)?), tol)?;
    let ej = ComplexMatrix::basis_column(d, j);
    let scale = Scalar::new((d as f64).sqrt(), 0.0);
    let mut diag = Vec::with_capacity(d);
    for m in 0..d {
        let wm = ComplexMatrix::from_fn(d, 1, |r, _| white.basis().get(r, m));
        let merged = white.mult().matmul(&wm.kron(&ej))?;
        let lambda = wm.dagger().matmul(&merged)?.get(0, 0);
        diag.push(lambda * scale);
    }
    Ok(ComplexMatrix::diagonal(&diag))
}

/// Generalised shift-and-multiply basis: element `(i,j)` is
/// `P_j · D_j · H^j_diag(i)` with `D_j` from [`gsm_diagonal`].
///
/// Inserting the identity for every `D_j` recovers [`shift_multiply`].
pub fn generalized_shift_multiply(
    square: &LatinSquare,
    fam: &HadamardFamily,
    k: usize,
) -> Result<ErrorBasis> {
    let d = square.order();
    if fam.order() != d {
        return Err(Error::OrderMismatch {
            left: d,
            right: fam.order(),
        });
    }
    let diagonals: Vec<ComplexMatrix> = (0..d)
        .map(|j| gsm_diagonal(j, fam, k))
        .collect::<Result<_>>()?;
    let mut elements = Vec::with_capacity(d * d);
    for i in 0..d {
        for (j, twist) in diagonals.iter().enumerate() {
            let p = square.row_permutation_matrix(j);
            let e = p.matmul(twist)?.matmul(&hadamard_diag(fam, i, j)?)?;
            elements.push(e);
        }
    }
    Ok(ErrorBasis { dim: d, elements })
}

/// An equivalence move `e ↦ c·U·e·V` with `U,V` unitary and `|c| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceTransform {
    left: ComplexMatrix,
    right: ComplexMatrix,
    phases: Vec<Scalar>,
}

impl EquivalenceTransform {
    /// Validates unitarity of both factors and unimodularity of all `d²`
    /// phases.
    pub fn new(
        left: ComplexMatrix,
        right: ComplexMatrix,
        phases: Vec<Scalar>,
        tol: Tolerance,
    ) -> Result<Self> {
        if !left.is_unitary(tol)? || !right.is_unitary(tol)? {
            return Err(Error::NotUnitary);
        }
        if phases.iter().any(|c| (c.norm() - 1.0).abs() > tol.eps()) {
            return Err(Error::NotUnimodular);
        }
        Ok(EquivalenceTransform {
            left,
            right,
            phases,
        })
    }

    pub fn identity(d: usize) -> Self {
        EquivalenceTransform {
            left: ComplexMatrix::identity(d),
            right: ComplexMatrix::identity(d),
            phases: alloc::vec![Scalar::new(1.0, 0.0); d * d],
        }
    }

    pub fn left(&self) -> &ComplexMatrix {
        &self.left
    }

    pub fn right(&self) -> &ComplexMatrix {
        &self.right
    }

    pub fn phases(&self) -> &[Scalar] {
        &self.phases
    }
}

/// Applies an equivalence transform elementwise. The output verifies as a
/// UEB iff the input does.
pub fn apply_transform(basis: &ErrorBasis, t: &EquivalenceTransform) -> Result<ErrorBasis> {
    let d = basis.dim;
    if t.left.rows() != d || t.phases.len() != d * d {
        return Err(Error::ShapeMismatch {
            expected: (d, d),
            found: (t.left.rows(), t.left.cols()),
        });
    }
    let elements = basis
        .elements
        .iter()
        .zip(t.phases.iter())
        .map(|(e, &c)| {
            t.left
                .matmul(e)
                .and_then(|m| m.matmul(&t.right))
                .map(|m| m.scale(c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorBasis { dim: d, elements })
}

/// Equivalence-invariant summary: the sorted singular values of every
/// element, followed by the sorted spectrum moduli of all pairwise products
/// `e_a · e_b†`.
///
/// Products of unitary elements are normal, so their spectrum moduli equal
/// their singular values, which is how they are computed; singular values of
/// `U·M·U†` are those of `M`, so both blocks are invariant under
/// [`apply_transform`]. Fingerprints are necessary for equivalence, never
/// sufficient: inequivalent bases may collide.
pub fn fingerprint(basis: &ErrorBasis) -> Vec<f64> {
    let mut element_part: Vec<f64> = Vec::new();
    for e in &basis.elements {
        element_part.extend(spectral::singular_values(e));
    }
    element_part.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    let mut product_part: Vec<f64> = Vec::new();
    for a in &basis.elements {
        for b in &basis.elements {
            let p = a.matmul(&b.dagger()).expect("square");
            product_part.extend(spectral::singular_values(&p));
        }
    }
    product_part.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    element_part.extend(product_part);
    element_part
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6;
    use crate::hadamard::butson_c6;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn cyclic(n: usize) -> GroupSpec {
        GroupSpec::cyclic(n).unwrap()
    }

    #[test]
    fn pauli_basis_verifies() {
        let report = verify(&pauli_basis(0.0), tol());
        assert!(report.is_ueb);
        assert!(report.max_unitarity_defect < 1e-12);
        assert!(report.max_orthogonality_defect < 1e-12);
        // Phase freedom keeps the gram at 2·I.
        let report = verify(&pauli_basis(core::f64::consts::PI / 2.0), tol());
        assert!(report.is_ueb);
        let b = pauli_basis(core::f64::consts::PI / 2.0);
        assert!((b.element(1, 0).get(0, 1) - Scalar::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn duplicate_element_shows_in_gram() {
        let mut elements = pauli_basis(0.0).elements().to_vec();
        elements[1] = ComplexMatrix::identity(2);
        let basis = ErrorBasis::new(2, elements).unwrap();
        let report = verify(&basis, tol());
        assert!(!report.is_ueb);
        assert!((report.max_orthogonality_defect - 2.0).abs() < 1e-12);
    }

    #[test]
    fn minimal_z2_is_pauli_up_to_order() {
        let b = minimal_shift_multiply(&cyclic(2));
        assert!(verify(&b, tol()).is_ueb);
        let one = Scalar::new(1.0, 0.0);
        let zero = Scalar::new(0.0, 0.0);
        // (1,1): X·Z.
        let expect = ComplexMatrix::from_rows(&[&[zero, -one], &[one, zero]]).unwrap();
        assert!(b.element(1, 1).approx_eq(&expect, tol()));
    }

    #[test]
    fn minimal_bases_verify_for_small_groups() {
        for g in [cyclic(4), GroupSpec::new(vec![2, 2]).unwrap(), cyclic(6)] {
            let report = verify(&minimal_shift_multiply(&g), tol());
            assert!(report.is_ueb, "minimal basis failed for {g:?}");
            assert!(report.max_orthogonality_defect < 1e-9);
        }
    }

    #[test]
    fn dephased_first_element_is_identity() {
        let square = d6::latin_square();
        let fam = HadamardFamily::uniform(butson_c6());
        let b = shift_multiply(&square, &fam).unwrap();
        assert!(b
            .element(0, 0)
            .approx_eq(&ComplexMatrix::identity(6), tol()));
    }

    #[test]
    fn shift_multiply_on_the_order6_loop_verifies() {
        let square = d6::latin_square();
        let fam = HadamardFamily::uniform(butson_c6());
        let report = verify(&shift_multiply(&square, &fam).unwrap(), tol());
        assert!(report.is_ueb);
        assert!(report.max_orthogonality_defect < 1e-9);
    }

    #[test]
    fn shift_multiply_rejects_order_mismatch() {
        let square = d6::latin_square();
        let fam = HadamardFamily::uniform(fourier_matrix(&cyclic(2)));
        assert!(matches!(
            shift_multiply(&square, &fam),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn mub_basis_closed_form() {
        // Independent oracle: element (i,j) acts as |k⟩ ↦ F[i][k]·|j−k⟩.
        for g in [
            cyclic(2),
            cyclic(3),
            GroupSpec::new(vec![2, 2]).unwrap(),
            cyclic(5),
        ] {
            let d = g.order();
            let f = fourier_matrix(&g);
            let basis = mub_basis(&g);
            for i in 0..d {
                for j in 0..d {
                    let expect = ComplexMatrix::from_fn(d, d, |r, k| {
                        if r == g.add(j, g.negate(k)) {
                            f.matrix().get(i, k)
                        } else {
                            Scalar::new(0.0, 0.0)
                        }
                    });
                    assert!(
                        basis.element(i, j).approx_eq(&expect, tol()),
                        "closed form mismatch at ({i},{j}) for {g:?}"
                    );
                }
            }
            assert!(verify(&basis, tol()).is_ueb);
        }
    }

    #[test]
    fn mub_equivalence_pair_is_elementwise_equal() {
        for g in [cyclic(2), cyclic(3), GroupSpec::new(vec![2, 2]).unwrap()] {
            let (transformed, mub) = mub_equivalence_pair(&g);
            let d = g.order();
            for i in 0..d {
                for j in 0..d {
                    let dev = transformed
                        .element(i, j)
                        .max_abs_diff(mub.element(i, j))
                        .unwrap();
                    assert!(dev < 1e-9, "({i},{j}) deviates by {dev} for {g:?}");
                }
            }
        }
    }

    #[test]
    fn gsm_diagonal_examples() {
        // Dephased family member: column 0 is all ones, so D_0 = I.
        let f2 = fourier_matrix(&cyclic(2));
        let fam = HadamardFamily::uniform(f2.clone());
        let d0 = gsm_diagonal(0, &fam, 0).unwrap();
        assert!(d0.approx_eq(&ComplexMatrix::identity(2), tol()));
        let d1 = gsm_diagonal(1, &fam, 0).unwrap();
        let expect = ComplexMatrix::diagonal(&[Scalar::new(1.0, 0.0), Scalar::new(-1.0, 0.0)]);
        assert!(d1.approx_eq(&expect, tol()));
        // Diagonal and unitary for the order-6 member.
        let fam6 = HadamardFamily::uniform(butson_c6());
        for j in 0..6 {
            let dj = gsm_diagonal(j, &fam6, 0).unwrap();
            assert!(dj.is_unitary(tol()).unwrap(), "D_{j} not unitary");
            for r in 0..6 {
                for c in 0..6 {
                    if r != c {
                        assert!(dj.get(r, c).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn generalized_reduces_to_shift_multiply_under_identity_insertion() {
        let square = d6::latin_square();
        let fam = HadamardFamily::uniform(butson_c6());
        let plain = shift_multiply(&square, &fam).unwrap();
        let id = ComplexMatrix::identity(6);
        for i in 0..6 {
            for j in 0..6 {
                let p = square.row_permutation_matrix(j);
                let e = p
                    .matmul(&id)
                    .unwrap()
                    .matmul(&hadamard_diag(&fam, i, j).unwrap())
                    .unwrap();
                assert!(e.approx_eq(plain.element(i, j), tol()));
            }
        }
    }

    #[test]
    fn generalized_basis_verifies() {
        let square = d6::latin_square();
        let fam = HadamardFamily::uniform(butson_c6());
        let basis = generalized_shift_multiply(&square, &fam, 0).unwrap();
        let report = verify(&basis, tol());
        assert!(report.is_ueb);
        assert!(report.max_orthogonality_defect < 1e-9);
        // d = 2 instance is a UEB too.
        let z2 = LatinSquare::cayley_table(&cyclic(2));
        let fam2 = HadamardFamily::uniform(fourier_matrix(&cyclic(2)));
        let b2 = generalized_shift_multiply(&z2, &fam2, 0).unwrap();
        assert!(verify(&b2, tol()).is_ueb);
    }

    #[test]
    fn transforms_preserve_verification_and_gram() {
        let basis = pauli_basis(0.0);
        let id = EquivalenceTransform::identity(2);
        assert_eq!(apply_transform(&basis, &id).unwrap(), basis);

        let x = ComplexMatrix::from_rows(&[
            &[Scalar::new(0.0, 0.0), Scalar::new(1.0, 0.0)],
            &[Scalar::new(1.0, 0.0), Scalar::new(0.0, 0.0)],
        ])
        .unwrap();
        let t = EquivalenceTransform::new(
            x,
            ComplexMatrix::identity(2),
            alloc::vec![Scalar::new(1.0, 0.0); 4],
            tol(),
        )
        .unwrap();
        let moved = apply_transform(&basis, &t).unwrap();
        assert!(verify(&moved, tol()).is_ueb);

        // Phase-only transforms leave the gram diagonal untouched.
        let phases: Vec<Scalar> = (0..4)
            .map(|k| Scalar::from_polar(1.0, 0.3 + k as f64))
            .collect();
        let t = EquivalenceTransform::new(
            ComplexMatrix::identity(2),
            ComplexMatrix::identity(2),
            phases,
            tol(),
        )
        .unwrap();
        let moved = apply_transform(&basis, &t).unwrap();
        let r = verify(&moved, tol());
        for a in 0..4 {
            assert!((r.gram.get(a, a) - Scalar::new(2.0, 0.0)).norm() < 1e-12);
        }
        assert!(r.is_ueb);
    }

    #[test]
    fn transform_constructor_rejects_bad_parts() {
        let shear = ComplexMatrix::from_rows(&[
            &[Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0)],
            &[Scalar::new(0.0, 0.0), Scalar::new(1.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(
            EquivalenceTransform::new(
                shear,
                ComplexMatrix::identity(2),
                alloc::vec![Scalar::new(1.0, 0.0); 4],
                tol(),
            ),
            Err(Error::NotUnitary)
        );
        assert_eq!(
            EquivalenceTransform::new(
                ComplexMatrix::identity(2),
                ComplexMatrix::identity(2),
                alloc::vec![Scalar::new(0.5, 0.0); 4],
                tol(),
            ),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn fingerprints_are_transform_invariant() {
        let basis = pauli_basis(0.7);
        let fp = fingerprint(&basis);
        // All-ones blocks for a UEB.
        assert!(fp.iter().all(|&v| (v - 1.0).abs() < 1e-9));

        let u = fourier_matrix(&cyclic(2)).unitary();
        let phases: Vec<Scalar> = (0..4)
            .map(|k| Scalar::from_polar(1.0, 1.1 * k as f64 - 0.4))
            .collect();
        let t = EquivalenceTransform::new(u.clone(), u.dagger(), phases, tol()).unwrap();
        let moved = apply_transform(&basis, &t).unwrap();
        let fp2 = fingerprint(&moved);
        assert_eq!(fp.len(), fp2.len());
        for (a, b) in fp.iter().zip(fp2.iter()) {
            assert!((a - b).abs() < 1e-9);
        }
        // Pauli and the minimal d=2 basis agree, as equivalent bases must.
        let fp3 = fingerprint(&minimal_shift_multiply(&cyclic(2)));
        for (a, b) in fp.iter().zip(fp3.iter()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}
