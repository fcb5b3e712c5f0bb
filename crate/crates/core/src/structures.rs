//! Classical structures, latin square structures, and their axioms as
//! concrete matrix identities.
//!
//! A classical structure is the copy/delete/merge/create map family determined
//! by an orthonormal basis: `comult|i⟩ = |i⟩⊗|i⟩`, `mult(|i⟩⊗|j⟩) = δᵢⱼ|i⟩`,
//! `counit|i⟩ = 1`, `unit = Σ|i⟩`. A latin square structure is the linear
//! extension of a loop's multiplication together with its adjoint and the unit
//! basis state. Diagrams are evaluated bottom-to-top as matrix composition;
//! swaps are always inserted explicitly.

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::hadamard::{row_basis, HadamardFamily};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};
use crate::quasigroup::LatinSquare;

/// The four maps of a basis-copying structure, together with the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalStructure {
    dim: usize,
    basis: ComplexMatrix,
    mult: ComplexMatrix,
    comult: ComplexMatrix,
    unit: ComplexMatrix,
    counit: ComplexMatrix,
}

impl ClassicalStructure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis vectors as the columns of a unitary matrix.
    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }

    pub fn mult(&self) -> &ComplexMatrix {
        &self.mult
    }

    pub fn comult(&self) -> &ComplexMatrix {
        &self.comult
    }

    pub fn unit(&self) -> &ComplexMatrix {
        &self.unit
    }

    pub fn counit(&self) -> &ComplexMatrix {
        &self.counit
    }

    /// Copying structure on the standard basis.
    pub fn standard(d: usize) -> ClassicalStructure {
        from_basis_unchecked(&ComplexMatrix::identity(d))
    }

    /// The cup `comult ∘ unit`, a `d²×1` column.
    pub fn cup(&self) -> ComplexMatrix {
        self.comult.matmul(&self.unit).expect("shapes fixed")
    }

    /// The cap `counit ∘ mult`, a `1×d²` row.
    pub fn cap(&self) -> ComplexMatrix {
        self.counit.matmul(&self.mult).expect("shapes fixed")
    }
}

/// Builds the four maps by linear extension over the given orthonormal
/// basis (columns of `basis`). Rejects non-orthonormal input.
pub fn classical_from_onb(basis: &ComplexMatrix, tol: Tolerance) -> Result<ClassicalStructure> {
    if !basis.is_square() {
        return Err(Error::NotSquare {
            rows: basis.rows(),
            cols: basis.cols(),
        });
    }
    if !basis.is_unitary(tol)? {
        return Err(Error::NotOrthonormal);
    }
    Ok(from_basis_unchecked(basis))
}

/// Same assembly without the orthonormality gate. Test hook for exercising
/// axiom failures on degenerate bases.
pub(crate) fn from_basis_unchecked(basis: &ComplexMatrix) -> ClassicalStructure {
    let d = basis.rows();
    let mult = ComplexMatrix::from_fn(d, d * d, |k, ab| {
        let (a, b) = (ab / d, ab % d);
        (0..d)
            .map(|i| basis.get(k, i) * basis.get(a, i).conj() * basis.get(b, i).conj())
            .sum()
    });
    let comult = mult.dagger();
    let unit = ComplexMatrix::from_fn(d, 1, |k, _| (0..d).map(|i| basis.get(k, i)).sum());
    let counit = unit.dagger();
    ClassicalStructure {
        dim: d,
        basis: basis.clone(),
        mult,
        comult,
        unit,
        counit,
    }
}

/// Axiom report for a classical structure; each flag is a finite matrix
/// identity checked within tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalAxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub frobenius: bool,
    pub special: bool,
    pub commutative: bool,
    pub comult_is_dagger: bool,
}

impl ClassicalAxiomReport {
    pub fn all(&self) -> bool {
        self.associative
            && self.unital
            && self.frobenius
            && self.special
            && self.commutative
            && self.comult_is_dagger
    }
}

/// Checks associativity, (co)unitality, the Frobenius law, specialness,
/// commutativity, and `comult = mult†` for the given maps.
pub fn check_classical_axioms(s: &ClassicalStructure, tol: Tolerance) -> ClassicalAxiomReport {
    check_axioms_of_maps(s.dim, &s.mult, &s.comult, &s.unit, &s.counit, tol)
}

fn check_axioms_of_maps(
    d: usize,
    mult: &ComplexMatrix,
    comult: &ComplexMatrix,
    unit: &ComplexMatrix,
    counit: &ComplexMatrix,
    tol: Tolerance,
) -> ClassicalAxiomReport {
    let id = ComplexMatrix::identity(d);
    let m = |a: &ComplexMatrix, b: &ComplexMatrix| a.matmul(b).expect("shapes fixed");

    let assoc_l = m(mult, &mult.kron(&id));
    let assoc_r = m(mult, &id.kron(mult));
    let associative = assoc_l.approx_eq(&assoc_r, tol);

    let unital = m(mult, &unit.kron(&id)).approx_eq(&id, tol)
        && m(mult, &id.kron(unit)).approx_eq(&id, tol)
        && m(&counit.kron(&id), comult).approx_eq(&id, tol)
        && m(&id.kron(counit), comult).approx_eq(&id, tol);

    let middle = m(comult, mult);
    let left = m(&id.kron(mult), &comult.kron(&id));
    let right = m(&mult.kron(&id), &id.kron(comult));
    let frobenius = left.approx_eq(&middle, tol) && middle.approx_eq(&right, tol);

    let special = m(mult, comult).approx_eq(&id, tol);
    let commutative = m(mult, &ComplexMatrix::swap(d)).approx_eq(mult, tol);
    let comult_is_dagger = comult.approx_eq(&mult.dagger(), tol);

    ClassicalAxiomReport {
        associative,
        unital,
        frobenius,
        special,
        commutative,
        comult_is_dagger,
    }
}

/// The Frobenius law for a multiplication/comultiplication pair on dimension
/// `d`: `(id ⊗ mult)(comult ⊗ id) = comult·mult = (mult ⊗ id)(id ⊗ comult)`.
///
/// For the linear extension of a latin square this holds exactly when the
/// square is associative.
pub fn check_frobenius_law(
    mult: &ComplexMatrix,
    comult: &ComplexMatrix,
    tol: Tolerance,
) -> Result<bool> {
    let d = mult.rows();
    if mult.cols() != d * d || comult.rows() != d * d || comult.cols() != d {
        return Err(Error::ShapeMismatch {
            expected: (d, d * d),
            found: (comult.cols(), comult.rows()),
        });
    }
    let id = ComplexMatrix::identity(d);
    let middle = comult.matmul(mult)?;
    let left = id.kron(mult).matmul(&comult.kron(&id))?;
    let right = mult.kron(&id).matmul(&id.kron(comult))?;
    Ok(left.approx_eq(&middle, tol) && middle.approx_eq(&right, tol))
}

/// Complementarity of two classical structures on the same space: assembles
/// `√d · (id ⊗ white-mult) ∘ (black-comult ⊗ id)` and reports its unitarity.
pub fn check_complementary(
    black: &ClassicalStructure,
    white: &ClassicalStructure,
    tol: Tolerance,
) -> Result<bool> {
    if black.dim != white.dim {
        return Err(Error::OrderMismatch {
            left: black.dim,
            right: white.dim,
        });
    }
    let d = black.dim;
    let id = ComplexMatrix::identity(d);
    let composite = id
        .kron(&white.mult)
        .matmul(&black.comult.kron(&id))?
        .scale(Scalar::new((d as f64).sqrt(), 0.0));
    composite.is_unitary(tol)
}

/// A loop's multiplication linearly extended, with its adjoint and unit maps.
#[derive(Debug, Clone, PartialEq)]
pub struct LatinSquareStructure {
    dim: usize,
    mult: ComplexMatrix,
    comult: ComplexMatrix,
    unit: ComplexMatrix,
    counit: ComplexMatrix,
}

impl LatinSquareStructure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &ComplexMatrix {
        &self.mult
    }

    pub fn comult(&self) -> &ComplexMatrix {
        &self.comult
    }

    pub fn unit(&self) -> &ComplexMatrix {
        &self.unit
    }

    pub fn counit(&self) -> &ComplexMatrix {
        &self.counit
    }
}

/// Linear extension of a loop's table: the mult column at index `a·d+b` is
/// `e_{a*b}`; `comult = mult†`; unit is the basis state of the loop unit 0.
///
/// Rejects squares that are not loops with unit 0 — normalize first.
pub fn ls_structure(square: &LatinSquare) -> Result<LatinSquareStructure> {
    if !square.is_loop_at_zero() {
        return Err(Error::NotALoop);
    }
    let d = square.order();
    let mult = linear_extension(square);
    let comult = mult.dagger();
    let unit = ComplexMatrix::basis_column(d, 0);
    let counit = unit.dagger();
    Ok(LatinSquareStructure {
        dim: d,
        mult,
        comult,
        unit,
        counit,
    })
}

/// The mult matrix of any binary table (no loop requirement): column `a·d+b`
/// is `e_{table[a][b]}`.
pub fn linear_extension(square: &LatinSquare) -> ComplexMatrix {
    let d = square.order();
    ComplexMatrix::from_fn(d, d * d, |k, ab| {
        let (a, b) = (ab / d, ab % d);
        if k == square.mul(a, b) {
            Scalar::new(1.0, 0.0)
        } else {
            Scalar::new(0.0, 0.0)
        }
    })
}

/// The two copy-augmented composites whose joint unitarity characterises the
/// latin property of a `d² → d` multiplication:
///
/// - first:  `(mult ⊗ id) ∘ (id ⊗ black-comult)`, on basis states
///   `|a⟩⊗|b⟩ ↦ mult(a,b) ⊗ |b⟩`;
/// - second: `(id ⊗ mult) ∘ (black-comult ⊗ id)`, on basis states
///   `|a⟩⊗|b⟩ ↦ |a⟩ ⊗ mult(a,b)`.
pub fn ls_composites(
    mult: &ComplexMatrix,
    black: &ClassicalStructure,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let d = black.dim;
    if mult.rows() != d || mult.cols() != d * d {
        return Err(Error::ShapeMismatch {
            expected: (d, d * d),
            found: (mult.rows(), mult.cols()),
        });
    }
    let id = ComplexMatrix::identity(d);
    let first = mult.kron(&id).matmul(&id.kron(&black.comult))?;
    let second = id.kron(mult).matmul(&black.comult.kron(&id))?;
    Ok((first, second))
}

/// Unitarity of the two [`ls_composites`].
pub fn check_ls_unitarity(
    mult: &ComplexMatrix,
    black: &ClassicalStructure,
    tol: Tolerance,
) -> Result<(bool, bool)> {
    let (u1, u2) = ls_composites(mult, black)?;
    Ok((u1.is_unitary(tol)?, u2.is_unitary(tol)?))
}

/// Permutes the middle two of four tensor factors in the row index of a
/// `d⁴ × n` matrix: row `(x,y,u,v)` moves to row `(x,u,y,v)`.
fn swap_middle_rows(m: &ComplexMatrix, d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        // Destination row (x,u,y,v) pulls from source row (x,y,u,v).
        let v = r % d;
        let y = (r / d) % d;
        let u = (r / (d * d)) % d;
        let x = r / (d * d * d);
        let src = ((x * d + y) * d + u) * d + v;
        m.get(src, c)
    })
}

/// The bialgebra laws between a multiplication and the black copying
/// structure:
///
/// - `copy ∘ mult = (mult ⊗ mult) ∘ (id ⊗ swap ⊗ id) ∘ (copy ⊗ copy)`
/// - `counit ∘ mult = counit ⊗ counit`
///
/// and, when a unit for the multiplication is supplied,
///
/// - `copy ∘ unit = unit ⊗ unit`
/// - `counit ∘ unit = 1`.
pub fn check_bialgebra(
    mult: &ComplexMatrix,
    unit: Option<&ComplexMatrix>,
    black: &ClassicalStructure,
    tol: Tolerance,
) -> Result<bool> {
    let d = black.dim;
    if mult.rows() != d || mult.cols() != d * d {
        return Err(Error::ShapeMismatch {
            expected: (d, d * d),
            found: (mult.rows(), mult.cols()),
        });
    }
    let lhs = black.comult.matmul(mult)?;
    let copies = black.comult.kron(&black.comult);
    let rhs = mult.kron(mult).matmul(&swap_middle_rows(&copies, d))?;
    if !lhs.approx_eq(&rhs, tol) {
        return Ok(false);
    }

    let lhs = black.counit.matmul(mult)?;
    let rhs = black.counit.kron(&black.counit);
    if !lhs.approx_eq(&rhs, tol) {
        return Ok(false);
    }

    if let Some(unit) = unit {
        let lhs = black.comult.matmul(unit)?;
        let rhs = unit.kron(unit);
        if !lhs.approx_eq(&rhs, tol) {
            return Ok(false);
        }
        let lhs = black.counit.matmul(unit)?;
        if (lhs.get(0, 0) - Scalar::new(1.0, 0.0)).norm() > tol.eps() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transpose of `comult = mult†` through the black cups and caps, with the
/// crossing that keeps the input legs in order. Evaluates to the entrywise
/// conjugate of `mult` in the black basis.
fn duality_transpose_of_comult(
    mult: &ComplexMatrix,
    black: &ClassicalStructure,
) -> Result<ComplexMatrix> {
    let d = black.dim;
    let id = ComplexMatrix::identity(d);
    let id2 = ComplexMatrix::identity(d * d);
    let cap = black.cap();
    let cup = black.cup();
    // cap2x[(x,y,u,v)] = cap(x,u)·cap(y,v): the two caps after the middle swap.
    let cap2x = ComplexMatrix::from_fn(1, d * d * d * d, |_, idx| {
        let v = idx % d;
        let u = (idx / d) % d;
        let y = (idx / (d * d)) % d;
        let x = idx / (d * d * d);
        cap.get(0, x * d + u) * cap.get(0, y * d + v)
    });
    let comult = mult.dagger();
    let inner = comult.kron(&id).matmul(&cup)?;
    cap2x.kron(&id).matmul(&id2.kron(&inner))
}

/// Transpose of `mult` through the black cups and caps; evaluates to the
/// entrywise conjugate of `comult`.
fn duality_transpose_of_mult(
    mult: &ComplexMatrix,
    black: &ClassicalStructure,
) -> Result<ComplexMatrix> {
    let d = black.dim;
    let id = ComplexMatrix::identity(d);
    let id2 = ComplexMatrix::identity(d * d);
    let cap = black.cap();
    let cup = black.cup();
    let cup2x = ComplexMatrix::from_fn(d * d * d * d, 1, |idx, _| {
        let v = idx % d;
        let u = (idx / d) % d;
        let y = (idx / (d * d)) % d;
        let x = idx / (d * d * d);
        cup.get(x * d + u, 0) * cup.get(y * d + v, 0)
    });
    let inner = id2.kron(mult).matmul(&cup2x)?;
    id2.kron(&cap).matmul(&inner.kron(&id))
}

/// The duality relations: the multiplication must equal the cup/cap transpose
/// of its own adjoint, and dually for the comultiplication.
pub fn check_duality(
    mult: &ComplexMatrix,
    black: &ClassicalStructure,
    tol: Tolerance,
) -> Result<bool> {
    let d = black.dim;
    if mult.rows() != d || mult.cols() != d * d {
        return Err(Error::ShapeMismatch {
            expected: (d, d * d),
            found: (mult.rows(), mult.cols()),
        });
    }
    let first = duality_transpose_of_comult(mult, black)?.approx_eq(mult, tol);
    let second = duality_transpose_of_mult(mult, black)?.approx_eq(&mult.dagger(), tol);
    Ok(first && second)
}

/// A bilinear multiplication required only to keep the two unitarity
/// composites unitary; unitality, bialgebra and duality are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedLSStructure {
    dim: usize,
    mult: ComplexMatrix,
}

impl GeneralizedLSStructure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &ComplexMatrix {
        &self.mult
    }
}

/// Hadamard-twisted loop multiplication.
///
/// On black basis inputs the map sends `|a⟩⊗|b⟩` to `λ(a,b)·|a*b⟩`, where the
/// scalar is the white loop `⟨a|ᵏ applied to white-k-mult(|a⟩ᵏ ⊗ |b⟩)` with
/// the `k`-indexed white structure built on the normalized rows of the `k`-th
/// family member. Each scalar is evaluated from the stored maps and rescaled
/// by `√d`, which makes the evaluated loop unimodular and the two unitarity
/// composites genuinely unitary.
pub fn generalized_ls_mult(
    square: &LatinSquare,
    fam: &HadamardFamily,
    k: usize,
) -> Result<GeneralizedLSStructure> {
    if !square.is_loop_at_zero() {
        return Err(Error::NotALoop);
    }
    let d = square.order();
    if fam.order() != d {
        return Err(Error::OrderMismatch {
            left: d,
            right: fam.order(),
        });
    }
    let tol = Tolerance::default();
    let white = classical_from_onb(&row_basis(fam.member(k)?), tol)?;
    let scale = (d as f64).sqrt();
    let mut columns: Vec<(usize, Scalar)> = Vec::with_capacity(d * d);
    for a in 0..d {
        let wa = ComplexMatrix::from_fn(d, 1, |r, _| white.basis().get(r, a));
        for b in 0..d {
            let eb = ComplexMatrix::basis_column(d, b);
            let merged = white.mult().matmul(&wa.kron(&eb))?;
            let lambda = wa.dagger().matmul(&merged)?.get(0, 0);
            columns.push((square.mul(a, b), lambda * scale));
        }
    }
    let mult = ComplexMatrix::from_fn(d, d * d, |r, ab| {
        let (target, lambda) = columns[ab];
        if r == target {
            lambda
        } else {
            Scalar::new(0.0, 0.0)
        }
    });
    Ok(GeneralizedLSStructure { dim: d, mult })
}
