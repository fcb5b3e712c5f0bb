//! Constructive normalization of dimension-2 error bases.
//!
//! Every unitary error basis on a 2-dimensional space is equivalent to the
//! canonical quadruple `{I, diag(1,−1), X, [[0,−i],[i,0]]}`. [`normalize_d2`]
//! executes the constructive proof as an algorithm: strip the first element,
//! diagonalize the second, kill the phases, and finish with a half-phase
//! conjugation. The transcript records every move applied.

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};

use super::{verify, ErrorBasis};

/// One move of the normalization, in application order.
#[derive(Debug, Clone, PartialEq)]
pub enum TransformStep {
    /// Every element was left-multiplied by the matrix.
    LeftMultiply(ComplexMatrix),
    /// Every element `e` was replaced by `U·e·U†`.
    Conjugate(ComplexMatrix),
    /// A single element was rescaled by a unimodular phase.
    Phase { index: usize, phase: Scalar },
}

/// The canonical dimension-2 quadruple `{I, Z, X, [[0,−i],[i,0]]}`.
pub fn canonical_quadruple() -> [ComplexMatrix; 4] {
    let zero = Scalar::new(0.0, 0.0);
    let one = Scalar::new(1.0, 0.0);
    let i = Scalar::new(0.0, 1.0);
    [
        ComplexMatrix::identity(2),
        ComplexMatrix::diagonal(&[one, -one]),
        ComplexMatrix::from_rows(&[&[zero, one], &[one, zero]]).expect("finite"),
        ComplexMatrix::from_rows(&[&[zero, -i], &[i, zero]]).expect("finite"),
    ]
}

/// Eigendecomposition of a 2×2 unitary traceless matrix, closed form.
///
/// Returns `(p, lambda)` with `p` unitary and `p†·a·p = diag(lambda, −lambda)`.
/// Eigenvectors take the larger-modulus null-space candidate and are
/// phase-fixed so their first nonzero component is real positive.
fn eig2_unitary_traceless(a: &ComplexMatrix) -> (ComplexMatrix, Scalar) {
    let det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    let lambda = (-det).sqrt();
    // (a − λI) has rank one; each row yields a null-space candidate.
    let cand1 = [a.get(0, 1), lambda - a.get(0, 0)];
    let cand2 = [lambda - a.get(1, 1), a.get(1, 0)];
    let n1 = cand1[0].norm_sqr() + cand1[1].norm_sqr();
    let n2 = cand2[0].norm_sqr() + cand2[1].norm_sqr();
    let v = if n1 >= n2 { cand1 } else { cand2 };
    let v = phase_fix(normalize2(v));
    // The other eigenspace of a normal matrix is the orthogonal complement.
    let w = phase_fix([-v[1].conj(), v[0].conj()]);
    let p = ComplexMatrix::from_rows(&[&[v[0], w[0]], &[v[1], w[1]]]).expect("finite");
    (p, lambda)
}

fn normalize2(v: [Scalar; 2]) -> [Scalar; 2] {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

fn phase_fix(v: [Scalar; 2]) -> [Scalar; 2] {
    let lead = if v[0].norm() > 1e-12 { v[0] } else { v[1] };
    let ph = lead.conj() / lead.norm();
    [v[0] * ph, v[1] * ph]
}

fn unit_phase(z: Scalar) -> Scalar {
    z / z.norm()
}

/// Normalizes a verified dimension-2 UEB to the canonical quadruple.
///
/// Steps: (1) left-multiply all elements by the adjoint of the first;
/// (2) conjugate by the eigenbasis of the second element; (3) rescale
/// elements by phases to reach `diag(1,−1)` and unit lower-left entries;
/// (4) conjugate by `diag(1, e^{iφ/2})` and apply final phases. Rejects
/// non-UEB input. Applying the returned steps in order to the input
/// reproduces the output exactly.
pub fn normalize_d2(
    basis: &ErrorBasis,
    tol: Tolerance,
) -> Result<(ErrorBasis, Vec<TransformStep>)> {
    if basis.dim() != 2 {
        return Err(Error::NotDimensionTwo);
    }
    if !verify(basis, tol).is_ueb {
        return Err(Error::NotUeb);
    }
    let mut steps = Vec::new();
    let mut els: Vec<ComplexMatrix> = basis.elements().to_vec();

    // (1) Bring the first element to the identity.
    let strip = els[0].dagger();
    for e in &mut els {
        *e = strip.matmul(e)?;
    }
    steps.push(TransformStep::LeftMultiply(strip));

    // (2) Diagonalize the second element. It is unitary and traceless, so its
    // eigenvalues are ±λ with |λ| = 1 and the decomposition never degenerates.
    let (p, _) = eig2_unitary_traceless(&els[1]);
    let p_dag = p.dagger();
    for e in &mut els {
        *e = p_dag.matmul(e)?.matmul(&p)?;
    }
    steps.push(TransformStep::Conjugate(p_dag.clone()));

    // (3a) Rescale the second element to diag(1,−1).
    let lambda = els[1].get(0, 0);
    let ph = unit_phase(lambda).conj();
    els[1] = els[1].scale(ph);
    steps.push(TransformStep::Phase {
        index: 1,
        phase: ph,
    });

    // (3b) The remaining two have zero diagonals; fix their lower-left
    // entries to 1.
    for k in [2usize, 3] {
        let s = els[k].get(1, 0);
        let ph = unit_phase(s).conj();
        els[k] = els[k].scale(ph);
        steps.push(TransformStep::Phase {
            index: k,
            phase: ph,
        });
    }

    // (4) Half-phase conjugation sends the third to X and the fourth to the
    // canonical imaginary form.
    let c1 = unit_phase(els[2].get(0, 1));
    let t = c1.sqrt();
    let t_mat = ComplexMatrix::diagonal(&[Scalar::new(1.0, 0.0), t]);
    for e in &mut els {
        *e = t_mat.matmul(e)?.matmul(&t_mat.dagger())?;
    }
    steps.push(TransformStep::Conjugate(t_mat));

    let ph2 = t.conj();
    els[2] = els[2].scale(ph2);
    steps.push(TransformStep::Phase {
        index: 2,
        phase: ph2,
    });
    let ph3 = t.conj() * Scalar::new(0.0, 1.0);
    els[3] = els[3].scale(ph3);
    steps.push(TransformStep::Phase {
        index: 3,
        phase: ph3,
    });

    Ok((ErrorBasis::new(2, els)?, steps))
}

/// Replays a transcript against a basis. Test and audit hook.
pub fn replay(basis: &ErrorBasis, steps: &[TransformStep]) -> Result<ErrorBasis> {
    let mut els: Vec<ComplexMatrix> = basis.elements().to_vec();
    for step in steps {
        match step {
            TransformStep::LeftMultiply(u) => {
                for e in &mut els {
                    *e = u.matmul(e)?;
                }
            }
            TransformStep::Conjugate(u) => {
                let u_dag = u.dagger();
                for e in &mut els {
                    *e = u.matmul(e)?.matmul(&u_dag)?;
                }
            }
            TransformStep::Phase { index, phase } => {
                els[*index] = els[*index].scale(*phase);
            }
        }
    }
    ErrorBasis::new(basis.dim(), els)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ueb::pauli_basis;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn assert_canonical(basis: &ErrorBasis) {
        for (e, target) in basis.elements().iter().zip(canonical_quadruple().iter()) {
            let dev = e.max_abs_diff(target).unwrap();
            assert!(dev < 1e-9, "deviation {dev}");
        }
    }

    #[test]
    fn pauli_with_phase_normalizes() {
        let (out, steps) = normalize_d2(&pauli_basis(1.234), tol()).unwrap();
        assert_canonical(&out);
        assert!(!steps.is_empty());
        // The transcript reproduces the output when replayed.
        let replayed = replay(&pauli_basis(1.234), &steps).unwrap();
        for (a, b) in replayed.elements().iter().zip(out.elements().iter()) {
            assert!(a.approx_eq(b, tol()));
        }
    }

    #[test]
    fn minimal_z2_normalizes() {
        let g = crate::quasigroup::GroupSpec::cyclic(2).unwrap();
        let (out, _) = normalize_d2(&crate::ueb::minimal_shift_multiply(&g), tol()).unwrap();
        assert_canonical(&out);
    }

    #[test]
    fn idempotent_on_canonical_output() {
        let (once, _) = normalize_d2(&pauli_basis(2.6), tol()).unwrap();
        let (twice, _) = normalize_d2(&once, tol()).unwrap();
        assert_canonical(&twice);
        for (a, b) in once.elements().iter().zip(twice.elements().iter()) {
            assert!(a.max_abs_diff(b).unwrap() < 1e-9);
        }
    }

    #[test]
    fn rejects_wrong_dimension_and_non_uebs() {
        let g = crate::quasigroup::GroupSpec::cyclic(3).unwrap();
        let b3 = crate::ueb::minimal_shift_multiply(&g);
        assert_eq!(normalize_d2(&b3, tol()), Err(Error::NotDimensionTwo));

        let mut els = pauli_basis(0.0).elements().to_vec();
        els[2] = ComplexMatrix::identity(2);
        let broken = ErrorBasis::new(2, els).unwrap();
        assert_eq!(normalize_d2(&broken, tol()), Err(Error::NotUeb));
    }
}
