//! Teleportation with an arbitrary verified unitary error basis as the
//! correction set.
//!
//! The resource is the maximally entangled state `|Φ⟩ = (1/√d)Σ|kk⟩`. For
//! each index pair the measurement effect is the dagger of the Bell-type
//! state built from the basis element, the post-measurement wire is
//! renormalized, and the adjoint of the element is applied as the
//! correction. Every outcome then recovers the input state exactly: each
//! fidelity is 1 and each outcome probability is `1/d²`.

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Scalar, Tolerance};
use crate::ueb::{verify, ErrorBasis};

/// One measurement branch of the protocol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeleportTrace {
    pub outcome: (usize, usize),
    pub outcome_probability: f64,
    /// `|⟨input|recovered⟩|²`; reported as 1 on zero-probability branches,
    /// which are vacuous.
    pub fidelity: f64,
}

/// Runs all `d²` outcomes for a verified UEB and a normalized input state
/// (a `d×1` column).
pub fn teleport_all_outcomes(
    basis: &ErrorBasis,
    state: &ComplexMatrix,
    tol: Tolerance,
) -> Result<Vec<TeleportTrace>> {
    let d = basis.dim();
    if state.rows() != d || state.cols() != 1 {
        return Err(Error::ShapeMismatch {
            expected: (d, 1),
            found: (state.rows(), state.cols()),
        });
    }
    if (state.vector_norm() - 1.0).abs() > tol.eps() {
        return Err(Error::NotNormalized);
    }
    if !verify(basis, tol).is_ueb {
        return Err(Error::NotUeb);
    }

    let inv_sqrt_d = 1.0 / (d as f64).sqrt();
    let phi = ComplexMatrix::from_fn(d * d, 1, |idx, _| {
        if idx / d == idx % d {
            Scalar::new(inv_sqrt_d, 0.0)
        } else {
            Scalar::new(0.0, 0.0)
        }
    });
    let id = ComplexMatrix::identity(d);
    let joint = state.kron(&phi);

    let mut traces = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let element = basis.element(i, j);
            let effect_state = element.dagger().kron(&id).matmul(&phi)?;
            let residual = effect_state.dagger().kron(&id).matmul(&joint)?;
            let norm = residual.vector_norm();
            let probability = norm * norm;
            let fidelity = if probability <= tol.eps() * tol.eps() {
                1.0
            } else {
                let collapsed = residual.scale(Scalar::new(1.0 / norm, 0.0));
                let recovered = element.dagger().matmul(&collapsed)?;
                state.dagger().matmul(&recovered)?.get(0, 0).norm_sqr()
            };
            traces.push(TeleportTrace {
                outcome: (i, j),
                outcome_probability: probability,
                fidelity,
            });
        }
    }
    Ok(traces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ueb::{minimal_shift_multiply, pauli_basis};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn pauli_teleports_the_ground_state() {
        let state = ComplexMatrix::basis_column(2, 0);
        let traces = teleport_all_outcomes(&pauli_basis(0.0), &state, tol()).unwrap();
        assert_eq!(traces.len(), 4);
        for t in &traces {
            assert!((t.outcome_probability - 0.25).abs() < 1e-12);
            assert!((t.fidelity - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn probabilities_sum_to_one_for_superposed_input() {
        let a = Scalar::new(0.6, 0.0);
        let b = Scalar::new(0.0, 0.8);
        let state = ComplexMatrix::new(2, 1, alloc::vec![a, b]).unwrap();
        let traces = teleport_all_outcomes(&pauli_basis(1.3), &state, tol()).unwrap();
        let total: f64 = traces.iter().map(|t| t.outcome_probability).sum();
        assert!((total - 1.0).abs() < 1e-12);
        for t in &traces {
            assert!((t.fidelity - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn z3_minimal_basis_teleports() {
        let g = crate::quasigroup::GroupSpec::cyclic(3).unwrap();
        let basis = minimal_shift_multiply(&g);
        let n = 1.0 / 3.0f64.sqrt();
        let state = ComplexMatrix::new(
            3,
            1,
            alloc::vec![
                Scalar::new(n, 0.0),
                Scalar::from_polar(n, 2.1),
                Scalar::from_polar(n, -0.7)
            ],
        )
        .unwrap();
        let traces = teleport_all_outcomes(&basis, &state, tol()).unwrap();
        for t in &traces {
            assert!((t.outcome_probability - 1.0 / 9.0).abs() < 1e-10);
            assert!((t.fidelity - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_broken_bases_and_states() {
        let state = ComplexMatrix::basis_column(2, 0);
        let mut els = pauli_basis(0.0).elements().to_vec();
        els[3] = els[3].scale(Scalar::new(2.0, 0.0));
        let broken = ErrorBasis::new(2, els).unwrap();
        assert_eq!(
            teleport_all_outcomes(&broken, &state, tol()),
            Err(Error::NotUeb)
        );
        let unnormalized = ComplexMatrix::new(
            2,
            1,
            alloc::vec![Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0)],
        )
        .unwrap();
        assert_eq!(
            teleport_all_outcomes(&pauli_basis(0.0), &unnormalized, tol()),
            Err(Error::NotNormalized)
        );
    }
}
