//! Small-matrix spectral helpers for fingerprints.
//!
//! Only eigenvalues of Hermitian matrices are needed, via cyclic Jacobi
//! sweeps with complex rotations. Robust for the repeated eigenvalues that
//! unitary inputs produce, which rules out characteristic-polynomial methods.

use alloc::vec::Vec;
// Unused whenever std leaks into the build graph and supplies inherent float
// methods; required for every pure no_std build.
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{ComplexMatrix, Scalar};

/// Eigenvalues of a Hermitian matrix, ascending.
pub(crate) fn hermitian_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    let d = h.rows();
    debug_assert!(h.is_square());
    let mut a: Vec<Scalar> = h.entries().to_vec();
    let idx = |r: usize, c: usize| r * d + c;
    let scale = h.max_abs().max(1.0);

    for _sweep in 0..60 {
        let mut off: f64 = 0.0;
        for p in 0..d {
            for q in (p + 1)..d {
                off = off.max(a[idx(p, q)].norm());
            }
        }
        if off <= 1e-14 * scale {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a[idx(p, q)];
                let b = apq.norm();
                if b <= 1e-16 * scale {
                    continue;
                }
                let app = a[idx(p, p)].re;
                let aqq = a[idx(q, q)].re;
                let u = apq / b;
                let tau = (aqq - app) / (2.0 * b);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // G[p][p]=c, G[p][q]=s, G[q][p]=-s·conj(u), G[q][q]=c·conj(u);
                // update a ← G†·a·G.
                for r in 0..d {
                    let hp = a[idx(r, p)];
                    let hq = a[idx(r, q)];
                    a[idx(r, p)] = hp * c - hq * u.conj() * s;
                    a[idx(r, q)] = hp * s + hq * u.conj() * c;
                }
                for col in 0..d {
                    let hp = a[idx(p, col)];
                    let hq = a[idx(q, col)];
                    a[idx(p, col)] = hp * c - hq * u * s;
                    a[idx(q, col)] = hp * s + hq * u * c;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..d).map(|i| a[idx(i, i)].re).collect();
    eigs.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite"));
    eigs
}

/// Singular values of a matrix, ascending: square roots of the eigenvalues
/// of `m†·m`.
pub(crate) fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = m.dagger().matmul(m).expect("shapes fixed");
    hermitian_eigenvalues(&gram)
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Tolerance;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    #[test]
    fn known_two_by_two() {
        let m =
            ComplexMatrix::from_rows(&[&[c(2.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(2.0, 0.0)]])
                .unwrap();
        let e = hermitian_eigenvalues(&m);
        assert!((e[0] - 1.0).abs() < 1e-12 && (e[1] - 3.0).abs() < 1e-12);
        let y =
            ComplexMatrix::from_rows(&[&[c(0.0, 0.0), c(0.0, -1.0)], &[c(0.0, 1.0), c(0.0, 0.0)]])
                .unwrap();
        let e = hermitian_eigenvalues(&y);
        assert!((e[0] + 1.0).abs() < 1e-12 && (e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn circulant_three_by_three() {
        let m = ComplexMatrix::from_rows(&[
            &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)],
            &[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigenvalues(&m);
        assert!((e[0] + 1.0).abs() < 1e-12);
        assert!((e[1] + 1.0).abs() < 1e-12);
        assert!((e[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn trace_and_frobenius_sums_match() {
        // Hermitian from A + A† with a fixed seedless pattern.
        let a = ComplexMatrix::from_fn(5, 5, |r, q| {
            c(
                ((r * 7 + q * 3) % 11) as f64 / 11.0,
                ((r * 5 + q * 2) % 13) as f64 / 13.0,
            )
        });
        let h = a.add(&a.dagger()).unwrap();
        let e = hermitian_eigenvalues(&h);
        let tr: f64 = (0..5).map(|i| h.get(i, i).re).sum();
        assert!((e.iter().sum::<f64>() - tr).abs() < 1e-10);
        let frob: f64 = h.entries().iter().map(|z| z.norm_sqr()).sum();
        assert!((e.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }

    #[test]
    fn singular_values_of_unitaries_are_one() {
        let tol = Tolerance::default();
        let f = crate::hadamard::butson_c6().unitary();
        assert!(f.is_unitary(tol).unwrap());
        for s in singular_values(&f) {
            assert!((s - 1.0).abs() < 1e-10);
        }
        let m = ComplexMatrix::diagonal(&[c(3.0, 0.0), c(0.0, 4.0)]);
        let s = singular_values(&m);
        assert!((s[0] - 3.0).abs() < 1e-12 && (s[1] - 4.0).abs() < 1e-12);
    }
}
