//! Construction and verification of unitary error bases.
//!
//! A unitary error basis (UEB) on a `d`-dimensional Hilbert space is a family of
//! `d²` unitary `d×d` matrices that are pairwise orthogonal under the
//! Hilbert–Schmidt inner product, `tr(Uᵢ† Uⱼ) = δᵢⱼ·d`. UEBs are the correction
//! sets of tight quantum teleportation protocols.
//!
//! This crate builds UEBs three ways and checks every defining property as a
//! concrete matrix identity:
//!
//! - **Shift-and-multiply**: a latin square of order `d` plus `d` complex
//!   Hadamard matrices ([`ueb::shift_multiply`]), including the minimal variant
//!   driven by a finite abelian group ([`ueb::minimal_shift_multiply`]).
//! - **MUB construction**: assembled from a pair of complementary classical
//!   structures derived from an abelian group ([`ueb::mub_basis`]).
//! - **Generalised shift-and-multiply**: a latin square whose multiplication is
//!   twisted by Hadamard-derived diagonal unitaries
//!   ([`ueb::generalized_shift_multiply`]); the twisted multiplication keeps the
//!   two unitarity composites but drops unitality, bialgebra and duality.
//!
//! Supporting modules: [`linalg`] (dense complex matrices with tolerance-aware
//! predicates), [`quasigroup`] (latin squares, division, isotopy, loops),
//! [`hadamard`] (complex Hadamard matrices and mutual unbiasedness),
//! [`structures`] (classical and latin square structures as explicit maps,
//! with all their axioms as matrix identities), [`teleport`] (numerical
//! teleportation with any verified UEB as the correction set), and [`d6`]
//! (an order-6 worked instance with its reference table).
//!
//! The crate is `no_std` (requires `alloc`); all values are immutable after
//! construction and every operation is a pure function.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod d6;
pub mod error;
pub mod hadamard;
pub mod linalg;
pub mod quasigroup;
pub mod structures;
pub mod teleport;
pub mod ueb;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Scalar, Tolerance};
