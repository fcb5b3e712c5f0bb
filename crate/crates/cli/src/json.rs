//! JSON wire formats shared by all verbs.
//!
//! Matrices: `{"rows":R,"cols":C,"entries":[[re,im],...]}` row-major.
//! Latin squares: `{"order":d,"table":[[...],...]}`.
//! Hadamard families: `{"order":d,"members":[<matrix>,...]}`.
//! Error bases: `{"dim":d,"elements":[[i,j,<matrix>],...]}`.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use ueb_core::hadamard::{HadamardFamily, HadamardMatrix};
use ueb_core::linalg::{ComplexMatrix, Scalar, Tolerance};
use ueb_core::quasigroup::LatinSquare;
use ueb_core::ueb::ErrorBasis;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|&[re, im]| Scalar::new(re, im))
            .collect();
        ComplexMatrix::new(self.rows, self.cols, entries).map_err(|e| anyhow!("bad matrix: {e}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatinJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl LatinJson {
    pub fn from_square(square: &LatinSquare) -> Self {
        LatinJson {
            order: square.order(),
            table: square.table().to_vec(),
        }
    }

    pub fn to_square(&self) -> Result<LatinSquare> {
        if self.table.len() != self.order {
            bail!("order field disagrees with table height");
        }
        LatinSquare::validate(self.table.clone()).map_err(|e| anyhow!("bad latin square: {e}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyJson {
    pub order: usize,
    pub members: Vec<MatrixJson>,
}

impl FamilyJson {
    pub fn from_family(fam: &HadamardFamily) -> Self {
        FamilyJson {
            order: fam.order(),
            members: fam
                .members()
                .iter()
                .map(|h| MatrixJson::from_matrix(h.matrix()))
                .collect(),
        }
    }

    pub fn to_family(&self, tol: Tolerance) -> Result<HadamardFamily> {
        let members = self
            .members
            .iter()
            .map(|m| {
                HadamardMatrix::new(m.to_matrix()?, tol).map_err(|e| anyhow!("bad member: {e}"))
            })
            .collect::<Result<Vec<_>>>()?;
        if members.len() != self.order {
            bail!("family needs exactly {} members", self.order);
        }
        HadamardFamily::new(members).map_err(|e| anyhow!("bad family: {e}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisJson {
    pub dim: usize,
    pub elements: Vec<(usize, usize, MatrixJson)>,
}

impl BasisJson {
    pub fn from_basis(basis: &ErrorBasis) -> Self {
        let d = basis.dim();
        let mut elements = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                elements.push((i, j, MatrixJson::from_matrix(basis.element(i, j))));
            }
        }
        BasisJson { dim: d, elements }
    }

    pub fn to_basis(&self) -> Result<ErrorBasis> {
        let d = self.dim;
        if self.elements.len() != d * d {
            bail!("basis needs exactly {} elements", d * d);
        }
        let mut slots: Vec<Option<ComplexMatrix>> = vec![None; d * d];
        for (i, j, m) in &self.elements {
            if *i >= d || *j >= d {
                bail!("element index ({i},{j}) out of range");
            }
            let slot = &mut slots[i * d + j];
            if slot.is_some() {
                bail!("duplicate element index ({i},{j})");
            }
            *slot = Some(
                m.to_matrix()
                    .with_context(|| format!("element ({i},{j})"))?,
            );
        }
        let elements = slots
            .into_iter()
            .map(|s| s.ok_or_else(|| anyhow!("missing element")))
            .collect::<Result<Vec<_>>>()?;
        ErrorBasis::new(d, elements).map_err(|e| anyhow!("bad basis: {e}"))
    }
}

/// Machine-readable verification report; one schema for every verb that
/// verifies a basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyJson {
    pub verb: String,
    pub dim: usize,
    pub all_unitary: bool,
    pub max_unitarity_defect: f64,
    pub max_orthogonality_defect: f64,
    pub is_ueb: bool,
}
