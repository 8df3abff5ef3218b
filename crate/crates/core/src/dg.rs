//! Two-term DG algebras `R[θ]` with `θ` in degree −1, `θ² = 0` and `dθ = z`.
//!
//! Identifying `C^{−1} = Rθ` with `R`, a class `rθ` lies in `HH^{−1}` exactly
//! when `d(rθ) = rz = 0` and `[rθ, s] = (rs − sr)θ = 0` for all `s ∈ R`.
//! So `HH^{−1} = {r central : rz = 0}`.

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, Quotient, StructureAlgebra};
use crate::cyclotomic::Cyclotomic;
use crate::linalg::{self, kernel, Matrix, Subspace};
use crate::report::{CheckReport, ReportBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DgError {
    #[error("dθ is not central in the degree 0 ring")]
    NotCentral,
    #[error("left and right multiplication by dθ differ")]
    SidesDiffer,
    #[error("element has length {found}, ring has dimension {expected}")]
    Dimension { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug)]
pub struct TwoTermDga {
    ring: StructureAlgebra,
    z: AlgebraElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    pub dim_h_minus1: usize,
    pub dim_h0: usize,
}

impl TwoTermDga {
    pub fn new(ring: StructureAlgebra, z: AlgebraElement) -> Result<Self, DgError> {
        if z.dim() != ring.dim() {
            return Err(DgError::Dimension {
                expected: ring.dim(),
                found: z.dim(),
            });
        }
        if !ring.is_central(&z) {
            return Err(DgError::NotCentral);
        }
        if ring.left_mult_matrix(&z) != ring.right_mult_matrix(&z) {
            return Err(DgError::SidesDiffer);
        }
        Ok(TwoTermDga { ring, z })
    }

    pub fn ring(&self) -> &StructureAlgebra {
        &self.ring
    }

    pub fn z(&self) -> &AlgebraElement {
        &self.z
    }

    /// `{r ∈ R : rz = 0, r central}`, as a subspace of `R`.
    pub fn hh_minus_one(&self) -> Subspace {
        let r = &self.ring;
        let mut blocks = vec![r.right_mult_matrix(&self.z)];
        for i in 0..r.dim() {
            let e = r.basis_element(i);
            blocks.push(r.right_mult_matrix(&e).sub(&r.left_mult_matrix(&e)).expect("square"));
        }
        kernel(&Matrix::vstack(&blocks).expect("equal widths"))
    }

    /// Cohomology of the complex `R --z--> R`.
    pub fn complex_cohomology(&self) -> CohomologyProfile {
        let m = self.ring.right_mult_matrix(&self.z);
        let rank = m.rank();
        CohomologyProfile {
            dim_h_minus1: self.ring.dim() - rank,
            dim_h0: self.ring.dim() - rank,
        }
    }
}

/// `R/(σ − 1)`, the algebra whose modules are the stable ones.
pub fn stable_quotient(ring: &StructureAlgebra, sigma: &AlgebraElement) -> Result<Quotient, AlgebraError> {
    ring.quotient(&[sigma.sub(&ring.one())])
}

/// Diagonalizability of left multiplication by `σ − 1`.
///
/// Passes when `σ − 1` is diagonalizable with every eigenvalue in
/// `candidates` and the 0-eigenspace has the dimension of `R/(σ − 1)`.
pub fn diagonalizability_report(
    ring: &StructureAlgebra,
    sigma: &AlgebraElement,
    candidates: &[Cyclotomic],
) -> CheckReport {
    let mut report = ReportBuilder::new("diagonalizability");
    let m = ring.left_mult_matrix(&sigma.sub(&ring.one()));
    let minpoly = match linalg::minimal_polynomial(&m) {
        Ok(p) => p,
        Err(e) => {
            report.precondition_failed("minimal-polynomial", e.to_string());
            return report.finish();
        }
    };
    report.note("minimal_polynomial", &minpoly);
    let diagonalizable = linalg::is_diagonalizable(&m).unwrap_or(false);
    if !report.expect("diagonalizable", diagonalizable, ()) {
        return report.finish();
    }
    let split = match linalg::eigensplit(&m, candidates) {
        Ok(s) => s,
        Err(e) => {
            report.precondition_failed("eigensplit", e.to_string());
            return report.finish();
        }
    };
    let dims: Vec<(String, usize)> = split
        .components
        .iter()
        .map(|c| (c.eigenvalue.to_string(), c.space.dim()))
        .collect();
    report.expect("eigenvalues-in-pool", split.complete, json!({ "eigenspaces": dims }));
    let zero_dim = split
        .components
        .iter()
        .find(|c| c.eigenvalue.is_zero())
        .map_or(0, |c| c.space.dim());
    match stable_quotient(ring, sigma) {
        Ok(q) => {
            report.expect(
                "zero-eigenspace-matches-stable-quotient",
                zero_dim == q.algebra.dim(),
                json!({ "zero_eigenspace": zero_dim, "stable_quotient": q.algebra.dim() }),
            );
        }
        Err(e) => report.precondition_failed("stable-quotient", e.to_string()),
    }
    report.finish()
}

/// Compares the cohomology of `(R, σ − 1)` with that of `(R/(σ − 1), 0)`.
pub fn quasi_iso_numerology(
    ring: &StructureAlgebra,
    sigma: &AlgebraElement,
) -> Result<(CohomologyProfile, CohomologyProfile), DgError> {
    let mixed = TwoTermDga::new(ring.clone(), sigma.sub(&ring.one()))?.complex_cohomology();
    let q = stable_quotient(ring, sigma)?;
    let zero = q.algebra.zero();
    let stable = TwoTermDga::new(q.algebra, zero)?.complex_cohomology();
    Ok((mixed, stable))
}
