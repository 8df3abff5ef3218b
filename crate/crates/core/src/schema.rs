//! JSON interchange for algebras and Hopf algebras.
//!
//! An algebra is `{"dim", "unit", "structure"}` with `structure[i][j]` the
//! coordinates of `e_i e_j`. A Hopf algebra adds `"comult"` (`comult[k][i][j]`
//! is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`), `"counit"` and
//! `"antipode"` (`antipode[i][k]` is the coefficient of `e_i` in `S(e_k)`).
//! Scalars use the `{"order", "coeffs"}` form.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{AlgebraError, SparseVec, StructureAlgebra};
use crate::cyclotomic::Cyclotomic;
use crate::hopf::{HopfData, HopfError};
use crate::linalg::{Matrix, Vector};

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub unit: Vector,
    pub structure: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub dim: usize,
    pub unit: Vector,
    pub structure: Vec<Vec<Vector>>,
    pub comult: Vec<Vec<Vector>>,
    pub counit: Vector,
    pub antipode: Vec<Vector>,
}

/// A parsed and axiom-checked file.
#[derive(Clone, Debug)]
pub enum Ingested {
    Algebra(StructureAlgebra),
    Hopf(HopfData),
}

impl AlgebraSpec {
    pub fn from_algebra(a: &StructureAlgebra) -> Self {
        AlgebraSpec {
            dim: a.dim(),
            unit: a.unit_coords().to_vec(),
            structure: a.structure_tensor(),
        }
    }

    pub fn build(&self) -> Result<StructureAlgebra, SchemaError> {
        check_cube(&self.structure, self.dim, "structure")?;
        check_len(&self.unit, self.dim, "unit")?;
        Ok(StructureAlgebra::from_tensor(
            self.dim,
            &self.structure,
            self.unit.clone(),
        )?)
    }
}

impl HopfSpec {
    pub fn from_hopf(h: &HopfData) -> Self {
        let n = h.dim();
        let algebra = AlgebraSpec::from_algebra(h.algebra());
        let comult = (0..n)
            .map(|k| {
                let mut m = vec![vec![Cyclotomic::zero(); n]; n];
                for (idx, c) in h.comult(k) {
                    m[idx / n][idx % n] = c.clone();
                }
                m
            })
            .collect();
        HopfSpec {
            dim: n,
            unit: algebra.unit,
            structure: algebra.structure,
            comult,
            counit: h.counit().to_vec(),
            antipode: h.antipode().to_rows(),
        }
    }

    /// Builds and checks every Hopf axiom; failures are named in the error.
    pub fn build(&self) -> Result<HopfData, SchemaError> {
        let n = self.dim;
        let algebra = AlgebraSpec {
            dim: n,
            unit: self.unit.clone(),
            structure: self.structure.clone(),
        }
        .build()?;
        check_cube(&self.comult, n, "comult")?;
        check_len(&self.counit, n, "counit")?;
        if self.antipode.len() != n || self.antipode.iter().any(|r| r.len() != n) {
            return Err(SchemaError::Shape(format!("antipode must be {n}x{n}")));
        }
        let comult: Vec<SparseVec> = self
            .comult
            .iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .flat_map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(move |(j, c)| (i * n + j, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let antipode = Matrix::from_rows(self.antipode.clone()).map_err(|e| SchemaError::Shape(e.to_string()))?;
        Ok(HopfData::new(algebra, comult, self.counit.clone(), antipode)?)
    }
}

fn check_len(v: &[Cyclotomic], n: usize, what: &str) -> Result<(), SchemaError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(SchemaError::Shape(format!(
            "{what} has length {}, expected {n}",
            v.len()
        )))
    }
}

fn check_cube(t: &[Vec<Vector>], n: usize, what: &str) -> Result<(), SchemaError> {
    let ok = t.len() == n && t.iter().all(|m| m.len() == n && m.iter().all(|v| v.len() == n));
    if ok {
        Ok(())
    } else {
        Err(SchemaError::Shape(format!("{what} must be {n}x{n}x{n}")))
    }
}

/// Parses either schema; the presence of `"comult"` selects the Hopf one.
pub fn ingest(text: &str) -> Result<Ingested, SchemaError> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("comult").is_some() {
        let raw: HopfSpec = serde_json::from_value(value)?;
        Ok(Ingested::Hopf(raw.build()?))
    } else {
        let raw: AlgebraSpec = serde_json::from_value(value)?;
        Ok(Ingested::Algebra(raw.build()?))
    }
}
