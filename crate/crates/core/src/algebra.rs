//! Finite-dimensional associative unital algebras given by structure constants.
//!
//! `e_i · e_j = Σ_k c[i][j][k] e_k`. Products are stored sparsely per basis
//! pair since every algebra built here has sparse multiplication tables.

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, Neg, Sub};
use std::sync::RwLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::expr::Relation;
use crate::linalg::{
    self, axpy, is_zero_vector, kernel, unit_vector, zero_vector, LinalgError, Matrix, Subspace, Vector,
};
use crate::report::{CheckReport, ReportBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit law fails on basis element {index}")]
    UnitLaw { index: usize },
    #[error("element is not central")]
    NotCentral,
    #[error("change of basis matrix is singular")]
    SingularBasis,
    #[error("eigenspaces of dims {dims:?} do not fill dimension {dim}")]
    IncompleteSplit { dims: Vec<usize>, dim: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// How thoroughly associativity is verified when an algebra is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssociativityPolicy {
    /// Check every basis triple when `dim` is at most this.
    pub exhaustive_limit: usize,
    /// Number of random triples above the limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for AssociativityPolicy {
    fn default() -> Self {
        AssociativityPolicy {
            exhaustive_limit: 100,
            samples: 10_000,
            seed: 0x5eed,
        }
    }
}

static GLOBAL_POLICY: RwLock<Option<AssociativityPolicy>> = RwLock::new(None);

impl AssociativityPolicy {
    /// Process-wide policy used by the checked constructors.
    pub fn current() -> AssociativityPolicy {
        GLOBAL_POLICY.read().map(|p| p.unwrap_or_default()).unwrap_or_default()
    }

    pub fn set_current(policy: AssociativityPolicy) {
        if let Ok(mut g) = GLOBAL_POLICY.write() {
            *g = Some(policy);
        }
    }
}

pub type SparseVec = Vec<(usize, Cyclotomic)>;

fn sparsify(v: Vector) -> SparseVec {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AlgebraElement {
    coords: Vector,
}

impl AlgebraElement {
    pub fn from_coords(coords: Vector) -> Self {
        AlgebraElement { coords }
    }

    pub fn coords(&self) -> &[Cyclotomic] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        AlgebraElement {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        AlgebraElement {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> AlgebraElement {
        AlgebraElement {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::add(self, rhs)
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::sub(self, rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&Cyclotomic::from_integer(-1))
    }
}

#[derive(Clone)]
pub struct StructureAlgebra {
    dim: usize,
    products: Vec<SparseVec>,
    unit: Vector,
}

impl std::fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StructureAlgebra")
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.unit == other.unit
            && (0..self.dim * self.dim).all(|ij| {
                let i = ij / self.dim;
                let j = ij % self.dim;
                self.basis_product(i, j) == other.basis_product(i, j)
            })
    }
}

/// Result of [`StructureAlgebra::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructureAlgebra,
    /// `dim(A/I) × dim(A)` matrix of the canonical projection.
    pub projection: Matrix,
    pub ideal: Subspace,
    /// Original basis indices whose images form the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_coords(self.projection.mul_vec(a.coords()).expect("dimension"))
    }

    /// True when everything was quotiented away.
    pub fn is_zero(&self) -> bool {
        self.algebra.dim() == 0
    }
}

/// One block of a central eigensplit.
#[derive(Clone, Debug)]
pub struct Block {
    pub eigenvalue: Cyclotomic,
    pub algebra: StructureAlgebra,
    /// Echelon basis of the block inside the parent algebra.
    pub space: Subspace,
    /// The block's unit as an element of the parent: a central idempotent.
    pub idempotent: AlgebraElement,
}

impl Block {
    /// Image of a parent element under `a ↦ a·e`, in block coordinates.
    pub fn restrict(&self, parent: &StructureAlgebra, a: &AlgebraElement) -> AlgebraElement {
        let v = parent.mul(a, &self.idempotent);
        AlgebraElement::from_coords(self.space.coordinates(v.coords()).expect("block membership"))
    }

    /// Block coordinates back to a parent element.
    pub fn embed(&self, b: &AlgebraElement) -> AlgebraElement {
        let mut v = zero_vector(self.space.ambient_dim());
        for (c, row) in b.coords().iter().zip(self.space.basis()) {
            axpy(&mut v, c, row);
        }
        AlgebraElement::from_coords(v)
    }
}

impl StructureAlgebra {
    /// Builds and validates from sparse products indexed by `i·dim + j`.
    pub fn from_sparse(dim: usize, products: Vec<SparseVec>, unit: Vector) -> Result<Self, AlgebraError> {
        Self::from_sparse_with_policy(dim, products, unit, &AssociativityPolicy::current())
    }

    pub fn from_sparse_with_policy(
        dim: usize,
        products: Vec<SparseVec>,
        unit: Vector,
        policy: &AssociativityPolicy,
    ) -> Result<Self, AlgebraError> {
        if products.len() != dim * dim || unit.len() != dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "dim {dim} needs {} products and a unit of length {dim} (got {} and {})",
                dim * dim,
                products.len(),
                unit.len()
            )));
        }
        if let Some(bad) = products.iter().flatten().find(|(k, _)| *k >= dim) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "product index {} out of range",
                bad.0
            )));
        }
        let a = StructureAlgebra { dim, products, unit };
        a.validate(policy)?;
        Ok(a)
    }

    /// Builds from a closure returning the dense product `e_i · e_j`.
    pub fn from_fn(dim: usize, unit: Vector, f: impl Fn(usize, usize) -> Vector) -> Result<Self, AlgebraError> {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                if v.len() != dim {
                    return Err(AlgebraError::DimensionMismatch(format!(
                        "product e_{i} e_{j} has length {}",
                        v.len()
                    )));
                }
                products.push(sparsify(v));
            }
        }
        Self::from_sparse(dim, products, unit)
    }

    /// Builds from a dense tensor `structure[i][j][k]`.
    pub fn from_tensor(dim: usize, structure: &[Vec<Vector>], unit: Vector) -> Result<Self, AlgebraError> {
        if structure.len() != dim || structure.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "structure tensor is not {dim}x{dim}x{dim}"
            )));
        }
        Self::from_fn(dim, unit, |i, j| structure[i][j].clone())
    }

    /// The zero algebra, returned when a quotient collapses.
    pub fn zero_algebra() -> Self {
        StructureAlgebra {
            dim: 0,
            products: Vec::new(),
            unit: Vec::new(),
        }
    }

    fn validate(&self, policy: &AssociativityPolicy) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            let e = unit_vector(n, i);
            if self.mul_vec(&self.unit, &e) != e {
                return Err(AlgebraError::UnitLaw { index: i });
            }
            if self.mul_vec(&e, &self.unit) != e {
                return Err(AlgebraError::UnitLaw { index: i });
            }
        }
        if n <= policy.exhaustive_limit {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !self.associates(i, j, k) {
                            return Err(AlgebraError::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
            for _ in 0..policy.samples {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.associates(i, j, k) {
                    return Err(AlgebraError::NotAssociative { i, j, k });
                }
            }
        }
        Ok(())
    }

    /// First basis triple on which associativity fails, checking all of them.
    pub fn find_nonassociative_triple(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.associates(i, j, k) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    fn associates(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.dim;
        let merge = |mut terms: Vec<(usize, Cyclotomic)>| {
            terms.sort_by_key(|(t, _)| *t);
            let mut out: SparseVec = Vec::with_capacity(terms.len());
            for (t, c) in terms {
                match out.last_mut() {
                    Some((u, acc)) if *u == t => *acc += &c,
                    _ => out.push((t, c)),
                }
            }
            out.retain(|(_, c)| !c.is_zero());
            out
        };
        let mut lhs = Vec::new();
        for (m, c) in &self.products[i * n + j] {
            for (t, d) in &self.products[m * n + k] {
                lhs.push((*t, c * d));
            }
        }
        let mut rhs = Vec::new();
        for (m, c) in &self.products[j * n + k] {
            for (t, d) in &self.products[i * n + m] {
                rhs.push((*t, c * d));
            }
        }
        merge(lhs) == merge(rhs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    /// Dense structure tensor `c[i][j][k]`.
    pub fn structure_tensor(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut v = zero_vector(self.dim);
                        for (k, c) in self.basis_product(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn unit_coords(&self) -> &[Cyclotomic] {
        &self.unit
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::from_coords(self.unit.clone())
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::from_coords(zero_vector(self.dim))
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::from_coords(unit_vector(self.dim, i))
    }

    pub fn element(&self, coords: Vector) -> Result<AlgebraElement, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "element of length {} in an algebra of dim {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(AlgebraElement::from_coords(coords))
    }

    pub(crate) fn mul_vec(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.products[i * n + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if a.dim() != self.dim || b.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch(format!(
                "factors of dims {} and {} in an algebra of dim {}",
                a.dim(),
                b.dim(),
                self.dim
            )));
        }
        Ok(AlgebraElement::from_coords(self.mul_vec(&a.coords, &b.coords)))
    }

    /// Product; panics on a dimension mismatch (see [`Self::try_mul`]).
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.try_mul(a, b).expect("element dimension mismatch")
    }

    /// Left-to-right product of several factors.
    pub fn product(&self, factors: &[&AlgebraElement]) -> AlgebraElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &AlgebraElement, k: u32) -> AlgebraElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Matrix of `v ↦ a·v`.
    pub fn left_mult_matrix(&self, a: &AlgebraElement) -> Matrix {
        let n = self.dim;
        let mut cols = vec![zero_vector(n); n];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, col) in cols.iter_mut().enumerate() {
                for (k, c) in &self.products[i * n + j] {
                    col[*k] += &(x * c);
                }
            }
        }
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_mult_matrix(&self, a: &AlgebraElement) -> Matrix {
        let n = self.dim;
        let mut cols = vec![zero_vector(n); n];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, col) in cols.iter_mut().enumerate() {
                for (k, c) in &self.products[j * n + i] {
                    col[*k] += &(x * c);
                }
            }
        }
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    pub fn is_central(&self, a: &AlgebraElement) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_element(i);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    /// Two-sided inverse, found by solving `a·y = 1` and confirming `y·a = 1`.
    pub fn inverse(&self, a: &AlgebraElement) -> Option<AlgebraElement> {
        let y = linalg::solve(&self.left_mult_matrix(a), &self.unit).ok()??;
        let y = AlgebraElement::from_coords(y);
        (self.mul(&y, a) == self.one()).then_some(y)
    }

    /// `{a : a e_i = e_i a for all i}`.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        let blocks: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                let e = self.basis_element(i);
                self.right_mult_matrix(&e)
                    .sub(&self.left_mult_matrix(&e))
                    .expect("square")
            })
            .collect();
        kernel(&Matrix::vstack(&blocks).expect("equal widths"))
    }

    /// Jacobson radical via the trace form: `{x : Tr(L_{x·y}) = 0 for all y}`
    /// (valid in characteristic zero).
    pub fn radical(&self) -> Subspace {
        let n = self.dim;
        let traces: Vec<Cyclotomic> = (0..n)
            .map(|k| {
                let mut t = Cyclotomic::zero();
                for m in 0..n {
                    for (idx, c) in self.basis_product(k, m) {
                        if *idx == m {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect();
        let form = Matrix::from_fn(n, n, |j, i| {
            let mut acc = Cyclotomic::zero();
            for (k, c) in self.basis_product(i, j) {
                if !traces[*k].is_zero() {
                    acc += &(c * &traces[*k]);
                }
            }
            acc
        });
        kernel(&form)
    }

    /// Two-sided ideal generated by `gens`, closed under left and right
    /// multiplication by every basis element.
    pub fn ideal_closure(&self, gens: &[AlgebraElement]) -> Subspace {
        let n = self.dim;
        let mut space = Subspace::zero(n);
        let mut queue: VecDeque<Vector> = gens.iter().map(|g| g.coords.clone()).collect();
        while let Some(v) = queue.pop_front() {
            if space.dim() == n {
                break;
            }
            if !space.insert(&v) {
                continue;
            }
            for i in 0..n {
                let e = unit_vector(n, i);
                queue.push_back(self.mul_vec(&e, &v));
                queue.push_back(self.mul_vec(&v, &e));
            }
        }
        space
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn subalgebra_generated(&self, gens: &[AlgebraElement]) -> Subspace {
        let n = self.dim;
        let mut space = Subspace::zero(n);
        let mut queue: VecDeque<Vector> = VecDeque::from([self.unit.clone()]);
        while let Some(v) = queue.pop_front() {
            if !space.insert(&v) {
                continue;
            }
            for g in gens {
                queue.push_back(self.mul_vec(&g.coords, &v));
            }
        }
        space
    }

    /// `A / (gens)`, with the complement basis chosen as the earliest original
    /// basis vectors independent modulo the ideal.
    pub fn quotient(&self, gens: &[AlgebraElement]) -> Result<Quotient, AlgebraError> {
        let n = self.dim;
        let ideal = self.ideal_closure(gens);
        if ideal.dim() == n {
            return Ok(Quotient {
                algebra: StructureAlgebra::zero_algebra(),
                projection: Matrix::zeros(0, n),
                ideal,
                complement: Vec::new(),
            });
        }
        let mut span = ideal.clone();
        let mut complement = Vec::new();
        for i in 0..n {
            if span.insert(&unit_vector(n, i)) {
                complement.push(i);
            }
        }
        let m = complement.len();
        let mut columns: Vec<Vector> = ideal.basis().to_vec();
        columns.extend(complement.iter().map(|&i| unit_vector(n, i)));
        let change = Matrix::from_columns(n, &columns)?
            .inverse()
            .expect("ideal basis plus complement is a basis");
        let offset = ideal.dim();
        let projection = Matrix::from_fn(m, n, |r, c| change.get(offset + r, c).clone());
        let project = |v: &[Cyclotomic]| projection.mul_vec(v).expect("dimension");
        let unit = project(&self.unit);
        let algebra = StructureAlgebra::from_fn(m, unit, |a, b| {
            let prod = self.mul_vec(&unit_vector(n, complement[a]), &unit_vector(n, complement[b]));
            project(&prod)
        })?;
        Ok(Quotient {
            algebra,
            projection,
            ideal,
            complement,
        })
    }

    /// Splits `A` into the eigenspaces of left multiplication by a central `z`.
    pub fn central_eigensplit(
        &self,
        z: &AlgebraElement,
        candidates: &[Cyclotomic],
    ) -> Result<Vec<Block>, AlgebraError> {
        if !self.is_central(z) {
            return Err(AlgebraError::NotCentral);
        }
        let split = linalg::eigensplit(&self.left_mult_matrix(z), candidates)?;
        if !split.complete {
            return Err(AlgebraError::IncompleteSplit {
                dims: split.dims(),
                dim: self.dim,
            });
        }
        let n = self.dim;
        let columns: Vec<Vector> = split
            .components
            .iter()
            .flat_map(|c| c.space.basis().iter().cloned())
            .collect();
        let change = Matrix::from_columns(n, &columns)?
            .inverse()
            .expect("complete eigensplit spans the algebra");
        let unit_coords = change.mul_vec(&self.unit)?;
        let mut offset = 0;
        let mut blocks = Vec::with_capacity(split.components.len());
        for comp in split.components {
            let space = comp.space;
            let d = space.dim();
            let mut idempotent = zero_vector(n);
            for (c, row) in unit_coords[offset..offset + d].iter().zip(space.basis()) {
                axpy(&mut idempotent, c, row);
            }
            let local_unit = space.coordinates(&idempotent).expect("in block");
            let basis = space.basis().to_vec();
            let algebra = StructureAlgebra::from_fn(d, local_unit, |a, b| {
                let prod = self.mul_vec(&basis[a], &basis[b]);
                space
                    .coordinates(&prod)
                    .expect("eigenspaces of a central element are ideals")
            })?;
            blocks.push(Block {
                eigenvalue: comp.eigenvalue,
                algebra,
                space,
                idempotent: AlgebraElement::from_coords(idempotent),
            });
            offset += d;
        }
        Ok(blocks)
    }

    /// The same algebra in the basis `f_j = Σ_i P_ij e_i`, where `P` is
    /// invertible. Returns the transported algebra.
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureAlgebra, AlgebraError> {
        let p_inv = p.inverse().ok_or(AlgebraError::SingularBasis)?;
        let cols: Vec<AlgebraElement> = (0..self.dim)
            .map(|j| AlgebraElement::from_coords(p.column(j)))
            .collect();
        let unit = p_inv.mul_vec(&self.unit)?;
        Self::from_fn(self.dim, unit, |i, j| {
            p_inv
                .mul_vec(self.mul(&cols[i], &cols[j]).coords())
                .expect("square matrix")
        })
    }

    /// Tensor product algebra; `e_i ⊗ e_j` has index `i·other.dim + j`.
    pub fn tensor(&self, other: &StructureAlgebra) -> Result<StructureAlgebra, AlgebraError> {
        let (n, m) = (self.dim, other.dim);
        let mut products = Vec::with_capacity(n * m * n * m);
        for a in 0..n * m {
            let (i, j) = (a / m, a % m);
            for b in 0..n * m {
                let (k, l) = (b / m, b % m);
                let mut out = SparseVec::new();
                for (s, c) in self.basis_product(i, k) {
                    for (t, d) in other.basis_product(j, l) {
                        out.push((s * m + t, c * d));
                    }
                }
                out.sort_by_key(|(idx, _)| *idx);
                products.push(out);
            }
        }
        let mut unit = zero_vector(n * m);
        for (i, c) in self.unit.iter().enumerate() {
            for (j, d) in other.unit.iter().enumerate() {
                if !c.is_zero() && !d.is_zero() {
                    unit[i * m + j] = c * d;
                }
            }
        }
        Self::from_sparse(n * m, products, unit)
    }

    /// Evaluates each relation and checks that the assigned elements
    /// generate the whole algebra.
    pub fn check_presentation(
        &self,
        assignment: &BTreeMap<String, AlgebraElement>,
        relations: &[Relation],
    ) -> CheckReport {
        let mut report = ReportBuilder::new("presentation");
        let mut inverted = Vec::new();
        for r in relations {
            r.lhs.inverted_generators(&mut inverted);
            r.rhs.inverted_generators(&mut inverted);
        }
        for name in &inverted {
            match assignment.get(name) {
                None => report.precondition_failed(format!("inverse:{name}"), "unassigned generator"),
                Some(a) if self.inverse(a).is_none() => {
                    report.precondition_failed(format!("inverse:{name}"), "not invertible")
                }
                Some(_) => {}
            }
        }
        if report.is_failing() {
            return report.finish();
        }
        for r in relations {
            match r.residual().evaluate(self, assignment) {
                Ok(res) => {
                    let nonzero = res.coords().iter().filter(|c| !c.is_zero()).count();
                    report.expect(
                        &r.name,
                        nonzero == 0,
                        serde_json::json!({ "relation": r.to_string(), "residual_support": nonzero }),
                    );
                }
                Err(e) => report.precondition_failed(&r.name, e.to_string()),
            }
        }
        let gens: Vec<AlgebraElement> = assignment.values().cloned().collect();
        let generated = self.subalgebra_generated(&gens).dim();
        report.expect(
            "generates",
            generated == self.dim,
            serde_json::json!({ "generated_dim": generated, "dim": self.dim }),
        );
        report.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Expr;

    fn int(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    /// 2x2 matrices on the basis E11, E12, E21, E22.
    pub(crate) fn matrix_algebra() -> StructureAlgebra {
        StructureAlgebra::from_fn(4, vec![int(1), int(0), int(0), int(1)], |a, b| {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            let mut v = zero_vector(4);
            if j == k {
                v[i * 2 + l] = int(1);
            }
            v
        })
        .unwrap()
    }

    fn cyclic_group_algebra(n: usize) -> StructureAlgebra {
        StructureAlgebra::from_fn(n, unit_vector(n, 0), |i, j| unit_vector(n, (i + j) % n)).unwrap()
    }

    /// k[x]/(x^3), a local algebra with a nonzero radical.
    fn truncated_polynomials() -> StructureAlgebra {
        StructureAlgebra::from_fn(3, unit_vector(3, 0), |i, j| {
            if i + j < 3 {
                unit_vector(3, i + j)
            } else {
                zero_vector(3)
            }
        })
        .unwrap()
    }

    #[test]
    fn unit_law_and_products() {
        let a = matrix_algebra();
        let b = a.basis_element(1);
        assert_eq!(a.mul(&a.one(), &b), b);
        assert!(a.try_mul(&b, &AlgebraElement::from_coords(vec![int(1)])).is_err());
    }

    #[test]
    fn rejects_nonassociative_table() {
        // (e1 e1) e1 = e2 e1 = e1 but e1 (e1 e1) = e1 e2 = 0
        let res = StructureAlgebra::from_fn(3, unit_vector(3, 0), |i, j| match (i, j) {
            (0, k) | (k, 0) => unit_vector(3, k),
            (1, 1) => unit_vector(3, 2),
            (2, 1) => unit_vector(3, 1),
            _ => zero_vector(3),
        });
        assert!(matches!(res, Err(AlgebraError::NotAssociative { .. })));
        let res = StructureAlgebra::from_fn(2, unit_vector(2, 1), |_, _| unit_vector(2, 0));
        assert!(matches!(res, Err(AlgebraError::UnitLaw { .. })));
    }

    #[test]
    fn centers() {
        assert_eq!(matrix_algebra().center().dim(), 1);
        assert_eq!(cyclic_group_algebra(3).center().dim(), 3);
        assert!(matrix_algebra().center().contains(matrix_algebra().unit_coords()));
    }

    #[test]
    fn radicals() {
        assert_eq!(cyclic_group_algebra(2).radical().dim(), 0);
        assert_eq!(matrix_algebra().radical().dim(), 0);
        let t = truncated_polynomials();
        let rad = t.radical();
        assert_eq!(rad.dim(), 2);
        assert!(rad.contains(t.basis_element(1).coords()));
    }

    #[test]
    fn quotients() {
        let a = truncated_polynomials();
        let q = a.quotient(&[a.zero()]).unwrap();
        assert_eq!(q.algebra, a);
        assert!(q.projection.is_identity());
        let q = a.quotient(&[a.one()]).unwrap();
        assert!(q.is_zero());
        let x2 = a.basis_element(2);
        let q = a.quotient(&[x2]).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(q.complement, vec![0, 1]);
        // projection is an algebra map on every basis pair
        for i in 0..3 {
            for j in 0..3 {
                let (ei, ej) = (a.basis_element(i), a.basis_element(j));
                assert_eq!(
                    q.project(&a.mul(&ei, &ej)),
                    q.algebra.mul(&q.project(&ei), &q.project(&ej))
                );
            }
        }
    }

    #[test]
    fn generated_subalgebras() {
        let a = matrix_algebra();
        assert_eq!(a.subalgebra_generated(&[]).dim(), 1);
        let all: Vec<_> = (0..4).map(|i| a.basis_element(i)).collect();
        assert_eq!(a.subalgebra_generated(&all).dim(), 4);
        assert_eq!(a.subalgebra_generated(&[a.basis_element(1)]).dim(), 2);
    }

    #[test]
    fn eigensplit_of_group_algebra() {
        let a = cyclic_group_algebra(2);
        let g = a.basis_element(1);
        let blocks = a.central_eigensplit(&g, &[int(1), int(-1)]).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.algebra.dim() == 1));
        let prod = a.mul(&blocks[0].idempotent, &blocks[1].idempotent);
        assert!(prod.is_zero());
        let whole = a.central_eigensplit(&a.one(), &[int(1)]).unwrap();
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].algebra, a);
        let m = matrix_algebra();
        assert_eq!(
            m.central_eigensplit(&m.basis_element(0), &[int(1), int(0)])
                .unwrap_err(),
            AlgebraError::NotCentral
        );
    }

    #[test]
    fn group_presentation() {
        let a = cyclic_group_algebra(2);
        let assignment = BTreeMap::from([("g".to_string(), a.basis_element(1))]);
        let rel = Relation::new("g^2 = 1", Expr::gen("g").pow(2), Expr::one());
        assert!(a.check_presentation(&assignment, &[rel]).passed());
        let t = truncated_polynomials();
        let assignment = BTreeMap::from([("x".to_string(), t.basis_element(1))]);
        let rel = Relation::new("x x^-1 = 1", Expr::gen("x") * Expr::inv("x"), Expr::one());
        let report = t.check_presentation(&assignment, &[rel]);
        assert_eq!(report.status, crate::report::Status::PreconditionFailed);
    }
}
