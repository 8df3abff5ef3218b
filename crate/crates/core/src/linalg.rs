//! Dense exact linear algebra over cyclotomic fields.
//!
//! Elimination always pivots on the first nonzero entry in column order, and
//! subspaces are stored as reduced row echelon bases, so every reported basis
//! is deterministic.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

pub type Vector = Vec<Cyclotomic>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Cyclotomic::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Cyclotomic::one();
    v
}

pub fn is_zero_vector(v: &[Cyclotomic]) -> bool {
    v.iter().all(Cyclotomic::is_zero)
}

/// `acc += c * v`, skipping zero entries of `v`.
pub fn axpy(acc: &mut [Cyclotomic], c: &Cyclotomic, v: &[Cyclotomic]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

fn common_order<'a>(entries: impl Iterator<Item = &'a Cyclotomic>) -> u32 {
    entries.fold(1u32, |l, e| {
        let o = e.order();
        l / num_integer::gcd(l, o) * o
    })
}

fn coerce(entries: &mut [Cyclotomic]) {
    let order = common_order(entries.iter());
    for e in entries.iter_mut() {
        if e.order() != order {
            *e = e.lift(order);
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        coerce(&mut data);
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "row {bad} has length {} but row 0 has length {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        let mut data: Vec<Cyclotomic> = rows.into_iter().flatten().collect();
        coerce(&mut data);
        Ok(Matrix { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self, LinalgError> {
        if let Some(bad) = columns.iter().position(|c| c.len() != rows) {
            return Err(LinalgError::DimensionMismatch(format!(
                "column {bad} has length {} (expected {rows})",
                columns[bad].len()
            )));
        }
        Ok(Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Cyclotomic) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }

    fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                axpy(acc, self.get(i, k), rhs.row(k));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Result<Vector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Cyclotomic::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Matrix, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self - λ·I`.
    pub fn shift(&self, lambda: &Cyclotomic) -> Result<Matrix, LinalgError> {
        self.require_square()?;
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        Ok(m)
    }

    pub fn pow(&self, e: u32) -> Result<Matrix, LinalgError> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix]) -> Result<Matrix, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(LinalgError::DimensionMismatch(
                "vstack blocks differ in column count".into(),
            ));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Kronecker product; index `(i, j)` of the result's rows is `i·rhs.rows + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self.get(i, j) * rhs.get(k, l)
        })
    }

    pub fn rref(&self) -> Echelon {
        let mut rows: Vec<Vector> = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inverse().expect("pivot is nonzero");
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = -&row[c];
                axpy(row, &factor, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: Matrix::from_rows_unchecked(self.rows, self.cols, rows),
            pivots,
        }
    }

    fn from_rows_unchecked(rows: usize, cols: usize, data: Vec<Vector>) -> Matrix {
        Matrix {
            rows,
            cols,
            data: data.into_iter().flatten().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        });
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| ech.matrix.get(i, n + j).clone()))
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// A subspace of `k^n`, stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_vectors<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[Cyclotomic]>,
    {
        let mut s = Subspace::zero(ambient_dim);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the basis pivots.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = -&r[p];
            axpy(&mut r, &factor, row);
        }
        r
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Cyclotomic]) -> bool {
        let mut r = self.reduce(v);
        let Some(q) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[q].inverse().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if !row[q].is_zero() {
                let factor = -&row[q];
                axpy(row, &factor, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.basis.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b);
        }
        s
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient_dim, self.dim(), |i, j| self.basis[j][i].clone())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient_dim", &self.ambient_dim)
            .field("basis", &self.basis)
            .finish()
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

/// Null space of `m`. Rank–nullity is asserted on every call.
pub fn kernel(m: &Matrix) -> Subspace {
    let ech = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(n);
            v[f] = Cyclotomic::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                let e = ech.matrix.get(r, f);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            v
        })
        .collect();
    let space = Subspace::from_vectors(n, &vectors);
    assert_eq!(
        space.dim() + ech.pivots.len(),
        n,
        "rank-nullity violated in kernel computation"
    );
    space
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Cyclotomic]) -> Result<Option<Vector>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            m.rows(),
            m.cols(),
            b.len()
        )));
    }
    let n = m.cols();
    let aug = Matrix::from_fn(
        m.rows(),
        n + 1,
        |i, j| {
            if j < n {
                m.get(i, j).clone()
            } else {
                b[i].clone()
            }
        },
    );
    let ech = aug.rref();
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vector(n);
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.matrix.get(r, n).clone();
    }
    Ok(Some(x))
}

/// Monic minimal polynomial (lowest degree first), from the first linear
/// dependence among `I, M, M², …`.
pub fn minimal_polynomial(m: &Matrix) -> Result<Vec<Cyclotomic>, LinalgError> {
    m.require_square()?;
    let n = m.rows();
    // rows of (reduced flattened power, combination of powers producing it)
    let mut reduced: Vec<(usize, Vector, Vector)> = Vec::new();
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        let mut w = power.data.clone();
        let mut combo = zero_vector(k + 1);
        combo[k] = Cyclotomic::one();
        for (pivot, vec, c) in &reduced {
            if w[*pivot].is_zero() {
                continue;
            }
            let factor = -&w[*pivot];
            axpy(&mut w, &factor, vec);
            axpy(&mut combo[..c.len()], &factor, c);
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return Ok(combo),
            Some(p) => {
                let inv = w[p].inverse().expect("nonzero");
                let w: Vector = w.iter().map(|x| x * &inv).collect();
                let combo: Vector = combo.iter().map(|x| x * &inv).collect();
                reduced.push((p, w, combo));
            }
        }
        power = power.mul(m)?;
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// Diagonalizable over the algebraic closure iff the minimal polynomial is
/// squarefree.
pub fn is_diagonalizable(m: &Matrix) -> Result<bool, LinalgError> {
    Ok(poly::is_squarefree(&minimal_polynomial(m)?))
}

#[derive(Clone, Debug)]
pub struct Eigencomponent {
    pub eigenvalue: Cyclotomic,
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct EigenSplit {
    pub components: Vec<Eigencomponent>,
    /// True iff the eigenspace dimensions add up to the ambient dimension.
    pub complete: bool,
}

impl EigenSplit {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.space.dim()).collect()
    }
}

/// Eigenspaces `ker(M - λI)` for each distinct candidate `λ` with a nonzero
/// kernel.
pub fn eigensplit(m: &Matrix, candidates: &[Cyclotomic]) -> Result<EigenSplit, LinalgError> {
    m.require_square()?;
    let mut seen: Vec<&Cyclotomic> = Vec::new();
    let mut components = Vec::new();
    for lambda in candidates {
        if seen.contains(&lambda) {
            continue;
        }
        seen.push(lambda);
        let space = kernel(&m.shift(lambda)?);
        if !space.is_zero() {
            components.push(Eigencomponent {
                eigenvalue: lambda.clone(),
                space,
            });
        }
    }
    let total: usize = components.iter().map(|c| c.space.dim()).sum();
    Ok(EigenSplit {
        complete: total == m.rows(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(kernel(&Matrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(2, 2)).dim(), 2);
        assert_eq!(kernel(&Matrix::zeros(0, 0)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(0, 3)).dim(), 3);
        let k = kernel(&mat(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            assert!(is_zero_vector(&mat(&[&[1, 2, 3]]).mul_vec(b).unwrap()));
        }
    }

    #[test]
    fn solve_cases() {
        let b = vec![int(3), int(-1)];
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&Matrix::zeros(2, 2), &b).unwrap(), None);
        assert!(solve(&Matrix::zeros(3, 2), &b).is_err());
        let m = mat(&[&[1, 1], &[2, 2]]);
        let rhs = m.mul_vec(&[int(5), int(7)]).unwrap();
        let x = solve(&m, &rhs).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), rhs);
    }

    #[test]
    fn minimal_polynomials() {
        let t = |c: &[i64]| c.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(minimal_polynomial(&Matrix::zeros(3, 3)).unwrap(), t(&[0, 1]));
        assert_eq!(minimal_polynomial(&Matrix::identity(3)).unwrap(), t(&[-1, 1]));
        let jordan = mat(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&jordan).unwrap(), t(&[0, 0, 1]));
        assert_eq!(minimal_polynomial(&Matrix::zeros(0, 0)).unwrap(), t(&[1]));
        assert!(!is_diagonalizable(&jordan).unwrap());
        assert!(is_diagonalizable(&Matrix::identity(4)).unwrap());
    }

    #[test]
    fn eigensplits() {
        let w = Cyclotomic::root_of_unity(3, 1);
        let d = Matrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) | (1, 1) => Cyclotomic::one(),
            (2, 2) => w.clone(),
            _ => Cyclotomic::zero(),
        });
        let split = eigensplit(&d, &[Cyclotomic::one(), w.clone()]).unwrap();
        assert_eq!(split.dims(), vec![2, 1]);
        assert!(split.complete);
        let jordan = mat(&[&[0, 1], &[0, 0]]);
        let split = eigensplit(&jordan, &[int(0)]).unwrap();
        assert_eq!(split.dims(), vec![1]);
        assert!(!split.complete);
    }

    #[test]
    fn inverse_and_subspace_coordinates() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(mat(&[&[1, 1], &[1, 1]]).inverse().is_none());
        let s = Subspace::from_vectors(3, [vec![int(1), int(2), int(0)], vec![int(0), int(1), int(1)]]);
        let v = vec![int(2), int(5), int(1)];
        let c = s.coordinates(&v).unwrap();
        let mut back = zero_vector(3);
        for (ci, b) in c.iter().zip(s.basis()) {
            axpy(&mut back, ci, b);
        }
        assert_eq!(back, v);
        assert!(s.coordinates(&[int(0), int(0), int(1)]).is_none());
    }
}
