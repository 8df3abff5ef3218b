//! Finite-dimensional Hopf algebras on top of [`StructureAlgebra`].
//!
//! Tensors follow one convention throughout: `e_a ⊗ e_b` in `H ⊗ H` has flat
//! index `a·n + b`, and `e_a ⊗ e_b ⊗ e_c` in `H^{⊗3}` has `(a·n + b)·n + c`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde_json::json;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, SparseVec, StructureAlgebra};
use crate::cyclotomic::{q_factorial, Cyclotomic};
use crate::linalg::{unit_vector, zero_vector, Matrix, Vector};
use crate::report::{CheckReport, ReportBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("Hopf axiom fails: {}", .0.join(", "))]
    Axiom(Vec<String>),
    #[error("{0}")]
    Shape(String),
    #[error("root of unity has order {found:?}, expected {expected}")]
    RootOrder { expected: u64, found: Option<u64> },
}

/// A term `c · e_a ⊗ e_b` of a coproduct.
pub type Leg2 = (usize, usize, Cyclotomic);
/// A term `c · e_a ⊗ e_b ⊗ e_c` of an iterated coproduct.
pub type Leg3 = (usize, usize, usize, Cyclotomic);

fn collect_sparse<K: Ord>(map: BTreeMap<K, Cyclotomic>) -> Vec<(K, Cyclotomic)> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn sparse_of(v: &[Cyclotomic]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Product in `A ⊗ A` of two sparse tensors.
pub fn tensor_square_mul(a: &StructureAlgebra, x: &[(usize, Cyclotomic)], y: &[(usize, Cyclotomic)]) -> SparseVec {
    let n = a.dim();
    let mut acc: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
    for (ix, cx) in x {
        let (p, q) = (ix / n, ix % n);
        for (iy, cy) in y {
            let (r, s) = (iy / n, iy % n);
            let c = cx * cy;
            for (u, cu) in a.basis_product(p, r) {
                let cu = &c * cu;
                for (v, cv) in a.basis_product(q, s) {
                    *acc.entry(u * n + v).or_default() += &(&cu * cv);
                }
            }
        }
    }
    collect_sparse(acc)
}

#[derive(Clone)]
pub struct HopfData {
    algebra: StructureAlgebra,
    comult: Vec<SparseVec>,
    counit: Vector,
    antipode: Matrix,
    legs3: OnceLock<Vec<Vec<Leg3>>>,
    antipode_inverse: OnceLock<Option<Matrix>>,
}

impl std::fmt::Debug for HopfData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfData")
            .field("dim", &self.dim())
            .finish_non_exhaustive()
    }
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl HopfData {
    /// Assembles the data without checking any axiom.
    ///
    /// `comult[k]` is `Δ(e_k)` in flat tensor coordinates, `antipode` has
    /// `S(e_k)` as its k-th column.
    pub fn from_parts(
        algebra: StructureAlgebra,
        comult: Vec<SparseVec>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let n = algebra.dim();
        if comult.len() != n || counit.len() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape(format!(
                "dim {n} needs {n} coproducts, a counit of length {n} and an {n}x{n} antipode"
            )));
        }
        if comult.iter().flatten().any(|(k, _)| *k >= n * n) {
            return Err(HopfError::Shape("coproduct index out of range".into()));
        }
        let mut comult = comult;
        for d in &mut comult {
            d.sort_by_key(|(k, _)| *k);
            d.retain(|(_, c)| !c.is_zero());
        }
        Ok(HopfData {
            algebra,
            comult,
            counit,
            antipode,
            legs3: OnceLock::new(),
            antipode_inverse: OnceLock::new(),
        })
    }

    /// Assembles and verifies every Hopf axiom.
    pub fn new(
        algebra: StructureAlgebra,
        comult: Vec<SparseVec>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let h = Self::from_parts(algebra, comult, counit, antipode)?;
        let report = h.check_hopf_axioms();
        if !report.passed() {
            return Err(HopfError::Axiom(
                report.failures().into_iter().map(String::from).collect(),
            ));
        }
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn comult(&self, k: usize) -> &SparseVec {
        &self.comult[k]
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for (k, d) in self.comult.iter().enumerate() {
            for (ab, c) in d {
                m.set(*ab, k, c.clone());
            }
        }
        m
    }

    pub fn counit(&self) -> &[Cyclotomic] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inverse.get_or_init(|| self.antipode.inverse()).as_ref()
    }

    /// `Δ(e_k)` as Sweedler terms `h¹ ⊗ h²`.
    pub fn legs2(&self, k: usize) -> impl Iterator<Item = Leg2> + '_ {
        let n = self.dim();
        self.comult[k].iter().map(move |(ab, c)| (ab / n, ab % n, c.clone()))
    }

    /// `(Δ ⊗ id)Δ(e_k)` as terms `h¹ ⊗ h² ⊗ h³`.
    pub fn legs3(&self, k: usize) -> &[Leg3] {
        &self.legs3.get_or_init(|| {
            (0..self.dim())
                .map(|k| {
                    let mut acc: BTreeMap<(usize, usize, usize), Cyclotomic> = BTreeMap::new();
                    for (a, b, c) in self.legs2(k) {
                        for (u, v, d) in self.legs2(a) {
                            *acc.entry((u, v, b)).or_default() += &(&c * &d);
                        }
                    }
                    collect_sparse(acc)
                        .into_iter()
                        .map(|((u, v, w), c)| (u, v, w, c))
                        .collect()
                })
                .collect()
        })[k]
    }

    pub fn apply_antipode(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_coords(self.antipode.mul_vec(a.coords()).expect("dimension"))
    }

    pub fn counit_of(&self, a: &AlgebraElement) -> Cyclotomic {
        a.coords().iter().zip(&self.counit).map(|(x, e)| x * e).sum()
    }

    /// `Δ(a)` in flat tensor coordinates.
    pub fn comult_of(&self, a: &AlgebraElement) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n * n);
        for (k, x) in a.coords().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (ab, c) in &self.comult[k] {
                out[*ab] += &(x * c);
            }
        }
        out
    }

    /// Checks coassociativity, counit, bialgebra and antipode axioms on
    /// every basis element and pair.
    pub fn check_hopf_axioms(&self) -> CheckReport {
        let n = self.dim();
        let alg = &self.algebra;
        let mut report = ReportBuilder::new("hopf-axioms");
        report.note("dim", n);

        let mut bad = None;
        for k in 0..n {
            let mut left: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
            let mut right: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
            for (a, b, c) in self.legs2(k) {
                for (u, v, d) in self.legs2(a) {
                    *left.entry((u * n + v) * n + b).or_default() += &(&c * &d);
                }
                for (u, v, d) in self.legs2(b) {
                    *right.entry((a * n + u) * n + v).or_default() += &(&c * &d);
                }
            }
            if collect_sparse(left) != collect_sparse(right) {
                bad = Some(k);
                break;
            }
        }
        report.expect("coassociativity", bad.is_none(), json!({ "basis": bad }));

        let mut bad = None;
        for k in 0..n {
            let mut left = zero_vector(n);
            let mut right = zero_vector(n);
            for (a, b, c) in self.legs2(k) {
                left[b] += &(&c * &self.counit[a]);
                right[a] += &(&c * &self.counit[b]);
            }
            let e = unit_vector(n, k);
            if left != e || right != e {
                bad = Some(k);
                break;
            }
        }
        report.expect("counit", bad.is_none(), json!({ "basis": bad }));

        let unit = sparse_of(alg.unit_coords());
        let mut one_one: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (a, c) in &unit {
            for (b, d) in &unit {
                *one_one.entry(a * n + b).or_default() += &(c * d);
            }
        }
        let mut delta_one: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (k, c) in &unit {
            for (ab, d) in &self.comult[*k] {
                *delta_one.entry(*ab).or_default() += &(c * d);
            }
        }
        let mut bad = None;
        if collect_sparse(delta_one) != collect_sparse(one_one) {
            bad = Some(json!("unit"));
        }
        'outer: for i in 0..n {
            for j in 0..n {
                let mut lhs: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
                for (k, c) in alg.basis_product(i, j) {
                    for (ab, d) in &self.comult[*k] {
                        *lhs.entry(*ab).or_default() += &(c * d);
                    }
                }
                let rhs = tensor_square_mul(alg, &self.comult[i], &self.comult[j]);
                if bad.is_none() && collect_sparse(lhs) != rhs {
                    bad = Some(json!([i, j]));
                    break 'outer;
                }
            }
        }
        report.expect(
            "comultiplication-multiplicative",
            bad.is_none(),
            json!({ "witness": bad }),
        );

        let eps_unit: Cyclotomic = unit.iter().map(|(k, c)| c * &self.counit[*k]).sum();
        let mut bad = (!eps_unit.is_one()).then(|| json!("unit"));
        'outer2: for i in 0..n {
            for j in 0..n {
                let lhs: Cyclotomic = alg.basis_product(i, j).iter().map(|(k, c)| c * &self.counit[*k]).sum();
                if bad.is_none() && lhs != &self.counit[i] * &self.counit[j] {
                    bad = Some(json!([i, j]));
                    break 'outer2;
                }
            }
        }
        report.expect("counit-multiplicative", bad.is_none(), json!({ "witness": bad }));

        let mut bad = None;
        for k in 0..n {
            let mut left = zero_vector(n);
            let mut right = zero_vector(n);
            for (a, b, c) in self.legs2(k) {
                let sa = self.antipode.column(a);
                let sb = self.antipode.column(b);
                let eb = unit_vector(n, b);
                let ea = unit_vector(n, a);
                let l = alg.mul(&AlgebraElement::from_coords(sa), &AlgebraElement::from_coords(eb));
                let r = alg.mul(&AlgebraElement::from_coords(ea), &AlgebraElement::from_coords(sb));
                crate::linalg::axpy(&mut left, &c, l.coords());
                crate::linalg::axpy(&mut right, &c, r.coords());
            }
            let target: Vector = alg.unit_coords().iter().map(|u| u * &self.counit[k]).collect();
            if left != target || right != target {
                bad = Some(k);
                break;
            }
        }
        report.expect("antipode", bad.is_none(), json!({ "basis": bad }));
        report.finish()
    }

    /// `Δ(u) = u ⊗ u` and `ε(u) = 1`.
    pub fn is_group_like(&self, u: &AlgebraElement) -> bool {
        let n = self.dim();
        if u.dim() != n {
            return false;
        }
        let mut uu = zero_vector(n * n);
        for (a, x) in u.coords().iter().enumerate() {
            for (b, y) in u.coords().iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    uu[a * n + b] = x * y;
                }
            }
        }
        self.comult_of(u) == uu && self.counit_of(u).is_one()
    }

    /// `u` group-like with `S²(e_i) = u e_i u⁻¹` on every basis element.
    pub fn check_pivotal(&self, u: &AlgebraElement) -> CheckReport {
        let mut report = ReportBuilder::new("pivotal");
        let alg = &self.algebra;
        let Some(u_inv) = alg.inverse(u) else {
            report.precondition_failed("invertible", "u has no two-sided inverse");
            return report.finish();
        };
        report.expect("group-like", self.is_group_like(u), ());
        let s2 = self.antipode.mul(&self.antipode).expect("square");
        let bad = (0..self.dim()).find(|&i| {
            let e = alg.basis_element(i);
            AlgebraElement::from_coords(s2.column(i)) != alg.product(&[u, &e, &u_inv])
        });
        report.expect("S^2 = conjugation by u", bad.is_none(), json!({ "basis": bad }));
        report.finish()
    }

    /// The dual Hopf algebra on the dual basis `e^k`, with convolution
    /// `(χψ)(h) = χ(h¹)ψ(h²)`.
    pub fn dual(&self) -> Result<HopfData, HopfError> {
        let n = self.dim();
        let mut products = vec![SparseVec::new(); n * n];
        for (k, d) in self.comult.iter().enumerate() {
            for (ab, c) in d {
                products[*ab].push((k, c.clone()));
            }
        }
        let algebra = StructureAlgebra::from_sparse(n, products, self.counit.clone())?;
        let comult = (0..n)
            .map(|k| {
                let mut d = SparseVec::new();
                for i in 0..n {
                    for j in 0..n {
                        for (t, c) in self.algebra.basis_product(i, j) {
                            if *t == k {
                                d.push((i * n + j, c.clone()));
                            }
                        }
                    }
                }
                d
            })
            .collect();
        HopfData::new(
            algebra,
            comult,
            self.algebra.unit_coords().to_vec(),
            self.antipode.transpose(),
        )
    }

    /// Checks that the matrix `f` (columns are images of basis vectors) is a
    /// Hopf algebra map `self → target`.
    pub fn check_hopf_map(&self, target: &HopfData, f: &Matrix) -> CheckReport {
        let mut report = ReportBuilder::new("hopf-map");
        let (n, m) = (self.dim(), target.dim());
        if f.rows() != m || f.cols() != n {
            report.precondition_failed("shape", json!({ "rows": f.rows(), "cols": f.cols() }));
            return report.finish();
        }
        let img = |v: &[Cyclotomic]| AlgebraElement::from_coords(f.mul_vec(v).expect("dimension"));
        let cols: Vec<AlgebraElement> = (0..n).map(|i| AlgebraElement::from_coords(f.column(i))).collect();

        report.expect("unit", img(self.algebra.unit_coords()) == target.algebra.one(), ());
        let mut bad = None;
        'mul: for i in 0..n {
            for j in 0..n {
                let lhs = img(self
                    .algebra
                    .mul(&self.algebra.basis_element(i), &self.algebra.basis_element(j))
                    .coords());
                if lhs != target.algebra.mul(&cols[i], &cols[j]) {
                    bad = Some([i, j]);
                    break 'mul;
                }
            }
        }
        report.expect("multiplication", bad.is_none(), json!({ "pair": bad }));

        let bad = (0..n).find(|&k| {
            let mut lhs = zero_vector(m * m);
            for (a, b, c) in self.legs2(k) {
                for (u, x) in cols[a].coords().iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (v, y) in cols[b].coords().iter().enumerate() {
                        if !y.is_zero() {
                            lhs[u * m + v] += &(&c * &(x * y));
                        }
                    }
                }
            }
            lhs != target.comult_of(&cols[k])
        });
        report.expect("comultiplication", bad.is_none(), json!({ "basis": bad }));
        let bad = (0..n).find(|&k| target.counit_of(&cols[k]) != self.counit[k]);
        report.expect("counit", bad.is_none(), json!({ "basis": bad }));
        let bad = (0..n).find(|&k| target.apply_antipode(&cols[k]) != img(&self.antipode.column(k)));
        report.expect("antipode", bad.is_none(), json!({ "basis": bad }));
        report.finish()
    }

    /// The same algebra with the flipped coproduct `Δ^op` and antipode `S⁻¹`.
    pub fn co_opposite(&self) -> Result<HopfData, HopfError> {
        let n = self.dim();
        let comult = self
            .comult
            .iter()
            .map(|d| d.iter().map(|(ab, c)| ((ab % n) * n + ab / n, c.clone())).collect())
            .collect();
        let s_inv = self
            .antipode_inverse()
            .cloned()
            .ok_or_else(|| HopfError::Shape("antipode is not invertible".into()))?;
        HopfData::new(self.algebra.clone(), comult, self.counit.clone(), s_inv)
    }

    /// The Taft algebra `T_p(ξ)` on the basis `g^i x^j`, index `i·p + j`.
    pub fn taft(p: usize, xi: &Cyclotomic) -> Result<HopfData, HopfError> {
        let order = xi.multiplicative_order(p as u64);
        if p < 2 || order != Some(p as u64) {
            return Err(HopfError::RootOrder {
                expected: p as u64,
                found: order,
            });
        }
        let n = p * p;
        let idx = |i: usize, j: usize| (i % p) * p + j;
        let xi_pow = |e: i64| xi.pow(e.rem_euclid(p as i64)).expect("root of unity");
        let mut products = Vec::with_capacity(n * n);
        for a in 0..n {
            let (i, j) = (a / p, a % p);
            for b in 0..n {
                let (k, l) = (b / p, b % p);
                // x^j g^k = ξ^{-jk} g^k x^j
                products.push(if j + l < p {
                    vec![(idx(i + k, j + l), xi_pow(-((j * k) as i64)))]
                } else {
                    Vec::new()
                });
            }
        }
        let algebra = StructureAlgebra::from_sparse(n, products, unit_vector(n, 0))?;

        let (one, g, x) = (idx(0, 0), idx(1, 0), idx(0, 1));
        let c1 = Cyclotomic::one();
        let delta_g = vec![(g * n + g, c1.clone())];
        let mut delta_x = vec![(x * n + one, c1.clone()), (g * n + x, c1.clone())];
        delta_x.sort_by_key(|(k, _)| *k);
        let mut comult = Vec::with_capacity(n);
        for a in 0..n {
            let (i, j) = (a / p, a % p);
            let mut d = vec![(one * n + one, c1.clone())];
            for _ in 0..i {
                d = tensor_square_mul(&algebra, &d, &delta_g);
            }
            for _ in 0..j {
                d = tensor_square_mul(&algebra, &d, &delta_x);
            }
            comult.push(d);
        }
        let counit: Vector = (0..n)
            .map(|a| {
                if a % p == 0 {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                }
            })
            .collect();

        let s_g = algebra.basis_element(idx(p - 1, 0));
        let s_x = algebra
            .mul(&s_g, &algebra.basis_element(x))
            .scale(&Cyclotomic::from_integer(-1));
        let columns: Vec<Vector> = (0..n)
            .map(|a| {
                let (i, j) = (a / p, a % p);
                let s = algebra.mul(&algebra.pow(&s_x, j as u32), &algebra.pow(&s_g, i as u32));
                s.into_coords()
            })
            .collect();
        let antipode = Matrix::from_columns(n, &columns).map_err(AlgebraError::from)?;
        HopfData::new(algebra, comult, counit, antipode)
    }

    /// The group algebra of `Z/n` on the basis `g^i`.
    pub fn group_algebra(n: usize) -> Result<HopfData, HopfError> {
        if n == 0 {
            return Err(HopfError::Shape("group order must be positive".into()));
        }
        let products = (0..n * n)
            .map(|ij| vec![((ij / n + ij % n) % n, Cyclotomic::one())])
            .collect();
        let algebra = StructureAlgebra::from_sparse(n, products, unit_vector(n, 0))?;
        let comult = (0..n).map(|i| vec![(i * n + i, Cyclotomic::one())]).collect();
        let counit = vec![Cyclotomic::one(); n];
        let columns: Vec<Vector> = (0..n).map(|i| unit_vector(n, (n - i) % n)).collect();
        let antipode = Matrix::from_columns(n, &columns).map_err(AlgebraError::from)?;
        HopfData::new(algebra, comult, counit, antipode)
    }
}

/// Which closed form to use for the map `T_p(ξ) → T_p(ξ)*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityFormula {
    /// `g^i x^j ↦ (j)_{ξ⁻¹}! Σ_l ξ^{i(j+l)} (g^l x^j)*` with inverse
    /// `(g^i x^j)* ↦ (p (j)_{ξ⁻¹}!)⁻¹ Σ_l ξ^{−l(i+j)} g^l x^j`.
    ///
    /// Mutually inverse algebra isomorphisms, but for p = 3 not coalgebra
    /// maps under any ordering of the dual structure.
    Displayed,
    /// `g^i x^j ↦ (j)_ξ! Σ_l ξ^{il+ij+lj} (g^l x^j)*` with inverse
    /// `(g^i x^j)* ↦ (p (j)_ξ!)⁻¹ Σ_l ξ^{−(il+ij+lj)} g^l x^j`.
    Corrected,
}

/// A candidate isomorphism `T_p(ξ) → T_p(ξ)*`, its candidate inverse and the
/// report checking both are Hopf maps and mutually inverse.
#[derive(Clone, Debug)]
pub struct SelfDuality {
    pub formula: DualityFormula,
    pub taft: HopfData,
    pub dual: HopfData,
    /// Columns are images of `g^i x^j` in dual-basis coordinates.
    pub forward: Matrix,
    /// Columns are images of `(g^i x^j)^*` in the monomial basis.
    pub inverse: Matrix,
    pub report: CheckReport,
}

pub fn taft_self_duality(p: usize, xi: &Cyclotomic, formula: DualityFormula) -> Result<SelfDuality, HopfError> {
    let taft = HopfData::taft(p, xi)?;
    let dual = taft.dual()?;
    let n = p * p;
    let xi_pow = |e: i64| xi.pow(e.rem_euclid(p as i64)).expect("root of unity");
    let base = match formula {
        DualityFormula::Displayed => xi.inverse().expect("root of unity"),
        DualityFormula::Corrected => xi.clone(),
    };
    let fact: Vec<Cyclotomic> = (0..p).map(|j| q_factorial(j as u32, &base)).collect();
    let p_scalar = Cyclotomic::from_integer(p as i64);

    let mut forward = Matrix::zeros(n, n);
    let mut inverse = Matrix::zeros(n, n);
    for i in 0..p as i64 {
        for j in 0..p as i64 {
            let col = (i * p as i64 + j) as usize;
            let f = &fact[j as usize];
            let inv_scale = (&p_scalar * f).inverse().expect("q-factorial below p is nonzero");
            for l in 0..p as i64 {
                let (fwd, bwd) = match formula {
                    DualityFormula::Displayed => (i * (j + l), -l * (i + j)),
                    DualityFormula::Corrected => (i * l + i * j + l * j, -(i * l + i * j + l * j)),
                };
                let row = (l * p as i64 + j) as usize;
                forward.set(row, col, f * &xi_pow(fwd));
                inverse.set(row, col, &inv_scale * &xi_pow(bwd));
            }
        }
    }

    let mut report = ReportBuilder::new("self-duality");
    report.note("formula", formula);
    let fi = forward.mul(&inverse).expect("square");
    let if_ = inverse.mul(&forward).expect("square");
    report.expect(
        "mutually-inverse",
        fi.is_identity() && if_.is_identity(),
        json!({ "forward_after_inverse": fi.is_identity(), "inverse_after_forward": if_.is_identity() }),
    );
    report.absorb("forward", &taft.check_hopf_map(&dual, &forward));
    report.absorb("inverse", &dual.check_hopf_map(&taft, &inverse));
    let g = AlgebraElement::from_coords(forward.column(p));
    report.expect("group-like-image", dual.is_group_like(&g), ());
    Ok(SelfDuality {
        formula,
        taft,
        dual,
        forward,
        inverse,
        report: report.finish(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn taft(p: usize) -> HopfData {
        HopfData::taft(p, &Cyclotomic::root_of_unity(p as u32, 1)).unwrap()
    }

    #[test]
    fn taft_relations() {
        let h = taft(3);
        let a = h.algebra();
        let xi = Cyclotomic::root_of_unity(3, 1);
        let (g, x) = (a.basis_element(3), a.basis_element(1));
        assert_eq!(a.mul(&g, &x), a.mul(&x, &g).scale(&xi));
        assert!(a.pow(&x, 3).is_zero());
        assert_eq!(a.pow(&g, 3), a.one());
        let h2 = taft(2);
        let x2 = h2.algebra().basis_element(1);
        assert!(h2.algebra().pow(&x2, 2).is_zero());
    }

    #[test]
    fn taft_antipode_square() {
        for p in [2usize, 3] {
            let h = taft(p);
            let xi = Cyclotomic::root_of_unity(p as u32, 1);
            let x = h.algebra().basis_element(1);
            let s2x = h.apply_antipode(&h.apply_antipode(&x));
            assert_eq!(s2x, x.scale(&xi.inverse().unwrap()));
            let order = if p == 2 { 4 } else { 2 * p as u32 };
            let s = h.antipode();
            assert!(s.pow(order).unwrap().is_identity());
            assert!((1..order).all(|k| !s.pow(k).unwrap().is_identity()));
        }
    }

    #[test]
    fn wrong_root_is_rejected() {
        assert!(matches!(
            HopfData::taft(3, &Cyclotomic::root_of_unity(6, 1)),
            Err(HopfError::RootOrder { .. })
        ));
    }

    #[test]
    fn group_algebras() {
        for n in 1..=3 {
            let h = HopfData::group_algebra(n).unwrap();
            assert!(h.antipode().pow(2).unwrap().is_identity());
        }
        let h3 = HopfData::group_algebra(3).unwrap();
        assert!(!h3.antipode().is_identity());
        assert!(HopfData::group_algebra(2).unwrap().antipode().is_identity());
    }

    #[test]
    fn broken_antipode_is_named() {
        let h = taft(2);
        let broken = HopfData::from_parts(
            h.algebra().clone(),
            (0..4).map(|k| h.comult(k).clone()).collect(),
            h.counit().to_vec(),
            Matrix::identity(4),
        )
        .unwrap();
        assert_eq!(broken.check_hopf_axioms().failures(), vec!["antipode"]);
    }

    #[test]
    fn double_dual_is_original() {
        for h in [taft(2), taft(3), HopfData::group_algebra(3).unwrap()] {
            assert_eq!(h.dual().unwrap().dual().unwrap(), h);
        }
        let d = HopfData::group_algebra(2).unwrap().dual().unwrap();
        assert_eq!(d.algebra().center().dim(), 2);
    }

    #[test]
    fn group_likes_and_pivotal() {
        let h = taft(3);
        let a = h.algebra();
        assert!(h.is_group_like(&a.one()));
        assert!(h.is_group_like(&a.basis_element(3)));
        assert!(!h.is_group_like(&a.basis_element(1)));
        let g_inv = a.basis_element(6);
        assert!(h.check_pivotal(&g_inv).passed());
        assert!(!h.check_pivotal(&a.basis_element(3)).passed());
        let h2 = taft(2);
        assert!(h2.check_pivotal(&h2.algebra().basis_element(2)).passed());
        let report = h.check_pivotal(&a.basis_element(1));
        assert_eq!(report.status, crate::report::Status::PreconditionFailed);
    }

    #[test]
    fn corrected_self_duality_is_hopf() {
        for p in [2usize, 3] {
            let xi = Cyclotomic::root_of_unity(p as u32, 1);
            let sd = taft_self_duality(p, &xi, DualityFormula::Corrected).unwrap();
            assert!(sd.report.passed(), "p={p} {:?}", sd.report.failures());
            assert_eq!(sd.forward.column(0), sd.taft.counit().to_vec());
        }
    }

    #[test]
    fn displayed_self_duality_is_only_an_algebra_map() {
        for p in [2usize, 3] {
            let xi = Cyclotomic::root_of_unity(p as u32, 1);
            let sd = taft_self_duality(p, &xi, DualityFormula::Displayed).unwrap();
            let failures = sd.report.failures();
            assert!(!failures.contains(&"mutually-inverse"));
            assert!(!failures.contains(&"forward/multiplication"));
            assert!(failures.contains(&"forward/comultiplication"));
            // for p = 2 it lands in the co-opposite dual instead
            let cop = sd.dual.co_opposite().unwrap();
            assert_eq!(sd.taft.check_hopf_map(&cop, &sd.forward).passed(), p == 2);
        }
    }
}
