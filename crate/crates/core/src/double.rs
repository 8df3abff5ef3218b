//! The twisted double `D̂(H) = End(H)` and the classical doubles `D(H)`,
//! `D_a(H)` on `H ⊗ H*`.
//!
//! `D̂(H)` uses the elementary maps `E_ab : e_b ↦ e_a` with index `a·n + b`,
//! so an endomorphism with matrix `M` has coordinates `M[a][b]`. The classical
//! doubles use `e_i ⊗ e^j` with index `i·n + j`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::{AlgebraElement, AssociativityPolicy, SparseVec, StructureAlgebra};
use crate::cyclotomic::Cyclotomic;
use crate::hopf::{HopfData, HopfError};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::report::{CheckReport, ReportBuilder};

fn collect(map: BTreeMap<usize, Cyclotomic>) -> SparseVec {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `e_a e_b` as a sparse vector in `H`.
fn prod(h: &HopfData, a: usize, b: usize) -> &SparseVec {
    h.algebra().basis_product(a, b)
}

fn mul_sparse(h: &HopfData, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut acc = BTreeMap::new();
    for (a, c) in x {
        for (b, d) in y {
            let cd = c * d;
            for (t, e) in prod(h, *a, *b) {
                *acc.entry(*t).or_insert_with(Cyclotomic::zero) += &(&cd * e);
            }
        }
    }
    collect(acc)
}

fn column_sparse(m: &Matrix, j: usize) -> SparseVec {
    (0..m.rows())
        .filter(|&i| !m.get(i, j).is_zero())
        .map(|i| (i, m.get(i, j).clone()))
        .collect()
}

#[derive(Clone, Debug)]
pub struct TwistedDouble {
    base: HopfData,
    algebra: StructureAlgebra,
    sigma: AlgebraElement,
    sigma_inverse: AlgebraElement,
}

impl TwistedDouble {
    /// Structure constants from `(f⋆g)(h) = f(h¹)² g(S(f(h¹)³) h² f(h¹)¹)`.
    pub fn build(base: &HopfData) -> Result<Self, HopfError> {
        Self::build_with_policy(base, &AssociativityPolicy::current())
    }

    pub fn build_with_policy(base: &HopfData, policy: &AssociativityPolicy) -> Result<Self, HopfError> {
        let n = base.dim();
        let nn = n * n;
        let s_inv = base
            .antipode_inverse()
            .cloned()
            .ok_or_else(|| HopfError::Shape("antipode is not invertible".into()))?;
        let s_cols: Vec<SparseVec> = (0..n).map(|w| column_sparse(base.antipode(), w)).collect();

        // y[w][m][u] = S(e_w) e_m e_u
        let mut y = vec![SparseVec::new(); n * n * n];
        for w in 0..n {
            for m in 0..n {
                let sm = mul_sparse(base, &s_cols[w], &vec![(m, Cyclotomic::one())]);
                for u in 0..n {
                    y[(w * n + m) * n + u] = mul_sparse(base, &sm, &vec![(u, Cyclotomic::one())]);
                }
            }
        }
        // q[a][c][d][m] = Σ_{Δ²(e_a)} [S(e_w) e_m e_u]_d e_v e_c
        let mut q = vec![SparseVec::new(); n * n * n * n];
        for a in 0..n {
            let legs = base.legs3(a);
            for c in 0..n {
                for d in 0..n {
                    for m in 0..n {
                        let mut acc = BTreeMap::new();
                        for (u, v, w, c2) in legs {
                            let Some((_, yd)) = y[(w * n + m) * n + u].iter().find(|(t, _)| *t == d) else {
                                continue;
                            };
                            let coeff = c2 * yd;
                            for (t, e) in prod(base, *v, c) {
                                *acc.entry(*t).or_insert_with(Cyclotomic::zero) += &(&coeff * e);
                            }
                        }
                        q[((a * n + c) * n + d) * n + m] = collect(acc);
                    }
                }
            }
        }
        // first_leg[b] = [(k, m, c)] with c·e_b ⊗ e_m a term of Δ(e_k)
        let mut first_leg: Vec<Vec<(usize, usize, Cyclotomic)>> = vec![Vec::new(); n];
        for k in 0..n {
            for (b, m, c) in base.legs2(k) {
                first_leg[b].push((k, m, c));
            }
        }
        let mut products = Vec::with_capacity(nn * nn);
        for ab in 0..nn {
            let (a, b) = (ab / n, ab % n);
            for cd in 0..nn {
                let (c, d) = (cd / n, cd % n);
                let mut acc = BTreeMap::new();
                for (k, m, c1) in &first_leg[b] {
                    for (t, e) in &q[((a * n + c) * n + d) * n + m] {
                        *acc.entry(t * n + k).or_insert_with(Cyclotomic::zero) += &(c1 * e);
                    }
                }
                products.push(collect(acc));
            }
        }
        let mut unit = zero_vector(nn);
        for (r, u) in base.algebra().unit_coords().iter().enumerate() {
            for (k, e) in base.counit().iter().enumerate() {
                if !u.is_zero() && !e.is_zero() {
                    unit[r * n + k] = u * e;
                }
            }
        }
        let algebra = StructureAlgebra::from_sparse_with_policy(nn, products, unit, policy)?;
        let sigma = AlgebraElement::from_coords(endomorphism_coords(&Matrix::identity(n)));
        let sigma_inverse = AlgebraElement::from_coords(endomorphism_coords(&s_inv));
        Ok(TwistedDouble {
            base: base.clone(),
            algebra,
            sigma,
            sigma_inverse,
        })
    }

    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    /// The identity map `h ↦ h`.
    pub fn sigma(&self) -> &AlgebraElement {
        &self.sigma
    }

    /// The element given by the matrix of `S⁻¹`.
    pub fn sigma_inverse(&self) -> &AlgebraElement {
        &self.sigma_inverse
    }

    /// The unit `ε(−)1`.
    pub fn one(&self) -> AlgebraElement {
        self.algebra.one()
    }

    /// The map `y ↦ χ(y) h`, with `χ` in dual-basis coordinates.
    pub fn functional_times(&self, chi: &[Cyclotomic], h: &[Cyclotomic]) -> AlgebraElement {
        let n = self.base.dim();
        let mut v = zero_vector(n * n);
        for (a, x) in h.iter().enumerate() {
            for (b, y) in chi.iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    v[a * n + b] = x * y;
                }
            }
        }
        AlgebraElement::from_coords(v)
    }

    /// The endomorphism `ε(−)h`, i.e. `h` seen inside `D̂(H)`.
    pub fn embed_h(&self, h: &[Cyclotomic]) -> AlgebraElement {
        self.functional_times(self.base.counit(), h)
    }

    /// The endomorphism `χ(−)1`, i.e. `χ` seen inside `D̂(H)`.
    pub fn embed_dual(&self, chi: &[Cyclotomic]) -> AlgebraElement {
        self.functional_times(chi, self.base.algebra().unit_coords())
    }

    /// Associativity, unit, centrality and invertibility of `σ`.
    pub fn check_internals(&self) -> CheckReport {
        let alg = &self.algebra;
        let mut report = ReportBuilder::new("twisted-double");
        report.note("dim", alg.dim());
        let n = alg.dim();
        let bad = alg.find_nonassociative_triple();
        report.expect("associative", bad.is_none(), json!({ "triple": bad }));
        let bad = (0..n).find(|&i| {
            let e = alg.basis_element(i);
            alg.mul(&alg.one(), &e) != e || alg.mul(&e, &alg.one()) != e
        });
        report.expect("unit", bad.is_none(), json!({ "basis": bad }));
        report.expect("sigma-central", alg.is_central(&self.sigma), ());
        let one = alg.one();
        report.expect(
            "sigma-inverse-is-S^-1",
            alg.mul(&self.sigma, &self.sigma_inverse) == one && alg.mul(&self.sigma_inverse, &self.sigma) == one,
            (),
        );
        report.finish()
    }

    /// The cross relation `h χ = χ(S(h³)(−)h¹) h²` on every basis pair.
    pub fn check_cross_relation(&self) -> CheckReport {
        let h = &self.base;
        let n = h.dim();
        let mut report = ReportBuilder::new("cross-relation");
        let mut bad = None;
        'outer: for b in 0..n {
            let hb = self.embed_h(&crate::linalg::unit_vector(n, b));
            for j in 0..n {
                let chi = crate::linalg::unit_vector(n, j);
                let lhs = self.algebra.mul(&hb, &self.embed_dual(&chi));
                let mut rhs = self.algebra.zero();
                for (u, v, w, c) in h.legs3(b) {
                    // y ↦ [S(e_w) y e_u]_j
                    let s_w = AlgebraElement::from_coords(h.antipode().column(*w));
                    let eu = h.algebra().basis_element(*u);
                    let phi: Vector = (0..n)
                        .map(|t| {
                            let y = h.algebra().product(&[&s_w, &h.algebra().basis_element(t), &eu]);
                            y.coords()[j].clone()
                        })
                        .collect();
                    let term = self.algebra.mul(
                        &self.embed_dual(&phi),
                        &self.embed_h(&crate::linalg::unit_vector(n, *v)),
                    );
                    rhs = rhs.add(&term.scale(c));
                }
                if lhs != rhs {
                    bad = Some([b, j]);
                    break 'outer;
                }
            }
        }
        report.expect("h-chi-straightening", bad.is_none(), json!({ "pair": bad }));
        report.finish()
    }
}

/// Coordinates of the endomorphism with matrix `m` (columns are images).
pub fn endomorphism_coords(m: &Matrix) -> Vector {
    let n = m.rows();
    let mut v = zero_vector(n * n);
    for a in 0..n {
        for b in 0..n {
            v[a * n + b] = m.get(a, b).clone();
        }
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// `χh = h² χ(h³(−)S⁻¹(h¹))`
    Drinfeld,
    /// `χh = h² χ(h³(−)S(h¹))`
    Anti,
}

#[derive(Clone, Debug)]
pub struct ClassicalDouble {
    base: HopfData,
    flavor: Flavor,
    algebra: StructureAlgebra,
    sigma: AlgebraElement,
}

impl ClassicalDouble {
    pub fn build(base: &HopfData, flavor: Flavor) -> Result<Self, HopfError> {
        let n = base.dim();
        let nn = n * n;
        let twist = match flavor {
            Flavor::Drinfeld => base
                .antipode_inverse()
                .cloned()
                .ok_or_else(|| HopfError::Shape("antipode is not invertible".into()))?,
            Flavor::Anti => base.antipode().clone(),
        };
        let twist_cols: Vec<SparseVec> = (0..n).map(|k| column_sparse(&twist, k)).collect();
        // straighten[(j, b)] = Σ c · e_{b2} ⊗ φ with φ(y) = [e_{b3} y T(e_{b1})]_j
        let mut straighten: Vec<Vec<(usize, Vector)>> = vec![Vec::new(); n * n];
        for b in 0..n {
            for (b1, b2, b3, c) in base.legs3(b) {
                let mut phis = vec![zero_vector(n); n];
                for t in 0..n {
                    let left = mul_sparse(base, &vec![(*b3, Cyclotomic::one())], &vec![(t, Cyclotomic::one())]);
                    let full = mul_sparse(base, &left, &twist_cols[*b1]);
                    for (j, x) in full {
                        phis[j][t] += &(c * &x);
                    }
                }
                for (j, phi) in phis.into_iter().enumerate() {
                    straighten[j * n + b].push((*b2, phi));
                }
            }
        }
        let dual_mul = |phi: &Vector, l: usize| -> BTreeMap<usize, Cyclotomic> {
            // φ * e^l = Σ_k Σ_{(s,l) in Δ(e_k)} φ_s c e^k
            let mut acc = BTreeMap::new();
            for k in 0..n {
                for (s, t, c) in base.legs2(k) {
                    if t == l && !phi[s].is_zero() {
                        *acc.entry(k).or_insert_with(Cyclotomic::zero) += &(&phi[s] * &c);
                    }
                }
            }
            acc
        };
        let mut products = Vec::with_capacity(nn * nn);
        for ij in 0..nn {
            let (i, j) = (ij / n, ij % n);
            for bl in 0..nn {
                let (b, l) = (bl / n, bl % n);
                let mut acc = BTreeMap::new();
                for (b2, phi) in &straighten[j * n + b] {
                    let chi = dual_mul(phi, l);
                    if chi.is_empty() {
                        continue;
                    }
                    for (s, x) in prod(base, i, *b2) {
                        for (k, y) in &chi {
                            *acc.entry(s * n + k).or_insert_with(Cyclotomic::zero) += &(x * y);
                        }
                    }
                }
                products.push(collect(acc));
            }
        }
        let mut unit = zero_vector(nn);
        for (r, u) in base.algebra().unit_coords().iter().enumerate() {
            for (k, e) in base.counit().iter().enumerate() {
                if !u.is_zero() && !e.is_zero() {
                    unit[r * n + k] = u * e;
                }
            }
        }
        let algebra = StructureAlgebra::from_sparse(nn, products, unit)?;
        let mut sigma = zero_vector(nn);
        for i in 0..n {
            sigma[i * n + i] = Cyclotomic::one();
        }
        Ok(ClassicalDouble {
            base: base.clone(),
            flavor,
            algebra,
            sigma: AlgebraElement::from_coords(sigma),
        })
    }

    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    /// `Σ e_i ⊗ e^i`.
    pub fn sigma(&self) -> &AlgebraElement {
        &self.sigma
    }

    /// `h ⊗ χ` from coordinates of `h` and of `χ`.
    pub fn pure_tensor(&self, h: &[Cyclotomic], chi: &[Cyclotomic]) -> AlgebraElement {
        let n = self.base.dim();
        let mut v = zero_vector(n * n);
        for (i, x) in h.iter().enumerate() {
            for (j, y) in chi.iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    v[i * n + j] = x * y;
                }
            }
        }
        AlgebraElement::from_coords(v)
    }

    /// Checks that `H ⊗ ε` and `1 ⊗ H*` are subalgebras, that
    /// `(h ⊗ ε)(1 ⊗ χ) = h ⊗ χ`, and the flavor's straightening relation
    /// evaluated independently through the algebra of `H`.
    pub fn check_straightening(&self) -> CheckReport {
        let h = &self.base;
        let n = h.dim();
        let ha = h.algebra();
        let d = &self.algebra;
        let eps = h.counit().to_vec();
        let one = ha.unit_coords().to_vec();
        let dual = h.dual();
        let mut report = ReportBuilder::new(match self.flavor {
            Flavor::Drinfeld => "drinfeld-straightening",
            Flavor::Anti => "anti-straightening",
        });
        let e = |i| crate::linalg::unit_vector(n, i);

        let bad = (0..n * n).find(|&ab| {
            let (a, b) = (ab / n, ab % n);
            let lhs = d.mul(&self.pure_tensor(&e(a), &eps), &self.pure_tensor(&e(b), &eps));
            lhs != self.pure_tensor(ha.mul(&ha.basis_element(a), &ha.basis_element(b)).coords(), &eps)
        });
        report.expect("H-subalgebra", bad.is_none(), json!({ "pair": bad }));

        let dual = match dual {
            Ok(dual) => dual,
            Err(err) => {
                report.precondition_failed("dual", err.to_string());
                return report.finish();
            }
        };
        let bad = (0..n * n).find(|&ab| {
            let (a, b) = (ab / n, ab % n);
            let lhs = d.mul(&self.pure_tensor(&one, &e(a)), &self.pure_tensor(&one, &e(b)));
            let prod = dual
                .algebra()
                .mul(&dual.algebra().basis_element(a), &dual.algebra().basis_element(b));
            lhs != self.pure_tensor(&one, prod.coords())
        });
        report.expect("H*-subalgebra", bad.is_none(), json!({ "pair": bad }));

        let bad = (0..n * n).find(|&ab| {
            let (a, b) = (ab / n, ab % n);
            d.mul(&self.pure_tensor(&e(a), &eps), &self.pure_tensor(&one, &e(b))) != self.pure_tensor(&e(a), &e(b))
        });
        report.expect("h-then-chi", bad.is_none(), json!({ "pair": bad }));

        let twist = match self.flavor {
            Flavor::Drinfeld => h.antipode_inverse().cloned().expect("finite-dimensional antipode"),
            Flavor::Anti => h.antipode().clone(),
        };
        let mut bad = None;
        'outer: for b in 0..n {
            for j in 0..n {
                let lhs = d.mul(&self.pure_tensor(&one, &e(j)), &self.pure_tensor(&e(b), &eps));
                let mut rhs = d.zero();
                for (b1, b2, b3, c) in h.legs3(b) {
                    let t = AlgebraElement::from_coords(twist.column(*b1));
                    let h3 = ha.basis_element(*b3);
                    let phi: Vector = (0..n)
                        .map(|y| ha.product(&[&h3, &ha.basis_element(y), &t]).coords()[j].clone())
                        .collect();
                    rhs = rhs.add(&self.pure_tensor(&e(*b2), &phi).scale(c));
                }
                if lhs != rhs {
                    bad = Some([j, b]);
                    break 'outer;
                }
            }
        }
        report.expect("chi-h-straightening", bad.is_none(), json!({ "pair": bad }));
        report.finish()
    }
}

/// The map `D(H) → D_a(H)`, `h ⊗ χ ↦ h ⊗ χ((−)u)`, with a report checking it
/// is a bijective unital algebra map.
pub fn uhu_map(drinfeld: &ClassicalDouble, anti: &ClassicalDouble, u: &AlgebraElement) -> (Matrix, CheckReport) {
    let h = drinfeld.base();
    let n = h.dim();
    let mut report = ReportBuilder::new("uhu-map");
    let pivotal = h.check_pivotal(u);
    report.absorb("pivotal", &pivotal);
    let ha = h.algebra();
    let mut m = Matrix::zeros(n * n, n * n);
    for t in 0..n {
        let tu = ha.mul(&ha.basis_element(t), u);
        for (j, c) in tu.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                m.set(i * n + t, i * n + j, c.clone());
            }
        }
    }
    if !pivotal.passed() {
        return (m, report.finish());
    }
    report.expect("bijective", m.rank() == n * n, json!({ "rank": m.rank() }));
    let (d, a) = (drinfeld.algebra(), anti.algebra());
    let img = |v: &AlgebraElement| AlgebraElement::from_coords(m.mul_vec(v.coords()).expect("dimension"));
    report.expect("unit", img(&d.one()) == a.one(), ());
    let cols: Vec<AlgebraElement> = (0..n * n).map(|k| AlgebraElement::from_coords(m.column(k))).collect();
    let mut bad = None;
    'outer: for x in 0..n * n {
        for y in 0..n * n {
            let lhs = img(&d.mul(&d.basis_element(x), &d.basis_element(y)));
            if lhs != a.mul(&cols[x], &cols[y]) {
                bad = Some([x, y]);
                break 'outer;
            }
        }
    }
    report.expect("multiplicative", bad.is_none(), json!({ "pair": bad }));
    (m, report.finish())
}
