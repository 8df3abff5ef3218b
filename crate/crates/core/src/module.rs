//! Finite-dimensional modules over a structure algebra, with the stable and
//! mixed conditions relative to a central element `σ`.

use serde_json::json;

use crate::algebra::{AlgebraElement, Quotient, StructureAlgebra};
use crate::cyclotomic::Cyclotomic;
use crate::linalg::{LinalgError, Matrix};
use crate::report::{CheckReport, ReportBuilder};

/// An action given by the operators of the basis elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    ops: Vec<Matrix>,
}

/// A grading, differential and homotopy on the space of a representation.
/// `d` has degree +1 and `h` degree −1.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedStructure {
    pub degrees: Vec<i32>,
    pub d: Matrix,
    pub h: Matrix,
}

impl Representation {
    pub fn new(ops: Vec<Matrix>) -> Result<Self, LinalgError> {
        let size = ops.first().map_or(0, |m| m.rows());
        for m in &ops {
            if m.rows() != size || m.cols() != size {
                return Err(LinalgError::DimensionMismatch(format!(
                    "operator is {}x{}, expected {size}x{size}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { ops })
    }

    /// Left regular representation.
    pub fn regular(alg: &StructureAlgebra) -> Self {
        let ops = (0..alg.dim())
            .map(|i| alg.left_mult_matrix(&alg.basis_element(i)))
            .collect();
        Representation { ops }
    }

    /// Pulls a representation of `A/I` back along the projection.
    pub fn pullback(quotient: &Quotient, rep: &Representation) -> Self {
        let proj = &quotient.projection;
        let ops = (0..proj.cols())
            .map(|i| rep.act(&AlgebraElement::from_coords(proj.column(i))))
            .collect();
        Representation { ops }
    }

    pub fn space_dim(&self) -> usize {
        self.ops.first().map_or(0, Matrix::rows)
    }

    pub fn algebra_dim(&self) -> usize {
        self.ops.len()
    }

    pub fn op(&self, i: usize) -> &Matrix {
        &self.ops[i]
    }

    /// `ρ(a) = Σ a_i ρ(e_i)`.
    pub fn act(&self, a: &AlgebraElement) -> Matrix {
        let n = self.space_dim();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in a.coords().iter().zip(&self.ops) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("equal shapes");
            }
        }
        out
    }

    /// `R ⊕ Rθ` as a DG module over `R[θ]` with `dθ = σ − 1`: `R` acts by
    /// left multiplication, `d(sθ) = s(σ − 1)` and `h(r) = rθ`.
    pub fn regular_mixed(alg: &StructureAlgebra, sigma: &AlgebraElement) -> (Self, MixedStructure) {
        let n = alg.dim();
        let z = sigma.sub(&alg.one());
        let rz = alg.right_mult_matrix(&z);
        let ops = (0..n)
            .map(|i| {
                let l = alg.left_mult_matrix(&alg.basis_element(i));
                Matrix::from_fn(2 * n, 2 * n, |r, c| {
                    if (r < n) == (c < n) {
                        l.get(r % n, c % n).clone()
                    } else {
                        Cyclotomic::zero()
                    }
                })
            })
            .collect();
        let d = Matrix::from_fn(2 * n, 2 * n, |r, c| {
            if r < n && c >= n {
                rz.get(r, c - n).clone()
            } else {
                Cyclotomic::zero()
            }
        });
        let h = Matrix::from_fn(2 * n, 2 * n, |r, c| {
            if r >= n && c < n && r - n == c {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        });
        let degrees = (0..2 * n).map(|i| if i < n { 0 } else { -1 }).collect();
        (Representation { ops }, MixedStructure { degrees, d, h })
    }
}

/// Unit and multiplicativity of the action, exhaustively on basis pairs.
pub fn check_module(alg: &StructureAlgebra, rep: &Representation) -> CheckReport {
    let mut report = ReportBuilder::new("module");
    if rep.algebra_dim() != alg.dim() {
        report.precondition_failed("shape", json!({ "operators": rep.algebra_dim(), "algebra": alg.dim() }));
        return report.finish();
    }
    report.expect("unit", rep.act(&alg.one()).is_identity(), ());
    let mut witness = None;
    'outer: for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = rep.act(&alg.mul(&alg.basis_element(i), &alg.basis_element(j)));
            let rhs = rep.op(i).mul(rep.op(j)).expect("square");
            if lhs != rhs {
                witness = Some([i, j]);
                break 'outer;
            }
        }
    }
    report.expect("multiplicative", witness.is_none(), json!({ "pair": witness }));
    report.finish()
}

/// `σ` acts as the identity.
pub fn is_stable(rep: &Representation, sigma: &AlgebraElement) -> CheckReport {
    let mut report = ReportBuilder::new("stable");
    report.expect("sigma-acts-as-identity", rep.act(sigma).is_identity(), ());
    report.finish()
}

fn has_degree(m: &Matrix, degrees: &[i32], shift: i32) -> bool {
    (0..m.rows()).all(|r| (0..m.cols()).all(|c| m.get(r, c).is_zero() || degrees[r] == degrees[c] + shift))
}

fn commutes_with_action(rep: &Representation, m: &Matrix) -> bool {
    (0..rep.algebra_dim()).all(|i| {
        let op = rep.op(i);
        op.mul(m).expect("square") == m.mul(op).expect("square")
    })
}

/// `d² = 0`, `d` and `h` module maps of degrees +1 and −1, and
/// `dh + hd = ρ(σ) − id`.
pub fn is_mixed(rep: &Representation, sigma: &AlgebraElement, mixed: &MixedStructure) -> CheckReport {
    let mut report = ReportBuilder::new("mixed");
    let n = rep.space_dim();
    let shapes_ok = mixed.degrees.len() == n && [&mixed.d, &mixed.h].iter().all(|m| m.rows() == n && m.cols() == n);
    if !shapes_ok {
        report.precondition_failed("shape", json!({ "space": n, "degrees": mixed.degrees.len() }));
        return report.finish();
    }
    let (d, h) = (&mixed.d, &mixed.h);
    report.expect("d^2 = 0", d.mul(d).expect("square").is_zero(), ());
    report.expect("d-degree", has_degree(d, &mixed.degrees, 1), ());
    report.expect("h-degree", has_degree(h, &mixed.degrees, -1), ());
    report.expect("d-module-map", commutes_with_action(rep, d), ());
    report.expect("h-module-map", commutes_with_action(rep, h), ());
    let lhs = d
        .mul(h)
        .expect("square")
        .add(&h.mul(d).expect("square"))
        .expect("square");
    let rhs = rep.act(sigma).sub(&Matrix::identity(n)).expect("square");
    report.expect("dh + hd = sigma - 1", lhs == rhs, ());
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::TwistedDouble;
    use crate::hopf::HopfData;

    fn sweedler_double() -> TwistedDouble {
        let h = HopfData::taft(2, &Cyclotomic::from_integer(-1)).unwrap();
        TwistedDouble::build(&h).unwrap()
    }

    #[test]
    fn regular_module_is_not_stable() {
        let d = sweedler_double();
        let rep = Representation::regular(d.algebra());
        assert!(check_module(d.algebra(), &rep).passed());
        assert!(!is_stable(&rep, d.sigma()).passed());
    }

    #[test]
    fn pullback_from_stable_quotient_is_stable() {
        let d = sweedler_double();
        let q = crate::dg::stable_quotient(d.algebra(), d.sigma()).unwrap();
        let rep = Representation::pullback(&q, &Representation::regular(&q.algebra));
        assert!(check_module(d.algebra(), &rep).passed());
        assert!(is_stable(&rep, d.sigma()).passed());
        let zero = Matrix::zeros(rep.space_dim(), rep.space_dim());
        let trivial = MixedStructure {
            degrees: vec![0; rep.space_dim()],
            d: zero.clone(),
            h: zero,
        };
        assert!(is_mixed(&rep, d.sigma(), &trivial).passed());
    }

    #[test]
    fn regular_dg_module_is_mixed() {
        let d = sweedler_double();
        let (rep, mixed) = Representation::regular_mixed(d.algebra(), d.sigma());
        assert!(check_module(d.algebra(), &rep).passed());
        let r = is_mixed(&rep, d.sigma(), &mixed);
        assert!(r.passed(), "{:?}", r.failures());
        let mut broken = mixed.clone();
        broken.h = Matrix::zeros(broken.h.rows(), broken.h.cols());
        assert_eq!(
            is_mixed(&rep, d.sigma(), &broken).failures(),
            vec!["dh + hd = sigma - 1"]
        );
    }

    #[test]
    fn non_multiplicative_action_names_a_pair() {
        let d = sweedler_double();
        let mut ops: Vec<Matrix> = (0..d.algebra().dim())
            .map(|i| Representation::regular(d.algebra()).op(i).clone())
            .collect();
        ops[1] = ops[1].scale(&Cyclotomic::from_integer(2));
        let rep = Representation::new(ops).unwrap();
        let r = check_module(d.algebra(), &rep);
        assert_eq!(r.failures(), vec!["multiplicative"]);
        assert!(!r.witness("multiplicative").unwrap()["detail"]["pair"].is_null());
    }
}
