//! The twisted double of a Taft algebra, presented by `x, x′, g, g′`.
//!
//! Inside `End(T_p(ξ)) ≅ T_p(ξ)* ⊗ T_p(ξ)` the generators are
//! `x′ = φ(x) ⊗ 1`, `g′ = φ(g) ⊗ 1`, `x = ε ⊗ x`, `g = ε ⊗ g`, where `φ` is the
//! self-duality map and `χ ⊗ h` stands for the map `y ↦ χ(y) h`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::{AlgebraElement, AlgebraError, Block, Quotient, StructureAlgebra};
use crate::cyclotomic::{q_factorial, Cyclotomic};
use crate::dg::{stable_quotient, TwoTermDga};
use crate::double::TwistedDouble;
use crate::expr::{Expr, Relation};
use crate::hopf::{taft_self_duality, DualityFormula, HopfError};
use crate::linalg::{self, kernel, unit_vector, Matrix, Subspace};
use crate::report::{CheckReport, ReportBuilder};

#[derive(Clone, Debug)]
pub struct TaftDouble {
    pub p: usize,
    pub xi: Cyclotomic,
    pub formula: DualityFormula,
    pub double: TwistedDouble,
    pub x: AlgebraElement,
    pub x_prime: AlgebraElement,
    pub g: AlgebraElement,
    pub g_prime: AlgebraElement,
}

impl TaftDouble {
    /// `D̂(T_p(ξ))` with `ξ = ζ_p^exponent`.
    pub fn new(p: usize, exponent: i64, formula: DualityFormula) -> Result<Self, HopfError> {
        let xi = Cyclotomic::root_of_unity(p as u32, exponent);
        let sd = taft_self_duality(p, &xi, formula)?;
        let double = TwistedDouble::build(&sd.taft)?;
        let n = p * p;
        let (gx, gg) = (1, p);
        let x = double.embed_h(&unit_vector(n, gx));
        let g = double.embed_h(&unit_vector(n, gg));
        let x_prime = double.embed_dual(&sd.forward.column(gx));
        let g_prime = double.embed_dual(&sd.forward.column(gg));
        Ok(TaftDouble {
            p,
            xi,
            formula,
            double,
            x,
            x_prime,
            g,
            g_prime,
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        self.double.algebra()
    }

    pub fn xi_pow(&self, e: i64) -> Cyclotomic {
        self.xi.pow(e.rem_euclid(self.p as i64)).expect("root of unity")
    }

    pub fn gg_prime(&self) -> AlgebraElement {
        self.algebra().mul(&self.g, &self.g_prime)
    }

    pub fn assignment(&self) -> BTreeMap<String, AlgebraElement> {
        BTreeMap::from([
            ("x".to_string(), self.x.clone()),
            ("x'".to_string(), self.x_prime.clone()),
            ("g".to_string(), self.g.clone()),
            ("g'".to_string(), self.g_prime.clone()),
        ])
    }

    /// The defining relations of the presentation on `x, x′, g, g′`.
    pub fn relations(&self) -> Vec<Relation> {
        let p = self.p as u32;
        let (x, xp, g, gp) = (Expr::gen("x"), Expr::gen("x'"), Expr::gen("g"), Expr::gen("g'"));
        let xi = Expr::scalar(self.xi.clone());
        let xi_inv = Expr::scalar(self.xi_pow(-1));
        vec![
            Relation::new("x^p = 0", x.clone().pow(p), Expr::zero()),
            Relation::new("x'^p = 0", xp.clone().pow(p), Expr::zero()),
            Relation::new("g^p = 1", g.clone().pow(p), Expr::one()),
            Relation::new("g'^p = 1", gp.clone().pow(p), Expr::one()),
            Relation::new("gg' = g'g", g.clone() * gp.clone(), gp.clone() * g.clone()),
            Relation::new("gx = xi xg", g.clone() * x.clone(), xi.clone() * x.clone() * g.clone()),
            Relation::new(
                "g'x' = xi x'g'",
                gp.clone() * xp.clone(),
                xi.clone() * xp.clone() * gp.clone(),
            ),
            Relation::new(
                "gx' = xi^-1 x'g",
                g.clone() * xp.clone(),
                xi_inv.clone() * xp.clone() * g.clone(),
            ),
            Relation::new(
                "g'x = xi^-1 xg'",
                gp.clone() * x.clone(),
                xi_inv.clone() * x.clone() * gp.clone(),
            ),
            Relation::new(
                "xx' - xi^-1 x'x = 1 - xi^-1 g'^-1 g",
                x.clone() * xp.clone() - xi_inv.clone() * xp * x,
                Expr::one() - xi_inv * Expr::inv("g'") * g,
            ),
        ]
    }

    pub fn check_relations(&self) -> CheckReport {
        self.algebra()
            .check_presentation(&self.assignment(), &self.relations())
            .with_id("relations")
    }

    /// `gg′` central with `(gg′)^p = 1`, and the complete split into `p`
    /// blocks of dimension `p³`, each matching the quotient by `gg′ − ξ^s`.
    pub fn check_split(&self) -> CheckReport {
        let alg = self.algebra();
        let z = self.gg_prime();
        let mut report = ReportBuilder::new("split");
        report.expect("gg'-central", alg.is_central(&z), ());
        report.expect("(gg')^p = 1", alg.pow(&z, self.p as u32) == alg.one(), ());
        let candidates: Vec<Cyclotomic> = (0..self.p as i64).map(|s| self.xi_pow(s)).collect();
        match alg.central_eigensplit(&z, &candidates) {
            Ok(blocks) => {
                let dims: Vec<usize> = blocks.iter().map(|b| b.algebra.dim()).collect();
                let cube = self.p.pow(3);
                report.expect(
                    "block-dims",
                    dims.len() == self.p && dims.iter().all(|&d| d == cube),
                    json!({ "dims": dims }),
                );
                for (s, block) in blocks.iter().enumerate() {
                    match self.block_quotient(s as i64) {
                        Ok(q) => {
                            report.expect(
                                format!("quotient-dim-s{s}"),
                                q.algebra.dim() == block.algebra.dim() && block.eigenvalue == self.xi_pow(s as i64),
                                json!({ "quotient": q.algebra.dim(), "eigenspace": block.algebra.dim() }),
                            );
                        }
                        Err(e) => report.precondition_failed(format!("quotient-s{s}"), e.to_string()),
                    };
                }
            }
            Err(e) => {
                report.expect("complete", false, e.to_string());
            }
        }
        report.finish()
    }

    /// `D̂ / (gg′ − ξ^s)`.
    pub fn block_quotient(&self, s: i64) -> Result<Quotient, AlgebraError> {
        let alg = self.algebra();
        let rel = self.gg_prime().sub(&alg.one().scale(&self.xi_pow(s)));
        alg.quotient(&[rel])
    }

    /// The eigenblock of `gg′` for the eigenvalue `ξ^s`.
    pub fn block(&self, s: i64) -> Result<Block, AlgebraError> {
        let alg = self.algebra();
        let blocks = alg.central_eigensplit(&self.gg_prime(), &[self.xi_pow(s)]);
        match blocks {
            Ok(mut b) => Ok(b.remove(0)),
            Err(AlgebraError::IncompleteSplit { .. }) => {
                // a single candidate never fills the algebra; split fully instead
                let candidates: Vec<Cyclotomic> = (0..self.p as i64).map(|t| self.xi_pow(t)).collect();
                let mut all = alg.central_eigensplit(&self.gg_prime(), &candidates)?;
                Ok(all.remove(s.rem_euclid(self.p as i64) as usize))
            }
            Err(e) => Err(e),
        }
    }

    /// Joint eigenspace `V_ij` of left multiplication by `g′` (eigenvalue
    /// `ξ^i`) and `g` (eigenvalue `ξ^j`) in the regular representation.
    pub fn graded_component(&self, i: i64, j: i64) -> Subspace {
        let alg = self.algebra();
        let lgp = alg
            .left_mult_matrix(&self.g_prime)
            .shift(&self.xi_pow(i))
            .expect("square");
        let lg = alg.left_mult_matrix(&self.g).shift(&self.xi_pow(j)).expect("square");
        kernel(&Matrix::vstack(&[lgp, lg]).expect("equal widths"))
    }

    /// `V_ij` fill the algebra and `x`, `x′` shift degrees by `(−1, 1)` and
    /// `(1, −1)`.
    pub fn check_grading(&self) -> CheckReport {
        let alg = self.algebra();
        let p = self.p as i64;
        let mut report = ReportBuilder::new("grading");
        let comps: BTreeMap<(i64, i64), Subspace> = (0..p)
            .flat_map(|i| (0..p).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), self.graded_component(i, j)))
            .collect();
        let dims: Vec<usize> = comps.values().map(Subspace::dim).collect();
        let total: usize = dims.iter().sum();
        report.expect("complete", total == alg.dim(), json!({ "dims": dims, "total": total }));
        let mut bad = None;
        'outer: for (&(i, j), space) in &comps {
            for v in space.basis() {
                let v = AlgebraElement::from_coords(v.clone());
                let xv = alg.mul(&self.x, &v);
                let xpv = alg.mul(&self.x_prime, &v);
                let to_x = &comps[&((i - 1).rem_euclid(p), (j + 1).rem_euclid(p))];
                let to_xp = &comps[&((i + 1).rem_euclid(p), (j - 1).rem_euclid(p))];
                if !to_x.contains(xv.coords()) || !to_xp.contains(xpv.coords()) {
                    bad = Some([i, j]);
                    break 'outer;
                }
            }
        }
        report.expect("degrees", bad.is_none(), json!({ "component": bad }));
        report.finish()
    }

    /// `Σ_l ξ^{(i−l)(j+l)} / (l)_{ξ⁻¹}! · x′^l x^l`, the predicted action of
    /// `σ` on `V_ij`.
    pub fn sigma_formula(&self, i: i64, j: i64) -> AlgebraElement {
        let alg = self.algebra();
        let xi_inv = self.xi_pow(-1);
        let mut acc = alg.zero();
        for l in 0..self.p as i64 {
            let coeff = self
                .xi_pow((i - l) * (j + l))
                .try_div(&q_factorial(l as u32, &xi_inv))
                .expect("q-factorial below p is nonzero");
            let term = alg.mul(&alg.pow(&self.x_prime, l as u32), &alg.pow(&self.x, l as u32));
            acc = acc.add(&term.scale(&coeff));
        }
        acc
    }

    /// Checks that `σ v = element · v` for every basis vector of `V_ij`.
    fn acts_as(&self, space: &Subspace, element: &AlgebraElement) -> bool {
        let alg = self.algebra();
        space.basis().iter().all(|v| {
            let v = AlgebraElement::from_coords(v.clone());
            alg.mul(self.double.sigma(), &v) == alg.mul(element, &v)
        })
    }

    pub fn check_sigma_action(&self) -> CheckReport {
        let p = self.p as i64;
        let alg = self.algebra();
        let mut report = ReportBuilder::new("sigma-action");
        let mut total = 0;
        for i in 0..p {
            for j in 0..p {
                let space = self.graded_component(i, j);
                total += space.dim();
                let ok = self.acts_as(&space, &self.sigma_formula(i, j));
                report.expect(format!("V{i}{j}"), ok, json!({ "dim": space.dim() }));
            }
        }
        report.expect("components-fill", total == alg.dim(), json!({ "total": total }));
        report.finish()
    }

    /// For `p = 2`: `σ|V00 = 1 − x′x`, `σ|V11 = −1 + x′x`,
    /// `σ|V01 = σ|V10 = 1 + x′x`.
    pub fn check_sigma_blocks_p2(&self) -> CheckReport {
        let mut report = ReportBuilder::new("sigma-blocks");
        if self.p != 2 {
            report.precondition_failed("p", "defined for p = 2 only");
            return report.finish();
        }
        let alg = self.algebra();
        let one = alg.one();
        let xpx = alg.mul(&self.x_prime, &self.x);
        let cases = [
            ((0, 0), one.sub(&xpx), "1 - x'x"),
            ((1, 1), xpx.sub(&one), "-1 + x'x"),
            ((0, 1), one.add(&xpx), "1 + x'x"),
            ((1, 0), one.add(&xpx), "1 + x'x"),
        ];
        for ((i, j), element, text) in cases {
            let space = self.graded_component(i, j);
            let ok = space.dim() > 0 && self.acts_as(&space, &element);
            report.expect(
                format!("V{i}{j}"),
                ok,
                json!({ "restriction": text, "dim": space.dim() }),
            );
        }
        report.finish()
    }

    /// The unique `p`-th root of unity with `q² = ξ⁻¹`.
    pub fn q(&self) -> Option<Cyclotomic> {
        let target = self.xi_pow(-1);
        (0..self.p as i64)
            .map(|e| Cyclotomic::root_of_unity(self.p as u32, e))
            .find(|q| (q * q) == target)
    }

    /// `E = q^{s+1}/(q − q⁻¹) x′`, `F = x g′`, `K = q^{s+1} g` in the block
    /// `D̂/(gg′ − ξ^s)`, checked against the small quantum group relations.
    pub fn check_uqsl2(&self, s: i64) -> CheckReport {
        let mut report = ReportBuilder::new(format!("uqsl2-s{s}"));
        if self.p == 2 {
            report.precondition_failed("p", "needs an odd prime");
            return report.finish();
        }
        let Some(q) = self.q() else {
            report.precondition_failed("q", "no p-th root of unity squares to xi^-1");
            return report.finish();
        };
        let quotient = match self.block_quotient(s) {
            Ok(qu) => qu,
            Err(e) => {
                report.precondition_failed("block", e.to_string());
                return report.finish();
            }
        };
        let alg = self.algebra();
        let q_inv = q.inverse().expect("root of unity");
        let diff = &q - &q_inv;
        let qs = q.pow(s + 1).expect("root of unity");
        let e_el = self.x_prime.scale(&qs.try_div(&diff).expect("q is not ±1"));
        let f_el = alg.mul(&self.x, &self.g_prime);
        let k_el = self.g.scale(&qs);
        let assignment = BTreeMap::from([
            ("E".to_string(), quotient.project(&e_el)),
            ("F".to_string(), quotient.project(&f_el)),
            ("K".to_string(), quotient.project(&k_el)),
        ]);
        let p = self.p as u32;
        let (e, f, k) = (Expr::gen("E"), Expr::gen("F"), Expr::gen("K"));
        let inv_diff = Expr::scalar(diff.inverse().expect("nonzero"));
        let q2 = Expr::scalar(&q * &q);
        let q_2 = Expr::scalar(&q_inv * &q_inv);
        let relations = vec![
            Relation::new("E^p = 0", e.clone().pow(p), Expr::zero()),
            Relation::new("F^p = 0", f.clone().pow(p), Expr::zero()),
            Relation::new("K^p = 1", k.clone().pow(p), Expr::one()),
            Relation::new(
                "[E,F] = (K - K^-1)/(q - q^-1)",
                e.clone() * f.clone() - f.clone() * e.clone(),
                inv_diff * (k.clone() - Expr::inv("K")),
            ),
            Relation::new("KEK^-1 = q^2 E", k.clone() * e.clone() * Expr::inv("K"), q2 * e),
            Relation::new("KFK^-1 = q^-2 F", k * f.clone() * Expr::inv("K"), q_2 * f),
        ];
        report.note("q", &q);
        report.note("block_dim", quotient.algebra.dim());
        let presentation = quotient.algebra.check_presentation(&assignment, &relations);
        report.absorb("presentation", &presentation);
        report.expect(
            "block-dim-p^3",
            quotient.algebra.dim() == self.p.pow(3),
            json!({ "dim": quotient.algebra.dim() }),
        );
        report.finish()
    }
}

/// The blocks `D_s = D̂(T_2(−1))/(gg′ − (−1)^s)` with the images of the
/// generators and of `σ`.
#[derive(Clone, Debug)]
pub struct SweedlerBlock {
    pub s: i64,
    pub quotient: Quotient,
    pub x: AlgebraElement,
    pub x_prime: AlgebraElement,
    pub g: AlgebraElement,
    pub sigma: AlgebraElement,
}

impl SweedlerBlock {
    pub fn new(d: &TaftDouble, s: i64) -> Result<Self, AlgebraError> {
        let quotient = d.block_quotient(s)?;
        Ok(SweedlerBlock {
            s,
            x: quotient.project(&d.x),
            x_prime: quotient.project(&d.x_prime),
            g: quotient.project(&d.g),
            sigma: quotient.project(d.double.sigma()),
            quotient,
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.quotient.algebra
    }

    /// `x′x`
    pub fn xpx(&self) -> AlgebraElement {
        self.algebra().mul(&self.x_prime, &self.x)
    }

    /// `xx′`
    pub fn xxp(&self) -> AlgebraElement {
        self.algebra().mul(&self.x, &self.x_prime)
    }

    pub fn sign(&self) -> Cyclotomic {
        Cyclotomic::from_integer(if self.s.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// `xx′ + x′x = 1 + (−1)^s`.
    pub fn check_anticommutator(&self) -> CheckReport {
        let alg = self.algebra();
        let mut report = ReportBuilder::new(format!("anticommutator-s{}", self.s));
        let lhs = self.xxp().add(&self.xpx());
        let rhs = alg.one().scale(&(&Cyclotomic::one() + &self.sign()));
        report.expect("xx' + x'x = 1 + (-1)^s", lhs == rhs, ());
        report.finish()
    }

    /// `(x′x)² = (1 + (−1)^s) x′x`, with minimal polynomial of `x′x` acting
    /// on the block equal to `t(t − 2)` for `s = 0` and `t²` for `s = 1`.
    pub fn check_minpoly(&self) -> CheckReport {
        let alg = self.algebra();
        let mut report = ReportBuilder::new(format!("minpoly-s{}", self.s));
        let z = self.xpx();
        let c = &Cyclotomic::one() + &self.sign();
        report.expect("(x'x)^2 = (1+(-1)^s) x'x", alg.mul(&z, &z) == z.scale(&c), ());
        let int = Cyclotomic::from_integer;
        let expected = if self.s.rem_euclid(2) == 0 {
            vec![int(0), int(-2), int(1)]
        } else {
            vec![int(0), int(0), int(1)]
        };
        match linalg::minimal_polynomial(&alg.left_mult_matrix(&z)) {
            Ok(m) => report.expect("minimal-polynomial", m == expected, json!({ "coefficients": m })),
            Err(e) => report.expect("minimal-polynomial", false, e.to_string()),
        };
        report.finish()
    }

    /// `D_0/(σ − 1)` has dimension 4, zero radical and one-dimensional
    /// center, so it is a 2×2 matrix algebra.
    pub fn check_stable_matrix_algebra(&self) -> CheckReport {
        let mut report = ReportBuilder::new(format!("stable-quotient-s{}", self.s));
        match stable_quotient(self.algebra(), &self.sigma) {
            Ok(q) => {
                let a = &q.algebra;
                let (dim, rad, center) = (a.dim(), a.radical().dim(), a.center().dim());
                report.expect("dim = 4", dim == 4, json!({ "dim": dim }));
                report.expect("radical = 0", rad == 0, json!({ "radical": rad }));
                report.expect("center = 1", center == 1, json!({ "center": center }));
            }
            Err(e) => report.precondition_failed("quotient", e.to_string()),
        }
        report.finish()
    }

    /// Centers and `HH^{−1}` of `D_1[θ]` with `dθ = x′x` and of
    /// `D_1/(x′x)[θ]` with `dθ = 0`.
    pub fn check_hh_separation(&self) -> CheckReport {
        let alg = self.algebra();
        let mut report = ReportBuilder::new("hh-separation");
        let xpx = self.xpx();
        report.expect("sigma - 1 = x'x", self.sigma.sub(&alg.one()) == xpx, ());
        let xxp = self.xxp();
        let xxpg = alg.mul(&xxp, &self.g);
        let span = |vs: &[&AlgebraElement]| {
            Subspace::from_vectors(alg.dim(), vs.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>())
        };
        let center = alg.center();
        let expected_center = span(&[&alg.one(), &xxp, &xxpg]);
        report.expect(
            "center(D1) = <1, xx', xx'g>",
            center.dim() == 3 && expected_center.dim() == 3 && expected_center.is_subspace_of(&center),
            json!({ "dim": center.dim() }),
        );
        let mixed = match TwoTermDga::new(alg.clone(), xpx.clone()) {
            Ok(c) => c.hh_minus_one(),
            Err(e) => {
                report.precondition_failed("mixed-dga", e.to_string());
                return report.finish();
            }
        };
        let expected_hh = span(&[&xxp, &xxpg]);
        report.expect(
            "HH^-1(D1, x'x) = <xx', xx'g>",
            mixed.dim() == 2 && expected_hh.dim() == 2 && expected_hh.is_subspace_of(&mixed),
            json!({ "dim": mixed.dim() }),
        );
        let q = match alg.quotient(&[xpx]) {
            Ok(q) => q,
            Err(e) => {
                report.precondition_failed("quotient", e.to_string());
                return report.finish();
            }
        };
        let stable_alg = &q.algebra;
        let stable_center = stable_alg.center();
        let one_q = Subspace::from_vectors(stable_alg.dim(), &[stable_alg.one().into_coords()]);
        report.expect(
            "center(D1/(x'x)) = <1>",
            stable_center.dim() == 1 && one_q.is_subspace_of(&stable_center),
            json!({ "dim": stable_center.dim() }),
        );
        let stable = TwoTermDga::new(stable_alg.clone(), stable_alg.zero())
            .expect("zero is central")
            .hh_minus_one();
        report.expect(
            "HH^-1(D1/(x'x), 0) = <1>",
            stable.dim() == 1 && one_q.is_subspace_of(&stable),
            json!({ "dim": stable.dim() }),
        );
        report.note("mixed", mixed.dim());
        report.note("stable", stable.dim());
        report.finish()
    }

    /// The presentation of `D_1` on `x, x′, g`.
    pub fn check_d1_presentation(&self) -> CheckReport {
        let alg = self.algebra();
        let assignment = BTreeMap::from([
            ("x".to_string(), self.x.clone()),
            ("x'".to_string(), self.x_prime.clone()),
            ("g".to_string(), self.g.clone()),
        ]);
        let (x, xp, g) = (Expr::gen("x"), Expr::gen("x'"), Expr::gen("g"));
        let relations = vec![
            Relation::new("x^2 = 0", x.clone().pow(2), Expr::zero()),
            Relation::new("x'^2 = 0", xp.clone().pow(2), Expr::zero()),
            Relation::new("g^2 = 1", g.clone().pow(2), Expr::one()),
            Relation::new("xx' = -x'x", x.clone() * xp.clone(), -(xp.clone() * x.clone())),
            Relation::new("gx = -xg", g.clone() * x.clone(), -(x * g.clone())),
            Relation::new("gx' = -x'g", g.clone() * xp.clone(), -(xp * g)),
        ];
        alg.check_presentation(&assignment, &relations)
            .with_id("d1-presentation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_relations_and_blocks() {
        let d = TaftDouble::new(2, 1, DualityFormula::Displayed).unwrap();
        let r = d.check_relations();
        assert!(r.passed(), "{:?}", r.failures());
        assert!(d.check_split().passed());
        assert!(d.check_grading().passed());
        assert!(d.check_sigma_action().passed());
        assert!(d.check_sigma_blocks_p2().passed());
        for s in 0..2 {
            let b = SweedlerBlock::new(&d, s).unwrap();
            assert_eq!(b.algebra().dim(), 8);
            assert!(b.check_anticommutator().passed());
            assert!(b.check_minpoly().passed());
        }
        let d0 = SweedlerBlock::new(&d, 0).unwrap();
        assert!(d0.check_stable_matrix_algebra().passed());
        let d1 = SweedlerBlock::new(&d, 1).unwrap();
        assert!(d1.check_d1_presentation().passed());
        let r = d1.check_hh_separation();
        assert!(r.passed(), "{:?}", r.failures());
        assert!(!d1.check_stable_matrix_algebra().passed());
    }

    #[test]
    fn broken_relation_fails_on_odd_block() {
        let d = TaftDouble::new(2, 1, DualityFormula::Displayed).unwrap();
        let rel = Relation::new(
            "xx' + x'x = 2",
            Expr::gen("x") * Expr::gen("x'") + Expr::gen("x'") * Expr::gen("x"),
            Expr::int(2),
        );
        let r = d
            .algebra()
            .check_presentation(&d.assignment(), std::slice::from_ref(&rel));
        assert!(!r.passed());
        let d0 = SweedlerBlock::new(&d, 0).unwrap();
        let d1 = SweedlerBlock::new(&d, 1).unwrap();
        let assign = |b: &SweedlerBlock| {
            BTreeMap::from([
                ("x".to_string(), b.x.clone()),
                ("x'".to_string(), b.x_prime.clone()),
                ("g".to_string(), b.g.clone()),
            ])
        };
        let r0 = d0
            .algebra()
            .check_presentation(&assign(&d0), std::slice::from_ref(&rel));
        let r1 = d1.algebra().check_presentation(&assign(&d1), &[rel]);
        assert!(r0.passed());
        assert!(!r1.passed());
    }
}
