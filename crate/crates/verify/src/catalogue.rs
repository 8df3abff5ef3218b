//! The named checks run by `verify`.

use aydc::algebra::AlgebraElement;
use aydc::dg::{self, TwoTermDga};
use aydc::double::{endomorphism_coords, uhu_map, Flavor};
use aydc::hopf::{taft_self_duality, DualityFormula};
use aydc::linalg::{unit_vector, Matrix};
use aydc::module::{self, MixedStructure, Representation};
use aydc::report::{CheckReport, ReportBuilder};
use aydc::Cyclotomic;
use serde_json::json;

use crate::context::Context;

pub struct Entry {
    pub id: &'static str,
    /// The mathematical statement the check witnesses.
    pub claim: &'static str,
    pub tags: &'static [&'static str],
    run: fn(&Context) -> CheckReport,
}

impl Entry {
    pub fn run(&self, ctx: &Context) -> CheckReport {
        (self.run)(ctx).with_id(self.id)
    }
}

/// Runs `f`, turning a setup error into a failed precondition.
fn guarded(report: &mut ReportBuilder, label: &str, f: impl FnOnce() -> Result<CheckReport, String>) {
    match f() {
        Ok(r) => report.absorb(label, &r),
        Err(e) => report.precondition_failed(label, e),
    }
}

fn for_fixtures(
    id: &str,
    ctx: &Context,
    f: impl Fn(&crate::context::Fixture) -> Result<CheckReport, String>,
) -> CheckReport {
    let mut report = ReportBuilder::new(id);
    match ctx.fixtures() {
        Ok(fixtures) => {
            for fx in &fixtures {
                guarded(&mut report, &fx.name, || f(fx));
            }
        }
        Err(e) => report.precondition_failed("fixtures", e),
    }
    report.finish()
}

/// Module checks multiply `dim D̂ × dim D̂` operator pairs, so they run on
/// bases of dimension at most this.
const MODULE_CHECK_MAX_DIM: usize = 4;

fn for_small_fixtures(
    id: &str,
    ctx: &Context,
    f: impl Fn(&crate::context::Fixture) -> Result<CheckReport, String>,
) -> CheckReport {
    let mut report = ReportBuilder::new(id);
    match ctx.fixtures() {
        Ok(fixtures) => {
            for fx in fixtures.iter().filter(|f| f.hopf.dim() <= MODULE_CHECK_MAX_DIM) {
                guarded(&mut report, &fx.name, || f(fx));
            }
        }
        Err(e) => report.precondition_failed("fixtures", e),
    }
    report.finish()
}

fn for_ps(id: &str, ctx: &Context, f: impl Fn(usize) -> Result<CheckReport, String>) -> CheckReport {
    let mut report = ReportBuilder::new(id);
    for &p in ctx.ps() {
        guarded(&mut report, &format!("p={p}"), || f(p));
    }
    report.finish()
}

fn double_assoc_unital(ctx: &Context) -> CheckReport {
    for_fixtures("double-assoc-unital", ctx, |fx| {
        Ok(ctx.twisted_double(fx)?.check_internals())
    })
}

fn double_sigma(ctx: &Context) -> CheckReport {
    for_fixtures("double-sigma", ctx, |fx| {
        let d = ctx.twisted_double(fx)?;
        let alg = d.algebra();
        let mut r = ReportBuilder::new(&fx.name);
        r.expect("sigma-central", alg.is_central(d.sigma()), ());
        let one = alg.one();
        r.expect(
            "sigma-invertible",
            alg.mul(d.sigma(), d.sigma_inverse()) == one && alg.mul(d.sigma_inverse(), d.sigma()) == one,
            (),
        );
        let s_inv = fx.hopf.antipode_inverse().ok_or("antipode is not invertible")?;
        r.expect(
            "sigma-inverse = S^-1",
            d.sigma_inverse().coords() == endomorphism_coords(s_inv).as_slice(),
            (),
        );
        Ok(r.finish())
    })
}

fn cross_relation(ctx: &Context) -> CheckReport {
    for_fixtures("cross-relation", ctx, |fx| {
        Ok(ctx.twisted_double(fx)?.check_cross_relation())
    })
}

fn stable_quotient(ctx: &Context) -> CheckReport {
    for_small_fixtures("stable-quotient", ctx, |fx| {
        let d = ctx.twisted_double(fx)?;
        let alg = d.algebra();
        let q = dg::stable_quotient(alg, d.sigma()).map_err(|e| e.to_string())?;
        let mut r = ReportBuilder::new(&fx.name);
        r.note("dim", alg.dim());
        r.note("stable_dim", q.algebra.dim());
        let regular = Representation::regular(alg);
        r.absorb("regular/module", &module::check_module(alg, &regular));
        let sigma_trivial = d.sigma() == &alg.one();
        r.expect(
            "regular-stable-iff-sigma-trivial",
            module::is_stable(&regular, d.sigma()).passed() == sigma_trivial,
            json!({ "sigma_trivial": sigma_trivial }),
        );
        let pulled = Representation::pullback(&q, &Representation::regular(&q.algebra));
        r.absorb("pullback/module", &module::check_module(alg, &pulled));
        r.absorb("pullback/stable", &module::is_stable(&pulled, d.sigma()));
        if fx.hopf.dim() == 1 {
            r.expect("trivial-group-gives-k", q.algebra.dim() == 1 && sigma_trivial, ());
        }
        Ok(r.finish())
    })
}

fn mixed_module(ctx: &Context) -> CheckReport {
    for_small_fixtures("mixed-module", ctx, |fx| {
        let d = ctx.twisted_double(fx)?;
        let alg = d.algebra();
        let mut r = ReportBuilder::new(&fx.name);
        let (rep, mixed) = Representation::regular_mixed(alg, d.sigma());
        r.absorb("regular-dg/module", &module::check_module(alg, &rep));
        r.absorb("regular-dg/mixed", &module::is_mixed(&rep, d.sigma(), &mixed));
        let q = dg::stable_quotient(alg, d.sigma()).map_err(|e| e.to_string())?;
        let pulled = Representation::pullback(&q, &Representation::regular(&q.algebra));
        let zero = Matrix::zeros(pulled.space_dim(), pulled.space_dim());
        let trivial = MixedStructure {
            degrees: vec![0; pulled.space_dim()],
            d: zero.clone(),
            h: zero,
        };
        r.absorb("stable-zero/mixed", &module::is_mixed(&pulled, d.sigma(), &trivial));
        if d.sigma() != &alg.one() {
            let broken = MixedStructure {
                h: Matrix::zeros(mixed.h.rows(), mixed.h.cols()),
                ..mixed
            };
            r.expect(
                "zero-homotopy-rejected",
                !module::is_mixed(&rep, d.sigma(), &broken).passed(),
                (),
            );
        }
        Ok(r.finish())
    })
}

fn eigenvalue_pool(order: u32) -> Vec<Cyclotomic> {
    let mut pool: Vec<Cyclotomic> = (0..order as i64)
        .map(|a| &Cyclotomic::root_of_unity(order, a) - &Cyclotomic::one())
        .collect();
    pool.extend([-2, 2].map(Cyclotomic::from_integer));
    pool
}

fn diagonalizability(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("sigma-diagonalizability");
    let mut verdict = |label: String, r: Result<CheckReport, String>, expected: bool| match r {
        Ok(r) => {
            // a non-diagonalizable instance must fail on diagonalizability alone
            let ok = if expected {
                r.passed()
            } else {
                r.failures() == vec!["diagonalizable"]
            };
            report.expect(label, ok, json!({ "expected_diagonalizable": expected, "report": r }));
        }
        Err(e) => report.precondition_failed(label, e),
    };
    for s in 0..2 {
        let r = ctx
            .sweedler_block(s)
            .map(|b| dg::diagonalizability_report(b.algebra(), &b.sigma, &eigenvalue_pool(2)));
        verdict(format!("D{s}"), r, s == 0);
    }
    for n in 1..=3u32 {
        let name = format!("kZ/{n}");
        let r = ctx.fixture(&name).and_then(|fx| {
            let d = ctx.twisted_double(&fx)?;
            Ok(dg::diagonalizability_report(
                d.algebra(),
                d.sigma(),
                &eigenvalue_pool(n.max(2)),
            ))
        });
        verdict(name, r, true);
    }
    report.finish()
}

fn semisimple_instances(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("semisimple-instances");
    for n in 1..=3usize {
        guarded(&mut report, &format!("kZ/{n}"), || {
            let fx = ctx.fixture(&format!("kZ/{n}"))?;
            let d = ctx.twisted_double(&fx)?;
            let s = fx.hopf.antipode();
            let mut r = ReportBuilder::new(&fx.name);
            r.expect("S^2 = id", s.mul(s).map_err(|e| e.to_string())?.is_identity(), ());
            let m = d.algebra().left_mult_matrix(&d.sigma().sub(&d.algebra().one()));
            r.expect(
                "sigma-1-diagonalizable",
                aydc::linalg::is_diagonalizable(&m).unwrap_or(false),
                (),
            );
            let rad = d.algebra().radical().dim();
            r.expect("double-semisimple", rad == 0, json!({ "radical": rad }));
            Ok(r.finish())
        });
    }
    report.finish()
}

/// `(name, ring, σ)` for D₀, D₁ and the group-algebra doubles.
fn dg_instances(ctx: &Context) -> Vec<Result<(String, aydc::StructureAlgebra, AlgebraElement), String>> {
    let mut out = Vec::new();
    for s in 0..2 {
        out.push(
            ctx.sweedler_block(s)
                .map(|b| (format!("D{s}"), b.algebra().clone(), b.sigma.clone())),
        );
    }
    for n in 1..=3 {
        let name = format!("kZ/{n}");
        out.push(ctx.fixture(&name).and_then(|fx| {
            let d = ctx.twisted_double(&fx)?;
            Ok((name, d.algebra().clone(), d.sigma().clone()))
        }));
    }
    out
}

fn numerology(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("quasi-iso-numerology");
    for instance in dg_instances(ctx) {
        let (label, ring, sigma) = match instance {
            Ok(i) => i,
            Err(e) => {
                report.precondition_failed("instance", e);
                continue;
            }
        };
        match dg::quasi_iso_numerology(&ring, &sigma) {
            Ok((mixed, stable)) => {
                report.expect(
                    label,
                    mixed == stable && mixed.dim_h_minus1 == mixed.dim_h0,
                    json!({ "mixed": mixed, "stable": stable }),
                );
            }
            Err(e) => report.precondition_failed(label, e.to_string()),
        }
    }
    report.finish()
}

fn taft_axioms(ctx: &Context) -> CheckReport {
    for_ps("taft-axioms", ctx, |p| {
        let h = ctx.taft(p)?;
        let mut r = ReportBuilder::new(format!("T_{p}"));
        r.expect("dim = p^2", h.dim() == p * p, json!({ "dim": h.dim() }));
        r.absorb("axioms", &h.check_hopf_axioms());
        Ok(r.finish())
    })
}

fn taft_antipode_square(ctx: &Context) -> CheckReport {
    for_ps("taft-antipode-square", ctx, |p| {
        let h = ctx.taft(p)?;
        let xi_inv = ctx.xi(p).inverse().map_err(|e| e.to_string())?;
        let n = h.dim();
        let s2 = |v: Vec<Cyclotomic>| {
            let a = AlgebraElement::from_coords(v);
            h.apply_antipode(&h.apply_antipode(&a))
        };
        let x = unit_vector(n, 1);
        let g = unit_vector(n, p);
        let mut r = ReportBuilder::new(format!("T_{p}"));
        r.expect(
            "S^2(x) = xi^-1 x",
            s2(x.clone()) == AlgebraElement::from_coords(x).scale(&xi_inv),
            (),
        );
        r.expect("S^2(g) = g", s2(g.clone()) == AlgebraElement::from_coords(g), ());
        let expected = if p == 2 { 4 } else { 2 * p as u32 };
        let order = (1..=4 * p as u32).find(|k| h.antipode().pow(*k).is_ok_and(|m| m.is_identity()));
        r.expect("order-of-S", order == Some(expected), json!({ "order": order }));
        Ok(r.finish())
    })
}

fn self_duality(ctx: &Context, formula: DualityFormula, id: &str) -> CheckReport {
    for_ps(id, ctx, |p| {
        taft_self_duality(p, &ctx.xi(p), formula)
            .map(|sd| sd.report)
            .map_err(|e| e.to_string())
    })
}

fn taft_double_check(id: &str, ctx: &Context, f: fn(&aydc::taft_double::TaftDouble) -> CheckReport) -> CheckReport {
    for_ps(id, ctx, |p| Ok(f(&*ctx.taft_double(p)?)))
}

fn uqsl2(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("uqsl2-blocks");
    let odd: Vec<usize> = ctx.ps().iter().copied().filter(|p| *p != 2).collect();
    if odd.is_empty() {
        report.precondition_failed("p", "needs an odd prime among the configured ps");
    }
    for p in odd {
        for s in 0..p as i64 {
            guarded(&mut report, &format!("p={p}/s={s}"), || {
                Ok(ctx.taft_double(p)?.check_uqsl2(s))
            });
        }
    }
    report.finish()
}

fn per_block(
    id: &str,
    ctx: &Context,
    blocks: &[i64],
    f: fn(&aydc::taft_double::SweedlerBlock) -> CheckReport,
) -> CheckReport {
    let mut report = ReportBuilder::new(id);
    for &s in blocks {
        guarded(&mut report, &format!("D{s}"), || Ok(f(&*ctx.sweedler_block(s)?)));
    }
    report.finish()
}

fn sigma_blocks(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("sweedler-sigma-blocks");
    guarded(&mut report, "restrictions", || {
        Ok(ctx.taft_double(2)?.check_sigma_blocks_p2())
    });
    guarded(&mut report, "D1", || {
        let b = ctx.sweedler_block(1)?;
        let mut r = ReportBuilder::new("D1");
        r.expect("sigma - 1 = x'x", b.sigma.sub(&b.algebra().one()) == b.xpx(), ());
        Ok(r.finish())
    });
    report.finish()
}

fn sweedler_centers(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("sweedler-centers");
    guarded(&mut report, "D1", || {
        let b = ctx.sweedler_block(1)?;
        let mut r = ReportBuilder::new("D1");
        let c = b.algebra().center().dim();
        r.expect("center(D1) = 3", c == 3, json!({ "dim": c }));
        let q = b.algebra().quotient(&[b.xpx()]).map_err(|e| e.to_string())?;
        let c = q.algebra.center().dim();
        r.expect(
            "center(D1/(x'x)) = 1",
            c == 1,
            json!({ "dim": c, "quotient_dim": q.algebra.dim() }),
        );
        Ok(r.finish())
    });
    report.finish()
}

fn hh_separation(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("hh-separation");
    match ctx.sweedler_block(1) {
        Ok(b) => {
            let r = b.check_hh_separation();
            for key in ["mixed", "stable"] {
                if let Some(v) = r.witness(key) {
                    report.note(key, v);
                }
            }
            report.absorb("D1", &r);
        }
        Err(e) => report.precondition_failed("D1", e),
    }
    report.finish()
}

fn hh_core(ctx: &Context) -> CheckReport {
    let mut report = ReportBuilder::new("hh-inside-center");
    for instance in dg_instances(ctx) {
        let (label, ring, sigma) = match instance {
            Ok(i) => i,
            Err(e) => {
                report.precondition_failed("instance", e);
                continue;
            }
        };
        let center = ring.center();
        let z = sigma.sub(&ring.one());
        let zero = TwoTermDga::new(ring.clone(), ring.zero()).map(|c| c.hh_minus_one());
        match (TwoTermDga::new(ring, z), zero) {
            (Ok(c), Ok(zero)) => {
                let hh = c.hh_minus_one();
                report.expect(
                    label,
                    hh.is_subspace_of(&center) && zero == center,
                    json!({ "hh": hh.dim(), "center": center.dim() }),
                );
            }
            (Err(e), _) | (_, Err(e)) => report.precondition_failed(label, e.to_string()),
        }
    }
    report.finish()
}

fn classical_straightening(ctx: &Context) -> CheckReport {
    for_fixtures("classical-straightening", ctx, |fx| {
        let mut r = ReportBuilder::new(&fx.name);
        let drinfeld = ctx.classical_double(fx, Flavor::Drinfeld)?;
        let anti = ctx.classical_double(fx, Flavor::Anti)?;
        r.absorb("drinfeld", &drinfeld.check_straightening());
        r.absorb("anti", &anti.check_straightening());
        let s = fx.hopf.antipode();
        if s.mul(s).map_err(|e| e.to_string())?.is_identity() {
            r.expect("equal-when-S^2=id", drinfeld.algebra() == anti.algebra(), ());
        }
        Ok(r.finish())
    })
}

fn anti_sigma(ctx: &Context) -> CheckReport {
    for_fixtures("anti-double-sigma", ctx, |fx| {
        let anti = ctx.classical_double(fx, Flavor::Anti)?;
        let mut r = ReportBuilder::new(&fx.name);
        r.expect("sigma-central", anti.algebra().is_central(anti.sigma()), ());
        Ok(r.finish())
    })
}

fn g_inverse(p: usize) -> AlgebraElement {
    // g^{p-1} has index (p-1)·p in the basis g^i x^j
    AlgebraElement::from_coords(unit_vector(p * p, (p - 1) * p))
}

fn uhu(ctx: &Context) -> CheckReport {
    for_ps("uhu-isomorphism", ctx, |p| {
        let fx = ctx.fixture(&format!("T_{p}"))?;
        let drinfeld = ctx.classical_double(&fx, Flavor::Drinfeld)?;
        let anti = ctx.classical_double(&fx, Flavor::Anti)?;
        Ok(uhu_map(&drinfeld, &anti, &g_inverse(p)).1)
    })
}

fn pivotal(ctx: &Context) -> CheckReport {
    for_ps("taft-pivotal", ctx, |p| Ok(ctx.taft(p)?.check_pivotal(&g_inverse(p))))
}

pub fn catalogue() -> Vec<Entry> {
    let mut entries = vec![
        Entry {
            id: "anti-double-sigma",
            claim: "σ = Σ e_i ⊗ e^i is central in the anti-double D_a(H)",
            tags: &["classical", "double"],
            run: anti_sigma,
        },
        Entry {
            id: "classical-straightening",
            claim: "D(H) and D_a(H) satisfy their straightening relations, and coincide when S² = id",
            tags: &["classical", "double"],
            run: classical_straightening,
        },
        Entry {
            id: "cross-relation",
            claim: "in D̂(H), h χ = χ(S(h³)(−)h¹) h²",
            tags: &["double"],
            run: cross_relation,
        },
        Entry {
            id: "d1-presentation",
            claim: "D₁ is generated by x, x′, g with x² = x′² = 0, g² = 1, xx′ = −x′x, gx = −xg, gx′ = −x′g",
            tags: &["sweedler"],
            run: |ctx| per_block("d1-presentation", ctx, &[1], |b| b.check_d1_presentation()),
        },
        Entry {
            id: "double-assoc-unital",
            claim: "the twisted double D̂(H) is associative and unital",
            tags: &["double"],
            run: double_assoc_unital,
        },
        Entry {
            id: "double-sigma",
            claim: "σ is central and invertible in D̂(H), with inverse given by S⁻¹",
            tags: &["double"],
            run: double_sigma,
        },
        Entry {
            id: "hh-inside-center",
            claim: "HH⁻¹ of R[θ] lies in the center of R, and equals it when dθ = 0",
            tags: &["dg"],
            run: hh_core,
        },
        Entry {
            id: "hh-separation",
            claim: "HH⁻¹(D₁[θ], dθ = x′x) = ⟨xx′, xx′g⟩ while HH⁻¹(D₁/(x′x)[θ], dθ = 0) = ⟨1⟩",
            tags: &["dg", "sweedler"],
            run: hh_separation,
        },
        Entry {
            id: "mixed-module",
            claim: "modules with dh + hd = σ − 1 are recognized, and a zero homotopy is rejected when σ ≠ 1",
            tags: &["dg", "double"],
            run: mixed_module,
        },
        Entry {
            id: "quasi-iso-numerology",
            claim: "the complexes R →(σ−1) R and R/(σ−1) →0 R/(σ−1) have equal cohomology dimensions",
            tags: &["dg"],
            run: numerology,
        },
        Entry {
            id: "self-duality",
            claim: "the displayed maps T_p(ξ) ⇄ T_p(ξ)* are mutually inverse Hopf algebra isomorphisms",
            tags: &["hopf", "taft"],
            run: |ctx| self_duality(ctx, DualityFormula::Displayed, "self-duality"),
        },
        Entry {
            id: "self-duality-corrected",
            claim: "g^i x^j ↦ (j)_ξ! Σ_l ξ^{il+ij+lj} (g^l x^j)* is a Hopf algebra isomorphism T_p(ξ) → T_p(ξ)*",
            tags: &["hopf", "taft"],
            run: |ctx| self_duality(ctx, DualityFormula::Corrected, "self-duality-corrected"),
        },
        Entry {
            id: "semisimple-instances",
            claim: "for group algebras S² = id, σ − 1 is diagonalizable and D̂(H) is semisimple",
            tags: &["double", "dg"],
            run: semisimple_instances,
        },
        Entry {
            id: "sigma-diagonalizability",
            claim:
                "σ − 1 is diagonalizable on D₀ and on D̂(kZ/n), not on D₁; its 0-eigenspace matches the stable quotient",
            tags: &["dg", "sweedler"],
            run: diagonalizability,
        },
        Entry {
            id: "stable-matrix-algebra",
            claim: "D₀/(σ − 1) is 4-dimensional with zero radical and one-dimensional center",
            tags: &["sweedler", "dg"],
            run: |ctx| per_block("stable-matrix-algebra", ctx, &[0], |b| b.check_stable_matrix_algebra()),
        },
        Entry {
            id: "stable-quotient",
            claim: "modules over D̂(H)/(σ − 1) are exactly the D̂(H)-modules on which σ acts as 1",
            tags: &["dg", "double"],
            run: stable_quotient,
        },
        Entry {
            id: "sweedler-anticommutator",
            claim: "in D_s, xx′ + x′x = 1 + (−1)^s",
            tags: &["sweedler"],
            run: |ctx| per_block("sweedler-anticommutator", ctx, &[0, 1], |b| b.check_anticommutator()),
        },
        Entry {
            id: "sweedler-centers",
            claim: "center(D₁) has dimension 3 and center(D₁/(x′x)) has dimension 1",
            tags: &["sweedler", "dg"],
            run: sweedler_centers,
        },
        Entry {
            id: "sweedler-minpoly",
            claim: "in D_s, (x′x)² = (1 + (−1)^s) x′x",
            tags: &["sweedler"],
            run: |ctx| per_block("sweedler-minpoly", ctx, &[0, 1], |b| b.check_minpoly()),
        },
        Entry {
            id: "sweedler-sigma-blocks",
            claim: "σ restricts to 1 − x′x, −1 + x′x, 1 + x′x, 1 + x′x on V₀₀, V₁₁, V₀₁, V₁₀",
            tags: &["sweedler"],
            run: sigma_blocks,
        },
        Entry {
            id: "taft-antipode-square",
            claim: "in T_p(ξ), S²(x) = ξ⁻¹x and S²(g) = g",
            tags: &["hopf", "taft"],
            run: taft_antipode_square,
        },
        Entry {
            id: "taft-axioms",
            claim: "T_p(ξ) is a p²-dimensional Hopf algebra",
            tags: &["hopf", "taft"],
            run: taft_axioms,
        },
        Entry {
            id: "taft-double-grading",
            claim: "g′, g give a (Z/p)²-grading in which x, x′ have degrees (−1, 1), (1, −1)",
            tags: &["taft"],
            run: |ctx| taft_double_check("taft-double-grading", ctx, |d| d.check_grading()),
        },
        Entry {
            id: "taft-double-relations",
            claim: "x, x′, g, g′ satisfy the presentation of D̂(T_p(ξ)) and generate it",
            tags: &["taft"],
            run: |ctx| taft_double_check("taft-double-relations", ctx, |d| d.check_relations()),
        },
        Entry {
            id: "taft-double-sigma-action",
            claim: "σ acts on V_ij as Σ_l ξ^{(i−l)(j+l)} / (l)_{ξ⁻¹}! x′^l x^l",
            tags: &["taft"],
            run: |ctx| taft_double_check("taft-double-sigma-action", ctx, |d| d.check_sigma_action()),
        },
        Entry {
            id: "taft-double-split",
            claim: "gg′ is central with (gg′)^p = 1 and splits D̂(T_p(ξ)) into p blocks of dimension p³",
            tags: &["taft"],
            run: |ctx| taft_double_check("taft-double-split", ctx, |d| d.check_split()),
        },
        Entry {
            id: "taft-pivotal",
            claim: "S²(h) = g⁻¹ h g for all h in T_p(ξ)",
            tags: &["classical", "hopf", "taft"],
            run: pivotal,
        },
        Entry {
            id: "uhu-isomorphism",
            claim: "h ⊗ χ ↦ h ⊗ χ(−u) with u = g⁻¹ is an algebra isomorphism D(T_p(ξ)) → D_a(T_p(ξ))",
            tags: &["classical", "double", "taft"],
            run: uhu,
        },
        Entry {
            id: "uqsl2-blocks",
            claim: "each block D̂(T_p(ξ))/(gg′ − ξ^s) is generated by E, F, K satisfying the u_q(sl₂) relations",
            tags: &["taft"],
            run: uqsl2,
        },
    ];
    entries.sort_by_key(|e| e.id);
    entries
}

pub fn find(id: &str) -> Option<Entry> {
    catalogue().into_iter().find(|e| e.id == id)
}
