//! One line per acceptance criterion. Run with
//! `cargo test -p aydc-verify --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use aydc::algebra::{AlgebraElement, StructureAlgebra};
use aydc::dg::{self, TwoTermDga};
use aydc::linalg::{kernel, minimal_polynomial, Matrix};
use aydc::poly::evaluate_at_matrix;
use aydc::report::CheckReport;
use aydc_verify::catalogue::{catalogue, find};
use aydc_verify::config::Config;
use aydc_verify::context::Context;
use aydc_verify::runner;

struct Outcome {
    ok: bool,
    detail: String,
}

fn checks(ctx: &Context, ids: &[&str]) -> Outcome {
    let reports: Vec<CheckReport> = ids
        .iter()
        .map(|id| find(id).unwrap_or_else(|| panic!("unknown id {id}")).run(ctx))
        .collect();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {}", r.id, r.failures().join("; ")))
        .collect();
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            ids.join(", ")
        } else {
            failed.join(" | ")
        },
    }
}

fn within(mut o: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed > limit {
        o.ok = false;
        o.detail = format!("{} (took {elapsed:.1?}, limit {limit:?})", o.detail);
    }
    o
}

fn fresh() -> Context {
    Context::new(Config::default())
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let ctx = fresh();
    let mut o = checks(&ctx, &["hh-separation", "sweedler-centers"]);
    if let Some(r) = find("hh-separation").map(|e| e.run(&ctx)) {
        o.detail = format!(
            "HH⁻¹ dims mixed = {}, stable = {}",
            r.witness("mixed").map_or("?".into(), |v| v.to_string()),
            r.witness("stable").map_or("?".into(), |v| v.to_string())
        );
    }
    within(o, start.elapsed(), Duration::from_secs(5))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let ctx = fresh();
    let o = checks(&ctx, &["taft-double-relations", "taft-double-split"]);
    within(o, start.elapsed(), Duration::from_secs(60))
}

fn ac3() -> Outcome {
    checks(&fresh(), &["taft-double-sigma-action", "sweedler-sigma-blocks"])
}

fn ac4() -> Outcome {
    let ctx = fresh();
    let mut o = checks(&ctx, &["self-duality"]);
    if !o.ok {
        let corrected = checks(&ctx, &["self-duality-corrected"]);
        o.detail = format!(
            "{} (corrected map: {})",
            o.detail,
            if corrected.ok { "Hopf isomorphism" } else { "also fails" }
        );
    }
    o
}

fn ac5() -> Outcome {
    let config = Config {
        ps: vec![3],
        ..Config::default()
    };
    checks(&Context::new(config), &["uqsl2-blocks"])
}

fn ac6() -> Outcome {
    let ctx = fresh();
    let limit = ctx.config().associativity.exhaustive_limit;
    let mut o = checks(&ctx, &["double-assoc-unital", "double-sigma"]);
    if limit < 81 {
        o.ok = false;
        o.detail = format!("{} (associativity not exhaustive for p = 3)", o.detail);
    }
    o
}

fn ac7() -> Outcome {
    checks(
        &fresh(),
        &[
            "classical-straightening",
            "anti-double-sigma",
            "uhu-isomorphism",
            "taft-pivotal",
        ],
    )
}

fn ac8() -> Outcome {
    checks(&fresh(), &["sigma-diagonalizability", "stable-matrix-algebra"])
}

fn properties(ctx: &Context) -> Result<(), String> {
    let mut algebras: Vec<(String, StructureAlgebra, AlgebraElement)> = Vec::new();
    for fx in ctx.fixtures()? {
        let d = ctx.twisted_double(&fx)?;
        algebras.push((fx.name.clone(), d.algebra().clone(), d.sigma().clone()));
    }
    for s in 0..2 {
        let b = ctx.sweedler_block(s)?;
        algebras.push((format!("D{s}"), b.algebra().clone(), b.sigma.clone()));
    }
    for (name, alg, sigma) in &algebras {
        let z = sigma.sub(&alg.one());
        let m = alg.left_mult_matrix(&z);
        for probe in [&m, &alg.right_mult_matrix(sigma)] {
            if kernel(probe).dim() + probe.rank() != probe.cols() {
                return Err(format!("{name}: rank-nullity"));
            }
        }
        let mp = minimal_polynomial(&m).map_err(|e| e.to_string())?;
        if !evaluate_at_matrix(&mp, &m).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("{name}: minimal polynomial does not annihilate"));
        }
        let q = dg::stable_quotient(alg, sigma).map_err(|e| e.to_string())?;
        if !projection_is_algebra_map(alg, &q.algebra, &q.projection) {
            return Err(format!("{name}: stable quotient projection"));
        }
        let c = TwoTermDga::new(alg.clone(), z).map_err(|e| e.to_string())?;
        if !c.hh_minus_one().is_subspace_of(&alg.center()) {
            return Err(format!("{name}: HH⁻¹ not central"));
        }
        let h = c.complex_cohomology();
        if h.dim_h_minus1 != h.dim_h0 {
            return Err(format!("{name}: Euler characteristic"));
        }
    }
    for p in ctx.ps() {
        let d = ctx.taft_double(*p)?;
        for s in 0..*p as i64 {
            let q = d.block_quotient(s).map_err(|e| e.to_string())?;
            if !projection_is_algebra_map(d.algebra(), &q.algebra, &q.projection) {
                return Err(format!("p={p} s={s}: block projection"));
            }
        }
    }
    Ok(())
}

fn projection_is_algebra_map(a: &StructureAlgebra, b: &StructureAlgebra, proj: &Matrix) -> bool {
    let pr = |v: &AlgebraElement| AlgebraElement::from_coords(proj.mul_vec(v.coords()).expect("shape"));
    pr(&a.one()) == b.one()
        && (0..a.dim()).all(|i| {
            (0..a.dim()).all(|j| {
                let (x, y) = (a.basis_element(i), a.basis_element(j));
                pr(&a.mul(&x, &y)) == b.mul(&pr(&x), &pr(&y))
            })
        })
}

fn ac9() -> Outcome {
    let start = Instant::now();
    let ctx = fresh();
    let props = properties(&ctx);
    let report = runner::run(&catalogue(), &ctx);
    let elapsed = start.elapsed();
    let o = match props {
        Ok(()) => Outcome {
            ok: true,
            detail: format!(
                "properties hold; full catalogue {}/{} passed",
                report.summary.passed, report.summary.total
            ),
        },
        Err(e) => Outcome { ok: false, detail: e },
    };
    within(o, elapsed, Duration::from_secs(300))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("AC1", "HH⁻¹ separation of mixed and stable coefficients", ac1),
        ("AC2", "presentation and gg′ splitting of D̂(T_p(ξ)), p = 2, 3", ac2),
        ("AC3", "σ-action on the graded components", ac3),
        ("AC4", "displayed self-duality maps are Hopf isomorphisms", ac4),
        ("AC5", "u_q(sl₂) blocks for p = 3", ac5),
        ("AC6", "twisted double internals on all fixtures", ac6),
        (
            "AC7",
            "classical doubles, σ in D_a(H), uhu isomorphism, pivotal g⁻¹",
            ac7,
        ),
        (
            "AC8",
            "diagonalizability of σ − 1 and the matrix algebra D₀/(σ − 1)",
            ac8,
        ),
        ("AC9", "property suites and full-suite runtime", ac9),
    ];
    let mut all_ok = true;
    for (id, title, f) in criteria {
        let start = Instant::now();
        let o = f();
        all_ok &= o.ok;
        println!(
            "{id} {} {title} ({:.2?}): {}",
            if o.ok { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
