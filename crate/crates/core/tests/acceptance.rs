//! Acceptance gate: one PASS/FAIL line per criterion, with wall-clock limits.
//! Runs as a plain binary (`harness = false`) and exits nonzero on any FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use simplex_ortho::quadrature::{
    gram_matrix, tetra_monomial_integral, tetra_rule, triangle_monomial_integral, triangle_rule,
};
use simplex_ortho::report::{Status, VerificationReport};
use simplex_ortho::simplex3d::{simplex_norm, three_term_x, Index3, SimplexParams};
use simplex_ortho::suites::{
    grid_1d, grid_2d, grid_2d_classical, grid_3d, grid_classical, RunSpec, SuiteRegistry, SweepConfig,
};
use simplex_ortho::triangle2d::TriangleParams;
use simplex_ortho::{q, qq, MPoly, Rational};

const RULE_TOL: f64 = 1e-12;

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(runs: Vec<RunSpec>) -> Vec<VerificationReport> {
    let reg = SuiteRegistry::default();
    reg.run(
        &SweepConfig {
            runs,
            ..Default::default()
        },
        None,
    )
    .expect("acceptance runs are well formed")
    .reports
}

/// Clean when nothing failed and every expected relation passed at least once.
fn judge(reports: &[VerificationReport], expected: &[String]) -> Outcome {
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| matches!(r.status, Status::Fail | Status::ErratumCandidate))
        .collect();
    let passed: BTreeSet<&str> = reports
        .iter()
        .filter(|r| r.is_pass())
        .map(|r| r.relation.as_str())
        .collect();
    let missing: Vec<&String> = expected.iter().filter(|id| !passed.contains(id.as_str())).collect();
    let checks = reports.iter().filter(|r| r.status != Status::NotApplicable).count();
    let errata = reports.iter().filter(|r| r.status == Status::ErratumCandidate).count();
    let mut detail = format!(
        "{checks} checks, {} relations, {} failures, {errata} erratum candidates",
        passed.len(),
        bad.len()
    );
    if let Some(first) = bad.first() {
        detail.push_str(&format!(
            "; first failure {} at {:?} {:?}",
            first.relation, first.index, first.params
        ));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; never passed: {missing:?}"));
    }
    Outcome {
        ok: bad.is_empty() && missing.is_empty(),
        detail,
    }
}

fn ids(suite: &str) -> Vec<String> {
    SuiteRegistry::default().get(suite).expect("registered").relation_ids()
}

fn filter(ids: Vec<String>, keep: impl Fn(&str) -> bool) -> Vec<String> {
    ids.into_iter().filter(|s| keep(s)).collect()
}

fn zeros() -> SimplexParams {
    SimplexParams::raw(q(0), q(0), q(0), q(0), q(0), q(0))
}

fn univariate() -> Outcome {
    assert!(grid_1d().len() >= 36);
    judge(&run(vec![RunSpec::new("ladder1d", 8, grid_1d())]), &ids("ladder1d"))
}

fn bivariate() -> Outcome {
    let reports = run(vec![
        RunSpec::new("m2d", 6, grid_2d()),
        RunSpec::new("pde", 6, grid_2d()),
        RunSpec::new("reduction", 6, grid_2d_classical()),
    ]);
    let mut expected = ids("m2d");
    expected.extend(["L1", "L2", "B1", "reduction.triangle"].map(String::from));
    judge(&reports, &expected)
}

fn trivariate() -> Outcome {
    let classical: Vec<Vec<Rational>> = grid_classical()
        .into_iter()
        .map(|mut t| {
            t.extend([q(0), q(0)]);
            t
        })
        .collect();
    let reports = run(vec![
        RunSpec::new("theorem1", 5, grid_3d()),
        RunSpec::new("second-order", 5, grid_3d()),
        RunSpec::new("pde", 5, grid_3d()),
        RunSpec::new("reduction", 5, classical),
    ]);
    let mut expected = ids("theorem1");
    expected.extend(filter(ids("second-order"), |s| {
        s.starts_with('N') || s.starts_with('O')
    }));
    expected.extend(["T1", "T2", "T3", "T4", "reduction.member", "reduction.operator"].map(String::from));
    judge(&reports, &expected)
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

fn orthogonality() -> Outcome {
    let grid = grid_3d();
    let tuples: Vec<SimplexParams> = grid[..4]
        .iter()
        .map(|t| {
            SimplexParams::raw(
                t[0].clone(),
                t[1].clone(),
                t[2].clone(),
                t[3].clone(),
                t[4].clone(),
                t[5].clone(),
            )
        })
        .collect();
    let mut reports = run(vec![
        RunSpec::new("orthogonality", 4, grid[..4].to_vec()),
        RunSpec::new("orthogonality", 4, grid_2d()[..4].to_vec()),
    ]);
    // every monomial up to the rule order against the Beta-function oracle
    let order = 8;
    let mut worst: f64 = 0.0;
    for p in &tuples {
        let rule = tetra_rule(p, order).expect("integrable weight");
        for idx in Index3::up_to(order) {
            let e = [idx.n1 as i32, idx.n2 as i32, idx.n3 as i32];
            let got = rule.integrate(|x, y, z| x.powi(e[0]) * y.powi(e[1]) * z.powi(e[2]));
            worst = worst.max(rel_err(
                got,
                tetra_monomial_integral(p, [e[0] as u32, e[1] as u32, e[2] as u32]),
            ));
        }
    }
    for t in &grid_2d()[..4] {
        let p = TriangleParams::raw(t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone());
        let rule = triangle_rule(&p, order).expect("integrable weight");
        for n in 0..=order {
            for j in 0..=n {
                let got = rule.integrate(|x, y| x.powi((n - j) as i32) * y.powi(j as i32));
                worst = worst.max(rel_err(got, triangle_monomial_integral(&p, [n - j, j])));
            }
        }
    }
    let z = zeros();
    let g = gram_matrix(1, &z, &tetra_rule(&z, 2).expect("integrable weight"));
    let n000 = simplex_norm(Index3::new(0, 0, 0), &z).expect("norm").absolute;
    let n100 = simplex_norm(Index3::new(1, 0, 0), &z).expect("norm").absolute;
    let values_ok = rel_err(n000, 1.0 / 6.0) <= 1e-14
        && rel_err(n100, 0.1) <= 1e-14
        && rel_err(g[(0, 0)], 1.0 / 6.0) <= 1e-12
        && rel_err(g[(1, 1)], 0.1) <= 1e-12;
    if !values_ok {
        reports.push(VerificationReport::fail(
            "norm.values",
            vec![],
            &[],
            format!("{n000} {n100}"),
        ));
    }
    let mut out = judge(
        &reports,
        &[
            "gram.diagonal",
            "gram.off-diagonal",
            "gram2d.diagonal",
            "gram2d.off-diagonal",
        ]
        .map(String::from),
    );
    out.detail.push_str(&format!("; worst monomial error {worst:.1e}"));
    out.ok &= worst <= RULE_TOL && values_ok;
    out
}

fn connections() -> Outcome {
    let reports = run(vec![
        RunSpec::new("connections", 4, grid_3d()).with_targets(vec![
            vec![qq(-1, 2)],
            vec![q(0)],
            vec![qq(1, 3)],
            vec![q(1)],
            vec![qq(5, 2)],
        ]),
        RunSpec::new("connections", 3, grid_3d()).with_targets(vec![
            vec![qq(1, 3), q(1), qq(-1, 2), q(0)],
            vec![q(0), qq(-1, 2), q(1), qq(1, 3)],
        ]),
    ]);
    judge(&reports, &ids("connections"))
}

fn recurrence_and_corollaries() -> Outcome {
    let mut reports = run(vec![
        RunSpec::new("three-term", 5, grid_3d()),
        RunSpec::new("corollaries", 4, grid_classical()),
    ]);
    // x P_000 = (1/4)(4x - 1) + 1/4 at zero parameters
    let t = three_term_x(Index3::new(0, 0, 0), &zeros());
    let p100 = MPoly::x().scale(&q(4)) - MPoly::one();
    let rhs = p100.scale(&t.a) + MPoly::one().scale(&t.b);
    reports.push(VerificationReport::compare(
        "three-term.hand-check",
        vec![0, 0, 0],
        &[],
        &MPoly::x(),
        &rhs,
    ));
    if (t.a.clone(), t.b.clone(), t.c.clone()) != (qq(1, 4), qq(1, 4), q(0)) {
        reports.push(VerificationReport::fail(
            "three-term.hand-check",
            vec![0, 0, 0],
            &[],
            "coefficients",
        ));
    }
    let mut expected = ids("three-term");
    expected.extend(ids("corollaries"));
    expected.push("three-term.hand-check".into());
    judge(&reports, &expected)
}

fn monic() -> Outcome {
    let reports = run(vec![
        RunSpec::new("monic", 5, grid_2d()),
        RunSpec::new("monic", 5, grid_3d()),
    ]);
    judge(&reports, &ids("monic"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 univariate ladder relations", Duration::from_secs(10), univariate),
        (
            "2 bivariate relations, PDEs, classical reduction",
            Duration::from_secs(60),
            bivariate,
        ),
        (
            "3 trivariate relations, PDEs, classical reduction",
            Duration::from_secs(300),
            trivariate,
        ),
        ("4 orthogonality and norms", Duration::from_secs(30), orthogonality),
        ("5 connection expansions", Duration::from_secs(120), connections),
        (
            "6 three-term recurrence and corollaries",
            Duration::from_secs(60),
            recurrence_and_corollaries,
        ),
        ("7 monic solutions", Duration::from_secs(20), monic),
    ];
    let mut all = true;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= limit;
        all &= ok;
        println!(
            "{} criterion {name}: {} [{:.2}s, limit {}s]",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
