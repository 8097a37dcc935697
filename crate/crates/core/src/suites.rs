//! Verification suites behind a name-keyed registry, and the sweep
//! configuration that drives them.
//!
//! A run pairs a suite with a degree bound and a grid of parameter tuples.
//! The tuple length picks the family: 2 for the interval, 4 for the
//! triangle, 6 for the tetrahedron.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classical::koornwinder_triangle;
use crate::jacobi1d::{self, Jacobi1d, JacobiParams, LadderOpId};
use crate::ladder::{verify_composition, verify_sparse, Composition, Family, ParamTuple};
use crate::quadrature::{verify_orthogonality, verify_triangle_orthogonality};
use crate::ratpoly::{fmt_rational, parse_rational, q, Rational};
use crate::report::{classify_errata, sort_reports, summarize, totals, RelationSummary, Totals, VerificationReport};
use crate::simplex3d::{
    connect_alpha, connect_general, monic_simplex, monic_simplex_hypergeometric, pde_residual_3d, simplex_compositions,
    simplex_pde_operator, simplex_relation, verify_corollary_derivatives, verify_corollary_multiplication,
    verify_corollary_weighted, verify_reduction_ab0, verify_three_term, ConnectionExpansion, DerivativeRelation,
    Index3, MultiplicationRelation, Simplex3d, SimplexOpId, SimplexParams, SimplexPde, WeightedRelation,
};
use crate::triangle2d::{
    leading_coefficient, m_compositions, m_relation, monic_triangle, monic_triangle_hypergeometric, pde_residual,
    triangle_pde_operator, triangle_poly, MOpId, TriIndex, Triangle2d, TriangleParams, TrianglePde,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{suite}` does not accept parameter tuples of length {arity}")]
    Arity { suite: String, arity: usize },
    #[error("config: {0}")]
    Config(String),
}

/// One sweep: a suite, a degree bound and the tuples to run it on.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSpec {
    pub suite: String,
    pub degree: u32,
    pub grid: Vec<Vec<Rational>>,
    /// Extra parameter sets for suites that map between families.
    pub targets: Vec<Vec<Rational>>,
    /// `None` selects every relation of the suite.
    pub relations: Option<BTreeSet<String>>,
}

impl RunSpec {
    pub fn new(suite: &str, degree: u32, grid: Vec<Vec<Rational>>) -> Self {
        Self {
            suite: suite.to_string(),
            degree,
            grid,
            targets: Vec::new(),
            relations: None,
        }
    }

    pub fn with_targets(mut self, targets: Vec<Vec<Rational>>) -> Self {
        self.targets = targets;
        self
    }

    fn wants(&self, id: &str) -> bool {
        self.relations.as_ref().is_none_or(|s| s.contains(id))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepConfig {
    pub runs: Vec<RunSpec>,
    pub output: Option<String>,
    pub threads: Option<usize>,
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn relation_ids(&self) -> Vec<String>;
    fn default_config(&self) -> Vec<RunSpec>;
    /// Reports for one parameter tuple, unsorted.
    fn run_tuple(&self, run: &RunSpec, params: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError>;

    fn run(&self, run: &RunSpec) -> Result<Vec<VerificationReport>, SuiteError> {
        let per_tuple: Result<Vec<_>, _> = run.grid.par_iter().map(|p| self.run_tuple(run, p)).collect();
        let mut out: Vec<VerificationReport> = per_tuple?
            .into_iter()
            .flatten()
            .filter(|r| run.wants(&r.relation))
            .map(|r| r.with_suite(self.name()))
            .collect();
        sort_reports(&mut out);
        Ok(out)
    }
}

fn arity_error(suite: &dyn Suite, arity: usize) -> SuiteError {
    SuiteError::Arity {
        suite: suite.name().to_string(),
        arity,
    }
}

fn par_flat<I: Sync, F>(items: &[I], f: F) -> Vec<VerificationReport>
where
    F: Fn(&I) -> Vec<VerificationReport> + Sync + Send,
{
    items.par_iter().flat_map_iter(&f).collect()
}

fn sparse_and_comps<F: Family>(
    run: &RunSpec,
    indices: &[F::Index],
    p: &F::Params,
    ops: &[F::OpId],
    comps: &[Composition<F::Index, F::OpId, F::Params>],
) -> Vec<VerificationReport> {
    par_flat(indices, |idx| {
        let mut out = Vec::new();
        for &op in ops {
            if run.wants(F::relation(op).op) {
                out.push(verify_sparse::<F>(op, idx, p));
            }
        }
        for c in comps {
            if run.wants(c.id) {
                out.push(verify_composition::<F>(c, idx, p));
            }
        }
        out
    })
}

fn one_d(v: &[Rational]) -> JacobiParams {
    JacobiParams::from_slice(v)
}

fn two_d(v: &[Rational]) -> TriangleParams {
    TriangleParams::from_slice(v)
}

fn three_d(v: &[Rational]) -> SimplexParams {
    if v.len() == 4 {
        SimplexParams::classical(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    } else {
        SimplexParams::from_slice(v)
    }
}

fn grid_product(values: &[Rational], arity: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn r(s: &str) -> Rational {
    parse_rational(s).expect("literal rational")
}

fn tuples(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|row| row.iter().map(|s| r(s)).collect()).collect()
}

/// The univariate sweep grid `{-1/2, -1/4, 0, 1/3, 1, 5/2}^2`.
pub fn grid_1d() -> Vec<Vec<Rational>> {
    grid_product(&["-1/2", "-1/4", "0", "1/3", "1", "5/2"].map(r), 2)
}

/// Twelve triangle tuples `(a, b, c, d)` mixing negative, zero and integer values.
pub fn grid_2d() -> Vec<Vec<Rational>> {
    tuples(&[
        &["0", "0", "0", "0"],
        &["-1/2", "-1/2", "-1/2", "-1/2"],
        &["1/3", "0", "1", "-1/2"],
        &["1", "1/3", "-1/2", "0"],
        &["0", "1", "1/3", "1"],
        &["-1/2", "1/3", "0", "1"],
        &["1", "1", "1", "1"],
        &["1/3", "1/3", "1/3", "1/3"],
        &["0", "-1/2", "1", "1/3"],
        &["1", "0", "-1/2", "1/3"],
        &["-1/2", "1", "1/3", "0"],
        &["1/3", "-1/2", "1", "1"],
    ])
}

/// Eight tetrahedron tuples `(α, β, γ, δ, a, b)`.
pub fn grid_3d() -> Vec<Vec<Rational>> {
    tuples(&[
        &["0", "0", "0", "0", "0", "0"],
        &["1/3", "-1/2", "1", "0", "2", "1/3"],
        &["-1/2", "1/3", "2", "1", "0", "0"],
        &["1", "2", "-1/2", "1/3", "1/3", "-1/2"],
        &["2", "1", "1/3", "-1/2", "-1/2", "2"],
        &["0", "1/3", "1", "2", "-1/2", "0"],
        &["1/3", "1/3", "1/3", "1/3", "1/3", "1/3"],
        &["-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/2"],
    ])
}

/// Six classical tuples `(α, β, γ, δ)` with `a = b = 0` implied.
pub fn grid_classical() -> Vec<Vec<Rational>> {
    tuples(&[
        &["0", "0", "0", "0"],
        &["1/3", "-1/2", "1", "0"],
        &["-1/2", "1/3", "2", "1"],
        &["1", "2", "-1/2", "1/3"],
        &["2", "1", "1/3", "-1/2"],
        &["0", "1/3", "1", "2"],
    ])
}

/// Triangle tuples with `d = 0`, where the family is the classical one.
pub fn grid_2d_classical() -> Vec<Vec<Rational>> {
    tuples(&[
        &["0", "0", "0", "0"],
        &["-1/2", "1/3", "1", "0"],
        &["1", "-1/2", "1/3", "0"],
        &["1/3", "1", "-1/2", "0"],
    ])
}

pub struct Ladder1dSuite;

impl Suite for Ladder1dSuite {
    fn name(&self) -> &'static str {
        "ladder1d"
    }
    fn description(&self) -> &'static str {
        "12 univariate ladder relations and 24 second-order identities"
    }
    fn relation_ids(&self) -> Vec<String> {
        LadderOpId::ALL
            .iter()
            .map(|&op| jacobi1d::relation(op).op.to_string())
            .chain(jacobi1d::compositions().iter().map(|c| c.id.to_string()))
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![RunSpec::new(self.name(), 8, grid_1d())]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 2 {
            return Err(arity_error(self, p.len()));
        }
        let idx: Vec<i64> = (0..=i64::from(run.degree)).collect();
        Ok(sparse_and_comps::<Jacobi1d>(
            run,
            &idx,
            &one_d(p),
            &LadderOpId::ALL,
            &jacobi1d::compositions(),
        ))
    }
}

pub struct M2dSuite;

impl Suite for M2dSuite {
    fn name(&self) -> &'static str {
        "m2d"
    }
    fn description(&self) -> &'static str {
        "24 triangle ladder relations and 24 second-order identities"
    }
    fn relation_ids(&self) -> Vec<String> {
        MOpId::ALL
            .iter()
            .map(|&op| m_relation(op).op.to_string())
            .chain(m_compositions().iter().map(|c| c.id.to_string()))
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![RunSpec::new(self.name(), 6, grid_2d())]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 4 {
            return Err(arity_error(self, p.len()));
        }
        let idx = TriIndex::up_to(run.degree);
        Ok(sparse_and_comps::<Triangle2d>(
            run,
            &idx,
            &two_d(p),
            &MOpId::ALL,
            &m_compositions(),
        ))
    }
}

pub struct TetraLadderSuite;

impl Suite for TetraLadderSuite {
    fn name(&self) -> &'static str {
        "theorem1"
    }
    fn description(&self) -> &'static str {
        "36 first-order ladder relations of the tetrahedral family"
    }
    fn relation_ids(&self) -> Vec<String> {
        SimplexOpId::ALL
            .iter()
            .map(|&op| simplex_relation(op).op.to_string())
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![RunSpec::new(self.name(), 5, grid_3d())]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 6 {
            return Err(arity_error(self, p.len()));
        }
        let idx = Index3::up_to(run.degree);
        Ok(sparse_and_comps::<Simplex3d>(
            run,
            &idx,
            &three_d(p),
            &SimplexOpId::ALL,
            &[],
        ))
    }
}

pub struct SecondOrderSuite;

impl Suite for SecondOrderSuite {
    fn name(&self) -> &'static str {
        "second-order"
    }
    fn description(&self) -> &'static str {
        "second-order composition identities for the family selected by tuple length"
    }
    fn relation_ids(&self) -> Vec<String> {
        jacobi1d::compositions()
            .iter()
            .map(|c| c.id)
            .chain(m_compositions().iter().map(|c| c.id))
            .chain(simplex_compositions().iter().map(|c| c.id))
            .map(str::to_string)
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 8, grid_1d()),
            RunSpec::new(self.name(), 6, grid_2d()),
            RunSpec::new(self.name(), 5, grid_3d()),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        match p.len() {
            2 => {
                let idx: Vec<i64> = (0..=i64::from(run.degree)).collect();
                Ok(sparse_and_comps::<Jacobi1d>(
                    run,
                    &idx,
                    &one_d(p),
                    &[],
                    &jacobi1d::compositions(),
                ))
            }
            4 => Ok(sparse_and_comps::<Triangle2d>(
                run,
                &TriIndex::up_to(run.degree),
                &two_d(p),
                &[],
                &m_compositions(),
            )),
            6 => Ok(sparse_and_comps::<Simplex3d>(
                run,
                &Index3::up_to(run.degree),
                &three_d(p),
                &[],
                &simplex_compositions(),
            )),
            n => Err(arity_error(self, n)),
        }
    }
}

pub struct PdeSuite;

impl Suite for PdeSuite {
    fn name(&self) -> &'static str {
        "pde"
    }
    fn description(&self) -> &'static str {
        "cleared PDE residuals: L1, L2, B1 on the triangle and T1-T4 on the tetrahedron"
    }
    fn relation_ids(&self) -> Vec<String> {
        TrianglePde::ALL
            .iter()
            .map(|w| w.name())
            .chain(SimplexPde::ALL.iter().map(|w| w.name()))
            .map(str::to_string)
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 6, grid_2d()),
            RunSpec::new(self.name(), 5, grid_3d()),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        match p.len() {
            4 => {
                let tp = two_d(p);
                Ok(par_flat(&TriIndex::up_to(run.degree), |&idx| {
                    TrianglePde::ALL
                        .iter()
                        .map(|&w| {
                            VerificationReport::zero_check(w.name(), vec![idx.n, idx.k], p, &pde_residual(w, idx, &tp))
                        })
                        .collect()
                }))
            }
            6 => {
                let sp = three_d(p);
                Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
                    SimplexPde::ALL
                        .iter()
                        .map(|&w| {
                            VerificationReport::zero_check(w.name(), idx.to_vec(), p, &pde_residual_3d(w, idx, &sp))
                        })
                        .collect()
                }))
            }
            n => Err(arity_error(self, n)),
        }
    }
}

pub struct CorollariesSuite;

impl Suite for CorollariesSuite {
    fn name(&self) -> &'static str {
        "corollaries"
    }
    fn description(&self) -> &'static str {
        "derivative, weighted-derivative and multiplication relations of the classical family"
    }
    fn relation_ids(&self) -> Vec<String> {
        DerivativeRelation::ALL
            .iter()
            .map(|w| w.name())
            .chain(WeightedRelation::ALL.iter().map(|w| w.name()))
            .chain(MultiplicationRelation::ALL.iter().map(|w| w.name()))
            .map(str::to_string)
            .collect()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![RunSpec::new(self.name(), 4, grid_classical())]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 4 && p.len() != 6 {
            return Err(arity_error(self, p.len()));
        }
        let sp = three_d(p);
        Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
            let mut out = Vec::new();
            for w in DerivativeRelation::ALL {
                out.push(verify_corollary_derivatives(w, idx, &sp));
            }
            for w in WeightedRelation::ALL {
                out.push(verify_corollary_weighted(w, idx, &sp));
            }
            for w in MultiplicationRelation::ALL {
                out.push(verify_corollary_multiplication(w, idx, &sp));
            }
            out
        }))
    }
}

/// Checks that an expansion onto the source parameters is the source itself.
fn identity_report(relation: &str, ex: &ConnectionExpansion) -> VerificationReport {
    let (idx, p) = &ex.source;
    let nonzero: Vec<_> = ex.terms.iter().filter(|t| t.coeff != q(0)).collect();
    let ok = nonzero.len() == 1
        && nonzero[0].index == *idx
        && nonzero[0].coeff == q(1)
        && nonzero[0].one_minus_x == 0
        && nonzero[0].one_minus_xy == 0;
    if ok {
        VerificationReport::pass(relation, idx.to_vec(), &p.to_vec())
    } else {
        let detail = nonzero
            .iter()
            .map(|t| format!("{:?}: {}", t.index.to_vec(), fmt_rational(&t.coeff)))
            .collect::<Vec<_>>()
            .join("; ");
        VerificationReport::fail(relation, idx.to_vec(), &p.to_vec(), detail)
    }
}

pub struct ConnectionsSuite;

impl Suite for ConnectionsSuite {
    fn name(&self) -> &'static str {
        "connections"
    }
    fn description(&self) -> &'static str {
        "connection expansions reassembled exactly; targets of length 1 give ξ, length 4 give (φ, θ, η, ξ)"
    }
    fn relation_ids(&self) -> Vec<String> {
        ["connect.alpha", "connect.general", "connect.identity"]
            .map(String::from)
            .to_vec()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 4, grid_3d()).with_targets(tuples(&[&["-1/2"], &["0"], &["1"], &["5/2"]])),
            RunSpec::new(self.name(), 3, grid_3d())
                .with_targets(tuples(&[&["1/3", "1", "-1/2", "0"], &["0", "-1/2", "1", "1/3"]])),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 6 {
            return Err(arity_error(self, p.len()));
        }
        if let Some(t) = run.targets.iter().find(|t| t.len() != 1 && t.len() != 4) {
            return Err(SuiteError::Config(format!("connection target of length {}", t.len())));
        }
        let sp = three_d(p);
        let fail = |rel: &str, idx: Index3, e: crate::error::MathError| {
            VerificationReport::fail(rel, idx.to_vec(), p, e.to_string())
        };
        Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
            let mut out = Vec::new();
            for t in &run.targets {
                let (rel, ex) = if t.len() == 1 {
                    ("connect.alpha", connect_alpha(idx, &sp, &t[0]))
                } else {
                    (
                        "connect.general",
                        connect_general(idx, &sp, [t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone()]),
                    )
                };
                let mut report = match ex {
                    Ok(ex) => ex.verify(rel),
                    Err(e) => fail(rel, idx, e),
                };
                let target: Vec<String> = t.iter().map(fmt_rational).collect();
                report.detail = Some(match report.detail {
                    Some(d) => format!("target {} {d}", target.join(",")),
                    None => format!("target {}", target.join(",")),
                });
                out.push(report);
            }
            out.push(match connect_alpha(idx, &sp, &sp.alpha) {
                Ok(ex) => identity_report("connect.identity", &ex),
                Err(e) => fail("connect.identity", idx, e),
            });
            let own = [sp.alpha.clone(), sp.beta.clone(), sp.gamma.clone(), sp.delta.clone()];
            out.push(match connect_general(idx, &sp, own) {
                Ok(ex) => identity_report("connect.identity", &ex),
                Err(e) => fail("connect.identity", idx, e),
            });
            out
        }))
    }
}

pub struct ThreeTermSuite;

impl Suite for ThreeTermSuite {
    fn name(&self) -> &'static str {
        "three-term"
    }
    fn description(&self) -> &'static str {
        "three-term recurrence for multiplication by x"
    }
    fn relation_ids(&self) -> Vec<String> {
        vec!["three-term-x".to_string()]
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![RunSpec::new(self.name(), 5, grid_3d())]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        if p.len() != 6 {
            return Err(arity_error(self, p.len()));
        }
        let sp = three_d(p);
        Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
            vec![verify_three_term(idx, &sp)]
        }))
    }
}

pub struct MonicSuite;

impl Suite for MonicSuite {
    fn name(&self) -> &'static str {
        "monic"
    }
    fn description(&self) -> &'static str {
        "monic PDE solutions: zero residual, unit leading coefficient, agreement with the hypergeometric form"
    }
    fn relation_ids(&self) -> Vec<String> {
        ["monic.residual", "monic.leading", "monic.hypergeometric"]
            .map(String::from)
            .to_vec()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 5, grid_2d()),
            RunSpec::new(self.name(), 5, grid_3d()),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        match p.len() {
            4 => {
                let tp = two_d(p);
                Ok(par_flat(&TriIndex::up_to(run.degree), |&idx| {
                    let index = vec![idx.n, idx.k];
                    match (monic_triangle(idx, &tp), monic_triangle_hypergeometric(idx, &tp)) {
                        (Ok(m), Ok(h)) => monic_reports(
                            index,
                            p,
                            &triangle_pde_operator(TrianglePde::B1, idx, &tp).numerator(&m),
                            leading_coefficient(&m, idx),
                            &m,
                            &h,
                        ),
                        (Err(e), _) | (_, Err(e)) => {
                            vec![VerificationReport::fail("monic.residual", index, p, e.to_string())]
                        }
                    }
                }))
            }
            6 => {
                let sp = three_d(p);
                Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
                    match (monic_simplex(idx, &sp), monic_simplex_hypergeometric(idx, &sp)) {
                        (Ok(m), Ok(h)) => monic_reports(
                            idx.to_vec(),
                            p,
                            &simplex_pde_operator(SimplexPde::T4, idx, &sp).numerator(&m),
                            m.coeff([idx.n1 as u32, idx.n2 as u32, idx.n3 as u32]),
                            &m,
                            &h,
                        ),
                        (Err(e), _) | (_, Err(e)) => {
                            vec![VerificationReport::fail(
                                "monic.residual",
                                idx.to_vec(),
                                p,
                                e.to_string(),
                            )]
                        }
                    }
                }))
            }
            n => Err(arity_error(self, n)),
        }
    }
}

fn monic_reports(
    index: Vec<i64>,
    p: &[Rational],
    residual: &crate::MPoly,
    lead: Rational,
    m: &crate::MPoly,
    h: &crate::MPoly,
) -> Vec<VerificationReport> {
    let leading = if lead == q(1) {
        VerificationReport::pass("monic.leading", index.clone(), p)
    } else {
        VerificationReport::fail(
            "monic.leading",
            index.clone(),
            p,
            format!("leading coefficient {}", fmt_rational(&lead)),
        )
    };
    vec![
        VerificationReport::zero_check("monic.residual", index.clone(), p, residual),
        leading,
        VerificationReport::compare("monic.hypergeometric", index, p, m, h),
    ]
}

pub struct ReductionSuite;

impl Suite for ReductionSuite {
    fn name(&self) -> &'static str {
        "reduction"
    }
    fn description(&self) -> &'static str {
        "members at d = 0 (triangle) and a = b = 0 (tetrahedron) equal the classical construction"
    }
    fn relation_ids(&self) -> Vec<String> {
        ["reduction.triangle", "reduction.member", "reduction.operator"]
            .map(String::from)
            .to_vec()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 6, grid_2d_classical()),
            RunSpec::new(
                self.name(),
                5,
                grid_classical()
                    .into_iter()
                    .map(|mut t| {
                        t.extend([q(0), q(0)]);
                        t
                    })
                    .collect(),
            ),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        match p.len() {
            4 => {
                let tp = two_d(p);
                Ok(par_flat(&TriIndex::up_to(run.degree), |&idx| {
                    let index = vec![idx.n, idx.k];
                    if tp.d != q(0) {
                        return vec![VerificationReport::not_applicable(
                            "reduction.triangle",
                            index,
                            p,
                            "requires d = 0",
                        )];
                    }
                    let k = koornwinder_triangle(idx.n as u32, idx.k as u32, &tp.a, &tp.b, &tp.c);
                    vec![VerificationReport::compare(
                        "reduction.triangle",
                        index,
                        p,
                        &triangle_poly(idx, &tp),
                        &k,
                    )]
                }))
            }
            6 => {
                let sp = three_d(p);
                Ok(par_flat(&Index3::up_to(run.degree), |&idx| {
                    verify_reduction_ab0(idx, &sp)
                }))
            }
            n => Err(arity_error(self, n)),
        }
    }
}

pub struct OrthogonalitySuite;

impl Suite for OrthogonalitySuite {
    fn name(&self) -> &'static str {
        "orthogonality"
    }
    fn description(&self) -> &'static str {
        "quadrature Gram matrices: diagonal, with the closed-form norms on the diagonal"
    }
    fn relation_ids(&self) -> Vec<String> {
        [
            "gram.diagonal",
            "gram.off-diagonal",
            "gram2d.diagonal",
            "gram2d.off-diagonal",
        ]
        .map(String::from)
        .to_vec()
    }
    fn default_config(&self) -> Vec<RunSpec> {
        vec![
            RunSpec::new(self.name(), 4, grid_2d()),
            RunSpec::new(self.name(), 4, grid_3d()[..6].to_vec()),
        ]
    }
    fn run_tuple(&self, run: &RunSpec, p: &[Rational]) -> Result<Vec<VerificationReport>, SuiteError> {
        match p.len() {
            4 => Ok(verify_triangle_orthogonality(run.degree, &two_d(p))),
            6 => Ok(verify_orthogonality(run.degree, &three_d(p))),
            n => Err(arity_error(self, n)),
        }
    }
}

/// Name-keyed collection of suites.
pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut reg = Self {
            suites: BTreeMap::new(),
        };
        reg.register(Box::new(Ladder1dSuite));
        reg.register(Box::new(M2dSuite));
        reg.register(Box::new(TetraLadderSuite));
        reg.register(Box::new(SecondOrderSuite));
        reg.register(Box::new(PdeSuite));
        reg.register(Box::new(CorollariesSuite));
        reg.register(Box::new(ConnectionsSuite));
        reg.register(Box::new(ThreeTermSuite));
        reg.register(Box::new(MonicSuite));
        reg.register(Box::new(ReductionSuite));
        reg.register(Box::new(OrthogonalitySuite));
        reg
    }
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        Self {
            suites: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.insert(suite.name(), suite);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.keys().copied().collect()
    }

    /// Every suite's default runs, in name order.
    pub fn default_config(&self) -> SweepConfig {
        SweepConfig {
            runs: self.suites.values().flat_map(|s| s.default_config()).collect(),
            ..Default::default()
        }
    }

    /// Runs the config, or only its runs for `only` when given. Reports come
    /// back sorted with erratum candidates classified.
    pub fn run(&self, config: &SweepConfig, only: Option<&str>) -> Result<SweepOutcome, SuiteError> {
        if let Some(name) = only {
            self.get(name)
                .ok_or_else(|| SuiteError::UnknownSuite(name.to_string()))?;
        }
        let mut reports = Vec::new();
        for run in config.runs.iter().filter(|r| only.is_none_or(|n| n == r.suite)) {
            let suite = self
                .get(&run.suite)
                .ok_or_else(|| SuiteError::UnknownSuite(run.suite.clone()))?;
            reports.extend(suite.run(run)?);
        }
        sort_reports(&mut reports);
        classify_errata(&mut reports);
        Ok(SweepOutcome::new(reports))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    pub totals: Totals,
    pub summary: Vec<RelationSummary>,
    pub reports: Vec<VerificationReport>,
}

impl SweepOutcome {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        Self {
            totals: totals(&reports),
            summary: summarize(&reports),
            reports,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.totals.fail == 0 && self.totals.erratum_candidate == 0
    }

    /// Process exit status: 0 clean, 1 on any plain failure, 2 when every
    /// failure is an erratum candidate.
    pub fn exit_code(&self) -> u8 {
        if self.totals.fail > 0 {
            1
        } else if self.totals.erratum_candidate > 0 {
            2
        } else {
            0
        }
    }
}

// JSON shapes of the config file.

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Int(i64),
    Str(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawGrid {
    List(Vec<Vec<RawValue>>),
    Product { product: Vec<RawValue>, arity: usize },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRelations {
    Named(String),
    List(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRun {
    suite: Option<String>,
    degree: u32,
    grid: RawGrid,
    #[serde(default)]
    targets: Vec<Vec<RawValue>>,
    relations: Option<RawRelations>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    runs: Vec<RawRun>,
    output: Option<String>,
    threads: Option<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFile {
    Multi(RawConfig),
    Single(RawRun),
}

fn value(v: &RawValue) -> Result<Rational, SuiteError> {
    match v {
        RawValue::Int(i) => Ok(q(*i)),
        RawValue::Str(s) => parse_rational(s).ok_or_else(|| SuiteError::Config(format!("not a rational: `{s}`"))),
    }
}

fn row(vs: &[RawValue]) -> Result<Vec<Rational>, SuiteError> {
    vs.iter().map(value).collect()
}

fn convert_run(raw: RawRun, default_suite: Option<&str>) -> Result<RunSpec, SuiteError> {
    let suite = raw
        .suite
        .or_else(|| default_suite.map(str::to_string))
        .ok_or_else(|| SuiteError::Config("run without a suite".into()))?;
    let grid = match raw.grid {
        RawGrid::List(rows) => rows.iter().map(|r| row(r)).collect::<Result<Vec<_>, _>>()?,
        RawGrid::Product { product, arity } => grid_product(&row(&product)?, arity),
    };
    if grid.is_empty() {
        return Err(SuiteError::Config(format!("empty grid for suite `{suite}`")));
    }
    if let Some(v) = grid.iter().flatten().find(|v| **v <= q(-1)) {
        return Err(SuiteError::Config(format!(
            "grid value {} is not > -1",
            fmt_rational(v)
        )));
    }
    let relations = match raw.relations {
        None => None,
        Some(RawRelations::Named(s)) if s == "all" => None,
        Some(RawRelations::Named(s)) => Some(BTreeSet::from([s])),
        Some(RawRelations::List(l)) => Some(l.into_iter().collect()),
    };
    Ok(RunSpec {
        suite,
        degree: raw.degree,
        grid,
        targets: raw.targets.iter().map(|r| row(r)).collect::<Result<_, _>>()?,
        relations,
    })
}

/// Parses a config: either `{"runs": [...], "output"?, "threads"?}` or a
/// single bare run. Runs without a `suite` field take `default_suite`.
pub fn parse_config(text: &str, default_suite: Option<&str>) -> Result<SweepConfig, SuiteError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| SuiteError::Config(e.to_string()))?;
    match raw {
        RawFile::Multi(c) => Ok(SweepConfig {
            runs: c
                .runs
                .into_iter()
                .map(|r| convert_run(r, default_suite))
                .collect::<Result<_, _>>()?,
            output: c.output,
            threads: c.threads,
        }),
        RawFile::Single(r) => Ok(SweepConfig {
            runs: vec![convert_run(r, default_suite)?],
            ..Default::default()
        }),
    }
}

/// JSON with keys in sorted order, so equal inputs give identical bytes.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable report");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable report");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_every_suite() {
        let reg = SuiteRegistry::default();
        for name in [
            "ladder1d",
            "m2d",
            "theorem1",
            "second-order",
            "pde",
            "corollaries",
            "connections",
            "three-term",
            "monic",
            "reduction",
            "orthogonality",
        ] {
            assert!(reg.get(name).is_some(), "{name}");
        }
        assert_eq!(reg.get("theorem1").unwrap().relation_ids().len(), 36);
        assert_eq!(reg.get("ladder1d").unwrap().relation_ids().len(), 36);
    }

    #[test]
    fn config_shapes() {
        let c = parse_config(
            r#"{"degree": 1, "grid": {"product": ["0", "1/2"], "arity": 2}}"#,
            Some("ladder1d"),
        )
        .unwrap();
        assert_eq!(c.runs[0].grid.len(), 4);
        assert_eq!(c.runs[0].suite, "ladder1d");
        let c = parse_config(
            r#"{"runs": [{"suite": "pde", "degree": 2, "grid": [[0, "1/3", "-1/2", 1]], "relations": ["B1"]}], "threads": 2}"#,
            None,
        )
        .unwrap();
        assert_eq!(c.threads, Some(2));
        assert_eq!(c.runs[0].grid[0][1], crate::qq(1, 3));
        assert!(parse_config(r#"{"degree": 1, "grid": [["-1", "0"]]}"#, Some("ladder1d")).is_err());
        assert!(parse_config("{", None).is_err());
        assert!(parse_config(r#"{"degree": 1, "grid": [["0", "0"]]}"#, None).is_err());
    }

    #[test]
    fn small_runs_pass() {
        let reg = SuiteRegistry::default();
        let mut cfg = SweepConfig::default();
        for name in reg.names() {
            for mut run in reg.get(name).unwrap().default_config() {
                run.degree = run.degree.min(1);
                run.grid.truncate(2);
                cfg.runs.push(run);
            }
        }
        let out = reg.run(&cfg, None).unwrap();
        assert!(out.is_clean(), "{:?}", out.summary);
        assert!(out.totals.pass > 0);
        let only = reg.run(&cfg, Some("pde")).unwrap();
        assert!(only.reports.iter().all(|r| r.suite.as_deref() == Some("pde")));
    }

    #[test]
    fn relation_filter_and_arity() {
        let reg = SuiteRegistry::default();
        let mut run = RunSpec::new("pde", 2, grid_2d()[..1].to_vec());
        run.relations = Some(BTreeSet::from(["B1".to_string()]));
        let out = reg
            .run(
                &SweepConfig {
                    runs: vec![run],
                    ..Default::default()
                },
                None,
            )
            .unwrap();
        assert!(out.reports.iter().all(|r| r.relation == "B1"));
        let bad = RunSpec::new("theorem1", 1, grid_1d()[..1].to_vec());
        assert!(matches!(
            reg.run(
                &SweepConfig {
                    runs: vec![bad],
                    ..Default::default()
                },
                None
            ),
            Err(SuiteError::Arity { .. })
        ));
    }
}
