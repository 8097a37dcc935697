//! Gauss-Jacobi quadrature on `(0,1)` and collapsed tensor rules on the
//! triangle and tetrahedron.
//!
//! This is the only floating-point part of the crate. Rules integrate the
//! family weights exactly (up to round-off) so Gram matrices can be compared
//! against the closed-form norms.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::MathError;
use crate::jacobi1d::{h0, JacobiParams};
use crate::ladder::ParamTuple;
use crate::ratpoly::{q, Rational};
use crate::report::VerificationReport;
use crate::simplex3d::{simplex_norm, simplex_poly, Index3, SimplexParams};
use crate::special::pochhammer;
use crate::triangle2d::{triangle_norm_abs, triangle_poly, TriIndex, TriangleParams};

/// Off-diagonal tolerance, relative to `sqrt(G_ii G_jj)`.
pub const GRAM_OFFDIAG_TOL: f64 = 1e-10;
/// Diagonal tolerance, relative to the closed-form norm.
pub const GRAM_DIAG_TOL: f64 = 1e-10;

/// `m`-point rule for the weight `(1-x)^a x^b` on `(0,1)`.
#[derive(Clone, Debug, Serialize)]
pub struct QuadRule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exactness: u32,
}

impl QuadRule1D {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// monic recurrence, weights the squared first eigenvector components times
/// the total mass.
pub fn gauss_jacobi_01(m: usize, a: &Rational, b: &Rational) -> Result<QuadRule1D, MathError> {
    if m == 0 {
        return Err(MathError::InvalidParameter("rule needs at least one point".into()));
    }
    if *a <= q(-1) || *b <= q(-1) {
        return Err(MathError::DegenerateParameters(format!("(1-x)^{a} x^{b}")));
    }
    let mass = h0(&JacobiParams::raw(a.clone(), b.clone()));
    let (af, bf) = (to_f64(a), to_f64(b));
    let s = af + bf;
    // Recurrence on [-1,1] for (1-t)^a (1+t)^b, then t = 2x - 1.
    let mut jm = DMatrix::<f64>::zeros(m, m);
    for k in 0..m {
        let kf = k as f64;
        let diag_t = if k == 0 {
            (bf - af) / (s + 2.0)
        } else {
            (bf * bf - af * af) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0))
        };
        jm[(k, k)] = (1.0 + diag_t) / 2.0;
        if k + 1 < m {
            let j = kf + 1.0;
            let off_sq = if k == 0 {
                4.0 * (1.0 + af) * (1.0 + bf) / ((2.0 + s).powi(2) * (3.0 + s))
            } else {
                let t = 2.0 * j + s;
                4.0 * j * (j + af) * (j + bf) * (j + s) / (t * t * (t + 1.0) * (t - 1.0))
            };
            let off = off_sq.sqrt() / 2.0;
            jm[(k, k + 1)] = off;
            jm[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::try_new(jm, f64::EPSILON, 10_000)
        .ok_or_else(|| MathError::ConvergenceFailure(format!("m = {m}, a = {a}, b = {b}")))?;
    let mut pairs: Vec<(f64, f64)> = (0..m)
        .map(|i| (eig.eigenvalues[i], mass * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(QuadRule1D {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        exactness: (2 * m - 1) as u32,
    })
}

fn points_for(order: u32) -> usize {
    order as usize / 2 + 1
}

/// Collapsed tensor rule on the tetrahedron.
#[derive(Clone, Debug, Serialize)]
pub struct SimplexRule {
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
    pub order: u32,
}

impl SimplexRule {
    pub fn integrate(&self, f: impl Fn(f64, f64, f64) -> f64) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(p, w)| w * f(p[0], p[1], p[2]))
            .sum()
    }
}

/// Collapsed tensor rule on the triangle.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleRule {
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub order: u32,
}

impl TriangleRule {
    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(p, w)| w * f(p[0], p[1]))
            .sum()
    }
}

fn tetra_exponents(p: &SimplexParams) -> [(Rational, Rational); 3] {
    [
        (&p.beta + &p.gamma + &p.delta + &p.a + &p.b + q(2), p.alpha.clone()),
        (&p.gamma + &p.delta + &p.b + q(1), p.beta.clone()),
        (p.delta.clone(), p.gamma.clone()),
    ]
}

fn triangle_exponents(p: &TriangleParams) -> [(Rational, Rational); 2] {
    [(&p.b + &p.c + &p.d + q(1), p.a.clone()), (p.c.clone(), p.b.clone())]
}

/// Exact for every polynomial of total degree `<= order` against the
/// six-parameter weight.
pub fn tetra_rule(p: &SimplexParams, order: u32) -> Result<SimplexRule, MathError> {
    let m = points_for(order);
    let [eu, ev, et] = tetra_exponents(p);
    let ru = gauss_jacobi_01(m, &eu.0, &eu.1)?;
    let rv = gauss_jacobi_01(m, &ev.0, &ev.1)?;
    let rt = gauss_jacobi_01(m, &et.0, &et.1)?;
    let mut points = Vec::with_capacity(m * m * m);
    let mut weights = Vec::with_capacity(m * m * m);
    for (u, wu) in ru.nodes.iter().zip(&ru.weights) {
        for (v, wv) in rv.nodes.iter().zip(&rv.weights) {
            for (t, wt) in rt.nodes.iter().zip(&rt.weights) {
                points.push([*u, v * (1.0 - u), t * (1.0 - u) * (1.0 - v)]);
                weights.push(wu * wv * wt);
            }
        }
    }
    Ok(SimplexRule { points, weights, order })
}

pub fn triangle_rule(p: &TriangleParams, order: u32) -> Result<TriangleRule, MathError> {
    let m = points_for(order);
    let [eu, ev] = triangle_exponents(p);
    let ru = gauss_jacobi_01(m, &eu.0, &eu.1)?;
    let rv = gauss_jacobi_01(m, &ev.0, &ev.1)?;
    let mut points = Vec::with_capacity(m * m);
    let mut weights = Vec::with_capacity(m * m);
    for (u, wu) in ru.nodes.iter().zip(&ru.weights) {
        for (v, wv) in rv.nodes.iter().zip(&rv.weights) {
            points.push([*u, v * (1.0 - u)]);
            weights.push(wu * wv);
        }
    }
    Ok(TriangleRule { points, weights, order })
}

/// `B(x+i, y+j)` as `B(x, y)` times an exact rational factor.
fn beta_shifted(x: &Rational, y: &Rational, i: u32, j: u32) -> f64 {
    let base = h0(&JacobiParams::raw(y - q(1), x - q(1)));
    let ratio = pochhammer(x, i) * pochhammer(y, j) / pochhammer(&(x + y), i + j);
    base * to_f64(&ratio)
}

/// Weighted integral of `x^i y^j z^k` over the tetrahedron.
pub fn tetra_monomial_integral(p: &SimplexParams, [i, j, k]: [u32; 3]) -> f64 {
    let [eu, ev, et] = tetra_exponents(p);
    beta_shifted(&(&eu.1 + q(1)), &(&eu.0 + q(1)), i, j + k)
        * beta_shifted(&(&ev.1 + q(1)), &(&ev.0 + q(1)), j, k)
        * beta_shifted(&(&et.1 + q(1)), &(&et.0 + q(1)), k, 0)
}

/// Weighted integral of `x^i y^j` over the triangle.
pub fn triangle_monomial_integral(p: &TriangleParams, [i, j]: [u32; 2]) -> f64 {
    let [eu, ev] = triangle_exponents(p);
    beta_shifted(&(&eu.1 + q(1)), &(&eu.0 + q(1)), i, j) * beta_shifted(&(&ev.1 + q(1)), &(&ev.0 + q(1)), j, 0)
}

fn assemble(values: &[Vec<f64>], weights: &[f64]) -> DMatrix<f64> {
    let dim = values.len();
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    let entries: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| {
            values[i]
                .iter()
                .zip(&values[j])
                .zip(weights)
                .map(|((a, b), w)| a * b * w)
                .sum()
        })
        .collect();
    let mut g = DMatrix::zeros(dim, dim);
    for (&(i, j), v) in pairs.iter().zip(entries) {
        g[(i, j)] = v;
        g[(j, i)] = v;
    }
    g
}

/// Gram matrix of all members of total degree `<= n_max`, in
/// [`Index3::up_to`] order.
pub fn gram_matrix(n_max: u32, p: &SimplexParams, rule: &SimplexRule) -> DMatrix<f64> {
    let values: Vec<Vec<f64>> = Index3::up_to(n_max)
        .par_iter()
        .map(|&idx| {
            let f = simplex_poly(idx, p).to_f64();
            rule.points.iter().map(|pt| f.eval(pt[0], pt[1], pt[2])).collect()
        })
        .collect();
    assemble(&values, &rule.weights)
}

/// Gram matrix on the triangle, in [`TriIndex::up_to`] order.
pub fn triangle_gram_matrix(n_max: u32, p: &TriangleParams, rule: &TriangleRule) -> DMatrix<f64> {
    let values: Vec<Vec<f64>> = TriIndex::up_to(n_max)
        .par_iter()
        .map(|&idx| {
            let f = triangle_poly(idx, p).to_f64();
            rule.points.iter().map(|pt| f.eval(pt[0], pt[1], 0.0)).collect()
        })
        .collect();
    assemble(&values, &rule.weights)
}

fn gram_reports(
    g: &DMatrix<f64>,
    indices: &[Vec<i64>],
    norms: &[Result<f64, MathError>],
    params: &[Rational],
) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (i, idx) in indices.iter().enumerate() {
        let diag = match &norms[i] {
            Ok(h) => {
                let rel = (g[(i, i)] - h).abs() / h.abs();
                if rel <= GRAM_DIAG_TOL {
                    VerificationReport::pass("gram.diagonal", idx.clone(), params)
                } else {
                    VerificationReport::fail(
                        "gram.diagonal",
                        idx.clone(),
                        params,
                        format!(
                            "quadrature {:e}, closed form {:e}, relative error {rel:e}",
                            g[(i, i)],
                            h
                        ),
                    )
                }
            }
            Err(e) => VerificationReport::fail("gram.diagonal", idx.clone(), params, e.to_string()),
        };
        out.push(diag);
        let mut worst = (0.0f64, i);
        for j in 0..g.ncols() {
            if j != i {
                let scaled = g[(i, j)].abs() / (g[(i, i)] * g[(j, j)]).abs().sqrt();
                if scaled > worst.0 {
                    worst = (scaled, j);
                }
            }
        }
        out.push(if worst.0 <= GRAM_OFFDIAG_TOL {
            VerificationReport::pass("gram.off-diagonal", idx.clone(), params)
        } else {
            VerificationReport::fail(
                "gram.off-diagonal",
                idx.clone(),
                params,
                format!("normalized entry {:e} against {:?}", worst.0, indices[worst.1]),
            )
        });
    }
    out
}

/// Orthogonality and norm checks for the tetrahedral family up to degree `n_max`.
pub fn verify_orthogonality(n_max: u32, p: &SimplexParams) -> Vec<VerificationReport> {
    let params = p.to_vec();
    let rule = match tetra_rule(p, 2 * n_max) {
        Ok(r) => r,
        Err(e) => {
            return vec![VerificationReport::not_applicable(
                "gram",
                vec![],
                &params,
                e.to_string(),
            )]
        }
    };
    let g = gram_matrix(n_max, p, &rule);
    let idx = Index3::up_to(n_max);
    let norms: Vec<_> = idx.iter().map(|&i| simplex_norm(i, p).map(|n| n.absolute)).collect();
    let indices: Vec<Vec<i64>> = idx.iter().map(|i| i.to_vec()).collect();
    gram_reports(&g, &indices, &norms, &params)
}

/// The same checks on the triangle.
pub fn verify_triangle_orthogonality(n_max: u32, p: &TriangleParams) -> Vec<VerificationReport> {
    let params = p.to_vec();
    let rule = match triangle_rule(p, 2 * n_max) {
        Ok(r) => r,
        Err(e) => {
            return vec![VerificationReport::not_applicable(
                "gram",
                vec![],
                &params,
                e.to_string(),
            )]
        }
    };
    let g = triangle_gram_matrix(n_max, p, &rule);
    let idx = TriIndex::up_to(n_max);
    let norms: Vec<_> = idx.iter().map(|&i| triangle_norm_abs(i, p)).collect();
    let indices: Vec<Vec<i64>> = idx.iter().map(|i| vec![i.n, i.k]).collect();
    gram_reports(&g, &indices, &norms, &params)
        .into_iter()
        .map(|mut r| {
            r.relation = r.relation.replacen("gram", "gram2d", 1);
            r
        })
        .collect()
}

/// Formats with 12 significant digits, switching to exponent notation for
/// very small or large magnitudes.
pub fn fmt_sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-4..12).contains(&exp) {
        return format!("{v:.11e}");
    }
    format!("{:.*}", (11 - exp) as usize, v)
}

/// CSV rendering: one row per matrix row, no header.
pub fn gram_to_csv(g: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..g.nrows() {
        let row: Vec<String> = (0..g.ncols()).map(|j| fmt_sig12(g[(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::qq;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn one_d_examples() {
        let r = gauss_jacobi_01(1, &q(0), &q(0)).unwrap();
        assert!(close(r.nodes[0], 0.5, 1e-15) && close(r.weights[0], 1.0, 1e-15));
        let r = gauss_jacobi_01(2, &q(0), &q(0)).unwrap();
        let d = 1.0 / (2.0 * 3f64.sqrt());
        assert!(close(r.nodes[0], 0.5 - d, 1e-14) && close(r.nodes[1], 0.5 + d, 1e-14));
        assert!(close(r.weights[0], 0.5, 1e-14) && close(r.weights[1], 0.5, 1e-14));
        let b = qq(1, 3);
        let r = gauss_jacobi_01(1, &q(0), &b).unwrap();
        assert!(close(r.nodes[0], (4.0 / 3.0) / (7.0 / 3.0), 1e-14));
        assert!(close(r.weights[0], 0.75, 1e-14));
    }

    #[test]
    fn one_d_moments() {
        let (a, b) = (qq(-1, 2), qq(5, 2));
        let r = gauss_jacobi_01(6, &a, &b).unwrap();
        assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        for k in 0..=11u32 {
            let exact = beta_shifted(&(&b + q(1)), &(&a + q(1)), k, 0);
            assert!(close(r.integrate(|x| x.powi(k as i32)), exact, 1e-13), "k = {k}");
        }
    }

    #[test]
    fn tetra_examples() {
        let p = SimplexParams::raw(q(0), q(0), q(0), q(0), q(0), q(0));
        let r = tetra_rule(&p, 1).unwrap();
        assert!(close(r.weights.iter().sum(), 1.0 / 6.0, 1e-15));
        let r = tetra_rule(&p, 2).unwrap();
        assert!(close(r.integrate(|x, _, _| x), 1.0 / 24.0, 1e-14));
        assert!(close(r.integrate(|x, _, _| (4.0 * x - 1.0).powi(2)), 0.1, 1e-14));
        assert!(close(tetra_monomial_integral(&p, [1, 0, 0]), 1.0 / 24.0, 1e-14));
    }

    #[test]
    fn degenerate_exponent() {
        let m = qq(-9, 10);
        let p = SimplexParams::raw(m.clone(), m.clone(), m.clone(), m.clone(), m.clone(), m);
        assert!(matches!(tetra_rule(&p, 2), Err(MathError::DegenerateParameters(_))));
    }

    #[test]
    fn gram_examples() {
        let p = SimplexParams::raw(q(0), q(0), q(0), q(0), q(0), q(0));
        let g = gram_matrix(0, &p, &tetra_rule(&p, 0).unwrap());
        assert_eq!(fmt_sig12(g[(0, 0)]), "0.166666666667");
        let g = gram_matrix(1, &p, &tetra_rule(&p, 2).unwrap());
        assert!(close(g[(1, 1)], 0.1, 1e-13));
        assert!(g[(0, 1)].abs() < 1e-15);
        for r in verify_orthogonality(3, &SimplexParams::raw(qq(1, 3), qq(-1, 2), q(1), q(0), q(2), qq(1, 3))) {
            assert!(r.is_pass(), "{r:?}");
        }
        for r in verify_triangle_orthogonality(4, &TriangleParams::raw(qq(-1, 2), q(1), qq(1, 3), q(0))) {
            assert!(r.is_pass(), "{r:?}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_sig12(0.1), "0.100000000000");
        assert_eq!(fmt_sig12(-2.5), "-2.50000000000");
        assert_eq!(fmt_sig12(1.25e-18), "1.25000000000e-18");
        assert_eq!(fmt_sig12(0.0), "0");
    }
}
