//! Cross-construction oracles: each family against an independent build or
//! a numerical integral.

use simplex_ortho::classical::{koornwinder_simplex, koornwinder_triangle, shifted_jacobi_recurrence};
use simplex_ortho::jacobi1d::{norm_abs, shifted_jacobi, JacobiParams};
use simplex_ortho::quadrature::{gauss_jacobi_01, gram_matrix, tetra_rule, triangle_gram_matrix, triangle_rule};
use simplex_ortho::simplex3d::{simplex_norm, simplex_poly, Index3, SimplexParams};
use simplex_ortho::suites::{grid_1d, grid_2d, grid_3d, grid_classical};
use simplex_ortho::triangle2d::{triangle_norm_abs, triangle_norm_ratio, triangle_poly, TriIndex, TriangleParams};
use simplex_ortho::{q, qq, MPoly, Point};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn jacobi_closed_form_matches_recurrence() {
    for t in grid_1d() {
        let p = JacobiParams::raw(t[0].clone(), t[1].clone());
        for n in 0..=8 {
            assert_eq!(
                shifted_jacobi(n, &p),
                shifted_jacobi_recurrence(n as u32, &p.a, &p.b),
                "n={n} {t:?}"
            );
        }
    }
}

#[test]
fn jacobi_orthogonal_under_quadrature() {
    for t in grid_1d().iter().step_by(5) {
        let p = JacobiParams::raw(t[0].clone(), t[1].clone());
        let rule = gauss_jacobi_01(8, &p.a, &p.b).unwrap();
        let polys: Vec<_> = (0..=6).map(|n| shifted_jacobi(n, &p).to_f64()).collect();
        for i in 0..polys.len() {
            for j in 0..polys.len() {
                let g = rule.integrate(|x| polys[i].eval(x, 0.0, 0.0) * polys[j].eval(x, 0.0, 0.0));
                if i == j {
                    assert!(rel(g, norm_abs(i as u32, &p).unwrap()) < 1e-12, "{t:?} n={i}");
                } else {
                    assert!(g.abs() < 1e-12, "{t:?} ({i},{j}) {g}");
                }
            }
        }
    }
}

#[test]
fn triangle_reduces_to_classical_at_d0() {
    let (a, b, c) = (qq(1, 3), qq(-1, 2), q(2));
    let p = TriangleParams::raw(a.clone(), b.clone(), c.clone(), q(0));
    for idx in TriIndex::up_to(5) {
        assert_eq!(
            triangle_poly(idx, &p),
            koornwinder_triangle(idx.n as u32, idx.k as u32, &a, &b, &c)
        );
    }
}

#[test]
fn triangle_examples() {
    let z = TriangleParams::raw(q(0), q(0), q(0), q(0));
    assert_eq!(triangle_norm_ratio(TriIndex::new(0, 0), &z).unwrap(), q(1));
    assert!(rel(triangle_norm_abs(TriIndex::new(0, 0), &z).unwrap(), 0.5) < 1e-13);
    assert_eq!(triangle_norm_ratio(TriIndex::new(1, 0), &z).unwrap(), qq(1, 2));
    assert_eq!(
        triangle_poly(TriIndex::new(1, 0), &z),
        MPoly::x().scale(&q(3)) - MPoly::one()
    );
}

#[test]
fn triangle_gram_is_diagonal() {
    for t in grid_2d() {
        let p = TriangleParams::raw(t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone());
        let g = triangle_gram_matrix(4, &p, &triangle_rule(&p, 8).unwrap());
        for (i, idx) in TriIndex::up_to(4).into_iter().enumerate() {
            assert!(
                rel(g[(i, i)], triangle_norm_abs(idx, &p).unwrap()) < 1e-10,
                "{t:?} {idx:?}"
            );
            for j in 0..g.ncols() {
                if i != j {
                    assert!(g[(i, j)].abs() <= 1e-10 * (g[(i, i)] * g[(j, j)]).sqrt());
                }
            }
        }
    }
}

#[test]
fn simplex_reduces_to_classical() {
    for t in grid_classical() {
        let p = SimplexParams::classical(t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone());
        for idx in Index3::up_to(3) {
            let k = koornwinder_simplex(
                [idx.n1 as u32, idx.n2 as u32, idx.n3 as u32],
                &t[0],
                &t[1],
                &t[2],
                &t[3],
            );
            assert_eq!(simplex_poly(idx, &p), k, "{t:?} {idx:?}");
        }
    }
}

#[test]
fn simplex_examples() {
    let z = SimplexParams::raw(q(0), q(0), q(0), q(0), q(0), q(0));
    assert_eq!(
        simplex_poly(Index3::new(1, 0, 0), &z),
        MPoly::x().scale(&q(4)) - MPoly::one()
    );
    assert_eq!(simplex_norm(Index3::new(1, 0, 0), &z).unwrap().ratio, qq(3, 5));
    assert!(rel(simplex_norm(Index3::new(0, 0, 0), &z).unwrap().absolute, 1.0 / 6.0) < 1e-13);
    // every member is 1 at the origin vertex up to the classical normalization
    let origin = Point::new(q(0), q(0), q(0));
    assert_eq!(simplex_poly(Index3::new(0, 0, 0), &z).eval(&origin), q(1));
}

#[test]
fn simplex_gram_matches_norms() {
    for t in grid_3d().iter().take(4) {
        let p = SimplexParams::raw(
            t[0].clone(),
            t[1].clone(),
            t[2].clone(),
            t[3].clone(),
            t[4].clone(),
            t[5].clone(),
        );
        let g = gram_matrix(3, &p, &tetra_rule(&p, 6).unwrap());
        for (i, idx) in Index3::up_to(3).into_iter().enumerate() {
            assert!(
                rel(g[(i, i)], simplex_norm(idx, &p).unwrap().absolute) < 1e-10,
                "{t:?} {idx:?}"
            );
        }
    }
}
