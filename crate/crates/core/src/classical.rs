//! Independent constructions used as oracles: the classical Jacobi three-term
//! recurrence, homogenised so that `base^n P_n(2 top/base - 1)` is built
//! without any division, and the classical triangle and tetrahedron families
//! assembled from it.

use num_traits::Zero;

use crate::ratpoly::{q, MPoly, Rational};

/// `base^n P_n^(a,b)(2 top / base - 1)` for the classical Jacobi polynomial on `[-1,1]`.
///
/// Panics if a recurrence denominator vanishes, which cannot happen for `a, b > -1`.
pub fn homogeneous_jacobi(n: u32, a: &Rational, b: &Rational, top: &MPoly, base: &MPoly) -> MPoly {
    let t = top.scale(&q(2)) - base;
    let mut prev = MPoly::one();
    if n == 0 {
        return prev;
    }
    // P_1(t) = (a+1) + (a+b+2)(t-1)/2
    let half_s = (a + b + q(2)) / q(2);
    let mut cur = base.scale(&(a + q(1))) + (&t - base).scale(&half_s);
    let base2 = base * base;
    for k in 1..n {
        let kq = q(i64::from(k));
        let s = &kq * q(2) + a + b;
        let d = q(2) * (&kq + q(1)) * (&kq + a + b + q(1)) * &s;
        assert!(!d.is_zero(), "degenerate Jacobi recurrence at k = {k}");
        let lin = (&s + q(1)) * (&s + q(2)) * &s;
        let cst = (&s + q(1)) * (a * a - b * b);
        let back = q(2) * (&kq + a) * (&kq + b) * (&s + q(2));
        let next = (&(t.scale(&lin) + base.scale(&cst)) * &cur - (&base2 * &prev).scale(&back)).scale(&d.recip());
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P̃_n^(a,b)(x) = P_n^(a,b)(2x - 1)` from the recurrence.
pub fn shifted_jacobi_recurrence(n: u32, a: &Rational, b: &Rational) -> MPoly {
    homogeneous_jacobi(n, a, b, &MPoly::x(), &MPoly::one())
}

/// Classical three-parameter Jacobi polynomial on the triangle.
pub fn koornwinder_triangle(n: u32, k: u32, a: &Rational, b: &Rational, c: &Rational) -> MPoly {
    assert!(k <= n);
    let outer = shifted_jacobi_recurrence(n - k, &(q(2 * i64::from(k) + 1) + b + c), a);
    let inner = homogeneous_jacobi(k, c, b, &MPoly::y(), &MPoly::one_minus_x());
    &outer * &inner
}

/// Classical four-parameter orthogonal polynomial on the tetrahedron.
pub fn koornwinder_simplex(
    idx: [u32; 3],
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> MPoly {
    let [n1, n2, n3] = idx;
    let a1 = beta + gamma + delta + q(2 * i64::from(n2 + n3) + 2);
    let a2 = gamma + delta + q(2 * i64::from(n3) + 1);
    let f1 = shifted_jacobi_recurrence(n1, &a1, alpha);
    let f2 = homogeneous_jacobi(n2, &a2, beta, &MPoly::y(), &MPoly::one_minus_x());
    let f3 = homogeneous_jacobi(n3, delta, gamma, &MPoly::z(), &MPoly::one_minus_xy());
    &(&f1 * &f2) * &f3
}
