//! Second-order PDEs on the tetrahedron, the `a = b = 0` reduction and the
//! monic solution.

use crate::classical::koornwinder_simplex;
use crate::error::MathError;
use crate::jacobi1d::{shifted_jacobi, JacobiParams};
use crate::ladder::ParamTuple;
use crate::operator::SecondOrderOperator;
use crate::ratpoly::{q, Denom, MPoly, Rational};
use crate::report::VerificationReport;
use crate::special::{factorial, gamma_ratio, hyper2f1_terminating, pochhammer, GammaRatioSpec};

use super::{a1, simplex_poly, Index3, SimplexParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimplexPde {
    T1,
    T2,
    T3,
    T4,
}

impl SimplexPde {
    pub const ALL: [SimplexPde; 4] = [SimplexPde::T1, SimplexPde::T2, SimplexPde::T3, SimplexPde::T4];

    pub fn name(self) -> &'static str {
        match self {
            SimplexPde::T1 => "T1",
            SimplexPde::T2 => "T2",
            SimplexPde::T3 => "T3",
            SimplexPde::T4 => "T4",
        }
    }
}

fn c(r: Rational) -> MPoly {
    MPoly::constant(r)
}

/// Second-order part shared by T1 and the classical operator, before clearing.
fn full_principal(u_x: MPoly, u_y: MPoly, u_z: MPoly, u: MPoly) -> SecondOrderOperator {
    let x = MPoly::x();
    let y = MPoly::y();
    let z = MPoly::z();
    let one = MPoly::one();
    SecondOrderOperator {
        uxx: &x * &(&one - &x),
        uyy: &y * &(&one - &y),
        uzz: &z * &(&one - &z),
        uxz: (&x * &z).scale(&q(-2)),
        uyz: (&y * &z).scale(&q(-2)),
        uxy: (&x * &y).scale(&q(-2)),
        ux: u_x,
        uy: u_y,
        uz: u_z,
        u,
        denom: Denom::ONE,
    }
}

/// The PDE operator with its rational coefficients cleared by the minimal
/// product of `1-x` and `1-x-y`, recorded in `denom`.
pub fn simplex_pde_operator(which: SimplexPde, idx: Index3, p: &SimplexParams) -> SecondOrderOperator {
    let (al, be, ga, de, a, b) = (&p.alpha, &p.beta, &p.gamma, &p.delta, &p.a, &p.b);
    let e = p.e();
    let (n2, n3) = (q(idx.n2), q(idx.n3));
    let n = q(idx.n());
    let s4 = al + be + ga + de;
    let x = MPoly::x();
    let y = MPoly::y();
    let z = MPoly::z();
    let qx = MPoly::one_minus_x();
    let s = MPoly::one_minus_xy();
    let w = MPoly::one_minus_xyz();
    let eig = &n * (&n + &e + q(3));
    match which {
        SimplexPde::T1 => {
            let qs = &qx * &s;
            let ab = a + b;
            let ux = c(al + q(1)) - x.scale(&(&e + q(4)));
            let uy = &(c(be + q(1)) - y.scale(&(&s4 + q(4)))) * &qs + &((&x * &y).scale(&ab) - y.scale(b)) * &s;
            let uz = &(c(ga + q(1)) - z.scale(&(&s4 + q(4)))) * &qs + &(&x * &z).scale(&ab) * &s + (&y * &z).scale(b);
            let u = qs.scale(&eig) - s.scale(&(a * (&n2 + &n3))) - qx.scale(&(&n3 * b));
            let mut op = full_principal(MPoly::zero(), MPoly::zero(), MPoly::zero(), MPoly::zero()).scaled_by(&qs);
            op.ux = &ux * &qs;
            op.uy = uy;
            op.uz = uz;
            op.u = u;
            op.denom = Denom::new(1, 1, 0);
            op
        }
        SimplexPde::T2 => {
            let gdb2 = ga + de + b + q(2);
            let s2 = &s * &s;
            SecondOrderOperator {
                uyy: &y * &s2,
                uyz: (&(&y * &z) * &s).scale(&q(-2)),
                uzz: &y * &z.pow(2),
                uy: &(s.scale(&(be + q(1))) - y.scale(&gdb2)) * &s,
                uz: (&y * &z).scale(&gdb2) - (&z * &s).scale(&(be + q(1))),
                u: s.scale(&((be + q(1)) * &n3 + &n2 * (&n2 + q(2) * &n3 + be + ga + de + b + q(2))))
                    - y.scale(&(&n3 * (ga + de + b + &n3 + q(1)))),
                denom: Denom::new(0, 1, 0),
                ..Default::default()
            }
        }
        SimplexPde::T3 => SecondOrderOperator {
            uzz: &z * &w,
            uz: w.scale(&(ga + q(1))) - z.scale(&(de + q(1))),
            u: c(&n3 * (&n3 + ga + de + q(1))),
            ..Default::default()
        },
        SimplexPde::T4 => {
            let lin = c(al + q(1)) - x.scale(&(&e + q(4)));
            let q2 = &qx * &qx;
            let m = &n2 + &n3;
            SecondOrderOperator {
                uxx: &x * &q2,
                uyy: &x * &y.pow(2),
                uzz: &x * &z.pow(2),
                uxy: (&(&x * &y) * &qx).scale(&q(-2)),
                uxz: (&(&x * &z) * &qx).scale(&q(-2)),
                uyz: (&(&x * &y) * &z).scale(&q(2)),
                ux: &lin * &qx,
                uy: -(&y * &lin),
                uz: -(&z * &lin),
                u: qx.scale(&eig) - c(&m * (&m + be + ga + de + a + b + q(2))),
                denom: Denom::new(1, 0, 0),
            }
        }
    }
}

/// Cleared residual; the zero polynomial on every family member.
pub fn pde_residual_3d(which: SimplexPde, idx: Index3, p: &SimplexParams) -> MPoly {
    simplex_pde_operator(which, idx, p).numerator(&simplex_poly(idx, p))
}

/// The classical operator for `a = b = 0`, uncleared.
pub fn classical_pde_operator(idx: Index3, p: &SimplexParams) -> SecondOrderOperator {
    let s4 = &p.alpha + &p.beta + &p.gamma + &p.delta;
    let n = q(idx.n());
    let k = &s4 + q(4);
    full_principal(
        c(&p.alpha + q(1)) - MPoly::x().scale(&k),
        c(&p.beta + q(1)) - MPoly::y().scale(&k),
        c(&p.gamma + q(1)) - MPoly::z().scale(&k),
        c(&n * (&n + &s4 + q(3))),
    )
}

/// Checks that the six-parameter family at `a = b = 0` is the classical
/// family and that T1 reduces to the classical operator slot by slot.
pub fn verify_reduction_ab0(idx: Index3, p: &SimplexParams) -> Vec<VerificationReport> {
    let params = p.to_vec();
    let index = idx.to_vec();
    if !p.is_classical() {
        return vec![VerificationReport::not_applicable(
            "reduction",
            index,
            &params,
            "requires a = b = 0",
        )];
    }
    let k = koornwinder_simplex(
        [idx.n1 as u32, idx.n2 as u32, idx.n3 as u32],
        &p.alpha,
        &p.beta,
        &p.gamma,
        &p.delta,
    );
    let member = VerificationReport::compare("reduction.member", index.clone(), &params, &simplex_poly(idx, p), &k);
    let t1 = simplex_pde_operator(SimplexPde::T1, idx, p);
    let qs = &MPoly::one_minus_x() * &MPoly::one_minus_xy();
    let reference = classical_pde_operator(idx, p).scaled_by(&qs);
    let mut op_report = VerificationReport::pass("reduction.operator", index, &params);
    for ((name, got), (_, want)) in t1.slots().into_iter().zip(reference.slots()) {
        if got != want {
            op_report = VerificationReport::compare("reduction.operator", op_report.index.clone(), &params, got, want);
            op_report.detail = Some(format!("slot {name}"));
            break;
        }
    }
    vec![member, op_report]
}

/// Monic solution of T4 with unit coefficient on `x^n1 y^n2 z^n3`.
pub fn monic_simplex(idx: Index3, p: &SimplexParams) -> Result<MPoly, MathError> {
    if !idx.is_valid() {
        return Err(MathError::InvalidParameter(format!("index {:?}", idx.to_vec())));
    }
    let n = idx.n();
    // Gamma(e+n+n2+n3+3) / Gamma(e+2n+3) = 1 / (e+n+n2+n3+3)_(n1)
    let pre = factorial(idx.n1 as u32) * gamma_ratio(&GammaRatioSpec::new(p.e() + q(2 * n + 3), -idx.n1))?;
    let fx = shifted_jacobi(idx.n1, &JacobiParams::raw(a1(idx, p), p.alpha.clone()));
    Ok(&yz_monomial(idx) * &fx.scale(&pre))
}

/// The hypergeometric form of the same solution, for cross-checking.
pub fn monic_simplex_hypergeometric(idx: Index3, p: &SimplexParams) -> Result<MPoly, MathError> {
    let n = idx.n();
    let m = idx.n1 as u32;
    let e = p.e();
    let sign = if idx.n1 % 2 == 0 { q(1) } else { q(-1) };
    let pre = sign * pochhammer(&(&p.alpha + q(1)), m) * gamma_ratio(&GammaRatioSpec::new(&e + q(2 * n + 3), -idx.n1))?;
    let f = hyper2f1_terminating(m, &(&e + q(n + idx.n2 + idx.n3 + 3)), &(&p.alpha + q(1)), &MPoly::x())?;
    Ok(&yz_monomial(idx) * &f.scale(&pre))
}

fn yz_monomial(idx: Index3) -> MPoly {
    MPoly::monomial(q(1), [0, idx.n2 as u32, idx.n3 as u32])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::qq;
    use crate::report::Status;

    fn sample() -> SimplexParams {
        SimplexParams::raw(qq(1, 3), qq(-1, 2), q(1), q(0), q(2), qq(1, 3))
    }

    #[test]
    fn pde_examples() {
        let p = sample();
        assert!(pde_residual_3d(SimplexPde::T3, Index3::new(0, 0, 1), &p).is_zero());
        assert!(pde_residual_3d(SimplexPde::T1, Index3::new(0, 0, 0), &p).is_zero());
        assert!(pde_residual_3d(SimplexPde::T4, Index3::new(1, 0, 0), &p).is_zero());
        for idx in Index3::up_to(2) {
            for which in SimplexPde::ALL {
                assert!(pde_residual_3d(which, idx, &p).is_zero(), "{} {idx:?}", which.name());
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let p = SimplexParams::classical(qq(1, 2), q(2), qq(-1, 2), q(1));
        for idx in [Index3::new(0, 0, 0), Index3::new(1, 0, 0), Index3::new(1, 1, 1)] {
            for r in verify_reduction_ab0(idx, &p) {
                assert_eq!(r.status, Status::Pass, "{r:?}");
            }
        }
        let nonclassical = verify_reduction_ab0(Index3::new(0, 0, 0), &sample());
        assert_eq!(nonclassical[0].status, Status::NotApplicable);
    }

    #[test]
    fn monic_examples() {
        let p = sample();
        assert_eq!(monic_simplex(Index3::new(0, 0, 0), &p).unwrap(), MPoly::one());
        assert_eq!(
            monic_simplex(Index3::new(0, 1, 1), &p).unwrap(),
            &MPoly::y() * &MPoly::z()
        );
        for idx in Index3::up_to(3) {
            let m = monic_simplex(idx, &p).unwrap();
            assert_eq!(m.coeff([idx.n1 as u32, idx.n2 as u32, idx.n3 as u32]), q(1));
            assert_eq!(m, monic_simplex_hypergeometric(idx, &p).unwrap());
            let t4 = simplex_pde_operator(SimplexPde::T4, idx, &p);
            assert!(t4.numerator(&m).is_zero(), "{idx:?}");
        }
    }
}
