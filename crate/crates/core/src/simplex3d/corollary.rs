//! Derivative, weighted-derivative and multiplication relations for the
//! classical four-parameter family (`a = b = 0`).
//!
//! Weighted relations are checked after dividing out the weight
//! `x^α y^β z^γ w^δ` and clearing the remaining monomials in `x, y, z, w`.

use std::fmt;
use std::str::FromStr;

use crate::error::MathError;
use crate::ladder::ParamTuple;
use crate::ratpoly::{q, MPoly, Rational, Var};
use crate::report::VerificationReport;

use super::{simplex_poly, Index3, SimplexParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivativeRelation {
    /// `(∂x - ∂y) P`
    XMinusY,
    /// `(∂z - ∂y) P`
    ZMinusY,
    /// `∂z P`
    Z,
    /// `∂z (∂x - ∂y) P`
    ZXMinusY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightedRelation {
    XMinusY,
    ZMinusY,
    Z,
    ZXMinusY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiplicationRelation {
    X,
    Y,
    Z,
    W,
}

impl DerivativeRelation {
    pub const ALL: [Self; 4] = [Self::XMinusY, Self::ZMinusY, Self::Z, Self::ZXMinusY];
    pub fn name(self) -> &'static str {
        match self {
            Self::XMinusY => "deriv.dx-dy",
            Self::ZMinusY => "deriv.dz-dy",
            Self::Z => "deriv.dz",
            Self::ZXMinusY => "deriv.dz(dx-dy)",
        }
    }
}

impl WeightedRelation {
    pub const ALL: [Self; 4] = [Self::XMinusY, Self::ZMinusY, Self::Z, Self::ZXMinusY];
    pub fn name(self) -> &'static str {
        match self {
            Self::XMinusY => "weighted.dx-dy",
            Self::ZMinusY => "weighted.dz-dy",
            Self::Z => "weighted.dz",
            Self::ZXMinusY => "weighted.dz(dx-dy)",
        }
    }
}

impl MultiplicationRelation {
    pub const ALL: [Self; 4] = [Self::X, Self::Y, Self::Z, Self::W];
    pub fn name(self) -> &'static str {
        match self {
            Self::X => "mul.x",
            Self::Y => "mul.y",
            Self::Z => "mul.z",
            Self::W => "mul.w",
        }
    }
}

macro_rules! named {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
        impl FromStr for $t {
            type Err = MathError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                <$t>::ALL
                    .into_iter()
                    .find(|r| r.name() == s)
                    .ok_or_else(|| MathError::InvalidParameter(format!("unknown relation {s}")))
            }
        }
    };
}

named!(DerivativeRelation);
named!(WeightedRelation);
named!(MultiplicationRelation);

/// Rational index and parameter values of a classical member.
struct C {
    n1: Rational,
    n2: Rational,
    n3: Rational,
    n: Rational,
    al: Rational,
    be: Rational,
    ga: Rational,
    de: Rational,
    s4: Rational,
}

impl C {
    fn new(i: Index3, p: &SimplexParams) -> Self {
        C {
            n1: q(i.n1),
            n2: q(i.n2),
            n3: q(i.n3),
            n: q(i.n()),
            al: p.alpha.clone(),
            be: p.beta.clone(),
            ga: p.gamma.clone(),
            de: p.delta.clone(),
            s4: &p.alpha + &p.beta + &p.gamma + &p.delta,
        }
    }

    /// `2n2 + 2n3 + β+γ+δ + 2`
    fn k1(&self) -> Rational {
        q(2) * (&self.n2 + &self.n3) + &self.be + &self.ga + &self.de + q(2)
    }

    /// `2n3 + γ+δ + 1`
    fn k2(&self) -> Rational {
        q(2) * &self.n3 + &self.ga + &self.de + q(1)
    }

    /// `n + n2 + n3 + α+β+γ+δ + 3`
    fn big(&self) -> Rational {
        &self.n + &self.n2 + &self.n3 + &self.s4 + q(3)
    }

    /// `n + n2 + n3 + β+γ+δ + 2`
    fn big_b(&self) -> Rational {
        &self.n + &self.n2 + &self.n3 + &self.be + &self.ga + &self.de + q(2)
    }

    /// `n2 + 2n3 + β+γ+δ + 2`
    fn mid_b(&self) -> Rational {
        &self.n2 + q(2) * &self.n3 + &self.be + &self.ga + &self.de + q(2)
    }

    /// `n2 + 2n3 + γ+δ + 1`
    fn mid_g(&self) -> Rational {
        &self.n2 + q(2) * &self.n3 + &self.ga + &self.de + q(1)
    }
}

/// `Σ coeff * P_(idx+d)^(params+shift)`, negative indices contributing zero.
fn combo(idx: Index3, p: &SimplexParams, shift: [i64; 4], terms: &[(Rational, [i64; 3])]) -> MPoly {
    let sp = p.shifted(&[shift[0], shift[1], shift[2], shift[3], 0, 0]);
    let mut out = MPoly::zero();
    for (c, d) in terms {
        let t = idx + Index3::new(d[0], d[1], d[2]);
        if t.is_valid() {
            out += simplex_poly(t, &sp).scale(c);
        }
    }
    out
}

fn guard(name: &str, idx: Index3, p: &SimplexParams) -> Option<VerificationReport> {
    if !idx.is_valid() {
        return Some(VerificationReport::not_applicable(
            name,
            idx.to_vec(),
            &p.to_vec(),
            "index out of range",
        ));
    }
    if !p.is_classical() {
        return Some(VerificationReport::not_applicable(
            name,
            idx.to_vec(),
            &p.to_vec(),
            "requires a = b = 0",
        ));
    }
    None
}

pub fn verify_corollary_derivatives(which: DerivativeRelation, idx: Index3, p: &SimplexParams) -> VerificationReport {
    if let Some(r) = guard(which.name(), idx, p) {
        return r;
    }
    let v = C::new(idx, p);
    let u = simplex_poly(idx, p);
    let dxy = u.diff(Var::X) - u.diff(Var::Y);
    let (lhs, rhs) = match which {
        DerivativeRelation::XMinusY => (
            dxy.scale(&v.k1()),
            combo(
                idx,
                p,
                [1, 1, 0, 0],
                &[
                    (v.mid_b() * v.big(), [-1, 0, 0]),
                    (-((&v.n1 + v.k1()) * v.mid_g()), [0, -1, 0]),
                ],
            ),
        ),
        DerivativeRelation::ZMinusY => (
            (u.diff(Var::Z) - u.diff(Var::Y)).scale(&v.k2()),
            combo(
                idx,
                p,
                [0, 1, 1, 0],
                &[
                    ((&v.n3 + &v.de) * v.mid_g(), [0, 0, -1]),
                    (-(v.mid_b() * (&v.n3 + &v.ga + &v.de + q(1))), [0, -1, 0]),
                ],
            ),
        ),
        DerivativeRelation::Z => (
            u.diff(Var::Z),
            combo(idx, p, [0, 0, 1, 1], &[(&v.n3 + &v.ga + &v.de + q(1), [0, 0, -1])]),
        ),
        DerivativeRelation::ZXMinusY => {
            let g = &v.n3 + &v.ga + &v.de + q(1);
            (
                dxy.diff(Var::Z).scale(&v.k1()),
                combo(
                    idx,
                    p,
                    [1, 1, 1, 1],
                    &[
                        (v.mid_b() * v.big() * &g, [-1, 0, -1]),
                        (-((&v.n1 + v.k1()) * v.mid_g() * &g), [0, -1, -1]),
                    ],
                ),
            )
        }
    };
    VerificationReport::compare(which.name(), idx.to_vec(), &p.to_vec(), &lhs, &rhs)
}

/// `(α y - β x) P + x y (P_x - P_y)`: the weighted `(∂x - ∂y)` derivative
/// with the weight divided out and multiplied by `x y`.
fn weighted_xy(u: &MPoly, p: &SimplexParams) -> MPoly {
    let x = MPoly::x();
    let y = MPoly::y();
    &(y.scale(&p.alpha) - x.scale(&p.beta)) * u + &(&x * &y) * &(u.diff(Var::X) - u.diff(Var::Y))
}

/// `(γ w - δ z) G + z w G_z`: the weighted `∂z` derivative cleared by `z w`.
fn weighted_z(g: &MPoly, p: &SimplexParams) -> MPoly {
    let z = MPoly::z();
    let w = MPoly::one_minus_xyz();
    &(w.scale(&p.gamma) - z.scale(&p.delta)) * g + &(&z * &w) * &g.diff(Var::Z)
}

pub fn verify_corollary_weighted(which: WeightedRelation, idx: Index3, p: &SimplexParams) -> VerificationReport {
    if let Some(r) = guard(which.name(), idx, p) {
        return r;
    }
    let v = C::new(idx, p);
    let u = simplex_poly(idx, p);
    let (lhs, rhs) = match which {
        WeightedRelation::XMinusY => (
            weighted_xy(&u, p).scale(&v.k1()),
            combo(
                idx,
                p,
                [-1, -1, 0, 0],
                &[
                    ((&v.n1 + &v.al) * (&v.n2 + q(1)), [0, 1, 0]),
                    (-((&v.n1 + q(1)) * (&v.n2 + &v.be)), [1, 0, 0]),
                ],
            ),
        ),
        WeightedRelation::ZMinusY => {
            let y = MPoly::y();
            let z = MPoly::z();
            let core = &(y.scale(&v.ga) - z.scale(&v.be)) * &u + &(&y * &z) * &(u.diff(Var::Z) - u.diff(Var::Y));
            (
                core.scale(&v.k2()),
                combo(
                    idx,
                    p,
                    [0, -1, -1, 0],
                    &[
                        (-((&v.n2 + &v.be) * (&v.n3 + q(1))), [0, 0, 1]),
                        ((&v.n2 + q(1)) * (&v.n3 + &v.ga), [0, 1, 0]),
                    ],
                ),
            )
        }
        WeightedRelation::Z => (
            weighted_z(&u, p),
            combo(idx, p, [0, 0, -1, -1], &[(-(&v.n3 + q(1)), [0, 0, 1])]),
        ),
        WeightedRelation::ZXMinusY => {
            let g = weighted_xy(&u, p);
            let m = (&v.n3 + q(1)) * (&v.n2 + q(1)) * (&v.n1 + &v.al);
            let m2 = (&v.n3 + q(1)) * (&v.n2 + &v.be) * (&v.n1 + q(1));
            (
                weighted_z(&g, p).scale(&v.k1()),
                combo(idx, p, [-1, -1, -1, -1], &[(-m, [0, 1, 1]), (m2, [1, 0, 1])]),
            )
        }
    };
    VerificationReport::compare(which.name(), idx.to_vec(), &p.to_vec(), &lhs, &rhs)
}

pub fn verify_corollary_multiplication(
    which: MultiplicationRelation,
    idx: Index3,
    p: &SimplexParams,
) -> VerificationReport {
    if let Some(r) = guard(which.name(), idx, p) {
        return r;
    }
    let v = C::new(idx, p);
    let u = simplex_poly(idx, p);
    let lead = q(2) * &v.n + &v.s4 + q(3);
    let (n1, n2, n3) = (&v.n1, &v.n2, &v.n3);
    let (al, be, ga, de) = (&v.al, &v.be, &v.ga, &v.de);
    // the eight terms shared by the z and w relations, with the last factor left open
    let eight = |fa: &Rational, fb: &Rational| -> Vec<(Rational, [i64; 3])> {
        vec![
            (v.big_b() * v.mid_g() * fa, [0, 0, 0]),
            (-((n1 + q(1)) * v.mid_g() * fa), [1, 0, 0]),
            (-(v.big() * (n2 + q(1)) * fa), [0, 1, 0]),
            ((n1 + al) * (n2 + q(1)) * fa, [-1, 1, 0]),
            (v.big() * v.mid_b() * fb, [0, 0, 1]),
            (-((n1 + al) * v.mid_b() * fb), [-1, 0, 1]),
            (-(v.big_b() * (n2 + be) * fb), [0, -1, 1]),
            ((n1 + q(1)) * (n2 + be) * fb, [1, -1, 1]),
        ]
    };
    let (lhs, rhs) = match which {
        MultiplicationRelation::X => (
            (&MPoly::x() * &u).scale(&lead),
            combo(idx, p, [-1, 0, 0, 0], &[(n1 + al, [0, 0, 0]), (n1 + q(1), [1, 0, 0])]),
        ),
        MultiplicationRelation::Y => (
            (&MPoly::y() * &u).scale(&(&lead * v.k1())),
            combo(
                idx,
                p,
                [0, -1, 0, 0],
                &[
                    (v.big_b() * (n2 + be), [0, 0, 0]),
                    (v.big() * (n2 + q(1)), [0, 1, 0]),
                    (-((n1 + q(1)) * (n2 + be)), [1, 0, 0]),
                    (-((n1 + al) * (n2 + q(1))), [-1, 1, 0]),
                ],
            ),
        ),
        MultiplicationRelation::Z => (
            (&MPoly::z() * &u).scale(&(&lead * v.k1() * v.k2())),
            combo(idx, p, [0, 0, -1, 0], &eight(&(n3 + ga), &(n3 + q(1)))),
        ),
        MultiplicationRelation::W => {
            // same shape as z with the n3+1 block negated and n3+δ in place of n3+γ
            let terms: Vec<_> = eight(&(n3 + de), &(n3 + q(1)))
                .into_iter()
                .enumerate()
                .map(|(i, (c, d))| if i >= 4 { (-c, d) } else { (c, d) })
                .collect();
            (
                (&MPoly::one_minus_xyz() * &u).scale(&(&lead * v.k1() * v.k2())),
                combo(idx, p, [0, 0, 0, -1], &terms),
            )
        }
    };
    VerificationReport::compare(which.name(), idx.to_vec(), &p.to_vec(), &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::qq;
    use crate::report::Status;

    fn sample() -> SimplexParams {
        SimplexParams::classical(qq(1, 3), qq(1, 2), q(1), q(2))
    }

    #[test]
    fn small_cases() {
        let p = sample();
        let z0 = Index3::new(0, 0, 0);
        assert_eq!(
            verify_corollary_derivatives(DerivativeRelation::Z, Index3::new(0, 0, 1), &p).status,
            Status::Pass
        );
        assert_eq!(
            verify_corollary_derivatives(DerivativeRelation::XMinusY, z0, &p).status,
            Status::Pass
        );
        assert_eq!(
            verify_corollary_derivatives(DerivativeRelation::ZXMinusY, z0, &p).status,
            Status::Pass
        );
        for w in WeightedRelation::ALL {
            assert_eq!(verify_corollary_weighted(w, z0, &p).status, Status::Pass, "{w}");
        }
        for m in MultiplicationRelation::ALL {
            assert_eq!(verify_corollary_multiplication(m, z0, &p).status, Status::Pass, "{m}");
        }
    }

    #[test]
    fn requires_classical() {
        let p = SimplexParams::raw(q(0), q(0), q(0), q(0), q(1), q(0));
        let r = verify_corollary_multiplication(MultiplicationRelation::X, Index3::new(0, 0, 0), &p);
        assert_eq!(r.status, Status::NotApplicable);
    }
}
