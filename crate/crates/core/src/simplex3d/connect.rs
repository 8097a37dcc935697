//! Connection expansions between parameter sets and the three-term
//! recurrence in `x`.

use num_traits::{One, Zero};

use crate::error::MathError;
use crate::ladder::ParamTuple;
use crate::ratpoly::{q, MPoly, Rational};
use crate::report::VerificationReport;
use crate::special::{factorial, gamma_ratio, hyper3f2_unit, pochhammer, GammaRatioSpec};

use super::{simplex_poly, Index3, SimplexParams};

/// One term `coeff * (1-x)^p (1-x-y)^q * P_index^target`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTerm {
    pub index: Index3,
    pub coeff: Rational,
    pub one_minus_x: u32,
    pub one_minus_xy: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionExpansion {
    pub source: (Index3, SimplexParams),
    pub target: SimplexParams,
    pub terms: Vec<ConnectionTerm>,
}

impl ConnectionExpansion {
    /// The right-hand side as a polynomial.
    pub fn reassemble(&self) -> MPoly {
        let mut out = MPoly::zero();
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let factor = &MPoly::one_minus_x().pow(t.one_minus_x) * &MPoly::one_minus_xy().pow(t.one_minus_xy);
            out += &factor * &simplex_poly(t.index, &self.target).scale(&t.coeff);
        }
        out
    }

    /// Exact comparison of the reassembled sum with the source member.
    pub fn verify(&self, relation: &str) -> VerificationReport {
        let (idx, p) = &self.source;
        VerificationReport::compare(
            relation,
            idx.to_vec(),
            &p.to_vec(),
            &self.reassemble(),
            &simplex_poly(*idx, p),
        )
    }
}

fn gr(base: Rational, offset: i64) -> Result<Rational, MathError> {
    gamma_ratio(&GammaRatioSpec::new(base, offset))
}

/// Expansion of `P^(α,…)` over `P^(ξ,…)` members with lowered first index.
pub fn connect_alpha(idx: Index3, p: &SimplexParams, xi: &Rational) -> Result<ConnectionExpansion, MathError> {
    if *xi <= q(-1) {
        return Err(MathError::InvalidParameter("xi must be > -1".into()));
    }
    let (n1, n2, n3) = (idx.n1, idx.n2, idx.n3);
    let n = idx.n();
    let e = p.e();
    let em = &e - &p.alpha;
    let mut target = p.clone();
    target.alpha = xi.clone();
    let mut terms = Vec::new();
    for m in 0..=n1 {
        let sign = if m % 2 == 0 { q(1) } else { q(-1) };
        // (2n-2m+e-α+ξ+3) Γ(B) / Γ(B+n1+1) with B = n+n2+n3-m+e-α+ξ+3; the linear
        // factor is B+n1-m, so it cancels one factor of (B)_(n1+1) exactly
        let base = q(n + n2 + n3 - m + 3) + &em + xi;
        let mut den = Rational::one();
        for j in (0..=n1).filter(|&j| j != n1 - m) {
            den *= &base + q(j);
        }
        if den.is_zero() {
            return Err(MathError::PoleHit(format!("connection coefficient at m = {m}")));
        }
        let coeff = sign * pochhammer(&(&p.alpha - xi), m as u32) / factorial(m as u32)
            * gr(q(n + n2 + n3 - m + 3) + &em, m)?
            * gr(q(n + n2 + n3 + 3) + &e, n1 - m)?
            / den;
        terms.push(ConnectionTerm {
            index: Index3::new(n1 - m, n2, n3),
            coeff,
            one_minus_x: 0,
            one_minus_xy: 0,
        });
    }
    Ok(ConnectionExpansion {
        source: (idx, p.clone()),
        target,
        terms,
    })
}

/// Expansion over `P^(φ,θ,η,ξ,a,b)` members with `(1-x)` and `(1-x-y)` factors.
pub fn connect_general(
    idx: Index3,
    p: &SimplexParams,
    target4: [Rational; 4],
) -> Result<ConnectionExpansion, MathError> {
    let [phi, theta, eta, xi] = target4;
    let target = SimplexParams::raw(
        phi.clone(),
        theta.clone(),
        eta.clone(),
        xi.clone(),
        p.a.clone(),
        p.b.clone(),
    );
    target.validate()?;
    let (be, ga, de, a, b) = (&p.beta, &p.gamma, &p.delta, &p.a, &p.b);
    let e = p.e();
    let (n1, n2, n3) = (idx.n1, idx.n2, idx.n3);
    let tsum = &phi + &theta + &xi + &eta + a + b;
    let div = |num: Rational, den: Rational, what: &str| -> Result<Rational, MathError> {
        if den.is_zero() {
            Err(MathError::PoleHit(what.to_string()))
        } else {
            Ok(num / den)
        }
    };
    let mut terms = Vec::new();
    for k3 in 0..=n3 {
        let c3 = div(
            pochhammer(&(q(k3 + 1) + de), (n3 - k3) as u32) * pochhammer(&(q(n3 + 1) + ga + de), k3 as u32),
            factorial((n3 - k3) as u32) * pochhammer(&(q(k3 + 1) + &xi + &eta), k3 as u32),
            "z-factor Pochhammer",
        )? * hyper3f2_unit(
            (n3 - k3) as u32,
            &(q(n3 + k3 + 1) + ga + de),
            &(q(k3 + 1) + &xi),
            &(q(2 * k3 + 2) + &xi + &eta),
            &(q(k3 + 1) + de),
        )?;
        for k2 in 0..=n2 {
            let c2 = div(
                pochhammer(&(q(k2 + 2 * n3 + 2) + ga + de + b), (n2 - k2) as u32)
                    * pochhammer(&(q(n2 + 2 * n3 + 2) + be + ga + de + b), k2 as u32),
                factorial((n2 - k2) as u32) * pochhammer(&(q(k2 + 2 * k3 + 2) + &theta + &xi + &eta + b), k2 as u32),
                "y-factor Pochhammer",
            )? * hyper3f2_unit(
                (n2 - k2) as u32,
                &(q(n2 + 2 * n3 + k2 + 2) + be + ga + de + b),
                &(q(k2 + 2 * k3 + 2) + &xi + &eta + b),
                &(q(2 * k2 + 2 * k3 + 3) + &theta + &xi + &eta + b),
                &(q(k2 + 2 * n3 + 2) + ga + de + b),
            )?;
            for k1 in 0..=n1 {
                let c1 = div(
                    pochhammer(&(q(k1 + 2 * n2 + 2 * n3 + 3) + be + ga + de + a + b), (n1 - k1) as u32)
                        * pochhammer(&(q(n1 + 2 * n2 + 2 * n3 + 3) + &e), k1 as u32),
                    factorial((n1 - k1) as u32) * pochhammer(&(q(k1 + 2 * k2 + 2 * k3 + 3) + &tsum), k1 as u32),
                    "x-factor Pochhammer",
                )? * hyper3f2_unit(
                    (n1 - k1) as u32,
                    &(q(n1 + 2 * n2 + 2 * n3 + k1 + 3) + &e),
                    &(q(k1 + 2 * k2 + 2 * k3 + 3) + &tsum - &phi),
                    &(q(2 * k1 + 2 * k2 + 2 * k3 + 4) + &tsum),
                    &(q(k1 + 2 * n2 + 2 * n3 + 3) + be + ga + de + a + b),
                )?;
                terms.push(ConnectionTerm {
                    index: Index3::new(k1, k2, k3),
                    coeff: &c1 * &c2 * &c3,
                    one_minus_x: (n2 - k2) as u32,
                    one_minus_xy: (n3 - k3) as u32,
                });
            }
        }
    }
    Ok(ConnectionExpansion {
        source: (idx, p.clone()),
        target,
        terms,
    })
}

/// Coefficients of `x P_idx = A P_(n1+1) + B P_idx + C P_(n1-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTerm {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

pub fn three_term_x(idx: Index3, p: &SimplexParams) -> ThreeTerm {
    let e = p.e();
    let al = &p.alpha;
    let n1 = q(idx.n1);
    let n = q(idx.n());
    if idx.n() == 0 {
        // the displayed fractions share a factor e+2 or e+3 that may vanish here
        let d = &e + q(4);
        return ThreeTerm {
            a: d.recip(),
            b: (al + q(1)) / d,
            c: Rational::zero(),
        };
    }
    let d2 = &e + q(2) * &n + q(2);
    let d3 = &d2 + q(1);
    let d4 = &d2 + q(2);
    let a = (&n1 + q(1)) * (&e + &n + q(idx.n2 + idx.n3 + 3)) / (&d3 * &d4);
    let b = ((al + q(2) * &n1 + q(1)) * &d2 - q(2) * &n1 * (al + &n1)) / (&d2 * &d4);
    let c = if idx.n1 == 0 {
        Rational::zero()
    } else {
        (&n + q(idx.n2 + idx.n3 + 2) + &e - al) * (al + &n1) / (&d2 * &d3)
    };
    ThreeTerm { a, b, c }
}

pub fn verify_three_term(idx: Index3, p: &SimplexParams) -> VerificationReport {
    let t = three_term_x(idx, p);
    let lhs = &MPoly::x() * &simplex_poly(idx, p);
    let up = Index3::new(idx.n1 + 1, idx.n2, idx.n3);
    let down = Index3::new(idx.n1 - 1, idx.n2, idx.n3);
    let rhs = simplex_poly(up, p).scale(&t.a) + simplex_poly(idx, p).scale(&t.b) + simplex_poly(down, p).scale(&t.c);
    VerificationReport::compare("three-term-x", idx.to_vec(), &p.to_vec(), &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{qq, Point};
    use crate::report::Status;

    fn zeros() -> SimplexParams {
        SimplexParams::raw(q(0), q(0), q(0), q(0), q(0), q(0))
    }

    fn sample() -> SimplexParams {
        SimplexParams::raw(qq(1, 3), qq(-1, 2), q(1), q(0), q(2), qq(1, 3))
    }

    #[test]
    fn alpha_identity_and_trivial_cases() {
        let p = sample();
        let ex = connect_alpha(Index3::new(2, 1, 0), &p, &p.alpha.clone()).unwrap();
        assert_eq!(ex.terms[0].coeff, q(1));
        assert!(ex.terms[1..].iter().all(|t| t.coeff.is_zero()));
        let ex = connect_alpha(Index3::new(0, 2, 1), &p, &qq(5, 2)).unwrap();
        assert_eq!(ex.terms.len(), 1);
        assert_eq!(ex.terms[0].coeff, q(1));
    }

    #[test]
    fn alpha_reassembles() {
        let p = sample();
        for xi in [qq(-1, 2), q(0), q(2)] {
            for idx in Index3::up_to(3) {
                let r = connect_alpha(idx, &p, &xi).unwrap().verify("connect-alpha");
                assert_eq!(r.status, Status::Pass, "{idx:?} xi={xi} {r:?}");
            }
        }
        let ex = connect_alpha(Index3::new(1, 0, 0), &zeros(), &qq(1, 2)).unwrap();
        assert_eq!(ex.terms.len(), 2);
    }

    #[test]
    fn general_identity_target() {
        let p = sample();
        let t = [p.alpha.clone(), p.beta.clone(), p.gamma.clone(), p.delta.clone()];
        let idx = Index3::new(1, 1, 1);
        let ex = connect_general(idx, &p, t).unwrap();
        for term in &ex.terms {
            let want = if term.index == idx { q(1) } else { q(0) };
            assert_eq!(term.coeff, want, "{:?}", term.index);
        }
    }

    #[test]
    fn general_reassembles() {
        let p = sample();
        let t = [qq(1, 2), q(0), qq(-1, 2), q(1)];
        for idx in Index3::up_to(2) {
            let r = connect_general(idx, &p, t.clone()).unwrap().verify("connect-general");
            assert_eq!(r.status, Status::Pass, "{idx:?} {r:?}");
        }
        let ex = connect_general(Index3::new(0, 1, 0), &zeros(), [q(0), qq(1, 2), q(0), q(0)]).unwrap();
        assert_eq!(ex.terms.len(), 2);
        assert_eq!(ex.verify("connect-general").status, Status::Pass);
    }

    #[test]
    fn three_term_examples() {
        let t = three_term_x(Index3::new(0, 0, 0), &zeros());
        assert_eq!((t.a.clone(), t.b.clone(), t.c.clone()), (qq(1, 4), qq(1, 4), q(0)));
        let p = sample();
        for idx in Index3::up_to(3) {
            assert_eq!(verify_three_term(idx, &p).status, Status::Pass, "{idx:?}");
        }
        // evaluating at the vertex (1,0,0) gives a scalar identity
        let idx = Index3::new(2, 1, 0);
        let t = three_term_x(idx, &p);
        let at = Point::new(q(1), q(0), q(0));
        let ev = |i: Index3| simplex_poly(i, &p).eval(&at);
        let lhs = ev(idx);
        let rhs = &t.a * ev(Index3::new(3, 1, 0)) + &t.b * ev(idx) + &t.c * ev(Index3::new(1, 1, 0));
        assert_eq!(lhs, rhs);
    }
}
