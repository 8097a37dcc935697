//! Shifted Jacobi polynomials on `(0,1)`, their norms, the twelve ladder
//! operators and the second-order identities built from them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use statrs::function::gamma::ln_gamma;

use crate::error::MathError;
use crate::ladder::{Composition, Family, ParamTuple, SparseRelation};
use crate::operator::DiffOperator;
use crate::ratpoly::{q, MPoly, Rational};
use crate::special::{factorial, pochhammer};

/// Parameters `(a, b)` of `P̃_n^(a,b)`, orthogonal against `(1-x)^a x^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    pub a: Rational,
    pub b: Rational,
}

impl JacobiParams {
    /// Validated constructor: both parameters must exceed `-1`.
    pub fn new(a: Rational, b: Rational) -> Result<Self, MathError> {
        let p = Self { a, b };
        p.validate()?;
        Ok(p)
    }

    /// No range check; shifted parameters in relations routinely leave the orthogonality range.
    pub fn raw(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn validate(&self) -> Result<(), MathError> {
        check_above_minus_one(&[("a", &self.a), ("b", &self.b)])
    }
}

pub(crate) fn check_above_minus_one(values: &[(&str, &Rational)]) -> Result<(), MathError> {
    for (name, v) in values {
        if **v <= q(-1) {
            return Err(MathError::InvalidParameter(format!(
                "{name} = {} must be > -1",
                crate::ratpoly::fmt_rational(v)
            )));
        }
    }
    Ok(())
}

impl ParamTuple for JacobiParams {
    fn to_vec(&self) -> Vec<Rational> {
        vec![self.a.clone(), self.b.clone()]
    }
    fn from_slice(v: &[Rational]) -> Self {
        Self::raw(v[0].clone(), v[1].clone())
    }
}

/// Coefficients of `P̃_n^(a,b)(x)` in the monomial basis, lowest degree first.
///
/// Uses `((a+1)_n / n!) 2F1(-n, n+a+b+1; a+1; 1-x)` with `(a+1)_n` divided
/// into each term, which keeps the formula finite for every rational `a`.
pub fn shifted_jacobi_coeffs(n: u32, a: &Rational, b: &Rational) -> Vec<Rational> {
    let nn = n as usize;
    let mut out = vec![Rational::zero(); nn + 1];
    let n_fact = factorial(n);
    let top = q(i64::from(n)) + a + b + Rational::one();
    // binomial row of (1-x)^m, updated in place
    let mut binom = vec![Rational::zero(); nn + 1];
    binom[0] = Rational::one();
    for m in 0..=n {
        let mi = m as usize;
        if m > 0 {
            for j in (1..=mi).rev() {
                let prev = binom[j - 1].clone();
                binom[j] = &binom[j] - prev;
            }
        }
        let c = pochhammer(&q(-i64::from(n)), m) * pochhammer(&top, m) * pochhammer(&(a + q(i64::from(m) + 1)), n - m)
            / (factorial(m) * &n_fact);
        if c.is_zero() {
            continue;
        }
        for j in 0..=mi {
            out[j] += &c * &binom[j];
        }
    }
    out
}

/// `P̃_n^(a,b)(x)`; the zero polynomial for negative `n`.
pub fn shifted_jacobi(n: i64, p: &JacobiParams) -> MPoly {
    if n < 0 {
        return MPoly::zero();
    }
    let coeffs = shifted_jacobi_coeffs(n as u32, &p.a, &p.b);
    MPoly::from_terms(coeffs.into_iter().enumerate().map(|(j, c)| ([j as u32, 0, 0], c)))
}

/// `h_n / h_0` for the weight `(1-x)^a x^b`.
pub fn norm_ratio(n: u32, p: &JacobiParams) -> Result<Rational, MathError> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let (a, b) = (&p.a, &p.b);
    let den = factorial(n) * (a + b + q(2 * i64::from(n) + 1)) * pochhammer(&(a + b + q(2)), n - 1);
    if den.is_zero() {
        return Err(MathError::PoleHit(format!("norm ratio at n = {n}")));
    }
    Ok(pochhammer(&(a + q(1)), n) * pochhammer(&(b + q(1)), n) / den)
}

/// `h_0 = Gamma(a+1) Gamma(b+1) / Gamma(a+b+2)` in floating point.
pub fn h0(p: &JacobiParams) -> f64 {
    let a = p.a.to_f64().unwrap_or(f64::NAN);
    let b = p.b.to_f64().unwrap_or(f64::NAN);
    (ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0)).exp()
}

/// Absolute norm `h_n` in floating point.
pub fn norm_abs(n: u32, p: &JacobiParams) -> Result<f64, MathError> {
    Ok(norm_ratio(n, p)?.to_f64().unwrap_or(f64::NAN) * h0(p))
}

/// The twelve first-order ladder operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LadderOpId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L1p,
    L2p,
    L3p,
    L4p,
    L5p,
    L6p,
}

impl LadderOpId {
    pub const ALL: [LadderOpId; 12] = [
        LadderOpId::L1,
        LadderOpId::L2,
        LadderOpId::L3,
        LadderOpId::L4,
        LadderOpId::L5,
        LadderOpId::L6,
        LadderOpId::L1p,
        LadderOpId::L2p,
        LadderOpId::L3p,
        LadderOpId::L4p,
        LadderOpId::L5p,
        LadderOpId::L6p,
    ];

    pub fn name(self) -> &'static str {
        relation(self).op
    }
}

impl fmt::Display for LadderOpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LadderOpId {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LadderOpId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| MathError::InvalidParameter(format!("unknown ladder operator {s}")))
    }
}

fn c(r: Rational) -> MPoly {
    MPoly::constant(r)
}

/// The operator `id` as it acts on `P̃_n^(a,b)`.
pub fn ladder_operator(id: LadderOpId, n: i64, p: &JacobiParams) -> DiffOperator {
    use LadderOpId::*;
    let (a, b) = (&p.a, &p.b);
    let n = q(n);
    let x = MPoly::x();
    let omx = MPoly::one_minus_x();
    let x_omx = &x * &omx;
    let apbn1 = a + b + &n + q(1);
    let (c0, cx) = match id {
        L1 => (MPoly::zero(), MPoly::one()),
        L2 => (c(apbn1), x.clone()),
        L3 => (c(apbn1), -&omx),
        L4 => (x.scale(a) - omx.scale(&(b + &n + q(1))), -&x_omx),
        L5 => (x.scale(&(a + &n + q(1))) - omx.scale(b), -&x_omx),
        L6 => (c(b.clone()), x.clone()),
        L1p => (x.scale(a) - omx.scale(b), -&x_omx),
        L2p => (c(a.clone()) + omx.scale(&n), -&x_omx),
        L3p => (c(b.clone()) + x.scale(&n), x_omx.clone()),
        L4p => (c(-&n), x.clone()),
        L5p => (c(n.clone()), omx.clone()),
        L6p => (c(a.clone()), -&omx),
    };
    DiffOperator {
        c0,
        cx,
        ..Default::default()
    }
}

macro_rules! rel {
    ($op:expr, $dn:expr, [$($dp:expr),*], |$n:ident, $p:ident| $scale:expr) => {
        SparseRelation {
            op: $op,
            dn: $dn,
            dparams: &[$($dp),*],
            scale: |$n: &i64, $p: &JacobiParams| {
                let $n = q(*$n);
                let _ = &$p;
                $scale
            },
        }
    };
}

/// Relation table: `L P̃_n^(a,b) = scale * P̃_(n+dn)^(a+da, b+db)`.
pub fn relation(id: LadderOpId) -> SparseRelation<i64, JacobiParams> {
    use LadderOpId::*;
    match id {
        L1 => rel!("L1", -1, [1, 1], |n, p| &n + &p.a + &p.b + q(1)),
        L2 => rel!("L2", 0, [1, 0], |n, p| &n + &p.a + &p.b + q(1)),
        L3 => rel!("L3", 0, [0, 1], |n, p| &n + &p.a + &p.b + q(1)),
        L4 => rel!("L4", 1, [-1, 0], |n, p| n + q(1)),
        L5 => rel!("L5", 1, [0, -1], |n, p| n + q(1)),
        L6 => rel!("L6", 0, [1, -1], |n, p| n + &p.b),
        L1p => rel!("L1p", 1, [-1, -1], |n, p| n + q(1)),
        L2p => rel!("L2p", 0, [-1, 0], |n, p| n + &p.a),
        L3p => rel!("L3p", 0, [0, -1], |n, p| n + &p.b),
        L4p => rel!("L4p", -1, [1, 0], |n, p| n + &p.b),
        L5p => rel!("L5p", -1, [0, 1], |n, p| n + &p.a),
        L6p => rel!("L6p", 0, [-1, 1], |n, p| n + &p.a),
    }
}

/// Marker type wiring the univariate family into the generic checks.
pub struct Jacobi1d;

impl Family for Jacobi1d {
    type Index = i64;
    type Params = JacobiParams;
    type OpId = LadderOpId;

    fn is_valid(idx: &i64) -> bool {
        *idx >= 0
    }
    fn index_vec(idx: &i64) -> Vec<i64> {
        vec![*idx]
    }
    fn member(idx: &i64, p: &JacobiParams) -> MPoly {
        shifted_jacobi(*idx, p)
    }
    fn operator(op: LadderOpId, idx: &i64, p: &JacobiParams) -> DiffOperator {
        ladder_operator(op, *idx, p)
    }
    fn relation(op: LadderOpId) -> SparseRelation<i64, JacobiParams> {
        relation(op)
    }
}

macro_rules! comp {
    ($id:expr, $outer:ident, $inner:ident, $ds:expr, [$($dp:expr),*], |$n:ident, $a:ident, $b:ident| $eig:expr) => {
        Composition {
            id: $id,
            outer: LadderOpId::$outer,
            inner: LadderOpId::$inner,
            dsrc: $ds,
            dsrc_params: &[$($dp),*],
            eigen: |$n: &i64, p: &JacobiParams| {
                let $n = q(*$n);
                let ($a, $b) = (&p.a, &p.b);
                let _ = ($a, $b);
                $eig
            },
        }
    };
}

/// The 24 second-order identities: twelve on shifted members, twelve on `P̃_n^(a,b)` itself.
pub fn compositions() -> Vec<Composition<i64, LadderOpId, JacobiParams>> {
    vec![
        comp!("L-I.01:L1p*L1", L1p, L1, 0, [-1, -1], |n, a, b| &n
            * (&n + a + b - q(1))),
        comp!("L-I.02:L1*L1p", L1, L1p, 0, [0, 0], |n, a, b| (&n + q(1))
            * (a + b + &n)),
        comp!("L-I.03:L2p*L2", L2p, L2, 0, [-1, 1], |n, a, b| (&n + a)
            * (&n + a + b + q(1))),
        comp!("L-I.04:L2*L2p", L2, L2p, 0, [0, 1], |n, a, b| (&n + a)
            * (&n + a + b + q(1))),
        comp!("L-I.05:L3p*L3", L3p, L3, 0, [1, -1], |n, a, b| (&n + b)
            * (&n + a + b + q(1))),
        comp!("L-I.06:L3*L3p", L3, L3p, 0, [1, 0], |n, a, b| (&n + b)
            * (&n + a + b + q(1))),
        comp!("L-I.07:L4p*L4", L4p, L4, -1, [0, 1], |n, a, b| &n * (&n + b + q(1))),
        comp!("L-I.08:L4*L4p", L4, L4p, 0, [-1, 1], |n, a, b| &n * (&n + b + q(1))),
        comp!("L-I.09:L5p*L5", L5p, L5, -1, [1, 0], |n, a, b| &n * (&n + a + q(1))),
        comp!("L-I.10:L5*L5p", L5, L5p, 0, [1, -1], |n, a, b| &n * (&n + a + q(1))),
        comp!("L-I.11:L6p*L6", L6p, L6, 0, [-1, 0], |n, a, b| (&n + a) * (&n + b)),
        comp!("L-I.12:L6*L6p", L6, L6p, 0, [0, -1], |n, a, b| (&n + a) * (&n + b)),
        comp!("L-II.01:L1p*L1", L1p, L1, 0, [0, 0], |n, a, b| &n * (&n + a + b + q(1))),
        comp!("L-II.02:L1*L1p", L1, L1p, 0, [0, 0], |n, a, b| (&n + q(1))
            * (a + b + &n)),
        comp!("L-II.03:L2p*L2", L2p, L2, 0, [0, 0], |n, a, b| (&n + a + q(1))
            * (&n + a + b + q(1))),
        comp!("L-II.04:L2*L2p", L2, L2p, 0, [0, 0], |n, a, b| (&n + a) * (&n + a + b)),
        comp!("L-II.05:L3p*L3", L3p, L3, 0, [0, 0], |n, a, b| (&n + b + q(1))
            * (&n + a + b + q(1))),
        comp!("L-II.06:L3*L3p", L3, L3p, 0, [0, 0], |n, a, b| (&n + b) * (&n + a + b)),
        comp!("L-II.07:L4p*L4", L4p, L4, 0, [0, 0], |n, a, b| (&n + q(1))
            * (&n + b + q(1))),
        comp!("L-II.08:L4*L4p", L4, L4p, 0, [0, 0], |n, a, b| &n * (&n + b)),
        comp!("L-II.09:L5p*L5", L5p, L5, 0, [0, 0], |n, a, b| (&n + q(1))
            * (&n + a + q(1))),
        comp!("L-II.10:L5*L5p", L5, L5p, 0, [0, 0], |n, a, b| &n * (&n + a)),
        comp!("L-II.11:L6p*L6", L6p, L6, 0, [0, 0], |n, a, b| (&n + a + q(1))
            * (&n + b)),
        comp!("L-II.12:L6*L6p", L6, L6p, 0, [0, 0], |n, a, b| (&n + a)
            * (&n + b + q(1))),
    ]
}
