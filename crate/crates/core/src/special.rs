//! Pochhammer symbols, integer-offset gamma ratios and terminating
//! hypergeometric sums, all in exact arithmetic.

use num_traits::{One, Zero};

use crate::error::MathError;
use crate::ratpoly::{fmt_rational, q, MPoly, Rational};

/// Rising factorial `(lambda)_n = lambda (lambda+1) ... (lambda+n-1)`.
pub fn pochhammer(lambda: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = lambda.clone();
    for _ in 0..n {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// `Gamma(base + offset) / Gamma(base)` with an integer offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRatioSpec {
    pub base: Rational,
    pub offset: i64,
}

impl GammaRatioSpec {
    pub fn new(base: Rational, offset: i64) -> Self {
        Self { base, offset }
    }
}

/// Exact value of `Gamma(base + offset) / Gamma(base)`.
///
/// A non-negative offset is the Pochhammer symbol `(base)_offset`; a negative
/// offset is `1 / (base + offset)_(-offset)`, which fails with
/// [`MathError::PoleHit`] when one of the factors vanishes.
pub fn gamma_ratio(spec: &GammaRatioSpec) -> Result<Rational, MathError> {
    if spec.offset >= 0 {
        return Ok(pochhammer(&spec.base, spec.offset as u32));
    }
    let k = (-spec.offset) as u32;
    let start = &spec.base + q(spec.offset);
    let den = pochhammer(&start, k);
    if den.is_zero() {
        return Err(MathError::PoleHit(format!(
            "Gamma({}) / Gamma({})",
            fmt_rational(&start),
            fmt_rational(&spec.base)
        )));
    }
    Ok(den.recip())
}

/// Coefficients `t_m` of a terminating series with ratio
/// `t_{m+1}/t_m = (m-n) prod(top_i + m) / ((m+1) prod(bottom_j + m))`.
fn terminating_terms(n: u32, top: &[&Rational], bottom: &[&Rational]) -> Result<Vec<Rational>, MathError> {
    let mut terms = Vec::with_capacity(n as usize + 1);
    let mut t = Rational::one();
    terms.push(t.clone());
    for m in 0..n {
        let mq = q(i64::from(m));
        let mut num = q(i64::from(m) - i64::from(n));
        for a in top {
            num *= *a + &mq;
        }
        let mut den = &mq + Rational::one();
        for b in bottom {
            let f = *b + &mq;
            if f.is_zero() {
                return Err(MathError::PoleHit(format!(
                    "denominator parameter {} at term {}",
                    fmt_rational(b),
                    m + 1
                )));
            }
            den *= f;
        }
        t = t * num / den;
        terms.push(t.clone());
    }
    Ok(terms)
}

/// `2F1(-n, b; c; x)` as a polynomial, with `x` itself a polynomial.
pub fn hyper2f1_terminating(n: u32, b: &Rational, c: &Rational, x: &MPoly) -> Result<MPoly, MathError> {
    let terms = terminating_terms(n, &[b], &[c])?;
    let mut out = MPoly::zero();
    let mut xp = MPoly::one();
    for (m, t) in terms.iter().enumerate() {
        if !t.is_zero() {
            out += xp.scale(t);
        }
        if m < n as usize {
            xp = &xp * x;
        }
    }
    Ok(out)
}

/// `3F2(-n, a2, a3; b1, b2; 1)`.
pub fn hyper3f2_unit(
    n: u32,
    a2: &Rational,
    a3: &Rational,
    b1: &Rational,
    b2: &Rational,
) -> Result<Rational, MathError> {
    let terms = terminating_terms(n, &[a2, a3], &[b1, b2])?;
    Ok(terms.into_iter().fold(Rational::zero(), |acc, t| acc + t))
}
