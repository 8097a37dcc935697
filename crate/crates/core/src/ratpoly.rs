//! Sparse polynomials in `(x, y, z)` with exact rational coefficients.
//!
//! Every polynomial in the crate lives in [`MPoly`]. Terms are kept in a
//! `BTreeMap` keyed by the exponent triple with zero coefficients removed,
//! so structural equality is polynomial equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Exponent triple `(i, j, k)` of the monomial `x^i y^j z^k`.
pub type Exp = [u32; 3];

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn qq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `num` or `num/den`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num`, `num/den` or a plain decimal such as `0.25` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Ok(r) = s.parse::<Rational>() {
        return Some(r);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.')?;
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(numer, denom);
    Some(if neg { -r } else { r })
}

/// One of the three coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

/// An evaluation point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }
}

/// The linear factors that may appear in operator denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearFactor {
    /// `1 - x`
    OneMinusX,
    /// `1 - x - y`
    OneMinusXY,
    /// `1 - x - y - z`
    OneMinusXYZ,
}

impl LinearFactor {
    pub const ALL: [LinearFactor; 3] = [
        LinearFactor::OneMinusXYZ,
        LinearFactor::OneMinusXY,
        LinearFactor::OneMinusX,
    ];

    pub fn to_poly(self) -> MPoly {
        match self {
            LinearFactor::OneMinusX => MPoly::one_minus_x(),
            LinearFactor::OneMinusXY => MPoly::one_minus_xy(),
            LinearFactor::OneMinusXYZ => MPoly::one_minus_xyz(),
        }
    }

    /// Writes the factor as `c - v` with `v` the leading variable and `c` free of `v`.
    fn split(self) -> (Var, MPoly) {
        match self {
            LinearFactor::OneMinusX => (Var::X, MPoly::one()),
            LinearFactor::OneMinusXY => (Var::Y, MPoly::one_minus_x()),
            LinearFactor::OneMinusXYZ => (Var::Z, MPoly::one_minus_xy()),
        }
    }
}

/// Structured denominator `(1-x)^p (1-x-y)^q (1-x-y-z)^r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Denom {
    pub one_minus_x: u32,
    pub one_minus_xy: u32,
    pub one_minus_xyz: u32,
}

impl Denom {
    pub const ONE: Denom = Denom {
        one_minus_x: 0,
        one_minus_xy: 0,
        one_minus_xyz: 0,
    };

    pub const fn new(one_minus_x: u32, one_minus_xy: u32, one_minus_xyz: u32) -> Self {
        Self {
            one_minus_x,
            one_minus_xy,
            one_minus_xyz,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Denom::ONE
    }

    pub fn to_poly(&self) -> MPoly {
        MPoly::one_minus_x().pow(self.one_minus_x)
            * MPoly::one_minus_xy().pow(self.one_minus_xy)
            * MPoly::one_minus_xyz().pow(self.one_minus_xyz)
    }

    /// Componentwise maximum: the least common multiple of two denominators.
    pub fn lcm(&self, other: &Denom) -> Denom {
        Denom {
            one_minus_x: self.one_minus_x.max(other.one_minus_x),
            one_minus_xy: self.one_minus_xy.max(other.one_minus_xy),
            one_minus_xyz: self.one_minus_xyz.max(other.one_minus_xyz),
        }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Denom) -> Denom {
        Denom {
            one_minus_x: self.one_minus_x - other.one_minus_x,
            one_minus_xy: self.one_minus_xy - other.one_minus_xy,
            one_minus_xyz: self.one_minus_xyz - other.one_minus_xyz,
        }
    }

    /// Exact division of `p` by this denominator.
    pub fn divide(&self, p: &MPoly) -> Result<MPoly, PolyError> {
        let mut out = p.clone();
        for _ in 0..self.one_minus_xyz {
            out = out.div_linear(LinearFactor::OneMinusXYZ)?;
        }
        for _ in 0..self.one_minus_xy {
            out = out.div_linear(LinearFactor::OneMinusXY)?;
        }
        for _ in 0..self.one_minus_x {
            out = out.div_linear(LinearFactor::OneMinusX)?;
        }
        Ok(out)
    }
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: Rational, exp: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut exp = [0; 3];
        exp[v.slot()] = 1;
        Self::monomial(Rational::one(), exp)
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    /// `1 - x`
    pub fn one_minus_x() -> Self {
        Self::from_terms([([0, 0, 0], q(1)), ([1, 0, 0], q(-1))])
    }

    /// `1 - x - y`
    pub fn one_minus_xy() -> Self {
        Self::from_terms([([0, 0, 0], q(1)), ([1, 0, 0], q(-1)), ([0, 1, 0], q(-1))])
    }

    /// `w = 1 - x - y - z`
    pub fn one_minus_xyz() -> Self {
        Self::from_terms([
            ([0, 0, 0], q(1)),
            ([1, 0, 0], q(-1)),
            ([0, 1, 0], q(-1)),
            ([0, 0, 1], q(-1)),
        ])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `x^i y^j z^k` (zero when absent).
    pub fn coeff(&self, exp: Exp) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum exponent of `v` over all terms; zero for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        let s = v.slot();
        self.terms.keys().map(|e| e[s]).max().unwrap_or(0)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max().unwrap_or(0)
    }

    /// Value of the constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative.
    pub fn diff(&self, v: Var) -> MPoly {
        let s = v.slot();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[s] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[s] -= 1;
            terms.insert(ne, c * q(i64::from(e[s])));
        }
        MPoly { terms }
    }

    /// Splits the polynomial by powers of `v`: entry `k` is the coefficient of `v^k`.
    fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let s = v.slot();
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let mut ne = *e;
            let k = ne[s] as usize;
            ne[s] = 0;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    fn shift_in(&self, v: Var, k: u32) -> MPoly {
        let s = v.slot();
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = *e;
                    ne[s] += k;
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Synthetic division by one linear factor `c - v`.
    fn div_linear(&self, f: LinearFactor) -> Result<MPoly, PolyError> {
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        let (v, c) = f.split();
        let coeffs = self.coefficients_in(v);
        let d = coeffs.len() - 1;
        if d == 0 {
            return Err(PolyError::NonzeroRemainder {
                remainder: self.clone(),
            });
        }
        // p = (v - c) * Q + r with Q = sum q_k v^k
        let mut qs = vec![MPoly::zero(); d];
        qs[d - 1] = coeffs[d].clone();
        for k in (1..d).rev() {
            qs[k - 1] = &coeffs[k] + &(&c * &qs[k]);
        }
        let remainder = &coeffs[0] + &(&c * &qs[0]);
        if !remainder.is_zero() {
            return Err(PolyError::NonzeroRemainder { remainder });
        }
        let mut out = MPoly::zero();
        for (k, qk) in qs.iter().enumerate() {
            out -= qk.shift_in(v, k as u32);
        }
        Ok(out)
    }

    /// Exact quotient `self / d` where `d` is a nonzero constant times a product of
    /// `1-x`, `1-x-y` and `1-x-y-z`.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rest = d.clone();
        let mut denom = Denom::ONE;
        for f in LinearFactor::ALL {
            while rest.as_constant().is_none() {
                match rest.div_linear(f) {
                    Ok(quot) => {
                        rest = quot;
                        match f {
                            LinearFactor::OneMinusX => denom.one_minus_x += 1,
                            LinearFactor::OneMinusXY => denom.one_minus_xy += 1,
                            LinearFactor::OneMinusXYZ => denom.one_minus_xyz += 1,
                        }
                    }
                    Err(_) => break,
                }
            }
        }
        let c = rest
            .as_constant()
            .ok_or_else(|| PolyError::UnsupportedDivisor { divisor: d.clone() })?;
        let quot = denom.divide(self)?;
        Ok(quot.scale(&c.recip()))
    }

    /// Exact evaluation.
    pub fn eval(&self, at: &Point) -> Rational {
        let dx = self.degree_in(Var::X) as usize;
        let dy = self.degree_in(Var::Y) as usize;
        let dz = self.degree_in(Var::Z) as usize;
        let px = powers(&at.x, dx);
        let py = powers(&at.y, dy);
        let pz = powers(&at.z, dz);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * &px[e[0] as usize] * &py[e[1] as usize] * &pz[e[2] as usize];
        }
        acc
    }

    /// Coefficients converted to `f64` for fast floating-point evaluation.
    pub fn to_f64(&self) -> F64Poly {
        F64Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.to_f64().unwrap_or(f64::NAN)))
                .collect(),
        }
    }

    /// `sum_j coeffs[j] * top^j * base^(degree - j)` where `coeffs` are the
    /// coefficients of a univariate polynomial in `x`.
    ///
    /// With `top = y` and `base = 1 - x` this is `(1-x)^degree * p(y / (1-x))`.
    pub fn homogeneous_substitution(univariate: &MPoly, degree: u32, top: &MPoly, base: &MPoly) -> MPoly {
        let mut base_pows = Vec::with_capacity(degree as usize + 1);
        base_pows.push(MPoly::one());
        for j in 1..=degree as usize {
            base_pows.push(&base_pows[j - 1] * base);
        }
        let mut out = MPoly::zero();
        let mut top_pow = MPoly::one();
        for j in 0..=degree {
            let c = univariate.coeff([j, 0, 0]);
            if !c.is_zero() {
                out += (&top_pow * &base_pows[(degree - j) as usize]).scale(&c);
            }
            top_pow = &top_pow * top;
        }
        out
    }

    fn integer_form(&self) -> (Vec<(Exp, BigInt)>, BigInt) {
        let l = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .terms
            .iter()
            .map(|(e, c)| (*e, c.numer() * (&l / c.denom())))
            .collect();
        (ints, l)
    }

    fn mul_impl(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        // Multiply over a common denominator so the inner loop stays in the integers.
        let (a, da) = self.integer_form();
        let (b, db) = other.integer_form();
        let mut acc: HashMap<Exp, BigInt> = HashMap::with_capacity(a.len() * b.len());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let den = da * db;
        MPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, Rational::new(c, den.clone())))
                .collect(),
        }
    }
}

fn powers(v: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for i in 1..=n {
        let next = &out[i - 1] * v;
        out.push(next);
    }
    out
}

/// Floating-point image of an [`MPoly`].
#[derive(Clone, Debug)]
pub struct F64Poly {
    terms: Vec<(Exp, f64)>,
}

impl F64Poly {
    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * x.powi(e[0] as i32) * y.powi(e[1] as i32) * z.powi(e[2] as i32))
            .sum()
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Add<&MPoly> for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: &MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&MPoly> for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: &MPoly) -> MPoly {
        self -= rhs;
        self
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for MPoly {
    fn sub_assign(&mut self, rhs: MPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_impl(rhs)
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self.mul_impl(&rhs)
    }
}

impl Mul<&MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_impl(rhs)
    }
}

impl Mul<MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self.mul_impl(&rhs)
    }
}

impl Mul<&Rational> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &Rational) -> MPoly {
        self.scale(rhs)
    }
}

impl Mul<Rational> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: Rational) -> MPoly {
        self.scale(&rhs)
    }
}

fn order_key(e: &Exp) -> (u32, u32, u32, u32) {
    (e[0] + e[1] + e[2], e[0], e[1], e[2])
}

impl fmt::Display for MPoly {
    /// Terms in descending total degree, written `coeff * x^i y^j z^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by_key(|e| std::cmp::Reverse(order_key(e.0)));
        for (pos, (e, c)) in entries.into_iter().enumerate() {
            let mag = fmt_rational(&c.abs());
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{mag}")?;
            let mono: Vec<String> = ["x", "y", "z"]
                .iter()
                .zip(e.iter())
                .filter(|(_, p)| **p > 0)
                .map(|(v, p)| format!("{v}^{p}"))
                .collect();
            if !mono.is_empty() {
                write!(f, " * {}", mono.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> MPoly {
        MPoly::x()
    }
    fn y() -> MPoly {
        MPoly::y()
    }
    fn z() -> MPoly {
        MPoly::z()
    }
    fn c(n: i64) -> MPoly {
        MPoly::constant(q(n))
    }

    #[test]
    fn add_examples() {
        assert_eq!((x() + c(1)) + (-x()), c(1));
        let p = &x() * &y() + c(3);
        assert_eq!(&p + &MPoly::zero(), p);
        let xy = &x() * &y();
        assert_eq!(&xy + &xy, xy.scale(&q(2)));
    }

    #[test]
    fn mul_examples() {
        let omx = MPoly::one_minus_x();
        assert_eq!(&omx * &omx, c(1) - x().scale(&q(2)) + &x() * &x());
        let p = &x() * &y() + z();
        assert_eq!(&p * &MPoly::one(), p);
        assert_eq!((x() + y()) * (x() - y()), &x() * &x() - &y() * &y());
    }

    #[test]
    fn diff_examples() {
        let x2y = &(&x() * &x()) * &y();
        assert_eq!(x2y.diff(Var::X), (&x() * &y()).scale(&q(2)));
        assert_eq!(c(7).diff(Var::Z), MPoly::zero());
        let xyz = &(&x() * &y()) * &z();
        assert_eq!(xyz.diff(Var::Z), &x() * &y());
    }

    #[test]
    fn div_exact_examples() {
        let p = c(1) - x().scale(&q(2)) + &x() * &x();
        assert_eq!(p.div_exact(&MPoly::one_minus_x()).unwrap(), MPoly::one_minus_x());
        let p = &MPoly::one_minus_xy() * &y();
        assert_eq!(p.div_exact(&MPoly::one_minus_xy()).unwrap(), y());
        match x().div_exact(&MPoly::one_minus_x()) {
            Err(PolyError::NonzeroRemainder { remainder }) => assert_eq!(remainder, c(1)),
            other => panic!("expected remainder, got {other:?}"),
        }
    }

    #[test]
    fn div_exact_product_and_scaled_divisors() {
        let d = (&MPoly::one_minus_x() * &MPoly::one_minus_xy()).scale(&qq(-3, 2));
        let p = &(&x() * &z() + c(2)) * &d;
        assert_eq!(p.div_exact(&d).unwrap(), &x() * &z() + c(2));
        assert!(matches!(
            c(1).div_exact(&(x() + y())),
            Err(PolyError::UnsupportedDivisor { .. })
        ));
        assert!(matches!(c(1).div_exact(&MPoly::zero()), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn eval_examples() {
        let p = x() + y() + z();
        let at = Point::new(qq(1, 2), qq(1, 4), qq(1, 8));
        assert_eq!(p.eval(&at), qq(7, 8));
        assert_eq!(MPoly::zero().eval(&at), q(0));
        let omx2 = MPoly::one_minus_x().pow(2);
        assert_eq!(omx2.eval(&Point::new(qq(1, 3), q(0), q(0))), qq(4, 9));
    }

    #[test]
    fn display_format() {
        let p = x().scale(&q(4)) - c(1);
        assert_eq!(p.to_string(), "4 * x^1 - 1");
        let p = (&x() * &y()).scale(&qq(-1, 2)) + z().pow(2);
        assert_eq!(p.to_string(), "-1/2 * x^1 y^1 + 1 * z^2");
        assert_eq!(MPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/6"), Some(qq(1, 2)));
        assert_eq!(parse_rational("-2"), Some(q(-2)));
        assert_eq!(parse_rational("0.25"), Some(qq(1, 4)));
        assert_eq!(parse_rational("-.5"), Some(qq(-1, 2)));
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn homogeneous_substitution_matches_direct_expansion() {
        // p(t) = 2t - 1, degree 1: (1-x) p(y/(1-x)) = 2y - (1-x)
        let p = x().scale(&q(2)) - c(1);
        let h = MPoly::homogeneous_substitution(&p, 1, &y(), &MPoly::one_minus_x());
        assert_eq!(h, y().scale(&q(2)) - MPoly::one_minus_x());
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5)
            .prop_map(|ts| MPoly::from_terms(ts.into_iter().map(|((i, j, k), n, d)| ([i, j, k], qq(n, d)))))
    }

    fn arb_divisor() -> impl Strategy<Value = MPoly> {
        (0u32..2, 0u32..2, 0u32..2, 1i64..4).prop_map(|(a, b, c_, k)| Denom::new(a, b, c_).to_poly().scale(&q(k)))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
            prop_assert_eq!(&p + &r, &r + &p);
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &r, &r * &p);
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
            prop_assert_eq!(&p * &MPoly::one(), p.clone());
            prop_assert_eq!(&p + &MPoly::zero(), p.clone());
        }

        #[test]
        fn div_exact_inverts_mul(p in arb_poly(), d in arb_divisor()) {
            prop_assert_eq!((&p * &d).div_exact(&d).unwrap(), p);
        }

        #[test]
        fn leibniz_rule(p in arb_poly(), r in arb_poly()) {
            for v in [Var::X, Var::Y, Var::Z] {
                let lhs = (&p * &r).diff(v);
                let rhs = &p.diff(v) * &r + &p * &r.diff(v);
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!((&p + &r).diff(v), p.diff(v) + r.diff(v));
            }
        }

        #[test]
        fn grid_agreement_matches_structural_equality(p in arb_poly(), r in arb_poly()) {
            // degree <= 2 per variable for each, so a 3x3x3 grid decides equality
            let grid: Vec<Rational> = (0..3).map(|i| qq(i, 3)).collect();
            let mut agree = true;
            for gx in &grid { for gy in &grid { for gz in &grid {
                let at = Point::new(gx.clone(), gy.clone(), gz.clone());
                if p.eval(&at) != r.eval(&at) { agree = false; }
            }}}
            prop_assert_eq!(agree, p == r);
        }
    }
}
