//! The four-parameter family `P_{n,k}^(a,b,c,d)` on the triangle, its 24
//! ladder operators, second-order identities, PDEs and monic solution.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::MathError;
use crate::jacobi1d::{check_above_minus_one, h0, norm_ratio, shifted_jacobi, JacobiParams};
use crate::ladder::{Composition, Family, ParamTuple, SparseRelation};
use crate::operator::{DiffOperator, SecondOrderOperator};
use crate::ratpoly::{q, Denom, MPoly, Rational};
use crate::special::{factorial, gamma_ratio, hyper2f1_terminating, pochhammer, GammaRatioSpec};

/// Weight `x^a y^b (1-x-y)^c (1-x)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl TriangleParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, MathError> {
        let p = Self::raw(a, b, c, d);
        p.validate()?;
        Ok(p)
    }

    pub fn raw(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn validate(&self) -> Result<(), MathError> {
        check_above_minus_one(&[("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d)])
    }

    /// `a + b + c + d`
    pub fn sum(&self) -> Rational {
        &self.a + &self.b + &self.c + &self.d
    }
}

impl ParamTuple for TriangleParams {
    fn to_vec(&self) -> Vec<Rational> {
        vec![self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
    fn from_slice(v: &[Rational]) -> Self {
        Self::raw(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    }
}

/// Degree pair `(n, k)`; valid when `0 <= k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriIndex {
    pub n: i64,
    pub k: i64,
}

impl TriIndex {
    pub const fn new(n: i64, k: i64) -> Self {
        Self { n, k }
    }

    pub fn is_valid(&self) -> bool {
        0 <= self.k && self.k <= self.n
    }

    /// All valid indices with `n <= max_n`.
    pub fn up_to(max_n: u32) -> Vec<TriIndex> {
        let mut out = Vec::new();
        for n in 0..=i64::from(max_n) {
            for k in 0..=n {
                out.push(TriIndex::new(n, k));
            }
        }
        out
    }
}

impl Add for TriIndex {
    type Output = TriIndex;
    fn add(self, o: TriIndex) -> TriIndex {
        TriIndex::new(self.n + o.n, self.k + o.k)
    }
}

/// `P_{n,k}^(a,b,c,d)`; zero outside `0 <= k <= n`.
pub fn triangle_poly(idx: TriIndex, p: &TriangleParams) -> MPoly {
    if !idx.is_valid() {
        return MPoly::zero();
    }
    let (n, k) = (idx.n, idx.k);
    let outer = shifted_jacobi(
        n - k,
        &JacobiParams::raw(q(2 * k + 1) + &p.b + &p.c + &p.d, p.a.clone()),
    );
    let inner = shifted_jacobi(k, &JacobiParams::raw(p.c.clone(), p.b.clone()));
    let inner = MPoly::homogeneous_substitution(&inner, k as u32, &MPoly::y(), &MPoly::one_minus_x());
    &outer * &inner
}

/// Norm of `P_{n,k}` divided by the norm of `P_{0,0}`.
pub fn triangle_norm_ratio(idx: TriIndex, p: &TriangleParams) -> Result<Rational, MathError> {
    if !idx.is_valid() {
        return Err(MathError::InvalidParameter(format!("index ({}, {})", idx.n, idx.k)));
    }
    let (n, k) = (idx.n as u32, idx.k as u32);
    let a0 = &p.b + &p.c + &p.d + q(1);
    let ak = &a0 + q(2 * i64::from(k));
    let shift = pochhammer(&(&a0 + q(1)), 2 * k) / pochhammer(&(&a0 + &p.a + q(2)), 2 * k);
    Ok(norm_ratio(n - k, &JacobiParams::raw(ak, p.a.clone()))?
        * shift
        * norm_ratio(k, &JacobiParams::raw(p.c.clone(), p.b.clone()))?)
}

/// Absolute weighted norm in floating point.
pub fn triangle_norm_abs(idx: TriIndex, p: &TriangleParams) -> Result<f64, MathError> {
    let a0 = &p.b + &p.c + &p.d + q(1);
    let base = h0(&JacobiParams::raw(a0, p.a.clone())) * h0(&JacobiParams::raw(p.c.clone(), p.b.clone()));
    Ok(triangle_norm_ratio(idx, p)?.to_f64().unwrap_or(f64::NAN) * base)
}

/// The 24 bivariate ladder operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MOpId {
    M01,
    M02,
    M03,
    M04,
    M05,
    M06,
    M01p,
    M02p,
    M03p,
    M04p,
    M05p,
    M06p,
    M10,
    M20,
    M30,
    M40,
    M50,
    M60,
    M10p,
    M20p,
    M30p,
    M40p,
    M50p,
    M60p,
}

impl MOpId {
    pub const ALL: [MOpId; 24] = {
        use MOpId::*;
        [
            M01, M02, M03, M04, M05, M06, M01p, M02p, M03p, M04p, M05p, M06p, M10, M20, M30, M40, M50, M60, M10p, M20p,
            M30p, M40p, M50p, M60p,
        ]
    };

    pub fn name(self) -> &'static str {
        m_relation(self).op
    }
}

impl fmt::Display for MOpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MOpId {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MOpId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| MathError::InvalidParameter(format!("unknown triangle operator {s}")))
    }
}

fn c(r: Rational) -> MPoly {
    MPoly::constant(r)
}

/// The operator `id` as it acts on `P_{n,k}^(a,b,c,d)`.
pub fn m_operator(id: MOpId, idx: TriIndex, p: &TriangleParams) -> DiffOperator {
    use MOpId::*;
    let (a, b, cc, d) = (&p.a, &p.b, &p.c, &p.d);
    let n = q(idx.n);
    let k = q(idx.k);
    let s4 = p.sum();
    let x = MPoly::x();
    let y = MPoly::y();
    let qq_ = MPoly::one_minus_x();
    let s = MPoly::one_minus_xy();
    let xq = &x * &qq_;
    let xy = &x * &y;
    let ys = &y * &s;
    let over_q = Denom::new(1, 0, 0);
    let kbc1 = &k + b + cc + q(1);
    let nks2 = &n + &k + &s4 + q(2);
    let nkbcd1 = &n + &k + b + cc + d + q(1);
    let (c0, cx, cy, denom) = match id {
        M01 => (MPoly::zero(), MPoly::zero(), MPoly::one(), Denom::ONE),
        M02 => (c(kbc1), MPoly::zero(), y.clone(), Denom::ONE),
        M03 => (c(kbc1), MPoly::zero(), -&s, Denom::ONE),
        M04 => (y.scale(cc) - s.scale(&(b + &k + q(1))), MPoly::zero(), -&ys, Denom::ONE),
        M05 => (y.scale(&(cc + &k + q(1))) - s.scale(b), MPoly::zero(), -&ys, Denom::ONE),
        M06 => (c(b.clone()), MPoly::zero(), y.clone(), Denom::ONE),
        M01p => (y.scale(cc) - s.scale(b), MPoly::zero(), -&ys, Denom::ONE),
        M02p => (qq_.scale(&(cc + &k)) - y.scale(&k), MPoly::zero(), -&ys, over_q),
        M03p => (qq_.scale(b) + y.scale(&k), MPoly::zero(), ys.clone(), over_q),
        M04p => (c(-&k), MPoly::zero(), y.clone(), over_q),
        M05p => (c(k.clone()), MPoly::zero(), s.clone(), over_q),
        M06p => (c(cc.clone()), MPoly::zero(), -&s, Denom::ONE),
        M10 => (c(k.clone()), qq_.clone(), -&y, over_q),
        M10p => (x.scale(&(&k + &s4 + q(1))) - c(a.clone()), -&xq, xy.clone(), Denom::ONE),
        M20 => (qq_.scale(&nks2) + x.scale(&k), xq.clone(), -&xy, over_q),
        M20p => (c(nkbcd1.clone()) - x.scale(&n), -&xq, xy.clone(), Denom::ONE),
        M30 => (c(&n + &s4 + q(2)), -&qq_, y.clone(), Denom::ONE),
        M30p => (c(a.clone()) + x.scale(&n), xq.clone(), -&xy, Denom::ONE),
        M40 => (
            x.scale(&(&n + &s4 + q(2))) - c(a + &n - &k + q(1)),
            -&xq,
            xy.clone(),
            Denom::ONE,
        ),
        M40p => (c(k.clone()) - qq_.scale(&n), xq.clone(), -&xy, over_q),
        M50 => (x.scale(&(&n + &s4 + q(2))) - c(a.clone()), -&xq, xy.clone(), Denom::ONE),
        M50p => (c(n.clone()), qq_.clone(), -&y, Denom::ONE),
        M60 => (qq_.scale(a) + x.scale(&k), xq.clone(), -&xy, over_q),
        M60p => (c(&k + b + cc + d + q(1)), -&qq_, y.clone(), Denom::ONE),
    };
    DiffOperator {
        c0,
        cx,
        cy,
        cz: MPoly::zero(),
        denom,
    }
}

macro_rules! mrel {
    ($op:expr, ($dn:expr, $dk:expr), [$($dp:expr),*], |$n:ident, $k:ident, $a:ident, $b:ident, $c:ident, $d:ident| $scale:expr) => {
        SparseRelation {
            op: $op,
            dn: TriIndex::new($dn, $dk),
            dparams: &[$($dp),*],
            scale: |i: &TriIndex, p: &TriangleParams| {
                let ($n, $k) = (q(i.n), q(i.k));
                let ($a, $b, $c, $d) = (&p.a, &p.b, &p.c, &p.d);
                let _ = (&$n, &$k, $a, $b, $c, $d);
                $scale
            },
        }
    };
}

/// Relation table in parameter order `(a, b, c, d)`.
pub fn m_relation(id: MOpId) -> SparseRelation<TriIndex, TriangleParams> {
    use MOpId::*;
    match id {
        M01 => mrel!("M01", (-1, -1), [0, 1, 1, 0], |n, k, a, b, c, d| k + b + c + q(1)),
        M01p => mrel!("M01p", (1, 1), [0, -1, -1, 0], |n, k, a, b, c, d| k + q(1)),
        M02 => mrel!("M02", (0, 0), [0, 0, 1, -1], |n, k, a, b, c, d| k + b + c + q(1)),
        M02p => mrel!("M02p", (0, 0), [0, 0, -1, 1], |n, k, a, b, c, d| k + c),
        M03 => mrel!("M03", (0, 0), [0, 1, 0, -1], |n, k, a, b, c, d| k + b + c + q(1)),
        M03p => mrel!("M03p", (0, 0), [0, -1, 0, 1], |n, k, a, b, c, d| k + b),
        M04 => mrel!("M04", (1, 1), [0, 0, -1, -1], |n, k, a, b, c, d| k + q(1)),
        M04p => mrel!("M04p", (-1, -1), [0, 0, 1, 1], |n, k, a, b, c, d| k + b),
        M05 => mrel!("M05", (1, 1), [0, -1, 0, -1], |n, k, a, b, c, d| k + q(1)),
        M05p => mrel!("M05p", (-1, -1), [0, 1, 0, 1], |n, k, a, b, c, d| k + c),
        M06 => mrel!("M06", (0, 0), [0, -1, 1, 0], |n, k, a, b, c, d| k + b),
        M06p => mrel!("M06p", (0, 0), [0, 1, -1, 0], |n, k, a, b, c, d| k + c),
        M10 => mrel!("M10", (-1, 0), [1, 0, 0, 1], |n, k, a, b, c, d| n
            + k
            + a
            + b
            + c
            + d
            + q(2)),
        M10p => mrel!("M10p", (1, 0), [-1, 0, 0, -1], |n, k, a, b, c, d| n - k + q(1)),
        M20 => mrel!("M20", (0, 0), [0, 0, 0, 1], |n, k, a, b, c, d| n
            + k
            + a
            + b
            + c
            + d
            + q(2)),
        M20p => mrel!("M20p", (0, 0), [0, 0, 0, -1], |n, k, a, b, c, d| n
            + k
            + b
            + c
            + d
            + q(1)),
        M30 => mrel!("M30", (0, 0), [1, 0, 0, 0], |n, k, a, b, c, d| n
            + k
            + a
            + b
            + c
            + d
            + q(2)),
        M30p => mrel!("M30p", (0, 0), [-1, 0, 0, 0], |n, k, a, b, c, d| n - k + a),
        M40 => mrel!("M40", (1, 0), [0, 0, 0, -1], |n, k, a, b, c, d| n - k + q(1)),
        M40p => mrel!("M40p", (-1, 0), [0, 0, 0, 1], |n, k, a, b, c, d| n - k + a),
        M50 => mrel!("M50", (1, 0), [-1, 0, 0, 0], |n, k, a, b, c, d| n - k + q(1)),
        M50p => mrel!("M50p", (-1, 0), [1, 0, 0, 0], |n, k, a, b, c, d| n
            + k
            + b
            + c
            + d
            + q(1)),
        M60 => mrel!("M60", (0, 0), [-1, 0, 0, 1], |n, k, a, b, c, d| n - k + a),
        M60p => mrel!("M60p", (0, 0), [1, 0, 0, -1], |n, k, a, b, c, d| n
            + k
            + b
            + c
            + d
            + q(1)),
    }
}

/// Marker type wiring the triangle family into the generic checks.
pub struct Triangle2d;

impl Family for Triangle2d {
    type Index = TriIndex;
    type Params = TriangleParams;
    type OpId = MOpId;

    fn is_valid(idx: &TriIndex) -> bool {
        idx.is_valid()
    }
    fn index_vec(idx: &TriIndex) -> Vec<i64> {
        vec![idx.n, idx.k]
    }
    fn member(idx: &TriIndex, p: &TriangleParams) -> MPoly {
        triangle_poly(*idx, p)
    }
    fn operator(op: MOpId, idx: &TriIndex, p: &TriangleParams) -> DiffOperator {
        m_operator(op, *idx, p)
    }
    fn relation(op: MOpId) -> SparseRelation<TriIndex, TriangleParams> {
        m_relation(op)
    }
}

macro_rules! mcomp {
    ($id:expr, $outer:ident, $inner:ident, ($dn:expr, $dk:expr), [$($dp:expr),*], |$n:ident, $k:ident, $a:ident, $b:ident, $c:ident, $d:ident| $eig:expr) => {
        Composition {
            id: $id,
            outer: MOpId::$outer,
            inner: MOpId::$inner,
            dsrc: TriIndex::new($dn, $dk),
            dsrc_params: &[$($dp),*],
            eigen: |i: &TriIndex, p: &TriangleParams| {
                let ($n, $k) = (q(i.n), q(i.k));
                let ($a, $b, $c, $d) = (&p.a, &p.b, &p.c, &p.d);
                let _ = (&$n, &$k, $a, $b, $c, $d);
                $eig
            },
        }
    };
}

/// The 24 bivariate second-order identities.
pub fn m_compositions() -> Vec<Composition<TriIndex, MOpId, TriangleParams>> {
    vec![
        mcomp!(
            "M0.01:M01p*M01",
            M01p,
            M01,
            (0, 0),
            [0, -1, -1, 0],
            |n, k, a, b, c, d| &k * (&k + b + c - q(1))
        ),
        mcomp!(
            "M0.02:M01*M01p",
            M01,
            M01p,
            (0, 0),
            [0, 0, 0, 0],
            |n, k, a, b, c, d| (&k + q(1)) * (&k + b + c)
        ),
        mcomp!(
            "M0.03:M02p*M02",
            M02p,
            M02,
            (0, 0),
            [0, 1, -1, 0],
            |n, k, a, b, c, d| (&k + c) * (&k + b + c + q(1))
        ),
        mcomp!(
            "M0.04:M02*M02p",
            M02,
            M02p,
            (0, 0),
            [0, 1, 0, 0],
            |n, k, a, b, c, d| (&k + c) * (&k + b + c + q(1))
        ),
        mcomp!(
            "M0.05:M03p*M03",
            M03p,
            M03,
            (0, 0),
            [0, -1, 1, 0],
            |n, k, a, b, c, d| (&k + b) * (&k + b + c + q(1))
        ),
        mcomp!(
            "M0.06:M03*M03p",
            M03,
            M03p,
            (0, 0),
            [0, 0, 1, 0],
            |n, k, a, b, c, d| (&k + b) * (&k + b + c + q(1))
        ),
        mcomp!(
            "M0.07:M04p*M04",
            M04p,
            M04,
            (0, -1),
            [0, 1, 0, 0],
            |n, k, a, b, c, d| &k * (&k + b + q(1))
        ),
        mcomp!(
            "M0.08:M04*M04p",
            M04,
            M04p,
            (0, 0),
            [0, 1, -1, 0],
            |n, k, a, b, c, d| &k * (&k + b + q(1))
        ),
        mcomp!(
            "M0.09:M05p*M05",
            M05p,
            M05,
            (0, -1),
            [0, 0, 1, 0],
            |n, k, a, b, c, d| &k * (&k + c + q(1))
        ),
        mcomp!(
            "M0.10:M05*M05p",
            M05,
            M05p,
            (0, 0),
            [0, -1, 1, 0],
            |n, k, a, b, c, d| &k * (&k + c + q(1))
        ),
        mcomp!(
            "M0.11:M06p*M06",
            M06p,
            M06,
            (0, 0),
            [0, 0, -1, 0],
            |n, k, a, b, c, d| (&k + b) * (&k + c)
        ),
        mcomp!(
            "M0.12:M06*M06p",
            M06,
            M06p,
            (0, 0),
            [0, -1, 0, 0],
            |n, k, a, b, c, d| (&k + b) * (&k + c)
        ),
        mcomp!(
            "M.01:M10p*M10",
            M10p,
            M10,
            (0, 0),
            [-1, 0, 0, -1],
            |n, k, a, b, c, d| (&n - &k) * (&n + &k + a + b + c + d)
        ),
        mcomp!("M.02:M10*M10p", M10, M10p, (0, 0), [0, 0, 0, 0], |n, k, a, b, c, d| (&n
            - &k
            + q(1))
            * (&n + &k + a + b + c + d + q(1))),
        mcomp!(
            "M.03:M20p*M20",
            M20p,
            M20,
            (0, 0),
            [1, 0, 0, -1],
            |n, k, a, b, c, d| (&n + &k + a + b + c + d + q(2)) * (&n + &k + b + c + d + q(1))
        ),
        mcomp!(
            "M.04:M20*M20p",
            M20,
            M20p,
            (0, 0),
            [1, -1, 0, 1],
            |n, k, a, b, c, d| (&n + &k + a + b + c + d + q(2)) * (&n + &k + b + c + d + q(1))
        ),
        mcomp!(
            "M.05:M30p*M30",
            M30p,
            M30,
            (0, 0),
            [-1, 1, 0, 0],
            |n, k, a, b, c, d| (&n + &k + a + b + c + d + q(2)) * (&n - &k + a)
        ),
        mcomp!(
            "M.06:M30*M30p",
            M30,
            M30p,
            (0, 0),
            [0, 1, 0, 0],
            |n, k, a, b, c, d| (&n + &k + a + b + c + d + q(2)) * (&n - &k + a)
        ),
        mcomp!(
            "M.07:M40p*M40",
            M40p,
            M40,
            (-1, 0),
            [1, 0, 0, 0],
            |n, k, a, b, c, d| (&n - &k) * (&n - &k + a + q(1))
        ),
        mcomp!(
            "M.08:M40*M40p",
            M40,
            M40p,
            (0, 0),
            [1, -1, 0, 0],
            |n, k, a, b, c, d| (&n - &k) * (&n - &k + a + q(1))
        ),
        mcomp!(
            "M.09:M50p*M50",
            M50p,
            M50,
            (-1, 0),
            [0, 1, 0, 0],
            |n, k, a, b, c, d| (&n - &k) * (&n + &k + b + c + d + q(2))
        ),
        mcomp!(
            "M.10:M50*M50p",
            M50,
            M50p,
            (0, 0),
            [-1, 1, 0, 0],
            |n, k, a, b, c, d| (&n - &k) * (&n + &k + b + c + d + q(2))
        ),
        mcomp!(
            "M.11:M60p*M60",
            M60p,
            M60,
            (0, 0),
            [0, 0, 0, -1],
            |n, k, a, b, c, d| (&n - &k + a) * (&n + &k + b + c + d + q(1))
        ),
        mcomp!(
            "M.12:M60*M60p",
            M60,
            M60p,
            (0, 0),
            [-1, 0, 0, 0],
            |n, k, a, b, c, d| (&n - &k + a) * (&n + &k + b + c + d + q(1))
        ),
    ]
}

/// The three bivariate PDEs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrianglePde {
    L1,
    L2,
    B1,
}

impl TrianglePde {
    pub const ALL: [TrianglePde; 3] = [TrianglePde::L1, TrianglePde::L2, TrianglePde::B1];

    pub fn name(self) -> &'static str {
        match self {
            TrianglePde::L1 => "L1",
            TrianglePde::L2 => "L2",
            TrianglePde::B1 => "B1",
        }
    }
}

/// The PDE operator with every `1/(1-x)` term cleared by one factor of `1-x`.
pub fn triangle_pde_operator(which: TrianglePde, idx: TriIndex, p: &TriangleParams) -> SecondOrderOperator {
    let (a, b, cc, d) = (&p.a, &p.b, &p.c, &p.d);
    let n = q(idx.n);
    let k = q(idx.k);
    let s3 = p.sum() + q(3);
    let x = MPoly::x();
    let y = MPoly::y();
    let qx = MPoly::one_minus_x();
    let s = MPoly::one_minus_xy();
    let eig = &n * (&n + &s3 - q(1));
    match which {
        TrianglePde::L1 => SecondOrderOperator {
            uyy: &y * &s,
            uy: qx.scale(&(b + q(1))) - y.scale(&(b + cc + q(2))),
            u: c(&k * (&k + b + cc + q(1))),
            ..Default::default()
        },
        TrianglePde::L2 => {
            let q2 = &qx * &qx;
            SecondOrderOperator {
                uxx: &x * &q2,
                uxy: (&(&x * &y) * &qx).scale(&q(-2)),
                uyy: &(&y * &(MPoly::one() - &y)) * &qx,
                ux: &(c(a + q(1)) - x.scale(&s3)) * &qx,
                uy: &(c(b + q(1)) - y.scale(&s3)) * &qx + y.scale(d),
                u: qx.scale(&eig) - c(&k * d),
                denom: Denom::new(1, 0, 0),
                ..Default::default()
            }
        }
        TrianglePde::B1 => {
            let q2 = &qx * &qx;
            let lin = c(a + q(1)) - x.scale(&s3);
            SecondOrderOperator {
                uxx: &x * &q2,
                uxy: (&(&x * &y) * &qx).scale(&q(-2)),
                uyy: &x * &y.pow(2),
                ux: &lin * &qx,
                uy: -(&y * &lin),
                u: qx.scale(&eig) - c(&k * (&k + b + cc + d + q(1))),
                denom: Denom::new(1, 0, 0),
                ..Default::default()
            }
        }
    }
}

/// Cleared residual of the PDE on `P_{n,k}`; zero on every family member.
pub fn pde_residual(which: TrianglePde, idx: TriIndex, p: &TriangleParams) -> MPoly {
    triangle_pde_operator(which, idx, p).numerator(&triangle_poly(idx, p))
}

/// Monic solution of B1: unit coefficient on `x^(n-k) y^k`.
pub fn monic_triangle(idx: TriIndex, p: &TriangleParams) -> Result<MPoly, MathError> {
    if !idx.is_valid() {
        return Err(MathError::InvalidParameter(format!("index ({}, {})", idx.n, idx.k)));
    }
    let (n, k) = (idx.n, idx.k);
    let m = (n - k) as u32;
    // Gamma(s+n+k+2) / Gamma(s+2n+2) = 1 / (s+n+k+2)_(n-k)
    let base = p.sum() + q(2 * n + 2);
    let pre = factorial(m) * gamma_ratio(&GammaRatioSpec::new(base, -(n - k)))?;
    let jac = shifted_jacobi(
        n - k,
        &JacobiParams::raw(&p.b + &p.c + &p.d + q(2 * k + 1), p.a.clone()),
    );
    Ok(&MPoly::y().pow(k as u32) * &jac.scale(&pre))
}

/// The same monic solution from the hypergeometric form, for cross-checking.
pub fn monic_triangle_hypergeometric(idx: TriIndex, p: &TriangleParams) -> Result<MPoly, MathError> {
    let (n, k) = (idx.n, idx.k);
    let m = (n - k) as u32;
    let s = p.sum();
    let sign = if (n + k) % 2 == 0 { q(1) } else { q(-1) };
    let pre = sign * pochhammer(&(&p.a + q(1)), m) * gamma_ratio(&GammaRatioSpec::new(&s + q(2 * n + 2), -(n - k)))?;
    let f = hyper2f1_terminating(m, &(&s + q(n + k + 2)), &(&p.a + q(1)), &MPoly::x())?;
    Ok(&MPoly::y().pow(k as u32) * &f.scale(&pre))
}

/// Coefficient of `x^(n-k) y^k`, the leading monomial of the monic solution.
pub fn leading_coefficient(poly: &MPoly, idx: TriIndex) -> Rational {
    if !idx.is_valid() {
        return Rational::zero();
    }
    poly.coeff([(idx.n - idx.k) as u32, idx.k as u32, 0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::{verify_composition, verify_sparse};
    use crate::ratpoly::qq;
    use crate::report::Status;

    fn tp(a: i64, b: i64, c: i64, d: i64) -> TriangleParams {
        TriangleParams::raw(q(a), q(b), q(c), q(d))
    }

    fn sample() -> TriangleParams {
        TriangleParams::raw(qq(1, 3), qq(-1, 2), q(1), q(0))
    }

    #[test]
    fn low_degree_members() {
        let p = sample();
        assert_eq!(triangle_poly(TriIndex::new(0, 0), &p), MPoly::one());
        let expect10 = MPoly::x().scale(&(p.sum() + q(3))) - MPoly::constant(&p.a + q(1));
        assert_eq!(triangle_poly(TriIndex::new(1, 0), &p), expect10);
        let expect11 = MPoly::y().scale(&(&p.b + &p.c + q(2))) - MPoly::one_minus_x().scale(&(&p.b + q(1)));
        assert_eq!(triangle_poly(TriIndex::new(1, 1), &p), expect11);
    }

    /// Exact integral of a polynomial against the weight with integer parameters.
    fn integrate(poly: &MPoly, p: [u32; 4]) -> Rational {
        let [a, b, c, d] = p;
        let beta = |x: u32, y: u32| factorial(x - 1) * factorial(y - 1) / factorial(x + y - 1);
        poly.terms()
            .map(|(e, coef)| coef * beta(a + e[0] + 1, b + c + d + e[1] + 2) * beta(b + e[1] + 1, c + 1))
            .sum()
    }

    #[test]
    fn norm_ratio_matches_integration() {
        for params in [[0u32, 0, 0, 0], [1, 0, 2, 1], [0, 3, 1, 2]] {
            let p = tp(params[0] as i64, params[1] as i64, params[2] as i64, params[3] as i64);
            let n00 = integrate(&MPoly::one(), params);
            for idx in TriIndex::up_to(3) {
                let sq = triangle_poly(idx, &p).pow(2);
                assert_eq!(
                    integrate(&sq, params) / &n00,
                    triangle_norm_ratio(idx, &p).unwrap(),
                    "{idx:?}"
                );
            }
        }
        let z = tp(0, 0, 0, 0);
        assert_eq!(triangle_norm_ratio(TriIndex::new(1, 1), &z).unwrap(), qq(1, 6));
        assert_eq!(triangle_norm_ratio(TriIndex::new(1, 0), &z).unwrap(), qq(1, 2));
    }

    #[test]
    fn operator_shapes() {
        let p = sample();
        let m01 = m_operator(MOpId::M01, TriIndex::new(2, 1), &p);
        assert_eq!(m01.cy, MPoly::one());
        assert!(m01.c0.is_zero() && m01.denom.is_one());
        let m06 = m_operator(MOpId::M06, TriIndex::new(2, 1), &p);
        assert_eq!(m06.c0, MPoly::constant(p.b.clone()));
        let m40p = m_operator(MOpId::M40p, TriIndex::new(3, 1), &p);
        assert_eq!(m40p.c0, MPoly::constant(q(1)) - MPoly::one_minus_x().scale(&q(3)));
        assert_eq!(m40p.denom, Denom::new(1, 0, 0));
        assert_eq!(
            m_operator(MOpId::M02p, TriIndex::new(1, 0), &p).denom,
            Denom::new(1, 0, 0)
        );
    }

    #[test]
    fn relation_examples() {
        let p = sample();
        for (id, idx) in [
            (MOpId::M01, TriIndex::new(1, 1)),
            (MOpId::M30p, TriIndex::new(0, 0)),
            (MOpId::M20, TriIndex::new(0, 0)),
        ] {
            assert_eq!(verify_sparse::<Triangle2d>(id, &idx, &p).status, Status::Pass, "{id}");
        }
    }

    #[test]
    fn composition_examples() {
        let p = sample();
        let comps = m_compositions();
        assert_eq!((comps[1].eigen)(&TriIndex::new(0, 0), &p), &p.b + &p.c);
        let zero = TriIndex::new(0, 0);
        assert_eq!((comps[13].eigen)(&zero, &p), p.sum() + q(1));
        let e = (comps[22].eigen)(&TriIndex::new(1, 0), &p);
        assert_eq!(e, (q(1) + &p.a) * (&p.b + &p.c + &p.d + q(2)));
        for i in [1usize, 13, 22] {
            assert_eq!(
                verify_composition::<Triangle2d>(&comps[i], &TriIndex::new(1, 0), &p).status,
                Status::Pass
            );
        }
    }

    #[test]
    fn pde_examples() {
        let p = sample();
        assert!(pde_residual(TrianglePde::L1, TriIndex::new(0, 0), &p).is_zero());
        assert!(pde_residual(TrianglePde::L1, TriIndex::new(1, 1), &p).is_zero());
        assert!(pde_residual(TrianglePde::B1, TriIndex::new(1, 0), &p).is_zero());
        // a non-member is not annihilated
        let op = triangle_pde_operator(TrianglePde::B1, TriIndex::new(1, 0), &p);
        assert!(!op.numerator(&MPoly::x().pow(2)).is_zero());
    }

    #[test]
    fn monic_examples() {
        let p = sample();
        assert_eq!(monic_triangle(TriIndex::new(0, 0), &p).unwrap(), MPoly::one());
        assert_eq!(monic_triangle(TriIndex::new(1, 1), &p).unwrap(), MPoly::y());
        let m10 = monic_triangle(TriIndex::new(1, 0), &tp(0, 0, 0, 0)).unwrap();
        assert_eq!(m10, MPoly::x() - MPoly::constant(qq(1, 3)));
        for idx in TriIndex::up_to(4) {
            let m = monic_triangle(idx, &p).unwrap();
            assert_eq!(leading_coefficient(&m, idx), q(1));
            assert_eq!(m, monic_triangle_hypergeometric(idx, &p).unwrap());
        }
    }
}
