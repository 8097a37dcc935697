//! The six-parameter family `P_{n1,n2,n3}^(α,β,γ,δ,a,b)` on the tetrahedron.
//!
//! Weight `x^α y^β z^γ w^δ (1-x)^a (1-x-y)^b` with `w = 1-x-y-z`. The sums
//! `n = n1+n2+n3` and `e = α+β+γ+δ+a+b` are always recomputed, never stored.

mod connect;
mod corollary;
mod pde;

pub use connect::*;
pub use corollary::*;
pub use pde::*;

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::MathError;
use crate::jacobi1d::{check_above_minus_one, h0, norm_ratio, shifted_jacobi, JacobiParams};
use crate::ladder::{Composition, Family, ParamTuple, SparseRelation};
use crate::operator::DiffOperator;
use crate::ratpoly::{q, Denom, MPoly, Rational};
use crate::special::pochhammer;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl SimplexParams {
    pub fn new(
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
        a: Rational,
        b: Rational,
    ) -> Result<Self, MathError> {
        let p = Self::raw(alpha, beta, gamma, delta, a, b);
        p.validate()?;
        Ok(p)
    }

    pub fn raw(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational, a: Rational, b: Rational) -> Self {
        Self {
            alpha,
            beta,
            gamma,
            delta,
            a,
            b,
        }
    }

    /// The four-parameter classical family, `a = b = 0`.
    pub fn classical(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        Self::raw(alpha, beta, gamma, delta, q(0), q(0))
    }

    pub fn validate(&self) -> Result<(), MathError> {
        check_above_minus_one(&[
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("a", &self.a),
            ("b", &self.b),
        ])
    }

    /// `e = α+β+γ+δ+a+b`
    pub fn e(&self) -> Rational {
        &self.alpha + &self.beta + &self.gamma + &self.delta + &self.a + &self.b
    }

    pub fn is_classical(&self) -> bool {
        self.a == q(0) && self.b == q(0)
    }
}

impl ParamTuple for SimplexParams {
    fn to_vec(&self) -> Vec<Rational> {
        vec![
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.delta.clone(),
            self.a.clone(),
            self.b.clone(),
        ]
    }
    fn from_slice(v: &[Rational]) -> Self {
        Self::raw(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
            v[5].clone(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index3 {
    pub n1: i64,
    pub n2: i64,
    pub n3: i64,
}

impl Index3 {
    pub const fn new(n1: i64, n2: i64, n3: i64) -> Self {
        Self { n1, n2, n3 }
    }

    pub fn n(&self) -> i64 {
        self.n1 + self.n2 + self.n3
    }

    pub fn is_valid(&self) -> bool {
        self.n1 >= 0 && self.n2 >= 0 && self.n3 >= 0
    }

    /// All indices of total degree at most `max_n`, ordered by degree.
    pub fn up_to(max_n: u32) -> Vec<Index3> {
        let max_n = i64::from(max_n);
        let mut out = Vec::new();
        for n in 0..=max_n {
            for n1 in (0..=n).rev() {
                for n2 in (0..=n - n1).rev() {
                    out.push(Index3::new(n1, n2, n - n1 - n2));
                }
            }
        }
        out
    }

    pub fn to_vec(&self) -> Vec<i64> {
        vec![self.n1, self.n2, self.n3]
    }
}

impl Add for Index3 {
    type Output = Index3;
    fn add(self, o: Index3) -> Index3 {
        Index3::new(self.n1 + o.n1, self.n2 + o.n2, self.n3 + o.n3)
    }
}

/// `β+γ+δ+a+b+2n2+2n3+2`, the first parameter of the `x` factor.
fn a1(idx: Index3, p: &SimplexParams) -> Rational {
    &p.beta + &p.gamma + &p.delta + &p.a + &p.b + q(2 * (idx.n2 + idx.n3) + 2)
}

/// `γ+δ+2n3+b+1`, the first parameter of the `y` factor.
fn a2(idx: Index3, p: &SimplexParams) -> Rational {
    &p.gamma + &p.delta + &p.b + q(2 * idx.n3 + 1)
}

/// `P_{n1,n2,n3}^(α,β,γ,δ,a,b)`; zero when any index is negative.
pub fn simplex_poly(idx: Index3, p: &SimplexParams) -> MPoly {
    if !idx.is_valid() {
        return MPoly::zero();
    }
    let fx = shifted_jacobi(idx.n1, &JacobiParams::raw(a1(idx, p), p.alpha.clone()));
    let fy = shifted_jacobi(idx.n2, &JacobiParams::raw(a2(idx, p), p.beta.clone()));
    let fz = shifted_jacobi(idx.n3, &JacobiParams::raw(p.delta.clone(), p.gamma.clone()));
    let fy = MPoly::homogeneous_substitution(&fy, idx.n2 as u32, &MPoly::y(), &MPoly::one_minus_x());
    let fz = MPoly::homogeneous_substitution(&fz, idx.n3 as u32, &MPoly::z(), &MPoly::one_minus_xy());
    &(&fx * &fy) * &fz
}

/// Norm of a member, exact relative to `(0,0,0)` and absolute in floating point.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexNorm {
    pub ratio: Rational,
    pub absolute: f64,
}

pub fn simplex_norm(idx: Index3, p: &SimplexParams) -> Result<SimplexNorm, MathError> {
    if !idx.is_valid() {
        return Err(MathError::InvalidParameter(format!("index {:?}", idx.to_vec())));
    }
    let zero = Index3::new(0, 0, 0);
    let (m12, m3) = (2 * (idx.n2 + idx.n3) as u32, 2 * idx.n3 as u32);
    let a1_0 = a1(zero, p);
    let a2_0 = a2(zero, p);
    let shift_x = pochhammer(&(&a1_0 + q(1)), m12) / pochhammer(&(&a1_0 + &p.alpha + q(2)), m12);
    let shift_y = pochhammer(&(&a2_0 + q(1)), m3) / pochhammer(&(&a2_0 + &p.beta + q(2)), m3);
    let ratio = norm_ratio(idx.n1 as u32, &JacobiParams::raw(a1(idx, p), p.alpha.clone()))?
        * shift_x
        * norm_ratio(idx.n2 as u32, &JacobiParams::raw(a2(idx, p), p.beta.clone()))?
        * shift_y
        * norm_ratio(idx.n3 as u32, &JacobiParams::raw(p.delta.clone(), p.gamma.clone()))?;
    let base = h0(&JacobiParams::raw(a1_0, p.alpha.clone()))
        * h0(&JacobiParams::raw(a2_0, p.beta.clone()))
        * h0(&JacobiParams::raw(p.delta.clone(), p.gamma.clone()));
    let absolute = ratio.to_f64().unwrap_or(f64::NAN) * base;
    Ok(SimplexNorm { ratio, absolute })
}

/// The 24 operators acting on the `(x, y)` part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NOpId {
    N01,
    N02,
    N03,
    N04,
    N05,
    N06,
    N01p,
    N02p,
    N03p,
    N04p,
    N05p,
    N06p,
    N10,
    N20,
    N30,
    N40,
    N50,
    N60,
    N10p,
    N20p,
    N30p,
    N40p,
    N50p,
    N60p,
}

/// The 12 operators acting on the `z` part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OOpId {
    O10,
    O20,
    O30,
    O40,
    O50,
    O60,
    O10p,
    O20p,
    O30p,
    O40p,
    O50p,
    O60p,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimplexOpId {
    N(NOpId),
    O(OOpId),
}

impl SimplexOpId {
    pub const ALL: [SimplexOpId; 36] = {
        use NOpId::*;
        use OOpId::*;
        use SimplexOpId::{N, O};
        [
            N(N01),
            N(N02),
            N(N03),
            N(N04),
            N(N05),
            N(N06),
            N(N01p),
            N(N02p),
            N(N03p),
            N(N04p),
            N(N05p),
            N(N06p),
            N(N10),
            N(N20),
            N(N30),
            N(N40),
            N(N50),
            N(N60),
            N(N10p),
            N(N20p),
            N(N30p),
            N(N40p),
            N(N50p),
            N(N60p),
            O(O10),
            O(O20),
            O(O30),
            O(O40),
            O(O50),
            O(O60),
            O(O10p),
            O(O20p),
            O(O30p),
            O(O40p),
            O(O50p),
            O(O60p),
        ]
    };

    pub fn name(self) -> &'static str {
        simplex_relation(self).op
    }
}

impl fmt::Display for SimplexOpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimplexOpId {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SimplexOpId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| MathError::InvalidParameter(format!("unknown tetrahedron operator {s}")))
    }
}

/// Index and parameter values as rationals, for writing coefficient tables.
struct V {
    n1: Rational,
    n2: Rational,
    n3: Rational,
    n: Rational,
    e: Rational,
    al: Rational,
    be: Rational,
    ga: Rational,
    de: Rational,
    b: Rational,
}

impl V {
    fn new(i: &Index3, p: &SimplexParams) -> Self {
        V {
            n1: q(i.n1),
            n2: q(i.n2),
            n3: q(i.n3),
            n: q(i.n()),
            e: p.e(),
            al: p.alpha.clone(),
            be: p.beta.clone(),
            ga: p.gamma.clone(),
            de: p.delta.clone(),
            b: p.b.clone(),
        }
    }

    /// `n2 + 2 n3 + β+γ+δ+b + 2`
    fn k_beta(&self) -> Rational {
        &self.n2 + q(2) * &self.n3 + &self.be + &self.ga + &self.de + &self.b + q(2)
    }

    /// `n2 + 2 n3 + γ+δ+b + 1`
    fn k_gamma(&self) -> Rational {
        &self.n2 + q(2) * &self.n3 + &self.ga + &self.de + &self.b + q(1)
    }

    /// `n + n2 + n3 + e + 3`
    fn big(&self) -> Rational {
        &self.n + &self.n2 + &self.n3 + &self.e + q(3)
    }

    /// `n + n2 + n3 + e - α + 2`
    fn big_minus_alpha(&self) -> Rational {
        &self.n + &self.n2 + &self.n3 + &self.e - &self.al + q(2)
    }
}

fn c(r: Rational) -> MPoly {
    MPoly::constant(r)
}

fn op(c0: MPoly, cx: MPoly, cy: MPoly, cz: MPoly, denom: Denom) -> DiffOperator {
    DiffOperator { c0, cx, cy, cz, denom }
}

/// The operator `id` as it acts on `P_idx^p`.
pub fn simplex_operator(id: SimplexOpId, idx: Index3, p: &SimplexParams) -> DiffOperator {
    match id {
        SimplexOpId::N(id) => n_operator(id, idx, p),
        SimplexOpId::O(id) => o_operator(id, idx, p),
    }
}

pub fn n_operator(id: NOpId, idx: Index3, p: &SimplexParams) -> DiffOperator {
    use NOpId::*;
    let v = V::new(&idx, p);
    let zero = MPoly::zero;
    let x = MPoly::x();
    let y = MPoly::y();
    let z = MPoly::z();
    let qx = MPoly::one_minus_x();
    let s = MPoly::one_minus_xy();
    let (xq, xy, xz) = (&x * &qx, &x * &y, &x * &z);
    let (ys, yz) = (&y * &s, &y * &z);
    let over_q = Denom::new(1, 0, 0);
    let over_s = Denom::new(0, 1, 0);
    let m23 = &v.n2 + &v.n3;
    let gdb = &v.ga + &v.de + &v.b;
    let ne3 = &v.n + &v.e + q(3);
    match id {
        N01 => op(c(v.n3.clone()), zero(), s.clone(), -&z, over_s),
        N01p => op(
            y.scale(&(&gdb + &v.n3 + q(1))) - s.scale(&v.be),
            zero(),
            -&ys,
            yz.clone(),
            Denom::ONE,
        ),
        N02 => op(s.scale(&v.k_beta()) + y.scale(&v.n3), zero(), ys.clone(), -&yz, over_s),
        N02p => op(qx.scale(&v.k_gamma()) - y.scale(&m23), zero(), -&ys, yz.clone(), over_q),
        N03 => op(c(&m23 + &v.be + &gdb + q(2)), zero(), -&s, z.clone(), Denom::ONE),
        N03p => op(qx.scale(&v.be) + y.scale(&m23), zero(), ys.clone(), -&yz, over_q),
        N04 => op(
            y.scale(&(&v.n3 + &gdb + q(1))) - s.scale(&(&v.be + &v.n2 + q(1))),
            zero(),
            -&ys,
            yz.clone(),
            Denom::ONE,
        ),
        N04p => op(
            y.scale(&v.n3) - s.scale(&v.n2),
            zero(),
            ys.clone(),
            -&yz,
            Denom::new(1, 1, 0),
        ),
        N05 => op(
            y.scale(&(&m23 + &gdb + q(2))) - s.scale(&v.be),
            zero(),
            -&ys,
            yz.clone(),
            Denom::ONE,
        ),
        N05p => op(c(m23.clone()), zero(), s.clone(), -&z, over_q),
        N06 => op(s.scale(&v.be) + y.scale(&v.n3), zero(), ys.clone(), -&yz, over_s),
        N06p => op(c(&gdb + &v.n3 + q(1)), zero(), -&s, z.clone(), Denom::ONE),
        N10 => op(c(m23.clone()), qx.clone(), -&y, -&z, over_q),
        N10p => op(
            x.scale(&(&m23 + &v.e + q(2))) - c(v.al.clone()),
            -&xq,
            xy.clone(),
            xz.clone(),
            Denom::ONE,
        ),
        N20 => op(qx.scale(&v.big()) + x.scale(&m23), xq.clone(), -&xy, -&xz, over_q),
        N20p => op(
            c(v.big_minus_alpha()) - x.scale(&v.n),
            -&xq,
            xy.clone(),
            xz.clone(),
            Denom::ONE,
        ),
        N30 => op(c(ne3.clone()), -&qx, y.clone(), z.clone(), Denom::ONE),
        N30p => op(c(v.al.clone()) + x.scale(&v.n), xq.clone(), -&xy, -&xz, Denom::ONE),
        N40 => op(
            x.scale(&ne3) - c(&v.al + &v.n1 + q(1)),
            -&xq,
            xy.clone(),
            xz.clone(),
            Denom::ONE,
        ),
        N40p => op(c(m23.clone()) - qx.scale(&v.n), xq.clone(), -&xy, -&xz, over_q),
        N50 => op(
            x.scale(&ne3) - c(v.al.clone()),
            -&xq,
            xy.clone(),
            xz.clone(),
            Denom::ONE,
        ),
        N50p => op(c(v.n.clone()), qx.clone(), -&y, -&z, Denom::ONE),
        N60 => op(qx.scale(&v.al) + x.scale(&m23), xq.clone(), -&xy, -&xz, over_q),
        N60p => op(c(&m23 + &v.e - &v.al + q(2)), -&qx, y.clone(), z.clone(), Denom::ONE),
    }
}

pub fn o_operator(id: OOpId, idx: Index3, p: &SimplexParams) -> DiffOperator {
    use OOpId::*;
    let v = V::new(&idx, p);
    let z = MPoly::z();
    let s = MPoly::one_minus_xy();
    let w = MPoly::one_minus_xyz();
    let zw = &z * &w;
    let over_s = Denom::new(0, 1, 0);
    let gd1 = &v.ga + &v.de + &v.n3 + q(1);
    let (c0, cz, denom) = match id {
        O10 => (MPoly::zero(), MPoly::one(), Denom::ONE),
        O10p => (z.scale(&v.de) - w.scale(&v.ga), -&zw, Denom::ONE),
        O20 => (c(gd1), z.clone(), Denom::ONE),
        O20p => (s.scale(&v.de) + w.scale(&v.n3), -&zw, over_s),
        O30 => (c(gd1), -&w, Denom::ONE),
        O30p => (s.scale(&v.ga) + z.scale(&v.n3), zw.clone(), over_s),
        O40 => (z.scale(&v.de) - w.scale(&(&v.ga + &v.n3 + q(1))), -&zw, Denom::ONE),
        O40p => (c(-&v.n3), z.clone(), over_s),
        O50 => (z.scale(&(&v.de + &v.n3 + q(1))) - w.scale(&v.ga), -&zw, Denom::ONE),
        O50p => (c(v.n3.clone()), w.clone(), over_s),
        O60 => (c(v.ga.clone()), z.clone(), Denom::ONE),
        O60p => (c(v.de.clone()), -&w, Denom::ONE),
    };
    op(c0, MPoly::zero(), MPoly::zero(), cz, denom)
}

macro_rules! srel {
    ($op:expr, ($d1:expr, $d2:expr, $d3:expr), [$($dp:expr),*], |$v:ident| $scale:expr) => {
        SparseRelation {
            op: $op,
            dn: Index3::new($d1, $d2, $d3),
            dparams: &[$($dp),*],
            scale: |i: &Index3, p: &SimplexParams| {
                let $v = V::new(i, p);
                $scale
            },
        }
    };
}

/// Sparse relation table; parameter shifts in the order `(α, β, γ, δ, a, b)`.
pub fn simplex_relation(id: SimplexOpId) -> SparseRelation<Index3, SimplexParams> {
    use NOpId::*;
    use OOpId::*;
    use SimplexOpId::{N, O};
    match id {
        N(N01) => srel!("N01", (0, -1, 0), [0, 1, 0, 0, 0, 1], |v| v.k_beta()),
        N(N01p) => srel!("N01p", (0, 1, 0), [0, -1, 0, 0, 0, -1], |v| &v.n2 + q(1)),
        N(N02) => srel!("N02", (0, 0, 0), [0, 0, 0, 0, -1, 1], |v| v.k_beta()),
        N(N02p) => srel!("N02p", (0, 0, 0), [0, 0, 0, 0, 1, -1], |v| v.k_gamma()),
        N(N03) => srel!("N03", (0, 0, 0), [0, 1, 0, 0, -1, 0], |v| v.k_beta()),
        N(N03p) => srel!("N03p", (0, 0, 0), [0, -1, 0, 0, 1, 0], |v| &v.n2 + &v.be),
        N(N04) => srel!("N04", (0, 1, 0), [0, 0, 0, 0, -1, -1], |v| &v.n2 + q(1)),
        N(N04p) => srel!("N04p", (0, -1, 0), [0, 0, 0, 0, 1, 1], |v| &v.n2 + &v.be),
        N(N05) => srel!("N05", (0, 1, 0), [0, -1, 0, 0, -1, 0], |v| &v.n2 + q(1)),
        N(N05p) => srel!("N05p", (0, -1, 0), [0, 1, 0, 0, 1, 0], |v| v.k_gamma()),
        N(N06) => srel!("N06", (0, 0, 0), [0, -1, 0, 0, 0, 1], |v| &v.n2 + &v.be),
        N(N06p) => srel!("N06p", (0, 0, 0), [0, 1, 0, 0, 0, -1], |v| v.k_gamma()),
        N(N10) => srel!("N10", (-1, 0, 0), [1, 0, 0, 0, 1, 0], |v| v.big()),
        N(N10p) => srel!("N10p", (1, 0, 0), [-1, 0, 0, 0, -1, 0], |v| &v.n1 + q(1)),
        N(N20) => srel!("N20", (0, 0, 0), [0, 0, 0, 0, 1, 0], |v| v.big()),
        N(N20p) => srel!("N20p", (0, 0, 0), [0, 0, 0, 0, -1, 0], |v| v.big_minus_alpha()),
        N(N30) => srel!("N30", (0, 0, 0), [1, 0, 0, 0, 0, 0], |v| v.big()),
        N(N30p) => srel!("N30p", (0, 0, 0), [-1, 0, 0, 0, 0, 0], |v| &v.n1 + &v.al),
        N(N40) => srel!("N40", (1, 0, 0), [0, 0, 0, 0, -1, 0], |v| &v.n1 + q(1)),
        N(N40p) => srel!("N40p", (-1, 0, 0), [0, 0, 0, 0, 1, 0], |v| &v.n1 + &v.al),
        N(N50) => srel!("N50", (1, 0, 0), [-1, 0, 0, 0, 0, 0], |v| &v.n1 + q(1)),
        N(N50p) => srel!("N50p", (-1, 0, 0), [1, 0, 0, 0, 0, 0], |v| v.big_minus_alpha()),
        N(N60) => srel!("N60", (0, 0, 0), [-1, 0, 0, 0, 1, 0], |v| &v.n1 + &v.al),
        N(N60p) => srel!("N60p", (0, 0, 0), [1, 0, 0, 0, -1, 0], |v| v.big_minus_alpha()),
        O(O10) => srel!("O10", (0, 0, -1), [0, 0, 1, 1, 0, 0], |v| &v.n3 + &v.de + &v.ga + q(1)),
        O(O10p) => srel!("O10p", (0, 0, 1), [0, 0, -1, -1, 0, 0], |v| &v.n3 + q(1)),
        O(O20) => srel!("O20", (0, 0, 0), [0, 0, 0, 1, 0, -1], |v| &v.n3 + &v.de + &v.ga + q(1)),
        O(O20p) => srel!("O20p", (0, 0, 0), [0, 0, 0, -1, 0, 1], |v| &v.n3 + &v.de),
        O(O30) => srel!("O30", (0, 0, 0), [0, 0, 1, 0, 0, -1], |v| &v.n3 + &v.de + &v.ga + q(1)),
        O(O30p) => srel!("O30p", (0, 0, 0), [0, 0, -1, 0, 0, 1], |v| &v.n3 + &v.ga),
        O(O40) => srel!("O40", (0, 0, 1), [0, 0, 0, -1, 0, -1], |v| &v.n3 + q(1)),
        O(O40p) => srel!("O40p", (0, 0, -1), [0, 0, 0, 1, 0, 1], |v| &v.n3 + &v.ga),
        O(O50) => srel!("O50", (0, 0, 1), [0, 0, -1, 0, 0, -1], |v| &v.n3 + q(1)),
        O(O50p) => srel!("O50p", (0, 0, -1), [0, 0, 1, 0, 0, 1], |v| &v.n3 + &v.de),
        O(O60) => srel!("O60", (0, 0, 0), [0, 0, -1, 1, 0, 0], |v| &v.n3 + &v.ga),
        O(O60p) => srel!("O60p", (0, 0, 0), [0, 0, 1, -1, 0, 0], |v| &v.n3 + &v.de),
    }
}

/// Marker type wiring the tetrahedron family into the generic checks.
pub struct Simplex3d;

impl Family for Simplex3d {
    type Index = Index3;
    type Params = SimplexParams;
    type OpId = SimplexOpId;

    fn is_valid(idx: &Index3) -> bool {
        idx.is_valid()
    }
    fn index_vec(idx: &Index3) -> Vec<i64> {
        idx.to_vec()
    }
    fn member(idx: &Index3, p: &SimplexParams) -> MPoly {
        simplex_poly(*idx, p)
    }
    fn operator(op: SimplexOpId, idx: &Index3, p: &SimplexParams) -> DiffOperator {
        simplex_operator(op, *idx, p)
    }
    fn relation(op: SimplexOpId) -> SparseRelation<Index3, SimplexParams> {
        simplex_relation(op)
    }
}

macro_rules! scomp {
    ($id:expr, $outer:expr, $inner:expr, ($d1:expr, $d2:expr, $d3:expr), [$($dp:expr),*], |$v:ident| $eig:expr) => {
        Composition {
            id: $id,
            outer: $outer,
            inner: $inner,
            dsrc: Index3::new($d1, $d2, $d3),
            dsrc_params: &[$($dp),*],
            eigen: |i: &Index3, p: &SimplexParams| {
                let $v = V::new(i, p);
                $eig
            },
        }
    };
}

/// The 36 second-order identities, twelve per operator set.
pub fn simplex_compositions() -> Vec<Composition<Index3, SimplexOpId, SimplexParams>> {
    use NOpId::*;
    use OOpId::*;
    use SimplexOpId::{N, O};
    vec![
        scomp!(
            "N0.01:N01p*N01",
            N(N01p),
            N(N01),
            (0, 0, 0),
            [0, -1, 0, 0, 0, -1],
            |v| &v.n2 * (v.k_beta() - q(2))
        ),
        scomp!(
            "N0.02:N01*N01p",
            N(N01),
            N(N01p),
            (0, 0, 0),
            [0, 0, 0, 0, 0, 0],
            |v| (&v.n2 + q(1)) * (v.k_beta() - q(1))
        ),
        scomp!("N0.03:N02p*N02", N(N02p), N(N02), (0, 0, 0), [0, 1, 0, 0, 0, -1], |v| v
            .k_beta()
            * v.k_gamma()),
        scomp!("N0.04:N02*N02p", N(N02), N(N02p), (0, 0, 0), [0, 1, 0, 0, 0, 0], |v| v
            .k_beta()
            * v.k_gamma()),
        scomp!(
            "N0.05:N03p*N03",
            N(N03p),
            N(N03),
            (0, 0, 0),
            [0, -1, 0, 0, 0, 1],
            |v| (&v.n2 + &v.be) * v.k_beta()
        ),
        scomp!(
            "N0.06:N03*N03p",
            N(N03),
            N(N03p),
            (0, 0, 0),
            [0, 0, 0, 0, 0, 1],
            |v| (&v.n2 + &v.be) * v.k_beta()
        ),
        scomp!(
            "N0.07:N04p*N04",
            N(N04p),
            N(N04),
            (0, -1, 0),
            [0, 1, 0, 0, 0, 0],
            |v| &v.n2 * (&v.n2 + &v.be + q(1))
        ),
        scomp!(
            "N0.08:N04*N04p",
            N(N04),
            N(N04p),
            (0, 0, 0),
            [0, 1, 0, 0, 0, -1],
            |v| &v.n2 * (&v.n2 + &v.be + q(1))
        ),
        scomp!(
            "N0.09:N05p*N05",
            N(N05p),
            N(N05),
            (0, -1, 0),
            [0, 0, 0, 0, 0, 1],
            |v| &v.n2 * (v.k_gamma() + q(1))
        ),
        scomp!(
            "N0.10:N05*N05p",
            N(N05),
            N(N05p),
            (0, 0, 0),
            [0, -1, 0, 0, 0, 1],
            |v| &v.n2 * (v.k_gamma() + q(1))
        ),
        scomp!(
            "N0.11:N06p*N06",
            N(N06p),
            N(N06),
            (0, 0, 0),
            [0, 0, 0, 0, 0, -1],
            |v| (&v.n2 + &v.be) * v.k_gamma()
        ),
        scomp!(
            "N0.12:N06*N06p",
            N(N06),
            N(N06p),
            (0, 0, 0),
            [0, -1, 0, 0, 0, 0],
            |v| (&v.n2 + &v.be) * v.k_gamma()
        ),
        scomp!(
            "N.01:N10p*N10",
            N(N10p),
            N(N10),
            (0, 0, 0),
            [-1, 0, 0, 0, 0, -1],
            |v| &v.n1 * (v.big() - q(2))
        ),
        scomp!(
            "N.02:N10*N10p",
            N(N10),
            N(N10p),
            (0, 0, 0),
            [0, 0, 0, 0, 0, 0],
            |v| (&v.n1 + q(1)) * (v.big() - q(1))
        ),
        scomp!("N.03:N20p*N20", N(N20p), N(N20), (0, 0, 0), [1, 0, 0, 0, 0, -1], |v| v
            .big()
            * v.big_minus_alpha()),
        scomp!("N.04:N20*N20p", N(N20), N(N20p), (0, 0, 0), [1, 0, 0, 0, 0, 0], |v| v
            .big()
            * v.big_minus_alpha()),
        scomp!(
            "N.05:N30p*N30",
            N(N30p),
            N(N30),
            (0, 0, 0),
            [-1, 0, 0, 0, 1, 0],
            |v| (&v.n1 + &v.al) * v.big()
        ),
        scomp!(
            "N.06:N30*N30p",
            N(N30),
            N(N30p),
            (0, 0, 0),
            [0, 0, 0, 0, 1, 0],
            |v| (&v.n1 + &v.al) * v.big()
        ),
        scomp!("N.07:N40p*N40", N(N40p), N(N40), (-1, 0, 0), [1, 0, 0, 0, 0, 0], |v| &v
            .n1
            * (&v.n1 + &v.al + q(1))),
        scomp!("N.08:N40*N40p", N(N40), N(N40p), (0, 0, 0), [1, 0, 0, 0, 0, -1], |v| &v
            .n1
            * (&v.n1 + &v.al + q(1))),
        scomp!("N.09:N50p*N50", N(N50p), N(N50), (-1, 0, 0), [0, 0, 0, 0, 1, 0], |v| &v
            .n1
            * (v.big_minus_alpha() + q(1))),
        scomp!("N.10:N50*N50p", N(N50), N(N50p), (0, 0, 0), [-1, 0, 0, 0, 1, 0], |v| &v
            .n1
            * (v.big_minus_alpha() + q(1))),
        scomp!(
            "N.11:N60p*N60",
            N(N60p),
            N(N60),
            (0, 0, 0),
            [0, 0, 0, 0, 0, -1],
            |v| (&v.n1 + &v.al) * v.big_minus_alpha()
        ),
        scomp!(
            "N.12:N60*N60p",
            N(N60),
            N(N60p),
            (0, 0, 0),
            [-1, 0, 0, 0, 0, 0],
            |v| (&v.n1 + &v.al) * v.big_minus_alpha()
        ),
        scomp!(
            "O.01:O10p*O10",
            O(O10p),
            O(O10),
            (0, 0, 0),
            [0, 0, -1, -1, 0, 0],
            |v| &v.n3 * (&v.n3 + &v.ga + &v.de - q(1))
        ),
        scomp!(
            "O.02:O10*O10p",
            O(O10),
            O(O10p),
            (0, 0, 0),
            [0, 0, 0, 0, 0, 0],
            |v| (&v.n3 + q(1)) * (&v.n3 + &v.ga + &v.de)
        ),
        scomp!(
            "O.03:O20p*O20",
            O(O20p),
            O(O20),
            (0, 0, 0),
            [0, 0, 1, -1, 0, 0],
            |v| (&v.n3 + &v.de) * (&v.n3 + &v.ga + &v.de + q(1))
        ),
        scomp!(
            "O.04:O20*O20p",
            O(O20),
            O(O20p),
            (0, 0, 0),
            [0, 0, 1, 0, 0, 0],
            |v| (&v.n3 + &v.de) * (&v.n3 + &v.ga + &v.de + q(1))
        ),
        scomp!(
            "O.05:O30p*O30",
            O(O30p),
            O(O30),
            (0, 0, 0),
            [0, 0, -1, 1, 0, 0],
            |v| (&v.n3 + &v.ga) * (&v.n3 + &v.ga + &v.de + q(1))
        ),
        scomp!(
            "O.06:O30*O30p",
            O(O30),
            O(O30p),
            (0, 0, 0),
            [0, 0, 0, 1, 0, 0],
            |v| (&v.n3 + &v.ga) * (&v.n3 + &v.ga + &v.de + q(1))
        ),
        scomp!("O.07:O40p*O40", O(O40p), O(O40), (0, 0, -1), [0, 0, 1, 0, 0, 0], |v| &v
            .n3
            * (&v.n3 + &v.ga + q(1))),
        scomp!("O.08:O40*O40p", O(O40), O(O40p), (0, 0, 0), [0, 0, 1, -1, 0, 0], |v| &v
            .n3
            * (&v.n3 + &v.ga + q(1))),
        scomp!("O.09:O50p*O50", O(O50p), O(O50), (0, 0, -1), [0, 0, 0, 1, 0, 0], |v| &v
            .n3
            * (&v.n3 + &v.de + q(1))),
        scomp!("O.10:O50*O50p", O(O50), O(O50p), (0, 0, 0), [0, 0, -1, 1, 0, 0], |v| &v
            .n3
            * (&v.n3 + &v.de + q(1))),
        scomp!(
            "O.11:O60p*O60",
            O(O60p),
            O(O60),
            (0, 0, 0),
            [0, 0, 0, -1, 0, 0],
            |v| (&v.n3 + &v.ga) * (&v.n3 + &v.de)
        ),
        scomp!(
            "O.12:O60*O60p",
            O(O60),
            O(O60p),
            (0, 0, 0),
            [0, 0, -1, 0, 0, 0],
            |v| (&v.n3 + &v.ga) * (&v.n3 + &v.de)
        ),
    ]
}
