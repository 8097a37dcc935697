//! Relation and composition records shared by the univariate, triangle and
//! tetrahedron families, plus the generic checks that run them.

use std::fmt::Debug;
use std::ops::Add;

use crate::operator::DiffOperator;
use crate::ratpoly::{MPoly, Rational};
use crate::report::VerificationReport;

/// A parameter tuple that can be shifted entrywise by small integers.
pub trait ParamTuple: Clone + Debug + Send + Sync {
    fn to_vec(&self) -> Vec<Rational>;
    fn from_slice(values: &[Rational]) -> Self;

    fn shifted(&self, d: &[i64]) -> Self {
        let mut v = self.to_vec();
        for (p, s) in v.iter_mut().zip(d) {
            *p += crate::ratpoly::q(*s);
        }
        Self::from_slice(&v)
    }
}

/// One line of a sparse relation table:
/// `op(P_idx^params) = scale(idx, params) * P_(idx+dn)^(params+dparams)`.
pub struct SparseRelation<I: 'static, P: 'static> {
    pub op: &'static str,
    pub dn: I,
    pub dparams: &'static [i64],
    pub scale: fn(&I, &P) -> Rational,
}

/// A second-order identity `outer(inner(P_src)) = eigen(idx, params) * P_src`
/// with `src = (idx + dsrc, params + dsrc_params)`.
///
/// The inner operator is instantiated at the source member and the outer one
/// at the member the inner relation maps to, so the pair is always the
/// literal composition of two table operators.
pub struct Composition<I: 'static, O: 'static, P: 'static> {
    pub id: &'static str,
    pub outer: O,
    pub inner: O,
    pub dsrc: I,
    pub dsrc_params: &'static [i64],
    pub eigen: fn(&I, &P) -> Rational,
}

/// A polynomial family with its ladder operators.
pub trait Family {
    type Index: Copy + Debug + Add<Output = Self::Index> + Send + Sync + 'static;
    type Params: ParamTuple + 'static;
    type OpId: Copy + Debug + Send + Sync + 'static;

    fn is_valid(idx: &Self::Index) -> bool;
    fn index_vec(idx: &Self::Index) -> Vec<i64>;
    /// Family member; the zero polynomial outside the valid index range.
    fn member(idx: &Self::Index, p: &Self::Params) -> MPoly;
    fn operator(op: Self::OpId, idx: &Self::Index, p: &Self::Params) -> DiffOperator;
    fn relation(op: Self::OpId) -> SparseRelation<Self::Index, Self::Params>;
}

/// Checks one sparse relation exactly. Targets outside the index range are the
/// zero polynomial, so the check then asserts that the operator annihilates the member.
pub fn verify_sparse<F: Family>(op: F::OpId, idx: &F::Index, p: &F::Params) -> VerificationReport {
    let rel = F::relation(op);
    let params = p.to_vec();
    let index = F::index_vec(idx);
    if !F::is_valid(idx) {
        return VerificationReport::not_applicable(rel.op, index, &params, "source index out of range");
    }
    let u = F::member(idx, p);
    let lhs = F::operator(op, idx, p).apply(&u);
    let tidx = *idx + rel.dn;
    let rhs = if F::is_valid(&tidx) {
        F::member(&tidx, &p.shifted(rel.dparams)).scale(&(rel.scale)(idx, p))
    } else {
        MPoly::zero()
    };
    VerificationReport::compare_result(rel.op, index, &params, lhs, &rhs)
}

/// Checks one second-order composition exactly.
pub fn verify_composition<F: Family>(
    c: &Composition<F::Index, F::OpId, F::Params>,
    idx: &F::Index,
    p: &F::Params,
) -> VerificationReport {
    let params = p.to_vec();
    let index = F::index_vec(idx);
    let sidx = *idx + c.dsrc;
    if !F::is_valid(idx) || !F::is_valid(&sidx) {
        return VerificationReport::not_applicable(c.id, index, &params, "source index out of range");
    }
    let sp = p.shifted(c.dsrc_params);
    let u = F::member(&sidx, &sp);
    let v = match F::operator(c.inner, &sidx, &sp).apply(&u) {
        Ok(v) => v,
        Err(e) => return VerificationReport::fail(c.id, index, &params, format!("inner operator: {e}")),
    };
    let rel = F::relation(c.inner);
    let midx = sidx + rel.dn;
    let mp = sp.shifted(rel.dparams);
    let lhs = F::operator(c.outer, &midx, &mp).apply(&v);
    let rhs = u.scale(&(c.eigen)(idx, p));
    VerificationReport::compare_result(c.id, index, &params, lhs, &rhs)
}
