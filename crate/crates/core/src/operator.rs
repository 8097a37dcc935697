//! First- and second-order differential operators with polynomial
//! numerators over a structured denominator.

use crate::error::PolyError;
use crate::ratpoly::{Denom, MPoly, Var};

/// `(c0 u + cx u_x + cy u_y + cz u_z) / denom`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    pub c0: MPoly,
    pub cx: MPoly,
    pub cy: MPoly,
    pub cz: MPoly,
    pub denom: Denom,
}

impl DiffOperator {
    /// The polynomial numerator before division.
    pub fn numerator(&self, u: &MPoly) -> MPoly {
        let mut out = &self.c0 * u;
        if !self.cx.is_zero() {
            out += &self.cx * &u.diff(Var::X);
        }
        if !self.cy.is_zero() {
            out += &self.cy * &u.diff(Var::Y);
        }
        if !self.cz.is_zero() {
            out += &self.cz * &u.diff(Var::Z);
        }
        out
    }

    /// Applies the operator; the numerator must be divisible by the denominator.
    pub fn apply(&self, u: &MPoly) -> Result<MPoly, PolyError> {
        self.denom.divide(&self.numerator(u))
    }

    pub fn denom_poly(&self) -> MPoly {
        self.denom.to_poly()
    }
}

/// Second-order operator `sum coeff * derivative` over a structured denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SecondOrderOperator {
    pub uxx: MPoly,
    pub uyy: MPoly,
    pub uzz: MPoly,
    pub uxy: MPoly,
    pub uxz: MPoly,
    pub uyz: MPoly,
    pub ux: MPoly,
    pub uy: MPoly,
    pub uz: MPoly,
    pub u: MPoly,
    pub denom: Denom,
}

impl SecondOrderOperator {
    /// Numerator applied to `u`; the equation holds iff this is the zero polynomial.
    pub fn numerator(&self, u: &MPoly) -> MPoly {
        let ux = u.diff(Var::X);
        let uy = u.diff(Var::Y);
        let uz = u.diff(Var::Z);
        let parts = [
            (&self.uxx, ux.diff(Var::X)),
            (&self.uyy, uy.diff(Var::Y)),
            (&self.uzz, uz.diff(Var::Z)),
            (&self.uxy, ux.diff(Var::Y)),
            (&self.uxz, ux.diff(Var::Z)),
            (&self.uyz, uy.diff(Var::Z)),
            (&self.ux, ux),
            (&self.uy, uy),
            (&self.uz, uz),
            (&self.u, u.clone()),
        ];
        let mut out = MPoly::zero();
        for (c, d) in parts {
            if !c.is_zero() && !d.is_zero() {
                out += c * &d;
            }
        }
        out
    }

    /// Coefficient slots in a fixed order, for coefficient-wise comparison.
    pub fn slots(&self) -> [(&'static str, &MPoly); 10] {
        [
            ("u_xx", &self.uxx),
            ("u_yy", &self.uyy),
            ("u_zz", &self.uzz),
            ("u_xy", &self.uxy),
            ("u_xz", &self.uxz),
            ("u_yz", &self.uyz),
            ("u_x", &self.ux),
            ("u_y", &self.uy),
            ("u_z", &self.uz),
            ("u", &self.u),
        ]
    }

    /// Every coefficient multiplied by `f`.
    pub fn scaled_by(&self, f: &MPoly) -> SecondOrderOperator {
        SecondOrderOperator {
            uxx: &self.uxx * f,
            uyy: &self.uyy * f,
            uzz: &self.uzz * f,
            uxy: &self.uxy * f,
            uxz: &self.uxz * f,
            uyz: &self.uyz * f,
            ux: &self.ux * f,
            uy: &self.uy * f,
            uz: &self.uz * f,
            u: &self.u * f,
            denom: self.denom,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::q;

    #[test]
    fn apply_divides_by_denominator() {
        // (1-x) u_x / (1-x) = u_x
        let op = DiffOperator {
            cx: MPoly::one_minus_x(),
            denom: Denom::new(1, 0, 0),
            ..Default::default()
        };
        let u = MPoly::x().pow(3);
        assert_eq!(op.apply(&u).unwrap(), MPoly::x().pow(2).scale(&q(3)));
    }

    #[test]
    fn apply_reports_remainder() {
        let op = DiffOperator {
            c0: MPoly::one(),
            denom: Denom::new(1, 0, 0),
            ..Default::default()
        };
        assert!(matches!(op.apply(&MPoly::x()), Err(PolyError::NonzeroRemainder { .. })));
    }

    #[test]
    fn second_order_numerator() {
        let op = SecondOrderOperator {
            uxx: MPoly::one(),
            uyz: MPoly::one(),
            ..Default::default()
        };
        let u = &MPoly::x().pow(2) + &(&MPoly::y() * &MPoly::z());
        assert_eq!(op.numerator(&u), MPoly::constant(q(3)));
    }
}
