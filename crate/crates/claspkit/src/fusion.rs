//! Root-of-unity specialization: negligible objects and the lowest-alcove
//! classification of the fusion quotient.
//!
//! The specialization point is a primitive `2l`-th root of unity, so `[n]_q`
//! vanishes exactly when `l` divides `n`. An object is negligible when its
//! quantum dimension vanishes there. The wall inequalities below come from
//! the vanishing pattern of the quantum dimension: the short-root factor is
//! `[a+2b+3]` and the long-root factor is `[a+b+2]_{q^2}`, whose vanishing
//! modulus is `l` for odd `l` and `l/2` for even `l`.

use serde::{Deserialize, Serialize};

use crate::arith::{cyc_eval, LaurentPoly};
use crate::c2::Weight;
use crate::qnum::qint;
use crate::rep::quantum_dim;
use crate::{Error, Result};

/// The specialization context `q = zeta`, a primitive `2l`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionContext {
    ell: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

impl FusionContext {
    /// A context is meaningful for any `l >= 3`; the alcove classification
    /// additionally requires `l > 4`.
    pub fn new(ell: u32) -> Result<Self> {
        if ell < 3 {
            return Err(Error::EllTooSmall(ell));
        }
        Ok(FusionContext { ell })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Order of the cyclotomic field the specialization lives in.
    pub fn cyclotomic_order(&self) -> u32 {
        2 * self.ell
    }

    pub fn parity(&self) -> Parity {
        if self.ell % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    fn require_alcove_range(&self) -> Result<()> {
        if self.ell <= 4 {
            return Err(Error::EllTooSmall(self.ell));
        }
        Ok(())
    }
}

/// True exactly when the quantum dimension of `V(lambda)` vanishes at the
/// specialization point.
pub fn is_negligible(lambda: Weight, ctx: &FusionContext) -> Result<bool> {
    let dim = quantum_dim(lambda)?;
    debug_assert!(dim.is_polynomial());
    Ok(cyc_eval(dim.num(), ctx.ell()).is_zero())
}

/// Highest weights of the tilting modules on the upper closure of the lowest
/// alcove, clamped to the dominant cone. Odd `l`: `(2k, (l-3)/2 - k)`;
/// even `l`: `(k, (l-4)/2 - k)`; `k` ascending.
pub fn upper_closure_weights(ctx: &FusionContext) -> Result<Vec<Weight>> {
    ctx.require_alcove_range()?;
    let ell = ctx.ell() as i64;
    let weights = match ctx.parity() {
        Parity::Odd => {
            let top = (ell - 3) / 2;
            (0..=top).map(|k| Weight::new(2 * k, top - k)).collect()
        }
        Parity::Even => {
            let top = (ell - 4) / 2;
            (0..=top).map(|k| Weight::new(k, top - k)).collect()
        }
    };
    Ok(weights)
}

/// Dominant weights strictly inside the lowest alcove: the highest weights
/// of the indecomposable non-negligible tilting modules. Odd `l`:
/// `a + 2b + 3 < l`; even `l`: `a + b + 2 < l/2`. Ordered by total then `b`.
pub fn lowest_alcove_interior(ctx: &FusionContext) -> Result<Vec<Weight>> {
    ctx.require_alcove_range()?;
    let ell = ctx.ell() as i64;
    let inside = |w: Weight| match ctx.parity() {
        Parity::Odd => w.a + 2 * w.b + 3 < ell,
        Parity::Even => w.a + w.b + 2 < ell / 2,
    };
    let mut out = Vec::new();
    for total in 0..ell {
        for b in 0..=total {
            let w = Weight::new(total - b, b);
            if inside(w) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// True when `w` is on the upper closure line for this context.
pub fn on_upper_closure(lambda: Weight, ctx: &FusionContext) -> Result<bool> {
    Ok(upper_closure_weights(ctx)?.contains(&lambda))
}

/// The collapse identity tying the 4-dimensional circle value to the
/// Temperley-Lieb loop value: `-[6][2]/[3] = -[2]_{q^2}` at a primitive
/// `2l`-th root of unity. Holds exactly at `l = 8`.
pub fn circle_collapse_identity_at(ell: u32) -> bool {
    let lhs = -(&qint(6, 1) * &qint(2, 1))
        .checked_div_q(&qint(3, 1))
        .expect("[3] divides [6][2]");
    let rhs: LaurentPoly = -qint(2, 2);
    let diff = &lhs - &rhs;
    cyc_eval(&diff, ell).is_zero()
}

/// The `l = 8` identity in the order-16 cyclotomic field.
pub fn check_ell8_identity() -> bool {
    circle_collapse_identity_at(8)
}
