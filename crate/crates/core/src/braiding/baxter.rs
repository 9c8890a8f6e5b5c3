//! Baxterization and chains of current R-matrices.
//!
//! From a constant braiding the current operators are
//!   R(x) = R - (q - q^{-1}) x / (x - 1) I   (Hecke / trigonometric, x = u/v)
//!   R(x) = R - I / x                        (involutive / rational, x = u - v)
//! and satisfy the Yang-Baxter equation with parameters. The exact inverses
//! are scalar multiples of the current operator at a reflected argument:
//! -x for the rational case and x^{-1} for the trigonometric one. The direct
//! Hecke computation R(x) R(x^{-1}) = ((x-1)^2 - lambda^2 x)/(x-1)^2 I pins
//! the trigonometric argument down; `RIdentity::TrigInversion` also tests
//! the sign-flipped candidate -x^{-1} and reports that it fails.

use super::{BraidKind, Braiding, BraidingError};
use crate::scalar::{lambda, Scalar};
use crate::tensor::TensorOp;

/// The current R-matrix R(x) on V (x) V.
pub fn baxterize(b: &Braiding, x: &Scalar) -> Result<TensorOp<Scalar>, BraidingError> {
    let id = TensorOp::identity_with(2, b.dim, Scalar::one());
    match b.kind {
        BraidKind::Hecke => {
            let den = x.sub(&Scalar::one());
            if den.is_zero() {
                return Err(BraidingError::BaxterPole(x.to_string()));
            }
            let coeff = lambda().mul(x).div(&den);
            Ok(b.matrix().sub(&id.scalar_mul(&coeff)))
        }
        BraidKind::Involutive => {
            if x.is_zero() {
                return Err(BraidingError::BaxterPole(x.to_string()));
            }
            Ok(b.matrix().sub(&id.scalar_mul(&x.inv())))
        }
    }
}

/// The exact inverse of the current R-matrix, via the closed inversion
/// formulas (verified against R(x) by the identity suite).
pub fn baxterize_inv(b: &Braiding, x: &Scalar) -> Result<TensorOp<Scalar>, BraidingError> {
    match b.kind {
        BraidKind::Involutive => {
            // R^{-1}(x) = x^2/(x^2 - 1) R(-x), x != +-1
            let x2 = x.mul(x);
            let den = x2.sub(&Scalar::one());
            if den.is_zero() || x.is_zero() {
                return Err(BraidingError::BaxterPole(x.to_string()));
            }
            let r = baxterize(b, &x.neg())?;
            Ok(r.scalar_mul(&x2.div(&den)))
        }
        BraidKind::Hecke => {
            // R^{-1}(x) = (x-1)^2 / ((x-1)^2 - lambda^2 x) R(x^{-1})
            let xm1 = x.sub(&Scalar::one());
            let lam = lambda();
            let den = xm1.mul(&xm1).sub(&lam.mul(&lam).mul(x));
            if den.is_zero() || x.is_zero() || xm1.is_zero() {
                return Err(BraidingError::BaxterPole(x.to_string()));
            }
            let r = baxterize(b, &x.inv())?;
            Ok(r.scalar_mul(&xm1.mul(&xm1).div(&den)))
        }
    }
}

/// Sign of the q^2 steps in a chain of current R-matrices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainSign {
    Plus,
    Minus,
}

impl ChainSign {
    pub fn flip(self) -> ChainSign {
        match self {
            ChainSign::Plus => ChainSign::Minus,
            ChainSign::Minus => ChainSign::Plus,
        }
    }

    fn exponent(self) -> i64 {
        match self {
            ChainSign::Plus => 2,
            ChainSign::Minus => -2,
        }
    }
}

/// A chain [R_{i->j}(x)]^(sign) of current R-matrices: ascending when
/// j >= i, descending when i >= j, with arguments stepping by q^{+-2}.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub start: u8,
    pub end: u8,
    pub sign: ChainSign,
    pub arg: Scalar,
}

impl ChainSpec {
    pub fn new(start: u8, end: u8, sign: ChainSign, arg: Scalar) -> Self {
        ChainSpec {
            start,
            end,
            sign,
            arg,
        }
    }

    fn positions(&self) -> Vec<u8> {
        if self.end >= self.start {
            (self.start..=self.end).collect()
        } else {
            (self.end..=self.start).rev().collect()
        }
    }
}

fn chain_with(
    b: &Braiding,
    spec: &ChainSpec,
    ambient: u8,
    factor: impl Fn(&Braiding, &Scalar) -> Result<TensorOp<Scalar>, BraidingError>,
) -> Result<TensorOp<Scalar>, BraidingError> {
    if b.kind != BraidKind::Hecke {
        return Err(BraidingError::ChainsRequireHecke);
    }
    assert!(
        spec.start >= 1 && spec.end >= 1 && spec.start.max(spec.end) < ambient,
        "chain positions out of range for ambient {ambient}"
    );
    let step = b.qk(spec.sign.exponent());
    let mut arg = spec.arg.clone();
    let mut acc = TensorOp::identity_with(ambient, b.dim, Scalar::one());
    for pos in spec.positions() {
        let f = factor(b, &arg)?.embed(pos, ambient);
        acc = acc.mul(&f);
        arg = arg.mul(&step);
    }
    Ok(acc)
}

/// The chain [R_{i->j}(x)]^(sign) on V^{(x) ambient}.
pub fn chain(b: &Braiding, spec: &ChainSpec, ambient: u8) -> Result<TensorOp<Scalar>, BraidingError> {
    chain_with(b, spec, ambient, baxterize)
}

/// A chain of inverse current matrices [R^{-1}_{i->j}(x)]^(sign).
pub fn chain_of_inverses(
    b: &Braiding,
    spec: &ChainSpec,
    ambient: u8,
) -> Result<TensorOp<Scalar>, BraidingError> {
    chain_with(b, spec, ambient, baxterize_inv)
}

/// The inverse of [R_{i->j}(x)]^(sign), computed by the closed formula
/// {[R_{i->j}(x)]^(+-)}^{-1} = [R^{-1}_{j->i}(q^{+-2|i-j|} x)]^(-+).
pub fn chain_inverse(
    b: &Braiding,
    spec: &ChainSpec,
    ambient: u8,
) -> Result<TensorOp<Scalar>, BraidingError> {
    let dist = spec.start.abs_diff(spec.end) as i64;
    let shift = b.qk(spec.sign.exponent() * dist);
    let inv_spec = ChainSpec::new(
        spec.end,
        spec.start,
        spec.sign.flip(),
        spec.arg.mul(&shift),
    );
    chain_of_inverses(b, &inv_spec, ambient)
}
