//! Matrices of noncommutative polynomials carrying a truncated series in
//! u^{-1}: the generating matrix L(u) = I + sum_a L[a] u^{-a}, its overlined
//! copies, and exact argument shifts.
//!
//! Orders 0..=ord are retained. Since every series starts at order 0 with the
//! identity, products of such series are exact at every retained order. A
//! generating matrix built with ord > t_max has its slices above t_max zeroed
//! (no such generators exist at the truncation); objects built from it carry
//! the `truncated_model` flag and reports must say so for orders beyond
//! t_max.

use super::{Alphabet, GenId, NcPoly};
use crate::braiding::Braiding;
use crate::scalar::{qpow, Rat, Scalar};
use crate::tensor::{mul_scalar_left, mul_scalar_right, TensorOp};
use num_bigint::BigInt;
use num_traits::One;

/// A matrix-valued truncated Laurent series in u^{-1} with NcPoly entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesMat {
    /// Tensor factors of the ambient auxiliary space.
    pub n: u8,
    /// Dimension of a single factor.
    pub base: u32,
    /// Slices 0..=ord; index a holds the coefficient of u^{-a}.
    pub slices: Vec<TensorOp<NcPoly>>,
    /// Set when slices above the generator truncation were zeroed.
    pub truncated_model: bool,
}

impl SeriesMat {
    pub fn ord(&self) -> usize {
        self.slices.len() - 1
    }

    /// The generating matrix L(u) = I + sum_{a=1..t_max} L[a] u^{-a} on a
    /// single auxiliary factor, with fresh generators l_i^j[a].
    pub fn generating(n: u32, t_max: usize, ord: usize) -> SeriesMat {
        assert!(t_max >= 1 && ord >= t_max);
        let mut slices = Vec::with_capacity(ord + 1);
        slices.push(TensorOp::identity_with(1, n, NcPoly::one()));
        for a in 1..=ord {
            let mut m = TensorOp::zero(1, n);
            if a <= t_max {
                for i in 1..=n {
                    for j in 1..=n {
                        let g: GenId = Alphabet::yangian_gen(n, a, i, j);
                        m.set(i - 1, j - 1, NcPoly::gen(g));
                    }
                }
            }
            slices.push(m);
        }
        SeriesMat {
            n: 1,
            base: n,
            slices,
            truncated_model: ord > t_max,
        }
    }

    /// The shifted generating matrix L(u) = I + h * Ltilde(u) used by the
    /// h-family: slice a is h times the fresh generator matrix.
    pub fn generating_h(n: u32, t_max: usize, ord: usize) -> SeriesMat {
        let h = Scalar::var(crate::scalar::Var::H);
        let plain = SeriesMat::generating(n, t_max, ord);
        let mut slices = vec![plain.slices[0].clone()];
        for a in 1..=ord {
            slices.push(plain.slices[a].scalar_mul(&h));
        }
        SeriesMat {
            n: 1,
            base: n,
            slices,
            truncated_model: plain.truncated_model,
        }
    }

    /// Embed into V^{(x) ambient} at the first factor.
    pub fn ambient(&self, ambient: u8) -> SeriesMat {
        assert!(self.n == 1);
        SeriesMat {
            n: ambient,
            base: self.base,
            slices: self.slices.iter().map(|s| s.embed(1, ambient)).collect(),
            truncated_model: self.truncated_model,
        }
    }

    /// The overlined copy L_kbar on the ambient space: L_1bar = L_1 and
    /// L_{k+1}bar = R_k L_kbar R_k^{-1}, slice by slice.
    pub fn overline(&self, b: &Braiding, k: u8) -> SeriesMat {
        assert!(self.n >= k, "ambient too small for overline copy {k}");
        let mut out = self.clone();
        for j in 1..k {
            let r = b.embedded(j, self.n);
            let rinv = b.inv_embedded(j, self.n);
            for s in &mut out.slices {
                *s = mul_scalar_left(&r, &mul_scalar_right(s, &rinv));
            }
        }
        out
    }

    /// Trigonometric argument shift u -> q^{-2j} u: slice a picks up q^{2ja}.
    pub fn shift_trig(&self, j: i64) -> SeriesMat {
        let mut out = self.clone();
        for (a, s) in out.slices.iter_mut().enumerate() {
            if a > 0 {
                *s = s.scalar_mul(&qpow(2 * j * a as i64));
            }
        }
        out
    }

    /// Rational argument shift u -> u - c, re-expanded exactly:
    /// (u-c)^{-a} = sum_{t>=a} binom(t-1, a-1) c^{t-a} u^{-t}.
    pub fn shift_rational(&self, c: &Scalar) -> SeriesMat {
        if c.is_zero() {
            return self.clone();
        }
        let ord = self.ord();
        let mut slices = vec![self.slices[0].clone()];
        for t in 1..=ord {
            let mut acc = TensorOp::zero(self.n, self.base);
            for a in 1..=t {
                let coeff = c.pow((t - a) as i64).mul(&binom_scalar(t - 1, a - 1));
                acc = acc.add(&self.slices[a].scalar_mul(&coeff));
            }
            slices.push(acc);
        }
        SeriesMat {
            n: self.n,
            base: self.base,
            slices,
            truncated_model: self.truncated_model,
        }
    }

    /// Series product, exact at every retained order.
    pub fn mul(&self, other: &SeriesMat) -> SeriesMat {
        assert_eq!((self.n, self.base), (other.n, other.base));
        let ord = self.ord().min(other.ord());
        let mut slices = Vec::with_capacity(ord + 1);
        for t in 0..=ord {
            let mut acc = TensorOp::zero(self.n, self.base);
            for a in 0..=t {
                let prod = self.slices[a].mul(&other.slices[t - a]);
                acc = acc.add(&prod);
            }
            slices.push(acc);
        }
        SeriesMat {
            n: self.n,
            base: self.base,
            slices,
            truncated_model: self.truncated_model || other.truncated_model,
        }
    }

    /// Left multiplication by a scalar operator, slice by slice.
    pub fn mul_scalar_op_left(&self, op: &TensorOp<Scalar>) -> SeriesMat {
        SeriesMat {
            n: self.n,
            base: self.base,
            slices: self
                .slices
                .iter()
                .map(|s| mul_scalar_left(op, s))
                .collect(),
            truncated_model: self.truncated_model,
        }
    }

    /// Right multiplication by a scalar operator.
    pub fn mul_scalar_op_right(&self, op: &TensorOp<Scalar>) -> SeriesMat {
        SeriesMat {
            n: self.n,
            base: self.base,
            slices: self
                .slices
                .iter()
                .map(|s| mul_scalar_right(s, op))
                .collect(),
            truncated_model: self.truncated_model,
        }
    }

    pub fn sub(&self, other: &SeriesMat) -> SeriesMat {
        assert_eq!((self.n, self.base), (other.n, other.base));
        let ord = self.ord().min(other.ord());
        SeriesMat {
            n: self.n,
            base: self.base,
            slices: (0..=ord)
                .map(|a| self.slices[a].sub(&other.slices[a]))
                .collect(),
            truncated_model: self.truncated_model || other.truncated_model,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(|s| s.is_zero())
    }
}

/// binom(n, k) as an exact scalar.
pub fn binom_scalar(n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Scalar::from_rat(Rat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{builtin_braiding, BuiltinName};
    use crate::freealg::Alphabet;

    #[test]
    fn generating_matrix_shape() {
        let l = SeriesMat::generating(2, 3, 3);
        // 12 generators spread over 3 slices of a 2x2 matrix
        assert_eq!(l.slices.len(), 4);
        assert_eq!(l.slices[0], TensorOp::identity_with(1, 2, NcPoly::one()));
        for a in 1..=3 {
            assert_eq!(l.slices[a].nnz(), 4);
        }
        assert!(!l.truncated_model);
        let lt = SeriesMat::generating(2, 1, 2);
        assert!(lt.truncated_model);
        assert!(lt.slices[2].is_zero());
    }

    #[test]
    fn overline_with_flip_moves_to_second_factor() {
        // L_2bar = P L_1 P acts in the second tensor factor
        let b = builtin_braiding(BuiltinName::Flip, 2, None).unwrap();
        let l = SeriesMat::generating(2, 1, 1).ambient(2);
        let l2 = l.overline(&b, 2);
        // slice 1 of L_2bar should be I (x) L[1]
        let n = 2u32;
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for c in 0..n {
                        let entry = l2.slices[1].get(r * n + i, c * n + j);
                        if r == c {
                            let g = Alphabet::yangian_gen(n, 1, i + 1, j + 1);
                            assert_eq!(entry, NcPoly::gen(g));
                        } else {
                            assert!(entry.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overline_commutes_with_distant_r() {
        // R_i^{+-1} L_kbar = L_kbar R_i^{+-1} for i not in {k-1, k}; N=2, n=3
        let b = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
        let l = SeriesMat::generating(2, 1, 1).ambient(3);
        let l1 = l.overline(&b, 1);
        let r2 = b.embedded(2, 3);
        let r2inv = b.inv_embedded(2, 3);
        for s in 0..=1 {
            assert_eq!(
                mul_scalar_left(&r2, &l1.slices[s]),
                mul_scalar_right(&l1.slices[s], &r2),
            );
            assert_eq!(
                mul_scalar_left(&r2inv, &l1.slices[s]),
                mul_scalar_right(&l1.slices[s], &r2inv),
            );
        }
        // and L_3bar commutes with R_1
        let l3 = l.overline(&b, 3);
        let r1 = b.embedded(1, 3);
        for s in 0..=1 {
            assert_eq!(
                mul_scalar_left(&r1, &l3.slices[s]),
                mul_scalar_right(&l3.slices[s], &r1),
            );
        }
    }

    #[test]
    fn trig_shift_scales_slices() {
        let l = SeriesMat::generating(2, 2, 2);
        assert_eq!(l.shift_trig(0), l);
        let shifted = l.shift_trig(1);
        assert_eq!(shifted.slices[1], l.slices[1].scalar_mul(&qpow(2)));
        assert_eq!(shifted.slices[2], l.slices[2].scalar_mul(&qpow(4)));
    }

    #[test]
    fn rational_shift_binomials() {
        // shift by c = 1 at ord 2: slice 2 gains slice 1 (from
        // (u-1)^{-1} = u^{-1} + u^{-2} + ...)
        let l = SeriesMat::generating(2, 2, 2);
        let shifted = l.shift_rational(&Scalar::one());
        assert_eq!(shifted.slices[1], l.slices[1]);
        assert_eq!(shifted.slices[2], l.slices[2].add(&l.slices[1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_scalar(4, 2), Scalar::from_int(6));
        assert_eq!(binom_scalar(3, 0), Scalar::one());
        assert_eq!(binom_scalar(2, 3), Scalar::zero());
    }
}
