//! Quantum symmetric polynomials of the braided Yangian: elementary
//! symmetric polynomials e_k(u), power sums p_k(u), the shifted family
//! ê_k(u) of the h-deformed rational Yangian, and the tau combinations.
//!
//! All series coefficients are noncommutative polynomials in the generator
//! slices; coefficients at orders up to the generator truncation are exact,
//! higher retained orders are coefficients of the truncated model and are
//! flagged as such.

pub mod suites;

use crate::braiding::{BraidKind, Braiding};
use crate::freealg::{yangian_relations, NcPoly, RelationSet, SeriesMat, YangianCase};
use crate::scalar::{Rat, Scalar, Var};
use crate::tensor::TensorOp;

/// A scalar-valued truncated series in u^{-1} with NcPoly coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SymSeries {
    pub label: String,
    /// coeffs[a] is the coefficient of u^{-a}.
    pub coeffs: Vec<NcPoly>,
    pub truncated_model: bool,
}

impl SymSeries {
    pub fn ord(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn unit(ord: usize) -> SymSeries {
        let mut coeffs = vec![NcPoly::zero(); ord + 1];
        coeffs[0] = NcPoly::one();
        SymSeries {
            label: "1".into(),
            coeffs,
            truncated_model: false,
        }
    }

    pub fn zero(ord: usize) -> SymSeries {
        SymSeries {
            label: "0".into(),
            coeffs: vec![NcPoly::zero(); ord + 1],
            truncated_model: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        let ord = self.ord().min(other.ord());
        SymSeries {
            label: format!("({} + {})", self.label, other.label),
            coeffs: (0..=ord)
                .map(|a| self.coeffs[a].add(&other.coeffs[a]))
                .collect(),
            truncated_model: self.truncated_model || other.truncated_model,
        }
    }

    pub fn sub(&self, other: &SymSeries) -> SymSeries {
        self.add(&other.scalar_mul(&Scalar::from_int(-1)))
    }

    pub fn scalar_mul(&self, s: &Scalar) -> SymSeries {
        SymSeries {
            label: self.label.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scalar_mul(s)).collect(),
            truncated_model: self.truncated_model,
        }
    }

    /// Noncommutative series product (coefficient order preserved).
    pub fn mul(&self, other: &SymSeries) -> SymSeries {
        let ord = self.ord().min(other.ord());
        let mut coeffs = Vec::with_capacity(ord + 1);
        for t in 0..=ord {
            let mut acc = NcPoly::zero();
            for a in 0..=t {
                acc = acc.add(&self.coeffs[a].mul(&other.coeffs[t - a]));
            }
            coeffs.push(acc);
        }
        SymSeries {
            label: format!("({} * {})", self.label, other.label),
            coeffs,
            truncated_model: self.truncated_model || other.truncated_model,
        }
    }

    /// u -> q^{-2j} u.
    pub fn shift_trig(&self, j: i64) -> SymSeries {
        let mut out = self.clone();
        for (a, c) in out.coeffs.iter_mut().enumerate() {
            if a > 0 {
                *c = c.scalar_mul(&crate::scalar::qpow(2 * j * a as i64));
            }
        }
        out
    }

    /// u -> u - c, re-expanded exactly at the retained orders.
    pub fn shift_rational(&self, c: &Scalar) -> SymSeries {
        if c.is_zero() {
            return self.clone();
        }
        let ord = self.ord();
        let mut coeffs = vec![self.coeffs[0].clone()];
        for t in 1..=ord {
            let mut acc = NcPoly::zero();
            for a in 1..=t {
                let w = c
                    .pow((t - a) as i64)
                    .mul(&crate::freealg::binom_scalar(t - 1, a - 1));
                acc = acc.add(&self.coeffs[a].scalar_mul(&w));
            }
            coeffs.push(acc);
        }
        SymSeries {
            label: self.label.clone(),
            coeffs,
            truncated_model: self.truncated_model,
        }
    }

    /// Extract the coefficient of h^d from every series coefficient.
    pub fn h_slice(&self, d: usize) -> SymSeries {
        SymSeries {
            label: format!("{}[h^{d}]", self.label),
            coeffs: self
                .coeffs
                .iter()
                .map(|p| {
                    p.map_coeffs(|s| match s.variable() {
                        Some(Var::H) | None => Scalar::from_rat(s.poly_coeff(d)),
                        _ => panic!("h_slice on a non-h scalar"),
                    })
                })
                .collect(),
            truncated_model: self.truncated_model,
        }
    }

    /// Substitute h = value in every coefficient.
    pub fn eval_h(&self, value: &Rat) -> SymSeries {
        SymSeries {
            label: format!("{}[h={}]", self.label, crate::scalar::render_rat(value)),
            coeffs: self
                .coeffs
                .iter()
                .map(|p| {
                    p.map_coeffs(|s| match s.variable() {
                        Some(Var::H) => s.eval(Var::H, value).expect("pole in h"),
                        _ => s.clone(),
                    })
                })
                .collect(),
            truncated_model: self.truncated_model,
        }
    }
}

/// Everything the symmetric-polynomial suites need, computed once.
pub struct YangianContext {
    pub braiding: Braiding,
    pub t_max: usize,
    pub ord: usize,
    pub case: YangianCase,
    pub rels: RelationSet,
    generating: SeriesMat,
}

impl YangianContext {
    pub fn new(braiding: Braiding, t_max: usize, ord: usize, case: YangianCase) -> Self {
        let rels = yangian_relations(&braiding, t_max, &case);
        let generating = {
            let plain = SeriesMat::generating(braiding.dim, t_max.min(ord), ord);
            let scale = match &case {
                YangianCase::Trig => Scalar::one(),
                YangianCase::Rational { h } => h.clone(),
            };
            let mut scaled = plain.clone();
            for a in 1..=ord {
                scaled.slices[a] = plain.slices[a].scalar_mul(&scale);
            }
            scaled
        };
        YangianContext {
            braiding,
            t_max,
            ord,
            case,
            rels,
            generating,
        }
    }

    /// Trigonometric context at truncation T (orders retained: T).
    pub fn trig(braiding: Braiding, t_max: usize) -> Self {
        assert_eq!(braiding.kind, BraidKind::Hecke);
        YangianContext::new(braiding, t_max, t_max, YangianCase::Trig)
    }

    /// Plain rational context (h = 1).
    pub fn rational(braiding: Braiding, t_max: usize) -> Self {
        assert_eq!(braiding.kind, BraidKind::Involutive);
        YangianContext::new(
            braiding,
            t_max,
            t_max,
            YangianCase::Rational { h: Scalar::one() },
        )
    }

    /// Deformed rational family with formal h, retaining `ord` orders.
    pub fn h_family(braiding: Braiding, t_max: usize, ord: usize) -> Self {
        assert_eq!(braiding.kind, BraidKind::Involutive);
        YangianContext::new(
            braiding,
            t_max,
            ord,
            YangianCase::Rational {
                h: Scalar::var(Var::H),
            },
        )
    }

    /// The deformation step between consecutive factor arguments:
    /// u -> q^{-2 steps} u (trig) or u -> u - steps * h (rational).
    fn shift_factor(&self, m: &SeriesMat, steps: i64) -> SeriesMat {
        match &self.case {
            YangianCase::Trig => m.shift_trig(steps),
            YangianCase::Rational { h } => {
                m.shift_rational(&h.mul(&Scalar::from_rat(Rat::from_integer(steps.into()))))
            }
        }
    }

    pub(crate) fn shift_series(&self, s: &SymSeries, steps: i64) -> SymSeries {
        match &self.case {
            YangianCase::Trig => s.shift_trig(steps),
            YangianCase::Rational { h } => {
                s.shift_rational(&h.mul(&Scalar::from_rat(Rat::from_integer(steps.into()))))
            }
        }
    }

    /// Product L_1bar(u) L_2bar ... L_kbar on `ambient` factors, with factor
    /// j argument-shifted by `shift(j)` steps.
    pub(crate) fn l_chain(&self, ambient: u8, k: u8, shift: impl Fn(u8) -> i64) -> SeriesMat {
        self.l_chain_at(ambient, 0, k, shift)
    }

    /// Same but with the copies at positions offset+1 .. offset+k.
    pub(crate) fn l_chain_at(
        &self,
        ambient: u8,
        offset: u8,
        k: u8,
        shift: impl Fn(u8) -> i64,
    ) -> SeriesMat {
        let base = self.generating.ambient(ambient);
        let mut acc: Option<SeriesMat> = None;
        for j in 1..=k {
            let factor = self
                .shift_factor(&base, shift(j))
                .overline(&self.braiding, offset + j);
            acc = Some(match acc {
                None => factor,
                Some(m) => m.mul(&factor),
            });
        }
        acc.expect("k >= 1")
    }
}

/// e_k(u) = Tr_{R(1..k)} A^(k) L_1bar(u) L_2bar(q^{-2}u or u-1) ...
pub fn elementary_sym(ctx: &YangianContext, k: u8) -> SymSeries {
    assert!(k >= 1, "e_k needs k >= 1");
    assert!(
        k as u32 <= ctx.braiding.birank(),
        "k = {k} exceeds the bi-rank {}; A^(k) vanishes and e_k is the zero series",
        ctx.braiding.birank()
    );
    let chain = ctx.l_chain(k, k, |j| (j - 1) as i64);
    let a = ctx.braiding.skew_symmetrizer(k);
    let weighted = chain.mul_scalar_op_left(&a);
    let coeffs = weighted
        .slices
        .iter()
        .map(|s| ctx.braiding.r_trace_full(s))
        .collect();
    SymSeries {
        label: format!("e_{k}"),
        coeffs,
        truncated_model: weighted.truncated_model,
    }
}

/// p_k(u) = Tr_{R(1..k)} (L_1bar(q^{-2(k-1)}u) ... L_kbar(u) R_{k-1} ... R_1).
pub fn power_sum(ctx: &YangianContext, k: u8) -> SymSeries {
    assert!(k >= 1);
    let chain = ctx.l_chain(k, k, |j| (k - j) as i64);
    let mut tail = TensorOp::identity_with(k, ctx.braiding.dim, Scalar::one());
    for i in (1..k).rev() {
        tail = tail.mul(&ctx.braiding.embedded(i, k));
    }
    let full = chain.mul_scalar_op_right(&tail);
    let coeffs = full
        .slices
        .iter()
        .map(|s| ctx.braiding.r_trace_full(s))
        .collect();
    SymSeries {
        label: format!("p_{k}"),
        coeffs,
        truncated_model: full.truncated_model,
    }
}

/// Which symmetrizer tops the shifted elementary polynomials ê_k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TopSymmetrizer {
    /// A^(m) with m the bi-rank: the full top symmetrizer over all m
    /// auxiliary factors, with only k <= m generating factors under it.
    Full,
    /// A^(k), matching the number of generating factors; runs for
    /// side-by-side comparison.
    MatchingK,
}

/// ê_k(u) = Tr_{R(1..m)} A^(m) L_1bar(u) L_2bar(u-h) ... L_kbar(u-h(k-1)),
/// with only k <= m factors of L under the full top symmetrizer.
pub fn shifted_elementary(ctx: &YangianContext, k: u8, top: TopSymmetrizer) -> SymSeries {
    assert_eq!(
        ctx.braiding.kind,
        BraidKind::Involutive,
        "the shifted family lives over an involutive symmetry"
    );
    let m = ctx.braiding.birank() as u8;
    assert!(k <= m, "ê_k needs k <= m");
    let a = match top {
        TopSymmetrizer::Full => ctx.braiding.skew_symmetrizer(m),
        TopSymmetrizer::MatchingK => {
            if k == 0 {
                TensorOp::identity_with(m, ctx.braiding.dim, Scalar::one())
            } else {
                ctx.braiding.skew_symmetrizers(m)[(k - 1) as usize].clone()
            }
        }
    };
    if k == 0 {
        // ê_0 = Tr_R A^(m), a scalar
        let c = ctx
            .braiding
            .r_trace_full(&a.map(|s| NcPoly::from_scalar(s.clone())));
        let mut out = SymSeries::zero(ctx.ord);
        out.coeffs[0] = c;
        out.label = "ê_0".into();
        return out;
    }
    let chain = ctx.l_chain(m, k, |j| (j - 1) as i64);
    let weighted = chain.mul_scalar_op_left(&a);
    let coeffs = weighted
        .slices
        .iter()
        .map(|s| ctx.braiding.r_trace_full(s))
        .collect();
    SymSeries {
        label: format!("ê_{k}"),
        coeffs,
        truncated_model: weighted.truncated_model,
    }
}

/// tau_k(u) = sum_p (-1)^{k-p} C(k,p) ê_p(u).
pub fn tau_combination(hats: &[SymSeries], k: usize) -> SymSeries {
    assert!(hats.len() > k);
    let mut acc = SymSeries::zero(hats[0].ord());
    for (p, hat) in hats.iter().enumerate().take(k + 1) {
        let sign = if (k - p) % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        let c = crate::freealg::binom_scalar(k, p).mul(&sign);
        acc = acc.add(&hat.scalar_mul(&c));
    }
    acc.label = format!("tau_{k}");
    acc
}

pub use suites::{
    hat_multiplier_report, verify_al_chain, verify_bethe_commutativity, verify_newton,
    verify_qdet_central, verify_shift_lemma, verify_tau_orders,
};
