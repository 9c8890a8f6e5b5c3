//! Verification suites for the quantum symmetric polynomials: Newton
//! identities, Bethe-subalgebra commutativity, quantum-determinant
//! centrality, the partial-trace shift lemma, the symmetrizer/L-chain
//! exchange identity, and the h-order filtration of the tau combinations.
//!
//! Identities that hold in the quotient algebra go through the bounded-degree
//! ideal-membership prover; "member" records carry re-evaluating
//! certificates, "not derivable at (T, D)" is inconclusive, never a failure.

use super::{
    elementary_sym, power_sum, shifted_elementary, tau_combination, SymSeries, TopSymmetrizer,
    YangianContext,
};
use crate::braiding::BraidKind;
use crate::freealg::{ideal_member, Membership, NcPoly, QMode, YangianCase};
use crate::report::{timed, CheckRecord};
use crate::scalar::Scalar;
use crate::tensor::TensorOp;

fn member_record(
    id: &str,
    params: String,
    poly: &NcPoly,
    ctx: &YangianContext,
    cap: usize,
    mode: &QMode,
) -> CheckRecord {
    timed(|| {
        if poly.is_zero() {
            return CheckRecord::pass(id, params).with_note("identically zero");
        }
        match ideal_member(poly, &ctx.rels, cap, mode) {
            Ok(Membership::Member(cert)) => {
                if !cert.verify(poly, &ctx.rels) {
                    return CheckRecord::fail(id, params, "certificate failed re-evaluation");
                }
                let kind = if cert.is_symbolic() {
                    "symbolic"
                } else {
                    "per-point"
                };
                CheckRecord::pass(id, params)
                    .with_note(format!("member; {kind} certificate, {} terms", cert.terms.len()))
                    .with_certificate(cert.to_json(&ctx.rels).to_string())
            }
            Ok(Membership::NotDerivable { t_max, degree_cap }) => CheckRecord::inconclusive(
                id,
                params,
                format!("not derivable at (T={t_max}, D={degree_cap})"),
            ),
            Err(e) => CheckRecord::fail(id, params, e.to_string()),
        }
    })
}

/// Newton identities: k_q e_k(u) - q^{k-1} p_1(q^{-2(k-1)}u) e_{k-1}(u) +
/// ... + (-1)^k p_k(u) = 0 (trig), and the rational variant with shifted
/// arguments. k = 1 must vanish identically; higher k per u-order through
/// the prover.
pub fn verify_newton(ctx: &YangianContext, kmax: u8, cap: usize, mode: &QMode) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let case = match ctx.case {
        YangianCase::Trig => "trig",
        YangianCase::Rational { .. } => "rational",
    };
    let es: Vec<SymSeries> = (1..=kmax).map(|k| elementary_sym(ctx, k)).collect();
    let ps: Vec<SymSeries> = (1..=kmax).map(|k| power_sum(ctx, k)).collect();
    for k in 1..=kmax {
        let mut combo = es[(k - 1) as usize].scalar_mul(&ctx.braiding.kq(k as u32));
        for j in 1..=k {
            let sign = if j % 2 == 0 {
                Scalar::one()
            } else {
                Scalar::from_int(-1)
            };
            let weight = match ctx.case {
                YangianCase::Trig => ctx.braiding.qk((k - j) as i64).mul(&sign),
                YangianCase::Rational { .. } => sign,
            };
            let pj = ctx.shift_series(&ps[(j - 1) as usize], (k - j) as i64);
            let ej = if j == k {
                SymSeries::unit(ctx.ord)
            } else {
                es[(k - j - 1) as usize].clone()
            };
            combo = combo.add(&pj.mul(&ej).scalar_mul(&weight));
        }
        if k == 1 {
            out.push(timed(|| {
                if combo.is_zero() {
                    CheckRecord::pass("newton", format!("{case} k=1"))
                        .with_note("e_1 = p_1 identically, no quotient needed")
                } else {
                    CheckRecord::fail("newton", format!("{case} k=1"), "e_1 != p_1")
                }
            }));
            continue;
        }
        for (a, coeff) in combo.coeffs.iter().enumerate() {
            if a > ctx.t_max {
                continue; // beyond the exact window of the truncated model
            }
            out.push(member_record(
                "newton",
                format!("{case} k={k} order u^-{a}"),
                coeff,
                ctx,
                cap,
                mode,
            ));
        }
    }
    out
}

/// [e_k(u), e_p(v)] = 0 in the quotient: every bidegree coefficient must be
/// an ideal member (Bethe subalgebra commutativity).
pub fn verify_bethe_commutativity(
    ctx: &YangianContext,
    pairs: &[(u8, u8)],
    cap: usize,
    mode: &QMode,
) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let mut cache: std::collections::HashMap<u8, SymSeries> = std::collections::HashMap::new();
    for &(k, p) in pairs {
        let ek = cache
            .entry(k)
            .or_insert_with(|| elementary_sym(ctx, k))
            .clone();
        let ep = cache
            .entry(p)
            .or_insert_with(|| elementary_sym(ctx, p))
            .clone();
        for a in 0..=ctx.t_max.min(ctx.ord) {
            for b in 0..=ctx.t_max.min(ctx.ord) {
                let comm = ek.coeffs[a].mul(&ep.coeffs[b]).sub(&ep.coeffs[b].mul(&ek.coeffs[a]));
                out.push(member_record(
                    "bethe_commutativity",
                    format!("(k,p)=({k},{p}) bidegree ({a},{b})"),
                    &comm,
                    ctx,
                    cap,
                    mode,
                ));
            }
        }
    }
    out
}

/// The quantum determinant e_m(u) is central: [e_m(u), l_i^j[a]] is an ideal
/// member for every generator.
pub fn verify_qdet_central(ctx: &YangianContext, cap: usize, mode: &QMode) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let m = ctx.braiding.birank() as u8;
    let em = elementary_sym(ctx, m);
    for g in 0..ctx.rels.alphabet.len() as u16 {
        let gen = NcPoly::gen(g);
        for (a, coeff) in em.coeffs.iter().enumerate() {
            if a > ctx.t_max {
                continue;
            }
            let comm = coeff.mul(&gen).sub(&gen.mul(coeff));
            out.push(member_record(
                "qdet_centrality",
                format!(
                    "[e_{m}(u) order u^-{a}, {}]",
                    ctx.rels.alphabet.label(g)
                ),
                &comm,
                ctx,
                cap,
                mode,
            ));
        }
    }
    out
}

/// Shift lemma: Tr_{R(k+1..k+p)} A^(p)_{k+1..k+p} L_{k+1}bar(u) ...
/// L_{k+p}bar(...) = I_{1..k} e_p(u), literally in the free algebra.
pub fn verify_shift_lemma(ctx: &YangianContext, k: u8, p: u8) -> CheckRecord {
    timed(|| {
        let params = format!("k={k} p={p}");
        let ambient = k + p;
        let a_shift = ctx.braiding.skew_symmetrizer(p).embed(k + 1, ambient);
        let chain = ctx.l_chain_at(ambient, k, p, |j| (j - 1) as i64);
        let weighted = chain.mul_scalar_op_left(&a_shift);
        let lhs: Vec<TensorOp<NcPoly>> = weighted
            .slices
            .iter()
            .map(|s| ctx.braiding.r_trace_suffix(s, p))
            .collect();
        let ep = elementary_sym(ctx, p);
        let id = TensorOp::identity_with(k, ctx.braiding.dim, NcPoly::one());
        for (a, l) in lhs.iter().enumerate() {
            let rhs = id.map(|one| one.mul(&ep.coeffs[a]));
            if l != &rhs {
                return CheckRecord::fail(
                    "shift_lemma",
                    params,
                    format!("matrix identity fails at order u^-{a}"),
                );
            }
        }
        CheckRecord::pass("shift_lemma", params).with_note("exact matrix identity, free algebra")
    })
}

/// The symmetrizer/L-chain exchange: A^(k) L_1bar(u) ... L_kbar(q^{-2(k-1)}u)
/// = L_1bar(q^{-2(k-1)}u) ... L_kbar(u) A^(k), entrywise modulo the ideal.
pub fn verify_al_chain(ctx: &YangianContext, k: u8, cap: usize, mode: &QMode) -> Vec<CheckRecord> {
    assert_eq!(ctx.braiding.kind, BraidKind::Hecke, "AL-chain is trig-only");
    let mut out = Vec::new();
    let a = ctx.braiding.skew_symmetrizer(k);
    let lhs = ctx.l_chain(k, k, |j| (j - 1) as i64).mul_scalar_op_left(&a);
    let rhs = ctx.l_chain(k, k, |j| (k - j) as i64).mul_scalar_op_right(&a);
    let diff = lhs.sub(&rhs);
    for (ord, slice) in diff.slices.iter().enumerate() {
        if ord > ctx.t_max {
            continue;
        }
        if slice.is_zero() {
            out.push(CheckRecord::pass(
                "al_chain",
                format!("k={k} order u^-{ord}"),
            ));
            continue;
        }
        let mut entries: Vec<CheckRecord> = Vec::new();
        for (r, c, p) in slice.entries() {
            entries.push(member_record(
                "al_chain",
                format!("k={k} order u^-{ord} entry ({r},{c})"),
                p,
                ctx,
                cap,
                mode,
            ));
        }
        out.extend(entries);
    }
    out
}

/// h-order filtration of tau_k: report, per u-order, the lowest h-order
/// whose slice is NOT an ideal member; with the full top symmetrizer the
/// h-orders below k must reduce to members.
pub fn verify_tau_orders(
    ctx: &YangianContext,
    k: usize,
    top: TopSymmetrizer,
    cap: usize,
    mode: &QMode,
) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let hats: Vec<SymSeries> = (0..=k as u8)
        .map(|p| shifted_elementary(ctx, p, top))
        .collect();
    let tau = tau_combination(&hats, k);
    let max_h = 2 * k + 2;
    for a in 1..=tau.ord() {
        let mut lowest_nonmember: Option<usize> = None;
        let mut lowest_nonzero: Option<usize> = None;
        for d in 0..=max_h {
            let slice = tau.h_slice(d);
            let poly = &slice.coeffs[a];
            if poly.is_zero() {
                continue;
            }
            lowest_nonzero.get_or_insert(d);
            match ideal_member(poly, &ctx.rels, cap, mode) {
                Ok(Membership::Member(_)) => {}
                _ => {
                    lowest_nonmember = Some(d);
                    break;
                }
            }
        }
        let params = format!("tau_{k} order u^-{a} ({:?})", top);
        let note = match (lowest_nonzero, lowest_nonmember) {
            (None, _) => "all h-slices vanish".to_string(),
            (Some(nz), None) => {
                format!("first nonzero h-slice at h^{nz}; all slices reduce to members")
            }
            (Some(nz), Some(nm)) => {
                format!("first nonzero h-slice at h^{nz}; first non-member slice at h^{nm}")
            }
        };
        // The h^k filtration claim is asserted for the full top
        // symmetrizer; the A^(k) variant runs for comparison and its outcome
        // is reported, not asserted.
        let ok = lowest_nonmember.map_or(true, |nm| nm >= k);
        out.push(match (top, ok) {
            (TopSymmetrizer::Full, true) => {
                CheckRecord::pass("tau_order", params).with_note(note)
            }
            (TopSymmetrizer::Full, false) => CheckRecord::fail("tau_order", params, note),
            (TopSymmetrizer::MatchingK, _) => CheckRecord::pass("tau_order_ak_comparison", params)
                .with_note(format!("{note}; h^k claim {}", if ok { "holds" } else { "fails" })),
        });
    }
    out
}

/// Compare ê_k at h = 1 with e_k of the plain rational Yangian: compute the
/// empirical multiplier from the leading coefficients and report whether the
/// whole series are proportional (literally or modulo the ideal).
pub fn hat_multiplier_report(
    ctx_h: &YangianContext,
    ctx_plain: &YangianContext,
    k: u8,
    cap: usize,
    mode: &QMode,
) -> CheckRecord {
    timed(|| {
        let params = format!("ê_{k}(h=1) vs e_{k}");
        let hat = shifted_elementary(ctx_h, k, TopSymmetrizer::Full)
            .eval_h(&crate::scalar::rat_int(1));
        let e = elementary_sym(ctx_plain, k);
        let (h0, e0) = (&hat.coeffs[0], &e.coeffs[0]);
        if e0.is_zero() || h0.is_zero() {
            return CheckRecord::skipped("hat_multiplier", params, "vanishing order-0 part");
        }
        let (we, ce) = e0.leading().unwrap();
        let (wh, ch) = h0.leading().unwrap();
        if we != wh {
            return CheckRecord::fail("hat_multiplier", params, "order-0 supports differ");
        }
        let ratio = ch.div(ce);
        let mut literal = true;
        for a in 0..=hat.ord().min(e.ord()) {
            if hat.coeffs[a] != e.coeffs[a].scalar_mul(&ratio) {
                literal = false;
                break;
            }
        }
        if literal {
            return CheckRecord::pass("hat_multiplier", params)
                .with_note(format!("ê_{k}(h=1) = ({ratio}) * e_{k} literally"));
        }
        // otherwise compare modulo the ideal
        for a in 0..=hat.ord().min(e.ord()).min(ctx_plain.t_max) {
            let diff = hat.coeffs[a].sub(&e.coeffs[a].scalar_mul(&ratio));
            match ideal_member(&diff, &ctx_plain.rels, cap, mode) {
                Ok(Membership::Member(_)) => {}
                _ => {
                    return CheckRecord::inconclusive(
                        "hat_multiplier",
                        params,
                        format!(
                            "candidate multiplier {ratio} fails at order u^-{a} even modulo the ideal"
                        ),
                    )
                }
            }
        }
        CheckRecord::pass("hat_multiplier", params)
            .with_note(format!("ê_{k}(h=1) = ({ratio}) * e_{k} modulo the ideal"))
    })
}
