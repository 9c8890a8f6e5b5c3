//! Exact verification of the pure R-matrix identities: Yang-Baxter with
//! parameters, the closed inversion formulas, cyclic and shift properties of
//! the R-trace, idempotency and closed forms of the skew-symmetrizers, and
//! the chain/symmetrizer commutation rules.
//!
//! Checks are either fully symbolic in q or exact at the sample plan's
//! rational points; failures are report entries carrying a witness, never
//! panics.

use super::baxter::{
    baxterize, baxterize_inv, chain, chain_inverse, chain_of_inverses, ChainSign, ChainSpec,
};
use super::{pseudo_random_op, BraidKind, Braiding};
use crate::report::{timed, CheckRecord};
use crate::scalar::{qfactorial, qpow, SamplePlan, Scalar};
use crate::tensor::TensorOp;

/// Identity families the verifier knows how to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RIdentity {
    /// Braid relation (exact, symbolic).
    Braid,
    /// Hecke or involutivity condition (exact, symbolic).
    KindCondition,
    /// The three defining properties of the C-matrix.
    CProperties,
    /// Parameterized Yang-Baxter at sampled triples.
    YangBaxter,
    /// Rational inversion formula R^{-1}(x) = x^2/(x^2-1) R(-x) at samples.
    RationalInversion,
    /// Trigonometric inversion, testing both candidate reflected arguments
    /// x^{-1} and -x^{-1}; the record states which one holds.
    TrigInversion,
    /// Idempotency A^(k) A^(k) = A^(k) for k up to the bi-rank, symbolic.
    Idempotency,
    /// The four closed chain forms of A^(k) against the recursion, symbolic.
    ClosedForms { kmax: u8 },
    /// Chain times closed-form inverse chain equals the identity, sampled.
    InverseChain { kmax: u8 },
    /// The four chain/symmetrizer commutation relations, sampled.
    ChainCommutation { kmax: u8 },
    /// The cyclic permutation rule for R-chains, sampled.
    ChainPermutation { kmax: u8 },
    /// Cyclic property of the R-trace on randomized operators.
    CyclicProperty,
    /// Trace-shift property Tr_R(k+1)(R_k^{+-1} X R_k^{-+1}) = I Tr_R(X).
    TraceShift,
}

/// Run the selected identity checks, returning one record per check.
pub fn verify_rmatrix_identities(
    b: &Braiding,
    selection: &[RIdentity],
    plan: &SamplePlan,
) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for id in selection {
        match id {
            RIdentity::Braid => out.push(check_braid(b)),
            RIdentity::KindCondition => out.push(check_kind(b)),
            RIdentity::CProperties => out.push(check_c_properties(b)),
            RIdentity::YangBaxter => out.push(check_yang_baxter(b, plan)),
            RIdentity::RationalInversion => out.push(check_rational_inversion(b, plan)),
            RIdentity::TrigInversion => out.push(check_trig_inversion(b, plan)),
            RIdentity::Idempotency => out.push(check_idempotency(b)),
            RIdentity::ClosedForms { kmax } => out.extend(check_closed_forms(b, *kmax)),
            RIdentity::InverseChain { kmax } => out.push(check_inverse_chain(b, *kmax, plan)),
            RIdentity::ChainCommutation { kmax } => {
                out.extend(check_chain_commutation(b, *kmax, plan))
            }
            RIdentity::ChainPermutation { kmax } => {
                out.push(check_chain_permutation(b, *kmax, plan))
            }
            RIdentity::CyclicProperty => out.push(check_cyclic(b)),
            RIdentity::TraceShift => out.push(check_trace_shift(b)),
        }
    }
    out
}

fn ident(n: u8, b: &Braiding) -> TensorOp<Scalar> {
    TensorOp::identity_with(n, b.dim, Scalar::one())
}

/// Run `check` on every point in parallel chunks, merging results in point
/// order: the first failure message wins deterministically.
fn par_over_points<F>(points: &[crate::scalar::Rat], check: F) -> Option<String>
where
    F: Fn(&crate::scalar::Rat) -> Option<String> + Sync,
{
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(points.len().max(1));
    if workers <= 1 {
        return points.iter().find_map(|p| check(p));
    }
    let chunk = points.len().div_ceil(workers);
    let mut slots: Vec<Option<String>> = vec![None; points.len()];
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (ci, pts) in points.chunks(chunk).enumerate() {
            let check = &check;
            handles.push((ci, scope.spawn(move || {
                pts.iter().map(|p| check(p)).collect::<Vec<_>>()
            })));
        }
        for (ci, h) in handles {
            for (i, r) in h.join().expect("worker panicked").into_iter().enumerate() {
                slots[ci * chunk + i] = r;
            }
        }
    });
    slots.into_iter().flatten().next()
}

fn check_braid(b: &Braiding) -> CheckRecord {
    timed(|| {
        let r1 = b.embedded(1, 3);
        let r2 = b.embedded(2, 3);
        if r1.mul(&r2).mul(&r1) == r2.mul(&r1).mul(&r2) {
            CheckRecord::pass("braid", &b.name)
        } else {
            CheckRecord::fail("braid", &b.name, "R1 R2 R1 != R2 R1 R2")
        }
    })
}

fn check_kind(b: &Braiding) -> CheckRecord {
    timed(|| match b.kind {
        BraidKind::Involutive => {
            if b.matrix().mul(b.matrix()) == ident(2, b) {
                CheckRecord::pass("involutive_condition", &b.name)
            } else {
                CheckRecord::fail("involutive_condition", &b.name, "R^2 != I")
            }
        }
        BraidKind::Hecke => {
            let q = Scalar::var(crate::scalar::Var::Q);
            let lhs = b
                .matrix()
                .sub(&ident(2, b).scalar_mul(&q))
                .mul(&b.matrix().add(&ident(2, b).scalar_mul(&q.inv())));
            if lhs.is_zero() {
                CheckRecord::pass("hecke_condition", &b.name)
            } else {
                CheckRecord::fail("hecke_condition", &b.name, "(R - qI)(R + I/q) != 0")
            }
        }
    })
}

fn check_c_properties(b: &Braiding) -> CheckRecord {
    timed(|| {
        let c = b.c_matrix();
        let n = b.dim;
        let c2 = c.to_tensor().embed(2, 2);
        let p1 = b.matrix().mul(&c2).partial_trace_suffix(1)
            == TensorOp::identity_with(1, n, Scalar::one());
        let cc = c.kron(c).to_tensor_n(2, n);
        let p2 = b.matrix().mul(&cc) == cc.mul(b.matrix());
        let m = b.birank();
        let p3 = c.trace() == b.kq(m).div(&b.qk(m as i64));
        if p1 && p2 && p3 {
            CheckRecord::pass("c_matrix_properties", &b.name)
                .with_note(format!("Tr C = {} with m = {m}", c.trace()))
        } else {
            CheckRecord::fail(
                "c_matrix_properties",
                &b.name,
                format!("defining: {p1}, commutation: {p2}, trace: {p3}"),
            )
        }
    })
}

fn current_arg(b: &Braiding, u: &Scalar, v: &Scalar) -> Scalar {
    match b.kind {
        BraidKind::Hecke => u.div(v),
        BraidKind::Involutive => u.sub(v),
    }
}

fn check_yang_baxter(b: &Braiding, plan: &SamplePlan) -> CheckRecord {
    timed(|| {
        let pts = &plan.points;
        let mut triples = Vec::new();
        'outer: for i in 0..pts.len() {
            for j in 0..pts.len() {
                for k in 0..pts.len() {
                    if i != j && j != k && i != k {
                        triples.push((i, j, k));
                        if triples.len() >= 20 {
                            break 'outer;
                        }
                    }
                }
            }
        }
        for (i, j, k) in &triples {
            let (u, v, w) = (
                Scalar::from_rat(pts[*i].clone()),
                Scalar::from_rat(pts[*j].clone()),
                Scalar::from_rat(pts[*k].clone()),
            );
            let r = |x: &Scalar, pos: u8| baxterize(b, x).unwrap().embed(pos, 3);
            let lhs = r(&current_arg(b, &u, &v), 1)
                .mul(&r(&current_arg(b, &u, &w), 2))
                .mul(&r(&current_arg(b, &v, &w), 1));
            let rhs = r(&current_arg(b, &v, &w), 2)
                .mul(&r(&current_arg(b, &u, &w), 1))
                .mul(&r(&current_arg(b, &u, &v), 2));
            if lhs != rhs {
                return CheckRecord::fail(
                    "yang_baxter",
                    &b.name,
                    format!("violated at (u,v,w) = ({u}, {v}, {w})"),
                );
            }
        }
        CheckRecord::pass("yang_baxter", &b.name)
            .with_note(format!("{} sampled triples", triples.len()))
    })
}

fn check_rational_inversion(b: &Braiding, plan: &SamplePlan) -> CheckRecord {
    timed(|| {
        if b.kind != BraidKind::Involutive {
            return CheckRecord::skipped("rational_inversion", &b.name, "Hecke symmetry");
        }
        let id = ident(2, b);
        for pt in &plan.points {
            let x = Scalar::from_rat(pt.clone());
            if x.is_zero() || x.mul(&x) == Scalar::one() {
                continue;
            }
            let r = baxterize(b, &x).unwrap();
            let rinv = baxterize_inv(b, &x).unwrap();
            if r.mul(&rinv) != id {
                return CheckRecord::fail(
                    "rational_inversion",
                    &b.name,
                    format!("R(x) R^-1(x) != I at x = {x}"),
                );
            }
        }
        CheckRecord::pass("rational_inversion", &b.name)
    })
}

fn check_trig_inversion(b: &Braiding, plan: &SamplePlan) -> CheckRecord {
    timed(|| {
        if b.kind != BraidKind::Hecke {
            return CheckRecord::skipped("trig_inversion", &b.name, "involutive symmetry");
        }
        let id = ident(2, b);
        let lam = crate::scalar::lambda();
        let mut plus_holds = true; // argument x^{-1}
        let mut minus_holds = true; // sign-flipped candidate -x^{-1}
        for pt in &plan.points {
            let x = Scalar::from_rat(pt.clone());
            if x.is_zero() || x.is_one() {
                continue;
            }
            let r = baxterize(b, &x).unwrap();
            let xm1 = x.sub(&Scalar::one());
            let scale = xm1.mul(&xm1).div(&xm1.mul(&xm1).sub(&lam.mul(&lam).mul(&x)));
            let cand_plus = baxterize(b, &x.inv()).unwrap().scalar_mul(&scale);
            if r.mul(&cand_plus) != id {
                plus_holds = false;
            }
            let neg_arg = x.inv().neg();
            match baxterize(b, &neg_arg) {
                Ok(op) => {
                    if r.mul(&op.scalar_mul(&scale)) != id {
                        minus_holds = false;
                    }
                }
                Err(_) => minus_holds = false,
            }
        }
        let note = format!(
            "variant R(x^-1): {}; variant R(-x^-1): {}",
            if plus_holds { "holds" } else { "fails" },
            if minus_holds { "holds" } else { "fails" }
        );
        if plus_holds || minus_holds {
            CheckRecord::pass("trig_inversion", &b.name).with_note(note)
        } else {
            CheckRecord::fail("trig_inversion", &b.name, note)
        }
    })
}

fn check_idempotency(b: &Braiding) -> CheckRecord {
    timed(|| {
        let m = b.birank() as u8;
        let syms = b.skew_symmetrizers(m);
        for (i, a) in syms.iter().enumerate() {
            if &a.mul(a) != a {
                return CheckRecord::fail(
                    "idempotency",
                    &b.name,
                    format!("A^({}) is not idempotent", i + 1),
                );
            }
        }
        CheckRecord::pass("idempotency", &b.name).with_note(format!("k <= {m}, symbolic"))
    })
}

/// A^(k) as one of the four closed chain-product forms; variant in 1..=4.
pub fn closed_form_symmetrizer(b: &Braiding, k: u8, variant: u8) -> TensorOp<Scalar> {
    assert!(b.kind == BraidKind::Hecke, "closed forms are Hecke-only");
    assert!(k >= 1);
    let sign = if (k as u32 * (k as u32 - 1) / 2) % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    };
    let coeff = sign.div(&qfactorial(k as u32));
    let q2 = qpow(2);
    let mut acc = TensorOp::identity_with(k, b.dim, Scalar::one());
    match variant {
        1 => {
            // [R_{1->k-1}(q^2)]^+ [R_{1->k-2}(q^2)]^+ ... R_1(q^2)
            for t in (1..k).rev() {
                let c = chain(b, &ChainSpec::new(1, t, ChainSign::Plus, q2.clone()), k).unwrap();
                acc = acc.mul(&c);
            }
        }
        2 => {
            // [R_{k-1->1}(q^2)]^+ [R_{k-1->2}(q^2)]^+ ... R_{k-1}(q^2)
            for j in 1..k {
                let c =
                    chain(b, &ChainSpec::new(k - 1, j, ChainSign::Plus, q2.clone()), k).unwrap();
                acc = acc.mul(&c);
            }
        }
        3 => {
            // R_1(q^2) [R_{2->1}(q^4)]^- ... [R_{k-1->1}(q^{2(k-1)})]^-
            for t in 1..k {
                let c = chain(
                    b,
                    &ChainSpec::new(t, 1, ChainSign::Minus, qpow(2 * t as i64)),
                    k,
                )
                .unwrap();
                acc = acc.mul(&c);
            }
        }
        4 => {
            // R_{k-1}(q^2) [R_{k-2->k-1}(q^4)]^- ... [R_{1->k-1}(q^{2(k-1)})]^-
            for t in 1..k {
                let c = chain(
                    b,
                    &ChainSpec::new(k - t, k - 1, ChainSign::Minus, qpow(2 * t as i64)),
                    k,
                )
                .unwrap();
                acc = acc.mul(&c);
            }
        }
        _ => panic!("closed form variant must be 1..=4"),
    }
    acc.scalar_mul(&coeff)
}

fn check_closed_forms(b: &Braiding, kmax: u8) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    if b.kind != BraidKind::Hecke {
        out.push(CheckRecord::skipped(
            "symmetrizer_closed_forms",
            &b.name,
            "involutive symmetry",
        ));
        return out;
    }
    for k in 2..=kmax {
        out.push(timed(|| {
            let rec = b.skew_symmetrizer(k);
            for variant in 1..=4u8 {
                let cf = closed_form_symmetrizer(b, k, variant);
                if cf != rec {
                    return CheckRecord::fail(
                        "symmetrizer_closed_forms",
                        format!("{} k={k}", b.name),
                        format!("closed form {variant} differs from the recursion"),
                    );
                }
            }
            CheckRecord::pass("symmetrizer_closed_forms", format!("{} k={k}", b.name))
                .with_note("all four chain forms equal the recursion, symbolic q")
        }));
    }
    out
}

fn check_inverse_chain(b: &Braiding, kmax: u8, plan: &SamplePlan) -> CheckRecord {
    timed(|| {
        if b.kind != BraidKind::Hecke {
            return CheckRecord::skipped("inverse_chain", &b.name, "involutive symmetry");
        }
        let ambient = kmax + 1;
        let id = ident(ambient, b);
        let witness = par_over_points(&plan.points, |pt| {
            let u = Scalar::from_rat(pt.clone());
            if u.is_zero() || u.is_one() {
                return None;
            }
            for sign in [ChainSign::Plus, ChainSign::Minus] {
                for (i, j) in [(1u8, kmax), (kmax, 1)] {
                    let spec = ChainSpec::new(i, j, sign, u.clone());
                    let (Ok(c), Ok(cinv)) =
                        (chain(b, &spec, ambient), chain_inverse(b, &spec, ambient))
                    else {
                        continue; // pole at this sample point
                    };
                    if c.mul(&cinv) != id {
                        return Some(format!(
                            "chain {i}->{j} at u = {u} not inverted by the closed formula"
                        ));
                    }
                }
            }
            None
        });
        match witness {
            Some(w) => CheckRecord::fail("inverse_chain", &b.name, w),
            None => CheckRecord::pass("inverse_chain", &b.name)
                .with_note(format!("k = {kmax}, {} sampled points", plan.len())),
        }
    })
}

fn check_chain_commutation(b: &Braiding, kmax: u8, plan: &SamplePlan) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    if b.kind != BraidKind::Hecke {
        out.push(CheckRecord::skipped(
            "chain_commutation",
            &b.name,
            "involutive symmetry",
        ));
        return out;
    }
    for k in 1..=kmax {
        out.push(timed(|| {
            let ambient = k + 1;
            let a1 = b.skew_symmetrizer(k).embed(1, ambient);
            let a2 = b.skew_symmetrizer(k).embed(2, ambient);
            let a1 = &a1;
            let a2 = &a2;
            let witness = par_over_points(&plan.points, |pt| {
                let u = Scalar::from_rat(pt.clone());
                let shifted = u.mul(&qpow(-2 * (k as i64 - 1)));
                // 1: [R_{1->k}(q^{-2(k-1)}u)]^+ A_{1..k} = A_{2..k+1} [R_{1->k}(u)]^-
                let lhs = chain(b, &ChainSpec::new(1, k, ChainSign::Plus, shifted.clone()), ambient)
                    .unwrap()
                    .mul(&a1);
                let rhs = a2.mul(
                    &chain(b, &ChainSpec::new(1, k, ChainSign::Minus, u.clone()), ambient).unwrap(),
                );
                if lhs != rhs {
                    return Some(format!("relation 1 fails at u = {u}"));
                }
                // 2: [Rinv_{1->k}(u)]^- A_{1..k} = A_{2..k+1} [Rinv_{1->k}(q^{-2(k-1)}u)]^+
                let lhs = chain_of_inverses(
                    b,
                    &ChainSpec::new(1, k, ChainSign::Minus, u.clone()),
                    ambient,
                )
                .unwrap()
                .mul(&a1);
                let rhs = a2.mul(
                    &chain_of_inverses(
                        b,
                        &ChainSpec::new(1, k, ChainSign::Plus, shifted.clone()),
                        ambient,
                    )
                    .unwrap(),
                );
                if lhs != rhs {
                    return Some(format!("relation 2 fails at u = {u}"));
                }
                // 3: A_{1..k} [R_{k->1}(u)]^- = [R_{k->1}(q^{-2(k-1)}u)]^+ A_{2..k+1}
                let lhs = a1.mul(
                    &chain(b, &ChainSpec::new(k, 1, ChainSign::Minus, u.clone()), ambient).unwrap(),
                );
                let rhs = chain(b, &ChainSpec::new(k, 1, ChainSign::Plus, shifted.clone()), ambient)
                    .unwrap()
                    .mul(&a2);
                if lhs != rhs {
                    return Some(format!("relation 3 fails at u = {u}"));
                }
                // 4: A_{1..k} [Rinv_{k->1}(q^{-2(k-1)}u)]^+ = [Rinv_{k->1}(u)]^- A_{2..k+1}
                let lhs = a1.mul(
                    &chain_of_inverses(
                        b,
                        &ChainSpec::new(k, 1, ChainSign::Plus, shifted.clone()),
                        ambient,
                    )
                    .unwrap(),
                );
                let rhs = chain_of_inverses(
                    b,
                    &ChainSpec::new(k, 1, ChainSign::Minus, u.clone()),
                    ambient,
                )
                .unwrap()
                .mul(&a2);
                if lhs != rhs {
                    return Some(format!("relation 4 fails at u = {u}"));
                }
                None
            });
            match witness {
                Some(w) => {
                    CheckRecord::fail("chain_commutation", format!("{} k={k}", b.name), w)
                }
                None => CheckRecord::pass("chain_commutation", format!("{} k={k}", b.name))
                    .with_note(format!("all four relations, {} sampled points", plan.len())),
            }
        }));
    }
    out
}

fn check_chain_permutation(b: &Braiding, kmax: u8, plan: &SamplePlan) -> CheckRecord {
    timed(|| {
        if b.kind != BraidKind::Hecke {
            return CheckRecord::skipped("chain_permutation", &b.name, "involutive symmetry");
        }
        let q2 = qpow(2);
        for k in 2..=kmax {
            let ambient = k + 1;
            for pt in &plan.points {
                let u = Scalar::from_rat(pt.clone());
                // [R_{1->k}(u)]^+ [R_{1->k-1}(q^2)]^+
                //   = [R_{2->k}(q^2)]^+ [R_{1->k-1}(q^2 u)]^+ R_k(u)
                let lhs = chain(b, &ChainSpec::new(1, k, ChainSign::Plus, u.clone()), ambient)
                    .unwrap()
                    .mul(
                        &chain(
                            b,
                            &ChainSpec::new(1, k - 1, ChainSign::Plus, q2.clone()),
                            ambient,
                        )
                        .unwrap(),
                    );
                let rhs = chain(b, &ChainSpec::new(2, k, ChainSign::Plus, q2.clone()), ambient)
                    .unwrap()
                    .mul(
                        &chain(
                            b,
                            &ChainSpec::new(1, k - 1, ChainSign::Plus, q2.mul(&u)),
                            ambient,
                        )
                        .unwrap(),
                    )
                    .mul(&baxterize(b, &u).unwrap().embed(k, ambient));
                if lhs != rhs {
                    return CheckRecord::fail(
                        "chain_permutation",
                        format!("{} k={k}", b.name),
                        format!("fails at u = {u}"),
                    );
                }
            }
        }
        CheckRecord::pass("chain_permutation", &b.name).with_note(format!("k <= {kmax}"))
    })
}

fn check_cyclic(b: &Braiding) -> CheckRecord {
    timed(|| {
        let k = 3u8;
        for seed in 0..25u64 {
            let x = pseudo_random_op(k, b.dim, 2, seed);
            let mut f =
                TensorOp::identity_with(k, b.dim, Scalar::from_int((seed % 3) as i64 + 1));
            let mut s = seed ^ 0xdeadbeef;
            for _ in 0..(seed % 4) {
                s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
                f = f.mul(&b.embedded((s % 2) as u8 + 1, k));
            }
            if b.r_trace_full(&f.mul(&x)) != b.r_trace_full(&x.mul(&f)) {
                return CheckRecord::fail(
                    "cyclic_property",
                    &b.name,
                    format!("Tr_R(f X) != Tr_R(X f) at seed {seed}"),
                );
            }
        }
        CheckRecord::pass("cyclic_property", &b.name).with_note("25 randomized exact checks, k = 3")
    })
}

fn check_trace_shift(b: &Braiding) -> CheckRecord {
    timed(|| {
        for k in 1u8..=2 {
            for seed in 0..5u64 {
                let x = pseudo_random_op(k, b.dim, 2, seed + 31 * k as u64);
                let xe = x.embed(1, k + 1);
                let rk = b.embedded(k, k + 1);
                let rkinv = b.inv_embedded(k, k + 1);
                for (f, g) in [(&rk, &rkinv), (&rkinv, &rk)] {
                    let lhs = b.r_trace_suffix(&f.mul(&xe).mul(g), 1);
                    let rhs = b.r_trace_suffix(&x, 1).embed(1, k);
                    if lhs != rhs {
                        return CheckRecord::fail(
                            "trace_shift",
                            &b.name,
                            format!("fails at k = {k}, seed {seed}"),
                        );
                    }
                }
            }
        }
        CheckRecord::pass("trace_shift", &b.name).with_note("both signs, k in {1,2}, randomized X")
    })
}
