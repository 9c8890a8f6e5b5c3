//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`). Everything
//! is exact — zero residuals with symbolic q where stated, exact rational
//! evaluation at deterministically sampled points elsewhere; membership
//! checks certify with re-evaluating combination certificates.

use byv_core::braiding::identities::closed_form_symmetrizer;
use byv_core::braiding::{
    builtin_braiding, verify_rmatrix_identities, BuiltinName, RIdentity,
};
use byv_core::freealg::QMode;
use byv_core::gaudin::{
    abstract_commutativity, braided_sites, classical_sites, residue_check, talalaev,
    verify_hamiltonian_commutativity, verify_talalaev_commutativity, verify_weighted_map,
    weighted_sites, AbstractGaudin, BraidedSites,
};
use byv_core::report::{CheckRecord, Status};
use byv_core::scalar::{Rat, SamplePlan};
use byv_core::symfun::{
    verify_al_chain, verify_bethe_commutativity, verify_newton, verify_qdet_central,
    verify_shift_lemma, verify_tau_orders, TopSymmetrizer, YangianContext,
};
use byv_core::tensor::rank;
use byv_core::{BraidKind, Braiding};

fn rt(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn plan(count: usize, seed: u64) -> SamplePlan {
    SamplePlan::new(0, count, seed, &[]).unwrap()
}

fn catalog() -> Vec<Braiding> {
    vec![
        builtin_braiding(BuiltinName::Flip, 2, None).unwrap(),
        builtin_braiding(BuiltinName::Flip, 3, None).unwrap(),
        builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap(),
        builtin_braiding(BuiltinName::DjHecke, 3, None).unwrap(),
        builtin_braiding(BuiltinName::ConjugatedFlip, 2, None).unwrap(),
    ]
}

fn assert_all(criterion: &str, recs: &[CheckRecord], allow_inconclusive: bool) {
    let mut ok = true;
    for r in recs {
        match r.status {
            Status::Pass | Status::Skipped => {}
            Status::Inconclusive if allow_inconclusive => {}
            _ => {
                ok = false;
                println!(
                    "FAIL {criterion}: {} [{}] {:?}",
                    r.id, r.params, r.witness
                );
            }
        }
    }
    if ok {
        println!("PASS {criterion}");
    }
    assert!(ok, "{criterion} failed");
}

/// Criterion 1: braid relation, Hecke/involutive condition, C-matrix
/// properties including Tr C = m_q/q^m, idempotency, A^(m+1) = 0 with
/// rank A^(m) = 1 — exact, symbolic q, for the whole catalog.
#[test]
fn acceptance_1_braiding_suite() {
    let p = plan(12, 1);
    for b in catalog() {
        let ids = [
            RIdentity::Braid,
            RIdentity::KindCondition,
            RIdentity::CProperties,
            RIdentity::Idempotency,
        ];
        let recs = verify_rmatrix_identities(&b, &ids, &p);
        assert_all(&format!("criterion 1 ({} N={})", b.name, b.dim), &recs, false);
        // A^(m+1) = 0 on V^{(x) m+1} and rank A^(m) = 1 on V^{(x) m}
        let m = b.birank() as u8;
        let syms = b.skew_symmetrizers(m + 1);
        assert!(syms[m as usize].is_zero(), "A^(m+1) != 0 for {}", b.name);
        assert_eq!(
            rank(&b.skew_symmetrizer(m)),
            1,
            "rank A^(m) != 1 for {}",
            b.name
        );
    }
    println!("PASS criterion 1 (catalog complete)");
}

/// Criterion 2: parameterized Yang-Baxter at >= 20 sampled triples for every
/// catalog braiding; both inversion formulas verified, with the report
/// stating which trigonometric argument variant holds.
#[test]
fn acceptance_2_baxterization() {
    let p = plan(12, 2);
    for b in catalog() {
        let recs = verify_rmatrix_identities(
            &b,
            &[
                RIdentity::YangBaxter,
                RIdentity::RationalInversion,
                RIdentity::TrigInversion,
            ],
            &p,
        );
        assert_all(&format!("criterion 2 ({} N={})", b.name, b.dim), &recs, false);
        if b.kind == BraidKind::Hecke {
            let trig = recs.iter().find(|r| r.id == "trig_inversion").unwrap();
            let note = trig.witness.clone().unwrap_or_default();
            assert!(
                note.contains("R(x^-1): holds"),
                "trig inversion variant not resolved: {note}"
            );
            println!("  criterion 2 note ({}): {note}", b.name);
        }
    }
    println!("PASS criterion 2");
}

/// Criterion 3: the recursive A^(k) equals each closed chain form, k <= 4,
/// N <= 3, exact symbolic q.
#[test]
fn acceptance_3_symmetrizer_forms() {
    for n in [2u32, 3] {
        let b = builtin_braiding(BuiltinName::DjHecke, n, None).unwrap();
        for k in 2..=4u8 {
            let rec = b.skew_symmetrizer(k);
            for variant in 1..=4u8 {
                assert_eq!(
                    closed_form_symmetrizer(&b, k, variant),
                    rec,
                    "closed form {variant} differs at N={n}, k={k}"
                );
            }
        }
    }
    println!("PASS criterion 3");
}

/// Criterion 4: the four chain/symmetrizer commutation relations and the
/// inverse-chain identity for dj_hecke(2) and dj_hecke(3), k <= 3, at >= 10
/// sampled points, exact.
#[test]
fn acceptance_4_chain_lemma() {
    let p = plan(10, 4);
    for n in [2u32, 3] {
        let b = builtin_braiding(BuiltinName::DjHecke, n, None).unwrap();
        let recs = verify_rmatrix_identities(
            &b,
            &[
                RIdentity::ChainCommutation { kmax: 3 },
                RIdentity::InverseChain { kmax: 3 },
                RIdentity::ChainPermutation { kmax: 3 },
            ],
            &p,
        );
        assert_all(&format!("criterion 4 (dj_hecke N={n})"), &recs, false);
    }
    println!("PASS criterion 4");
}

/// Criterion 5: Newton identities — k=1 identically zero; k=2 for
/// dj_hecke(2) at T=2, D=3 with every u-coefficient certified; the rational
/// variant for the flip at T=2 likewise.
#[test]
fn acceptance_5_newton() {
    let h = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
    let ctx = YangianContext::trig(h, 2);
    let recs = verify_newton(&ctx, 2, 3, &QMode::Symbolic);
    assert_all("criterion 5 (trig dj_hecke(2) T=2 D=3)", &recs, false);
    let p = builtin_braiding(BuiltinName::Flip, 2, None).unwrap();
    let ctx = YangianContext::rational(p, 2);
    let recs = verify_newton(&ctx, 2, 3, &QMode::Symbolic);
    assert_all("criterion 5 (rational flip T=2 D=3)", &recs, false);
    println!("PASS criterion 5");
}

/// Criterion 6 (flagship): [e_k(u), e_p(v)] for (k,p) in
/// {(1,1),(1,2),(2,2)}, dj_hecke(2), T=2, D=4 — every bidegree coefficient
/// certified with a re-evaluating certificate; inconclusive is a failure.
#[test]
fn acceptance_6_bethe_commutativity() {
    let h = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
    let ctx = YangianContext::trig(h, 2);
    let recs =
        verify_bethe_commutativity(&ctx, &[(1, 1), (1, 2), (2, 2)], 4, &QMode::Symbolic);
    assert_eq!(recs.len(), 27, "3 pairs x 9 bidegrees expected");
    assert_all("criterion 6 (bethe dj_hecke(2) T=2 D=4)", &recs, false);
    println!("PASS criterion 6");
}

/// Criterion 7: quantum-determinant centrality — [e_2(u), l_i^j[a]] member
/// for all generators of dj_hecke(2) at T=2.
#[test]
fn acceptance_7_qdet_centrality() {
    let h = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
    let ctx = YangianContext::trig(h, 2);
    let recs = verify_qdet_central(&ctx, 3, &QMode::Symbolic);
    assert_eq!(recs.len(), 24, "8 generators x 3 orders expected");
    assert_all("criterion 7 (qdet dj_hecke(2) T=2)", &recs, false);
    println!("PASS criterion 7");
}

/// Criterion 8: the partial-trace shift lemma as an exact matrix identity
/// and the symmetrizer/L-chain exchange entrywise membership, dj_hecke(2),
/// k <= 2, T = 1..2.
#[test]
fn acceptance_8_shift_lemma_and_al_chain() {
    let h = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
    let ctx2 = YangianContext::trig(h.clone(), 2);
    let ctx1 = YangianContext::trig(h, 1);
    let mut recs = vec![
        verify_shift_lemma(&ctx2, 1, 1),
        verify_shift_lemma(&ctx2, 1, 2),
        verify_shift_lemma(&ctx1, 2, 1),
        verify_shift_lemma(&ctx1, 2, 2),
    ];
    recs.extend(verify_al_chain(&ctx1, 1, 2, &QMode::Symbolic));
    recs.extend(verify_al_chain(&ctx1, 2, 2, &QMode::Symbolic));
    recs.extend(verify_al_chain(&ctx2, 2, 3, &QMode::Symbolic));
    assert_all("criterion 8 (shift lemma + AL chain)", &recs, false);
    println!("PASS criterion 8");
}

/// Criterion 9: classical Gaudin for (m,K) in {(2,2),(2,3),(3,2)} — site
/// relations exact, Lax relation at 5 sampled pairs, [H_k,H_l] = 0, sum
/// H_k = 0, [QH_k(u), QH_l(v)] = 0 at 5 sampled pairs, residues of QH_2
/// proportional to H_k with the constant computed.
#[test]
fn acceptance_9_classical_gaudin() {
    let pairs = [
        (rt(5), rt(7)),
        (rt(-2), rt(3)),
        (rt(9), rt(4)),
        (rt(11), rt(-3)),
        (rt(6), rt(13)),
    ];
    for (m, k) in [(2u32, 2usize), (2, 3), (3, 2)] {
        let points: Vec<Rat> = (0..k as i64).map(rt).collect();
        let sys = classical_sites(m, k, &points).unwrap(); // site relations exact
        let mut recs = vec![sys.verify_lax_relation(&pairs)];
        recs.extend(verify_hamiltonian_commutativity(&sys));
        recs.push(verify_talalaev_commutativity(&sys, 2, &pairs));
        recs.extend(residue_check(&sys));
        assert_all(&format!("criterion 9 (m={m}, K={k})"), &recs, false);
    }
    println!("PASS criterion 9");
}

/// Criterion 10: braided Gaudin with the conjugated flip — the transported
/// realization satisfies the overlined site relations exactly (the report
/// states the concrete path ran), the abstract-mode membership also
/// certifies, and the weighted family commutes and maps to the plain one
/// under u_k -> 1/u_k.
#[test]
fn acceptance_10_braided_and_weighted_gaudin() {
    let cf = builtin_braiding(BuiltinName::ConjugatedFlip, 2, None).unwrap();
    let sites = braided_sites(&cf, 2, &[rt(0), rt(1)]).unwrap();
    match sites {
        BraidedSites::Concrete(sys) => {
            println!("  criterion 10: concrete transported realization ran");
            sys.verify_site_relations().unwrap();
            let pairs = [(rt(5), rt(7)), (rt(-2), rt(3)), (rt(9), rt(4))];
            let mut recs = vec![sys.verify_lax_relation(&pairs)];
            recs.extend(verify_hamiltonian_commutativity(&sys));
            recs.push(verify_talalaev_commutativity(&sys, 2, &pairs));
            assert_all("criterion 10 (concrete braided)", &recs, false);
        }
        BraidedSites::Abstract(_) => {
            panic!("conjugated flip admits the transported realization");
        }
    }
    // abstract-mode certification for the same braiding
    let ag = AbstractGaudin::new(cf, 2, vec![rt(0), rt(1)]);
    let recs = abstract_commutativity(&ag, 4, &QMode::Symbolic);
    assert_all("criterion 10 (abstract braided membership D=4)", &recs, false);
    // weighted family on (2,3)
    let pts = [rt(1), rt(2), rt(3)];
    let sys = weighted_sites(2, 3, &pts).unwrap();
    let mut recs = verify_hamiltonian_commutativity(&sys);
    recs.push(verify_weighted_map(2, 3, &pts));
    assert_all("criterion 10 (weighted family)", &recs, false);
    println!("PASS criterion 10");
}

/// Criterion 11: tau-order filtration for the flip, N=2, T=1 — the h^0 and
/// h^1 slices of tau_2 reduce to ideal members and the h^2 slice is nonzero.
#[test]
fn acceptance_11_tau_orders() {
    let p = builtin_braiding(BuiltinName::Flip, 2, None).unwrap();
    let ctx = YangianContext::h_family(p, 1, 2);
    let recs = verify_tau_orders(&ctx, 2, TopSymmetrizer::Full, 4, &QMode::Symbolic);
    assert_all("criterion 11 (tau_2 h-order filtration)", &recs, false);
    // the h^2 slice must be genuinely nonzero at some retained order
    let survived = recs.iter().any(|r| {
        r.witness
            .as_deref()
            .is_some_and(|w| w.contains("first nonzero h-slice at h^2"))
    });
    assert!(survived, "tau_2 must have a surviving h^2 part");
    // the comparison variant is reported alongside
    let recs_ak = verify_tau_orders(&ctx, 2, TopSymmetrizer::MatchingK, 4, &QMode::Symbolic);
    for r in &recs_ak {
        println!("  criterion 11 comparison: {} [{}] {:?}", r.id, r.params, r.witness);
    }
    println!("PASS criterion 11");
}

/// The talalaev operators of the braided flip system reproduce the classical
/// values entrywise (part of criterion 9's braided consistency note).
#[test]
fn acceptance_9b_braided_flip_matches_classical() {
    let p = builtin_braiding(BuiltinName::Flip, 2, None).unwrap();
    let BraidedSites::Concrete(bsys) = braided_sites(&p, 3, &[rt(0), rt(1), rt(2)]).unwrap()
    else {
        panic!("flip gives the concrete system");
    };
    let csys = classical_sites(2, 3, &[rt(0), rt(1), rt(2)]).unwrap();
    for k in 1..=2u8 {
        assert_eq!(
            talalaev(&bsys, k).unwrap(),
            talalaev(&csys, k).unwrap(),
            "braided flip QH_{k} differs from classical"
        );
    }
    assert_eq!(bsys.hamiltonians(), csys.hamiltonians());
    println!("PASS criterion 9 (braided flip reproduces classical)");
}
