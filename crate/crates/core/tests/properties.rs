//! Property tests: exact field axioms on the scalars, canonical-form
//! guarantees, grammar round-trips, and free-algebra arithmetic laws.

use byv_core::braiding::parse_expr;
use byv_core::freealg::{NcPoly, Word};
use byv_core::scalar::{rat, QPoly, Rat, Scalar, Var};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

/// Nonzero rational functions of small degree in q.
fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec(arb_rat(), 1..4),
        prop::collection::vec(arb_rat(), 1..4),
    )
        .prop_filter_map("nonzero denominator", |(num, den)| {
            let n = QPoly::from_coeffs(num);
            let d = QPoly::from_coeffs(den);
            if d.is_zero() {
                None
            } else {
                Some(Scalar::from_polys(Var::Q, n, d))
            }
        })
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u16..5, 0..4).prop_map(Word)
}

fn arb_ncpoly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((arb_word(), -5i64..6), 0..5).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &Scalar::from_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        // associativity and commutativity
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        // distributivity
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // inverses of nonzero elements
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv()), Scalar::one());
        }
    }

    #[test]
    fn scalar_canonical_difference(a in arb_scalar()) {
        let z = a.sub(&a);
        prop_assert!(z.is_zero());
        prop_assert_eq!(z, Scalar::zero());
    }

    #[test]
    fn scalar_display_roundtrips(a in arb_scalar()) {
        let printed = a.to_string();
        let back = parse_expr(&printed).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn scalar_eval_is_homomorphic(a in arb_scalar(), b in arb_scalar(), pt in 2i64..40) {
        let x = rat(pt, 1);
        let (ea, eb) = (a.eval(Var::Q, &x), b.eval(Var::Q, &x));
        let (Ok(ea), Ok(eb)) = (ea, eb) else { return Ok(()); };
        if let Ok(es) = a.add(&b).eval(Var::Q, &x) {
            prop_assert_eq!(es, ea.add(&eb));
        }
        if let Ok(ep) = a.mul(&b).eval(Var::Q, &x) {
            prop_assert_eq!(ep, ea.mul(&eb));
        }
    }

    #[test]
    fn ncpoly_ring_axioms(a in arb_ncpoly(), b in arb_ncpoly(), c in arb_ncpoly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)));
        prop_assert_eq!(a.sub(&a), NcPoly::zero());
    }

    #[test]
    fn ncpoly_degree_additive(a in arb_ncpoly(), b in arb_ncpoly()) {
        if !a.is_zero() && !b.is_zero() {
            // leading words concatenate uniquely in the free algebra
            prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
        }
    }

    #[test]
    fn qpoly_divrem_invariant(a in prop::collection::vec(arb_rat(), 0..6),
                              b in prop::collection::vec(arb_rat(), 1..5)) {
        let a = QPoly::from_coeffs(a);
        let b = QPoly::from_coeffs(b);
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }
}
