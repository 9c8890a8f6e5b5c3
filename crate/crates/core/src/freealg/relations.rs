//! Defining relations of the braided Yangian of RE type, truncated.
//!
//! The defining system R(u,v) L_1bar(u) L_2bar(v) = L_1bar(v) L_2bar(u) R(u,v)
//! is multiplied by (u - v) to clear the single pole, expanded in u^{-1} and
//! v^{-1}, and the coefficient at each bidegree is an N^2 x N^2 matrix of
//! noncommutative polynomials in the slices L[a]. Coefficients at bidegrees
//! up to (T, T) involve slices up to T+1; the truncation-closed relation set
//! is the span of those coefficient relations that can be combined to
//! eliminate every monomial containing a slice-(T+1) generator. Every kept
//! relation is therefore an exact consequence of the defining system.

use super::{Alphabet, NcPoly, SeriesMat, Word};
use crate::braiding::{BraidKind, Braiding};
use crate::scalar::{lambda, Scalar};
use crate::tensor::{mul_scalar_left, mul_scalar_right, TensorOp};

/// Which baxterization the relations come from.
#[derive(Clone, Debug, PartialEq)]
pub enum YangianCase {
    /// Hecke symmetry, R(u,v) = R - lambda u/(u-v) I.
    Trig,
    /// Involutive symmetry, R(u,v) = R - h I/(u-v); h = 1 is the plain
    /// rational case, a symbolic h gives the deformed family.
    Rational { h: Scalar },
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub id: usize,
    /// Monic in the deglex leading coefficient.
    pub poly: NcPoly,
    /// Which (u^-alpha, v^-beta) coefficient(s) of the defining system
    /// produced it.
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct RelationSet {
    pub alphabet: Alphabet,
    pub t_max: usize,
    pub dim: u32,
    pub case: YangianCase,
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Assemble a relation set from raw polynomials (used by the abstract
    /// Gaudin site presentations): inter-reduce, normalize monic, assign ids.
    pub fn from_polys(alphabet: Alphabet, dim: u32, raw: Vec<(NcPoly, String)>) -> RelationSet {
        let relations = autoreduce(raw)
            .into_iter()
            .enumerate()
            .map(|(id, (poly, provenance))| Relation {
                id,
                poly,
                provenance,
            })
            .collect();
        RelationSet {
            alphabet,
            t_max: 1,
            dim,
            case: YangianCase::Rational { h: Scalar::one() },
            relations,
        }
    }
}

/// Extract the truncation-closed relation set of Y(R) at generator cap T.
pub fn yangian_relations(b: &Braiding, t_max: usize, case: &YangianCase) -> RelationSet {
    assert!(t_max >= 1);
    match (&case, b.kind) {
        (YangianCase::Trig, BraidKind::Hecke) => {}
        (YangianCase::Rational { .. }, BraidKind::Involutive) => {}
        _ => panic!("case does not match the braiding kind"),
    }
    let n = b.dim;
    let t_ext = t_max + 1; // slices T+1 appear in the collected coefficients
    // In the deformed rational family the generating matrix is
    // L(u) = I + h * Ltilde(u); the plain cases have h = 1.
    let l = {
        let plain = SeriesMat::generating(n, t_ext, t_ext);
        let scale = match case {
            YangianCase::Trig => Scalar::one(),
            YangianCase::Rational { h } => h.clone(),
        };
        let mut scaled = plain.clone();
        for a in 1..=t_ext {
            scaled.slices[a] = plain.slices[a].scalar_mul(&scale);
        }
        scaled.ambient(2)
    };
    // X[a] = slice a of L_1bar, Y[a] = R X[a] R^{-1} (slice a of L_2bar)
    let x: Vec<TensorOp<NcPoly>> = l.slices.clone();
    let y: Vec<TensorOp<NcPoly>> = x
        .iter()
        .map(|s| mul_scalar_left(b.matrix(), &mul_scalar_right(s, b.inverse())))
        .collect();
    let zero = TensorOp::zero(2, n);
    let slice = |v: &[TensorOp<NcPoly>], idx: i64| -> TensorOp<NcPoly> {
        if idx < 0 || idx as usize >= v.len() {
            zero.clone()
        } else {
            v[idx as usize].clone()
        }
    };

    let mut raw: Vec<(NcPoly, String)> = Vec::new();
    for alpha in -1..=(t_max as i64) {
        for beta in -1..=(t_max as i64) {
            let rel = match case {
                YangianCase::Trig => {
                    let lam = lambda();
                    // R X[a+1] Y[b] - R X[a] Y[b+1] - lam X[a+1] Y[b]
                    //   - X[b] Y[a+1] R + X[b+1] Y[a] R + lam X[b] Y[a+1]
                    let t1 = mul_scalar_left(
                        b.matrix(),
                        &slice(&x, alpha + 1).mul(&slice(&y, beta)),
                    );
                    let t2 = mul_scalar_left(
                        b.matrix(),
                        &slice(&x, alpha).mul(&slice(&y, beta + 1)),
                    );
                    let t3 = slice(&x, alpha + 1)
                        .mul(&slice(&y, beta))
                        .scalar_mul(&lam);
                    let t4 = mul_scalar_right(
                        &slice(&x, beta).mul(&slice(&y, alpha + 1)),
                        b.matrix(),
                    );
                    let t5 = mul_scalar_right(
                        &slice(&x, beta + 1).mul(&slice(&y, alpha)),
                        b.matrix(),
                    );
                    let t6 = slice(&x, beta)
                        .mul(&slice(&y, alpha + 1))
                        .scalar_mul(&lam);
                    t1.sub(&t2).sub(&t3).sub(&t4).add(&t5).add(&t6)
                }
                YangianCase::Rational { h } => {
                    // R(X[a+1]Y[b] - X[a]Y[b+1]) - h X[a]Y[b]
                    //   - (X[b]Y[a+1] - X[b+1]Y[a]) R + h X[b]Y[a]
                    let t1 = mul_scalar_left(
                        b.matrix(),
                        &slice(&x, alpha + 1)
                            .mul(&slice(&y, beta))
                            .sub(&slice(&x, alpha).mul(&slice(&y, beta + 1))),
                    );
                    let t2 = slice(&x, alpha).mul(&slice(&y, beta)).scalar_mul(h);
                    let t3 = mul_scalar_right(
                        &slice(&x, beta)
                            .mul(&slice(&y, alpha + 1))
                            .sub(&slice(&x, beta + 1).mul(&slice(&y, alpha))),
                        b.matrix(),
                    );
                    let t4 = slice(&x, beta).mul(&slice(&y, alpha)).scalar_mul(h);
                    t1.sub(&t2).sub(&t3).add(&t4)
                }
            };
            for (r, c, p) in rel.entries() {
                if !p.is_zero() {
                    raw.push((p.clone(), format!("({alpha},{beta})[{r},{c}]")));
                }
            }
        }
    }

    // Eliminate monomials containing a slice-(T+1) generator: with bad
    // columns ordered first, echelon rows whose pivot is a good column are
    // supported on good columns only and span the truncation-closed subset.
    let first_bad: u16 = (t_max as u32 * n * n) as u16;
    let kept = eliminate_bad(&raw, first_bad);

    let alphabet = Alphabet::yangian(n, t_max);
    let relations = autoreduce(kept)
        .into_iter()
        .enumerate()
        .map(|(id, (poly, provenance))| Relation {
            id,
            poly,
            provenance,
        })
        .collect();
    RelationSet {
        alphabet,
        t_max,
        dim: n,
        case: case.clone(),
        relations,
    }
}

fn word_is_bad(w: &Word, first_bad: u16) -> bool {
    w.0.iter().any(|&g| g >= first_bad)
}

/// Row-echelon over the scalar field with bad monomial columns ordered
/// before good ones; returns the good-pivot rows.
fn eliminate_bad(raw: &[(NcPoly, String)], first_bad: u16) -> Vec<(NcPoly, String)> {
    // column order: bad words (deglex desc), then good words (deglex desc)
    let mut words: Vec<Word> = raw
        .iter()
        .flat_map(|(p, _)| p.terms().map(|(w, _)| w.clone()))
        .collect();
    words.sort();
    words.dedup();
    let mut bad: Vec<Word> = words
        .iter()
        .filter(|w| word_is_bad(w, first_bad))
        .cloned()
        .collect();
    let mut good: Vec<Word> = words
        .iter()
        .filter(|w| !word_is_bad(w, first_bad))
        .cloned()
        .collect();
    bad.sort_by(|a, b| b.cmp(a));
    good.sort_by(|a, b| b.cmp(a));
    let mut col_of = std::collections::HashMap::new();
    let split = bad.len() as u32;
    let mut cols: Vec<Word> = Vec::with_capacity(words.len());
    for w in bad.into_iter().chain(good) {
        col_of.insert(w.clone(), cols.len() as u32);
        cols.push(w);
    }

    let mut pivots: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    let mut echelon: Vec<(Vec<(u32, Scalar)>, String)> = Vec::new();
    for (p, origin) in raw {
        let mut row: Vec<(u32, Scalar)> = p
            .terms()
            .map(|(w, c)| (col_of[w], c.clone()))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        loop {
            let Some(&(lead, ref lv)) = row.first() else {
                break;
            };
            if let Some(&pi) = pivots.get(&lead) {
                let lv = lv.clone();
                row = sub_scaled(&row, &echelon[pi].0, &lv);
            } else {
                let inv = lv.inv();
                let norm: Vec<(u32, Scalar)> =
                    row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
                pivots.insert(lead, echelon.len());
                echelon.push((norm, origin.clone()));
                break;
            }
        }
    }

    echelon
        .into_iter()
        .filter(|(row, _)| row.first().map_or(false, |(c, _)| *c >= split))
        .map(|(row, origin)| {
            let mut p = NcPoly::zero();
            for (c, v) in row {
                p.add_term(cols[c as usize].clone(), &v);
            }
            (p, origin)
        })
        .collect()
}

fn sub_scaled(
    row: &[(u32, Scalar)],
    pivot: &[(u32, Scalar)],
    factor: &Scalar,
) -> Vec<(u32, Scalar)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some((c1, v1)), Some((c2, v2))) if c1 == c2 => {
                let v = v1.sub(&factor.mul(v2));
                if !v.is_zero() {
                    out.push((*c1, v));
                }
                i += 1;
                j += 1;
            }
            (Some((c1, v1)), Some((c2, _))) if c1 < c2 => {
                out.push((*c1, v1.clone()));
                i += 1;
            }
            (Some(_), Some((c2, v2))) => {
                out.push((*c2, factor.mul(v2).neg()));
                j += 1;
            }
            (Some((c1, v1)), None) => {
                out.push((*c1, v1.clone()));
                i += 1;
            }
            (None, Some((c2, v2))) => {
                out.push((*c2, factor.mul(v2).neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Inter-reduce: bring the set to distinct leading monomials and reduce
/// tails against the other relations' leading terms. Keeps every element an
/// exact combination of the input set.
fn autoreduce(mut rels: Vec<(NcPoly, String)>) -> Vec<(NcPoly, String)> {
    rels.retain(|(p, _)| !p.is_zero());
    // normalize monic, deduplicate by leading monomial via insertion order
    loop {
        rels.sort_by(|(a, _), (b, _)| {
            a.leading()
                .map(|(w, _)| w.clone())
                .cmp(&b.leading().map(|(w, _)| w.clone()))
        });
        let mut changed = false;
        let snapshot = rels.clone();
        for idx in 0..rels.len() {
            let (p, _) = &rels[idx];
            let Some((lw, lc)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) else {
                continue;
            };
            let monic = rels[idx].0.scalar_mul(&lc.inv());
            if monic != rels[idx].0 {
                rels[idx].0 = monic;
                changed = true;
            }
            // reduce this relation by any OTHER relation whose leading word
            // divides one of its words
            for (jdx, (other, _)) in snapshot.iter().enumerate() {
                if jdx == idx || other.is_zero() {
                    continue;
                }
                let Some((olw, _)) = other.leading() else {
                    continue;
                };
                if olw == &lw && jdx > idx {
                    continue; // keep the first of equal-leading pairs
                }
                let mut cur = rels[idx].0.clone();
                let mut reduced = false;
                loop {
                    let hit = cur
                        .terms()
                        .rev()
                        .find_map(|(w, c)| w.find(olw).map(|pos| (w.clone(), c.clone(), pos)));
                    let Some((w, c, pos)) = hit else { break };
                    // never reduce a relation by itself through its own lead
                    if jdx == idx {
                        break;
                    }
                    let (left, right) = w.split_around(pos, olw.len());
                    let olc = other.leading().unwrap().1.clone();
                    cur = cur.sub(&other.sandwich(&left, &right).scalar_mul(&c.div(&olc)));
                    reduced = true;
                    if cur.is_zero() {
                        break;
                    }
                }
                if reduced {
                    rels[idx].0 = cur;
                    changed = true;
                }
            }
        }
        rels.retain(|(p, _)| !p.is_zero());
        if !changed {
            break;
        }
    }
    // final monic normalization and dedup
    let mut out: Vec<(NcPoly, String)> = Vec::new();
    for (p, o) in rels {
        let lc = p.leading().unwrap().1.clone();
        let m = p.scalar_mul(&lc.inv());
        if !out.iter().any(|(q, _)| q == &m) {
            out.push((m, o));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{builtin_braiding, BuiltinName};
    use crate::freealg::GenId;

    fn flip2() -> Braiding {
        builtin_braiding(BuiltinName::Flip, 2, None).unwrap()
    }

    #[test]
    fn rational_flip_t1_gives_gl2_commutators() {
        let b = flip2();
        let rels = yangian_relations(&b, 1, &YangianCase::Rational { h: Scalar::one() });
        assert!(!rels.is_empty(), "kept set must be nonempty at T = 1");
        // every kept relation involves only slice-1 generators
        for r in &rels.relations {
            for (w, _) in r.poly.terms() {
                assert!(w.0.iter().all(|&g| g < 4), "generator out of alphabet");
            }
        }
        // oracle: substitute l_i^j[1] -> E_ij in the defining representation
        // of gl(2); every kept relation must vanish exactly.
        let rep = |g: GenId| {
            let (i, j) = ((g / 2) as u32, (g % 2) as u32);
            let mut e = crate::tensor::TensorOp::zero(1, 2);
            e.set(i, j, Scalar::one());
            e
        };
        for r in &rels.relations {
            let img = r.poly.substitute(&rep, 1, 2);
            assert!(
                img.is_zero(),
                "relation {} does not vanish in gl(2): {}",
                r.id,
                r.poly.render(&rels.alphabet)
            );
        }
    }

    #[test]
    fn gl2_commutator_lies_in_t1_set() {
        // [l_1^2, l_2^1] - l_1^1 + l_2^2 should be in the span (gl(2))
        let b = flip2();
        let rels = yangian_relations(&b, 1, &YangianCase::Rational { h: Scalar::one() });
        let g = |i: u32, j: u32| NcPoly::gen(Alphabet::yangian_gen(2, 1, i, j));
        let p = g(1, 2)
            .mul(&g(2, 1))
            .sub(&g(2, 1).mul(&g(1, 2)))
            .sub(&g(1, 1))
            .add(&g(2, 2));
        let verdict = crate::freealg::ideal_member(
            &p,
            &rels,
            2,
            &crate::freealg::QMode::Symbolic,
        )
        .unwrap();
        assert!(matches!(verdict, crate::freealg::Membership::Member(_)));
    }

    #[test]
    fn trig_relations_nonempty_and_truncation_closed() {
        let b = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
        for t in 1..=2usize {
            let rels = yangian_relations(&b, t, &YangianCase::Trig);
            assert!(!rels.is_empty());
            let cap = (t as u32 * 4) as u16;
            for r in &rels.relations {
                for (w, _) in r.poly.terms() {
                    assert!(w.0.iter().all(|&g| g < cap));
                }
            }
        }
    }

    #[test]
    fn shifted_relations_are_consequences() {
        // The defining system shifted to positions (2,3) on three auxiliary
        // factors: every truncation-closed coefficient must be a member of
        // the position-(1,2) ideal.
        let b = flip2();
        let t_max = 2usize;
        let case = YangianCase::Rational { h: Scalar::one() };
        let rels = yangian_relations(&b, t_max, &case);
        let l = SeriesMat::generating(2, t_max, t_max).ambient(3);
        let x: Vec<TensorOp<NcPoly>> = l.overline(&b, 2).slices.clone();
        let y: Vec<TensorOp<NcPoly>> = l.overline(&b, 3).slices.clone();
        let r2 = b.embedded(2, 3);
        let zero = TensorOp::zero(3, 2);
        let slice = |v: &[TensorOp<NcPoly>], idx: i64| -> TensorOp<NcPoly> {
            if idx < 0 || idx as usize >= v.len() {
                zero.clone()
            } else {
                v[idx as usize].clone()
            }
        };
        let mut checked = 0usize;
        for alpha in -1..(t_max as i64) {
            for beta in -1..(t_max as i64) {
                let t1 = mul_scalar_left(
                    &r2,
                    &slice(&x, alpha + 1)
                        .mul(&slice(&y, beta))
                        .sub(&slice(&x, alpha).mul(&slice(&y, beta + 1))),
                );
                let t2 = slice(&x, alpha).mul(&slice(&y, beta));
                let t3 = mul_scalar_right(
                    &slice(&x, beta)
                        .mul(&slice(&y, alpha + 1))
                        .sub(&slice(&x, beta + 1).mul(&slice(&y, alpha))),
                    &r2,
                );
                let t4 = slice(&x, beta).mul(&slice(&y, alpha));
                let rel = t1.sub(&t2).sub(&t3).add(&t4);
                for (_, _, poly) in rel.entries() {
                    if poly.is_zero() || checked >= 40 {
                        continue;
                    }
                    checked += 1;
                    let verdict = crate::freealg::ideal_member(
                        poly,
                        &rels,
                        poly.degree().max(2),
                        &crate::freealg::QMode::Symbolic,
                    )
                    .unwrap();
                    assert!(
                        matches!(verdict, crate::freealg::Membership::Member(_)),
                        "shifted coefficient at ({alpha},{beta}) not a consequence"
                    );
                }
            }
        }
        assert!(checked > 0, "no nonzero shifted coefficients checked");
    }

    #[test]
    fn relations_grow_with_truncation() {
        // rels(T) lies in the span of rels(T+1) after alphabet inclusion
        let b = flip2();
        let case = YangianCase::Rational { h: Scalar::one() };
        let r1 = yangian_relations(&b, 1, &case);
        let r2 = yangian_relations(&b, 2, &case);
        for r in &r1.relations {
            let verdict =
                crate::freealg::ideal_member(&r.poly, &r2, 2, &crate::freealg::QMode::Symbolic)
                    .unwrap();
            assert!(
                matches!(verdict, crate::freealg::Membership::Member(_)),
                "T=1 relation {} not in the T=2 span",
                r.id
            );
        }
    }
}
