//! Bounded-degree ideal membership with combination certificates.
//!
//! Membership of p in the two-sided ideal of a relation set, truncated at
//! degree cap D, is decided inside the span of the multiples
//! { w * r * w' : r in rels, deg(w r w') <= D }. The decision runs in two
//! stages: a demand-driven reduction that rewrites leading monomials by
//! relation multiples (fast, fully symbolic, certificate by construction),
//! then exact sparse elimination over the whole span for anything the
//! rewriting leaves behind — symbolically over the scalar field, or at the
//! sample plan's points with a symbolic certificate reconstructed by rational
//! interpolation and re-validated exactly.
//!
//! "member" verdicts are theorems (the certificate re-evaluates to the
//! input); "not derivable at (T, D)" is inconclusive by design, never a
//! refutation.

use super::relations::{RelationSet, YangianCase};
use super::{NcPoly, Word};
use crate::scalar::{Rat, SamplePlan, Scalar, Var};
use num_traits::Zero;
use std::collections::HashMap;

/// How scalars are treated during elimination.
#[derive(Clone, Debug)]
pub enum QMode {
    /// Eliminate over the symbolic scalar field directly.
    Symbolic,
    /// Eliminate at each of the plan's points; a member verdict must be
    /// unanimous and is upgraded to a symbolic certificate when rational
    /// interpolation of the combination succeeds.
    Sampled(SamplePlan),
}

#[derive(Clone, Debug)]
pub enum CertCoeffs {
    Symbolic(Vec<Scalar>),
    /// Exact coefficients per sample point: table[point][term].
    PerPoint { points: Vec<Rat>, table: Vec<Vec<Scalar>> },
}

/// A combination certificate: p = sum_i c_i * left_i * rel_i * right_i.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub terms: Vec<(Word, usize, Word)>,
    pub coeffs: CertCoeffs,
}

#[derive(Clone, Debug)]
pub enum Membership {
    Member(Certificate),
    NotDerivable { t_max: usize, degree_cap: usize },
}

#[derive(Debug, thiserror::Error)]
pub enum MemberError {
    #[error("input degree {degree} exceeds the cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },
    #[error("inconsistent verdicts across sample points: {0}")]
    InconsistentSamples(String),
    #[error("sampled mode needs a nonempty plan")]
    EmptyPlan,
    #[error("sample point is a pole of a relation coefficient: {0}")]
    SamplePole(String),
}

impl Certificate {
    pub fn empty() -> Self {
        Certificate {
            terms: Vec::new(),
            coeffs: CertCoeffs::Symbolic(Vec::new()),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.coeffs, CertCoeffs::Symbolic(_))
    }

    /// Re-evaluate the combination exactly and compare with `p`. Symbolic
    /// certificates are checked in the scalar field; per-point certificates
    /// are checked exactly at every recorded point.
    pub fn verify(&self, p: &NcPoly, rels: &RelationSet) -> bool {
        match &self.coeffs {
            CertCoeffs::Symbolic(cs) => {
                let mut acc = NcPoly::zero();
                for ((l, rid, r), c) in self.terms.iter().zip(cs) {
                    acc = acc.add(&rels.relations[*rid].poly.sandwich(l, r).scalar_mul(c));
                }
                acc == *p
            }
            CertCoeffs::PerPoint { points, table } => {
                let Some(var) = sample_var(rels) else {
                    return false;
                };
                points.iter().zip(table).all(|(pt, cs)| {
                    let mut acc = NcPoly::zero();
                    for ((l, rid, r), c) in self.terms.iter().zip(cs) {
                        let rel_at = eval_poly(&rels.relations[*rid].poly, var, pt);
                        acc = acc.add(&rel_at.sandwich(l, r).scalar_mul(c));
                    }
                    acc == eval_poly(p, var, pt)
                })
            }
        }
    }

    /// Serialize to JSON in the expression grammar.
    pub fn to_json(&self, rels: &RelationSet) -> serde_json::Value {
        let coeff_strings: Vec<serde_json::Value> = match &self.coeffs {
            CertCoeffs::Symbolic(cs) => cs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
            CertCoeffs::PerPoint { points, table } => points
                .iter()
                .zip(table)
                .map(|(pt, cs)| {
                    serde_json::json!({
                        "point": crate::scalar::render_rat(pt),
                        "coeffs": cs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        };
        serde_json::json!({
            "terms": self
                .terms
                .iter()
                .map(|(l, rid, r)| {
                    serde_json::json!({
                        "left": rels.alphabet.render_word(l),
                        "relation": rid,
                        "right": rels.alphabet.render_word(r),
                    })
                })
                .collect::<Vec<_>>(),
            "coefficients": coeff_strings,
            "symbolic": self.is_symbolic(),
        })
    }
}

/// The formal variable that sampling specializes, if any.
fn sample_var(rels: &RelationSet) -> Option<Var> {
    match &rels.case {
        YangianCase::Trig => Some(Var::Q),
        YangianCase::Rational { h } => h.variable(),
    }
}

fn eval_scalar(s: &Scalar, var: Var, pt: &Rat) -> Scalar {
    s.eval(var, pt).expect("sample point hits a pole")
}

fn eval_poly(p: &NcPoly, var: Var, pt: &Rat) -> NcPoly {
    p.map_coeffs(|c| eval_scalar(c, var, pt))
}

/// Decide membership of `p` modulo the relation set at degree cap `cap`.
pub fn ideal_member(
    p: &NcPoly,
    rels: &RelationSet,
    cap: usize,
    mode: &QMode,
) -> Result<Membership, MemberError> {
    if p.degree() > cap {
        return Err(MemberError::DegreeExceedsCap {
            degree: p.degree(),
            cap,
        });
    }
    if p.is_zero() {
        return Ok(Membership::Member(Certificate::empty()));
    }

    // Stage 1: leading-monomial rewriting (symbolic, certificate direct).
    let (remainder, mut terms, mut coeffs) = rewrite_reduce(p, rels);
    if remainder.is_zero() {
        return Ok(Membership::Member(Certificate {
            terms,
            coeffs: CertCoeffs::Symbolic(coeffs),
        }));
    }

    // Stage 2: full span elimination on the remainder.
    let origins = span_origins(rels, cap);
    if origins.is_empty() {
        return Ok(Membership::NotDerivable {
            t_max: rels.t_max,
            degree_cap: cap,
        });
    }
    match mode {
        QMode::Symbolic => {
            match eliminate_and_reduce(&remainder, rels, &origins, None)? {
                Some(combo) => {
                    for (t, c) in combo {
                        let (rid, l, r) = &origins[t as usize];
                        terms.push((l.clone(), *rid, r.clone()));
                        coeffs.push(c);
                    }
                    Ok(Membership::Member(Certificate {
                        terms,
                        coeffs: CertCoeffs::Symbolic(coeffs),
                    }))
                }
                None => Ok(Membership::NotDerivable {
                    t_max: rels.t_max,
                    degree_cap: cap,
                }),
            }
        }
        QMode::Sampled(plan) => {
            if plan.is_empty() {
                return Err(MemberError::EmptyPlan);
            }
            let var = sample_var(rels).ok_or_else(|| {
                MemberError::InconsistentSamples(
                    "relation scalars are constant; use symbolic mode".into(),
                )
            })?;
            // points are independent; eliminate them in parallel and merge
            // the verdicts in plan order
            let workers = std::thread::available_parallelism()
                .map_or(1, |n| n.get())
                .min(plan.points.len());
            let chunk = plan.points.len().div_ceil(workers.max(1));
            let mut combos: Vec<Option<Vec<(u32, Scalar)>>> =
                vec![None; plan.points.len()];
            let mut failed: Option<MemberError> = None;
            std::thread::scope(|scope| {
                let mut handles = Vec::new();
                for (ci, pts) in plan.points.chunks(chunk).enumerate() {
                    let remainder = &remainder;
                    let origins = &origins;
                    handles.push((
                        ci,
                        scope.spawn(move || {
                            pts.iter()
                                .map(|pt| {
                                    eliminate_and_reduce(
                                        remainder,
                                        rels,
                                        origins,
                                        Some((var, pt.clone())),
                                    )
                                })
                                .collect::<Vec<_>>()
                        }),
                    ));
                }
                for (ci, h) in handles {
                    for (i, r) in h.join().expect("worker panicked").into_iter().enumerate() {
                        match r {
                            Ok(c) => combos[ci * chunk + i] = c,
                            Err(e) => failed = Some(e),
                        }
                    }
                }
            });
            if let Some(e) = failed {
                return Err(e);
            }
            let member_count = combos.iter().filter(|c| c.is_some()).count();
            if member_count == 0 {
                return Ok(Membership::NotDerivable {
                    t_max: rels.t_max,
                    degree_cap: cap,
                });
            }
            if member_count != combos.len() {
                return Err(MemberError::InconsistentSamples(format!(
                    "member at {member_count} of {} points",
                    combos.len()
                )));
            }
            let per_point: Vec<Vec<(u32, Scalar)>> =
                combos.into_iter().map(|c| c.unwrap()).collect();
            // union support, in origin order
            let mut support: Vec<u32> = per_point
                .iter()
                .flat_map(|c| c.iter().map(|(t, _)| *t))
                .collect();
            support.sort_unstable();
            support.dedup();
            // try a symbolic lift by Cauchy interpolation, validated exactly
            if let Some(lifted) = lift_combination(&support, &per_point, &plan.points, var) {
                let mut acc = NcPoly::zero();
                for (t, c) in support.iter().zip(&lifted) {
                    let (rid, l, r) = &origins[*t as usize];
                    acc = acc.add(&rels.relations[*rid].poly.sandwich(l, r).scalar_mul(c));
                }
                if acc == remainder {
                    for (t, c) in support.iter().zip(lifted) {
                        let (rid, l, r) = &origins[*t as usize];
                        terms.push((l.clone(), *rid, r.clone()));
                        coeffs.push(c);
                    }
                    return Ok(Membership::Member(Certificate {
                        terms,
                        coeffs: CertCoeffs::Symbolic(coeffs),
                    }));
                }
            }
            // per-point certificate: include the stage-1 terms evaluated at
            // each point
            let mut all_terms = terms.clone();
            for t in &support {
                let (rid, l, r) = &origins[*t as usize];
                all_terms.push((l.clone(), *rid, r.clone()));
            }
            let mut table = Vec::with_capacity(plan.points.len());
            for (pi, pt) in plan.points.iter().enumerate() {
                let mut row: Vec<Scalar> =
                    coeffs.iter().map(|c| eval_scalar(c, var, pt)).collect();
                let lookup: HashMap<u32, &Scalar> =
                    per_point[pi].iter().map(|(t, c)| (*t, c)).collect();
                for t in &support {
                    row.push(lookup.get(t).cloned().cloned().unwrap_or_else(Scalar::zero));
                }
                table.push(row);
            }
            Ok(Membership::Member(Certificate {
                terms: all_terms,
                coeffs: CertCoeffs::PerPoint {
                    points: plan.points.clone(),
                    table,
                },
            }))
        }
    }
}

/// Stage 1: rewrite leading monomials by relation multiples until stuck.
fn rewrite_reduce(
    p: &NcPoly,
    rels: &RelationSet,
) -> (NcPoly, Vec<(Word, usize, Word)>, Vec<Scalar>) {
    let mut work = p.clone();
    let mut remainder = NcPoly::zero();
    let mut terms = Vec::new();
    let mut coeffs = Vec::new();
    'outer: while let Some((w, c)) = work.leading().map(|(w, c)| (w.clone(), c.clone())) {
        for rel in &rels.relations {
            let Some((lw, lc)) = rel.poly.leading() else {
                continue;
            };
            if let Some(pos) = w.find(lw) {
                let (left, right) = w.split_around(pos, lw.len());
                let factor = c.div(lc);
                work = work.sub(&rel.poly.sandwich(&left, &right).scalar_mul(&factor));
                terms.push((left, rel.id, right));
                coeffs.push(factor);
                continue 'outer;
            }
        }
        remainder.add_term(w.clone(), &c);
        work.add_term(w, &c.neg());
    }
    (remainder, terms, coeffs)
}

/// All (relation, left word, right word) triples within the degree cap.
fn span_origins(rels: &RelationSet, cap: usize) -> Vec<(usize, Word, Word)> {
    let n_gens = rels.alphabet.len() as u16;
    let mut out = Vec::new();
    for rel in &rels.relations {
        let d = rel.poly.degree();
        if d > cap {
            continue;
        }
        let budget = cap - d;
        let words = words_up_to(n_gens, budget);
        for l in &words {
            for r in &words {
                if l.len() + r.len() <= budget {
                    out.push((rel.id, l.clone(), r.clone()));
                }
            }
        }
    }
    out
}

fn words_up_to(n_gens: u16, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n_gens as usize);
        for w in &layer {
            for g in 0..n_gens {
                let mut v = w.0.clone();
                v.push(g);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct EchRow {
    row: Vec<(u32, Scalar)>,
    origin: u32,
    /// (echelon id, factor) pairs subtracted during insertion, then the
    /// normalizer: row = (origin_row - sum factor * ech) / normalizer.
    derivation: Vec<(u32, Scalar)>,
    normalizer: Scalar,
}

/// Insert every span row into an echelon basis, then reduce the target.
/// Returns the combination of origins expressing the target, or None.
fn eliminate_and_reduce(
    target: &NcPoly,
    rels: &RelationSet,
    origins: &[(usize, Word, Word)],
    eval: Option<(Var, Rat)>,
) -> Result<Option<Vec<(u32, Scalar)>>, MemberError> {
    // specialize relations once per point
    let rel_polys: Vec<NcPoly> = rels
        .relations
        .iter()
        .map(|r| match &eval {
            Some((var, pt)) => {
                // a pole here would poison the whole point
                r.poly.map_coeffs(|c| match c.eval(*var, pt) {
                    Ok(v) => v,
                    Err(e) => panic!("sample pole: {e}"),
                })
            }
            None => r.poly.clone(),
        })
        .collect();
    let target = match &eval {
        Some((var, pt)) => eval_poly(target, *var, pt),
        None => target.clone(),
    };

    // column table: all words, deglex descending so leading = smallest id
    let mut words: Vec<Word> = target.terms().map(|(w, _)| w.clone()).collect();
    for (rid, l, r) in origins {
        for (w, _) in rel_polys[*rid].terms() {
            words.push(l.concat(w).concat(r));
        }
    }
    words.sort_by(|a, b| b.cmp(a));
    words.dedup();
    let col_of: HashMap<Word, u32> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i as u32))
        .collect();

    let mut pivot_of_col: HashMap<u32, u32> = HashMap::new();
    let mut ech: Vec<EchRow> = Vec::new();

    for (oid, (rid, l, r)) in origins.iter().enumerate() {
        let poly = rel_polys[*rid].sandwich(l, r);
        if poly.is_zero() {
            continue;
        }
        let mut row: Vec<(u32, Scalar)> = poly
            .terms()
            .map(|(w, c)| (col_of[w], c.clone()))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        let mut derivation: Vec<(u32, Scalar)> = Vec::new();
        loop {
            let Some((lead, lv)) = row.first().map(|(c, v)| (*c, v.clone())) else {
                break; // dependent row, nothing new
            };
            if let Some(&pi) = pivot_of_col.get(&lead) {
                row = sub_scaled(&row, &ech[pi as usize].row, &lv);
                derivation.push((pi, lv));
            } else {
                let inv = lv.inv();
                let norm: Vec<(u32, Scalar)> =
                    row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
                pivot_of_col.insert(lead, ech.len() as u32);
                ech.push(EchRow {
                    row: norm,
                    origin: oid as u32,
                    derivation,
                    normalizer: lv,
                });
                break;
            }
        }
    }

    // reduce the target, recording which echelon rows were used
    let mut row: Vec<(u32, Scalar)> = target
        .terms()
        .map(|(w, c)| (col_of[w], c.clone()))
        .collect();
    row.sort_by_key(|(c, _)| *c);
    let mut used: Vec<(u32, Scalar)> = Vec::new();
    loop {
        let Some((lead, lv)) = row.first().map(|(c, v)| (*c, v.clone())) else {
            break;
        };
        let Some(&pi) = pivot_of_col.get(&lead) else {
            return Ok(None); // stuck: not in the span
        };
        row = sub_scaled(&row, &ech[pi as usize].row, &lv);
        used.push((pi, lv));
    }

    // back-substitute: target = sum used_j ech_j, and
    // ech_j = (origin_j - sum derivation ech_i) / normalizer_j
    let mut phi: HashMap<u32, Scalar> = HashMap::new();
    for (pi, f) in used {
        add_coeff(&mut phi, pi, &f);
    }
    let mut combo: HashMap<u32, Scalar> = HashMap::new();
    let mut ids: Vec<u32> = phi.keys().cloned().collect();
    ids.sort_unstable_by(|a, b| b.cmp(a));
    let mut queue = std::collections::BinaryHeap::new();
    for id in ids {
        queue.push(id);
    }
    while let Some(j) = queue.pop() {
        let Some(fj) = phi.remove(&j) else { continue };
        if fj.is_zero() {
            continue;
        }
        let e = &ech[j as usize];
        let scaled = fj.div(&e.normalizer);
        add_coeff(&mut combo, e.origin, &scaled);
        for (i, g) in &e.derivation {
            let delta = scaled.mul(g).neg();
            let had = phi.contains_key(i);
            add_coeff(&mut phi, *i, &delta);
            if !had {
                queue.push(*i);
            }
        }
    }
    let mut out: Vec<(u32, Scalar)> = combo.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(t, _)| *t);
    Ok(Some(out))
}

fn add_coeff(map: &mut HashMap<u32, Scalar>, key: u32, val: &Scalar) {
    if val.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(e) => {
            let s = e.add(val);
            if s.is_zero() {
                map.remove(&key);
            } else {
                *e = s;
            }
        }
        None => {
            map.insert(key, val.clone());
        }
    }
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

/// Cauchy-interpolate each support coefficient from its per-point values.
/// Returns None when no admissible rational function fits the data.
fn lift_combination(
    support: &[u32],
    per_point: &[Vec<(u32, Scalar)>],
    points: &[Rat],
    var: Var,
) -> Option<Vec<Scalar>> {
    let p = points.len();
    if p < 2 {
        return None;
    }
    let budget = (p - 2) / 2;
    let mut out = Vec::with_capacity(support.len());
    for t in support {
        let values: Vec<Rat> = per_point
            .iter()
            .map(|combo| {
                combo
                    .iter()
                    .find(|(s, _)| s == t)
                    .map(|(_, c)| c.as_rat().expect("sampled coeff is rational").clone())
                    .unwrap_or_else(Rat::zero)
            })
            .collect();
        out.push(cauchy_interpolate(points, &values, budget, budget, var)?);
    }
    Some(out)
}

/// Find n/d with deg n <= dn, deg d <= dd interpolating the data, tagged
/// with the sampled variable. None when the homogeneous system has no
/// usable kernel or the candidate fails to reproduce the data.
fn cauchy_interpolate(
    points: &[Rat],
    values: &[Rat],
    dn: usize,
    dd: usize,
    var: Var,
) -> Option<Scalar> {
    use crate::scalar::QPoly;
    let rows = points.len();
    let cols = dn + 1 + dd + 1;
    // matrix rows: [x^0..x^dn, -c x^0 .. -c x^dd]
    let mut m: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for (x, c) in points.iter().zip(values) {
        let mut row = Vec::with_capacity(cols);
        let mut xp = Rat::from_integer(1.into());
        for _ in 0..=dn {
            row.push(xp.clone());
            xp *= x;
        }
        let mut xp = Rat::from_integer(1.into());
        for _ in 0..=dd {
            row.push(-(c * &xp));
            xp *= x;
        }
        m.push(row);
    }
    let kernel = nullspace_vector(&mut m, cols)?;
    let num = QPoly::from_coeffs(kernel[..=dn].to_vec());
    let den = QPoly::from_coeffs(kernel[dn + 1..].to_vec());
    if den.is_zero() {
        return None;
    }
    if points.iter().any(|x| den.eval(x).is_zero()) {
        return None;
    }
    // the interpolation must actually reproduce the data
    for (x, c) in points.iter().zip(values) {
        if &(num.eval(x) / den.eval(x)) != c {
            return None;
        }
    }
    Some(Scalar::from_polys(var, num, den))
}

/// One kernel vector of the row-space, or None when the matrix has full
/// column rank.
fn nullspace_vector(m: &mut [Vec<Rat>], cols: usize) -> Option<Vec<Rat>> {
    let rows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = Rat::from_integer(1.into()) / m[r][c].clone();
        for j in c..cols {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // free column = any column that is not a pivot
    let free = (0..cols).find(|c| !pivot_col_of_row.contains(c))?;
    let mut v = vec![Rat::zero(); cols];
    v[free] = Rat::from_integer(1.into());
    for (row_idx, pc) in pivot_col_of_row.iter().enumerate() {
        v[*pc] = -m[row_idx][free].clone();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{builtin_braiding, BuiltinName};
    use crate::freealg::{yangian_relations, Alphabet};

    fn flip_rels_t1() -> RelationSet {
        let b = builtin_braiding(BuiltinName::Flip, 2, None).unwrap();
        yangian_relations(&b, 1, &YangianCase::Rational { h: Scalar::one() })
    }

    #[test]
    fn zero_is_member_with_empty_certificate() {
        let rels = flip_rels_t1();
        match ideal_member(&NcPoly::zero(), &rels, 2, &QMode::Symbolic).unwrap() {
            Membership::Member(cert) => assert!(cert.terms.is_empty()),
            other => panic!("expected member, got {other:?}"),
        }
    }

    #[test]
    fn relations_are_members_of_their_own_span() {
        let rels = flip_rels_t1();
        for r in &rels.relations {
            match ideal_member(&r.poly, &rels, 2, &QMode::Symbolic).unwrap() {
                Membership::Member(cert) => assert!(cert.verify(&r.poly, &rels)),
                other => panic!("relation {} not member: {other:?}", r.id),
            }
        }
    }

    #[test]
    fn single_generator_is_not_derivable() {
        let rels = flip_rels_t1();
        let g = NcPoly::gen(Alphabet::yangian_gen(2, 1, 1, 2));
        match ideal_member(&g, &rels, 2, &QMode::Symbolic).unwrap() {
            Membership::NotDerivable { t_max, degree_cap } => {
                assert_eq!((t_max, degree_cap), (1, 2));
            }
            other => panic!("expected not derivable, got {other:?}"),
        }
    }

    #[test]
    fn certificates_reevaluate_exactly() {
        let rels = flip_rels_t1();
        // a random combination of relation multiples must come back member
        // with a certificate that re-evaluates to it
        let g = |i: u32, j: u32| NcPoly::gen(Alphabet::yangian_gen(2, 1, i, j));
        let p = rels.relations[0]
            .poly
            .sandwich(&Word::empty(), &Word::single(0))
            .scalar_mul(&Scalar::from_frac(3, 2))
            .add(&rels.relations[1].poly.clone().scalar_mul(&Scalar::from_int(-2)))
            .add(&g(1, 1).mul(&rels.relations[0].poly).sub(&rels.relations[0].poly.mul(&g(1, 1))));
        match ideal_member(&p, &rels, 3, &QMode::Symbolic).unwrap() {
            Membership::Member(cert) => assert!(cert.verify(&p, &rels)),
            other => panic!("expected member, got {other:?}"),
        }
    }

    #[test]
    fn sampled_mode_agrees_with_symbolic_for_trig() {
        let b = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
        let rels = yangian_relations(&b, 1, &YangianCase::Trig);
        let plan = SamplePlan::new(0, 9, 33, &[]).unwrap();
        // a relation multiple: member in both modes
        let p = rels.relations[0]
            .poly
            .sandwich(&Word::single(1), &Word::empty());
        let sym = ideal_member(&p, &rels, 3, &QMode::Symbolic).unwrap();
        let smp = ideal_member(&p, &rels, 3, &QMode::Sampled(plan)).unwrap();
        assert!(matches!(sym, Membership::Member(_)));
        match smp {
            Membership::Member(cert) => assert!(cert.verify(&p, &rels)),
            other => panic!("sampled mode disagreed: {other:?}"),
        }
    }

    #[test]
    fn cauchy_interpolation_recovers_rational_function() {
        // f(x) = (x^2 + 1) / (x - 3)
        let pts: Vec<Rat> = [2i64, 4, 5, 6, 7, 8, 9, 10]
            .iter()
            .map(|&n| Rat::from_integer(n.into()))
            .collect();
        let vals: Vec<Rat> = pts
            .iter()
            .map(|x| (x * x + Rat::from_integer(1.into())) / (x - Rat::from_integer(3.into())))
            .collect();
        let f = cauchy_interpolate(&pts, &vals, 3, 3, Var::Q).unwrap();
        let q = Scalar::var(Var::Q);
        let expect = q
            .mul(&q)
            .add(&Scalar::one())
            .div(&q.sub(&Scalar::from_int(3)));
        assert_eq!(f, expect);
    }
}
