//! Noncommutative polynomials over the Yangian generators.
//!
//! Words are sequences of generator ids; the generator order is (a, i, j)
//! lexicographic for the alphabet l_i^j[a], and the monomial order is
//! degree-lexicographic. Coefficients are exact [`Scalar`]s. A polynomial is
//! a map from words to nonzero coefficients.

mod member;
mod relations;
mod series;

pub use member::{ideal_member, CertCoeffs, Certificate, Membership, MemberError, QMode};
pub use relations::{yangian_relations, Relation, RelationSet, YangianCase};
pub use series::{binom_scalar, SeriesMat};

use crate::scalar::Scalar;
use crate::tensor::{Coeff, TensorOp};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Generator id into an [`Alphabet`].
pub type GenId = u16;

/// A word in the free monoid on the generators.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Leftmost occurrence of `pattern` as a contiguous subword.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&s| self.0[s..s + pattern.len()] == pattern.0[..])
    }

    pub fn split_around(&self, at: usize, mid_len: usize) -> (Word, Word) {
        (
            Word(self.0[..at].to_vec()),
            Word(self.0[at + mid_len..].to_vec()),
        )
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Degree-lexicographic: shorter words first, ties by generator ids.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Named generators with a fixed (a, i, j)-lexicographic total order.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    labels: Vec<String>,
}

impl Alphabet {
    /// Generators l_i^j[a], 1 <= i, j <= n, 1 <= a <= t_max.
    pub fn yangian(n: u32, t_max: usize) -> Alphabet {
        let mut labels = Vec::with_capacity(n as usize * n as usize * t_max);
        for a in 1..=t_max {
            for i in 1..=n {
                for j in 1..=n {
                    labels.push(format!("l_{i}^{j}[{a}]"));
                }
            }
        }
        Alphabet { labels }
    }

    /// Id of l_i^j[a] (1-based a, i, j) in the [`Alphabet::yangian`] order.
    pub fn yangian_gen(n: u32, a: usize, i: u32, j: u32) -> GenId {
        (((a as u32 - 1) * n + (i - 1)) * n + (j - 1)) as GenId
    }

    /// Site generators m(k)_i^j for Gaudin systems, ordered by (k, i, j).
    pub fn sites(m: u32, k_sites: usize) -> Alphabet {
        let mut labels = Vec::new();
        for k in 1..=k_sites {
            for i in 1..=m {
                for j in 1..=m {
                    labels.push(format!("m({k})_{i}^{j}"));
                }
            }
        }
        Alphabet { labels }
    }

    pub fn site_gen(m: u32, k: usize, i: u32, j: u32) -> GenId {
        (((k as u32 - 1) * m + (i - 1)) * m + (j - 1)) as GenId
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, g: GenId) -> &str {
        &self.labels[g as usize]
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, g) in w.0.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(self.label(*g));
        }
        s
    }
}

/// A noncommutative polynomial with Scalar coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NcPoly::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        let mut p = NcPoly::zero();
        if !s.is_zero() {
            p.terms.insert(Word::empty(), s);
        }
        p
    }

    pub fn gen(g: GenId) -> Self {
        let mut p = NcPoly::zero();
        p.terms.insert(Word::single(g), Scalar::one());
        p
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NcPoly::zero();
        if !c.is_zero() {
            p.terms.insert(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree (length of the largest word); zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, |w| w.len())
    }

    /// Leading term in the deglex order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = e.add(c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &c1.mul(c2));
            }
        }
        out
    }

    pub fn scalar_mul(&self, s: &Scalar) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// w_l * self * w_r.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Map every coefficient (dropping zeros).
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(w.clone(), v);
            }
        }
        out
    }

    /// Substitute a concrete operator for every generator (empty word goes to
    /// the identity); the oracle hook for representation checks.
    pub fn substitute(
        &self,
        rep: &impl Fn(GenId) -> TensorOp<Scalar>,
        n: u8,
        base: u32,
    ) -> TensorOp<Scalar> {
        let mut acc = TensorOp::zero(n, base);
        for (w, c) in &self.terms {
            let mut t = TensorOp::identity_with(n, base, Scalar::one());
            for g in &w.0 {
                t = t.mul(&rep(*g));
            }
            acc = acc.add(&t.scalar_mul(c));
        }
        acc
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({c})");
            if !w.is_empty() {
                let _ = write!(s, "*{}", alphabet.render_word(w));
            }
        }
        s
    }
}

impl Coeff for NcPoly {
    fn zero() -> Self {
        NcPoly::zero()
    }
    fn is_zero(&self) -> bool {
        NcPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        NcPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        NcPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        NcPoly::mul(self, other)
    }
    fn scalar_mul(&self, s: &Scalar) -> Self {
        NcPoly::scalar_mul(self, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rand_poly(seed: u64, gens: u16, max_terms: usize) -> NcPoly {
        let mut s = seed ^ 0x2545f4914f6cdd1d;
        let mut p = NcPoly::zero();
        for _ in 0..max_terms {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            let len = (s >> 7) % 3;
            let mut w = Vec::new();
            for k in 0..len {
                w.push((((s >> (11 + 3 * k)) as u16) % gens) as GenId);
            }
            let c = ((s >> 33) % 7) as i64 - 3;
            p.add_term(Word(w), &Scalar::from_int(c));
        }
        p
    }

    #[test]
    fn deglex_order() {
        let a = Word(vec![3]);
        let b = Word(vec![0, 0]);
        assert!(a < b); // degree dominates
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn mul_assoc_distrib_randomized() {
        for seed in 0..12u64 {
            let a = rand_poly(seed, 4, 4);
            let b = rand_poly(seed + 100, 4, 4);
            let c = rand_poly(seed + 200, 4, 4);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }

    #[test]
    fn degree_additive_for_nonzero_products() {
        for seed in 0..12u64 {
            let a = rand_poly(seed, 4, 3);
            let b = rand_poly(seed + 50, 4, 3);
            let p = a.mul(&b);
            if !a.is_zero() && !b.is_zero() {
                // free algebra over a domain: leading words cannot cancel
                assert_eq!(p.degree(), a.degree() + b.degree());
            }
        }
    }

    #[test]
    fn alphabet_indexing() {
        let n = 2u32;
        let alph = Alphabet::yangian(n, 3);
        assert_eq!(alph.len(), 12);
        assert_eq!(alph.label(Alphabet::yangian_gen(n, 1, 1, 1)), "l_1^1[1]");
        assert_eq!(alph.label(Alphabet::yangian_gen(n, 2, 2, 1)), "l_2^1[2]");
        assert_eq!(alph.label(Alphabet::yangian_gen(n, 3, 1, 2)), "l_1^2[3]");
    }

    #[test]
    fn subword_search() {
        let w = Word(vec![1, 2, 3, 2, 3]);
        assert_eq!(w.find(&Word(vec![2, 3])), Some(1));
        assert_eq!(w.find(&Word(vec![3, 3])), None);
        let (l, r) = w.split_around(1, 2);
        assert_eq!(l, Word(vec![1]));
        assert_eq!(r, Word(vec![2, 3]));
    }
}
