//! Sparse exact operators on tensor powers V^{\otimes n}.
//!
//! Index convention (fixed, used bit-exactly by the file format): the basis
//! vector e_{i_1} (x) ... (x) e_{i_n} corresponds to the integer
//! sum_k i_k N^{n-k} with 0-based digits — mixed radix, leftmost tensor
//! factor most significant. Consequently a trailing block of factors is the
//! least significant digit block, which is what the suffix partial traces
//! rely on.
//!
//! Entries live in any [`Coeff`] ring: scalars, noncommutative polynomials,
//! or (for the Gaudin systems) again sparse operators on a physical space.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Coefficient ring for tensor operators. `zero()` is shapeless: for matrix
/// coefficient rings the empty operator acts as the zero of every shape.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scalar_mul(&self, s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn scalar_mul(&self, s: &Scalar) -> Self {
        Scalar::mul(self, s)
    }
}

/// A sparse operator on V^{\otimes n}, dim V = base.
#[derive(Clone, Debug)]
pub struct TensorOp<C: Coeff> {
    /// Number of tensor factors.
    pub n: u8,
    /// Dimension of a single factor V.
    pub base: u32,
    /// row -> sorted sparse columns; zero entries never stored.
    rows: BTreeMap<u32, Vec<(u32, C)>>,
}

impl<C: Coeff> PartialEq for TensorOp<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.rows.is_empty() && other.rows.is_empty() {
            return true;
        }
        self.n == other.n && self.base == other.base && self.rows == other.rows
    }
}

impl<C: Coeff> TensorOp<C> {
    pub fn zero(n: u8, base: u32) -> Self {
        TensorOp {
            n,
            base,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> u32 {
        (self.base as u64).pow(self.n as u32) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn identity_with(n: u8, base: u32, one: C) -> Self {
        let mut op = TensorOp::zero(n, base);
        let dim = op.dim();
        for i in 0..dim {
            op.rows.insert(i, vec![(i, one.clone())]);
        }
        op
    }

    pub fn set(&mut self, row: u32, col: u32, value: C) {
        if value.is_zero() {
            if let Some(r) = self.rows.get_mut(&row) {
                r.retain(|(c, _)| *c != col);
                if r.is_empty() {
                    self.rows.remove(&row);
                }
            }
            return;
        }
        let r = self.rows.entry(row).or_default();
        match r.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => r[i].1 = value,
            Err(i) => r.insert(i, (col, value)),
        }
    }

    pub fn get(&self, row: u32, col: u32) -> C {
        self.rows
            .get(&row)
            .and_then(|r| {
                r.binary_search_by_key(&col, |(c, _)| *c)
                    .ok()
                    .map(|i| r[i].1.clone())
            })
            .unwrap_or_else(C::zero)
    }

    pub fn add_to(&mut self, row: u32, col: u32, value: &C) {
        if value.is_zero() {
            return;
        }
        let r = self.rows.entry(row).or_default();
        match r.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => {
                let s = r[i].1.add(value);
                if s.is_zero() {
                    r.remove(i);
                    if r.is_empty() {
                        self.rows.remove(&row);
                    }
                } else {
                    r[i].1 = s;
                }
            }
            Err(i) => r.insert(i, (col, value.clone())),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &C)> {
        self.rows
            .iter()
            .flat_map(|(r, cols)| cols.iter().map(move |(c, v)| (*r, *c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!((self.n, self.base), (other.n, other.base), "shape mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = TensorOp::zero(self.n, self.base);
        for (r, c, v) in self.entries() {
            out.set(r, c, v.neg());
        }
        out
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return TensorOp::zero(self.n, self.base);
        }
        let mut out = TensorOp::zero(self.n, self.base);
        for (r, c, v) in self.entries() {
            let w = v.scalar_mul(s);
            if !w.is_zero() {
                out.set(r, c, w);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let (n, base) = if self.is_zero() {
                (other.n, other.base)
            } else {
                (self.n, self.base)
            };
            return TensorOp::zero(n, base);
        }
        assert_eq!((self.n, self.base), (other.n, other.base), "shape mismatch");
        let mut out = TensorOp::zero(self.n, self.base);
        for (&r, row) in &self.rows {
            let mut acc: BTreeMap<u32, C> = BTreeMap::new();
            for (k, a) in row {
                if let Some(brow) = other.rows.get(k) {
                    for (c, b) in brow {
                        let prod = a.mul(b);
                        if prod.is_zero() {
                            continue;
                        }
                        match acc.get_mut(c) {
                            Some(e) => *e = e.add(&prod),
                            None => {
                                acc.insert(*c, prod);
                            }
                        }
                    }
                }
            }
            let cols: Vec<(u32, C)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if !cols.is_empty() {
                out.rows.insert(r, cols);
            }
        }
        out
    }

    /// Embed an operator on V^{\otimes j} at positions pos..pos+j-1 (1-based)
    /// of V^{\otimes ambient}, identity elsewhere.
    pub fn embed(&self, pos: u8, ambient: u8) -> Self {
        let j = self.n;
        assert!(pos >= 1 && pos as usize + j as usize - 1 <= ambient as usize,
            "embed position out of range: pos {pos}, op factors {j}, ambient {ambient}");
        let base = self.base as u64;
        let left = (pos - 1) as u32; // factors before the block
        let right = (ambient - pos + 1 - j) as u32; // factors after the block
        let left_dim = base.pow(left) as u32;
        let right_dim = base.pow(right) as u32;
        let mid_dim = base.pow(j as u32) as u32;
        let mut out = TensorOp::zero(ambient, self.base);
        for l in 0..left_dim {
            for (r, c, v) in self.entries() {
                for t in 0..right_dim {
                    let row = (l * mid_dim + r) * right_dim + t;
                    let col = (l * mid_dim + c) * right_dim + t;
                    out.set(row, col, v.clone());
                }
            }
        }
        out
    }

    /// Plain partial trace over the trailing `p` factors.
    pub fn partial_trace_suffix(&self, p: u8) -> Self {
        assert!(p <= self.n);
        let keep = self.n - p;
        let block = (self.base as u64).pow(p as u32) as u32;
        let mut out = TensorOp::zero(keep, self.base);
        for (r, c, v) in self.entries() {
            let (r_hi, r_lo) = (r / block, r % block);
            let (c_hi, c_lo) = (c / block, c % block);
            if r_lo == c_lo {
                out.add_to(r_hi, c_hi, v);
            }
        }
        out
    }

    /// Full trace.
    pub fn trace(&self) -> C {
        let mut acc = C::zero();
        for (r, c, v) in self.entries() {
            if r == c {
                acc = acc.add(v);
            }
        }
        acc
    }

    /// Map entries through `f`, dropping zeros.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TensorOp<D> {
        let mut out = TensorOp::zero(self.n, self.base);
        for (r, c, v) in self.entries() {
            let w = f(v);
            if !w.is_zero() {
                out.set(r, c, w);
            }
        }
        out
    }

    /// Decode a flat index into per-factor digits (most significant first).
    pub fn digits(&self, mut idx: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.n as usize];
        for k in (0..self.n as usize).rev() {
            out[k] = idx % self.base;
            idx /= self.base;
        }
        out
    }
}

impl<C: Coeff> Coeff for TensorOp<C> {
    fn zero() -> Self {
        TensorOp::zero(0, 0)
    }
    fn is_zero(&self) -> bool {
        TensorOp::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TensorOp::add(self, other)
    }
    fn neg(&self) -> Self {
        TensorOp::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        TensorOp::mul(self, other)
    }
    fn scalar_mul(&self, s: &Scalar) -> Self {
        TensorOp::scalar_mul(self, s)
    }
}

/// Lift a scalar operator into any coefficient ring through `f`.
pub fn lift<C: Coeff>(op: &TensorOp<Scalar>, f: impl Fn(&Scalar) -> C) -> TensorOp<C> {
    op.map(f)
}

/// Multiply a scalar operator by a C-operator (scalar entries act centrally).
pub fn mul_scalar_left<C: Coeff>(s_op: &TensorOp<Scalar>, x: &TensorOp<C>) -> TensorOp<C> {
    if s_op.is_zero() || x.is_zero() {
        return TensorOp::zero(x.n.max(s_op.n), x.base.max(s_op.base));
    }
    assert_eq!((s_op.n, s_op.base), (x.n, x.base), "shape mismatch");
    let mut out = TensorOp::zero(x.n, x.base);
    for (r, k, s) in s_op.entries() {
        if let Some(xrow) = x.rows.get(&k) {
            for (c, v) in xrow {
                out.add_to(r, *c, &v.scalar_mul(s));
            }
        }
    }
    out
}

/// Multiply a C-operator by a scalar operator on the right.
pub fn mul_scalar_right<C: Coeff>(x: &TensorOp<C>, s_op: &TensorOp<Scalar>) -> TensorOp<C> {
    if s_op.is_zero() || x.is_zero() {
        return TensorOp::zero(x.n.max(s_op.n), x.base.max(s_op.base));
    }
    assert_eq!((s_op.n, s_op.base), (x.n, x.base), "shape mismatch");
    let mut out = TensorOp::zero(x.n, x.base);
    for (r, k, v) in x.entries() {
        if let Some(srow) = s_op.rows.get(&k) {
            for (c, s) in srow {
                out.add_to(r, *c, &v.scalar_mul(s));
            }
        }
    }
    out
}

/// Dense square scalar matrix helpers (N x N, small): used for C-matrices,
/// conjugators and linear solves.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMat {
    pub n: usize,
    pub data: Vec<Scalar>, // row-major
}

impl DenseMat {
    pub fn zero(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMat::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.n + c] = v;
    }

    pub fn mul(&self, other: &DenseMat) -> DenseMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = DenseMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination; None if singular.
    pub fn inverse(&self) -> Option<DenseMat> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = DenseMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a.get(col, col).clone();
            let pinv = p.inv();
            for j in 0..n {
                let v = a.get(col, j).mul(&pinv);
                a.set(col, j, v);
                let w = inv.get(col, j).mul(&pinv);
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                    let w = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    /// View as a one-factor tensor operator.
    pub fn to_tensor(&self) -> TensorOp<Scalar> {
        let mut op = TensorOp::zero(1, self.n as u32);
        for r in 0..self.n {
            for c in 0..self.n {
                let v = self.get(r, c);
                if !v.is_zero() {
                    op.set(r as u32, c as u32, v.clone());
                }
            }
        }
        op
    }

    /// Kronecker product with another matrix.
    pub fn kron(&self, other: &DenseMat) -> DenseMat {
        let n = self.n * other.n;
        let mut out = DenseMat::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.n {
                    for l in 0..other.n {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.n + k, j * other.n + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }
}

/// Exact rank of a scalar tensor operator by Gaussian elimination over the
/// rational-function field.
pub fn rank(op: &TensorOp<Scalar>) -> usize {
    let mut rows: Vec<Vec<(u32, Scalar)>> = op.rows.values().cloned().collect();
    let mut pivots: Vec<(u32, Vec<(u32, Scalar)>)> = Vec::new();
    for mut row in rows.drain(..) {
        loop {
            let Some((lead_col, lead_val)) = row.first().map(|(c, v)| (*c, v.clone())) else {
                break;
            };
            if let Some((_, prow)) = pivots.iter().find(|(c, _)| *c == lead_col) {
                // row -= lead_val * prow (pivot rows are normalized to 1)
                row = sub_scaled_sorted(&row, prow, &lead_val);
            } else {
                let inv = lead_val.inv();
                let norm: Vec<(u32, Scalar)> =
                    row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
                pivots.push((lead_col, norm));
                break;
            }
        }
    }
    pivots.len()
}

/// row - f * other, both sorted by column.
fn sub_scaled_sorted(
    row: &[(u32, Scalar)],
    other: &[(u32, Scalar)],
    f: &Scalar,
) -> Vec<(u32, Scalar)> {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        match (row.get(i), other.get(j)) {
            (Some((c1, v1)), Some((c2, v2))) if c1 == c2 => {
                let v = v1.sub(&f.mul(v2));
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
                out.push((*c2, f.mul(v2).neg()));
                j += 1;
            }
            (Some((c1, v1)), None) => {
                out.push((*c1, v1.clone()));
                i += 1;
            }
            (None, Some((c2, v2))) => {
                out.push((*c2, f.mul(v2).neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, Var};

    fn flip(n: u32) -> TensorOp<Scalar> {
        let mut p = TensorOp::zero(2, n);
        for c in 0..n {
            for d in 0..n {
                p.set(d * n + c, c * n + d, Scalar::one());
            }
        }
        p
    }

    #[test]
    fn embed_positions() {
        let p = flip(2);
        let e1 = p.embed(1, 3);
        let e2 = p.embed(2, 3);
        // braid relation for the flip
        let lhs = e1.mul(&e2).mul(&e1);
        let rhs = e2.mul(&e1).mul(&e2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn suffix_trace_of_identity() {
        let id = TensorOp::identity_with(3, 2, Scalar::one());
        let t = id.partial_trace_suffix(2);
        // Tr over a 4-dim block of the identity gives 4 * I_2
        let expect = TensorOp::identity_with(1, 2, Scalar::from_int(4));
        assert_eq!(t, expect);
    }

    #[test]
    fn rank_of_projector() {
        // (I - P)/2 on C^2 (x) C^2 has rank 1
        let p = flip(2);
        let id = TensorOp::identity_with(2, 2, Scalar::one());
        let a = id.sub(&p).scalar_mul(&Scalar::from_frac(1, 2));
        assert_eq!(rank(&a), 1);
        assert_eq!(rank(&id), 4);
    }

    #[test]
    fn dense_inverse() {
        let mut w = DenseMat::identity(2);
        w.set(0, 1, Scalar::one());
        let winv = w.inverse().unwrap();
        assert_eq!(w.mul(&winv), DenseMat::identity(2));
        // singular matrix has no inverse
        let mut s = DenseMat::zero(2);
        s.set(0, 0, Scalar::var(Var::Q));
        assert!(s.inverse().is_none());
    }
}
