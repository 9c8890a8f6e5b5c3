//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are exact `BigRational`s stored little-endian (index = power).
//! The zero polynomial is the empty coefficient vector. These back the
//! rational-function scalars; degrees stay small at desk scale, so the naive
//! O(n^2) multiplication and the monic Euclidean gcd are adequate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Convenience constructor for an exact rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// A dense univariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    /// coeffs[i] is the coefficient of x^i; no trailing zeros.
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial x^1.
    pub fn var() -> Self {
        QPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// c * x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let dd = divisor.degree();
        let dl = divisor.leading();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.coeffs.len() >= divisor.coeffs.len() {
            let shift = rem.degree() - dd;
            let factor = rem.leading() / dl.clone();
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = shift + j;
                let v = rem.coeff(idx) - &factor * b;
                if idx < rem.coeffs.len() {
                    rem.coeffs[idx] = v;
                }
            }
            rem.trim();
        }
        (QPoly::from_coeffs(quot), rem)
    }

    /// Monic gcd via the Euclidean algorithm, renormalizing each remainder.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        // nonzero constants are units
        if (!self.is_zero() && self.degree() == 0) || (!other.is_zero() && other.degree() == 0) {
            return QPoly::one();
        }
        let mut a = self.clone().into_monic();
        let mut b = other.clone().into_monic();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.into_monic();
        }
        a
    }

    fn into_monic(mut self) -> QPoly {
        if self.is_zero() {
            return self;
        }
        let lead = self.leading();
        if !lead.is_one() {
            for c in &mut self.coeffs {
                *c /= lead.clone();
            }
        }
        self
    }

    pub fn monic(&self) -> QPoly {
        self.clone().into_monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// Render in the expression grammar with the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = render_rat(&abs);
            if k == 0 {
                out.push_str(&coeff_str);
            } else {
                let var_str = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if abs.is_one() {
                    out.push_str(&var_str);
                } else {
                    out.push_str(&coeff_str);
                    out.push('*');
                    out.push_str(&var_str);
                }
            }
        }
        out
    }
}

/// Render a rational in the grammar ("p" or "p/q").
pub fn render_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
