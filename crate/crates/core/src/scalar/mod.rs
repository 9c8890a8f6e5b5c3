//! Exact arithmetic kernel.
//!
//! A [`Scalar`] is either an exact rational or a reduced ratio of two rational
//! polynomials in a single formal variable (`q`, `h` or `u`). All arithmetic
//! is exact; there is no floating point anywhere in this crate. Normalization
//! is canonical (reduced fraction, monic denominator, constants collapse to
//! the rational form) so equality is a plain representation check.

mod poly;
mod sample;

pub use poly::{rat, rat_int, render_rat, QPoly, Rat};
pub use sample::{SamplePlan, SamplePlanError};

use num_traits::{One, Zero};
use std::fmt;

/// The formal variable a symbolic scalar may depend on.
///
/// The three parameters of the constructions never genuinely mix: `q` carries
/// the Hecke deformation, `h` the shift parameter of the rational family
/// (involutive case, where q = 1), and `u` the spectral parameter of
/// operator-valued rational functions. Arithmetic between scalars tagged with
/// different variables is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    Q,
    H,
    U,
}

impl Var {
    pub fn name(&self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::H => "h",
            Var::U => "u",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Repr {
    Rat(Rat),
    /// num/den in `var`; invariants: gcd(num, den) = 1, den monic,
    /// and not both constant (constants live in `Rat`).
    Fun { var: Var, num: QPoly, den: QPoly },
}

/// An exact scalar: a rational number or a univariate rational function.
#[derive(Clone, PartialEq, Debug)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Rat(Rat::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Rat(Rat::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Rat(rat_int(n)))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar(Repr::Rat(r))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar(Repr::Rat(rat(num, den)))
    }

    /// The formal variable itself, e.g. `Scalar::var(Var::Q)` is q.
    pub fn var(v: Var) -> Self {
        Scalar::from_polys(v, QPoly::var(), QPoly::one())
    }

    /// Build a normalized scalar from a polynomial fraction.
    pub fn from_polys(var: Var, num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "scalar with zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading();
        if !lead.is_one() {
            num = num.scale(&(Rat::one() / lead.clone()));
            den = den.scale(&(Rat::one() / lead));
        }
        if den.is_one() && num.degree() == 0 {
            return Scalar(Repr::Rat(num.coeff(0)));
        }
        Scalar(Repr::Fun { var, num, den })
    }

    /// Build a polynomial scalar from little-endian coefficients.
    pub fn poly(var: Var, coeffs: &[Rat]) -> Self {
        Scalar::from_polys(var, QPoly::from_coeffs(coeffs.to_vec()), QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_one())
    }

    /// The variable this scalar depends on, if any.
    pub fn variable(&self) -> Option<Var> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Fun { var, .. } => Some(*var),
        }
    }

    /// The exact rational value, if this scalar is constant.
    pub fn as_rat(&self) -> Option<&Rat> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Fun { .. } => None,
        }
    }

    fn join_var(&self, other: &Scalar) -> Option<Var> {
        match (self.variable(), other.variable()) {
            (None, v) | (v, None) => v,
            (Some(a), Some(b)) => {
                assert!(
                    a == b,
                    "mixed formal variables {} and {} in scalar arithmetic",
                    a.name(),
                    b.name()
                );
                Some(a)
            }
        }
    }

    fn as_polys(&self) -> (QPoly, QPoly) {
        match &self.0 {
            Repr::Rat(r) => (QPoly::constant(r.clone()), QPoly::one()),
            Repr::Fun { num, den, .. } => (num.clone(), den.clone()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            _ => {
                let var = self.join_var(other).expect("non-constant operand");
                let (an, ad) = self.as_polys();
                let (bn, bd) = other.as_polys();
                if ad == bd {
                    // common denominator: one reduction instead of three
                    return Scalar::from_polys(var, an.add(&bn), ad);
                }
                Scalar::from_polys(var, an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(-r.clone())),
            Repr::Fun { var, num, den } => Scalar(Repr::Fun {
                var: *var,
                num: num.neg(),
                den: den.clone(),
            }),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            _ => {
                if self.is_zero() || other.is_zero() {
                    return Scalar::zero();
                }
                let var = self.join_var(other).expect("non-constant operand");
                let (an, ad) = self.as_polys();
                let (bn, bd) = other.as_polys();
                // cross-reduce: each side is already coprime, so after
                // cancelling gcd(an, bd) and gcd(bn, ad) the product is
                // reduced and only the monic normalization remains
                let g1 = an.gcd(&bd);
                let (an, bd) = if g1.is_one() {
                    (an, bd)
                } else {
                    (an.div_rem(&g1).0, bd.div_rem(&g1).0)
                };
                let g2 = bn.gcd(&ad);
                let (bn, ad) = if g2.is_one() {
                    (bn, ad)
                } else {
                    (bn.div_rem(&g2).0, ad.div_rem(&g2).0)
                };
                let num = an.mul(&bn);
                let mut den = ad.mul(&bd);
                let mut num = num;
                let lead = den.leading();
                if !lead.is_one() {
                    let inv = Rat::one() / lead;
                    num = num.scale(&inv);
                    den = den.scale(&inv);
                }
                if den.is_one() && num.degree() == 0 {
                    return Scalar(Repr::Rat(num.coeff(0)));
                }
                Scalar(Repr::Fun { var, num, den })
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => {
                assert!(!r.is_zero(), "inverse of zero scalar");
                Scalar(Repr::Rat(r.recip()))
            }
            Repr::Fun { var, num, den } => Scalar::from_polys(*var, den.clone(), num.clone()),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Evaluate at `var = point`. Errors if the point is a pole or the scalar
    /// depends on a different variable.
    pub fn eval(&self, var: Var, point: &Rat) -> Result<Scalar, EvalError> {
        match &self.0 {
            Repr::Rat(_) => Ok(self.clone()),
            Repr::Fun { var: v, num, den } => {
                if *v != var {
                    return Err(EvalError::WrongVariable {
                        have: *v,
                        requested: var,
                    });
                }
                let d = den.eval(point);
                if d.is_zero() {
                    return Err(EvalError::Pole {
                        var,
                        point: render_rat(point),
                    });
                }
                Ok(Scalar::from_rat(num.eval(point) / d))
            }
        }
    }

    /// Conservative total degree bound (numerator plus denominator degree) in
    /// the formal variable; constants report 0. Canonical reduction keeps
    /// this the actual degree, so propagation through arithmetic is automatic.
    pub fn degree_bound(&self) -> usize {
        match &self.0 {
            Repr::Rat(_) => 0,
            Repr::Fun { num, den, .. } => num.degree() + den.degree(),
        }
    }

    /// Numerator/denominator access for the symbolic form.
    pub fn as_fraction(&self) -> (QPoly, QPoly) {
        self.as_polys()
    }

    /// Formal derivative with respect to the scalar's variable (exact
    /// quotient rule). Constants differentiate to zero.
    pub fn derivative(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(_) => Scalar::zero(),
            Repr::Fun { var, num, den } => {
                let n = num.derivative().mul(den).sub(&num.mul(&den.derivative()));
                Scalar::from_polys(*var, n, den.mul(den))
            }
        }
    }

    /// Coefficient of `var^k` when the scalar is polynomial in its variable.
    /// Panics if the denominator is non-trivial.
    pub fn poly_coeff(&self, k: usize) -> Rat {
        match &self.0 {
            Repr::Rat(r) => {
                if k == 0 {
                    r.clone()
                } else {
                    Rat::zero()
                }
            }
            Repr::Fun { num, den, .. } => {
                assert!(den.is_one(), "poly_coeff on a non-polynomial scalar");
                num.coeff(k)
            }
        }
    }

    /// Degree in the variable when polynomial (constants report 0).
    pub fn poly_degree(&self) -> usize {
        match &self.0 {
            Repr::Rat(_) => 0,
            Repr::Fun { num, den, .. } => {
                assert!(den.is_one(), "poly_degree on a non-polynomial scalar");
                num.degree()
            }
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("evaluation point {point} is a pole of the {} function", var.name())]
    Pole { var: Var, point: String },
    #[error("scalar depends on {} but evaluation requested for {}", have.name(), requested.name())]
    WrongVariable { have: Var, requested: Var },
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => write!(f, "{}", render_rat(r)),
            Repr::Fun { var, num, den } => {
                let n = num.render(var.name());
                if den.is_one() {
                    write!(f, "{n}")
                } else {
                    write!(f, "({})/({})", n, den.render(var.name()))
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// q-numbers
// ---------------------------------------------------------------------------

/// The q-integer k_q = (q^k - q^{-k})/(q - q^{-1}) = q^{k-1} + q^{k-3} + ... + q^{1-k}.
pub fn qint(k: u32) -> Scalar {
    assert!(k >= 1, "qint requires k >= 1");
    // (q^{2(k-1)} + q^{2(k-2)} + ... + 1) / q^{k-1}
    let num = QPoly::from_coeffs(
        (0..2 * k - 1)
            .map(|i| if i % 2 == 0 { Rat::one() } else { Rat::zero() })
            .collect(),
    );
    let den = QPoly::monomial(Rat::one(), (k - 1) as usize);
    Scalar::from_polys(Var::Q, num, den)
}

/// q-factorial k_q! = 1_q 2_q ... k_q.
pub fn qfactorial(k: u32) -> Scalar {
    assert!(k >= 1, "qfactorial requires k >= 1");
    let mut acc = Scalar::one();
    for j in 1..=k {
        acc = acc.mul(&qint(j));
    }
    acc
}

/// Involutive-mode counterpart of [`qint`]: the plain integer k (q = 1).
pub fn qint_involutive(k: u32) -> Scalar {
    assert!(k >= 1);
    Scalar::from_int(k as i64)
}

/// lambda = q - q^{-1}.
pub fn lambda() -> Scalar {
    let q = Scalar::var(Var::Q);
    q.sub(&q.inv())
}

/// q^e for a signed exponent.
pub fn qpow(e: i64) -> Scalar {
    Scalar::var(Var::Q).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        // qint(1) = 1, qint(2) = q + q^-1, qint(3) = q^2 + 1 + q^-2
        assert_eq!(qint(1), Scalar::one());
        let q = Scalar::var(Var::Q);
        assert_eq!(qint(2), q.add(&q.inv()));
        let expect3 = q.pow(2).add(&Scalar::one()).add(&q.pow(-2));
        assert_eq!(qint(3), expect3);
    }

    #[test]
    fn qfactorial_values() {
        assert_eq!(qfactorial(1), Scalar::one());
        assert_eq!(qfactorial(2), qint(2));
        assert_eq!(qfactorial(3), qint(2).mul(&qint(3)));
    }

    #[test]
    fn qint_at_one_is_k() {
        for k in 1..=12 {
            let v = qint(k).eval(Var::Q, &rat_int(1)).unwrap();
            assert_eq!(v, Scalar::from_int(k as i64), "qint({k}) at q=1");
        }
    }

    #[test]
    fn canonical_difference_is_zero() {
        let a = qint(5).mul(&lambda()).add(&Scalar::from_frac(3, 7));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a), Scalar::zero());
    }

    #[test]
    fn collapse_to_rational() {
        // (q^2 - 1)/(q - 1) - q = 1, a pure rational after reduction
        let q = Scalar::var(Var::Q);
        let f = q.pow(2).sub(&Scalar::one()).div(&q.sub(&Scalar::one()));
        let g = f.sub(&q);
        assert_eq!(g, Scalar::one());
        assert!(g.as_rat().is_some());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/du (1/(u-2)) = -1/(u-2)^2
        let u = Scalar::var(Var::U);
        let f = u.sub(&Scalar::from_int(2)).inv();
        let expect = f.mul(&f).neg();
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    #[should_panic(expected = "mixed formal variables")]
    fn mixing_variables_panics() {
        let _ = Scalar::var(Var::Q).add(&Scalar::var(Var::H));
    }
}
