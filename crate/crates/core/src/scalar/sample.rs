//! Deterministic sampling plans for point-checked identity verification.
//!
//! A univariate polynomial identity of total degree <= `degree_bound` that
//! holds at more than `degree_bound` pairwise distinct points holds
//! identically; plans carry enough distinct points to make point checks of
//! such identities conclusive. Points are generated from a seeded linear
//! congruential walk, are nonzero, and avoid the declared excluded
//! denominators (e.g. q^k = 1 guards for generic q).

use super::poly::{QPoly, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

/// A deterministic plan of exact rational sample points.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePlan {
    pub degree_bound: usize,
    pub points: Vec<Rat>,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SamplePlanError {
    #[error("need count > degree_bound, got count {count} for degree bound {degree_bound}")]
    TooFewPoints { count: usize, degree_bound: usize },
    #[error("could not find {count} admissible points avoiding the excluded denominators")]
    ExclusionUnsatisfiable { count: usize },
}

impl SamplePlan {
    /// Build a plan of `count` distinct nonzero rational points avoiding the
    /// zeros of every polynomial in `excluded`.
    pub fn new(
        degree_bound: usize,
        count: usize,
        seed: u64,
        excluded: &[QPoly],
    ) -> Result<SamplePlan, SamplePlanError> {
        if count <= degree_bound {
            return Err(SamplePlanError::TooFewPoints {
                count,
                degree_bound,
            });
        }
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut points: Vec<Rat> = Vec::with_capacity(count);
        let mut attempts = 0usize;
        let max_attempts = 1000 * count + 1000;
        while points.len() < count {
            attempts += 1;
            if attempts > max_attempts {
                return Err(SamplePlanError::ExclusionUnsatisfiable { count });
            }
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let num = 2 + ((state >> 33) % 997) as i64;
            let den = 1 + ((state >> 13) % 7) as i64;
            let candidate = Rat::new(BigInt::from(num), BigInt::from(den));
            if candidate.is_zero() {
                continue;
            }
            if points.contains(&candidate) {
                continue;
            }
            if excluded.iter().any(|p| p.eval(&candidate).is_zero()) {
                continue;
            }
            points.push(candidate);
        }
        Ok(SamplePlan {
            degree_bound,
            points,
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Scalar, Var};
    use num_traits::One;

    #[test]
    fn constant_case_single_nonzero_point() {
        let plan = SamplePlan::new(0, 1, 7, &[]).unwrap();
        assert_eq!(plan.len(), 1);
        assert!(!plan.points[0].is_zero());
    }

    #[test]
    fn guard_excludes_one() {
        // excluded q - 1 means no point equals 1
        let guard = QPoly::from_coeffs(vec![-Rat::one(), Rat::one()]);
        let plan = SamplePlan::new(4, 5, 42, &[guard]).unwrap();
        assert_eq!(plan.len(), 5);
        for (i, p) in plan.points.iter().enumerate() {
            assert_ne!(p, &rat_int(1));
            for q in &plan.points[i + 1..] {
                assert_ne!(p, q);
            }
        }
    }

    #[test]
    fn certifies_factoring_identity() {
        // (q^2 - 1) = (q - 1)(q + 1): degree 2, so 3 points certify it.
        let plan = SamplePlan::new(2, 3, 11, &[]).unwrap();
        let q = Scalar::var(Var::Q);
        let lhs = q.pow(2).sub(&Scalar::one());
        let rhs = q.sub(&Scalar::one()).mul(&q.add(&Scalar::one()));
        for pt in &plan.points {
            assert_eq!(
                lhs.eval(Var::Q, pt).unwrap(),
                rhs.eval(Var::Q, pt).unwrap()
            );
        }
        // with count > degree_bound and all points agreeing, the identity holds
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn count_must_exceed_bound() {
        assert!(matches!(
            SamplePlan::new(3, 3, 1, &[]),
            Err(SamplePlanError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn impossible_exclusion_errors() {
        // the zero polynomial vanishes everywhere, so nothing is admissible
        let kill_all = QPoly::zero();
        assert!(matches!(
            SamplePlan::new(0, 1, 3, &[kill_all]),
            Err(SamplePlanError::ExclusionUnsatisfiable { .. })
        ));
    }

    #[test]
    fn deterministic_for_seed() {
        let a = SamplePlan::new(2, 8, 123, &[]).unwrap();
        let b = SamplePlan::new(2, 8, 123, &[]).unwrap();
        assert_eq!(a, b);
    }
}
