//! Exact-arithmetic verification of braided Yangian constructions:
//! R-matrices and their baxterizations, skew-symmetrizers, R-traces, quantum
//! symmetric polynomials with their Newton identities and Bethe-subalgebra
//! commutativity, and classical/braided Gaudin systems with Talalaev's higher
//! Hamiltonians. Everything is computed over exact rationals or univariate
//! rational functions; identity checks are either fully symbolic or exact at
//! deterministically sampled rational points.
//!
//! ```
//! use byv_core::braiding::{builtin_braiding, BuiltinName};
//! use byv_core::freealg::QMode;
//! use byv_core::symfun::{verify_bethe_commutativity, YangianContext};
//!
//! // the standard Hecke symmetry on C^2, verified at construction
//! let b = builtin_braiding(BuiltinName::DjHecke, 2, None).unwrap();
//! assert_eq!(b.birank(), 2);
//!
//! // [e_1(u), e_1(v)] is certified an ideal member at every bidegree
//! let ctx = YangianContext::trig(b, 1);
//! for rec in verify_bethe_commutativity(&ctx, &[(1, 1)], 2, &QMode::Symbolic) {
//!     assert_eq!(rec.status, byv_core::Status::Pass);
//! }
//! ```

pub mod braiding;
pub mod freealg;
pub mod gaudin;
pub mod report;
pub mod scalar;
pub mod symfun;
pub mod tensor;

pub use braiding::{Braiding, BraidKind};
pub use report::{CheckRecord, Report, Status};
pub use scalar::{Scalar, SamplePlan, Var};
pub use tensor::{Coeff, TensorOp};
