//! Exact-arithmetic unit forms, their extended affine root systems, and
//! the graded Lie algebras they generate.
//!
//! Given a connected non-negative unit form `q` on Z^n, this crate
//! computes its invariants (radical, corank, Dynkin type), enumerates the
//! root system `R(q) = q^{-1}(0) ∪ q^{-1}(1)`, materializes the Lie
//! algebra `E(q)` with explicit structure constants over the rationals,
//! and mechanically verifies the axioms the construction promises:
//! extended affine root system axioms, Jacobi and anticommutativity, the
//! invariant non-degenerate bilinear form, local nilpotency, generalized
//! Serre relations, ideal-freeness witnesses, and the equivalence
//! classification of forms by (corank, Dynkin type).
//!
//! All lattice computation is generic over an exact integer scalar
//! (default `i64`, any big integer works); spectral data lives in the
//! corresponding field of fractions. There is no floating point anywhere.
//!
//! ```
//! use eala_core::{eala, equiv, gauge, roots, UnitForm};
//!
//! // The corank-1 form (x1 - x2)^2: radical spanned by (1, 1).
//! let q = UnitForm::from_coefficients(2, &[(1, 2, -2)])?;
//! let inv = equiv::invariants(&q)?;
//! assert_eq!((inv.corank, inv.dynkin.to_string().as_str()), (1, "A1"));
//!
//! // Every bracket is exact; [e_c1, e_{-c1}] = -pi_0(c1).
//! let g = gauge::canonical_gauge(&q);
//! let e = eala::GradedElement::e(&q, &g, &[1, 0])?;
//! let f = eala::GradedElement::e(&q, &g, &[-1, 0])?;
//! let h = eala::bracket(&q, &g, &e, &f)?;
//! assert_eq!(h, eala::GradedElement::pi0(&q, &g, &[1, 0])?.neg());
//!
//! // The height-truncated root system passes the axiom suite.
//! assert!(roots::check_ears(&q, 3).all_passed());
//! # Ok::<(), eala_core::Error>(())
//! ```

pub mod eala;
pub mod equiv;
pub mod error;
pub mod fixtures;
pub mod gauge;
pub mod linalg;
pub mod num;
pub mod report;
pub mod roots;
pub mod serre;
pub mod unitform;

pub use error::{Error, Result};
pub use report::{CheckResult, ReportParams, VerificationReport};

/// Default integer scalar.
pub type Int = i64;
/// Default rational scalar.
pub type Rational = num::Rat<Int>;

pub type UnitForm = unitform::UnitForm<Int>;
pub type RadicalData = unitform::RadicalData<Int>;
pub type DynkinType = unitform::DynkinType;
pub type Root = roots::Root<Int>;
pub type RootString = roots::RootString;
pub type RootDecomposition = roots::RootDecomposition<Int>;
pub type Gauge = gauge::Gauge<Int>;
pub type GradedElement = eala::GradedElement<Int>;
pub type BracketWord = serre::BracketWord<Int>;
pub type FormInvariants = equiv::FormInvariants;
pub type Matrix = linalg::Matrix<Int>;
