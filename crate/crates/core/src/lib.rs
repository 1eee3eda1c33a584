//! Gröbner–Shirshov bases for free semirings and free commutative semirings.
//!
//! The crate represents semiring presentations `Rig⟨X | S⟩` through the
//! semiring algebra `k Rig⟨X⟩`, enumerates compositions between relations,
//! runs Shirshov completion, and decides the word problem of the generated
//! congruence by comparing normal forms.
//!
//! Everything algebraic is generic over the coefficient field through
//! [`Coefficient`]; the aliases below fix it to exact big rationals, which is
//! what the front end and the command line use.

pub mod cli;
pub mod completion;
pub mod composition;
pub mod error;
pub mod frontend;
pub mod oracle;
pub mod ordering;
pub mod presets;
pub mod rewrite;
pub mod terms;

pub use completion::{CompletionLimits, CompletionReport, CompletionStatus, Decision, System};
pub use composition::{CompositionKind, CompositionRecord};
pub use error::{Error, Result};
pub use ordering::{BaseOrder, RigOrder};
pub use rewrite::{Context, Occurrence, ReductionTrace, Relation};
pub use terms::{Alphabet, BaseMonomial, Coefficient, Mode, RigMonomial, Symbol};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Rationals with machine-word numerator and denominator.
pub type SmallRational = num_rational::Rational64;

/// Polynomials over a coefficient field, rational by default.
pub type Polynomial<K = Rational> = terms::Polynomial<K>;
pub type QPolynomial = terms::Polynomial<Rational>;
pub type F64Polynomial = terms::Polynomial<f64>;
pub type QSystem = completion::System<Rational>;
pub type QRelation = rewrite::Relation<Rational>;
pub type QReport = completion::CompletionReport<Rational>;
