//! rrkit — numerical toolkit for inner and outer rate-region bounds of
//! 3-receiver broadcast channels with 2-degraded message sets.
//!
//! Two receivers (`Y1`, `Y2`) decode a common message and a private message;
//! the third (`Y3`) decodes only the common one. The crate evaluates the
//! classical superposition inner bound and two outer bounds by deterministic
//! grid search over auxiliary decompositions of the channel input, and treats
//! the binary skew-symmetric + BSC(p) channel family in closed form: regime
//! thresholds, the parametric boundary, Region A, the revised outer bound,
//! and the capacity region. A verification layer checks the entropy
//! inequalities the closed forms rest on (a Mrs. Gerber-style lemma, a
//! derivative-ratio monotonicity claim, and its appendix reduction), and a
//! small-blocklength codebook module checks the flip-symmetry argument behind
//! the revised outer bound by exact enumeration.
//!
//! All information quantities are in bits (base-2 logarithms). Probabilities
//! and rates are plain `f64`; structured values (channels, input
//! distributions, auxiliary decompositions, rate regions) validate their
//! invariants on construction.

pub mod bounds;
pub mod bsscbsc;
pub mod codebook;
pub mod dmc;
pub mod entropy;
mod error;
pub mod inequality;
pub mod region;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
