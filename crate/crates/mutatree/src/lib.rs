//! Exact enumeration of ordered trees carrying a mutation.
//!
//! The crate is organized as:
//!
//! - [`powerseries`]: truncated formal power series over exact rationals
//! - [`treealg`]: the Catalan/central-binomial series C, B, L and their
//!   identities, plus big-integer coefficient kernels
//! - [`models`]: the eight mutation models, each with series, closed-form
//!   coefficients, exact proportions and tabulated asymptotics
//! - [`oracle`]: brute-force enumeration at small sizes, the ground truth
//!   everything else is checked against
//! - [`seqio`]: CSV / JSON-lines / b-file emission and reference-sequence
//!   comparison
//!
//! The `mutatree` binary fronts all of this; see the README.

pub mod models;
pub mod oracle;
pub mod powerseries;
pub mod seqio;
pub mod treealg;
