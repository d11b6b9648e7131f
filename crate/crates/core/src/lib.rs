//! Exact enumeration of ground Horn theories.
//!
//! A set of binomial equations over `n` propositional variables determines a
//! Horn function, and Horn functions are in one-to-one correspondence with
//! families of bit vectors closed under coordinatewise AND. Counting the
//! distinct theories therefore reduces to counting meet-closed families,
//! which this crate does three ways:
//!
//! * [`counter`]: an exact DPLL model counter run on the closure CNF built by
//!   [`encoder`];
//! * [`oracle`]: brute-force enumeration of every family for `n <= 4`;
//! * [`identities`]: the doubling and binomial-sum relations between the four
//!   variants.
//!
//! The [`theory`] module handles the syntactic side (monomials, binomial
//! equations, Horn clauses) and [`families`] the semantic side.

pub mod cli;
pub mod counter;
pub mod encoder;
mod error;
pub mod families;
pub mod identities;
pub mod oracle;
mod parallel;
pub mod theory;
mod variant;

pub use counter::{count_models, count_variant, CountReport, CountStats, CounterConfig, Method};
pub use encoder::{emit_dimacs, encode, CnfInstance, Lit};
pub use error::{Error, Result};
pub use families::{BitVector, VectorFamily};
pub use theory::{BinomialEquation, HornClause, Monomial};
pub use variant::Variant;
