//! Tools for Hadwiger's conjecture restricted to graphs with independence
//! number at most two.
//!
//! The crate is organised around an immutable bitset [`Graph`]:
//!
//! * [`graph`] holds the graph type, graph6 I/O, inflations and structural
//!   invariants (connectivity, girth, cliques, isomorphism).
//! * [`matching`] computes maximum matchings and the matching formula for the
//!   chromatic number of graphs with `α ≤ 2`.
//! * [`certificates`] builds and verifies fractional clique-cover certificates.
//! * [`constructions`] builds the named graph families (Kneser, Clebsch,
//!   Mesner, Higman–Sims, Eberhard, ...), each self-verified.
//! * [`conjectures`] searches for connected (dominating) matchings, complete
//!   minor models, seagull packings, and screens candidate counterexamples.

pub mod certificates;
pub mod conjectures;
pub mod constructions;
mod error;
pub mod graph;
pub mod matching;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Distance, Graph};
pub use num_rational::Ratio;

/// Exact rational number used by certificate bounds.
pub type Rational = Ratio<u64>;
