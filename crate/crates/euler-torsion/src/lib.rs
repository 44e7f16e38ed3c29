//! Exact chain-level verification that the g-th power of the Euler class of
//! the mapping class group of a once-marked genus-g surface is torsion of
//! order divisible by `4g(2g+1)(2g-1)`.
//!
//! Everything here is exact integer combinatorics: words in the surface
//! group with a small-cancellation word problem, relator-preserving
//! automorphisms, the induced action on inversives (classes `{w, w^-1}`),
//! bigraded integer chains with horizontal and vertical boundaries, the
//! transition cycle obstructing the lift of the orbit Euler chain, and the
//! integer detection homomorphism that certifies the torsion bound.

pub mod automorphism;
pub mod chain;
pub mod check;
pub mod detect;
pub mod error;
pub mod inversive;
pub mod orbit;
pub mod par;
pub mod report;
pub mod runner;
pub mod simplex;
pub mod transition;
pub mod word;

pub use error::{Error, Result};
pub use word::{GenusContext, Letter, Limits, ReducedWord};
