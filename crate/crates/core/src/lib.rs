//! Finite binary posets: sets carrying a pair of relations `(≼₁, ≼₂)` that
//! satisfy chain-form reflexivity, anti-symmetry and transitivity.
//!
//! The crate provides the relation encoding, axiom checks, constructions
//! (intersection, dual, powerset and divisibility generators), extremal
//! elements, isotone maps and isomorphisms, Galois connections, and an
//! exhaustive small-model checker that tests each structural claim at small
//! sizes and produces replayable counterexamples.

pub mod axioms;
pub mod biposet;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod galois;
pub mod io;
pub mod morphisms;
pub mod oracle;
pub mod relation;
pub mod verdict;

pub use axioms::{check_axioms, check_classical_por, AxiomVerdict, ClassicalVerdict};
pub use biposet::{BiPoset, Diamond, GroundSet};
pub use error::{Error, Result};
pub use morphisms::Mapping;
pub use relation::Rel;
pub use verdict::Verdict;
