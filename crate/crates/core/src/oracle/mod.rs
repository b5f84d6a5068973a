//! Exhaustive small-model enumeration and the claim registry.
//!
//! Each registered claim is swept over every structure size up to `n_max`.
//! A universal claim is either verified at that scale or refuted by the
//! least counterexample: smallest sizes first, then the least structure
//! codes, then the least maps. Every counterexample replays through the
//! public API.

mod claims;
pub mod enumerate;
mod finding;
mod kernel;
mod replay;

pub use claims::{verify_claim, ClaimId, DEFAULT_BUDGET, DEFAULT_SEED};
pub use enumerate::{candidate_count, catalog, decode, encode, enumerate_biposets, scan_catalog, MAX_ENUM_N};
pub use finding::{ClaimVerdict, Finding, NamedMap, NamedStructure, ScaleStats, SweepMode, Witness};
pub use replay::{replay, replay_witness};
