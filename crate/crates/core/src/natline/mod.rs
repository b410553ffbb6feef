//! Exact symbolic computation on ℕ with finite-or-cofinite sets, the
//! entourages generated by `≤` and the punctures `T_p`, and the filters
//! needed for the countable counterexample ([`verify_contra`]). The finite
//! companion [`verify_bei`] covers spaces where the condition does hold.

mod bei;
mod cofset;
mod contra;
mod entourage;
mod filter;
pub mod truncation;

pub use bei::{bei_catalogue, bei_violators, fork_space, hypothesis_violation, verify_bei, BeiReport};
pub use cofset::CofSet;
pub use contra::{verify_contra, CatalogueEntry, Clause, ContraReport, MAX_PUNCTURE_BOUND, MAX_TRUNCATION};
pub use entourage::SymEntourage;
pub use filter::SymFilter;
