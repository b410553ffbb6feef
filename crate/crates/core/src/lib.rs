//! Desk-scale verification of quasi-uniform space constructions.
//!
//! The crate covers finite quasi-uniform spaces and their Hausdorff
//! hyperspaces ([`relcore`], [`filters`], [`hyperspace`]), the stability space
//! of doubly stable filters and the bicompletion ([`stability`]), an exact
//! symbolic model of a countable counterexample on the natural numbers
//! ([`natline`]), exact-rational quasi-pseudometrics including the Sorgenfrey
//! line ([`qpm`]), and the report machinery behind the `qubench` binary
//! ([`workbench`]).

pub mod audit;
pub mod error;
pub mod exec;
pub mod filters;
pub mod hyperspace;
pub mod natline;
pub mod qpm;
pub mod relcore;
pub mod stability;
pub mod workbench;

pub use error::{Error, Result};
pub use exec::Exec;
