//! Reports, space files, random generation and the suite runner behind the
//! `qubench` binary.

pub mod caps;
pub mod corpus;
pub mod generate;
pub mod report;
pub mod spacefile;
pub mod suite;

pub use caps::{Caps, CAPS_ENV};
pub use generate::{gen_space, Generated, Repair};
pub use report::{
    any_failed, determinism_digest, emit_report, sort_reports, Bounds, CheckReport, Format, Verdict,
};
pub use spacefile::{parse_point_set, parse_space, serialize_point_set, serialize_space, space_hash, SpaceFile};
pub use suite::{bei_reports, check_ids, contra_reports, finite_check, run_check, run_finite_on_space, run_suite, Suite, SuiteConfig};
