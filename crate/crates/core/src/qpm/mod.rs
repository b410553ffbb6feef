//! Exact-rational quasi-pseudometrics: the Sorgenfrey quasi-metric, finite
//! spaces with their conjugates and symmetrizations, the Hausdorff distance
//! on subsets, interval arithmetic under Sorgenfrey balls, and nets.
//!
//! Balls are strict, `B(x, eps) = {y : d(x, y) < eps}`, matching the
//! entourages `{d < eps}`.

pub mod cauchy;
pub mod checks;
pub mod cover;
pub mod interval;
pub mod net;
pub mod rational;
pub mod space;
pub mod tables;

pub use cauchy::{cauchy_probe, sorgenfrey_cauchy_probe, CauchyProbe};
pub use cover::{cover_fact_check, CoverVerdict};
pub use interval::{a_query, b_query, fn_sets, Interval, IntervalSet};
pub use net::{eps_net, is_precompact_at, net_transfer, TransferReport};
pub use rational::{format_rat, parse_rat, rat, sorgenfrey, Rat};
pub use space::QPSpace;
