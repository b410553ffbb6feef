//! The covering property of convergent sequences on the Sorgenfrey line: if
//! `b_m → y` in the Euclidean sense then `]y, y + 2^{-n}[` lies in
//! `⋃_m [b_m, b_m + 2^{-n}[` and `]y − 2^{-n}, y[` lies in `⋃_m ]b_m − 2^{-n}, b_m]`.

use serde::Serialize;

use crate::error::{Error, Result};

use super::rational::{abs_diff, dyadic, format_rat, serialize_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `]y, y + 2^{-n}[` against `[b_m, b_m + 2^{-n}[`.
    Right,
    /// `]y − 2^{-n}, y[` against `]b_m − 2^{-n}, b_m]`.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterwitness {
    pub side: Side,
    #[serde(serialize_with = "serialize_rat")]
    pub point: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    /// Sample points checked on both sides.
    pub samples: u64,
    /// Samples within this distance of an interval end are skipped: the
    /// finite prefix only reaches `y` up to its last term.
    #[serde(serialize_with = "serialize_rat")]
    pub stripe: Rat,
    pub counterwitnesses: Vec<Counterwitness>,
}

impl CoverVerdict {
    pub fn covered(&self) -> bool {
        self.counterwitnesses.is_empty()
    }
}

/// Checks both inclusions at the sample points `y ± k·2^{-n-4}`.
///
/// The prefix counts as convergent when its last term lies within
/// `2^{-n-4}` of `y`; otherwise the check refuses with
/// [`Error::NonConvergent`] rather than reporting a failure.
pub fn cover_fact_check(y: &Rat, seq: &[Rat], n: u32) -> Result<CoverVerdict> {
    let radius = dyadic(n);
    let step = dyadic(n + 4);
    let last = seq.last().ok_or(Error::EmptySet)?;
    let gap = abs_diff(last, y);
    if gap > step {
        return Err(Error::NonConvergent {
            target: format_rat(y),
            tolerance: format_rat(&step),
            gap: format_rat(&gap),
        });
    }
    let mut samples = 0;
    let mut counterwitnesses = Vec::new();
    for k in 1..16 {
        let offset = step * Rat::from_integer(k);
        if offset < gap || offset + gap >= radius {
            continue;
        }
        let right = y + offset;
        let left = y - offset;
        samples += 2;
        if !seq.iter().any(|b| *b <= right && right < b + radius) {
            counterwitnesses.push(Counterwitness { side: Side::Right, point: right });
        }
        if !seq.iter().any(|b| b - radius < left && left <= *b) {
            counterwitnesses.push(Counterwitness { side: Side::Left, point: left });
        }
    }
    Ok(CoverVerdict {
        samples,
        stripe: gap,
        counterwitnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpm::rational::{int, rat};

    #[test]
    fn harmonic_sequence_covers() {
        let seq: Vec<Rat> = (1..=64).map(|m| rat(1, m)).collect();
        let v = cover_fact_check(&int(0), &seq, 2).unwrap();
        assert!(v.covered(), "{:?}", v.counterwitnesses);
        assert!(v.samples > 0);
    }

    #[test]
    fn constant_sequence_covers() {
        let v = cover_fact_check(&int(0), &[int(0)], 3).unwrap();
        assert!(v.covered());
        assert_eq!(v.samples, 30);
    }

    #[test]
    fn far_sequence_is_refused() {
        let seq = vec![rat(1, 8), rat(1, 4), int(1)];
        assert!(matches!(cover_fact_check(&int(0), &seq, 4), Err(Error::NonConvergent { .. })));
    }

    #[test]
    fn stripe_skips_samples_the_prefix_cannot_decide() {
        let seq: Vec<Rat> = (1..=64).map(|m| rat(1, m)).collect();
        let v = cover_fact_check(&int(0), &seq, 2).unwrap();
        assert_eq!(v.stripe, rat(1, 64));
        assert_eq!(v.samples, 28);
    }
}
