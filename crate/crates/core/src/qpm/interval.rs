use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::rational::{dyadic, format_rat, require_positive, Rat};

/// A bounded nonempty interval; a point is a closed interval with equal ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub lo_closed: bool,
    pub hi: Rat,
    pub hi_closed: bool,
}

impl Interval {
    /// `None` when the described interval is empty.
    pub fn new(lo: Rat, lo_closed: bool, hi: Rat, hi_closed: bool) -> Option<Self> {
        let nonempty = lo < hi || (lo == hi && lo_closed && hi_closed);
        nonempty.then_some(Interval { lo, lo_closed, hi, hi_closed })
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let above = *x > self.lo || (*x == self.lo && self.lo_closed);
        let below = *x < self.hi || (*x == self.hi && self.hi_closed);
        above && below
    }

    fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo, self.lo_closed),
            Ordering::Less => (other.lo, other.lo_closed),
            Ordering::Equal => (self.lo, self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi, self.hi_closed),
            Ordering::Greater => (other.hi, other.hi_closed),
            Ordering::Equal => (self.hi, self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, lo_closed, hi, hi_closed)
    }

    /// `self ∖ other` as at most two pieces.
    fn subtract(&self, other: &Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        // The part strictly below `other`.
        let below_hi = self.hi.min(other.lo);
        let below_closed = if other.lo < self.hi {
            !other.lo_closed
        } else if other.lo == self.hi {
            self.hi_closed && !other.lo_closed
        } else {
            self.hi_closed
        };
        if let Some(piece) = Interval::new(self.lo, self.lo_closed, below_hi, below_closed) {
            out.extend(piece.intersect(self));
        }
        // The part strictly above `other`.
        let above_lo = self.lo.max(other.hi);
        let above_closed = if other.hi > self.lo {
            !other.hi_closed
        } else if other.hi == self.lo {
            self.lo_closed && !other.hi_closed
        } else {
            self.lo_closed
        };
        if let Some(piece) = Interval::new(above_lo, above_closed, self.hi, self.hi_closed) {
            out.extend(piece.intersect(self));
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", format_rat(&self.lo));
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", format_rat(&self.lo), format_rat(&self.hi))
    }
}

/// A finite union of bounded rational intervals, kept sorted, disjoint and
/// with touching pieces merged, so equal sets have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    pieces: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(pieces: impl IntoIterator<Item = Interval>) -> Self {
        let mut pieces: Vec<Interval> = pieces.into_iter().collect();
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut out: Vec<Interval> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match out.last_mut() {
                Some(last) if piece.lo < last.hi || (piece.lo == last.hi && (last.hi_closed || piece.lo_closed)) => {
                    match piece.hi.cmp(&last.hi) {
                        Ordering::Greater => {
                            last.hi = piece.hi;
                            last.hi_closed = piece.hi_closed;
                        }
                        Ordering::Equal => last.hi_closed |= piece.hi_closed,
                        Ordering::Less => {}
                    }
                }
                _ => out.push(piece),
            }
        }
        IntervalSet { pieces: out }
    }

    pub fn interval(lo: Rat, lo_closed: bool, hi: Rat, hi_closed: bool) -> Self {
        Self::from_intervals(Interval::new(lo, lo_closed, hi, hi_closed))
    }

    pub fn closed(lo: Rat, hi: Rat) -> Self {
        Self::interval(lo, true, hi, true)
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        Self::interval(lo, false, hi, false)
    }

    pub fn point(x: Rat) -> Self {
        Self::closed(x, x)
    }

    pub fn points(xs: impl IntoIterator<Item = Rat>) -> Self {
        Self::from_intervals(xs.into_iter().map(|x| Interval::new(x, true, x, true).expect("point")))
    }

    pub fn pieces(&self) -> &[Interval] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.pieces.iter().chain(&other.pieces).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_intervals(
            self.pieces
                .iter()
                .flat_map(|a| other.pieces.iter().filter_map(move |b| a.intersect(b))),
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut rest = self.pieces.clone();
        for b in &other.pieces {
            rest = rest.iter().flat_map(|a| a.subtract(b)).collect();
        }
        Self::from_intervals(rest)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// `S_eps(A) = ⋃_{x∈A} [x, x + eps)` for `0 < eps ≤ 1`.
    pub fn sorgenfrey_image(&self, eps: &Rat) -> Result<Self> {
        check_ball_radius(eps)?;
        Ok(Self::from_intervals(self.pieces.iter().map(|p| Interval {
            lo: p.lo,
            lo_closed: p.lo_closed,
            hi: p.hi + eps,
            hi_closed: false,
        })))
    }

    /// `S_eps⁻¹(A) = ⋃_{x∈A} (x − eps, x]` for `0 < eps ≤ 1`.
    pub fn sorgenfrey_preimage(&self, eps: &Rat) -> Result<Self> {
        check_ball_radius(eps)?;
        Ok(Self::from_intervals(self.pieces.iter().map(|p| Interval {
            lo: p.lo - eps,
            lo_closed: false,
            hi: p.hi,
            hi_closed: p.hi_closed,
        })))
    }

    /// Closure in the lower-limit topology, `⋂_eps S_eps⁻¹(A)`: left ends close.
    pub fn lower_limit_closure(&self) -> Self {
        Self::from_intervals(self.pieces.iter().map(|p| Interval { lo_closed: true, ..p.clone() }))
    }

    /// Closure in the upper-limit topology, `⋂_eps S_eps(A)`: right ends close.
    pub fn upper_limit_closure(&self) -> Self {
        Self::from_intervals(self.pieces.iter().map(|p| Interval { hi_closed: true, ..p.clone() }))
    }

    /// Double cluster points of the principal filter of `A` under the
    /// Sorgenfrey quasi-metric.
    pub fn double_cluster(&self) -> Self {
        self.lower_limit_closure().intersection(&self.upper_limit_closure())
    }

    /// The smallest positive distance between consecutive pieces, if any.
    pub fn min_gap(&self) -> Option<Rat> {
        self.pieces.windows(2).map(|w| w[1].lo - w[0].hi).filter(|g| *g > Rat::from_integer(0)).min()
    }
}

fn check_ball_radius(eps: &Rat) -> Result<()> {
    require_positive(eps)?;
    if *eps > Rat::one() {
        return Err(Error::InvalidArgument(format!(
            "Sorgenfrey balls of radius {} > 1 are unbounded",
            format_rat(eps)
        )));
    }
    Ok(())
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.pieces.iter().map(Interval::to_string).collect();
        write!(f, "{}", parts.join(" u "))
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `F_n = ⋂_{F∈base} S⁻¹(F) ∩ ⋂_{F∈base} S(F)` at radius `2^{-n}`.
pub fn fn_sets(base: &[IntervalSet], n: u32) -> Result<IntervalSet> {
    check_base(base)?;
    let eps = dyadic(n);
    let mut acc: Option<IntervalSet> = None;
    for f in base {
        let both = f.sorgenfrey_preimage(&eps)?.intersection(&f.sorgenfrey_image(&eps)?);
        acc = Some(match acc {
            Some(a) => a.intersection(&both),
            None => both,
        });
    }
    Ok(acc.expect("nonempty base"))
}

/// Checks that `base` is a nonempty descending chain of nonempty sets.
pub fn check_base(base: &[IntervalSet]) -> Result<()> {
    if base.is_empty() || base.iter().any(IntervalSet::is_empty) {
        return Err(Error::EmptySet);
    }
    match base.windows(2).position(|w| !w[1].is_subset(&w[0])) {
        Some(i) => Err(Error::NonDescending(i + 1)),
        None => Ok(()),
    }
}

/// Query `{x ∈ e : S_eps⁻¹(x) ∩ e_m = ∅}`, i.e. `e ∖ S_eps(e_m)`.
pub fn a_query(e: &IntervalSet, e_m: &IntervalSet, n: u32) -> Result<IntervalSet> {
    Ok(e.difference(&e_m.sorgenfrey_image(&dyadic(n))?))
}

/// Query `{x ∈ e : S_eps(x) ∩ e_m = ∅}`, i.e. `e ∖ S_eps⁻¹(e_m)`.
pub fn b_query(e: &IntervalSet, e_m: &IntervalSet, n: u32) -> Result<IntervalSet> {
    Ok(e.difference(&e_m.sorgenfrey_preimage(&dyadic(n))?))
}

/// Descending bases with known double cluster sets.
pub fn catalogued_bases() -> Vec<(&'static str, Vec<IntervalSet>)> {
    use super::rational::{int, rat};
    let half_open = |lo, hi| IntervalSet::interval(lo, true, hi, false);
    let open_closed = |lo, hi| IntervalSet::interval(lo, false, hi, true);
    vec![
        ("point", vec![IntervalSet::point(int(0))]),
        ("unit", vec![IntervalSet::closed(int(0), int(1))]),
        (
            "shrinking",
            vec![
                IntervalSet::closed(int(0), int(1)),
                IntervalSet::closed(int(0), rat(1, 2)),
                IntervalSet::closed(int(0), rat(1, 4)),
            ],
        ),
        (
            "split",
            vec![
                IntervalSet::closed(int(0), int(2)),
                half_open(int(0), int(1)).union(&open_closed(int(1), int(2))),
            ],
        ),
        (
            "open halves",
            vec![
                IntervalSet::open(int(0), int(1)).union(&IntervalSet::open(int(1), int(2))),
                IntervalSet::open(int(0), int(1)),
            ],
        ),
        (
            "with point",
            vec![
                IntervalSet::open(int(0), int(1)).union(&IntervalSet::point(int(3))),
                IntervalSet::open(int(0), rat(1, 2)).union(&IntervalSet::point(int(3))),
            ],
        ),
        (
            "scattered",
            vec![
                IntervalSet::closed(int(-1), int(1)),
                open_closed(rat(-1, 2), int(0)).union(&half_open(rat(1, 4), rat(1, 2))),
                open_closed(rat(-1, 4), int(0)).union(&half_open(rat(1, 4), rat(3, 8))),
            ],
        ),
    ]
}
