use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

/// A finite or cofinite subset of ℕ = {1, 2, 3, ...}.
///
/// `Finite(e)` is the set `e`; `Cofinite(e)` is `ℕ ∖ e`. The two variants
/// never describe the same set, so derived equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CofSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

use CofSet::{Cofinite, Finite};

fn check_points(set: &BTreeSet<u64>) {
    assert!(!set.contains(&0), "0 is not a natural number here");
}

impl CofSet {
    pub fn empty() -> Self {
        Finite(BTreeSet::new())
    }

    pub fn naturals() -> Self {
        Cofinite(BTreeSet::new())
    }

    pub fn finite(points: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = points.into_iter().collect();
        check_points(&set);
        Finite(set)
    }

    /// `ℕ ∖ points`.
    pub fn cofinite_without(points: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = points.into_iter().collect();
        check_points(&set);
        Cofinite(set)
    }

    pub fn singleton(x: u64) -> Self {
        Self::finite([x])
    }

    /// `[lo, hi]`, empty when `lo > hi`.
    pub fn interval(lo: u64, hi: u64) -> Self {
        Self::finite(lo.max(1)..=hi)
    }

    /// `[lo, ∞)`.
    pub fn ray(lo: u64) -> Self {
        Self::cofinite_without(1..lo.max(1))
    }

    pub fn contains(&self, x: u64) -> bool {
        match self {
            Finite(e) => e.contains(&x),
            Cofinite(e) => x >= 1 && !e.contains(&x),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Finite(e) if e.is_empty())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_cofinite(&self) -> bool {
        matches!(self, Cofinite(_))
    }

    pub fn complement(&self) -> Self {
        match self {
            Finite(e) => Cofinite(e.clone()),
            Cofinite(e) => Finite(e.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Finite(f), Cofinite(e)) | (Cofinite(e), Finite(f)) => Cofinite(e - f),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Finite(f), Cofinite(e)) | (Cofinite(e), Finite(f)) => Finite(f - e),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.intersection(other).is_empty()
    }

    pub fn least(&self) -> Option<u64> {
        match self {
            Finite(e) => e.first().copied(),
            Cofinite(e) => (1..).find(|x| !e.contains(x)),
        }
    }

    /// The largest member of a finite nonempty set.
    pub fn greatest(&self) -> Option<u64> {
        match self {
            Finite(e) => e.last().copied(),
            Cofinite(_) => None,
        }
    }

    /// Members in `[1, bound]`.
    pub fn truncate(&self, bound: u64) -> BTreeSet<u64> {
        match self {
            Finite(e) => e.range(..=bound).copied().collect(),
            Cofinite(e) => (1..=bound).filter(|x| !e.contains(x)).collect(),
        }
    }
}

impl fmt::Debug for CofSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CofSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |e: &BTreeSet<u64>| e.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Finite(e) => write!(f, "{{{}}}", list(e)),
            Cofinite(e) if e.is_empty() => write!(f, "N"),
            Cofinite(e) => write!(f, "N\\{{{}}}", list(e)),
        }
    }
}

impl Serialize for CofSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const N: u64 = 500;

    fn arb_cofset() -> impl Strategy<Value = CofSet> {
        (any::<bool>(), proptest::collection::btree_set(1u64..40, 0..8)).prop_map(|(fin, e)| {
            if fin {
                CofSet::finite(e)
            } else {
                CofSet::cofinite_without(e)
            }
        })
    }

    #[test]
    fn basics() {
        assert_eq!(CofSet::ray(3).least(), Some(3));
        assert!(CofSet::ray(3).contains(1000) && !CofSet::ray(3).contains(2));
        assert_eq!(CofSet::interval(2, 4).greatest(), Some(4));
        assert!(CofSet::interval(5, 4).is_empty());
        assert_eq!(CofSet::naturals().to_string(), "N");
        assert_eq!(CofSet::cofinite_without([2]).to_string(), "N\\{2}");
        assert!(CofSet::naturals().complement().is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn algebra_matches_truncation(a in arb_cofset(), b in arb_cofset()) {
            let (ta, tb) = (a.truncate(N), b.truncate(N));
            prop_assert_eq!(a.union(&b).truncate(N), &ta | &tb);
            prop_assert_eq!(a.intersection(&b).truncate(N), &ta & &tb);
            prop_assert_eq!(a.difference(&b).truncate(N), &ta - &tb);
            let all: BTreeSet<u64> = (1..=N).collect();
            prop_assert_eq!(a.complement().truncate(N), &all - &ta);
            prop_assert_eq!(a.is_subset(&b), ta.is_subset(&tb));
        }

        #[test]
        fn de_morgan_and_involution(a in arb_cofset(), b in arb_cofset()) {
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert_eq!(
                a.union(&b).complement(),
                a.complement().intersection(&b.complement())
            );
            prop_assert_eq!(
                a.intersection(&b).complement(),
                a.complement().union(&b.complement())
            );
        }
    }
}
