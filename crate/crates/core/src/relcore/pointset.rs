use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

/// A subset of a finite universe `{0, .., n-1}`, stored as a bitset.
///
/// Sets over different universes never compare equal. Ordering is by the
/// numeric value of the bit mask, which is the canonical order used for
/// every enumeration and report in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: u32,
    words: SmallVec<[u64; 2]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl PointSet {
    pub fn empty(n: usize) -> Self {
        PointSet {
            n: n as u32,
            words: smallvec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = n.saturating_sub(lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    pub fn from_points(n: usize, points: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for x in points {
            s.insert(x);
        }
        s
    }

    /// Builds the set whose members are the set bits of `mask`. Bits at or
    /// above `n` are ignored.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut s = Self::empty(n);
        s.words[0] = mask;
        s.trim();
        s
    }

    /// The bit mask of the set, if the universe fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        (self.n as usize <= WORD).then(|| self.words[0])
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n as usize, "point {x} outside universe {}", self.n);
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.n as usize {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.n as usize && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.n as usize)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                (rest != 0).then(|| {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    i * WORD + bit
                })
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n as usize).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Members as 1-based point numbers, the convention of space files and reports.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|x| x + 1).collect()
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        self.check(other);
        PointSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn check(&self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "point sets over different universes");
    }

    fn trim(&mut self) {
        let n = self.n as usize;
        let last = self.words.len() - 1;
        let bits = n - last * WORD;
        if bits < WORD {
            self.words[last] &= (1u64 << bits) - 1;
        }
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            self.words
                .iter()
                .rev()
                .cmp(other.words.iter().rev())
        })
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the sorted list of 1-based members.
impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|x| x + 1))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "}}")
    }
}

/// All nonempty subsets of an `n`-point universe in mask order.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = PointSet> {
    assert!(n < WORD, "subset enumeration needs fewer than 64 points");
    (1u64..1 << n).map(move |m| PointSet::from_mask(n, m))
}

/// All subsets (including the empty one) of `base`, in mask order of `base`'s members.
pub fn subsets_of(base: &PointSet) -> impl Iterator<Item = PointSet> {
    let members: Vec<usize> = base.iter().collect();
    assert!(members.len() < WORD);
    let n = base.universe();
    (0u64..1 << members.len()).map(move |m| {
        PointSet::from_points(
            n,
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &x)| x),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        for n in [1, 5, 63, 64, 65, 130] {
            let f = PointSet::full(n);
            assert_eq!(f.len(), n);
            assert!(f.complement().is_empty());
            assert!(PointSet::empty(n).complement().is_full());
        }
    }

    #[test]
    fn mask_round_trip_and_order() {
        let a = PointSet::from_mask(4, 0b0110);
        assert_eq!(a.to_one_based(), vec![2, 3]);
        assert_eq!(a.to_mask(), Some(6));
        assert!(PointSet::from_mask(4, 5) < PointSet::from_mask(4, 6));
        assert_eq!(PointSet::from_mask(3, 0xff), PointSet::full(3));
        assert_eq!(a.to_string(), "{2,3}");
    }

    #[test]
    fn wide_sets_order_by_high_word() {
        let lo = PointSet::singleton(100, 3);
        let hi = PointSet::singleton(100, 70);
        assert!(lo < hi);
        assert_eq!(hi.first(), Some(70));
        assert_eq!(hi.iter().collect::<Vec<_>>(), vec![70]);
    }

    #[test]
    fn subsets_of_counts() {
        let b = PointSet::from_points(6, [1, 4]);
        let all: Vec<_> = subsets_of(&b).collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|s| s.is_subset(&b)));
        assert_eq!(nonempty_subsets(3).count(), 7);
    }

    proptest! {
        #[test]
        fn set_laws(a in any::<u16>(), b in any::<u16>()) {
            let x = PointSet::from_mask(16, a as u64);
            let y = PointSet::from_mask(16, b as u64);
            prop_assert_eq!(x.union(&y).to_mask(), Some((a | b) as u64));
            prop_assert_eq!(x.intersection(&y).to_mask(), Some((a & b) as u64));
            prop_assert_eq!(x.difference(&y).to_mask(), Some((a & !b) as u64));
            prop_assert_eq!(x.is_subset(&y), a & !b == 0);
            prop_assert_eq!(x.len(), a.count_ones() as usize);
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
            let back = PointSet::from_points(16, x.iter());
            prop_assert_eq!(back, x);
        }
    }
}
