use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::CofSet;

/// The entourage `(≤ or ℕ×ℕ) ∩ ⋂_{p∈S} T_p` on ℕ, where
/// `T_p = ({p} × ℕ) ∪ (ℕ × (ℕ ∖ {p}))`.
///
/// `(x, y)` belongs to it iff `x ≤ y` (when `≤` participates) and
/// `y ∉ S or y = x`: a punctured point can only be reached from itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymEntourage {
    pub with_leq: bool,
    pub punctures: BTreeSet<u64>,
}

impl SymEntourage {
    pub fn new(with_leq: bool, punctures: impl IntoIterator<Item = u64>) -> Self {
        let punctures: BTreeSet<u64> = punctures.into_iter().collect();
        assert!(!punctures.contains(&0), "punctures are natural numbers");
        SymEntourage { with_leq, punctures }
    }

    /// The order `≤` itself.
    pub fn leq() -> Self {
        Self::new(true, [])
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        (!self.with_leq || x <= y) && (y == x || !self.punctures.contains(&y))
    }

    /// The intersection of two base entourages is again one.
    pub fn intersect(&self, other: &Self) -> Self {
        SymEntourage {
            with_leq: self.with_leq || other.with_leq,
            punctures: &self.punctures | &other.punctures,
        }
    }

    /// `self ⊆ other`.
    pub fn is_finer_than(&self, other: &Self) -> bool {
        (self.with_leq || !other.with_leq) && other.punctures.is_subset(&self.punctures)
    }

    fn unpunctured(&self) -> CofSet {
        CofSet::cofinite_without(self.punctures.iter().copied())
    }

    /// `e(a) = a ∪ ([min a, ∞) ∖ S)` with `≤`, `a ∪ (ℕ ∖ S)` without.
    pub fn image(&self, a: &CofSet) -> Result<CofSet> {
        let lo = a.least().ok_or(Error::EmptySet)?;
        let reach = if self.with_leq {
            CofSet::ray(lo).intersection(&self.unpunctured())
        } else {
            self.unpunctured()
        };
        Ok(a.union(&reach))
    }

    /// `e⁻¹(a)`: `a` together with every point below some unpunctured member
    /// of `a` (with `≤`), or everything if `a` has an unpunctured member (without).
    pub fn preimage(&self, a: &CofSet) -> Result<CofSet> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let free = a.intersection(&self.unpunctured());
        let below = if free.is_empty() {
            CofSet::empty()
        } else if !self.with_leq {
            CofSet::naturals()
        } else {
            match free.greatest() {
                Some(top) => CofSet::interval(1, top),
                None => CofSet::naturals(),
            }
        };
        Ok(a.union(&below))
    }

    /// Image under the symmetric part `e ∩ e⁻¹`: with `≤` this is the
    /// identity; without, unpunctured points are all related.
    pub fn sym_image(&self, a: &CofSet) -> Result<CofSet> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if self.with_leq || a.intersection(&self.unpunctured()).is_empty() {
            Ok(a.clone())
        } else {
            Ok(a.union(&self.unpunctured()))
        }
    }
}

impl fmt::Debug for SymEntourage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymEntourage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.with_leq { "<=" } else { "NxN" };
        let s: Vec<String> = self.punctures.iter().map(u64::to_string).collect();
        write!(f, "{head} & T[{}]", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_image(e: &SymEntourage, a: &CofSet, n: u64) -> BTreeSet<u64> {
        (1..=n)
            .filter(|&y| a.truncate(n).iter().any(|&x| e.contains(x, y)))
            .collect()
    }

    #[test]
    fn image_examples() {
        let leq = SymEntourage::leq();
        assert_eq!(leq.image(&CofSet::singleton(1)).unwrap(), CofSet::naturals());
        assert_eq!(leq.preimage(&CofSet::singleton(1)).unwrap(), CofSet::singleton(1));
        assert_eq!(leq.preimage(&CofSet::ray(7)).unwrap(), CofSet::naturals());
        let e = SymEntourage::new(true, [2, 3]);
        assert_eq!(e.image(&CofSet::singleton(1)).unwrap(), CofSet::cofinite_without([2, 3]));
        assert!(e.image(&CofSet::empty()).is_err());
        assert!(e.preimage(&CofSet::empty()).is_err());
    }

    #[test]
    fn punctured_point_isolated_from_below() {
        for x in 1..20 {
            let e = SymEntourage::new(true, [x]);
            assert_eq!(e.preimage(&CofSet::singleton(x)).unwrap(), CofSet::singleton(x));
        }
    }

    #[test]
    fn images_agree_with_pairwise_membership() {
        let sets = [
            CofSet::singleton(1),
            CofSet::finite([3, 9]),
            CofSet::ray(5),
            CofSet::cofinite_without([1, 4]),
            CofSet::finite([2]),
        ];
        for leq in [true, false] {
            for s in [vec![], vec![2], vec![2, 3, 9], vec![1, 5]] {
                let e = SymEntourage::new(leq, s);
                for a in &sets {
                    let n = 40;
                    let got: BTreeSet<u64> = e.image(a).unwrap().truncate(n);
                    assert_eq!(got, brute_image(&e, a, n), "{e} {a}");
                }
            }
        }
    }

    #[test]
    fn intersection_and_order() {
        let a = SymEntourage::new(false, [1]);
        let b = SymEntourage::new(true, [2]);
        let c = a.intersect(&b);
        assert!(c.is_finer_than(&a) && c.is_finer_than(&b));
        assert!(!a.is_finer_than(&b));
        for x in 1..10 {
            for y in 1..10 {
                assert_eq!(c.contains(x, y), a.contains(x, y) && b.contains(x, y));
            }
        }
    }
}
