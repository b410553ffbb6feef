use std::fmt;

use serde::Serialize;

use crate::error::Result;

use super::{CofSet, SymEntourage};

/// The filters on ℕ the symbolic engine can reason about.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymFilter {
    /// Generated by `{ {1} ∪ G : G cofinite }`.
    GFilter,
    /// All cofinite sets.
    Cofinite,
    /// All supersets of a fixed nonempty set.
    Principal(CofSet),
}

impl SymFilter {
    pub fn contains(&self, a: &CofSet) -> bool {
        match self {
            SymFilter::GFilter => a.contains(1) && a.is_cofinite(),
            SymFilter::Cofinite => a.is_cofinite(),
            SymFilter::Principal(b) => b.is_subset(a),
        }
    }

    /// The `k`-th member of a decreasing base: `{1} ∪ [k, ∞)`, `[k, ∞)`, or the
    /// generator. Every member of the filter contains one of these.
    pub fn base_member(&self, k: u64) -> CofSet {
        match self {
            SymFilter::GFilter => CofSet::singleton(1).union(&CofSet::ray(k)),
            SymFilter::Cofinite => CofSet::ray(k),
            SymFilter::Principal(b) => b.clone(),
        }
    }

    /// `⋂ℱ`.
    pub fn kernel(&self) -> CofSet {
        match self {
            SymFilter::GFilter => CofSet::singleton(1),
            SymFilter::Cofinite => CofSet::empty(),
            SymFilter::Principal(b) => b.clone(),
        }
    }

    /// `⋂_{F∈ℱ} e(F)`.
    pub fn stable_core(&self, e: &SymEntourage) -> Result<CofSet> {
        self.limit_over_base(e, |e, b| e.image(b))
    }

    /// `⋂_{F∈ℱ} e⁻¹(F)`.
    pub fn conj_stable_core(&self, e: &SymEntourage) -> Result<CofSet> {
        self.limit_over_base(e, |e, b| e.preimage(b))
    }

    /// `U_ℱ = ⋂_{F∈ℱ} (e⁻¹(F) ∩ e(F))`.
    pub fn u_sub_f(&self, e: &SymEntourage) -> Result<CofSet> {
        self.limit_over_base(e, |e, b| Ok(e.preimage(b)?.intersection(&e.image(b)?)))
    }

    /// `⋂_{F∈ℱ} (e ∩ e⁻¹)(F)`, the core for the symmetrized entourage.
    pub fn sym_stable_core(&self, e: &SymEntourage) -> Result<CofSet> {
        self.limit_over_base(e, |e, b| e.sym_image(b))
    }

    pub fn is_stable(&self, e: &SymEntourage) -> Result<bool> {
        Ok(self.contains(&self.stable_core(e)?))
    }

    pub fn is_doubly_stable_at(&self, e: &SymEntourage) -> Result<bool> {
        Ok(self.contains(&self.u_sub_f(e)?))
    }

    /// Intersection of `value(base_member(k))` over all `k`.
    ///
    /// `value` is monotone, so the values decrease with `k`. Let `T` exceed
    /// every puncture and 1. For `k > T` the base member is `{1} ∪ [k, ∞)` or
    /// `[k, ∞)`, and the closed forms of image and preimage only compare
    /// points with `k` and with the punctures. Points `y ≤ T` are therefore
    /// decided the same way for every `k > T + 1`, while points `y > T` all
    /// behave like `T + 1`: either they stay in the value for every `k`, or
    /// each drops out once `k > y`. Evaluating at `T + 2` and `T + 3` thus
    /// determines the limit, and the two evaluations are cross-checked.
    fn limit_over_base(
        &self,
        e: &SymEntourage,
        value: impl Fn(&SymEntourage, &CofSet) -> Result<CofSet>,
    ) -> Result<CofSet> {
        if let SymFilter::Principal(b) = self {
            return value(e, b);
        }
        let t = e.punctures.iter().copied().max().unwrap_or(1).max(1) + 1;
        let first = value(e, &self.base_member(t + 2))?;
        let second = value(e, &self.base_member(t + 3))?;
        debug_assert!(second.is_subset(&first), "base values must decrease");
        let head = CofSet::interval(1, t);
        debug_assert_eq!(first.intersection(&head), second.intersection(&head));
        let tail = if second.contains(t + 1) {
            CofSet::ray(t + 1)
        } else {
            CofSet::empty()
        };
        Ok(first.intersection(&head).union(&tail))
    }
}

impl fmt::Debug for SymFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFilter::GFilter => write!(f, "G"),
            SymFilter::Cofinite => write!(f, "cofinite"),
            SymFilter::Principal(b) => write!(f, "principal({b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let g = SymFilter::GFilter;
        assert!(g.contains(&CofSet::cofinite_without([2, 3])));
        assert!(!g.contains(&CofSet::cofinite_without([1])));
        assert!(!g.contains(&CofSet::singleton(1)));
        assert!(SymFilter::Cofinite.contains(&CofSet::ray(9)));
        let p = SymFilter::Principal(CofSet::finite([2, 4]));
        assert!(p.contains(&CofSet::finite([2, 3, 4])) && !p.contains(&CofSet::singleton(2)));
    }

    #[test]
    fn u_sub_f_closed_forms() {
        for leq in [true, false] {
            for s in [vec![], vec![2], vec![1, 3, 7]] {
                let e = SymEntourage::new(leq, s.clone());
                let g = SymFilter::GFilter.u_sub_f(&e).unwrap();
                let expected = CofSet::singleton(1).union(&CofSet::cofinite_without(s.clone()));
                assert_eq!(g, expected, "{e}");
                assert!(SymFilter::GFilter.contains(&g));
                let c = SymFilter::Cofinite.u_sub_f(&e).unwrap();
                let expected = if leq { CofSet::empty() } else { CofSet::cofinite_without(s) };
                assert_eq!(c, expected, "{e}");
            }
        }
        let p = SymFilter::Principal(CofSet::naturals());
        assert_eq!(p.u_sub_f(&SymEntourage::leq()).unwrap(), CofSet::naturals());
    }

    #[test]
    fn cofinite_filter_is_not_stable_under_order() {
        assert!(!SymFilter::Cofinite.is_stable(&SymEntourage::leq()).unwrap());
        assert!(SymFilter::GFilter.is_stable(&SymEntourage::leq()).unwrap());
    }
}
