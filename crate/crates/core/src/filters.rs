//! Filters on finite quasi-uniform spaces and their stability notions.
//!
//! Every filter on a finite set is principal, so a filter is stored as its
//! least member `gen`. The predicates below are all antitone in the
//! entourage, and the entourages of a finite space have the least element
//! `M`, so "for every entourage U" is decided by the single case `U = M`.

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::relcore::{nonempty_subsets, subsets_of, Direction, PointSet, QUSpace, Relation};
use crate::stability;

/// Subspaces with more points than this are handled through their maximal
/// Cauchy filters only when searching for non-convergent Cauchy filters.
const CAUCHY_ENUMERATION_LIMIT: usize = 12;

/// The principal filter `{A : A ⊇ gen}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PFilter {
    gen: PointSet,
}

impl PFilter {
    pub fn new(gen: PointSet) -> Result<Self> {
        if gen.is_empty() {
            Err(Error::EmptySet)
        } else {
            Ok(PFilter { gen })
        }
    }

    /// The filter of all supersets of `{x}`.
    pub fn point(n: usize, x: usize) -> Self {
        PFilter {
            gen: PointSet::singleton(n, x),
        }
    }

    /// Every filter on an `n`-point set, in mask order of the generator.
    pub fn all(n: usize) -> impl Iterator<Item = PFilter> {
        nonempty_subsets(n).map(|gen| PFilter { gen })
    }

    pub fn gen(&self) -> &PointSet {
        &self.gen
    }

    pub fn into_gen(self) -> PointSet {
        self.gen
    }

    pub fn contains(&self, a: &PointSet) -> bool {
        a.is_superset(&self.gen)
    }

    /// `self` is coarser than `other` (every member of `self` is in `other`).
    pub fn is_coarser_than(&self, other: &PFilter) -> bool {
        self.gen.is_superset(&other.gen)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityProfile {
    pub stable: bool,
    pub conj_stable: bool,
    pub doubly_stable: bool,
    pub s_stable: bool,
    pub s_cauchy: bool,
}

/// `U_ℱ = U⁻¹(gen) ∩ U(gen)`, the intersection over all members of the
/// filter, which is attained at the least member.
pub fn u_sub_f(u: &Relation, f: &PFilter) -> PointSet {
    u.preimage(&f.gen).intersection(&u.image(&f.gen))
}

pub fn stability_profile(space: &QUSpace, f: &PFilter) -> StabilityProfile {
    let m = space.min_entourage();
    let gen = &f.gen;
    // ⋂_{F∈ℱ} U(F) = U(gen); membership in ℱ means containing gen.
    let stable = m.image(gen).is_superset(gen);
    let conj_stable = m.preimage(gen).is_superset(gen);
    let doubly_stable = u_sub_f(m, f).is_superset(gen);
    let sym = m.symmetrize();
    let s_stable = sym.image(gen).is_superset(gen);
    let s_cauchy = gen.iter().all(|x| gen.is_subset(sym.row(x)));
    StabilityProfile {
        stable,
        conj_stable,
        doubly_stable,
        s_stable,
        s_cauchy,
    }
}

/// The 2-envelope, generated by `{U⁻¹(F) ∩ U(F)}`; least member at `U = M`, `F = gen`.
pub fn two_envelope(space: &QUSpace, f: &PFilter) -> PFilter {
    PFilter {
        gen: u_sub_f(space.min_entourage(), f),
    }
}

pub fn is_two_round(space: &QUSpace, f: &PFilter) -> bool {
    two_envelope(space, f) == *f
}

/// `ℱ_𝒰`, generated by `{U_ℱ : U ∈ 𝒰}`.
///
/// Computed without reference to `M`: the entourage filter is generated by
/// finite intersections of base relations, and the generator of `ℱ_𝒰` is
/// the intersection of `U_ℱ` over all of them.
pub fn f_sub_u(space: &QUSpace, f: &PFilter) -> PFilter {
    let base = space.base();
    let n = space.size();
    let mut gen = PointSet::full(n);
    if base.len() <= 10 {
        for mask in 1u32..1 << base.len() {
            let u = base
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(Relation::full(n), |acc, (_, r)| acc.intersect(r).expect("same ground"));
            gen.intersect_with(&u_sub_f(&u, f));
        }
    } else {
        // Intersections of more base members only shrink `U_ℱ`, so the
        // intersection of the whole base is the one that matters.
        let all = base
            .iter()
            .fold(Relation::full(n), |acc, r| acc.intersect(r).expect("same ground"));
        gen.intersect_with(&u_sub_f(&all, f));
    }
    PFilter { gen }
}

/// Adherence of `f` in τ(𝒰) (forward) or τ(𝒰⁻¹) (conjugate): the closure of `gen`.
pub fn cluster_points(space: &QUSpace, f: &PFilter, direction: Direction) -> PointSet {
    space.closure(&f.gen, direction)
}

/// `C(ℱ)`, the points clustering in both directions.
pub fn double_cluster_points(space: &QUSpace, f: &PFilter) -> PointSet {
    cluster_points(space, f, Direction::Forward)
        .intersection(&cluster_points(space, f, Direction::Conjugate))
}

/// Limits of `f` in the given topology: points whose least neighbourhood lies in `f`.
/// All limits are returned; in a non-T₀ space there can be several.
pub fn limits(space: &QUSpace, f: &PFilter, direction: Direction) -> PointSet {
    PointSet::from_points(
        space.size(),
        (0..space.size()).filter(|&x| f.gen.is_subset(space.min_neighbourhood(x, direction))),
    )
}

/// Limits in τ(𝒰ˢ).
pub fn symmetric_limits(space: &QUSpace, f: &PFilter) -> PointSet {
    limits(space, f, Direction::Forward).intersection(&limits(space, f, Direction::Conjugate))
}

/// `gen_f × gen_g ⊆ M`.
pub fn is_cauchy_pair(space: &QUSpace, f: &PFilter, g: &PFilter) -> bool {
    let m = space.min_entourage();
    f.gen.iter().all(|x| g.gen.is_subset(m.row(x)))
}

/// `(f, g)` lies in every `U_D`, i.e. in `M_D`.
pub fn is_generalized_cauchy_pair(space: &QUSpace, f: &PFilter, g: &PFilter) -> bool {
    stability::in_double(space.min_entourage(), f.gen(), g.gen())
}

/// A 𝒰ˢ-Cauchy filter that does not converge in τ(𝒰ˢ), if one exists.
///
/// A principal filter is 𝒰ˢ-Cauchy exactly when its generator lies in one
/// class of `Mˢ`. Shrinking the generator keeps convergence, so for large
/// classes only the class itself (the coarsest Cauchy filter on it) is tried.
pub fn bicompleteness_witness(space: &QUSpace) -> Option<PFilter> {
    cauchy_without_limit(space, |f| symmetric_limits(space, f))
}

pub fn is_bicomplete(space: &QUSpace) -> bool {
    bicompleteness_witness(space).is_none()
}

/// A 𝒰ˢ-Cauchy filter without a τ(𝒰)-limit, if one exists.
pub fn half_completeness_witness(space: &QUSpace) -> Option<PFilter> {
    cauchy_without_limit(space, |f| limits(space, f, Direction::Forward))
}

pub fn is_half_complete(space: &QUSpace) -> bool {
    half_completeness_witness(space).is_none()
}

fn cauchy_without_limit(
    space: &QUSpace,
    limits_of: impl Fn(&PFilter) -> PointSet,
) -> Option<PFilter> {
    for class in space.t0_classes() {
        if class.len() > CAUCHY_ENUMERATION_LIMIT {
            let f = PFilter { gen: class };
            if limits_of(&f).is_empty() {
                return Some(f);
            }
            continue;
        }
        for gen in subsets_of(&class).filter(|s| !s.is_empty()) {
            let f = PFilter { gen };
            if limits_of(&f).is_empty() {
                return Some(f);
            }
        }
    }
    None
}

/// Whether every member of `f` meets `a`.
pub fn check_filterbase_trace(f: &PFilter, a: &PointSet) -> bool {
    f.gen.intersects(a)
}

/// Generators of every filter of `space`, in canonical order.
fn all_filters(space: &QUSpace) -> Vec<PFilter> {
    PFilter::all(space.size()).collect()
}

fn per_filter(space: &QUSpace, exec: Exec, check: impl Fn(&PFilter) -> Audit + Sync + Send) -> Audit {
    let filters = all_filters(space);
    Audit::merged(exec.map(&filters, check))
}

/// Stable filters on a subspace generate stable filters on the whole space.
pub fn audit_subspace_stability(space: &QUSpace, exec: Exec) -> Audit {
    let subspaces: Vec<PointSet> = nonempty_subsets(space.size()).collect();
    Audit::merged(exec.map(&subspaces, |a| {
        let mut audit = Audit::new();
        let sub = space.subspace(a).expect("nonempty subspace");
        let members: Vec<usize> = a.iter().collect();
        for f in PFilter::all(a.len()) {
            if !stability_profile(&sub, &f).stable {
                continue;
            }
            let lifted = PFilter {
                gen: PointSet::from_points(space.size(), f.gen.iter().map(|i| members[i])),
            };
            audit.check(stability_profile(space, &lifted).stable, "stable on subspace implies stable", || {
                json!({ "subspace": a, "filter": lifted })
            });
        }
        audit
    }))
}

/// The 2-envelope is idempotent and keeps both adherence sets.
pub fn audit_two_envelope(space: &QUSpace, exec: Exec) -> Audit {
    per_filter(space, exec, |f| {
        let mut audit = Audit::new();
        let d = two_envelope(space, f);
        audit.check(two_envelope(space, &d) == d, "two-envelope idempotent", || json!({ "filter": f }));
        for dir in [Direction::Forward, Direction::Conjugate] {
            audit.check(
                cluster_points(space, &d, dir) == cluster_points(space, f, dir),
                "cluster set preserved",
                || json!({ "filter": f, "direction": dir }),
            );
        }
        audit.check(
            double_cluster_points(space, &d) == double_cluster_points(space, f),
            "double cluster set preserved",
            || json!({ "filter": f }),
        );
        audit
    })
}

/// `ℱ_𝒰 = D_𝒰(ℱ)` for every (doubly stable) filter.
pub fn audit_envelope_identity(space: &QUSpace, exec: Exec) -> Audit {
    per_filter(space, exec, |f| {
        let mut audit = Audit::new();
        let lhs = f_sub_u(space, f);
        let rhs = two_envelope(space, f);
        audit.check(lhs == rhs, "f_sub_u equals two-envelope", || {
            json!({ "filter": f, "f_sub_u": lhs, "two_envelope": rhs })
        });
        audit
    })
}

/// `ℱ_𝒰` has a base of τ(𝒰ˢ)-open sets: its generator is its own `Mˢ`-interior.
pub fn audit_open_base(space: &QUSpace, exec: Exec) -> Audit {
    let sym = space.min_symmetric();
    per_filter(space, exec, |f| {
        let mut audit = Audit::new();
        let gen = f_sub_u(space, f).into_gen();
        let interior = PointSet::from_points(
            space.size(),
            (0..space.size()).filter(|&x| sym.row(x).is_subset(&gen)),
        );
        audit.check(interior == gen, "f_sub_u generator is symmetric-open", || {
            json!({ "filter": f, "generator": gen, "interior": interior })
        });
        audit
    })
}

/// Every filter on a finite (hence totally bounded) space is doubly stable,
/// and the profile implications hold.
pub fn audit_totally_bounded(space: &QUSpace, exec: Exec) -> Audit {
    per_filter(space, exec, |f| {
        let mut audit = Audit::new();
        let p = stability_profile(space, f);
        audit.check(p.doubly_stable, "doubly stable", || json!({ "filter": f }));
        audit.check(
            p.doubly_stable == (p.stable && p.conj_stable)
                && (!p.s_cauchy || p.s_stable)
                && (!p.s_stable || p.doubly_stable),
            "profile implications",
            || json!({ "filter": f, "profile": p }),
        );
        audit
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> QUSpace {
        QUSpace::from_base(2, vec![Relation::from_pairs(2, [(0, 1)])]).unwrap()
    }

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().map(|p| p - 1))
    }

    fn filt(n: usize, pts: &[usize]) -> PFilter {
        PFilter::new(set(n, pts)).unwrap()
    }

    #[test]
    fn empty_generator_rejected() {
        assert!(matches!(PFilter::new(PointSet::empty(3)), Err(Error::EmptySet)));
        assert!(filt(3, &[1]).contains(&set(3, &[1, 2])));
        assert!(!filt(3, &[1]).contains(&set(3, &[2])));
    }

    #[test]
    fn u_sub_f_examples() {
        let f = filt(3, &[1, 3]);
        assert_eq!(u_sub_f(&Relation::identity(3), &f), *f.gen());
        assert_eq!(u_sub_f(&Relation::full(3), &f), PointSet::full(3));
        let m = Relation::from_pairs(2, [(0, 1)]);
        assert_eq!(u_sub_f(&m, &filt(2, &[2])), set(2, &[2]));
    }

    #[test]
    fn profile_examples() {
        let s = sierpinski();
        for f in PFilter::all(2) {
            assert!(stability_profile(&s, &f).doubly_stable);
        }
        let p = stability_profile(&s, &filt(2, &[1, 2]));
        assert!(p.stable && p.conj_stable && p.doubly_stable && p.s_stable);
        assert!(!p.s_cauchy);
        let indiscrete = QUSpace::from_base(3, vec![Relation::full(3)]).unwrap();
        assert!(PFilter::all(3).all(|f| stability_profile(&indiscrete, &f).s_cauchy));
    }

    #[test]
    fn envelope_examples() {
        let s = sierpinski();
        assert_eq!(two_envelope(&s, &filt(2, &[1])), filt(2, &[1]));
        assert!(is_two_round(&s, &filt(2, &[2])));
        let id = QUSpace::from_base(3, vec![Relation::identity(3)]).unwrap();
        for f in PFilter::all(3) {
            assert!(is_two_round(&id, &f));
            assert_eq!(f_sub_u(&id, &f), f);
        }
        let whole = filt(2, &[1, 2]);
        assert_eq!(f_sub_u(&s, &whole), whole);
    }

    #[test]
    fn cluster_examples() {
        let s = sierpinski();
        let f = filt(2, &[2]);
        assert_eq!(cluster_points(&s, &f, Direction::Forward), set(2, &[1, 2]));
        assert_eq!(cluster_points(&s, &f, Direction::Conjugate), set(2, &[2]));
        assert_eq!(double_cluster_points(&s, &f), set(2, &[2]));
        let whole = filt(2, &[1, 2]);
        assert_eq!(double_cluster_points(&s, &whole), PointSet::full(2));
    }

    #[test]
    fn cauchy_pair_examples() {
        let s = sierpinski();
        assert!(is_cauchy_pair(&s, &filt(2, &[1]), &filt(2, &[2])));
        assert!(!is_cauchy_pair(&s, &filt(2, &[2]), &filt(2, &[1])));
        assert!(is_cauchy_pair(&s, &filt(2, &[2]), &filt(2, &[2])));
        assert!(is_generalized_cauchy_pair(&s, &filt(2, &[1]), &filt(2, &[1])));
        let full = QUSpace::from_base(2, vec![Relation::full(2)]).unwrap();
        assert!(PFilter::all(2).all(|f| PFilter::all(2).all(|g| is_cauchy_pair(&full, &f, &g))));
    }

    #[test]
    fn completeness_examples() {
        let id = QUSpace::from_base(3, vec![Relation::identity(3)]).unwrap();
        assert!(is_half_complete(&id));
        assert!(is_bicomplete(&sierpinski()));
        let full = QUSpace::from_base(3, vec![Relation::full(3)]).unwrap();
        assert!(is_bicomplete(&full) && is_half_complete(&full));
    }

    #[test]
    fn trace_examples() {
        assert!(check_filterbase_trace(&filt(2, &[1]), &PointSet::full(2)));
        assert!(!check_filterbase_trace(&filt(2, &[1]), &set(2, &[2])));
    }

    #[test]
    fn filter_audits_pass_on_sierpinski() {
        let s = sierpinski();
        for audit in [
            audit_subspace_stability(&s, Exec::Sequential),
            audit_two_envelope(&s, Exec::Sequential),
            audit_envelope_identity(&s, Exec::Sequential),
            audit_open_base(&s, Exec::Sequential),
            audit_totally_bounded(&s, Exec::Sequential),
        ] {
            assert!(audit.passed(), "{audit:?}");
            assert!(audit.cases > 0);
        }
    }
}
