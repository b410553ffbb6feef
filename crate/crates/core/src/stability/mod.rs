//! The stability space `(S_D(X), 𝒰_D)` of doubly stable filters.
//!
//! For filters `ℱ, 𝒢` with least members `F, G` and an entourage `U`:
//! `(ℱ, 𝒢) ∈ U_+` iff `G ⊆ U(F)`, `(ℱ, 𝒢) ∈ U_−` iff `F ⊆ U⁻¹(G)`, and
//! `U_D = U_+ ∩ U_−`. A principal filter `𝒞_A` sits in `S_D(X)` as the point
//! with least member `A`, so `(𝒞_A, 𝒞_B) ∈ U_D` iff `(A, B) ∈ U_H`.

mod bicompletion;
mod checks;

pub use bicompletion::{bicompletion, Bicompletion};
pub use checks::*;

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filters::{self, PFilter};
use crate::hyperspace;
use crate::relcore::{nonempty_subsets, subsets_of, PointSet, QUSpace, Relation};

/// `(ℱ, 𝒢) ∈ U_+`: `⋂_{F∈ℱ} U(F) = U(gen_ℱ)` belongs to `𝒢`.
pub fn in_plus(u: &Relation, f: &PointSet, g: &PointSet) -> bool {
    g.is_subset(&u.image(f))
}

/// `(ℱ, 𝒢) ∈ U_−`: `⋂_{G∈𝒢} U⁻¹(G) = U⁻¹(gen_𝒢)` belongs to `ℱ`.
pub fn in_minus(u: &Relation, f: &PointSet, g: &PointSet) -> bool {
    f.is_subset(&u.preimage(g))
}

pub fn in_double(u: &Relation, f: &PointSet, g: &PointSet) -> bool {
    in_plus(u, f, g) && in_minus(u, f, g)
}

/// `(ℱ, 𝒢) ∈ U_⊕`: `U(F) ∈ 𝒢` for every member `F` of `ℱ`, evaluated over
/// all supersets of the least member.
pub fn in_oplus(u: &Relation, f: &PointSet, g: &PointSet) -> bool {
    let outside = f.complement();
    subsets_of(&outside).all(|extra| g.is_subset(&u.image(&f.union(&extra))))
}

/// `U_⊖ = ((U⁻¹)_⊕)⁻¹`: `U⁻¹(G) ∈ ℱ` for every member `G` of `𝒢`.
pub fn in_ominus(u: &Relation, f: &PointSet, g: &PointSet) -> bool {
    let outside = g.complement();
    subsets_of(&outside).all(|extra| f.is_subset(&u.preimage(&g.union(&extra))))
}

/// The base relations followed by `M` when `M` is not already among them.
pub fn generators_with_min(space: &QUSpace) -> (Vec<Relation>, usize) {
    let mut gens = space.base().to_vec();
    if !gens.contains(space.min_entourage()) {
        gens.push(space.min_entourage().clone());
    }
    let min_index = gens
        .iter()
        .position(|g| g == space.min_entourage())
        .expect("M present");
    (gens, min_index)
}

#[derive(Clone, Debug)]
pub struct StabilitySpace {
    base_space: QUSpace,
    points: Vec<PFilter>,
    generators: Vec<Relation>,
    min_index: usize,
    plus: Vec<Relation>,
    minus: Vec<Relation>,
    space: QUSpace,
}

impl StabilitySpace {
    /// Builds `S_D(X)` with base `{U_D}` over the base of `space` (and `M`).
    pub fn build(space: &QUSpace, cap: usize, exec: Exec) -> Result<Self> {
        let n = space.size();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "stability space ground",
                size: n,
                cap,
            });
        }
        // Every filter on a finite space is doubly stable, but the predicate
        // is evaluated rather than assumed.
        let points: Vec<PFilter> = PFilter::all(n)
            .filter(|f| filters::stability_profile(space, f).doubly_stable)
            .collect();
        let (generators, min_index) = generators_with_min(space);
        let k = points.len();
        let lift = |member: &(dyn Fn(&PointSet, &PointSet) -> bool + Sync)| {
            Relation::from_rows(exec.map(&points, |f| {
                PointSet::from_points(k, (0..k).filter(|&j| member(f.gen(), points[j].gen())))
            }))
        };
        let mut plus = vec![];
        let mut minus = vec![];
        let mut double = vec![];
        for u in &generators {
            let p = lift(&|f, g| in_plus(u, f, g));
            let m = lift(&|f, g| in_minus(u, f, g));
            double.push(p.intersect(&m)?);
            plus.push(p);
            minus.push(m);
        }
        Ok(StabilitySpace {
            base_space: space.clone(),
            space: QUSpace::from_base(k, double)?,
            points,
            generators,
            min_index,
            plus,
            minus,
        })
    }

    pub fn base_space(&self) -> &QUSpace {
        &self.base_space
    }

    pub fn points(&self) -> &[PFilter] {
        &self.points
    }

    pub fn generators(&self) -> &[Relation] {
        &self.generators
    }

    pub fn min_index(&self) -> usize {
        self.min_index
    }

    pub fn plus(&self) -> &[Relation] {
        &self.plus
    }

    pub fn minus(&self) -> &[Relation] {
        &self.minus
    }

    /// `(S_D(X), 𝒰_D)` as a quasi-uniform space.
    pub fn space(&self) -> &QUSpace {
        &self.space
    }

    pub fn index_of(&self, gen: &PointSet) -> Option<usize> {
        self.points.binary_search_by(|p| p.gen().cmp(gen)).ok()
    }
}

/// `ℱ` and `𝒢` are related both ways by every `U_D`.
pub fn ud_equivalent(space: &QUSpace, f: &PFilter, g: &PFilter) -> bool {
    let (gens, _) = generators_with_min(space);
    gens.iter()
        .all(|u| in_double(u, f.gen(), g.gen()) && in_double(u, g.gen(), f.gen()))
}

/// The T₀-quotient `qS_D(X)`, one point per class, each represented by its
/// 2-round filter `ℱ_𝒰`.
#[derive(Clone, Debug)]
pub struct StabilityQuotient {
    pub points: Vec<PFilter>,
    /// For each point of `S_D(X)`, the index of its class.
    pub class_of: Vec<usize>,
    pub space: QUSpace,
}

pub fn t0_stability_space(sd: &StabilitySpace) -> Result<StabilityQuotient> {
    let reps: Vec<PFilter> = sd
        .points()
        .iter()
        .map(|f| filters::f_sub_u(sd.base_space(), f))
        .collect();
    let mut points = reps.clone();
    points.sort();
    points.dedup();
    let class_of: Vec<usize> = reps
        .iter()
        .map(|r| points.binary_search(r).expect("representative listed"))
        .collect();
    let base = sd
        .space()
        .base()
        .iter()
        .map(|u| u.push_forward(&class_of, points.len()))
        .collect();
    Ok(StabilityQuotient {
        space: QUSpace::from_base(points.len(), base)?,
        points,
        class_of,
    })
}

/// `𝒞` restricted to subsets of size up to the ground: checks injectivity and
/// `(A, B) ∈ U_H ⇔ (𝒞_A, 𝒞_B) ∈ U_D` for every generator.
pub fn audit_embed_hyper(sd: &StabilitySpace, exec: Exec) -> Audit {
    let n = sd.base_space().size();
    let gens = sd.generators();
    Audit::merged(exec.map_range(1..1u64 << n, |ma| {
        let mut audit = Audit::new();
        let a = PointSet::from_mask(n, ma);
        let ia = sd.index_of(&a);
        audit.check(ia.is_some(), "principal filter is a point", || json!({ "set": a }));
        let Some(ia) = ia else { return audit };
        for b in nonempty_subsets(n) {
            let ib = sd.index_of(&b).expect("all principal filters present");
            audit.check((ia == ib) == (a == b), "embedding injective", || json!({ "a": a, "b": b }));
            for (k, u) in gens.iter().enumerate() {
                let hyper = hyperspace::hyper_member(u, &a, &b);
                let stab = sd.space().base()[k].contains(ia, ib);
                audit.check(hyper == stab, "U_H matches U_D on principal filters", || {
                    json!({ "a": a, "b": b, "entourage": k + 1, "hyper": hyper, "stability": stab })
                });
            }
        }
        audit
    }))
}

/// First base entourage of `y` not reached by `(f×f)(M_X)`, with the offending pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuityViolation {
    /// 1-based index into the target base.
    pub entourage: usize,
    pub x: usize,
    pub y: usize,
}

pub fn continuity_violation(map: &[usize], x: &QUSpace, y: &QUSpace) -> Option<ContinuityViolation> {
    y.base().iter().enumerate().find_map(|(k, u)| {
        x.min_entourage()
            .pairs()
            .find(|&(a, b)| !u.contains(map[a], map[b]))
            .map(|(a, b)| ContinuityViolation {
                entourage: k + 1,
                x: a + 1,
                y: b + 1,
            })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FdReport {
    pub continuity_violation: Option<ContinuityViolation>,
    /// `f_D(ℱ)` for each filter of the source, by least member.
    pub images: Vec<PFilter>,
    pub audit: Audit,
}

impl FdReport {
    pub fn continuous(&self) -> bool {
        self.continuity_violation.is_none()
    }
}

/// `f_D(ℱ) = [f(ℱ)]`, with the checks that images are doubly stable, that
/// `f_D` restricts to the hypermap on principal filters, and (for continuous
/// `f`) that `f_D` maps `M_{X,D}` into `M_{Y,D}`.
pub fn lift_map_fd(map: &[usize], x: &QUSpace, y: &QUSpace) -> Result<FdReport> {
    if map.len() != x.size() {
        return Err(Error::GroundMismatch {
            left: map.len(),
            right: x.size(),
        });
    }
    if let Some(&p) = map.iter().find(|&&p| p >= y.size()) {
        return Err(Error::InvalidArgument(format!(
            "map sends a point to {} outside a {}-point target",
            p + 1,
            y.size()
        )));
    }
    let violation = continuity_violation(map, x, y);
    let mut audit = Audit::new();
    let image = |f: &PFilter| {
        PFilter::new(hyperspace::image_set(map, f.gen(), y.size())).expect("image of nonempty set")
    };
    let filters: Vec<PFilter> = PFilter::all(x.size()).collect();
    let images: Vec<PFilter> = filters.iter().map(image).collect();
    for (f, fi) in filters.iter().zip(&images) {
        audit.check(
            filters::stability_profile(y, fi).doubly_stable,
            "image filter doubly stable",
            || json!({ "filter": f, "image": fi }),
        );
        let hyper = hyperspace::image_set(map, f.gen(), y.size());
        audit.check(*fi.gen() == hyper, "restriction equals hypermap", || {
            json!({ "set": f, "f_d": fi, "hypermap": hyper })
        });
    }
    if violation.is_none() {
        for (f, fi) in filters.iter().zip(&images) {
            for (g, gi) in filters.iter().zip(&images) {
                if in_double(x.min_entourage(), f.gen(), g.gen()) {
                    audit.check(
                        in_double(y.min_entourage(), fi.gen(), gi.gen()),
                        "f_D quasi-uniformly continuous",
                        || json!({ "f": f, "g": g }),
                    );
                }
            }
        }
    }
    Ok(FdReport {
        continuity_violation: violation,
        images,
        audit,
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

    #[test]
    fn identity_base_gives_equality_of_generators() {
        let id = QUSpace::from_base(3, vec![Relation::identity(3)]).unwrap();
        let sd = StabilitySpace::build(&id, 10, Exec::Sequential).unwrap();
        assert_eq!(sd.points().len(), 7);
        for (i, f) in sd.points().iter().enumerate() {
            for (j, g) in sd.points().iter().enumerate() {
                assert_eq!(sd.plus()[0].contains(i, j), g.gen().is_subset(f.gen()));
                assert_eq!(sd.space().min_entourage().contains(i, j), f == g);
            }
        }
        let q = t0_stability_space(&sd).unwrap();
        assert_eq!(q.points.len(), 7);
    }

    #[test]
    fn reflexive_and_conjugation_on_sierpinski() {
        let s = sierpinski();
        let sd = StabilitySpace::build(&s, 10, Exec::Sequential).unwrap();
        let conj = StabilitySpace::build(&s.conjugate(), 10, Exec::Sequential).unwrap();
        for f in sd.points() {
            assert!(in_double(&sd.generators()[0], f.gen(), f.gen()));
        }
        assert_eq!(sd.plus()[0].inverse(), conj.minus()[0]);
        assert_eq!(sd.space().base()[0].inverse(), conj.space().base()[0]);
    }

    #[test]
    fn ud_equivalence_examples() {
        let s = sierpinski();
        let two = PFilter::new(set(2, &[2])).unwrap();
        let both = PFilter::new(set(2, &[1, 2])).unwrap();
        assert!(!ud_equivalent(&s, &two, &both));
        assert!(ud_equivalent(&s, &two, &two));
    }

    #[test]
    fn oplus_examples() {
        let full = Relation::full(3);
        for f in nonempty_subsets(3) {
            for g in nonempty_subsets(3) {
                assert!(in_oplus(&full, &f, &g) && in_ominus(&full, &f, &g));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let id = QUSpace::from_base(4, vec![Relation::identity(4)]).unwrap();
        assert!(matches!(
            StabilitySpace::build(&id, 3, Exec::Sequential),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn fd_of_identity_and_constant() {
        let s = sierpinski();
        let r = lift_map_fd(&[0, 1], &s, &s).unwrap();
        assert!(r.continuous() && r.audit.passed());
        assert!(r.images.iter().eq(PFilter::all(2).collect::<Vec<_>>().iter()));
        let c = lift_map_fd(&[1, 1], &s, &s).unwrap();
        assert!(c.images.iter().all(|f| *f.gen() == set(2, &[2])));
        let bad = lift_map_fd(&[1, 0], &s, &s).unwrap();
        assert_eq!(
            bad.continuity_violation,
            Some(ContinuityViolation { entourage: 1, x: 1, y: 2 })
        );
    }
}
