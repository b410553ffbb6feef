//! Checks of the statements about `S_D(X)`, its quotient and the bicompletion.
//!
//! Each check computes both sides of the statement independently and records
//! any disagreement as a violation.

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filters::{self, PFilter};
use crate::hyperspace::{self, HyperSpace};
use crate::relcore::{nonempty_subsets, PointSet, QUSpace, Relation};

use super::bicompletion::{bicompletion, cauchy_filters};
use super::{
    generators_with_min, in_double, in_minus, in_ominus, in_oplus, in_plus, t0_stability_space,
    ud_equivalent, StabilitySpace,
};

/// Cauchy-filter lists longer than this make the family enumeration of the
/// bicompletion characterization fall back to a single explicit witness.
pub const FAMILY_ENUMERATION_CAP: usize = 12;

/// Result of a check that may not apply to a given space.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub audit: Audit,
    pub skipped: Option<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn checked(audit: Audit) -> Self {
        Outcome {
            audit,
            ..Default::default()
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            skipped: Some(reason.into()),
            ..Default::default()
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.audit.passed()
    }
}

/// Reflexivity (through `reflexive`, evaluated definitionally) and
/// `V² ⊆ U ⇒ (lifted V)² ⊆ lifted U` for every pair of generators.
pub fn audit_base_axioms(
    name: &str,
    generators: &[Relation],
    lifted: &[Relation],
    reflexive: impl Fn(usize, usize) -> bool,
) -> Audit {
    let mut audit = Audit::new();
    let points = lifted.first().map_or(0, Relation::size);
    for k in 0..generators.len() {
        for i in 0..points {
            audit.check(reflexive(k, i), &format!("{name} reflexive"), || {
                json!({ "entourage": k + 1, "point": i + 1 })
            });
        }
    }
    let squares: Vec<Relation> = lifted.iter().map(Relation::square).collect();
    for (v, vv) in generators.iter().enumerate() {
        let v2 = vv.square();
        for (u, uu) in generators.iter().enumerate() {
            if v2.is_subset(uu) {
                audit.check(squares[v].is_subset(&lifted[u]), &format!("{name} square axiom"), || {
                    json!({ "v": v + 1, "u": u + 1 })
                });
            }
        }
    }
    audit
}

/// Base axioms for `𝒰_H`, `𝒰_+`, `𝒰_−` and `𝒰_D`.
pub fn audit_lifted_axioms(space: &QUSpace, cap: usize, exec: Exec) -> Result<Audit> {
    let h = HyperSpace::new(space, cap, exec)?;
    let lifted = h.lifted()?;
    let n = space.size();
    let mut audit = audit_base_axioms("U_H", h.generators(), lifted.base(), |k, i| {
        let a = hyperspace::hyper_point(n, i);
        hyperspace::hyper_member(&h.generators()[k], &a, &a)
    });
    let sd = StabilitySpace::build(space, cap, exec)?;
    let gens = sd.generators();
    let pt = |i: usize| sd.points()[i].gen();
    audit.merge(audit_base_axioms("U_+", gens, sd.plus(), |k, i| in_plus(&gens[k], pt(i), pt(i))));
    audit.merge(audit_base_axioms("U_-", gens, sd.minus(), |k, i| in_minus(&gens[k], pt(i), pt(i))));
    audit.merge(audit_base_axioms("U_D", gens, sd.space().base(), |k, i| {
        in_double(&gens[k], pt(i), pt(i))
    }));
    Ok(audit)
}

/// `(U_+)⁻¹ = (U⁻¹)_−`, `(U_−)⁻¹ = (U⁻¹)_+` and `(U_D)⁻¹ = (U⁻¹)_D` per generator.
pub fn audit_conjugation(sd: &StabilitySpace, cap: usize, exec: Exec) -> Result<Audit> {
    let conj = StabilitySpace::build(&sd.base_space().conjugate(), cap, exec)?;
    let mut audit = Audit::new();
    for k in 0..sd.generators().len() {
        audit.check(sd.plus()[k].inverse() == conj.minus()[k], "(U_+)^-1 = (U^-1)_-", || {
            json!({ "entourage": k + 1 })
        });
        audit.check(sd.minus()[k].inverse() == conj.plus()[k], "(U_-)^-1 = (U^-1)_+", || {
            json!({ "entourage": k + 1 })
        });
        audit.check(
            sd.space().base()[k].inverse() == conj.space().base()[k],
            "(U_D)^-1 = (U^-1)_D",
            || json!({ "entourage": k + 1 }),
        );
    }
    Ok(audit)
}

/// `U_+ ⊆ U_⊕ ⊆ (U²)_+`, `U_− ⊆ U_⊖ ⊆ (U²)_−`, and Cauchy pairs lie in `U_⊕ ∩ U_⊖`.
pub fn audit_oplus(space: &QUSpace, exec: Exec) -> Audit {
    let n = space.size();
    let (gens, _) = generators_with_min(space);
    let filters: Vec<PFilter> = PFilter::all(n).collect();
    Audit::merged(exec.map(&filters, |f| {
        let mut audit = Audit::new();
        for g in &filters {
            let cauchy = filters::is_cauchy_pair(space, f, g);
            for (k, u) in gens.iter().enumerate() {
                let u2 = u.square();
                let (a, b) = (f.gen(), g.gen());
                let op = in_oplus(u, a, b);
                let om = in_ominus(u, a, b);
                let w = || json!({ "f": f, "g": g, "entourage": k + 1 });
                audit.check(!in_plus(u, a, b) || op, "U_+ within U_oplus", w);
                audit.check(!op || in_plus(&u2, a, b), "U_oplus within (U^2)_+", w);
                audit.check(!in_minus(u, a, b) || om, "U_- within U_ominus", w);
                audit.check(!om || in_minus(&u2, a, b), "U_ominus within (U^2)_-", w);
                audit.check(!cauchy || (op && om), "Cauchy pair in U_oplus and U_ominus", w);
            }
        }
        audit
    }))
}

/// `𝒰_D`-equivalence coincides with equality of `ℱ_𝒰`, and every `𝒞_A` is
/// equivalent to `𝒞_{dc(A)}`.
pub fn audit_ud_equivalence(space: &QUSpace, exec: Exec) -> Audit {
    let filters: Vec<PFilter> = PFilter::all(space.size()).collect();
    let reps: Vec<PFilter> = filters.iter().map(|f| filters::f_sub_u(space, f)).collect();
    Audit::merged(exec.map_range(0..filters.len() as u64, |i| {
        let i = i as usize;
        let f = &filters[i];
        let mut audit = Audit::new();
        for (j, g) in filters.iter().enumerate() {
            let eq = ud_equivalent(space, f, g);
            audit.check(eq == (reps[i] == reps[j]), "U_D-equivalent iff equal f_sub_u", || {
                json!({ "f": f, "g": g, "equivalent": eq })
            });
        }
        let dc = PFilter::new(space.double_closure(f.gen())).expect("nonempty");
        audit.check(ud_equivalent(space, f, &dc), "equivalent to double closure", || {
            json!({ "set": f, "double_closure": dc })
        });
        audit
    }))
}

/// `S_D(X)`: bicompleteness, density of `𝒞P₀(X)` and the
/// Cauchy-net property, the net `(𝒞_F)_{F∈ℱ}` realized as its tail filter.
pub fn check_stability_bicomplete(sd: &StabilitySpace) -> Outcome {
    let mut audit = Audit::new();
    let space = sd.space();
    let witness = filters::bicompleteness_witness(space);
    audit.check(witness.is_none(), "S_D bicomplete", || {
        json!({ "cauchy_filter_without_limit": witness.as_ref().map(|w| w.gen().to_one_based()) })
    });

    let n = sd.base_space().size();
    let k = sd.points().len();
    let principal = PointSet::from_points(
        k,
        nonempty_subsets(n).filter_map(|a| sd.index_of(&a)),
    );
    let sym = space.min_symmetric();
    let missed = sym.preimage(&principal).complement();
    audit.check(missed.is_empty(), "principal filters dense", || {
        json!({ "undense_points": missed.iter().map(|i| sd.points()[i].gen().to_one_based()).collect::<Vec<_>>() })
    });

    let exhaustive = n <= 6;
    for (idx, f) in sd.points().iter().enumerate() {
        let gen = f.gen();
        let tail = |upper: &PointSet| {
            PointSet::from_points(
                k,
                crate::relcore::subsets_of(&upper.difference(gen))
                    .filter_map(|extra| sd.index_of(&gen.union(&extra))),
            )
        };
        // The tail filter of the net is generated by the tails at each member
        // of ℱ; the family is directed, so its least member is their intersection.
        let least = if exhaustive {
            crate::relcore::subsets_of(&gen.complement())
                .map(|extra| tail(&gen.union(&extra)))
                .fold(PointSet::full(k), |acc, t| acc.intersection(&t))
        } else {
            tail(gen)
        };
        let cauchy = least.iter().all(|i| least.is_subset(sym.row(i)));
        audit.check(cauchy, "tail filter Cauchy", || json!({ "filter": f, "tail": least.to_one_based() }));
        audit.check(least.is_subset(sym.row(idx)), "tail filter converges to the filter", || {
            json!({ "filter": f })
        });
    }
    let outcome = Outcome::checked(audit);
    if exhaustive {
        outcome
    } else {
        outcome.with_note("tail filter computed at the least member only")
    }
}

/// `qS_D(X)` is bicomplete and T₀, and equals `q𝒞P₀(X)` as a point set.
pub fn check_quotient_completion(sd: &StabilitySpace) -> Result<Outcome> {
    let q = t0_stability_space(sd)?;
    let space = sd.base_space();
    let mut audit = Audit::new();
    audit.check(filters::is_bicomplete(&q.space), "qS_D bicomplete", || json!({}));
    audit.check(q.space.is_t0(), "qS_D T0", || {
        json!({ "classes": q.space.t0_classes().iter().filter(|c| c.len() > 1).collect::<Vec<_>>() })
    });
    let mut principal: Vec<PFilter> = nonempty_subsets(space.size())
        .filter(|c| space.is_doubly_closed(c))
        .map(|c| filters::two_envelope(space, &PFilter::new(c).expect("nonempty")))
        .collect();
    principal.sort();
    principal.dedup();
    audit.check(principal == q.points, "qS_D equals qCP_0", || {
        json!({ "q_sd": q.points, "q_cp0": principal })
    });
    let closed = nonempty_subsets(space.size()).filter(|c| space.is_doubly_closed(c)).count();
    audit.check(q.points.len() == closed, "one point per doubly closed set", || {
        json!({ "points": q.points.len(), "doubly_closed": closed })
    });
    for f in &q.points {
        audit.check(filters::is_two_round(space, f), "quotient points are 2-round", || json!({ "filter": f }));
    }
    Ok(Outcome::checked(audit))
}

/// Quotients of the stability spaces of `X` and its bicompletion are
/// isomorphic under the map induced by the embedding. Finite T₀ spaces are
/// their own bicompletion, so this only confirms the identity.
pub fn check_bicompletion_quotients(space: &QUSpace, cap: usize, exec: Exec) -> Result<Outcome> {
    if !space.is_t0() {
        return Ok(Outcome::skipped("requires a T0 space"));
    }
    let b = bicompletion(space)?;
    let qx = t0_stability_space(&StabilitySpace::build(space, cap, exec)?)?;
    let qb = t0_stability_space(&StabilitySpace::build(&b.space, cap, exec)?)?;
    let mut audit = Audit::new();
    let qe: Vec<Option<usize>> = qx
        .points
        .iter()
        .map(|f| {
            let image = PointSet::from_points(b.points.len(), f.gen().iter().map(|x| b.embedding[x]));
            let rep = filters::f_sub_u(&b.space, &PFilter::new(image).expect("nonempty"));
            qb.points.binary_search(&rep).ok()
        })
        .collect();
    audit.check(qe.iter().all(Option::is_some), "qe defined", || json!({}));
    let map: Vec<usize> = qe.iter().map(|i| i.unwrap_or(0)).collect();
    let mut hit = map.clone();
    hit.sort();
    hit.dedup();
    audit.check(
        hit.len() == qb.points.len() && map.len() == qb.points.len(),
        "qe bijective",
        || json!({ "map": map }),
    );
    for (k, (u, v)) in qx.space.base().iter().zip(qb.space.base()).enumerate() {
        audit.check(u.push_forward(&map, qb.points.len()) == *v, "qe preserves entourages", || {
            json!({ "entourage": k + 1 })
        });
    }
    Ok(Outcome::checked(audit).with_note("finite-degenerate: the bicompletion of a finite T0 space is the space itself"))
}

/// `[(ℱ_Ũ)|X]_Ũ = ℱ_Ũ` for doubly stable filters on the bicompletion.
pub fn check_bicompletion_restriction(space: &QUSpace) -> Result<Outcome> {
    if !space.is_t0() {
        return Ok(Outcome::skipped("requires a T0 space"));
    }
    let b = bicompletion(space)?;
    let embedded = PointSet::from_points(b.points.len(), b.embedding.iter().copied());
    let mut audit = Audit::new();
    for f in PFilter::all(b.points.len()) {
        let fu = filters::f_sub_u(&b.space, &f);
        let traced = fu.gen().intersection(&embedded);
        let ok = !traced.is_empty()
            && filters::f_sub_u(&b.space, &PFilter::new(traced.clone()).expect("nonempty")) == fu;
        audit.check(ok, "trace on X regenerates f_sub_u", || json!({ "filter": f, "trace": traced }));
    }
    Ok(Outcome::checked(audit).with_note("finite-degenerate: the bicompletion of a finite T0 space is the space itself"))
}

#[derive(Clone, Debug, Serialize)]
pub struct TresWitness {
    pub filter: PFilter,
    pub set: Option<PointSet>,
}

/// Bicompleteness of the lift against: every doubly stable filter is
/// `𝒰_D`-equivalent to some `𝒞_C` (first `C` in mask order is the witness).
pub fn check_hyper_bicompleteness(space: &QUSpace, cap: usize, exec: Exec) -> Result<(Outcome, Vec<TresWitness>)> {
    let lhs = filters::is_bicomplete(&hyperspace::lift(space, cap, exec)?);
    let n = space.size();
    let filters: Vec<PFilter> = PFilter::all(n).collect();
    let witnesses: Vec<TresWitness> = exec.map(&filters, |f| TresWitness {
        filter: f.clone(),
        set: nonempty_subsets(n).find(|c| {
            let cf = PFilter::new(c.clone()).expect("nonempty");
            ud_equivalent(space, f, &cf)
        }),
    });
    let mut audit = Audit::new();
    for w in &witnesses {
        if let Some(c) = &w.set {
            let cf = PFilter::new(c.clone()).expect("nonempty");
            audit.check(
                filters::f_sub_u(space, &w.filter) == filters::two_envelope(space, &cf),
                "f_sub_u equals D(C_C)",
                || json!({ "filter": w.filter, "set": c }),
            );
        }
    }
    let rhs = witnesses.iter().all(|w| w.set.is_some());
    audit.check(lhs == rhs, "lift bicomplete iff every filter equivalent to a principal one", || {
        json!({ "lift_bicomplete": lhs, "condition": rhs })
    });
    audit.check(lhs, "lift bicomplete", || json!({}));
    Ok((Outcome::checked(audit), witnesses))
}

/// Bicompleteness of the lifted bicompletion against: every doubly stable
/// filter is `𝒰_D`-equivalent to the intersection of a nonempty family of
/// 𝒰ˢ-Cauchy filters. Also checks the finite shadow of the statement
/// relating `(𝒞̃_C)_Ũ|X` to `⋂_{x∈C} Ũˢ(x)|X`.
pub fn check_bicompletion_families(space: &QUSpace, cap: usize, family_cap: usize, exec: Exec) -> Result<Outcome> {
    if !space.is_t0() {
        return Ok(Outcome::skipped("requires a T0 space"));
    }
    let b = bicompletion(space)?;
    let lhs = filters::is_bicomplete(&hyperspace::lift(&b.space, cap, exec)?);
    let cauchy = cauchy_filters(space);
    let enumerate = cauchy.len() <= family_cap.min(FAMILY_ENUMERATION_CAP);
    let n = space.size();
    let sym = space.min_symmetric();
    let filters: Vec<PFilter> = PFilter::all(n).collect();
    let per_filter = exec.map(&filters, |f| {
        let mut audit = Audit::new();
        let greedy: PointSet = f
            .gen()
            .iter()
            .fold(PointSet::empty(n), |acc, x| acc.union(sym.row(x)));
        let greedy = PFilter::new(greedy).expect("nonempty");
        audit.check(
            filters::f_sub_u(space, &greedy) == filters::two_envelope(space, f),
            "neighbourhood-filter family reproduces the 2-envelope",
            || json!({ "filter": f, "family_union": greedy }),
        );
        let found = if enumerate {
            (1u64..1 << cauchy.len()).any(|mask| {
                let union = cauchy
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(PointSet::empty(n), |acc, (_, c)| acc.union(c.gen()));
                ud_equivalent(space, f, &PFilter::new(union).expect("nonempty"))
            })
        } else {
            ud_equivalent(space, f, &greedy)
        };
        (audit, found)
    });
    let mut audit = Audit::new();
    let mut rhs = true;
    for (a, found) in per_filter {
        audit.merge(a);
        rhs &= found;
    }
    audit.check(lhs == rhs, "lifted bicompletion bicomplete iff Cauchy-family condition", || {
        json!({ "lift_bicomplete": lhs, "condition": rhs })
    });
    // Restriction statement, with X identified with its image in the bicompletion.
    let tilde_sym = b.space.min_symmetric();
    for c in nonempty_subsets(b.points.len()) {
        let env = space_trace(&b, &b.space.double_closure(&c));
        let inter = space_trace(
            &b,
            &c.iter().fold(PointSet::empty(b.points.len()), |acc, x| acc.union(tilde_sym.row(x))),
        );
        let ok = match (env, inter) {
            (Some(e), Some(i)) => ud_equivalent(space, &e, &i),
            _ => false,
        };
        audit.check(ok, "auxiliary traces equivalent", || json!({ "set": c }));
    }
    let outcome = Outcome::checked(audit);
    Ok(if enumerate {
        outcome
    } else {
        outcome.with_note("witness-based: Cauchy family count above the enumeration cap")
    })
}

/// Pulls a set of bicompletion points back to the filter it generates on `X`.
fn space_trace(b: &super::Bicompletion, set: &PointSet) -> Option<PFilter> {
    let n = b.source().size();
    PFilter::new(PointSet::from_points(n, (0..n).filter(|&x| set.contains(b.embedding[x])))).ok()
}

/// For uniform T₀ spaces: completeness of the lifted completion against
/// "every stable filter is contained in a 𝒰-Cauchy filter".
pub fn check_uniform_completion(space: &QUSpace, cap: usize, exec: Exec) -> Result<Outcome> {
    if let Some(k) = space.base().iter().position(|u| !u.is_symmetric()) {
        return Err(Error::NotUniform(k + 1));
    }
    if !space.is_t0() {
        return Ok(Outcome::skipped("requires a T0 space"));
    }
    let b = bicompletion(space)?;
    let lhs = filters::is_bicomplete(&hyperspace::lift(&b.space, cap, exec)?);
    let cauchy = cauchy_filters(space);
    let mut audit = Audit::new();
    let mut rhs = true;
    for f in PFilter::all(space.size()) {
        if !filters::stability_profile(space, &f).stable {
            continue;
        }
        let finer = cauchy.iter().find(|c| c.gen().is_subset(f.gen()));
        audit.check(finer.is_some(), "stable filter inside a Cauchy filter", || json!({ "filter": f }));
        rhs &= finer.is_some();
    }
    audit.check(lhs == rhs, "lifted completion complete iff condition", || {
        json!({ "lift_complete": lhs, "condition": rhs })
    });
    Ok(Outcome::checked(audit))
}

/// For `a` dense in τ(𝒰ˢ): traces `U_ℱ ∩ a` form a filterbase of a doubly
/// stable filter on the subspace whose generated filter is `𝒰_D`-equivalent to `ℱ`.
pub fn check_dense_traces(space: &QUSpace, a: &PointSet) -> Result<Outcome> {
    let sym = space.min_symmetric();
    if let Some(x) = sym.image(a).complement().first() {
        return Err(Error::NotDense(x + 1));
    }
    let sub = space.subspace(a)?;
    let members: Vec<usize> = a.iter().collect();
    let (gens, min_index) = generators_with_min(space);
    let mut audit = Audit::new();
    for f in PFilter::all(space.size()) {
        let traces: Vec<PointSet> = gens.iter().map(|u| filters::u_sub_f(u, &f).intersection(a)).collect();
        let least = &traces[min_index];
        let is_base = traces.iter().all(|t| !t.is_empty() && least.is_subset(t));
        audit.check(is_base, "traces form a filterbase", || json!({ "filter": f, "traces": traces }));
        if least.is_empty() {
            continue;
        }
        let local = PointSet::from_points(
            members.len(),
            members.iter().enumerate().filter(|(_, &x)| least.contains(x)).map(|(i, _)| i),
        );
        let local = PFilter::new(local).expect("nonempty");
        audit.check(
            filters::stability_profile(&sub, &local).doubly_stable,
            "trace filter doubly stable on the subspace",
            || json!({ "filter": f, "trace": least }),
        );
        let generated = PFilter::new(least.clone()).expect("nonempty");
        audit.check(ud_equivalent(space, &generated, &f), "generated filter equivalent", || {
            json!({ "filter": f, "trace": least })
        });
    }
    Ok(Outcome::checked(audit))
}

/// Precompactness and total boundedness of `X` and `S_D(X)` agree, and
/// `x ↦ 𝒞_{x}` is a quasi-uniform embedding.
pub fn check_precompactness_transfer(sd: &StabilitySpace) -> Outcome {
    let x = sd.base_space();
    let s = sd.space();
    let mut audit = Audit::new();
    let (px, ps) = (hyperspace::is_precompact(x), hyperspace::is_precompact(s));
    let (tx, ts) = (hyperspace::is_totally_bounded(x), hyperspace::is_totally_bounded(s));
    audit.check(px == ps, "S_D precompact iff X precompact", || json!({ "x": px, "s_d": ps }));
    audit.check(tx == ts, "S_D totally bounded iff X totally bounded", || json!({ "x": tx, "s_d": ts }));
    audit.check(!tx || px, "totally bounded implies precompact", || json!({}));
    let n = x.size();
    let embed: Vec<usize> = (0..n)
        .map(|p| sd.index_of(&PointSet::singleton(n, p)).expect("point filters present"))
        .collect();
    for (k, u) in sd.generators().iter().enumerate() {
        for p in 0..n {
            for q in 0..n {
                audit.check(
                    u.contains(p, q) == s.base()[k].contains(embed[p], embed[q]),
                    "point embedding preserves entourages",
                    || json!({ "entourage": k + 1, "x": p + 1, "y": q + 1 }),
                );
            }
        }
    }
    audit.check(!ps || px, "precompactness pulls back along the embedding", || json!({}));
    Outcome::checked(audit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> QUSpace {
        QUSpace::from_base(3, vec![Relation::from_pairs(3, [(0, 1), (1, 2), (0, 2)])]).unwrap()
    }

    fn indiscrete(n: usize) -> QUSpace {
        QUSpace::from_base(n, vec![Relation::full(n)]).unwrap()
    }

    #[test]
    fn chain_passes_everything() {
        let s = chain3();
        let e = Exec::Sequential;
        let sd = StabilitySpace::build(&s, 10, e).unwrap();
        assert!(audit_lifted_axioms(&s, 10, e).unwrap().passed());
        assert!(audit_conjugation(&sd, 10, e).unwrap().passed());
        assert!(audit_oplus(&s, e).passed());
        assert!(audit_ud_equivalence(&s, e).passed());
        assert!(check_stability_bicomplete(&sd).passed());
        assert!(check_quotient_completion(&sd).unwrap().passed());
        assert!(check_bicompletion_quotients(&s, 10, e).unwrap().passed());
        assert!(check_bicompletion_restriction(&s).unwrap().passed());
        assert!(check_hyper_bicompleteness(&s, 10, e).unwrap().0.passed());
        assert!(check_bicompletion_families(&s, 10, 12, e).unwrap().passed());
        assert!(check_precompactness_transfer(&sd).passed());
        assert!(matches!(check_uniform_completion(&s, 10, e), Err(Error::NotUniform(1))));
    }

    #[test]
    fn tres_witness_on_identity_is_generator() {
        let id = QUSpace::from_base(3, vec![Relation::identity(3)]).unwrap();
        let (outcome, witnesses) = check_hyper_bicompleteness(&id, 10, Exec::Sequential).unwrap();
        assert!(outcome.passed());
        for w in witnesses {
            assert_eq!(w.set.as_ref(), Some(w.filter.gen()));
        }
        assert!(check_uniform_completion(&id, 10, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn non_t0_checks_are_skipped() {
        let s = indiscrete(2);
        assert!(check_bicompletion_quotients(&s, 10, Exec::Sequential).unwrap().skipped.is_some());
        assert!(check_bicompletion_families(&s, 10, 12, Exec::Sequential).unwrap().skipped.is_some());
        assert!(check_uniform_completion(&s, 10, Exec::Sequential).unwrap().skipped.is_some());
    }

    #[test]
    fn dense_subspace_of_indiscrete_pair() {
        let s = indiscrete(2);
        let a = PointSet::singleton(2, 0);
        assert!(check_dense_traces(&s, &a).unwrap().passed());
        assert!(check_dense_traces(&s, &PointSet::full(2)).unwrap().passed());
        let sierp = QUSpace::from_base(2, vec![Relation::from_pairs(2, [(0, 1)])]).unwrap();
        assert!(matches!(check_dense_traces(&sierp, &a), Err(Error::NotDense(2))));
    }
}
