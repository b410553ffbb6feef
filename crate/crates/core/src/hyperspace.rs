//! The Hausdorff quasi-uniformity on nonempty subsets and the double cluster condition.
//!
//! Hyper-points are the nonempty subsets of the ground set; hyper-point `i`
//! is the subset with bit mask `i + 1`, which is also the canonical report
//! order. `(A, B) ∈ U_H` iff `B ⊆ U(A)` and `A ⊆ U⁻¹(B)`.

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filters::{self, PFilter};
use crate::relcore::{nonempty_subsets, PointSet, QUSpace, Relation};

/// Largest ground set whose hyper-points can still be indexed on demand.
pub const ON_DEMAND_LIMIT: usize = 20;

/// Images and preimages of every subset under one relation, by mask.
#[derive(Clone, Debug)]
struct MaskTable {
    image: Vec<u64>,
    preimage: Vec<u64>,
}

impl MaskTable {
    fn new(u: &Relation) -> Self {
        let n = u.size();
        let rows: Vec<u64> = (0..n).map(|x| u.row(x).to_mask().expect("small ground")).collect();
        let cols: Vec<u64> = (0..n)
            .map(|y| (0..n).filter(|&x| u.contains(x, y)).fold(0, |m, x| m | 1 << x))
            .collect();
        let size = 1usize << n;
        let mut image = vec![0u64; size];
        let mut preimage = vec![0u64; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            image[mask] = image[rest] | rows[low];
            preimage[mask] = preimage[rest] | cols[low];
        }
        MaskTable { image, preimage }
    }

    fn member(&self, a: u64, b: u64) -> bool {
        b & !self.image[a as usize] == 0 && a & !self.preimage[b as usize] == 0
    }
}

/// The definitional kernel shared by materialized and on-demand lifts.
pub fn hyper_member(u: &Relation, a: &PointSet, b: &PointSet) -> bool {
    b.is_subset(&u.image(a)) && a.is_subset(&u.preimage(b))
}

pub fn hyper_point(n: usize, index: usize) -> PointSet {
    PointSet::from_mask(n, index as u64 + 1)
}

pub fn hyper_index(a: &PointSet) -> usize {
    a.to_mask().expect("small ground") as usize - 1
}

/// The lifted structure `(P₀(X), 𝒰_H)`.
///
/// The lifted base is `{U_H : U in the base}`, followed by `M_H` when `M` is
/// not itself a base member, so that the lifted min-entourage is `M_H`.
#[derive(Clone, Debug)]
pub struct HyperSpace {
    base_space: QUSpace,
    generators: Vec<Relation>,
    min_index: usize,
    tables: Vec<MaskTable>,
    lifted: Option<QUSpace>,
}

impl HyperSpace {
    /// Lifts `space`, materializing the hyper-relations when the ground has
    /// at most `materialize_cap` points and evaluating membership on demand otherwise.
    pub fn new(space: &QUSpace, materialize_cap: usize, exec: Exec) -> Result<Self> {
        let n = space.size();
        if n > ON_DEMAND_LIMIT {
            return Err(Error::CapExceeded {
                what: "hyperspace ground",
                size: n,
                cap: ON_DEMAND_LIMIT,
            });
        }
        let mut generators = space.base().to_vec();
        if !generators.contains(space.min_entourage()) {
            generators.push(space.min_entourage().clone());
        }
        let min_index = generators
            .iter()
            .position(|g| g == space.min_entourage())
            .expect("M is a generator");
        let tables: Vec<MaskTable> = generators.iter().map(MaskTable::new).collect();
        let lifted = if n <= materialize_cap {
            let hyper_n = (1usize << n) - 1;
            let base = tables
                .iter()
                .map(|t| {
                    Relation::from_rows(exec.map_range(0..hyper_n as u64, |i| {
                        PointSet::from_points(
                            hyper_n,
                            (0..hyper_n).filter(|&j| t.member(i + 1, j as u64 + 1)),
                        )
                    }))
                })
                .collect();
            Some(QUSpace::from_base(hyper_n, base)?)
        } else {
            None
        };
        Ok(HyperSpace {
            base_space: space.clone(),
            generators,
            min_index,
            tables,
            lifted,
        })
    }

    pub fn base_space(&self) -> &QUSpace {
        &self.base_space
    }

    pub fn hyper_size(&self) -> usize {
        (1usize << self.base_space.size()) - 1
    }

    /// The relations `U` whose lifts form the lifted base.
    pub fn generators(&self) -> &[Relation] {
        &self.generators
    }

    pub fn is_materialized(&self) -> bool {
        self.lifted.is_some()
    }

    /// The lift as a quasi-uniform space; only available when materialized.
    pub fn lifted(&self) -> Result<&QUSpace> {
        self.lifted.as_ref().ok_or(Error::CapExceeded {
            what: "materialized lift",
            size: self.base_space.size(),
            cap: self.base_space.size() - 1,
        })
    }

    /// `(A, B) ∈ (U_k)_H` for the `k`-th lifted generator.
    pub fn member(&self, k: usize, a: &PointSet, b: &PointSet) -> bool {
        match &self.lifted {
            Some(l) => l.base()[k].contains(hyper_index(a), hyper_index(b)),
            None => self.tables[k].member(a.to_mask().unwrap(), b.to_mask().unwrap()),
        }
    }

    /// `(A, B) ∈ M_H`.
    pub fn min_member(&self, a: &PointSet, b: &PointSet) -> bool {
        self.member(self.min_index, a, b)
    }

    /// Mutual `M_H`-membership: the 𝒰_H-equivalence of two subsets.
    pub fn equivalent(&self, a: &PointSet, b: &PointSet) -> bool {
        self.min_member(a, b) && self.min_member(b, a)
    }
}

pub fn lift(space: &QUSpace, materialize_cap: usize, exec: Exec) -> Result<QUSpace> {
    if space.size() > materialize_cap {
        return Err(Error::CapExceeded {
            what: "lift ground",
            size: space.size(),
            cap: materialize_cap,
        });
    }
    Ok(HyperSpace::new(space, materialize_cap, exec)?.lifted.expect("materialized"))
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperClasses {
    /// The doubly closed sets, one per 𝒰_H-class, in mask order.
    pub representatives: Vec<PointSet>,
    pub audit: Audit,
}

/// Representatives of the 𝒰_H-classes, with the checks that every subset is
/// equivalent to its double closure and that each class holds exactly one
/// doubly closed set.
pub fn hyper_t0_representatives(h: &HyperSpace, exec: Exec) -> HyperClasses {
    let space = h.base_space();
    let n = space.size();
    let closed: Vec<PointSet> = nonempty_subsets(n).filter(|a| space.is_doubly_closed(a)).collect();
    let audits = exec.map_range(1..1u64 << n, |mask| {
        let a = PointSet::from_mask(n, mask);
        let mut audit = Audit::new();
        let dc = space.double_closure(&a);
        audit.check(h.equivalent(&a, &dc), "equivalent to double closure", || {
            json!({ "set": a, "double_closure": dc })
        });
        let hits: Vec<&PointSet> = closed.iter().filter(|c| h.equivalent(&a, c)).collect();
        audit.check(hits.len() == 1, "one doubly closed set per class", || {
            json!({ "set": a, "doubly_closed_equivalents": hits })
        });
        audit
    });
    HyperClasses {
        representatives: closed,
        audit: Audit::merged(audits),
    }
}

/// Which entourage a cluster condition failure refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntourageRef {
    /// 1-based index into the base.
    Base(usize),
    Min,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterWitness {
    pub filter: PFilter,
    pub entourage: EntourageRef,
    pub double_cluster: PointSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterVerdict {
    pub holds: bool,
    pub witness: Option<ClusterWitness>,
    /// The `V_ℱ ⊆ U⁻¹(C) ∩ U(C)` form.
    pub reformulated_holds: bool,
    /// The form with "ℱ traces on V(x) and V⁻¹(x)".
    pub trace_form_holds: bool,
    /// Bicompleteness of the lift, when it is small enough to materialize.
    pub lift_bicomplete: Option<bool>,
    pub filters_checked: u64,
}

impl ClusterVerdict {
    /// All computed forms agree with each other and with the lift.
    pub fn consistent(&self) -> bool {
        self.holds == self.reformulated_holds
            && self.holds == self.trace_form_holds
            && self.lift_bicomplete.is_none_or(|b| b == self.holds)
    }
}

fn entourages(space: &QUSpace) -> Vec<(EntourageRef, Relation)> {
    let mut out: Vec<(EntourageRef, Relation)> = space
        .base()
        .iter()
        .enumerate()
        .map(|(i, u)| (EntourageRef::Base(i + 1), u.clone()))
        .collect();
    out.push((EntourageRef::Min, space.min_entourage().clone()));
    out
}

/// Checks the double cluster condition over all doubly stable filters and all
/// base entourages plus `M` (the condition is monotone in `U`).
pub fn cluster_condition_check(space: &QUSpace, lift_cap: usize, exec: Exec) -> Result<ClusterVerdict> {
    let n = space.size();
    if n > ON_DEMAND_LIMIT {
        return Err(Error::CapExceeded {
            what: "cluster condition sweep",
            size: n,
            cap: ON_DEMAND_LIMIT,
        });
    }
    let ents = entourages(space);
    let rows = exec.map_range(1..1u64 << n, |mask| {
        let f = PFilter::new(PointSet::from_mask(n, mask)).expect("nonempty");
        if !filters::stability_profile(space, &f).doubly_stable {
            return (true, true, true, None);
        }
        let c = filters::double_cluster_points(space, &f);
        let mut direct_ok = true;
        let mut reform_ok = true;
        let mut trace_ok = true;
        let mut witness = None;
        for (label, u) in &ents {
            let target = u.preimage(&c).intersection(&u.image(&c));
            let direct = f.gen().is_subset(&target);
            if !direct && witness.is_none() {
                witness = Some(ClusterWitness {
                    filter: f.clone(),
                    entourage: label.clone(),
                    double_cluster: c.clone(),
                });
            }
            direct_ok &= direct;
            reform_ok &= ents
                .iter()
                .any(|(_, v)| filters::u_sub_f(v, &f).is_subset(&target));
            trace_ok &= ents.iter().any(|(_, v)| {
                (0..n).all(|x| {
                    let traces = filters::check_filterbase_trace(&f, v.row(x))
                        && filters::check_filterbase_trace(&f, &v.preimage(&PointSet::singleton(n, x)));
                    !traces || (u.row(x).intersects(&c) && u.preimage(&PointSet::singleton(n, x)).intersects(&c))
                })
            });
        }
        (direct_ok, reform_ok, trace_ok, witness)
    });
    let lift_bicomplete = if n <= lift_cap {
        Some(filters::is_bicomplete(&lift(space, lift_cap, exec)?))
    } else {
        None
    };
    Ok(ClusterVerdict {
        holds: rows.iter().all(|r| r.0),
        reformulated_holds: rows.iter().all(|r| r.1),
        trace_form_holds: rows.iter().all(|r| r.2),
        filters_checked: rows.len() as u64,
        witness: rows.into_iter().find_map(|r| r.3),
        lift_bicomplete,
    })
}

/// Some finite set `F` with `⋃_{x∈F} U(x) = X` exists for every entourage.
pub fn is_precompact(space: &QUSpace) -> bool {
    entourages(space)
        .iter()
        .all(|(_, u)| u.image(&space.full_set()).is_full())
}

/// 𝒰ˢ is precompact.
pub fn is_totally_bounded(space: &QUSpace) -> bool {
    entourages(space)
        .iter()
        .all(|(_, u)| u.symmetrize().image(&space.full_set()).is_full())
}

/// Quasi-uniform continuity of a point map: `(f×f)(M_X) ⊆ M_Y`.
/// Returns the first `M_X` pair (0-based) whose image leaves `M_Y`.
pub fn continuity_violation(map: &[usize], x: &QUSpace, y: &QUSpace) -> Option<(usize, usize)> {
    x.min_entourage()
        .pairs()
        .find(|&(a, b)| !y.min_entourage().contains(map[a], map[b]))
}

pub fn image_set(map: &[usize], a: &PointSet, target: usize) -> PointSet {
    PointSet::from_points(target, a.iter().map(|p| map[p]))
}

/// For a continuous map, the hypermap `A ↦ f(A)` carries `M_{X,H}` into `M_{Y,H}`.
pub fn audit_hypermap(map: &[usize], x: &QUSpace, y: &QUSpace) -> Result<Audit> {
    if map.len() != x.size() || map.iter().any(|&p| p >= y.size()) {
        return Err(Error::GroundMismatch {
            left: map.len(),
            right: x.size(),
        });
    }
    let mut audit = Audit::new();
    if continuity_violation(map, x, y).is_some() {
        return Ok(audit);
    }
    for a in nonempty_subsets(x.size()) {
        for b in nonempty_subsets(x.size()) {
            if hyper_member(x.min_entourage(), &a, &b) {
                let (fa, fb) = (image_set(map, &a, y.size()), image_set(map, &b, y.size()));
                audit.check(hyper_member(y.min_entourage(), &fa, &fb), "hypermap continuous", || {
                    json!({ "a": a, "b": b, "f_a": fa, "f_b": fb })
                });
            }
        }
    }
    Ok(audit)
}
