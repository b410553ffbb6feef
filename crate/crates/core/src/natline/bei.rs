//! Finite spaces with an entourage `V` such that every point has `V(x) = {x}`
//! or `V⁻¹(x) = {x}`. For them every doubly stable filter contains its own
//! double cluster set, so the double cluster condition holds and the Hausdorff
//! lift is bicomplete.

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filters::{self, PFilter};
use crate::hyperspace::{cluster_condition_check, EntourageRef, ClusterVerdict};
use crate::relcore::{preorders, PointSet, QUSpace, Relation};

#[derive(Clone, Debug, Serialize)]
pub struct BeiReport {
    /// The entourage satisfying the hypothesis: a base member if one does,
    /// otherwise the least entourage.
    pub entourage: EntourageRef,
    pub doubly_stable_filters: u64,
    pub audit: Audit,
    pub cluster_condition: ClusterVerdict,
    /// `None` when the lift exceeds the materialization cap.
    pub lift_bicomplete: Option<bool>,
    pub holds: bool,
}

fn isolated_somewhere(v: &Relation, x: usize) -> bool {
    let n = v.size();
    let single = PointSet::singleton(n, x);
    *v.row(x) == single || v.preimage(&single) == single
}

/// First point (0-based) where `v` has neither `v(x) = {x}` nor `v⁻¹(x) = {x}`.
pub fn hypothesis_violation(v: &Relation) -> Option<usize> {
    (0..v.size()).find(|&x| !isolated_somewhere(v, x))
}

/// Locates an entourage satisfying the hypothesis. The least entourage is
/// contained in every base member, so it satisfies the hypothesis whenever
/// any entourage does; its failures name the offending point.
fn hypothesis_entourage(space: &QUSpace) -> Result<(EntourageRef, Relation)> {
    if let Some(i) = space.base().iter().position(|v| hypothesis_violation(v).is_none()) {
        return Ok((EntourageRef::Base(i + 1), space.base()[i].clone()));
    }
    match hypothesis_violation(space.min_entourage()) {
        None => Ok((EntourageRef::Min, space.min_entourage().clone())),
        Some(x) => Err(Error::HypothesisViolated { point: x + 1 }),
    }
}

pub fn verify_bei(space: &QUSpace, lift_cap: usize, exec: Exec) -> Result<BeiReport> {
    let (entourage, v) = hypothesis_entourage(space)?;
    let n = space.size();
    let stable: Vec<PFilter> = PFilter::all(n)
        .filter(|f| filters::stability_profile(space, f).doubly_stable)
        .collect();
    let audits = exec.map(&stable, |f| {
        let mut audit = Audit::new();
        let v_f = filters::u_sub_f(&v, f);
        let c = filters::double_cluster_points(space, f);
        audit.check(v_f == c, "V_F = C(F)", || json!({ "filter": f, "v_f": v_f, "double_cluster": c }));
        audit.check(f.contains(&c), "C(F) is a member of F", || json!({ "filter": f, "double_cluster": c }));
        audit
    });
    let audit = Audit::merged(audits);
    let cluster_condition = cluster_condition_check(space, lift_cap, exec)?;
    let lift_bicomplete = cluster_condition.lift_bicomplete;
    let holds = audit.passed() && cluster_condition.holds && cluster_condition.consistent() && lift_bicomplete != Some(false);
    Ok(BeiReport {
        entourage,
        doubly_stable_filters: stable.len() as u64,
        audit,
        cluster_condition,
        lift_bicomplete,
        holds,
    })
}

/// The 4-point space with base `{id ∪ {(1,2), (1,3)}}` (1-based).
pub fn fork_space() -> QUSpace {
    let v = Relation::from_pairs(4, [(0, 1), (0, 2)]);
    QUSpace::from_base(4, vec![v]).expect("transitive")
}

/// Named spaces meeting the hypothesis: the fork space and every preorder on
/// at most four points that meets it, as a single-entourage base.
pub fn bei_catalogue() -> Vec<(String, QUSpace)> {
    let mut out = vec![("fork".to_string(), fork_space())];
    out.extend(preorder_spaces().filter(|(_, s)| hypothesis_violation(s.min_entourage()).is_none()));
    out
}

/// Preorders on at most four points violating the hypothesis.
pub fn bei_violators() -> Vec<(String, QUSpace)> {
    preorder_spaces()
        .filter(|(_, s)| hypothesis_violation(s.min_entourage()).is_some())
        .collect()
}

fn preorder_spaces() -> impl Iterator<Item = (String, QUSpace)> {
    (1..=4).flat_map(|n| {
        preorders(n).enumerate().map(move |(i, r)| {
            let space = QUSpace::from_base(n, vec![r]).expect("preorders are transitive");
            (format!("preorder-{n}-{i}"), space)
        })
    })
}
