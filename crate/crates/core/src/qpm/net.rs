use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::relcore::{nonempty_subsets, PointSet};

use super::rational::{format_rat, int, require_positive, serialize_rat, Rat};
use super::space::QPSpace;

/// Largest point list whose subsets are enumerated for net transfer.
pub const TRANSFER_LIMIT: usize = 12;

/// Greedy `eps`-net: scan points in order and keep each point not yet
/// inside the forward ball of a kept one.
pub fn eps_net(space: &QPSpace, eps: &Rat) -> Result<PointSet> {
    require_positive(eps)?;
    let n = space.size();
    let mut net = PointSet::empty(n);
    let mut covered = PointSet::empty(n);
    for x in 0..n {
        if !covered.contains(x) {
            net.insert(x);
            covered.union_with(&space.ball(x, eps));
        }
    }
    Ok(net)
}

/// `⋃_{f∈net} B(f, eps)` is every point.
pub fn covers(space: &QPSpace, net: &PointSet, eps: &Rat) -> bool {
    (0..space.size()).all(|y| net.iter().any(|f| space.dist(f, y) < eps))
}

pub fn is_precompact_at(space: &QPSpace, eps: &Rat) -> Result<bool> {
    let net = eps_net(space, eps)?;
    Ok(covers(space, &net, eps))
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    #[serde(serialize_with = "serialize_rat")]
    pub eps: Rat,
    pub net: PointSet,
    pub hyper_net_size: usize,
    pub subsets: u64,
    pub audit: Audit,
}

/// Transfers an `eps`-net of the points to a `3·eps`-net of the Hausdorff
/// distance on all nonempty subsets, and a `3·eps`-net of the Hausdorff level
/// back to the points through singletons.
pub fn net_transfer(space: &QPSpace, eps: &Rat, exec: Exec) -> Result<TransferReport> {
    let n = space.size();
    if n > TRANSFER_LIMIT {
        return Err(Error::CapExceeded {
            what: "net transfer point list",
            size: n,
            cap: TRANSFER_LIMIT,
        });
    }
    let net = eps_net(space, eps)?;
    let wide = eps * int(3);
    let mut audit = Audit::new();
    audit.check(covers(space, &net, eps), "base net covers", || json!({ "net": net }));

    let subsets: Vec<PointSet> = nonempty_subsets(n).collect();
    let upward = exec.map(&subsets, |a| {
        let centre = PointSet::from_points(n, net.iter().filter(|&f| a.iter().any(|y| space.dist(f, y) < eps)));
        let ok = !centre.is_empty()
            && space.hausdorff(&centre, a).map(|h| h < wide).unwrap_or(false);
        let mut audit = Audit::new();
        audit.check(ok, "subset of the net within 3 eps", || json!({ "set": a, "centre": centre }));
        audit
    });
    audit.merge(Audit::merged(upward));

    // A Hausdorff-level greedy net built without reference to `net`.
    let mut hyper_net: Vec<&PointSet> = Vec::new();
    let mut covered = vec![false; subsets.len()];
    for (i, b) in subsets.iter().enumerate() {
        if covered[i] {
            continue;
        }
        hyper_net.push(b);
        for (j, a) in subsets.iter().enumerate() {
            if !covered[j] && space.hausdorff(b, a)? < wide {
                covered[j] = true;
            }
        }
    }
    let back = PointSet::from_points(n, hyper_net.iter().filter_map(|b| b.first()));
    audit.check(covers(space, &back, &wide), "singleton restriction is a 3 eps net", || {
        json!({ "points": back, "eps": format_rat(&wide) })
    });
    for y in 0..n {
        let single = PointSet::singleton(n, y);
        let centre = hyper_net.iter().find(|b| space.hausdorff(b, &single).map(|h| h < wide).unwrap_or(false));
        let ok = centre.is_some_and(|b| b.iter().all(|x| space.dist(x, y) < &wide));
        audit.check(ok, "centres of singletons lie within 3 eps", || json!({ "point": y + 1 }));
    }

    Ok(TransferReport {
        eps: *eps,
        net,
        hyper_net_size: hyper_net.len(),
        subsets: subsets.len() as u64,
        audit,
    })
}
