//! The natural numbers ordered by `≤` and punctured by the relations `T_p`:
//! a quasi-uniform space in which the filter 𝒢 is doubly stable with double
//! cluster set `{1}`, yet the double cluster condition fails at `U = ≤`.
//!
//! Universal statements over the entourage base are checked for every base
//! entourage whose punctures lie in `[1, bound_s]`; statements about points
//! are checked on `[1, bound_n − 1]`. The report carries both bounds.

use serde::Serialize;
use serde_json::json;

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;

use super::truncation::{window, TruncatedEntourage, TruncationOracle};
use super::{CofSet, SymEntourage, SymFilter};

/// Largest puncture bound accepted; the sweep has `2^(bound_s + 1)` entourages.
pub const MAX_PUNCTURE_BOUND: u64 = 20;
/// Largest truncation accepted for the matrix oracle.
pub const MAX_TRUNCATION: u64 = 4096;

#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub audit: Audit,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogueEntry {
    pub filter: SymFilter,
    /// Stable under every swept entourage.
    pub stable: bool,
    pub kernel: CofSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContraReport {
    pub bound_s: u64,
    pub bound_n: u64,
    pub entourages_checked: u64,
    /// `C(𝒢) ∩ [1, bound_s]`.
    pub double_cluster_set: CofSet,
    pub stable_catalogue: Vec<CatalogueEntry>,
    pub clauses: Vec<Clause>,
    /// Symbolic closed forms against the truncation oracle.
    pub oracle: Audit,
    pub holds: bool,
}

impl ContraReport {
    pub fn clause(&self, name: &str) -> Option<&Audit> {
        self.clauses.iter().find(|c| c.name == name).map(|c| &c.audit)
    }
}

/// Entourage number `i` of the sweep: bit 0 selects `≤`, the rest the punctures.
fn swept_entourage(i: u64) -> SymEntourage {
    let mask = i >> 1;
    SymEntourage::new(i & 1 == 1, (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1))
}

fn catalogue() -> Vec<SymFilter> {
    vec![
        SymFilter::GFilter,
        SymFilter::Cofinite,
        SymFilter::Principal(CofSet::singleton(1)),
        SymFilter::Principal(CofSet::finite([2, 5])),
        SymFilter::Principal(CofSet::ray(3)),
        SymFilter::Principal(CofSet::cofinite_without([1])),
        SymFilter::Principal(CofSet::naturals()),
    ]
}

/// Sets whose images are compared against the oracle.
fn probe_sets(bound_s: u64) -> Vec<CofSet> {
    vec![
        CofSet::singleton(1),
        CofSet::singleton(2),
        CofSet::singleton(bound_s),
        CofSet::singleton(bound_s + 1),
        CofSet::finite([2, 3]),
        CofSet::finite([1, 5, 9]),
        CofSet::interval(3, bound_s),
        CofSet::ray(5),
        CofSet::cofinite_without([1, 4]),
        CofSet::singleton(1).union(&CofSet::ray(bound_s + 1)),
    ]
}

#[derive(Default)]
struct SweepRow {
    doubly_stable: Audit,
    oracle: Audit,
    neighbourhoods_cofinite: Audit,
    u_g: Option<CofSet>,
    stable: Vec<bool>,
}

fn compare(audit: &mut Audit, what: &str, e: &SymEntourage, a: &CofSet, symbolic: Result<CofSet>, n: u64, truncated: impl FnOnce() -> std::collections::BTreeSet<u64>) {
    match symbolic {
        Ok(s) => {
            let expected = window(&s, n);
            let got = truncated();
            audit.check(got == expected, what, || {
                json!({ "entourage": e.to_string(), "set": a, "symbolic": s, "truncated": got })
            });
        }
        Err(err) => audit.fail(what, json!({ "entourage": e.to_string(), "set": a, "error": err.to_string() })),
    }
}

fn sweep_one(e: &SymEntourage, oracle: &TruncationOracle, probes: &[CofSet], cat: &[SymFilter], bound_s: u64) -> SweepRow {
    let n = oracle.bound();
    let t: TruncatedEntourage = oracle.entourage(e);
    let mut row = SweepRow::default();

    match SymFilter::GFilter.u_sub_f(e) {
        Ok(g) => {
            row.doubly_stable.check(SymFilter::GFilter.contains(&g), "G is doubly stable", || {
                json!({ "entourage": e.to_string(), "u_g": g })
            });
            row.u_g = Some(g);
        }
        Err(err) => row.doubly_stable.fail("G is doubly stable", json!(err.to_string())),
    }

    for a in probes {
        compare(&mut row.oracle, "image", e, a, e.image(a), n, || t.image(a));
        compare(&mut row.oracle, "preimage", e, a, e.preimage(a), n, || t.preimage(a));
        compare(&mut row.oracle, "sym_image", e, a, e.sym_image(a), n, || t.sym_image(a));
    }
    for f in cat {
        let probe = CofSet::empty();
        compare(&mut row.oracle, "u_sub_f", e, &probe, f.u_sub_f(e), n, || t.u_sub_f(f));
        row.stable.push(f.is_stable(e).unwrap_or(false));
    }

    for x in 1..=bound_s + 2 {
        let nb = e.image(&CofSet::singleton(x));
        let ok = matches!(&nb, Ok(s) if s.is_cofinite() && s.contains(x));
        row.neighbourhoods_cofinite.check(ok, "U(x) is a cofinite neighbourhood of x", || {
            json!({ "entourage": e.to_string(), "point": x })
        });
    }
    row
}

/// Certifies the counterexample for every base entourage with punctures in
/// `[1, bound_s]`, comparing closed forms with `bound_n`-point truncations.
pub fn verify_contra(bound_s: u64, bound_n: u64, exec: Exec) -> Result<ContraReport> {
    if bound_s < 3 {
        return Err(Error::BoundsTooSmall(format!("puncture bound {bound_s} < 3")));
    }
    if bound_n < 4 * bound_s {
        return Err(Error::BoundsTooSmall(format!(
            "truncation {bound_n} < 4 x puncture bound {bound_s}"
        )));
    }
    if bound_s > MAX_PUNCTURE_BOUND {
        return Err(Error::CapExceeded {
            what: "puncture bound",
            size: bound_s as usize,
            cap: MAX_PUNCTURE_BOUND as usize,
        });
    }
    if bound_n > MAX_TRUNCATION {
        return Err(Error::CapExceeded {
            what: "truncation bound",
            size: bound_n as usize,
            cap: MAX_TRUNCATION as usize,
        });
    }

    let oracle = TruncationOracle::new(bound_n, bound_s);
    let probes = probe_sets(bound_s);
    let cat = catalogue();
    let count = 2u64 << bound_s;
    let rows = exec.map_range(0..count, |i| sweep_one(&swept_entourage(i), &oracle, &probes, &cat, bound_s));

    let mut doubly_stable = Audit::new();
    let mut oracle_audit = Audit::new();
    let mut topology = Audit::new();
    let mut cluster_core = CofSet::naturals();
    let mut stable_all = vec![true; cat.len()];
    for row in rows {
        doubly_stable.merge(row.doubly_stable);
        oracle_audit.merge(row.oracle);
        topology.merge(row.neighbourhoods_cofinite);
        if let Some(g) = row.u_g {
            cluster_core = cluster_core.intersection(&g);
        }
        for (acc, s) in stable_all.iter_mut().zip(row.stable) {
            *acc &= s;
        }
    }

    let leq = SymEntourage::leq();
    let one = CofSet::singleton(1);

    // (ii) C(𝒢) is the intersection of 𝒢's U_𝒢 over all entourages.
    let mut cluster = Audit::new();
    let kernel = SymFilter::GFilter.kernel();
    cluster.check(kernel == one, "kernel of G is {1}", || json!({ "kernel": kernel }));
    let double_cluster_set = cluster_core.intersection(&CofSet::interval(1, bound_s));
    cluster.check(double_cluster_set == one, "C(G) is {1} within the bound", || {
        json!({ "double_cluster_set": double_cluster_set })
    });
    for x in 2..=bound_s {
        let e = SymEntourage::new(true, [x]);
        let excluded = SymFilter::GFilter.u_sub_f(&e).map(|u| !u.contains(x)).unwrap_or(false);
        cluster.check(excluded, "each x > 1 is separated by <= & T_x", || json!({ "point": x }));
    }

    let mut conjugate = Audit::new();
    for x in 1..=bound_s {
        let e = SymEntourage::new(true, [x]);
        let nb = e.preimage(&CofSet::singleton(x));
        let truncated = oracle.entourage(&e).preimage(&CofSet::singleton(x));
        let ok = matches!(&nb, Ok(s) if *s == CofSet::singleton(x)) && truncated == window(&CofSet::singleton(x), bound_n);
        conjugate.check(ok, "U^-1(x) = {x} for U = <= & T_x", || json!({ "point": x }));
    }

    // Every cofinite set with holes in [1, bound_s] is τ(𝒰)-open; points
    // above bound_s + 1 behave like bound_s + 1.
    for holes in 0..1u64 << bound_s {
        let holes: Vec<u64> = (0..bound_s).filter(|b| holes >> b & 1 == 1).map(|b| b + 1).collect();
        let a = CofSet::cofinite_without(holes.iter().copied());
        let e = SymEntourage::new(true, holes.iter().copied());
        for x in (1..=bound_s + 1).filter(|&x| a.contains(x)) {
            let ok = e.image(&CofSet::singleton(x)).map(|nb| nb.is_subset(&a)).unwrap_or(false);
            topology.check(ok, "cofinite sets are open", || json!({ "set": a, "point": x }));
        }
    }

    // (iii) cluster at U = ≤.
    let mut kr = Audit::new();
    let pre = leq.preimage(&one)?;
    kr.check(pre == one, "<=^-1(C(G)) = {1}", || json!({ "preimage": pre }));
    let truncated = oracle.entourage(&leq).preimage(&one);
    kr.check(truncated == window(&one, bound_n), "<=^-1({1}) matches the oracle", || json!({ "truncated": truncated }));
    let target = pre.intersection(&leq.image(&one)?);
    kr.check(!SymFilter::GFilter.contains(&target), "no member of G inside U^-1(C) & U(C)", || {
        json!({ "target": target })
    });

    // (iv) {G ∖ {1}} is the cofinite filter.
    let mut residue = Audit::new();
    for k in 2..=bound_n {
        let left = SymFilter::GFilter.base_member(k).difference(&one);
        let right = SymFilter::Cofinite.base_member(k);
        residue.check(left == right, "base members agree", || json!({ "k": k, "residue": left, "cofinite": right }));
    }
    for a in probes.iter().chain([CofSet::cofinite_without([1]), CofSet::empty()].iter()) {
        let in_residue = SymFilter::GFilter.contains(&a.union(&one));
        residue.check(in_residue == SymFilter::Cofinite.contains(a), "same members", || json!({ "set": a }));
    }

    // (v) Stable catalogued filters have a nonempty kernel.
    let mut kernels = Audit::new();
    let stable_catalogue: Vec<CatalogueEntry> = cat
        .into_iter()
        .zip(stable_all)
        .map(|(filter, stable)| {
            let kernel = filter.kernel();
            kernels.check(!stable || !kernel.is_empty(), "stable filter with empty kernel", || {
                json!({ "filter": filter })
            });
            CatalogueEntry { filter, stable, kernel }
        })
        .collect();
    kernels.check(
        stable_catalogue[0].stable && !stable_catalogue[1].stable,
        "G is stable and the cofinite filter is not",
        || json!({}),
    );

    // 𝒢 is not stable for the symmetrized entourage ≤ ∩ ≥ and has no τ(𝒰ˢ)-limit.
    let mut symmetric = Audit::new();
    let core = SymFilter::GFilter.sym_stable_core(&leq)?;
    symmetric.check(!SymFilter::GFilter.contains(&core), "G is not stable under the symmetrization", || {
        json!({ "core": core })
    });
    for x in 1..bound_n {
        let nb = leq.sym_image(&CofSet::singleton(x))?;
        symmetric.check(!SymFilter::GFilter.contains(&nb), "x is not a symmetric limit of G", || json!({ "point": x }));
    }

    let clauses = vec![
        Clause { name: "doubly_stable", audit: doubly_stable },
        Clause { name: "double_cluster_set", audit: cluster },
        Clause { name: "cluster_condition_fails", audit: kr },
        Clause { name: "residue_is_cofinite", audit: residue },
        Clause { name: "stable_kernels_nonempty", audit: kernels },
        Clause { name: "conjugate_topology_discrete", audit: conjugate },
        Clause { name: "topology_is_cofinite", audit: topology },
        Clause { name: "not_symmetrically_stable", audit: symmetric },
    ];
    let holds = clauses.iter().all(|c| c.audit.passed()) && oracle_audit.passed();
    Ok(ContraReport {
        bound_s,
        bound_n,
        entourages_checked: count,
        double_cluster_set,
        stable_catalogue,
        clauses,
        oracle: oracle_audit,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_certify() {
        let r = verify_contra(4, 16, Exec::Sequential).unwrap();
        for c in &r.clauses {
            assert!(c.audit.passed(), "{}: {:?}", c.name, c.audit.violations);
        }
        assert!(r.oracle.passed(), "{:?}", r.oracle.violations);
        assert!(r.holds);
        assert_eq!(r.entourages_checked, 32);
        assert_eq!(r.double_cluster_set, CofSet::singleton(1));
    }

    #[test]
    fn refuses_small_bounds() {
        assert!(matches!(verify_contra(2, 100, Exec::Sequential), Err(Error::BoundsTooSmall(_))));
        assert!(matches!(verify_contra(5, 19, Exec::Sequential), Err(Error::BoundsTooSmall(_))));
    }

    #[test]
    fn sweep_enumerates_all_puncture_sets() {
        assert_eq!(swept_entourage(0), SymEntourage::new(false, []));
        assert_eq!(swept_entourage(1), SymEntourage::leq());
        assert_eq!(swept_entourage(0b1011), SymEntourage::new(true, [1, 3]));
    }

    #[test]
    fn random_entourages_keep_g_doubly_stable() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let oracle = TruncationOracle::new(200, 12);
        for _ in 0..20 {
            let e = SymEntourage::new(rng.gen(), (1..=12).filter(|_| rng.gen_bool(0.4)));
            let u = SymFilter::GFilter.u_sub_f(&e).unwrap();
            assert!(SymFilter::GFilter.contains(&u), "{e}");
            assert_eq!(oracle.entourage(&e).u_sub_f(&SymFilter::GFilter), window(&u, 200));
        }
    }
}
