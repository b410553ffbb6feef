//! Whole-module audits over tables, seeded random cases and exhaustive grids.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::audit::Audit;
use crate::exec::Exec;
use crate::relcore::{nonempty_subsets, PointSet};

use super::cauchy::sorgenfrey_cauchy_probe;
use super::cover::cover_fact_check;
use super::interval::{catalogued_bases, fn_sets, Interval, IntervalSet};
use super::net::net_transfer;
use super::rational::{dyadic, format_rat, int, parse_rat, rat, sorgenfrey, Rat};
use super::space::QPSpace;
use super::tables::SORGENFREY_TABLE;

/// Frozen table of Sorgenfrey values.
pub fn audit_sorgenfrey_table() -> Audit {
    let mut audit = Audit::new();
    for (x, y, expected) in SORGENFREY_TABLE {
        let parsed = (parse_rat(x), parse_rat(y), parse_rat(expected));
        let ok = match parsed {
            (Ok(x), Ok(y), Ok(e)) => sorgenfrey(&x, &y) == e,
            _ => false,
        };
        audit.check(ok, "table value", || json!({ "x": x, "y": y, "expected": expected }));
    }
    audit
}

fn random_rat(rng: &mut ChaCha8Rng, span: i128, max_denom: i128) -> Rat {
    let denom = rng.gen_range(1..=max_denom);
    rat(rng.gen_range(-span * denom..=span * denom), denom)
}

/// `sˢ(x, y) = max(|x − y|, 1)` for distinct random rationals, with the
/// symmetrization computed by [`QPSpace::symmetrize`].
pub fn audit_symmetrization(seed: u64, cases: usize) -> Audit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut audit = Audit::new();
    let mut done = 0;
    while done < cases {
        let x = random_rat(&mut rng, 3, 48);
        let y = if rng.gen_bool(0.3) { x + rat(rng.gen_range(1..=64), 64) } else { random_rat(&mut rng, 3, 48) };
        if x == y {
            continue;
        }
        done += 1;
        let sym = QPSpace::sorgenfrey(vec![x, y]).symmetrize();
        let expected = (x - y).abs().max(Rat::one());
        audit.check(*sym.dist(0, 1) == expected && *sym.dist(1, 0) == expected, "symmetrized distance", || {
            json!({ "x": format_rat(&x), "y": format_rat(&y), "got": format_rat(sym.dist(0, 1)) })
        });
    }
    audit
}

/// Triangle inequality of the Hausdorff distance over every triple of
/// nonempty subsets.
pub fn audit_hausdorff_triangle(space: &QPSpace, exec: Exec) -> Audit {
    let n = space.size();
    let subsets: Vec<PointSet> = nonempty_subsets(n).collect();
    let table: Vec<Vec<Rat>> = exec.map(&subsets, |a| {
        subsets.iter().map(|b| space.hausdorff(a, b).expect("nonempty")).collect()
    });
    let indices: Vec<usize> = (0..subsets.len()).collect();
    let audits = exec.map(&indices, |&i| {
        let mut audit = Audit::new();
        audit.check(table[i][i].is_zero(), "H(a, a) = 0", || json!({ "a": subsets[i] }));
        for j in 0..subsets.len() {
            for k in 0..subsets.len() {
                audit.check(table[i][k] <= table[i][j] + table[j][k], "triangle inequality", || {
                    json!({ "a": subsets[i], "b": subsets[j], "c": subsets[k] })
                });
            }
        }
        audit
    });
    Audit::merged(audits)
}

/// `H(a, b) < eps` exactly when `(a, b)` lies in the lift of `{d < eps}`.
pub fn audit_hausdorff_membership(space: &QPSpace, scales: &[Rat]) -> Audit {
    let mut audit = Audit::new();
    let subsets: Vec<PointSet> = nonempty_subsets(space.size()).collect();
    for eps in scales {
        let u = match space.entourage(eps) {
            Ok(u) => u,
            Err(e) => {
                audit.fail("entourage", json!(e.to_string()));
                continue;
            }
        };
        for a in &subsets {
            for b in &subsets {
                let close = space.hausdorff(a, b).map(|h| h < *eps).unwrap_or(false);
                audit.check(close == crate::hyperspace::hyper_member(&u, a, b), "ball membership", || {
                    json!({ "a": a, "b": b, "eps": format_rat(eps) })
                });
            }
        }
    }
    audit
}

/// Random sequences converging to `y` fast enough for the check's tolerance.
pub fn convergent_sequences(seed: u64, count: usize) -> Vec<(Rat, Vec<Rat>, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let y = random_rat(&mut rng, 4, 64);
            let n = rng.gen_range(0..=6u32);
            let len = n + 5 + rng.gen_range(0..12u32);
            let seq = (0..len)
                .map(|m| {
                    let scale = rat(rng.gen_range(-8..=8), 8);
                    y + scale * dyadic(m)
                })
                .collect();
            (y, seq, n)
        })
        .collect()
}

pub fn audit_cover_fact(seed: u64, count: usize) -> Audit {
    let mut audit = Audit::new();
    for (y, seq, n) in convergent_sequences(seed, count) {
        match cover_fact_check(&y, &seq, n) {
            Ok(v) => audit.check(v.covered(), "no counterwitness", || {
                json!({ "y": format_rat(&y), "n": n, "witnesses": v.counterwitnesses })
            }),
            Err(e) => audit.fail("convergent input refused", json!({ "y": format_rat(&y), "error": e.to_string() })),
        }
    }
    audit
}

/// Membership in the double cluster set by probing `[x, x + δ)` and
/// `(x − δ, x]` with `δ` far below every gap and piece length.
fn double_cluster_by_probe(set: &IntervalSet, x: &Rat) -> bool {
    let delta = dyadic(40);
    let right = IntervalSet::from_intervals(Interval::new(*x, true, x + delta, false));
    let left = IntervalSet::from_intervals(Interval::new(x - delta, false, *x, true));
    !set.intersection(&right).is_empty() && !set.intersection(&left).is_empty()
}

fn probe_points(set: &IntervalSet) -> Vec<Rat> {
    let tiny = rat(1, 1024);
    let mut out = Vec::new();
    let mut ends = Vec::new();
    for p in set.pieces() {
        ends.push(p.lo);
        ends.push(p.hi);
        out.push((p.lo + p.hi) / int(2));
    }
    for w in ends.windows(2) {
        out.push((w[0] + w[1]) / int(2));
    }
    for e in ends {
        out.extend([e - tiny, e, e + tiny]);
    }
    out
}

/// `F_n` decreases, contains the double cluster set `C`, and equals it once
/// `2^{-n}` is at most half the smallest gap, so `⋂ F_n = C`; `C` is also
/// compared with direct probing.
pub fn audit_fn_sets(n_max: u32) -> Audit {
    let mut audit = Audit::new();
    for (name, base) in catalogued_bases() {
        let least = base.last().expect("nonempty base");
        let c = least.double_cluster();
        for x in probe_points(least) {
            audit.check(c.contains(&x) == double_cluster_by_probe(least, &x), "double cluster set", || {
                json!({ "base": name, "point": format_rat(&x) })
            });
        }
        let settle = least
            .min_gap()
            .map(|g| (0..n_max).find(|&n| dyadic(n) * int(2) <= g).unwrap_or(n_max))
            .unwrap_or(0);
        let mut previous: Option<IntervalSet> = None;
        for n in 0..=n_max.max(settle + 2) {
            let f = match fn_sets(&base, n) {
                Ok(f) => f,
                Err(e) => {
                    audit.fail("fn_sets", json!({ "base": name, "error": e.to_string() }));
                    break;
                }
            };
            if let Some(prev) = &previous {
                audit.check(f.is_subset(prev), "F_n decreasing", || json!({ "base": name, "n": n }));
            }
            audit.check(c.is_subset(&f), "C inside F_n", || json!({ "base": name, "n": n, "f_n": f }));
            if n >= settle {
                audit.check(f == c, "F_n settles at C", || json!({ "base": name, "n": n, "f_n": f, "c": c }));
            }
            previous = Some(f);
        }
    }
    audit
}

/// Net transfer at each scale over all subsets of `grid`.
pub fn audit_net_transfer(grid: &QPSpace, scales: &[Rat], exec: Exec) -> Audit {
    let mut audit = Audit::new();
    for eps in scales {
        match net_transfer(grid, eps, exec) {
            Ok(r) => audit.merge(r.audit),
            Err(e) => audit.fail("net transfer", json!({ "eps": format_rat(eps), "error": e.to_string() })),
        }
    }
    audit
}

/// Sorgenfrey Cauchy sequences at scale `≤ 1` are exactly those with a
/// constant tail, and each converges to its tail value.
pub fn audit_cauchy(seed: u64, count: usize) -> Audit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut audit = Audit::new();
    for _ in 0..count {
        let len = rng.gen_range(2..16);
        let settle = rng.gen_range(0..len);
        let tail = random_rat(&mut rng, 2, 16);
        let seq: Vec<Rat> = (0..len)
            .map(|i| if i >= settle && rng.gen_bool(0.8) { tail } else { random_rat(&mut rng, 2, 16) })
            .collect();
        let eps = rat(rng.gen_range(1..=8), 8);
        let probe = sorgenfrey_cauchy_probe(&seq, &eps).expect("valid probe");
        let tail_part = &seq[probe.tail_start..];
        let constant = tail_part.iter().all(|b| *b == tail_part[0]);
        audit.check(probe.cauchy == constant, "Cauchy iff constant tail", || {
            json!({ "seq": seq.iter().map(format_rat).collect::<Vec<_>>() })
        });
        audit.check(!probe.cauchy || probe.limit.is_some(), "Cauchy sequences converge", || {
            json!({ "seq": seq.iter().map(format_rat).collect::<Vec<_>>() })
        });
    }
    audit
}

/// The 6-point grid `{0, 1/4, ..., 5/4}` used for exhaustive triangle checks.
pub fn triangle_grid() -> QPSpace {
    QPSpace::sorgenfrey_grid(int(0), rat(1, 4), 6)
}

/// The 8-point grid `{0, 1/8, ..., 7/8}` used for net transfer.
pub fn transfer_grid() -> QPSpace {
    QPSpace::sorgenfrey_grid(int(0), rat(1, 8), 8)
}

pub fn transfer_scales() -> Vec<Rat> {
    vec![rat(1, 8), rat(1, 4), rat(1, 2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_symmetrization() {
        assert!(audit_sorgenfrey_table().passed());
        let a = audit_symmetrization(3, 200);
        assert!(a.passed() && a.cases == 200);
    }

    #[test]
    fn fn_sets_catalogue() {
        let a = audit_fn_sets(12);
        assert!(a.passed(), "{:?}", a.violations);
    }

    #[test]
    fn cover_and_cauchy_samples() {
        assert!(audit_cover_fact(5, 60).passed());
        let c = audit_cauchy(9, 200);
        assert!(c.passed(), "{:?}", c.violations);
    }

    #[test]
    fn small_triangle_sweep() {
        let grid = QPSpace::sorgenfrey_grid(int(0), rat(1, 2), 4);
        assert!(audit_hausdorff_triangle(&grid, Exec::Sequential).passed());
        assert!(audit_hausdorff_membership(&grid, &[rat(1, 2), int(1)]).passed());
    }
}
