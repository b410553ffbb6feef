//! Check registry and suite runner.
//!
//! Finite checks run over a corpus and report once per check, with the
//! corpus digest as space hash and the offending spaces named in the
//! witnesses. Symbolic and metric checks report once per object checked.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::audit::Audit;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filters;
use crate::hyperspace;
use crate::natline::{self, MAX_PUNCTURE_BOUND};
use crate::qpm::checks as metric;
use crate::qpm::rational::int;
use crate::qpm::{format_rat, rat, Rat};
use crate::relcore::{PointSet, QUSpace};
use crate::stability::{self, Outcome, StabilitySpace};

use super::caps::Caps;
use super::corpus::{reference_corpus, random_corpus, Corpus};
use super::report::{sha256_hex, sort_reports, Bounds, CheckReport, Verdict};

/// Truncation bounds of the symbolic counterexample in the suite.
pub const CONTRA_BOUND_S: u64 = 12;
pub const CONTRA_BOUND_N: u64 = 200;

/// Case counts of the seeded metric audits.
pub const SYMMETRIZATION_CASES: usize = 1000;
pub const COVER_SEQUENCES: usize = 500;
pub const CAUCHY_SEQUENCES: usize = 200;
pub const FN_SETS_DEPTH: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Finite,
    Symbolic,
    Metric,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "finite" => Ok(Suite::Finite),
            "symbolic" => Ok(Suite::Symbolic),
            "metric" => Ok(Suite::Metric),
            other => Err(Error::UnknownSuite(other.into())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Finite => "finite",
            Suite::Symbolic => "symbolic",
            Suite::Metric => "metric",
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    pub caps: Caps,
    pub exec: Exec,
}

/// Per-space state shared by the finite checks.
pub struct SpaceContext<'a> {
    pub space: &'a QUSpace,
    pub caps: Caps,
    pub exec: Exec,
    stability: OnceCell<Option<StabilitySpace>>,
}

impl<'a> SpaceContext<'a> {
    pub fn new(space: &'a QUSpace, caps: Caps, exec: Exec) -> Self {
        SpaceContext {
            space,
            caps,
            exec,
            stability: OnceCell::new(),
        }
    }

    /// `S_D(X)`, built once; a failed build is redone to recover its error.
    fn stability(&self) -> Result<&StabilitySpace> {
        let cell = self
            .stability
            .get_or_init(|| StabilitySpace::build(self.space, self.caps.ground, self.exec).ok());
        match cell {
            Some(sd) => Ok(sd),
            None => StabilitySpace::build(self.space, self.caps.ground, self.exec).map(|_| unreachable!()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// 200 seeded random spaces on at most five points.
    Random,
    /// Preorders and catalogue bases on at most four points plus 200
    /// random five-point spaces.
    Reference,
}

type FiniteFn = fn(&SpaceContext) -> Result<Outcome>;

pub struct FiniteCheck {
    pub id: &'static str,
    pub corpus: CorpusKind,
    run: FiniteFn,
}

impl FiniteCheck {
    pub fn run(&self, ctx: &SpaceContext) -> Result<Outcome> {
        (self.run)(ctx)
    }
}

fn checked(audit: Audit) -> Result<Outcome> {
    Ok(Outcome::checked(audit))
}

/// One point from each `Mˢ`-class: the least set that is dense in τ(𝒰ˢ).
fn class_representatives(space: &QUSpace) -> PointSet {
    let sym = space.min_symmetric();
    PointSet::from_points(space.size(), (0..space.size()).filter(|&x| sym.row(x).first() == Some(x)))
}

fn cluster_condition_consistency(ctx: &SpaceContext) -> Result<Outcome> {
    let v = hyperspace::cluster_condition_check(ctx.space, ctx.caps.lift, ctx.exec)?;
    let mut audit = Audit::new();
    audit.check(v.consistent(), "condition forms agree with the lift", || json!(v));
    checked(audit)
}

const FINITE_CHECKS: &[FiniteCheck] = &[
    FiniteCheck {
        id: "finite.lifted_axioms",
        corpus: CorpusKind::Random,
        run: |c| checked(stability::audit_lifted_axioms(c.space, c.caps.lift, c.exec)?),
    },
    FiniteCheck {
        id: "finite.subspace_stability",
        corpus: CorpusKind::Reference,
        run: |c| checked(filters::audit_subspace_stability(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.two_envelope",
        corpus: CorpusKind::Reference,
        run: |c| checked(filters::audit_two_envelope(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.envelope_identity",
        corpus: CorpusKind::Reference,
        run: |c| checked(filters::audit_envelope_identity(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.open_base",
        corpus: CorpusKind::Reference,
        run: |c| checked(filters::audit_open_base(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.totally_bounded",
        corpus: CorpusKind::Reference,
        run: |c| checked(filters::audit_totally_bounded(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.ud_equivalence",
        corpus: CorpusKind::Reference,
        run: |c| checked(stability::audit_ud_equivalence(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.hyper_embedding",
        corpus: CorpusKind::Reference,
        run: |c| checked(stability::audit_embed_hyper(c.stability()?, c.exec)),
    },
    FiniteCheck {
        id: "finite.hyper_t0_classes",
        corpus: CorpusKind::Reference,
        run: |c| {
            let h = hyperspace::HyperSpace::new(c.space, c.caps.lift, c.exec)?;
            checked(hyperspace::hyper_t0_representatives(&h, c.exec).audit)
        },
    },
    FiniteCheck {
        id: "finite.conjugation",
        corpus: CorpusKind::Reference,
        run: |c| checked(stability::audit_conjugation(c.stability()?, c.caps.ground, c.exec)?),
    },
    FiniteCheck {
        id: "finite.oplus_sandwich",
        corpus: CorpusKind::Reference,
        run: |c| checked(stability::audit_oplus(c.space, c.exec)),
    },
    FiniteCheck {
        id: "finite.stability_bicomplete",
        corpus: CorpusKind::Reference,
        run: |c| Ok(stability::check_stability_bicomplete(c.stability()?)),
    },
    FiniteCheck {
        id: "finite.quotient_completion",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_quotient_completion(c.stability()?),
    },
    FiniteCheck {
        id: "finite.bicompletion_isomorphism",
        corpus: CorpusKind::Reference,
        run: |c| checked(stability::bicompletion(c.space)?.audit_isomorphism()),
    },
    FiniteCheck {
        id: "finite.bicompletion_quotients",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_bicompletion_quotients(c.space, c.caps.ground, c.exec),
    },
    FiniteCheck {
        id: "finite.bicompletion_restriction",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_bicompletion_restriction(c.space),
    },
    FiniteCheck {
        id: "finite.hyper_bicompleteness",
        corpus: CorpusKind::Reference,
        run: |c| Ok(stability::check_hyper_bicompleteness(c.space, c.caps.lift, c.exec)?.0),
    },
    FiniteCheck {
        id: "finite.bicompletion_families",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_bicompletion_families(c.space, c.caps.lift, c.caps.families, c.exec),
    },
    FiniteCheck {
        id: "finite.uniform_completion",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_uniform_completion(c.space, c.caps.lift, c.exec),
    },
    FiniteCheck {
        id: "finite.dense_traces",
        corpus: CorpusKind::Reference,
        run: |c| stability::check_dense_traces(c.space, &class_representatives(c.space)),
    },
    FiniteCheck {
        id: "finite.precompactness_transfer",
        corpus: CorpusKind::Reference,
        run: |c| Ok(stability::check_precompactness_transfer(c.stability()?)),
    },
    FiniteCheck {
        id: "finite.cluster_condition",
        corpus: CorpusKind::Reference,
        run: cluster_condition_consistency,
    },
];

pub fn finite_checks() -> &'static [FiniteCheck] {
    FINITE_CHECKS
}

pub fn finite_check(id: &str) -> Option<&'static FiniteCheck> {
    FINITE_CHECKS.iter().find(|c| c.id == id)
}

/// Errors meaning "this statement does not apply to this space".
fn not_applicable(err: &Error) -> bool {
    matches!(err, Error::CapExceeded { .. } | Error::NotT0(..) | Error::NotUniform(_))
}

fn caps_bounds(caps: &Caps) -> Bounds {
    let mut b = Bounds::new();
    b.insert("cap_ground".into(), json!(caps.ground));
    b.insert("cap_lift".into(), json!(caps.lift));
    b.insert("cap_families".into(), json!(caps.families));
    b
}

/// Runs one finite check on a single space.
pub fn run_finite_on_space(check: &FiniteCheck, space: &QUSpace, cfg: &SuiteConfig) -> CheckReport {
    let hash = super::spacefile::space_hash(space);
    let ctx = SpaceContext::new(space, cfg.caps, cfg.exec);
    let start = Instant::now();
    let result = check.run(&ctx);
    let ms = start.elapsed().as_millis() as u64;
    let bounds = caps_bounds(&cfg.caps);
    match result {
        Ok(o) => CheckReport::from_outcome(check.id, &hash, &o, bounds),
        Err(e) if not_applicable(&e) => CheckReport::skipped(check.id, &hash, &e.to_string(), bounds),
        Err(e) => CheckReport::from_error(check.id, &hash, &e, bounds),
    }
    .with_runtime(ms)
}

struct Tally {
    audit: Audit,
    checked: u64,
    skipped: u64,
    elapsed: Duration,
}

impl Tally {
    fn new() -> Self {
        Tally {
            audit: Audit::new(),
            checked: 0,
            skipped: 0,
            elapsed: Duration::ZERO,
        }
    }

    fn add(&mut self, name: &str, hash: &str, result: Result<Outcome>, elapsed: Duration) {
        self.elapsed += elapsed;
        let space = |w: Value| json!({ "space": name, "space_hash": hash, "detail": w });
        match result {
            Ok(o) if o.skipped.is_some() => self.skipped += 1,
            Ok(o) => {
                self.checked += 1;
                self.audit.cases += o.audit.cases;
                // Violations past the kept witnesses still count.
                let extra = o.audit.violation_count.saturating_sub(o.audit.violations.len() as u64);
                self.audit.violation_count += extra;
                for v in o.audit.violations {
                    self.audit.fail(&v.rule, space(v.witness));
                }
            }
            Err(e) if not_applicable(&e) => self.skipped += 1,
            Err(e) => {
                self.checked += 1;
                self.audit.fail("error", space(json!(e.to_string())));
            }
        }
    }

    fn report(self, id: &str, corpus: &Corpus, cfg: &SuiteConfig) -> CheckReport {
        let mut bounds = caps_bounds(&cfg.caps);
        bounds.insert("corpus".into(), json!(corpus.name));
        bounds.insert("seed".into(), json!(cfg.seed));
        bounds.insert("spaces".into(), json!(corpus.len()));
        bounds.insert("spaces_checked".into(), json!(self.checked));
        bounds.insert("spaces_skipped".into(), json!(self.skipped));
        let digest = corpus.digest();
        let report = if self.checked == 0 {
            CheckReport::skipped(id, &digest, "no space in the corpus qualifies", bounds)
        } else {
            CheckReport::from_audit(id, &digest, &self.audit, bounds)
        };
        report.with_runtime(self.elapsed.as_millis() as u64)
    }
}

/// Runs the given finite checks over one corpus, each space once for all checks.
fn run_finite_corpus(checks: &[&FiniteCheck], corpus: &Corpus, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let rows = cfg.exec.map(&corpus.entries, |entry| {
        let ctx = SpaceContext::new(&entry.space, cfg.caps, cfg.exec);
        checks
            .iter()
            .map(|c| {
                let start = Instant::now();
                let r = c.run(&ctx);
                (r, start.elapsed())
            })
            .collect::<Vec<_>>()
    });
    let mut tallies: Vec<Tally> = checks.iter().map(|_| Tally::new()).collect();
    for (entry, row) in corpus.entries.iter().zip(rows) {
        for (tally, (result, elapsed)) in tallies.iter_mut().zip(row) {
            tally.add(&entry.name, &entry.hash, result, elapsed);
        }
    }
    checks
        .iter()
        .zip(tallies)
        .map(|(c, t)| t.report(c.id, corpus, cfg))
        .collect()
}

fn run_finite(checks: &[&FiniteCheck], cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut out = vec![];
    for (kind, build) in [
        (CorpusKind::Random, random_corpus as fn(u64) -> Corpus),
        (CorpusKind::Reference, reference_corpus),
    ] {
        let selected: Vec<&FiniteCheck> = checks.iter().copied().filter(|c| c.corpus == kind).collect();
        if !selected.is_empty() {
            out.extend(run_finite_corpus(&selected, &build(cfg.seed), cfg));
        }
    }
    out
}

fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let r = f();
    r.with_runtime(start.elapsed().as_millis() as u64)
}

/// Space hash standing for a symbolic or parametric object.
fn descriptor_hash(descriptor: &str) -> String {
    sha256_hex(descriptor)
}

/// Reports for the counterexample on the natural numbers, one per clause
/// plus one for the truncation oracle. Bounds outside the accepted range
/// are an error.
pub fn contra_reports(bound_s: u64, bound_n: u64, exec: Exec) -> Result<Vec<CheckReport>> {
    let hash = descriptor_hash(&format!("natline contra bound_s={bound_s} bound_n={bound_n}"));
    let start = Instant::now();
    let r = natline::verify_contra(bound_s, bound_n, exec)?;
    let ms = start.elapsed().as_millis() as u64;
    let mut bounds = Bounds::new();
    bounds.insert("bound_s".into(), json!(bound_s));
    bounds.insert("bound_n".into(), json!(bound_n));
    bounds.insert("max_puncture_bound".into(), json!(MAX_PUNCTURE_BOUND));
    bounds.insert("entourages_checked".into(), json!(r.entourages_checked));
    bounds.insert("double_cluster_set".into(), json!(r.double_cluster_set));
    let mut out: Vec<CheckReport> = r
        .clauses
        .iter()
        .map(|c| CheckReport::from_audit(&format!("symbolic.contra.{}", c.name), &hash, &c.audit, bounds.clone()))
        .collect();
    out.push(CheckReport::from_audit("symbolic.contra.oracle", &hash, &r.oracle, bounds));
    Ok(out.into_iter().map(|c| c.with_runtime(ms)).collect())
}

fn catalogue_hash(prefix: &str, spaces: &[(String, QUSpace)]) -> String {
    let hashes: Vec<String> = spaces.iter().map(|(_, s)| super::spacefile::space_hash(s)).collect();
    descriptor_hash(&format!("{prefix}\n{}", hashes.join("\n")))
}

/// `verify_bei` over the witness catalogue, and the named failures on the
/// preorders that violate its hypothesis.
pub fn bei_reports(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let catalogue = natline::bei_catalogue();
    let witnesses = timed(|| {
        let audits = cfg.exec.map(&catalogue, |(name, space)| {
            let mut audit = Audit::new();
            match natline::verify_bei(space, cfg.caps.lift, Exec::Sequential) {
                Ok(r) => {
                    for v in &r.audit.violations {
                        audit.fail(&v.rule, json!({ "space": name, "detail": v.witness }));
                    }
                    audit.check(r.holds, "certificate holds", || {
                        json!({ "space": name, "cluster_condition": r.cluster_condition, "lift_bicomplete": r.lift_bicomplete })
                    });
                }
                Err(e) => audit.fail("hypothesis rejected", json!({ "space": name, "error": e.to_string() })),
            }
            audit
        });
        let mut bounds = caps_bounds(&cfg.caps);
        bounds.insert("spaces".into(), json!(catalogue.len()));
        CheckReport::from_audit("symbolic.bei", &catalogue_hash("bei catalogue", &catalogue), &Audit::merged(audits), bounds)
    });
    let violators = natline::bei_violators();
    let named = timed(|| {
        let audits = cfg.exec.map(&violators, |(name, space)| {
            let mut audit = Audit::new();
            let expected = natline::hypothesis_violation(space.min_entourage()).map(|x| x + 1);
            match natline::verify_bei(space, cfg.caps.lift, Exec::Sequential) {
                Err(Error::HypothesisViolated { point }) => {
                    audit.check(Some(point) == expected, "named point violates the hypothesis", || {
                        json!({ "space": name, "named": point, "expected": expected })
                    })
                }
                other => audit.fail(
                    "violation not named",
                    json!({ "space": name, "result": format!("{:?}", other.map(|r| r.holds)) }),
                ),
            }
            audit
        });
        let mut bounds = caps_bounds(&cfg.caps);
        bounds.insert("spaces".into(), json!(violators.len()));
        CheckReport::from_audit(
            "symbolic.bei.violators",
            &catalogue_hash("bei violators", &violators),
            &Audit::merged(audits),
            bounds,
        )
    });
    vec![witnesses, named]
}

fn symbolic_reports(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut out = contra_reports(CONTRA_BOUND_S, CONTRA_BOUND_N, cfg.exec).unwrap_or_else(|e| {
        let hash = descriptor_hash("natline contra");
        vec![CheckReport::from_error("symbolic.contra", &hash, &e, Bounds::new())]
    });
    out.extend(bei_reports(cfg));
    out
}

fn grid_descriptor(name: &str, grid: &crate::qpm::QPSpace) -> String {
    descriptor_hash(&format!("sorgenfrey {name} {}", grid.describe()))
}

fn rats(values: &[Rat]) -> Value {
    json!(values.iter().map(format_rat).collect::<Vec<_>>())
}

/// The scales at which Hausdorff balls are compared with lifted entourages.
pub fn membership_scales() -> Vec<Rat> {
    vec![rat(1, 8), rat(1, 4), rat(1, 2), int(1), int(2)]
}

type MetricFn = fn(&SuiteConfig) -> CheckReport;

const METRIC_CHECKS: &[(&str, MetricFn)] = &[
    ("metric.sorgenfrey_table", |_| {
        let mut b = Bounds::new();
        b.insert("table_rows".into(), json!(crate::qpm::tables::SORGENFREY_TABLE.len()));
        CheckReport::from_audit("metric.sorgenfrey_table", &descriptor_hash("sorgenfrey table"), &metric::audit_sorgenfrey_table(), b)
    }),
    ("metric.symmetrization", |cfg| {
        let mut b = Bounds::new();
        b.insert("seed".into(), json!(cfg.seed));
        b.insert("sample".into(), json!(SYMMETRIZATION_CASES));
        let audit = metric::audit_symmetrization(cfg.seed, SYMMETRIZATION_CASES);
        CheckReport::from_audit("metric.symmetrization", &descriptor_hash(&format!("sorgenfrey pairs seed={}", cfg.seed)), &audit, b)
    }),
    ("metric.hausdorff_triangle", |cfg| {
        let grid = metric::triangle_grid();
        let mut b = Bounds::new();
        b.insert("grid".into(), json!(grid.describe()));
        let audit = metric::audit_hausdorff_triangle(&grid, cfg.exec);
        CheckReport::from_audit("metric.hausdorff_triangle", &grid_descriptor("grid", &grid), &audit, b)
    }),
    ("metric.hausdorff_membership", |_| {
        let grid = metric::triangle_grid();
        let scales = membership_scales();
        let mut b = Bounds::new();
        b.insert("grid".into(), json!(grid.describe()));
        b.insert("scales".into(), rats(&scales));
        let audit = metric::audit_hausdorff_membership(&grid, &scales);
        CheckReport::from_audit("metric.hausdorff_membership", &grid_descriptor("grid", &grid), &audit, b)
    }),
    ("metric.cover_fact", |cfg| {
        let mut b = Bounds::new();
        b.insert("seed".into(), json!(cfg.seed));
        b.insert("sequences".into(), json!(COVER_SEQUENCES));
        let audit = metric::audit_cover_fact(cfg.seed, COVER_SEQUENCES);
        CheckReport::from_audit("metric.cover_fact", &descriptor_hash(&format!("cover sequences seed={}", cfg.seed)), &audit, b)
    }),
    ("metric.fn_sets", |_| {
        let mut b = Bounds::new();
        b.insert("depth".into(), json!(FN_SETS_DEPTH));
        let audit = metric::audit_fn_sets(FN_SETS_DEPTH);
        CheckReport::from_audit("metric.fn_sets", &descriptor_hash("catalogued interval bases"), &audit, b)
    }),
    ("metric.net_transfer", |cfg| {
        let grid = metric::transfer_grid();
        let scales = metric::transfer_scales();
        let mut b = Bounds::new();
        b.insert("grid".into(), json!(grid.describe()));
        b.insert("scales".into(), rats(&scales));
        let audit = metric::audit_net_transfer(&grid, &scales, cfg.exec);
        CheckReport::from_audit("metric.net_transfer", &grid_descriptor("grid", &grid), &audit, b)
    }),
    ("metric.cauchy", |cfg| {
        let mut b = Bounds::new();
        b.insert("seed".into(), json!(cfg.seed));
        b.insert("sequences".into(), json!(CAUCHY_SEQUENCES));
        let audit = metric::audit_cauchy(cfg.seed, CAUCHY_SEQUENCES);
        CheckReport::from_audit("metric.cauchy", &descriptor_hash(&format!("cauchy sequences seed={}", cfg.seed)), &audit, b)
    }),
];

fn metric_reports(cfg: &SuiteConfig) -> Vec<CheckReport> {
    cfg.exec.map(METRIC_CHECKS, |(_, f)| timed(|| f(cfg)))
}

/// All check ids, in canonical order. Symbolic ids name groups.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<&str> = FINITE_CHECKS.iter().map(|c| c.id).collect();
    ids.extend(["symbolic.contra", "symbolic.bei"]);
    ids.extend(METRIC_CHECKS.iter().map(|(id, _)| *id));
    ids.sort_unstable();
    ids
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let all: Vec<&FiniteCheck> = FINITE_CHECKS.iter().collect();
    let mut out = vec![];
    if matches!(suite, Suite::All | Suite::Finite) {
        out.extend(run_finite(&all, cfg));
    }
    if matches!(suite, Suite::All | Suite::Symbolic) {
        out.extend(symbolic_reports(cfg));
    }
    if matches!(suite, Suite::All | Suite::Metric) {
        out.extend(metric_reports(cfg));
    }
    sort_reports(&mut out);
    out
}

/// Runs a single check id over its suite inputs. A group id such as
/// `symbolic.contra` runs every report in the group.
pub fn run_check(id: &str, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut out = if let Some(c) = finite_check(id) {
        run_finite(&[c], cfg)
    } else if let Some((_, f)) = METRIC_CHECKS.iter().find(|(m, _)| *m == id) {
        vec![timed(|| f(cfg))]
    } else if id == "symbolic.contra" || id.starts_with("symbolic.contra.") {
        contra_reports(CONTRA_BOUND_S, CONTRA_BOUND_N, cfg.exec)?
            .into_iter()
            .filter(|r| r.check == id || id == "symbolic.contra")
            .collect()
    } else if id == "symbolic.bei" || id == "symbolic.bei.violators" {
        bei_reports(cfg)
            .into_iter()
            .filter(|r| r.check == id || id == "symbolic.bei")
            .collect()
    } else {
        return Err(Error::UnknownCheck(id.into()));
    };
    if out.is_empty() {
        return Err(Error::UnknownCheck(id.into()));
    }
    sort_reports(&mut out);
    Ok(out)
}

/// Whether a report list passes: nothing failed.
pub fn suite_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("finite".parse::<Suite>().unwrap(), Suite::Finite);
        assert!(matches!("everything".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn ids_are_unique() {
        let ids = check_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        assert!(matches!(run_check("finite.nope", &SuiteConfig::default()), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn every_finite_check_passes_on_a_small_space() {
        let chain = crate::relcore::Relation::from_pairs(3, [(0, 1), (1, 2), (0, 2)]);
        let space = QUSpace::from_base(3, vec![chain]).unwrap();
        let cfg = SuiteConfig::default();
        for c in finite_checks() {
            let r = run_finite_on_space(c, &space, &cfg);
            assert_ne!(r.verdict, Verdict::Fail, "{}: {:?}", c.id, r.witnesses);
        }
    }

    #[test]
    fn metric_suite_passes() {
        let reports = run_suite(Suite::Metric, &SuiteConfig { seed: 1, ..Default::default() });
        assert_eq!(reports.len(), METRIC_CHECKS.len());
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.check, r.witnesses);
        }
    }
}
