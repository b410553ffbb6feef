//! `qubench`: validate finite quasi-uniform spaces, build their lifts and
//! stability spaces, and run the verification suites.
//!
//! Exit codes: 0 when everything checked passes, 1 when any check fails,
//! 2 on usage, parse or configuration errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qubench::hyperspace::{hyper_point, HyperSpace};
use qubench::natline;
use qubench::qpm::{self, format_rat, QPSpace};
use qubench::relcore::{GroundSet, PointSet, QUSpace, ReflexivePolicy};
use qubench::stability::StabilitySpace;
use qubench::workbench::{
    self, any_failed, emit_report, parse_point_set, parse_space, serialize_space, Bounds, Caps, CheckReport,
    Format, Suite, SuiteConfig, CAPS_ENV,
};
use qubench::{Error, Exec};

/// Largest point set accepted by `qpm hausdorff` with a single file; the
/// triangle sweep is cubic in the 2^n subsets.
const HAUSDORFF_FILE_CAP: usize = 8;

#[derive(Parser)]
#[command(name = "qubench", version, about = "Quasi-uniform space workbench")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Run every sweep on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Cap overrides, e.g. `ground=16,lift=10,families=12`.
    #[arg(long, global = true, env = CAPS_ENV)]
    caps: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check a space file against the quasi-uniformity axioms.
    Validate {
        file: PathBuf,
        /// Reject missing diagonal pairs instead of repairing them.
        #[arg(long)]
        strict: bool,
    },
    /// Print the Hausdorff lift of a space as a space file.
    Lift { file: PathBuf },
    /// Stability-space commands.
    Stability {
        #[command(subcommand)]
        command: StabilityCommand,
    },
    /// Run one check by id, on the suite inputs or on a given space.
    Check {
        id: String,
        /// Space file for a finite check.
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Worked examples.
    Example {
        #[command(subcommand)]
        command: ExampleCommand,
    },
    /// Exact-rational quasi-metric commands.
    Qpm {
        #[command(subcommand)]
        command: QpmCommand,
    },
    /// Run a suite: all, finite, symbolic or metric.
    Suite {
        name: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print a seeded random space file.
    Gen {
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        relations: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// List the check ids.
    List,
}

#[derive(Subcommand)]
enum StabilityCommand {
    /// Print the stability space of a space file as a space file.
    Build { file: PathBuf },
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// The counterexample on the natural numbers, checked to the given bounds.
    Contra {
        #[arg(long, default_value_t = workbench::suite::CONTRA_BOUND_S)]
        bound_s: u64,
        #[arg(long, default_value_t = workbench::suite::CONTRA_BOUND_N)]
        bound_n: u64,
    },
    /// Spaces with one-sided isolated points; the witness catalogue without a file.
    Bei { file: Option<PathBuf> },
}

#[derive(Subcommand)]
enum QpmCommand {
    /// Hausdorff audits on one point-set file, or the distance between two.
    Hausdorff { file: PathBuf, other: Option<PathBuf> },
    /// The Sorgenfrey checks of the metric suite.
    SorgenfreySuite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Covering property over seeded convergent sequences.
    CoverFact {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = workbench::suite::COVER_SEQUENCES)]
        count: usize,
    },
}

/// What a command produced: reports, or plain text with its verdict.
enum Outcome {
    Reports(Vec<CheckReport>),
    Text { text: String, failed: bool },
}

struct Runner {
    format: Format,
    exec: Exec,
    caps: Caps,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<QUSpace, Error> {
    let (space, report) = parse_space(&read(path)?)?.build(ReflexivePolicy::Repair)?;
    if report.reflexive_repair {
        log::info!("{}: {report}", path.display());
    }
    Ok(space)
}

fn set_label(ground: &GroundSet, set: &PointSet) -> String {
    let names: Vec<String> = set.iter().map(|x| ground.name(x)).collect();
    format!("{{{}}}", names.join(","))
}

fn relabelled(space: &QUSpace, labels: Vec<String>) -> Result<String, Error> {
    let labelled = QUSpace::new(GroundSet::with_labels(labels)?, space.base().to_vec())?;
    Ok(serialize_space(&labelled))
}

impl Runner {
    fn config(&self, seed: u64) -> SuiteConfig {
        SuiteConfig {
            seed,
            caps: self.caps,
            exec: self.exec,
        }
    }

    fn run(&self, command: Command) -> Result<Outcome, Error> {
        match command {
            Command::Validate { file, strict } => {
                let policy = if strict { ReflexivePolicy::Strict } else { ReflexivePolicy::Repair };
                let report = parse_space(&read(&file)?)?.validate(policy);
                let text = match self.format {
                    Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializes")),
                    Format::Table => format!("{report}\n"),
                };
                Ok(Outcome::Text {
                    text,
                    failed: !report.is_valid(),
                })
            }
            Command::Lift { file } => {
                let space = load_space(&file)?;
                let h = HyperSpace::new(&space, self.caps.lift, self.exec)?;
                let lifted = h.lifted()?;
                let labels = (0..lifted.size())
                    .map(|i| set_label(space.ground(), &hyper_point(space.size(), i)))
                    .collect();
                Ok(Outcome::Text {
                    text: relabelled(lifted, labels)?,
                    failed: false,
                })
            }
            Command::Stability {
                command: StabilityCommand::Build { file },
            } => {
                let space = load_space(&file)?;
                let sd = StabilitySpace::build(&space, self.caps.ground, self.exec)?;
                let labels = sd.points().iter().map(|f| format!("F{}", set_label(space.ground(), f.gen()))).collect();
                Ok(Outcome::Text {
                    text: relabelled(sd.space(), labels)?,
                    failed: false,
                })
            }
            Command::Check { id, space, seed } => {
                let cfg = self.config(seed);
                match space {
                    Some(path) => {
                        let check = workbench::finite_check(&id).ok_or_else(|| Error::UnknownCheck(id.clone()))?;
                        let space = load_space(&path)?;
                        Ok(Outcome::Reports(vec![workbench::run_finite_on_space(check, &space, &cfg)]))
                    }
                    None => Ok(Outcome::Reports(workbench::run_check(&id, &cfg)?)),
                }
            }
            Command::Example {
                command: ExampleCommand::Contra { bound_s, bound_n },
            } => Ok(Outcome::Reports(workbench::contra_reports(bound_s, bound_n, self.exec)?)),
            Command::Example {
                command: ExampleCommand::Bei { file: None },
            } => Ok(Outcome::Reports(workbench::bei_reports(&self.config(1)))),
            Command::Example {
                command: ExampleCommand::Bei { file: Some(path) },
            } => {
                let space = load_space(&path)?;
                let hash = workbench::space_hash(&space);
                let mut bounds = Bounds::new();
                bounds.insert("cap_lift".into(), json!(self.caps.lift));
                let report = match natline::verify_bei(&space, self.caps.lift, self.exec) {
                    Ok(r) => {
                        let mut audit = r.audit.clone();
                        audit.check(r.holds, "certificate holds", || json!(r));
                        bounds.insert("doubly_stable_filters".into(), json!(r.doubly_stable_filters));
                        bounds.insert("entourage".into(), json!(r.entourage));
                        CheckReport::from_audit("symbolic.bei", &hash, &audit, bounds)
                    }
                    Err(Error::HypothesisViolated { point }) => {
                        let mut audit = qubench::audit::Audit::new();
                        audit.fail(
                            "hypothesis violated",
                            json!({ "point": point, "label": space.ground().name(point - 1) }),
                        );
                        CheckReport::from_audit("symbolic.bei", &hash, &audit, bounds)
                    }
                    Err(e) => return Err(e),
                };
                Ok(Outcome::Reports(vec![report]))
            }
            Command::Qpm { command } => self.run_qpm(command),
            Command::Suite { name, seed } => {
                let suite: Suite = name.parse()?;
                Ok(Outcome::Reports(workbench::run_suite(suite, &self.config(seed))))
            }
            Command::Gen { points, relations, seed } => {
                let g = workbench::gen_space(points, relations, seed)?;
                let mut text = format!("# gen_space(n={points}, k={relations}, seed={seed})\n");
                if let Some(r) = &g.repair {
                    text.push_str(&format!("# repaired: {} pairs removed\n", r.pairs_removed));
                }
                text.push_str(&serialize_space(&g.space));
                Ok(Outcome::Text { text, failed: false })
            }
            Command::List => Ok(Outcome::Text {
                text: workbench::check_ids().iter().map(|id| format!("{id}\n")).collect(),
                failed: false,
            }),
        }
    }

    fn run_qpm(&self, command: QpmCommand) -> Result<Outcome, Error> {
        match command {
            QpmCommand::Hausdorff { file, other: None } => {
                let points = parse_point_set(&read(&file)?)?;
                if points.len() > HAUSDORFF_FILE_CAP {
                    return Err(Error::CapExceeded {
                        what: "hausdorff point set",
                        size: points.len(),
                        cap: HAUSDORFF_FILE_CAP,
                    });
                }
                let space = QPSpace::sorgenfrey(points);
                let hash = workbench::report::sha256_hex(&format!("sorgenfrey file {}", space.describe()));
                let mut bounds = Bounds::new();
                bounds.insert("points".into(), json!(space.describe()));
                let triangle = qpm::checks::audit_hausdorff_triangle(&space, self.exec);
                let scales = workbench::suite::membership_scales();
                let membership = qpm::checks::audit_hausdorff_membership(&space, &scales);
                let mut mb = bounds.clone();
                mb.insert("scales".into(), json!(scales.iter().map(format_rat).collect::<Vec<_>>()));
                Ok(Outcome::Reports(vec![
                    CheckReport::from_audit("metric.hausdorff_membership", &hash, &membership, mb),
                    CheckReport::from_audit("metric.hausdorff_triangle", &hash, &triangle, bounds),
                ]))
            }
            QpmCommand::Hausdorff { file, other: Some(other) } => {
                let a = parse_point_set(&read(&file)?)?;
                let b = parse_point_set(&read(&other)?)?;
                let mut all = a.clone();
                all.extend(b.iter().filter(|x| !a.contains(x)).copied());
                let space = QPSpace::sorgenfrey(all);
                let set = |xs: &[qpm::Rat]| {
                    PointSet::from_points(space.size(), xs.iter().map(|x| space.index_of(x).expect("present")))
                };
                let (sa, sb) = (set(&a), set(&b));
                let forward = space.hausdorff(&sa, &sb)?;
                let backward = space.hausdorff(&sb, &sa)?;
                let text = match self.format {
                    Format::Json => format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "hausdorff": format_rat(&forward),
                            "hausdorff_reversed": format_rat(&backward),
                        }))
                        .expect("serializes")
                    ),
                    Format::Table => format!("H(A, B) = {}\nH(B, A) = {}\n", format_rat(&forward), format_rat(&backward)),
                };
                Ok(Outcome::Text { text, failed: false })
            }
            QpmCommand::SorgenfreySuite { seed } => {
                Ok(Outcome::Reports(workbench::run_suite(Suite::Metric, &self.config(seed))))
            }
            QpmCommand::CoverFact { seed, count } => {
                let audit = qpm::checks::audit_cover_fact(seed, count);
                let mut bounds = Bounds::new();
                bounds.insert("seed".into(), json!(seed));
                bounds.insert("sequences".into(), json!(count));
                let hash = workbench::report::sha256_hex(&format!("cover sequences seed={seed}"));
                Ok(Outcome::Reports(vec![CheckReport::from_audit("metric.cover_fact", &hash, &audit, bounds)]))
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let caps = match cli.caps.as_deref().map(str::parse::<Caps>).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let runner = Runner {
        format: match cli.format {
            OutputFormat::Json => Format::Json,
            OutputFormat::Table => Format::Table,
        },
        exec: if cli.sequential { Exec::Sequential } else { Exec::Parallel },
        caps,
    };
    match runner.run(cli.command) {
        Ok(Outcome::Reports(mut reports)) => {
            workbench::sort_reports(&mut reports);
            print!("{}", emit_report(&reports, runner.format));
            ExitCode::from(any_failed(&reports) as u8)
        }
        Ok(Outcome::Text { text, failed }) => {
            print!("{text}");
            ExitCode::from(failed as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
