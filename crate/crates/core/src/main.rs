use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use soberlens::dot::{hasse_dot, lens_tem_dot, quasi_lens_dot, space_dot};
use soberlens::frames::{
    filters_of, frame_report, hofmann_mislove_report, points_space, stone_round_trip,
    temperance_report, waybelow_and_stability, FilterKind, HmConvention,
};
use soberlens::io::{parse_instance, Instance};
use soberlens::powerdomain::{lenses, quasi_lenses};
use soberlens::spaces::{enumerate::all_spaces, property_report, Preorder};
use soberlens::suite::{
    check_examples, check_lattice, check_space, run_suite, Plan, SuiteConfig, SuiteName,
    SCHEMA_VERSION,
};
use soberlens::symbolic::{certificate_check, parse_certificate};
use soberlens::{Error, FinLattice, FinSpace};

#[derive(Parser)]
#[command(
    name = "soberlens",
    version,
    about = "Checks for finite spaces, frames, lenses and the symbolic counterexamples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Run checkers on a space, preorder or lattice JSON file.
    Check {
        input: PathBuf,
        /// Comma-separated: properties, oracles, duality, powerdomain,
        /// temperance, frames. Lattices accept frames and temperance.
        #[arg(long, value_delimiter = ',', default_value = "properties")]
        checks: Vec<String>,
        /// Reject preorder input that is not already transitive.
        #[arg(long)]
        reject_non_transitive: bool,
    },
    /// Run the sweeps.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = soberlens::suite::DEFAULT_MAX_POINTS)]
        max_points: usize,
        /// Random 6 to 8 point spaces.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 200)]
        hyperspace_samples: usize,
        #[arg(long, default_value_t = 100)]
        lattice_samples: usize,
        /// Comma-separated subset of: spaces, oracles, duality, temperance,
        /// frames, powerdomain, examples.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<SuiteName>,
        /// Record wall-clock times (the report is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// List lenses, quasi-lenses or filters of an input, or every topology
    /// on up to --max-points points.
    Enumerate {
        #[arg(value_enum)]
        what: Enumerable,
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_points: usize,
    },
    /// Stone and Hofmann–Mislove round trips for a space, or the points of
    /// a lattice.
    Duality {
        input: PathBuf,
        /// Drop the empty compact set and the improper filter.
        #[arg(long)]
        exclude_empty: bool,
    },
    /// Check the built-in certificates, or one from a file.
    Examples {
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Enumerable {
    Lenses,
    QuasiLenses,
    Filters,
    Spaces,
}

/// Output plus whether a property failed.
struct Outcome {
    text: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        match &cli.out {
            Some(path) => fs::write(path, &o.text)
                .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
            None => print!("{}", o.text),
        }
        Ok(o.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf, reject_non_transitive: bool) -> Result<Instance, Error> {
    parse_instance(&read(path)?, reject_non_transitive)
}

fn json_out(v: Value, failed: bool) -> Outcome {
    Outcome {
        text: serde_json::to_string_pretty(&v).expect("values serialize") + "\n",
        failed,
    }
}

fn reject_dot(format: Format) -> Result<(), Error> {
    if format == Format::Dot {
        Err(Error::Input("this output has no DOT form".into()))
    } else {
        Ok(())
    }
}

fn lattice_dot(l: &FinLattice) -> String {
    let p = Preorder::from_upsets(l.upsets().to_vec()).expect("lattice orders are preorders");
    let labels: Vec<String> = (0..l.m()).map(|a| a.to_string()).collect();
    hasse_dot("lattice", &labels, &p)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Check {
            input,
            checks,
            reject_non_transitive,
        } => check(cli.format, &load(input, *reject_non_transitive)?, checks),
        Command::Suite {
            seed,
            max_points,
            samples,
            hyperspace_samples,
            lattice_samples,
            suites,
            timing,
        } => {
            reject_dot(cli.format)?;
            let mut config = SuiteConfig {
                seed: *seed,
                max_points: *max_points,
                samples: *samples,
                hyperspace_samples: *hyperspace_samples,
                lattice_samples: *lattice_samples,
                timing: *timing,
                ..Default::default()
            };
            if !suites.is_empty() {
                config.suites = suites.iter().copied().collect();
            }
            let report = run_suite(&config)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            Ok(Outcome {
                text: report.to_json() + "\n",
                failed: !report.passed,
            })
        }
        Command::Enumerate {
            what,
            input,
            max_points,
        } => enumerate(cli.format, *what, input.as_ref(), *max_points),
        Command::Duality {
            input,
            exclude_empty,
        } => {
            reject_dot(cli.format)?;
            let convention = if *exclude_empty {
                HmConvention::ExcludeEmpty
            } else {
                HmConvention::IncludeEmpty
            };
            match load(input, false)? {
                Instance::Space(s) => {
                    let stone = stone_round_trip(&s)?;
                    let hm = hofmann_mislove_report(&s, convention)?;
                    let failed = hm.hm_bijection != Some(true)
                        || stone.spatial != Some(true)
                        || stone.unit_homeomorphism != Some(stone.sober_input);
                    Ok(json_out(
                        json!({"schema_version": SCHEMA_VERSION, "stone": stone, "hofmann_mislove": hm}),
                        failed,
                    ))
                }
                Instance::Lattice(l) => {
                    let pt = points_space(&l)?;
                    let points: Vec<_> = pt
                        .points
                        .iter()
                        .map(|p| p.iter().collect::<Vec<_>>())
                        .collect();
                    Ok(json_out(
                        json!({
                            "schema_version": SCHEMA_VERSION,
                            "points": points,
                            "space": soberlens::io::SpaceJson::from_space(&pt.space),
                        }),
                        false,
                    ))
                }
            }
        }
        Command::Examples { certificate } => {
            reject_dot(cli.format)?;
            match certificate {
                Some(path) => {
                    let cert = parse_certificate(&read(path)?)?;
                    let verdict = certificate_check(&cert)?;
                    Ok(json_out(
                        json!({"schema_version": SCHEMA_VERSION, "certificate": cert, "verdict": verdict}),
                        !verdict.valid,
                    ))
                }
                None => {
                    let results = check_examples();
                    let failed = results.iter().any(|(_, r)| r.is_err());
                    let results: serde_json::Map<String, Value> = results
                        .into_iter()
                        .map(|(name, r)| {
                            let v = match r {
                                Ok(()) => json!({"passed": true}),
                                Err(d) => json!({"passed": false, "detail": d}),
                            };
                            (name, v)
                        })
                        .collect();
                    Ok(json_out(
                        json!({"schema_version": SCHEMA_VERSION, "results": results}),
                        failed,
                    ))
                }
            }
        }
    }
}

fn check(format: Format, instance: &Instance, checks: &[String]) -> Result<Outcome, Error> {
    match instance {
        Instance::Space(s) => {
            if format == Format::Dot {
                return Ok(Outcome {
                    text: if checks.iter().any(|c| c == "powerdomain") {
                        lens_tem_dot(s)?
                    } else {
                        space_dot(s)
                    },
                    failed: false,
                });
            }
            let mut plan = Plan::default();
            for c in checks {
                match c.as_str() {
                    "properties" => plan.spaces = true,
                    "oracles" => plan.oracles = true,
                    "duality" => plan.duality = true,
                    "powerdomain" => plan.powerdomain = true,
                    "temperance" => plan.temperance = true,
                    "frames" => plan.frames = true,
                    other => return Err(Error::Input(format!("unknown space check `{other}`"))),
                }
            }
            let outcome = check_space(s, plan);
            let mut report =
                json!({"schema_version": SCHEMA_VERSION, "input": "space", "n": s.n()});
            if plan.spaces {
                report["properties"] = json!(property_report(s)?);
            }
            if plan.powerdomain {
                report["lenses"] = json!(lenses(s));
                report["quasi_lenses"] = json!(quasi_lenses(s));
            }
            Ok(finish(report, &outcome))
        }
        Instance::Lattice(l) => {
            if format == Format::Dot {
                return Ok(Outcome {
                    text: lattice_dot(l),
                    failed: false,
                });
            }
            let mut report =
                json!({"schema_version": SCHEMA_VERSION, "input": "lattice", "m": l.m()});
            let mut outcome = soberlens::suite::Outcome::default();
            for c in checks {
                match c.as_str() {
                    "frame" => report["frame"] = json!(frame_report(l)),
                    "temperance" => report["temperance"] = json!(temperance_report(l)),
                    "frames" => {
                        report["waybelow"] = json!(waybelow_and_stability(l));
                        outcome = check_lattice(l);
                    }
                    // The space-side default is accepted and means the frame report.
                    "properties" => report["frame"] = json!(frame_report(l)),
                    other => return Err(Error::Input(format!("unknown lattice check `{other}`"))),
                }
            }
            Ok(finish(report, &outcome))
        }
    }
}

fn finish(mut report: Value, outcome: &soberlens::suite::Outcome) -> Outcome {
    let checks: serde_json::Map<String, Value> = outcome
        .checks
        .iter()
        .map(|(name, r)| (name.clone(), json!(r.is_ok())))
        .collect();
    let violations: Vec<Value> = outcome
        .failures()
        .map(|(c, d)| json!({"check": c, "detail": d}))
        .collect();
    let failed = !violations.is_empty();
    report["checks"] = Value::Object(checks);
    report["violations"] = Value::Array(violations);
    if !outcome.skipped.is_empty() {
        report["skipped"] = json!(outcome.skipped);
    }
    json_out(report, failed)
}

fn enumerate(
    format: Format,
    what: Enumerable,
    input: Option<&PathBuf>,
    max_points: usize,
) -> Result<Outcome, Error> {
    if what == Enumerable::Spaces {
        reject_dot(format)?;
        if max_points > soberlens::suite::MAX_EXHAUSTIVE_POINTS {
            return Err(Error::Input(format!(
                "max_points {max_points} is above the exhaustive cap"
            )));
        }
        let spaces: Vec<Value> = (0..=max_points)
            .flat_map(all_spaces)
            .map(|s: FinSpace| json!(soberlens::io::SpaceJson::from_space(&s)))
            .collect();
        return Ok(json_out(
            json!({"schema_version": SCHEMA_VERSION, "spaces": spaces}),
            false,
        ));
    }
    let path = input.ok_or_else(|| Error::Input("an input file is required".into()))?;
    match (what, load(path, false)?) {
        (Enumerable::Lenses, Instance::Space(s)) => Ok(match format {
            Format::Dot => Outcome {
                text: lens_tem_dot(&s)?,
                failed: false,
            },
            Format::Json => json_out(
                json!({"schema_version": SCHEMA_VERSION, "lenses": lenses(&s)}),
                false,
            ),
        }),
        (Enumerable::QuasiLenses, Instance::Space(s)) => Ok(match format {
            Format::Dot => Outcome {
                text: quasi_lens_dot(&s)?,
                failed: false,
            },
            Format::Json => json_out(
                json!({"schema_version": SCHEMA_VERSION, "quasi_lenses": quasi_lenses(&s)}),
                false,
            ),
        }),
        (Enumerable::Filters, Instance::Lattice(l)) => {
            reject_dot(format)?;
            Ok(json_out(
                json!({
                    "schema_version": SCHEMA_VERSION,
                    "filters": filters_of(&l, FilterKind::All),
                    "completely_prime": filters_of(&l, FilterKind::CompletelyPrime),
                }),
                false,
            ))
        }
        (Enumerable::Filters, Instance::Space(_)) => {
            Err(Error::Input("filters need a lattice input".into()))
        }
        (_, Instance::Lattice(_)) => Err(Error::Input("lenses need a space input".into())),
        (Enumerable::Spaces, _) => unreachable!(),
    }
}
