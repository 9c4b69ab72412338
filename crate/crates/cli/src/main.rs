mod args;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Algebra, Cli, Command, OutputFormat, PairsAction};
use srep_core::cayley;
use srep_core::ferus::{self, ScanGrid};
use srep_core::orbits::{self, OrbitSpec};
use srep_core::pairdb::{PairDb, Params};
use srep_core::report::{self, Format, PairSummary, Table1Grid};
use srep_core::{Error, Family, RootVec};

/// Failure modes, mapped to exit codes 1 and 2.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn format_of(f: OutputFormat) -> Format {
    match f {
        OutputFormat::Md => Format::Md,
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Json => Format::Json,
    }
}

fn database(cli: &Cli) -> Result<PairDb, Failure> {
    Ok(match &cli.pairs {
        Some(path) => PairDb::load(path)?,
        None => PairDb::embedded()?,
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = format_of(cli.format);
    let db = database(cli)?;
    match &cli.command {
        Command::Table1(a) => {
            if cli.check {
                let check = report::check_table1(&db, report::EXPECTED_TABLE1)?;
                if !check.passed() {
                    return Err(Failure::Mismatch(check.mismatches.join("\n")));
                }
                return Ok(match format {
                    Format::Json => {
                        serde_json::to_string_pretty(&check).map_err(Error::from)? + "\n"
                    }
                    _ => format!(
                        "table1: {} symbolic and {} numeric rows match\n",
                        check.symbolic_rows, check.numeric_rows
                    ),
                });
            }
            let rows = if a.p.is_some() || a.n.is_some() || a.numeric {
                let default = Table1Grid::default();
                let grid = Table1Grid {
                    p: a.p.clone().unwrap_or(default.p),
                    n: a.n.clone().unwrap_or(default.n),
                };
                report::table1_numeric(&db, &grid)?
            } else {
                report::table1_symbolic(&db)?
            };
            Ok(report::render(&rows, format)?)
        }
        Command::Classify(a) => {
            let (datum, implied) = db.resolve(&a.pair)?;
            let params = match (implied, a.p, a.n) {
                (Params::NONE, p, n) => Params { p, n },
                (implied, None, None) => implied,
                _ => {
                    return Err(Failure::Usage(format!(
                        "`{}` already fixes its parameters",
                        a.pair
                    )))
                }
            };
            let pair = datum.instantiate(params)?;
            let spec: OrbitSpec = a.root.parse()?;
            let rep = orbits::classify_spec(&pair, &spec)?;
            let Some(xi) = &a.xi else {
                return Ok(report::render_one(&rep, format)?);
            };
            let xi = RootVec::parse(xi)?;
            let spectrum = orbits::principal_curvatures(&pair, &rep.h, &xi)?;
            Ok(match format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({ "report": rep, "spectrum": spectrum }))
                        .map_err(Error::from)?
                        + "\n"
                }
                Format::Md => format!(
                    "{}\n{}",
                    report::render_one(&rep, format)?,
                    report::render(&spectrum.entries, format)?
                ),
                Format::Csv => format!(
                    "{}{}",
                    report::render_one(&rep, format)?,
                    report::render(&spectrum.entries, format)?
                ),
            })
        }
        Command::Ferus(a) => {
            let mut out = String::new();
            let mut ran = false;
            if let Some(l) = a.l {
                out.push_str(&report::render_one(&ferus::ferus(l)?, format)?);
                ran = true;
            }
            if a.scan {
                let grid = ScanGrid {
                    p_max: a.p_max,
                    n_max: a.n_max,
                };
                let rows: Vec<_> = ferus::equality_scan(&db, grid)?
                    .into_iter()
                    .filter(|r| r.equality || !a.only_equal)
                    .collect();
                out.push_str(&report::render(&rows, format)?);
                ran = true;
            }
            if a.verify_identities {
                let rep = ferus::verify_identities(a.qmax)?;
                out.push_str(&render_identities(&rep, format)?);
                if !rep.all_hold() {
                    return Err(Failure::Mismatch(out));
                }
                ran = true;
            }
            if !ran {
                return Err(Failure::Usage(
                    "ferus needs --l, --scan or --verify-identities".into(),
                ));
            }
            Ok(out)
        }
        Command::Appendix(a) => {
            let family = match a.algebra {
                Algebra::F4 => Family::F4,
                Algebra::E6 => Family::E6,
                Algebra::E7 => Family::E7,
                Algebra::E8 => Family::E8,
                Algebra::G2 => Family::G2,
            };
            let rep = cayley::appendix(family)?;
            let out = report::render_appendix(&rep, format)?;
            if !rep.verified {
                return Err(Failure::Mismatch(out));
            }
            Ok(out)
        }
        Command::Pairs {
            action: PairsAction::List,
        } => {
            let rows: Vec<PairSummary> = db.pairs().iter().map(|d| d.as_ref().into()).collect();
            Ok(report::render(&rows, format)?)
        }
    }
}

fn render_identities(rep: &ferus::IdentityReport, format: Format) -> Result<String, Failure> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(rep).map_err(Error::from)? + "\n");
    }
    let mut rows = vec![
        vec!["monotone".to_string(), rep.monotone.to_string()],
        vec!["F(l) <= l".to_string(), rep.bounded_by_l.to_string()],
        vec!["F(2^q) = 2^q".to_string(), rep.powers_of_two.to_string()],
    ];
    for (q, top, ok) in &rep.ranges {
        rows.push(vec![
            format!("F(2^{q} + a) = 2^{q} for 0 <= a <= {top}"),
            ok.to_string(),
        ]);
    }
    let headers = ["identity", "holds"];
    Ok(match format {
        Format::Md => report::markdown(&headers, rows.into_iter()),
        _ => report::csv_text(&headers, rows.into_iter())?,
    })
}
