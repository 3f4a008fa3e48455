//! `doppel`: enumerate, inspect and classify small semigroups and
//! doppelsemigroups.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage,
//! parse or budget errors.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use doppel_core::catalog::{doppel_name, recognize, NameStyle};
use doppel_core::classify::verify::{verify_all, Outcome};
use doppel_core::classify::{classify, to_csv, to_json, to_markdown, to_text};
use doppel_core::enumerate::{
    enumerate_associative, interassociates_of, semigroup_classes, strong_interassociates_of,
};
use doppel_core::iso::{automorphisms, canonical_doppel, canonical_semigroup, find_isomorphism};
use doppel_core::{parse, CayleyTable, DoppelTable, Encoded, Error, SearchBudget};

#[derive(Parser)]
#[command(
    name = "doppel",
    version,
    about = "Small semigroups and doppelsemigroups up to isomorphism"
)]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest order any search may run at.
    #[arg(long, global = true, default_value_t = SearchBudget::DEFAULT_MAX_ORDER)]
    max_n: usize,
    /// Cap on backtracking nodes per search.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Join doppel names with `><` instead of `⋈`.
    #[arg(long, global = true)]
    ascii: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct Input {
    /// An `S:` or `D:` table encoding.
    #[arg(long, required_unless_present = "stdin", conflicts_with = "stdin")]
    table: Option<String>,
    /// Right operation, making `--table` the left one of a doppelsemigroup.
    #[arg(long)]
    right: Option<String>,
    /// Read one encoding per line from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all associative tables of order n, or one per class.
    EnumSemigroups {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        canonical: bool,
    },
    /// List the interassociates of a semigroup.
    Interassociates {
        #[command(flatten)]
        input: Input,
        /// Only interassociates forming a strong doppelsemigroup.
        #[arg(long)]
        strong: bool,
        /// One canonical doppelsemigroup per isomorphism class.
        #[arg(long)]
        canonical: bool,
    },
    /// Automorphism group of a semigroup or doppelsemigroup.
    Aut {
        #[command(flatten)]
        input: Input,
    },
    /// Decide isomorphism (or anti-isomorphism) of two tables.
    Iso {
        #[arg(long)]
        table: String,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        other: String,
        #[arg(long)]
        other_right: Option<String>,
        #[arg(long)]
        anti: bool,
    },
    /// Name the isomorphism class of a table.
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Also print the canonical form and its witness permutation.
        #[arg(long)]
        canonical: bool,
    },
    /// Classify all doppelsemigroups of order n.
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Run every verification check up to --max-n.
    Verify,
}

enum Parsed {
    Semigroup(CayleyTable),
    Doppel(DoppelTable),
}

fn read_value(table: &str, right: Option<&str>) -> Result<Parsed> {
    let parsed = parse(table.trim()).map_err(Error::from)?;
    let v = match (parsed, right) {
        (Encoded::Semigroup(l), Some(r)) => {
            let r = r.trim().parse::<CayleyTable>().map_err(Error::from)?;
            Parsed::Doppel(DoppelTable::new(l, r)?)
        }
        (Encoded::Semigroup(t), None) => {
            if !t.is_associative() {
                return Err(Error::NotAssociative(t.order()).into());
            }
            Parsed::Semigroup(t)
        }
        (Encoded::Doppel(..), Some(_)) => bail!("--right cannot be combined with a D: encoding"),
        (Encoded::Doppel(l, r), None) => Parsed::Doppel(DoppelTable::new(l, r)?),
    };
    Ok(v)
}

fn inputs(input: &Input) -> Result<Vec<Parsed>> {
    if input.stdin {
        let mut out = Vec::new();
        for (k, line) in io::stdin().lock().lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            out.push(read_value(&line, None).with_context(|| format!("line {}", k + 1))?);
        }
        Ok(out)
    } else {
        let table = input.table.as_deref().expect("clap requires --table");
        Ok(vec![read_value(table, input.right.as_deref())?])
    }
}

fn semigroup(v: Parsed) -> Result<CayleyTable> {
    match v {
        Parsed::Semigroup(t) => Ok(t),
        Parsed::Doppel(_) => bail!("expected a semigroup (S:) encoding"),
    }
}

/// Prints rows as text (space separated), JSON objects, CSV, or a markdown table.
fn emit(
    out: &mut impl Write,
    format: Format,
    headers: &[&str],
    rows: &[Vec<String>],
) -> Result<()> {
    match format {
        Format::Text => {
            for r in rows {
                writeln!(out, "{}", r.join(" "))?;
            }
        }
        Format::Json => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| {
                    Value::Object(
                        headers
                            .iter()
                            .zip(r)
                            .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                            .collect(),
                    )
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&objs)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(headers)?;
            for r in rows {
                w.write_record(r)?;
            }
            out.write_all(&w.into_inner()?)?;
        }
        Format::Md => {
            writeln!(out, "| {} |", headers.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(headers.len()))?;
            for r in rows {
                writeln!(out, "| {} |", r.join(" | "))?;
            }
        }
    }
    Ok(())
}

enum Status {
    Ok,
    ChecksFailed,
}

fn run(cli: Cli) -> Result<Status> {
    let mut budget = SearchBudget::up_to(cli.max_n.max(1));
    if let Some(limit) = cli.budget_nodes {
        budget = budget.with_node_limit(limit);
    }
    let style = if cli.ascii {
        NameStyle::Ascii
    } else {
        NameStyle::Unicode
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let format = cli.format;

    match cli.command {
        Command::EnumSemigroups { n, canonical } => {
            let rows: Vec<Vec<String>> = if canonical {
                semigroup_classes(n, &budget)?
                    .into_iter()
                    .map(|c| {
                        let name = recognize(&c.canon)
                            .map(|m| m.to_string())
                            .unwrap_or_default();
                        vec![c.canon.to_string(), name]
                    })
                    .collect()
            } else {
                enumerate_associative(n, &budget)?
                    .into_iter()
                    .map(|t| vec![t.to_string()])
                    .collect()
            };
            let headers: &[&str] = if canonical {
                &["table", "name"]
            } else {
                &["table"]
            };
            emit(&mut out, format, headers, &rows)?;
        }
        Command::Interassociates {
            input,
            strong,
            canonical,
        } => {
            let mut rows = Vec::new();
            for v in inputs(&input)? {
                let t = semigroup(v)?;
                let ints = if strong {
                    strong_interassociates_of(&t, &budget)?
                } else {
                    interassociates_of(&t, &budget)?
                };
                if canonical {
                    let mut classes: Vec<DoppelTable> = ints
                        .into_iter()
                        .map(|b| {
                            canonical_doppel(
                                &DoppelTable::new(t.clone(), b).expect("interassociate"),
                            )
                            .canon
                        })
                        .collect();
                    classes.sort();
                    classes.dedup();
                    for d in classes {
                        let name = doppel_name(&d, &budget)?.render(style);
                        rows.push(vec![d.to_string(), name]);
                    }
                } else {
                    rows.extend(ints.into_iter().map(|b| vec![b.to_string()]));
                }
            }
            let headers: &[&str] = if canonical {
                &["doppel", "name"]
            } else {
                &["table"]
            };
            emit(&mut out, format, headers, &rows)?;
        }
        Command::Aut { input } => {
            let mut rows = Vec::new();
            for v in inputs(&input)? {
                let aut = match &v {
                    Parsed::Semigroup(t) => automorphisms(t),
                    Parsed::Doppel(d) => automorphisms(d),
                };
                let elements: Vec<String> =
                    aut.elements().iter().map(ToString::to_string).collect();
                rows.push((
                    aut.to_string(),
                    aut.label().to_string(),
                    aut.order(),
                    elements,
                ));
            }
            match format {
                Format::Json => {
                    let objs: Vec<Value> = rows
                        .iter()
                        .map(|(_, label, order, els)| json!({"label": label, "order": order, "elements": els}))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&objs)?)?;
                }
                _ => {
                    let rows: Vec<Vec<String>> = rows
                        .into_iter()
                        .map(|(text, label, order, els)| match format {
                            Format::Text => vec![text],
                            _ => vec![label, order.to_string(), els.join(" ")],
                        })
                        .collect();
                    emit(&mut out, format, &["label", "order", "elements"], &rows)?;
                }
            }
        }
        Command::Iso {
            table,
            right,
            other,
            other_right,
            anti,
        } => {
            let a = read_value(&table, right.as_deref())?;
            let b = read_value(&other, other_right.as_deref())?;
            let witness = match (a, b) {
                (Parsed::Semigroup(a), Parsed::Semigroup(b)) => {
                    let b = if anti { b.dual() } else { b };
                    find_isomorphism(&a, &b)
                }
                (Parsed::Doppel(a), Parsed::Doppel(b)) => {
                    let b = if anti { b.dual() } else { b };
                    find_isomorphism(&a, &b)
                }
                _ => bail!("cannot compare a semigroup with a doppelsemigroup"),
            };
            let relation = if anti {
                "anti-isomorphic"
            } else {
                "isomorphic"
            };
            let row = match &witness {
                Some(p) => vec![relation.to_string(), p.to_string()],
                None => vec![format!("not {relation}"), String::new()],
            };
            match format {
                Format::Text => writeln!(out, "{}", row.join(" ").trim_end())?,
                _ => emit(&mut out, format, &["result", "perm"], &[row])?,
            }
        }
        Command::Recognize { input, canonical } => {
            let mut rows = Vec::new();
            for v in inputs(&input)? {
                let (name, canon) = match &v {
                    Parsed::Semigroup(t) => (
                        recognize(t)
                            .map(|m| m.to_string())
                            .unwrap_or_else(|| "unnamed".into()),
                        canonical_semigroup(t).to_string(),
                    ),
                    Parsed::Doppel(d) => (
                        doppel_name(d, &budget)?.render(style),
                        canonical_doppel(d).to_string(),
                    ),
                };
                rows.push(if canonical {
                    vec![name, canon]
                } else {
                    vec![name]
                });
            }
            let headers: &[&str] = if canonical {
                &["name", "canonical"]
            } else {
                &["name"]
            };
            emit(&mut out, format, headers, &rows)?;
        }
        Command::Classify { n } => {
            let report = classify(n, &budget)?;
            let text = match format {
                Format::Json => to_json(&report, style),
                Format::Csv => to_csv(&report, style),
                Format::Md => to_markdown(&report, style),
                Format::Text => to_text(&report, style),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Verify => {
            let checks = verify_all(cli.max_n, &budget)?;
            let failed = checks.iter().filter(|c| !c.passed()).count();
            match format {
                Format::Json => {
                    let objs: Vec<Value> = checks
                        .iter()
                        .map(|c| {
                            let (reason, cex) = match &c.outcome {
                                Outcome::Pass => (None, None),
                                Outcome::Fail {
                                    reason,
                                    counterexample,
                                } => (Some(reason), counterexample.as_ref()),
                            };
                            json!({"name": c.name, "passed": c.passed(), "detail": c.detail,
                                   "reason": reason, "counterexample": cex})
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&objs)?)?;
                }
                _ => {
                    for c in &checks {
                        writeln!(out, "{c}")?;
                    }
                    writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
                }
            }
            if failed > 0 {
                return Ok(Status::ChecksFailed);
            }
        }
    }
    out.flush()?;
    Ok(Status::Ok)
}

fn with_threads(cli: Cli) -> Result<Status> {
    match cli.threads {
        #[cfg(feature = "parallel")]
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .context("building the worker pool")?;
            pool.install(|| run(cli))
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => run(cli),
        None => run(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match with_threads(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
