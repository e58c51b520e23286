//! Command-line front end. Every command renders either aligned text tables
//! or JSON with sorted keys, and maps failures onto exit codes
//! (1 usage, 2 computation budget, 3 invariant failure).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{
    boundary_vectors, classify_genus, counterexample_dihedral2, counterexample_q8, stratum, BoundaryCase,
};
use crate::error::{Error, Result};
use crate::fuchsian::{possible_extensions, Signature};
use crate::golden;
use crate::group::GroupSpec;
use crate::jacobian::{decomposition_report, Family};
use crate::selftest::run_selftest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Q8,
    Dihedral2,
}

#[derive(Debug, Parser)]
#[command(name = "autsurf", version, about = "Riemann surfaces of genus g with 4g-4 automorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    /// Worker threads for enumeration and orbit closure.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All actions of order 4g-4 on genus g, for g-1 prime.
    Classify {
        #[arg(long)]
        genus: u64,
    },
    /// Vector count and classes for one group and signature.
    Strata {
        #[arg(long)]
        group: String,
        #[arg(long)]
        signature: String,
    },
    /// Isogeny decomposition of the Jacobian for family F1 or F2.
    Jacobian {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: u32,
    },
    /// Boundary actions and their restrictions.
    Boundary {
        #[arg(long)]
        q: u32,
        #[arg(long = "case")]
        case: String,
    },
    /// Examples for g-1 not prime.
    Counterexample {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: u32,
    },
    /// Known extensions of a signature.
    Extensions {
        #[arg(long)]
        signature: String,
    },
    /// Invariant suite plus golden-value comparison.
    Selftest {
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// Recompute golden values with their oracles and store them first.
        #[arg(long)]
        bless: bool,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, success: bool) -> Self {
        Outcome {
            code: if success { 0 } else { 3 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

/// Fixed-width columns, left aligned.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..headers.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([headers[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            let pad = widths[i] - c.chars().count();
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(|s| s.as_str()).collect()));
    }
    out
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { genus } => {
            let report = classify_genus(*genus, cli.workers)?;
            let text = if json_out {
                render_json(&report.to_json())
            } else {
                let mut s = format!(
                    "genus {}  q = {} (prime)  group order {}\n\n",
                    report.genus,
                    report.q,
                    4 * report.q
                );
                let rows: Vec<Vec<String>> = report
                    .searched
                    .iter()
                    .map(|e| {
                        vec![
                            e.group.to_string(),
                            e.group.paper_name(),
                            e.signature.to_string(),
                            e.vector_count.to_string(),
                            e.class_count.map_or("-".into(), |c| c.to_string()),
                        ]
                    })
                    .collect();
                s.push_str(&render_table(&["group", "name", "signature", "vectors", "classes"], &rows));
                let strata = report.strata();
                let _ = writeln!(s, "\nstrata: {}", strata.len());
                for e in strata {
                    for rep in &e.representatives {
                        let _ = writeln!(s, "  {} {}: ({})", e.group.paper_name(), e.signature, rep.join(", "));
                    }
                }
                let _ = writeln!(s, "consistent with the classification: {}", report.theorem1_consistent);
                s
            };
            Ok(Outcome::ok(text, report.theorem1_consistent))
        }
        Command::Strata { group, signature } => {
            let g = group.parse::<GroupSpec>()?.build()?;
            let sig: Signature = signature.parse()?;
            let entry = stratum(&g, &sig, cli.workers)?;
            let text = if json_out {
                render_json(&entry.to_json())
            } else {
                let mut s = format!(
                    "{} ({}) with signature {}\nvectors: {}\nclasses: {}\n",
                    entry.group,
                    entry.group.paper_name(),
                    entry.signature,
                    entry.vector_count,
                    entry.class_count.map_or("-".into(), |c| c.to_string())
                );
                for rep in &entry.representatives {
                    let _ = writeln!(s, "  ({})", rep.join(", "));
                }
                s
            };
            Ok(Outcome::ok(text, true))
        }
        Command::Jacobian { family, q } => {
            let family: Family = family.parse()?;
            let report = decomposition_report(family, *q)?;
            let text = if json_out {
                render_json(&report.to_json())
            } else {
                let mut s = format!(
                    "family {}  q = {}  genus {}  group {}\naction ({})\n\n",
                    report.family,
                    report.q,
                    report.genus,
                    report.group,
                    report.vector.join(", ")
                );
                let rows: Vec<Vec<String>> = report
                    .factors
                    .iter()
                    .map(|f| vec![f.subgroup.clone(), f.genus.to_string(), f.multiplicity.to_string()])
                    .collect();
                s.push_str(&render_table(&["subgroup", "quotient genus", "multiplicity"], &rows));
                let _ = writeln!(s, "\nrelevant characters: {}", report.relevant.join(", "));
                let _ = writeln!(s, "residual dimension: {}", report.residual);
                let _ = writeln!(s, "admissible: {}", report.admissible);
                let _ = writeln!(s, "genus sum identity: {}", report.genus_sum_ok);
                let _ = writeln!(s, "elliptic factor: {}", report.has_elliptic_factor());
                s
            };
            Ok(Outcome::ok(text, report.is_complete()))
        }
        Command::Boundary { q, case } => {
            let case: BoundaryCase = case.parse()?;
            let report = boundary_vectors(*q, case)?;
            let ok = report.key_checks_pass() && report.subgroup_ok;
            let text = if json_out {
                render_json(&report.to_json())
            } else {
                let g = &report.group;
                let mut s = format!(
                    "{} ({}), q = {}, u = {}\n",
                    g.spec(),
                    g.spec().paper_name(),
                    report.q,
                    report.u
                );
                for (i, (v, w)) in report.vectors.iter().zip(&report.witnesses).enumerate() {
                    let _ = writeln!(
                        s,
                        "\nvector {}: {} ({})  genus {}",
                        i + 1,
                        v.signature,
                        v.entry_labels(g).join(", "),
                        v.action_genus(g)?
                    );
                    let _ = writeln!(
                        s,
                        "  restricted: {} ({})\n  subgroup order {}, index {}",
                        w.induced.signature,
                        w.induced.entry_labels(g).join(", "),
                        w.subgroup.order(),
                        w.index
                    );
                }
                let rows: Vec<Vec<String>> = report
                    .key_checks
                    .iter()
                    .map(|c| (c, "key"))
                    .chain(report.other_checks.iter().map(|c| (c, "other")))
                    .map(|(c, k)| {
                        vec![
                            k.to_string(),
                            c.vector.to_string(),
                            c.position.to_string(),
                            c.expected.clone(),
                            c.computed.clone(),
                            c.matches().to_string(),
                        ]
                    })
                    .collect();
                s.push('\n');
                s.push_str(&render_table(&["check", "vector", "entry", "closed form", "computed", "match"], &rows));
                let _ = writeln!(s, "\nexpected subgroup reached: {}", report.subgroup_ok);
                let _ = writeln!(s, "cited assumption: {}", crate::classify::CITED_ASSUMPTION);
                s
            };
            Ok(Outcome::ok(text, ok))
        }
        Command::Counterexample { kind, n } => match kind {
            Kind::Q8 => {
                let e = counterexample_q8(*n)?;
                let text = if json_out {
                    render_json(&e.to_json())
                } else {
                    format!(
                        "{} of order {} acting with signature {} on genus {}\n(a, b; x) = ({})\n",
                        e.group.spec().paper_name(),
                        e.group.order(),
                        e.vector.signature,
                        e.genus,
                        e.vector.entry_labels(&e.group).join(", ")
                    )
                };
                Ok(Outcome::ok(text, true))
            }
            Kind::Dihedral2 => {
                let e = counterexample_dihedral2(*n)?;
                let text = if json_out {
                    render_json(&e.to_json())
                } else {
                    let rows: Vec<Vec<String>> = e
                        .members
                        .iter()
                        .map(|m| {
                            vec![
                                m.m.to_string(),
                                m.group.spec().to_string(),
                                m.group.order().to_string(),
                                m.genus.to_string(),
                                m.vector.entry_labels(&m.group).join(", "),
                            ]
                        })
                        .collect();
                    let mut s = render_table(&["m", "group", "order", "genus", "vector"], &rows);
                    let classes: Vec<String> = e
                        .isomorphism_classes
                        .iter()
                        .map(|c| format!("{{{}}}", c.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")))
                        .collect();
                    let _ = writeln!(s, "\nisomorphism classes by m: {}", classes.join(" "));
                    let _ = writeln!(s, "pairwise non-isomorphic: {}", e.pairwise_non_isomorphic);
                    s
                };
                Ok(Outcome::ok(text, e.pairwise_non_isomorphic))
            }
        },
        Command::Extensions { signature } => {
            let sig: Signature = signature.parse()?;
            let rules = possible_extensions(&sig);
            let text = if json_out {
                render_json(&json!({
                    "signature": sig.to_string(),
                    "extensions": rules.iter().map(|r| json!({
                        "inner": r.inner.to_string(),
                        "outer": r.outer.to_string(),
                        "index": r.index,
                    })).collect::<Vec<_>>(),
                }))
            } else {
                let rows: Vec<Vec<String>> = rules
                    .iter()
                    .map(|r| vec![r.inner.to_string(), r.outer.to_string(), r.index.to_string()])
                    .collect();
                format!(
                    "extensions of {sig}: {}\n{}",
                    rules.len(),
                    render_table(&["inner", "outer", "index"], &rows)
                )
            };
            Ok(Outcome::ok(text, true))
        }
        Command::Selftest { golden_dir, bless } => {
            let dir = golden_dir.clone().unwrap_or_else(golden::default_dir);
            if *bless {
                golden::bless(&dir)?;
            }
            let items = run_selftest(&dir, cli.workers);
            let all = items.iter().all(|i| i.passed);
            let text = if json_out {
                render_json(&json!({
                    "checks": items.iter().map(|i| json!({
                        "name": i.name,
                        "passed": i.passed,
                        "detail": i.detail,
                    })).collect::<Vec<_>>(),
                    "all_passed": all,
                }))
            } else {
                let rows: Vec<Vec<String>> = items
                    .iter()
                    .map(|i| vec![if i.passed { "PASS" } else { "FAIL" }.to_string(), i.name.clone(), i.detail.clone()])
                    .collect();
                render_table(&["result", "check", "detail"], &rows)
            };
            Ok(Outcome::ok(text, all))
        }
    }
}
