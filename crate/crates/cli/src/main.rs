use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf16_core::classify::checks::all_suites;
use hopf16_core::classify::{profile_entry, profile_generic, reproduce_table1, ProfileDetails};
use hopf16_core::constructors::catalog::{self, NAMES};
use hopf16_core::hopf::{CheckResult, HopfAlgebra, HopfJson, Report};

const CATALOG_ENV: &str = "HOPF16_CATALOG";

#[derive(Parser)]
#[command(name = "hopf16", version, about = "Exact verification of the semisimple Hopf algebras of dimension 16")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for independent computations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Dump the structure constants of an algebra as JSON.
    Build { name: String },
    /// Check the Hopf axioms and, for catalog entries, the cocycle conditions.
    Verify { name: String },
    /// Print G(H), G(H*), the block degrees and the K0 label.
    Profile { name: String },
    /// Print the fusion table of K0(H).
    Fusion { name: String },
    /// Recompute the 16-row classification table.
    Table1,
    /// Run every verification suite.
    Checks,
    /// List the accepted names.
    List,
}

/// Failure modes of a command, mapped to exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

/// An algebra named on the command line.
enum Target {
    Catalog(&'static str),
    External(String, HopfAlgebra),
}

impl Target {
    fn name(&self) -> &str {
        match self {
            Target::Catalog(n) => n,
            Target::External(n, _) => n,
        }
    }

    fn algebra(&self) -> Result<HopfAlgebra, Failure> {
        match self {
            Target::Catalog(n) => catalog::build(n).map_err(|e| Failure::Check(e.to_string())),
            Target::External(_, h) => Ok(h.clone()),
        }
    }

    fn profile(&self) -> Result<ProfileDetails, Failure> {
        match self {
            Target::Catalog(n) => profile_entry(n),
            Target::External(_, h) => profile_generic(h),
        }
        .map_err(|e| Failure::Check(format!("{}: {e}", self.name())))
    }
}

fn external_catalog() -> Result<BTreeMap<String, HopfAlgebra>, Failure> {
    let Ok(path) = std::env::var(CATALOG_ENV) else { return Ok(BTreeMap::new()) };
    let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{CATALOG_ENV}={path}: {e}")))?;
    let raw: BTreeMap<String, HopfJson> =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{CATALOG_ENV}={path}: {e}")))?;
    raw.into_iter()
        .map(|(k, j)| {
            HopfAlgebra::from_json(&j).map(|h| (k.clone(), h)).map_err(|e| Failure::Usage(format!("{CATALOG_ENV}: {k}: {e}")))
        })
        .collect()
}

fn resolve(name: &str, external: &BTreeMap<String, HopfAlgebra>) -> Result<Target, Failure> {
    if let Some(n) = NAMES.iter().find(|n| **n == name) {
        return Ok(Target::Catalog(n));
    }
    if let Some(h) = external.get(name) {
        return Ok(Target::External(name.to_string(), h.clone()));
    }
    let mut valid: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    valid.extend(external.keys().cloned());
    Err(Failure::Usage(format!("unknown name {name}; valid names: {}", valid.join(", "))))
}

fn report_json(r: &Report) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn report_md(title: &str, r: &Report) -> String {
    let mut s = format!("## {title}\n\n| Check | Result |\n|---|---|\n");
    for c in &r.checks {
        let res = if c.passed { "pass".to_string() } else { format!("FAIL: {}", c.detail.as_deref().unwrap_or("")) };
        s += &format!("| {} | {res} |\n", c.name);
    }
    s
}

fn failed_names(r: &Report) -> Vec<String> {
    r.failures().iter().map(|c| c.name.clone()).collect()
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn verify(target: &Target, format: Format) -> (String, Vec<String>) {
    let mut report = match target.algebra() {
        Ok(h) => h.verify_axioms(),
        Err(Failure::Check(e) | Failure::Usage(e)) => Report { checks: vec![CheckResult::fail("construction", e)] },
    };
    if let Target::Catalog(n) = target {
        let cond = catalog::data(n).map_err(|e| e.to_string()).and_then(|d| d.check_conditions().map_err(|e| e.to_string()));
        report.checks.push(match cond {
            Ok(()) => CheckResult::pass("cocycle conditions"),
            Err(e) => CheckResult::fail("cocycle conditions", e),
        });
    }
    let out = match format {
        Format::Json => pretty(&json!({ "name": target.name(), "report": report_json(&report) })),
        Format::Md => report_md(target.name(), &report),
        Format::Text => report.to_string(),
    };
    (out, failed_names(&report))
}

fn profile(target: &Target, format: Format) -> Result<String, Failure> {
    let d = target.profile()?;
    let p = &d.profile;
    Ok(match format {
        Format::Json => pretty(&json!({ "name": target.name(), "profile": p })),
        Format::Md => format!(
            "| Example | G(H) | G(H*) | Blocks | K0(H) |\n|---|---|---|---|---|\n| {} | {} | {} | {} | {} |\n",
            target.name(),
            p.group_h.name(),
            p.group_hdual.name(),
            p.wedderburn,
            p.k0_label
        ),
        Format::Text => format!("{} {p}\n", target.name()),
    })
}

fn fusion(target: &Target, format: Format) -> Result<String, Failure> {
    let d = target.profile()?;
    let ring = &d.fusion.ring;
    Ok(match format {
        Format::Json => pretty(&json!({ "name": target.name(), "k0": d.profile.k0_label, "ring": ring.to_json() })),
        Format::Md => format!("K0({}) ≅ {}\n\n{}", target.name(), d.profile.k0_label, ring.to_markdown()),
        Format::Text => {
            let mut s = format!("K0({}) = {}\n", target.name(), d.profile.k0_label);
            for x in 0..ring.rank() {
                for y in 0..ring.rank() {
                    s += &format!("{} * {} = {}\n", ring.labels[x], ring.labels[y], ring.product_string(x, y));
                }
            }
            s
        }
    })
}

fn table1(format: Format) -> (String, Vec<String>) {
    let t = reproduce_table1();
    let mut failed: Vec<String> = t.rows.iter().filter(|r| !r.passed()).map(|r| format!("row {}", r.row)).collect();
    failed.extend(failed_names(&t.duality));
    let out = match format {
        Format::Json => pretty(&serde_json::to_value(&t).expect("table serializes")),
        Format::Md => t.to_markdown(),
        Format::Text => t.to_text(),
    };
    (out, failed)
}

fn checks(format: Format) -> Result<(String, Vec<String>), Failure> {
    let t = reproduce_table1();
    let suites = all_suites(&t).map_err(|e| Failure::Check(e.to_string()))?;
    let failed: Vec<String> =
        suites.iter().flat_map(|(n, r)| failed_names(r).into_iter().map(move |c| format!("{n}: {c}"))).collect();
    let out = match format {
        Format::Json => pretty(&Value::Array(
            suites.iter().map(|(n, r)| json!({ "suite": n, "passed": r.all_passed(), "report": report_json(r) })).collect(),
        )),
        Format::Md => suites.iter().map(|(n, r)| report_md(n, r)).collect::<Vec<_>>().join("\n"),
        Format::Text => suites
            .iter()
            .map(|(n, r)| format!("== {n}: {}/{} pass\n{r}", r.checks.len() - r.failures().len(), r.checks.len()))
            .collect(),
    };
    Ok((out, failed))
}

fn list(format: Format, external: &BTreeMap<String, HopfAlgebra>) -> String {
    let entries: Vec<(String, String)> = NAMES
        .iter()
        .map(|n| (n.to_string(), catalog::display_name(n).unwrap_or(n).to_string()))
        .chain(external.keys().map(|k| (k.clone(), format!("{k} ({CATALOG_ENV})"))))
        .collect();
    match format {
        Format::Json => pretty(&Value::Array(entries.iter().map(|(n, d)| json!({ "name": n, "display": d })).collect())),
        Format::Md => {
            let mut s = String::from("| Name | Algebra |\n|---|---|\n");
            for (n, d) in &entries {
                s += &format!("| {n} | {d} |\n");
            }
            s
        }
        Format::Text => entries.iter().map(|(n, d)| format!("{n:<8} {d}\n")).collect(),
    }
}

fn run(cli: &Cli) -> Result<(String, Vec<String>), Failure> {
    let external = external_catalog()?;
    let f = cli.format;
    match &cli.command {
        Command::Build { name } => {
            let t = resolve(name, &external)?;
            Ok((t.algebra()?.to_json_string() + "\n", Vec::new()))
        }
        Command::Verify { name } => Ok(verify(&resolve(name, &external)?, f)),
        Command::Profile { name } => Ok((profile(&resolve(name, &external)?, f)?, Vec::new())),
        Command::Fusion { name } => Ok((fusion(&resolve(name, &external)?, f)?, Vec::new())),
        Command::Table1 => Ok(table1(f)),
        Command::Checks => checks(f),
        Command::List => Ok((list(f, &external), Vec::new())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("--jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, failed)) => {
            let written = match &cli.out {
                Some(p) => fs::write(p, &out).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{out}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("{e}");
                return ExitCode::from(2);
            }
            if failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in &failed {
                    eprintln!("failed: {f}");
                }
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(1)
        }
    }
}
