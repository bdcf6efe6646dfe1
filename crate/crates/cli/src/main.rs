mod records;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minpoly_core::chartab::{self, CharacterTable};
use minpoly_core::classify::{self, ClassifyOptions, ExceptionalCover, UnitaryGcdExponent};
use minpoly_core::ffgrp;
use minpoly_core::lie::{self, Family, GroupSpec};
use minpoly_core::oracle::{self, Target};

use records::{ClassifyRecord, Table3Record};

/// Environment variable naming a directory for computed character tables.
const CACHE_ENV: &str = "MINPOLY_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "minpoly", version, about = "Minimal polynomial degrees of p-elements in groups of Lie type")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized character table computation.
    #[arg(long, global = true, default_value_t = chartab::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = ffgrp::ELEMENT_CAP)]
    max_order: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Predict minimal polynomial degrees for p-elements.
    Classify(ClassifyArgs),
    /// Cyclic Sylow index sets for the large exceptional groups.
    Table3 {
        #[arg(long)]
        q: u64,
        /// Exit 1 unless every row matches the reference index sets.
        #[arg(long)]
        check: bool,
    },
    /// Compute eigenvalue profiles and compare them with the prediction.
    Verify(VerifyArgs),
    /// Simple groups with exceptional multipliers, and the cover degree list.
    Registry {
        /// Characteristic for the cover degree list.
        #[arg(long, default_value_t = 0)]
        ell: u64,
    },
    /// Compute and print a character table.
    Table(GroupArgs),
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    #[arg(long)]
    family: String,
    /// Matrix size for SL/SU, half-dimension for Sp and spin groups.
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long)]
    q: u64,
}

impl GroupArgs {
    fn spec(&self) -> Result<GroupSpec, CliError> {
        let family: Family = self.family.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
        GroupSpec::new(family, self.n, self.q).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long)]
    p: u64,
    /// Representation characteristic; 0 for ordinary representations.
    #[arg(long, default_value_t = 0)]
    ell: u64,
    /// Exponent of q in the gcd term of the unitary case.
    #[arg(long, default_value = "verbatim")]
    unitary_exponent: UnitaryGcdExponent,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["cover", "table"])]
    family: Option<String>,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, required_unless_present_any = ["cover", "table"])]
    q: Option<u64>,
    /// An exceptional cover with a matrix model, e.g. "2.SL3(2)".
    #[arg(long, conflicts_with = "table")]
    cover: Option<String>,
    /// A character table file to verify instead of computing one.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long)]
    p: u64,
    /// Also write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

/// Whether the command's check passed.
type Outcome = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let mut out = String::new();
    let result = match &cli.command {
        Command::Classify(a) => cmd_classify(&cli, a, &mut out),
        Command::Table3 { q, check } => cmd_table3(&cli, *q, *check, &mut out),
        Command::Verify(a) => cmd_verify(&cli, a, &mut out),
        Command::Registry { ell } => cmd_registry(&cli, *ell, &mut out),
        Command::Table(a) => cmd_table(&cli, a, &mut out),
    };
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let (CliError::Usage(m) | CliError::Runtime(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(runtime)
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(runtime)?;
    for r in rows {
        w.write_record(&r).map_err(runtime)?;
    }
    String::from_utf8(w.into_inner().map_err(runtime)?).map_err(runtime)
}

fn cmd_classify(cli: &Cli, a: &ClassifyArgs, out: &mut String) -> Outcome {
    let spec = a.group.spec()?;
    let opts = ClassifyOptions { unitary_gcd_exponent: a.unitary_exponent };
    let c = classify::classify_with(&spec, a.p, a.ell, &opts).map_err(|e| CliError::Usage(e.to_string()))?;
    let rec = ClassifyRecord::from(&c);
    match cli.format {
        Format::Text => out.push_str(&rec.render_text()),
        Format::Json => out.push_str(&json(&rec)?),
        Format::Csv => out.push_str(&csv_rows(&ClassifyRecord::CSV_HEADER, [rec.csv_row()])?),
    }
    Ok(true)
}

fn cmd_table3(cli: &Cli, q: u64, check: bool, out: &mut String) -> Outcome {
    let rows = lie::table3(q).map_err(|e| CliError::Usage(e.to_string()))?;
    let recs: Vec<Table3Record> = rows.iter().map(Table3Record::from).collect();
    match cli.format {
        Format::Text => out.push_str(&records::render_table3(q, &recs)),
        Format::Json => out.push_str(&json(&recs)?),
        Format::Csv => out.push_str(&csv_rows(&Table3Record::CSV_HEADER, recs.iter().map(Table3Record::csv_row))?),
    }
    Ok(!check || recs.iter().all(|r| r.matches_reference))
}

fn cache_path(label: &str, seed: u64) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let name: String = label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    Some(Path::new(&dir).join(format!("{name}-{seed:x}.tbl")))
}

/// Computes the table of `spec`, going through the cache directory when set.
fn compute_table(cli: &Cli, g: &ffgrp::MatGroup, label: &str) -> Result<CharacterTable, CliError> {
    let cached = cache_path(label, cli.seed);
    if let Some(path) = cached.as_deref().filter(|p| p.exists()) {
        if let Ok(t) = chartab::ingest_table(path) {
            if t.group == label && t.order == g.order() {
                return Ok(t);
            }
        }
    }
    let mut t = chartab::dixon_table_with(g, cli.seed).map_err(runtime)?;
    t.group = label.to_string();
    if let Some(path) = cached {
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        // the cache is an optimization; a failed write is not an error
        let _ = std::fs::write(&path, chartab::render_table(&t));
    }
    Ok(t)
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs, out: &mut String) -> Outcome {
    let report = if let Some(path) = &a.table {
        let t = chartab::ingest_table(path).map_err(runtime)?;
        oracle::verify_table(&t, a.p, &Target::parse(&t.group)).map_err(runtime)?
    } else {
        let target = if let Some(name) = &a.cover {
            Target::Cover(name.parse::<ExceptionalCover>().map_err(|e| CliError::Usage(e.to_string()))?)
        } else {
            let family = a.family.clone().ok_or_else(|| CliError::Usage("one of --family, --cover, --table is required".into()))?;
            let q = a.q.ok_or_else(|| CliError::Usage("--q is required with --family".into()))?;
            Target::Spec(GroupArgs { family, n: a.n, q }.spec()?)
        };
        let spec = target.model().map_err(runtime)?;
        let g = ffgrp::build_group_with_cap(&spec, cli.max_order).map_err(runtime)?;
        if !ffgrp::sylow_is_cyclic_bruteforce(&g, a.p) {
            return Err(CliError::Runtime(format!("Sylow {}-subgroup of {} is not cyclic", a.p, target.label())));
        }
        let t = compute_table(cli, &g, &target.label())?;
        oracle::verify_table(&t, a.p, &target).map_err(runtime)?
    };
    if let Some(path) = &a.out {
        std::fs::write(path, json(&report)?).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
    }
    match cli.format {
        Format::Text => out.push_str(&report.render_text()),
        Format::Json => out.push_str(&json(&report)?),
        Format::Csv => out.push_str(&csv_rows(&records::VERIFY_CSV_HEADER, records::verify_csv_rows(&report))?),
    }
    Ok(!report.has_unknown_anomaly())
}

fn cmd_registry(cli: &Cli, ell: u64, out: &mut String) -> Outcome {
    let reg = records::registry(ell);
    match cli.format {
        Format::Text => out.push_str(&records::render_registry(&reg)),
        Format::Json => out.push_str(&json(&reg)?),
        Format::Csv => out.push_str(&csv_rows(&records::REGISTRY_CSV_HEADER, records::registry_csv_rows(&reg))?),
    }
    Ok(true)
}

fn cmd_table(cli: &Cli, a: &GroupArgs, out: &mut String) -> Outcome {
    let spec = a.spec()?;
    let g = ffgrp::build_group_with_cap(&spec, cli.max_order).map_err(runtime)?;
    let t = compute_table(cli, &g, &spec.to_string())?;
    match cli.format {
        Format::Text => out.push_str(&chartab::render_table(&t)),
        Format::Json => out.push_str(&json(&t)?),
        Format::Csv => {
            let mut header = vec!["character".to_string(), "degree".to_string()];
            header.extend((0..t.class_count()).map(|c| format!("class{c}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows = t.characters.iter().enumerate().map(|(i, ch)| {
                let mut r = vec![i.to_string(), ch.degree.to_string()];
                r.extend(ch.values.iter().map(|v| v.n.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")));
                r
            });
            out.push_str(&csv_rows(&header, rows)?);
        }
    }
    Ok(true)
}
