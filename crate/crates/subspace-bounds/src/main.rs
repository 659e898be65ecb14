//! Command-line front-end for the bound engine.
//!
//! Subcommands: `bound` (one query), `reproduce-paper` (recompute the
//! headline values and check them), `verify` (check an explicit code file),
//! `oracle` (exhaustive optimum with witness), `table` (parameter grid).
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a reproduction or
//! verification check failed.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use subspace_bounds::cache::CacheFile;
use subspace_bounds::engine::{Engine, EngineOptions};
use subspace_bounds::facts::FactStore;
use subspace_bounds::gfspace::{verify_code, ExplicitCode};
use subspace_bounds::qarith::prime_power;
use subspace_bounds::report::{self, TableFormat, DEFAULT_MAX_AMBIENT};

#[derive(Parser)]
#[command(
    name = "subspace-bounds",
    version,
    about = "Exact upper bounds for subspace codes A_q(v,d) and A_q(v,d;k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bound for A_q(v,d), or A_q(v,d;k) when -k is given.
    Bound(BoundArgs),
    /// Recompute the headline values and check each against its constant.
    ReproducePaper,
    /// Check an explicit code (JSON file) against a required distance.
    Verify(VerifyArgs),
    /// Exhaustive optimum for small parameters, with a witness code.
    Oracle(OracleArgs),
    /// Grid of mixed-dimension upper bounds over parameter ranges.
    Table(TableArgs),
}

/// Fact-store selection, shared by the computing subcommands.
#[derive(Args)]
struct FactArgs {
    /// Extra fact file (JSON array) merged over the built-in records.
    #[arg(long, value_name = "PATH")]
    facts: Option<PathBuf>,
    /// Use only the self-contained record tier.
    #[arg(long)]
    no_external_facts: bool,
}

impl FactArgs {
    fn engine(&self) -> Result<Engine> {
        let options = EngineOptions {
            external_facts: !self.no_external_facts,
            ..EngineOptions::default()
        };
        let mut store = FactStore::builtin(true, !self.no_external_facts);
        if let Some(path) = &self.facts {
            let added = store
                .add_file(path)
                .with_context(|| format!("loading facts from {}", path.display()))?;
            eprintln!("loaded {added} record(s) from {}", path.display());
        }
        for warning in store.warnings() {
            eprintln!("warning: {warning}");
        }
        Ok(Engine::with_facts(store, options))
    }
}

#[derive(Args)]
struct BoundArgs {
    /// Field order (prime power).
    #[arg(short)]
    q: u64,
    /// Ambient dimension.
    #[arg(short)]
    v: u32,
    /// Minimum subspace distance.
    #[arg(short)]
    d: u32,
    /// Codeword dimension for the constant-dimension bound.
    #[arg(short)]
    k: Option<u32>,
    /// Print the full derivation tree.
    #[arg(long)]
    explain: bool,
    /// Cache file; defaults to $SUBSPACE_BOUNDS_CACHE when set.
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
    #[command(flatten)]
    facts: FactArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON file with {"q", "v", "subspaces": [[rows]...]}.
    file: PathBuf,
    /// Required minimum distance.
    #[arg(short, long, default_value_t = 1)]
    distance: u32,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(short)]
    q: u64,
    #[arg(short)]
    v: u32,
    #[arg(short)]
    d: u32,
    /// Restrict codewords to one dimension.
    #[arg(short)]
    k: Option<u32>,
    /// Cap on the number of subspaces the search may enumerate.
    #[arg(long)]
    guard: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(short)]
    q: u64,
    #[arg(long, default_value_t = 4)]
    v_min: u32,
    #[arg(long, default_value_t = 8)]
    v_max: u32,
    #[arg(long, default_value_t = 1)]
    d_min: u32,
    /// Largest distance column (defaults to v-max).
    #[arg(long)]
    d_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Ceiling on v-max, as a guard against accidental huge runs.
    #[arg(long, default_value_t = DEFAULT_MAX_AMBIENT)]
    max_ambient: u32,
    #[command(flatten)]
    facts: FactArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. `... | head`), like
    // other line-oriented tools, instead of panicking on the broken pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Bound(args) => cmd_bound(args),
        Command::ReproducePaper => cmd_reproduce_paper(),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Table(args) => cmd_table(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn check_parameters(q: u64, v: u32, d: u32, k: Option<u32>) -> Result<()> {
    if prime_power(q).is_none() {
        bail!("{q} is not a prime power");
    }
    if v == 0 {
        bail!("ambient dimension must be positive");
    }
    if d < 1 || d > v {
        bail!("distance {d} outside the possible range 1..={v}");
    }
    if let Some(k) = k {
        if k > v {
            bail!("dimension {k} exceeds the ambient dimension {v}");
        }
    }
    Ok(())
}

fn query_label(q: u64, v: u32, d: u32, k: Option<u32>) -> String {
    match k {
        Some(k) => format!("A_{q}({v},{d};{k})"),
        None => format!("A_{q}({v},{d})"),
    }
}

fn cmd_bound(args: BoundArgs) -> Result<ExitCode> {
    check_parameters(args.q, args.v, args.d, args.k)?;
    let label = query_label(args.q, args.v, args.d, args.k);
    let cache_path = args.cache.clone().or_else(|| {
        std::env::var_os("SUBSPACE_BOUNDS_CACHE").map(PathBuf::from)
    });

    if let (Some(path), false) = (&cache_path, args.explain) {
        let cache = CacheFile::load(path)?;
        if let Some(hit) = cache.get(args.q, args.v, args.d, args.k) {
            let relation = if hit.exact { "=" } else { "≤" };
            println!("{label} {relation} {} [{}]", hit.value, hit.method);
            return Ok(ExitCode::SUCCESS);
        }
    }

    let engine = args.facts.engine()?;
    let result = match args.k {
        Some(k) => engine.cdc_bound(args.q, args.v, args.d, k),
        None => engine.mdc_bound(args.q, args.v, args.d),
    };
    println!(
        "{label} {} {} [{}]",
        result.relation(),
        result.value,
        result.method.tag()
    );
    if args.explain {
        print!("{}", result.render_tree());
    }
    if let Some(path) = &cache_path {
        let mut cache = CacheFile::load(path)?;
        cache.put(args.q, args.v, args.d, args.k, &result);
        cache.save(path)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce_paper() -> Result<ExitCode> {
    let report = report::reproduce();
    print!("{}", report.render());
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let code: ExplicitCode = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", args.file.display()))?;
    let report = verify_code(&code, args.distance)?;
    println!("code: q={} v={} size={}", report.q, report.v, report.size);
    println!("dimension distribution: {}", report.distribution_display());
    match report.min_distance {
        Some(min) => println!("minimum distance: {min}"),
        None => println!("minimum distance: n/a (fewer than two codewords)"),
    }
    if report.ok() {
        println!("OK: meets distance {}", args.distance);
        Ok(ExitCode::SUCCESS)
    } else {
        for violation in &report.violations {
            println!(
                "violation: codewords {} and {} at distance {}",
                violation.i, violation.j, violation.distance
            );
        }
        println!(
            "FAIL: {} pair(s) below distance {}",
            report.violations.len(),
            args.distance
        );
        Ok(ExitCode::from(2))
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    check_parameters(args.q, args.v, args.d, args.k)?;
    let mut options = EngineOptions::default();
    if let Some(guard) = args.guard {
        options.enumeration_guard = guard;
    }
    let engine = Engine::with_options(options);
    let result = engine
        .oracle_bound(args.q, args.v, args.d, args.k)
        .context("exhaustive search failed")?;
    println!(
        "{} = {} (exhaustive search over {} subspaces)",
        query_label(args.q, args.v, args.d, args.k),
        result.value,
        result.vertex_count
    );
    println!("witness:");
    for (i, word) in result.witness.iter().enumerate() {
        let rows: Vec<String> = word
            .rows()
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect::<String>())
            .collect();
        let body = if rows.is_empty() {
            "zero space".to_string()
        } else {
            format!("[{}]", rows.join(" "))
        };
        println!("  #{i}: dim {} {body}", word.dim());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode> {
    let engine = args.facts.engine()?;
    let d_max = args.d_max.unwrap_or(args.v_max);
    let format = match args.format {
        Format::Md => TableFormat::Markdown,
        Format::Csv => TableFormat::Csv,
    };
    let text = report::bounds_table(
        &engine,
        args.q,
        args.v_min..=args.v_max,
        args.d_min..=d_max,
        format,
        args.max_ambient,
    )?;
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}
