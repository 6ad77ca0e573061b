//! `hopfsuper` command-line front-end.
//!
//! Exit codes: 0 on success, 1 on an internal or verification failure, 2 when
//! a classification suite does not match its golden file.

mod load;
mod output;
mod suites;
mod superforms;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hopfsuper::analysis::SEARCH_FUEL;
use hopfsuper::hopf::{verify_axioms, HopfJson};
use hopfsuper::presentation::builtin_names;

use output::Format;
use suites::Suite;

#[derive(Parser)]
#[command(name = "hopfsuper", version, about = "Exact computations with Hopf superalgebras over cyclotomic fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
pub struct Opts {
    /// JSON output
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output
    #[arg(long, global = true)]
    csv: bool,
    /// Work over Q(zeta_n); must be a multiple of the input's conductor
    #[arg(long, global = true, value_name = "n")]
    conductor: Option<u32>,
    /// Node budget of the isomorphism search
    #[arg(long, global = true, value_name = "steps", default_value_t = SEARCH_FUEL)]
    fuel: u64,
    /// Timings and progress on stderr
    #[arg(short, long, global = true)]
    verbose: bool,
}

impl Opts {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compile a DSL file (or catalogue name) and write its JSON form
    Convert {
        input: String,
        /// Output path; `-` for stdout. Defaults to `<stem>.json`
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify the Hopf superalgebra axioms
    Verify { input: String },
    /// Admissible data, super-data and the super-forms of a purely even Hopf algebra
    Superforms {
        input: String,
        /// JSON file of automorphisms given by generator images
        #[arg(long, value_name = "file")]
        orbits: Option<PathBuf>,
    },
    /// Run a classification suite and compare it with its golden file
    Classify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Overwrite the golden file with the current output
        #[arg(long)]
        bless: bool,
    },
    /// List the builtin catalogue
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = cli.opts;
    let start = Instant::now();
    let code = match cli.cmd {
        Cmd::Convert { input, output } => convert(&input, output, &opts)?,
        Cmd::Verify { input } => verify(&input, &opts)?,
        Cmd::Superforms { input, orbits } => {
            let loaded = load::load(&input, opts.conductor)?;
            let rep = superforms::run(&loaded, orbits.as_deref(), opts.fuel)?;
            emit(&rep.render(opts.format())?)?;
            if rep.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Classify { suite, bless } => classify(suite, bless, &opts)?,
        Cmd::List => {
            let mut s = String::new();
            for n in builtin_names() {
                s.push_str(&n);
                s.push('\n');
            }
            emit(&s)?;
            ExitCode::SUCCESS
        }
    };
    if opts.verbose {
        eprintln!("finished in {:.2}s", start.elapsed().as_secs_f64());
    }
    Ok(code)
}

fn emit(s: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn convert(input: &str, output: Option<PathBuf>, opts: &Opts) -> Result<ExitCode> {
    let loaded = load::load(input, opts.conductor)?;
    let json = HopfJson::from_hopf(&loaded.hopf)?;
    let text = serde_json::to_string_pretty(&json)? + "\n";
    let path = output.unwrap_or_else(|| PathBuf::from(format!("{}.json", load::stem(input))));
    if path.as_os_str() == "-" {
        emit(&text)?;
    } else {
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {} ({}, dim {})", path.display(), loaded.hopf.name, loaded.hopf.dim);
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(input: &str, opts: &Opts) -> Result<ExitCode> {
    let loaded = load::load(input, opts.conductor)?;
    let r = verify_axioms(&loaded.hopf);
    let text = match opts.format() {
        Format::Json => serde_json::to_string_pretty(&r)? + "\n",
        Format::Csv => output::report_csv(&r)?,
        Format::Text => r.to_string(),
    };
    emit(&text)?;
    Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn classify(suite: Suite, bless: bool, opts: &Opts) -> Result<ExitCode> {
    let ctx = suites::Ctx::new(opts.conductor.unwrap_or(8), opts.fuel, opts.verbose)?;
    let start = Instant::now();
    let res = suites::run(suite, &ctx)?;
    if opts.verbose {
        eprintln!("suite {} ran in {:.2}s", suite.name(), start.elapsed().as_secs_f64());
    }
    let fmt = opts.format();
    let text = res.render(fmt)?;
    emit(&text)?;
    if ctx.conductor != 8 {
        eprintln!("golden: skipped (golden files are for conductor 8)");
        return Ok(ExitCode::SUCCESS);
    }
    let path = output::golden_path(suite.name(), fmt);
    if bless {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("golden: wrote {}", path.display());
        return Ok(ExitCode::SUCCESS);
    }
    match std::fs::read_to_string(&path) {
        Ok(golden) => match output::first_mismatch(&golden, &text) {
            None => {
                eprintln!("golden: match ({})", path.display());
                Ok(ExitCode::SUCCESS)
            }
            Some((line, want, got)) => {
                eprintln!("golden: mismatch with {} at line {line}", path.display());
                eprintln!("  expected: {want}");
                eprintln!("  actual:   {got}");
                Ok(ExitCode::from(2))
            }
        },
        Err(e) => Err(e).with_context(|| format!("reading golden file {}", path.display())),
    }
}
