use std::path::PathBuf;
use std::process::ExitCode;

use aydc_verify::catalogue::catalogue;
use aydc_verify::config::{Config, CONFIG_ENV};
use aydc_verify::context::Context;
use aydc_verify::runner::{self, Selector};
use clap::{Args, Parser, Subcommand};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "verify", about = "Exact checks for twisted doubles of Taft algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks from the catalogue.
    Run(RunArgs),
    /// List the catalogue.
    List,
    /// Load an algebra or Hopf algebra from JSON and check its axioms.
    Ingest { file: PathBuf },
}

#[derive(Args)]
struct RunArgs {
    /// Run every check (the default).
    #[arg(long, conflicts_with_all = ["id", "tag"])]
    all: bool,
    /// Check ids to run.
    #[arg(long, num_args = 1..)]
    id: Vec<String>,
    /// Run the checks carrying any of these tags.
    #[arg(long, num_args = 1.., conflicts_with = "id")]
    tag: Vec<String>,
    /// Primes for the Taft families, overriding the config.
    #[arg(long, value_delimiter = ',')]
    p: Vec<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, env = CONFIG_ENV)]
    config: Option<PathBuf>,
}

fn run(args: RunArgs) -> Result<bool, (u8, String)> {
    let usage = |e: String| (EXIT_USAGE, e);
    let mut config = match &args.config {
        Some(path) => Config::load(path).map_err(|e| usage(e.to_string()))?,
        None => Config::default(),
    };
    if !args.p.is_empty() {
        config.ps = args.p.clone();
        config.validate().map_err(|e| usage(e.to_string()))?;
    }
    let selector = if !args.id.is_empty() {
        Selector::Ids(args.id)
    } else if !args.tag.is_empty() {
        Selector::Tags(args.tag)
    } else {
        Selector::All
    };
    let entries = runner::select(&selector).map_err(usage)?;
    let ctx = Context::new(config);
    let report = runner::run(&entries, &ctx);
    print!("{}", report.to_text());
    if let Some(path) = args.json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| (EXIT_INTERNAL, e.to_string()))?;
        std::fs::write(&path, text + "\n").map_err(|e| (EXIT_INTERNAL, format!("{}: {e}", path.display())))?;
    }
    Ok(report.all_passed())
}

fn list() {
    for e in catalogue() {
        println!("{:<28} [{}]\n    {}", e.id, e.tags.join(", "), e.claim);
    }
}

fn ingest(file: PathBuf) -> Result<bool, (u8, String)> {
    let text = std::fs::read_to_string(&file).map_err(|e| (EXIT_USAGE, format!("{}: {e}", file.display())))?;
    match aydc::schema::ingest(&text) {
        Ok(aydc::schema::Ingested::Algebra(a)) => {
            println!("algebra of dimension {} loaded: associative and unital", a.dim());
            Ok(true)
        }
        Ok(aydc::schema::Ingested::Hopf(h)) => {
            println!("Hopf algebra of dimension {} loaded: all axioms hold", h.dim());
            Ok(true)
        }
        Err(e @ aydc::schema::SchemaError::Json(_)) | Err(e @ aydc::schema::SchemaError::Shape(_)) => {
            Err((EXIT_USAGE, e.to_string()))
        }
        Err(e) => {
            println!("rejected: {e}");
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = std::panic::catch_unwind(|| match cli.command {
        Command::Run(args) => run(args),
        Command::List => {
            list();
            Ok(true)
        }
        Command::Ingest { file } => ingest(file),
    });
    match outcome {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(EXIT_FAIL),
        Ok(Err((code, msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
