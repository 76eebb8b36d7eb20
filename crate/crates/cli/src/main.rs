use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use detpolar_cli::commands::{parse_mode, SEED_ENV};
use detpolar_cli::{cmd_family, cmd_groebner, cmd_invariants, exit, Options, Run};

#[derive(Parser)]
#[command(name = "detpolar", version, about = "Polar invariants of determinantal singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, mixed polars, polar multiplicities and pair multiplicity of one matrix.
    Invariants(Common),
    /// Polar curve over a smoothing, or equisingularity of a test family.
    Family {
        #[command(flatten)]
        common: Common,
        /// whitney, af or wf
        #[arg(long)]
        mode: Option<String>,
    },
    /// Reduced Groebner basis, staircase, saturation and colon of an ideal file.
    Groebner(Common),
}

#[derive(Args)]
struct Common {
    /// Job file (TOML); `-` reads stdin.
    file: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    second_seed: Option<u64>,
    /// q, Fp or Fp:PRIME
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    step_cap: Option<u64>,
    /// Include formula citation tags in the report.
    #[arg(long)]
    cite: bool,
}

fn read(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| e.to_string())?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn options(c: &Common) -> Options {
    Options {
        seed: c.seed,
        second_seed: c.second_seed,
        field: c.field.clone(),
        step_cap: c.step_cap,
        cite: c.cite,
        mode: None,
        env_seed: std::env::var(SEED_ENV).ok(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, run): (&Common, fn(&str, &Options) -> Run) = match &cli.command {
        Command::Invariants(c) => (c, cmd_invariants),
        Command::Family { common, .. } => (common, cmd_family),
        Command::Groebner(c) => (c, cmd_groebner),
    };
    let mut opts = options(common);
    if let Command::Family { mode: Some(m), .. } = &cli.command {
        match parse_mode(m) {
            Ok(m) => opts.mode = Some(m),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(exit::INPUT as u8);
            }
        }
    }
    let text = match read(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::INPUT as u8);
        }
    };
    let result = run(&text, &opts);
    for d in &result.diagnostics {
        eprintln!("error: {d}");
    }
    if let Some(r) = &result.report {
        print!("{}", r.to_json());
    }
    ExitCode::from(result.exit as u8)
}
