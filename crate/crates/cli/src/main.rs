use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use drinfeld_core::certify::{run_report, Config};
use drinfeld_core::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Certify surjectivity of the Galois representations of a rank-3 Drinfeld
/// module φ_T = T + g1^(q-1) τ + g2^(q-1) τ^2 + T^(q-1) τ^3.
#[derive(Debug, Parser)]
#[command(name = "certify", version)]
struct Args {
    /// Size of the constant field F_q.
    #[arg(long)]
    q: u64,
    /// Modulus of F_q over F_p in the variable u, e.g. "u^2 + 1" for q = 9.
    #[arg(long)]
    ext_modulus: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g1: String,
    #[arg(long, allow_hyphen_values = true)]
    g2: String,
    /// Largest degree of the certified primes.
    #[arg(long, default_value_t = 3)]
    max_deg: usize,
    /// Also certify all pairs of primes up to --pair-max-deg.
    #[arg(long)]
    pairs: bool,
    #[arg(long, default_value_t = 2)]
    pair_max_deg: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run for q < 7 or even q; verdicts are then out of scope.
    #[arg(long)]
    allow_small_q: bool,
}

fn config_error(what: &str, input: &str, e: Error) -> ExitCode {
    match e {
        Error::Parse { pos, msg } => {
            eprintln!("error: {what}: {msg} at position {pos}");
            eprintln!("    {input}");
            eprintln!("    {}^", " ".repeat(pos));
        }
        e => eprintln!("error: {what}: {e}"),
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let ext_modulus = match &args.ext_modulus {
        None => None,
        Some(s) => match Config::parse_ext_modulus(args.q, s) {
            Ok(m) => Some(m),
            Err(e) => return config_error("--ext-modulus", s, e),
        },
    };
    let config = Config {
        q: args.q,
        ext_modulus,
        g1: args.g1.clone(),
        g2: args.g2.clone(),
        max_deg: args.max_deg,
        pair_max_deg: args.pair_max_deg,
        pairs: args.pairs,
        allow_small_q: args.allow_small_q,
    };
    let fq = match config.field() {
        Ok(f) => f,
        Err(e) => return config_error("--q", &args.q.to_string(), e),
    };
    for (flag, s) in [("--g1", &args.g1), ("--g2", &args.g2)] {
        if let Err(e) = drinfeld_core::parse_poly(&fq, s) {
            return config_error(flag, s, e);
        }
    }
    let report = match run_report(&config) {
        Ok(r) => r,
        Err(e) => return config_error("config", "", e),
    };
    let mut body = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if report.all_surjective() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
