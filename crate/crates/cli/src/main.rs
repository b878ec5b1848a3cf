use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use osht::bench::{run_bench, summarize, TrialConfig, DEFAULT_TRIALS};
use osht::io::{
    fmt_f64, read_coeffs, read_scheme, read_signal, write_coeffs, write_scheme, write_signal,
    write_text,
};
use osht::multipass::DEFAULT_MAX_PASSES;
use osht::sampling::{condition_profile, design};
use osht::{forward_sht, inverse_sht, multipass_sht, PlacementMethod};

mod lists;

use lists::{parse_bandlimits, parse_methods, parse_passes, Bandlimits, Methods};

/// Optimal-dimensionality spherical harmonic transforms.
#[derive(Debug, Parser)]
#[command(name = "osht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Place the rings for a band-limit and write the scheme file.
    Design(DesignArgs),
    /// Report per-order condition numbers of a scheme.
    Analyze(AnalyzeArgs),
    /// Samples to coefficients.
    Forward(ForwardArgs),
    /// Coefficients to samples.
    Inverse(InverseArgs),
    /// Run the conditioning and accuracy experiments.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct DesignArgs {
    #[arg(long)]
    bandlimit: usize,
    #[arg(long, default_value = "elimination")]
    method: PlacementMethod,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(long)]
    scheme: PathBuf,
    /// Write `L,method,m,kappa` rows here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ForwardArgs {
    #[arg(long)]
    scheme: PathBuf,
    #[arg(long)]
    signal: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    multipass: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_PASSES, value_parser = parse_passes)]
    max_passes: usize,
}

#[derive(Debug, Args)]
struct InverseArgs {
    #[arg(long)]
    scheme: PathBuf,
    #[arg(long)]
    coeff: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated band-limits; `a:s:b` steps by `s`, `a:xf:b` multiplies by `f`.
    #[arg(long, value_parser = parse_bandlimits)]
    bandlimits: Bandlimits,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_methods, default_value = "elimination")]
    methods: Methods,
    #[arg(long)]
    multipass: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_PASSES, value_parser = parse_passes)]
    max_passes: usize,
    #[arg(long)]
    outdir: PathBuf,
}

fn run(cli: Cli) -> osht::Result<()> {
    match cli.command {
        Command::Design(args) => {
            let start = Instant::now();
            let scheme = design(args.bandlimit, args.method)?;
            let elapsed = start.elapsed().as_secs_f64();
            write_scheme(&args.output, &scheme)?;
            let report = condition_profile(&scheme);
            eprintln!("max kappa_m: {}", fmt_f64(report.kappa_max));
            eprintln!("design time: {elapsed:.3} s");
        }
        Command::Analyze(args) => {
            let scheme = read_scheme(&args.scheme)?;
            let rows = osht::bench::conditioning_on(std::slice::from_ref(&scheme));
            let csv = osht::bench::cond_csv(&rows);
            match args.output {
                Some(path) => write_text(&path, &csv)?,
                None => print!("{csv}"),
            }
            eprintln!("max kappa_m: {}", fmt_f64(rows[0].report.kappa_max));
        }
        Command::Forward(args) => {
            let scheme = read_scheme(&args.scheme)?;
            let signal = read_signal(&args.signal)?;
            let coeffs = if args.multipass {
                let out = multipass_sht(&scheme, &signal, args.max_passes)?;
                eprintln!("passes: {}", out.passes);
                let history: Vec<String> =
                    out.residual_history.iter().map(|r| fmt_f64(*r)).collect();
                eprintln!("residual history: {}", history.join(","));
                out.coeffs
            } else {
                forward_sht(&scheme, &signal)?
            };
            write_coeffs(&args.output, &coeffs)?;
        }
        Command::Inverse(args) => {
            let scheme = read_scheme(&args.scheme)?;
            let coeffs = read_coeffs(&args.coeff)?;
            write_signal(&args.output, &inverse_sht(&scheme, &coeffs)?)?;
        }
        Command::Bench(args) => {
            let config = TrialConfig {
                bandlimits: args.bandlimits.0,
                trials: args.trials,
                seed: args.seed,
                methods: args.methods.0,
                multipass: args.multipass,
                max_passes: args.max_passes,
            };
            let out = run_bench(&config)?;
            out.write(&args.outdir)?;
            for cell in summarize(&out.records) {
                eprintln!(
                    "L={} {}: mean E_max {} mean E_max_final {} mean passes {:.2}",
                    cell.bandlimit,
                    cell.method,
                    fmt_f64(cell.mean_e_max),
                    fmt_f64(cell.mean_e_max_final),
                    cell.mean_passes
                );
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var("OSHT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|n| *n > 0)
    {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
