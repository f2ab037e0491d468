use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bessel_cli::commands::{self, CompareArgs, EvalArgs, ExtremalArgs, FuzzArgs};
use bessel_cli::parse::{parse_complex, parse_range};
use bessel_cli::{Exit, Format};
use bessel_core::extremal::Target;
use bessel_core::harness::{Ensemble, FieldMode, IntRange};
use bessel_core::Complex;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bessel", version, about = "Check Bessel-type inequalities on vector families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    /// Root-form disk bound.
    #[value(alias = "thm21")]
    Root,
    /// Square-form disk bound.
    #[value(alias = "thm22")]
    Square,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Generic,
    Disk,
    Orthonormal,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every applicable bound on a family file.
    Eval {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check all bounds on seeded random families.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        instances: u64,
        /// Family size, `lo..hi` or a single value.
        #[arg(long, value_parser = parse_range, default_value = "1..12")]
        n: IntRange,
        /// Space dimension, `lo..hi` or a single value.
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        dim: IntRange,
        #[arg(long, value_enum, default_value_t = FieldArg::Mixed)]
        field: FieldArg,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all cores). The summary does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Build a family attaining equality in a disk bound.
    Extremal {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long)]
        n: usize,
        /// Lower disk parameter, e.g. `1`, `2-0.5i`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        gamma: Complex,
        /// Upper disk parameter.
        #[arg(long = "Gamma", value_parser = parse_complex, allow_hyphen_values = true)]
        gamma_high: Complex,
        /// Dimension of the space; the reference vector is e1.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate how often each bound on the Bessel sum is the tightest.
    Compare {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        instances: u64,
        #[arg(long, value_enum, default_value_t = EnsembleArg::Generic)]
        ensemble: EnsembleArg,
        #[arg(long, value_parser = parse_range, default_value = "1..12")]
        n: IntRange,
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        dim: IntRange,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<Exit> {
    match cli.command {
        Command::Eval { input, tolerance, format, output } => {
            commands::eval(&EvalArgs { input, tolerance, format, output }, stdout)
        }
        Command::Fuzz { seed, instances, n, dim, field, tolerance, output, threads } => {
            let field = match field {
                FieldArg::Real => FieldMode::Real,
                FieldArg::Complex => FieldMode::Complex,
                FieldArg::Mixed => FieldMode::Mixed,
            };
            let args = FuzzArgs { seed, instances, n, dim, field, tolerance, output, threads };
            commands::fuzz(&args, stdout, stderr)
        }
        Command::Extremal { target, n, gamma, gamma_high, dim, output } => {
            let target = match target {
                TargetArg::Root => Target::Root,
                TargetArg::Square => Target::Square,
            };
            commands::extremal(&ExtremalArgs { target, n, gamma, gamma_high, dim, output }, stdout, stderr)
        }
        Command::Compare { seed, instances, ensemble, n, dim, output, threads } => {
            let ensemble = match ensemble {
                EnsembleArg::Generic => Ensemble::Generic,
                EnsembleArg::Disk => Ensemble::Disk,
                EnsembleArg::Orthonormal => Ensemble::Orthonormal,
            };
            commands::compare(&CompareArgs { seed, instances, ensemble, n, dim, output, threads }, stdout)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let exit = match run(cli, &mut stdout, &mut stderr) {
        Ok(exit) => exit,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            Exit::InputError
        }
    };
    let _ = stdout.flush();
    ExitCode::from(exit.code())
}
