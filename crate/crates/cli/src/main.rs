use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gorenstein_cli::{emit, emit_corpus, run_corpus, run_spec, Format, RunFlags, EXIT_INPUT};
use gorenstein_core::detector::DetectorKind;

/// Decide Gorensteinness of finite local algebras with the K and M test complexes.
#[derive(Parser)]
#[command(name = "gorenstein", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one ring file.
    Run {
        spec: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run every `*.toml` ring file in a directory.
    Corpus {
        dir: PathBuf,
        #[command(flatten)]
        opts: Opts,
        /// Also write each ring's JSON report into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Opts {
    /// Resolution depth N [default: 5, or the ring file's `depth`]
    #[arg(long)]
    depth: Option<usize>,
    /// Edge degrees dropped from each window [default: 1, or the ring file's `guard`]
    #[arg(long)]
    guard: Option<usize>,
    /// Comma-separated detectors: k_tensor, k_hom, m, cor_k [default: all]
    #[arg(long, value_delimiter = ',')]
    detectors: Option<Vec<DetectorKind>>,
    #[arg(long, default_value = "json")]
    format: Format,
    /// Cap on total k-dimension of intermediate complexes [default: 200000]
    #[arg(long)]
    budget: Option<usize>,
    /// Record wall-clock times; reports are no longer reproducible.
    #[arg(long)]
    timings: bool,
}

impl Opts {
    fn flags(&self) -> RunFlags {
        RunFlags {
            depth: self.depth,
            guard: self.guard,
            detectors: self.detectors.clone(),
            budget: self.budget,
            timings: self.timings,
        }
    }
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Run { spec, opts } => {
            let report = run_spec(&spec, &opts.flags());
            if let Some(err) = &report.error {
                eprintln!("error [{}]: {}", err.stage, err.message);
            }
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let _ = stdout.write_all(&emit(&report, opts.format));
            exit(report.exit_code)
        }
        Command::Corpus { dir, opts, out } => {
            let summary = match run_corpus(&dir, &opts.flags()) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", dir.display());
                    return exit(EXIT_INPUT);
                }
            };
            for row in &summary.rows {
                eprintln!("{}", row.summary_line());
            }
            if let Some(out) = out {
                if let Err(e) = std::fs::create_dir_all(&out) {
                    eprintln!("error: cannot create {}: {e}", out.display());
                    return exit(EXIT_INPUT);
                }
                for r in &summary.reports {
                    let path = out.join(format!("{}.json", r.ring_id));
                    if let Err(e) = std::fs::write(&path, emit(r, Format::Json)) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return exit(EXIT_INPUT);
                    }
                }
            }
            let _ = stdout.write_all(&emit_corpus(&summary, opts.format));
            exit(summary.exit_code)
        }
    }
}
