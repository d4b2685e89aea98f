use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use transcover_cli::{run, Format, Mode, RunConfig, RunOutput, EXIT_INPUT};

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Minimum-area and minimum-perimeter translation covers.
#[derive(Debug, Parser)]
#[command(name = "cover", version)]
struct Args {
    #[arg(value_enum)]
    mode: Mode,
    /// Input file; several with --batch.
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// SVG output path (a directory with --batch).
    #[arg(long)]
    svg: Option<PathBuf>,
    /// JSON output path (a directory with --batch); stdout when omitted.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Rotation samples for keyhole screening and quadrature.
    #[arg(long, default_value_t = 360)]
    samples: usize,
    /// Seed for randomized steps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Angles in degrees instead of radians.
    #[arg(long)]
    deg: bool,
    /// Relative tolerance of the self-checks.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Arc count for lowerbound text input.
    #[arg(long)]
    n: Option<usize>,
    /// Process all inputs concurrently.
    #[arg(long)]
    batch: bool,
}

fn output_in(dir: &Option<PathBuf>, input: &Path, ext: &str) -> Option<PathBuf> {
    let stem = input.file_stem().unwrap_or_default();
    dir.as_ref().map(|d| d.join(stem).with_extension(ext))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    if args.input.len() > 1 && !args.batch {
        eprintln!("error: several inputs need --batch");
        return ExitCode::from(EXIT_INPUT);
    }
    let configs: Vec<RunConfig> = args
        .input
        .iter()
        .map(|path| {
            let mut c = RunConfig::new(args.mode, path);
            if let Some(f) = args.format {
                c.format = match f {
                    FormatArg::Text => Format::Text,
                    FormatArg::Json => Format::Json,
                };
            }
            c.samples = args.samples;
            c.seed = args.seed;
            c.degrees = args.deg;
            c.tolerance = args.tol;
            c.n = args.n;
            if args.batch {
                c.json = output_in(&args.json, path, "json");
                c.svg = output_in(&args.svg, path, "svg");
            } else {
                c.json = args.json.clone();
                c.svg = args.svg.clone();
            }
            c
        })
        .collect();
    let outputs: Vec<RunOutput> = if args.batch {
        std::thread::scope(|s| {
            let handles: Vec<_> = configs.iter().map(|c| s.spawn(move || run(c))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        configs.iter().map(run).collect()
    };
    let mut status = 0;
    for o in outputs {
        print!("{}", o.stdout);
        eprint!("{}", o.stderr);
        status = status.max(o.status);
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(status)
}
