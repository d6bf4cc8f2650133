use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gcdperm::classify;
use gcdperm::cli::{self, Config, Figure, FigureParams, Format, Suite, VerifyParams};
use gcdperm::error::Result;
use gcdperm::records::write_records_csv;
use gcdperm::sequence::DEFAULT_MAX_TERMS;

#[derive(Parser)]
#[command(name = "gcdperm", version, about = "GCD-recursive permutations of the naturals")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Hard cap on generated terms.
    #[arg(long, global = true, env = "GCDPERM_MAX_TERMS", default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: u64,
    /// Record cache file.
    #[arg(long, global = true, env = "GCDPERM_CACHE")]
    cache: Option<PathBuf>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print f_a(1..=n).
    Generate {
        #[arg(long, default_value_t = 3)]
        a: u64,
        #[arg(long, default_value_t = 24)]
        n: u64,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Compare an OEIS b-file with a locally generated f_a.
    DiffBfile {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        a: u64,
        /// Added to the file's index before lookup.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Ignore file rows with a smaller index.
        #[arg(long, default_value_t = 0)]
        from: u64,
    },
    /// Write figure series as CSV.
    ExportFigures {
        /// fig1, fig2, fig3 or fig4; all when omitted.
        which: Vec<Figure>,
        #[arg(long, default_value = "figures")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = FigureParams::default().twin_limit)]
        twin_limit: u64,
    },
    /// List the records of f_3 up to a limit.
    Records {
        #[arg(long, default_value_t = 1_000)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every candidate seed up to a bound.
    Scan {
        #[arg(long, default_value_t = 5_000)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<i32> {
    let Common {
        max_terms,
        cache,
        verbose,
    } = cli.common;
    let base = Config {
        cache,
        verbosity: verbose,
        max_terms,
        ..Config::default()
    };
    match cli.cmd {
        Cmd::Generate { a, n, format, out } => {
            let cfg = Config {
                a,
                n,
                format,
                out,
                ..base
            };
            cli::cmd_generate(&cfg, cfg.sink()?)?;
        }
        Cmd::Verify {
            suite,
            a,
            limit,
            n,
            bound,
        } => {
            let report = cli::cmd_verify(suite, &VerifyParams { a, limit, n, bound })?;
            report.write_table(io::stdout().lock())?;
            if !report.passed() {
                return Ok(cli::EXIT_FAILURE);
            }
        }
        Cmd::DiffBfile {
            path,
            a,
            offset,
            from,
        } => {
            let reader = BufReader::new(File::open(&path)?);
            let diff = cli::cmd_diff_bfile(reader, a, offset, from, base.max_terms)?;
            match diff.first_mismatch {
                None if diff.compared == 0 => {
                    eprintln!("warning: {} has no rows to compare", path.display());
                    println!("agreement over 0 rows");
                }
                None => println!("agreement over {} rows", diff.compared),
                Some(m) => {
                    println!(
                        "mismatch at n={} (line {}): expected {}, found {}",
                        m.n, m.line, m.expected, m.found
                    );
                    return Ok(cli::EXIT_FAILURE);
                }
            }
        }
        Cmd::ExportFigures {
            which,
            out_dir,
            twin_limit,
        } => {
            let which = if which.is_empty() {
                Figure::ALL.to_vec()
            } else {
                which
            };
            let params = FigureParams {
                twin_limit,
                ..FigureParams::default()
            };
            for path in cli::cmd_export_figures(&which, &out_dir, &params)? {
                if base.verbosity > 0 {
                    eprintln!("wrote {}", path.display());
                }
            }
        }
        Cmd::Records { limit, out } => {
            base.check(limit)?;
            let book = cli::load_record_book(base.cache.as_deref(), limit)?;
            let cfg = Config { out, ..base };
            let mut w = cfg.sink()?;
            write_records_csv(&mut w, book.range(0, limit))?;
            w.flush()?;
        }
        Cmd::Scan { bound, out } => {
            base.check(classify::default_budget(bound))?;
            let rows = classify::scan_a(bound)?;
            let cfg = Config { out, ..base };
            let mut w = cfg.sink()?;
            classify::write_scan_csv(&mut w, &rows)?;
            w.flush()?;
            if !rows.iter().all(|r| r.agree()) {
                return Ok(cli::EXIT_FAILURE);
            }
        }
    }
    Ok(cli::EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { cli::EXIT_USAGE } else { cli::EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
