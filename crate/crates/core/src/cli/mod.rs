//! Command-line front end. [`run`] is the whole program; the `qfano`
//! binary only forwards `std::env::args` and the standard streams.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or
//! out-of-range input, 3 internal error.

mod cache;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::kostka::HMethod;
use crate::verify::{Suite, SuiteParams};

pub use cache::{Cache, CacheEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Latex,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qfano",
    version,
    about = "h-polynomials, IC stalks and Fano Betti numbers"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Directory for cached results; caching is off when unset.
    #[arg(long, global = true, env = "QFANO_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print h_m^(n)(q).
    H(HArgs),
    /// Betti numbers of the Fano variety of k-planes.
    Betti(BettiArgs),
    /// The table N_i(k, j).
    Decomp(DecompArgs),
    /// IC stalk dimensions at a point of a smaller orbit.
    Stalks(StalkArgs),
    /// Run identity checks and stream reports.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct HArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    /// recursive, closed-a, closed-b, inversion, first-positive, recurrence or all.
    #[arg(long, default_value = "recursive", value_parser = parse_method)]
    method: MethodChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MethodChoice {
    All,
    One(HMethod),
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    if s == "all" {
        return Ok(MethodChoice::All);
    }
    s.parse()
        .map(MethodChoice::One)
        .map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct BettiArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    kplane: u32,
}

#[derive(Debug, Args)]
struct DecompArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    i: u32,
}

#[derive(Debug, Args)]
struct StalkArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    i: u32,
    #[arg(long)]
    j: u32,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// all, inductive, h, fano, bailey, inversion or quad.
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 12)]
    nmax: u32,
    #[arg(long, default_value_t = 6)]
    gmax: u32,
    /// First seed for the random matrix-inversion inputs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of seeds per matrix size.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// Series order for the quadratic transformation.
    #[arg(long, default_value_t = 8)]
    order: u32,
    /// Restrict the Bailey suite to this m.
    #[arg(long)]
    m: Option<u32>,
    /// Restrict the Bailey suite to this n.
    #[arg(long)]
    n: Option<u32>,
}

/// What a command produced: rendered output and its exit code.
struct Output {
    text: String,
    code: i32,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_INTERNAL
    }
}

fn cache_key(cmd: &Command, format: OutputFormat) -> Option<Vec<(&'static str, String)>> {
    let mut params = vec![("format", format.name().to_string())];
    match cmd {
        Command::H(a) => {
            let method = match a.method {
                MethodChoice::All => "all".to_string(),
                MethodChoice::One(m) => m.name().to_string(),
            };
            params.extend([
                ("cmd", "h".into()),
                ("n", a.n.to_string()),
                ("m", a.m.to_string()),
                ("method", method),
            ]);
        }
        Command::Betti(a) => {
            params.extend([
                ("cmd", "betti".into()),
                ("g", a.g.to_string()),
                ("kplane", a.kplane.to_string()),
            ]);
        }
        Command::Decomp(a) => {
            params.extend([
                ("cmd", "decomp".into()),
                ("g", a.g.to_string()),
                ("i", a.i.to_string()),
            ]);
        }
        Command::Stalks(a) => {
            params.extend([
                ("cmd", "stalks".into()),
                ("n", a.n.to_string()),
                ("i", a.i.to_string()),
                ("j", a.j.to_string()),
            ]);
        }
        Command::Verify(_) => return None,
    }
    Some(params)
}

fn execute(cmd: &Command, format: OutputFormat) -> Result<Output, Error> {
    let ok = |text| Output {
        text,
        code: EXIT_OK,
    };
    match cmd {
        Command::H(a) => match a.method {
            MethodChoice::One(m) => render::h_single(a.n, a.m, m, format).map(ok),
            MethodChoice::All => {
                let (text, agree) = render::h_all(a.n, a.m, format)?;
                Ok(Output {
                    text,
                    code: if agree { EXIT_OK } else { EXIT_FAIL },
                })
            }
        },
        Command::Betti(a) => render::betti(a.g, a.kplane, format).map(ok),
        Command::Decomp(a) => render::decomp(a.g, a.i, format).map(ok),
        Command::Stalks(a) => render::stalks(a.n, a.i, a.j, format).map(ok),
        Command::Verify(a) => {
            let params = SuiteParams {
                nmax: a.nmax,
                gmax: a.gmax,
                seed: a.seed,
                seeds: a.seeds,
                order: a.order,
                m: a.m,
                n: a.n,
                ..SuiteParams::default()
            };
            let reports = crate::verify::run_suite(a.suite, &params)?;
            let code = if crate::verify::all_passed(&reports) {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            Ok(Output {
                text: render::reports(&reports, format),
                code,
            })
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let cache = cli.cache_dir.as_ref().map(Cache::new);
    let key = cache_key(&cli.command, cli.format).map(|p| Cache::key(&p));
    if let (Some(cache), Some(key)) = (&cache, &key) {
        match cache.get(key) {
            Ok(Some(payload)) => {
                return match out.write_all(payload.as_bytes()) {
                    Ok(()) => EXIT_OK,
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        EXIT_INTERNAL
                    }
                };
            }
            Ok(None) => {}
            Err(e) => {
                let _ = writeln!(err, "warning: ignoring unreadable cache entry: {e}");
            }
        }
    }

    let output = match execute(&cli.command, cli.format) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    if output.code == EXIT_OK {
        if let (Some(cache), Some(key)) = (&cache, &key) {
            if let Err(e) = cache.put(key, &output.text) {
                let _ = writeln!(err, "warning: could not write cache entry: {e}");
            }
        }
    }
    if let Err(e) = out.write_all(output.text.as_bytes()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INTERNAL;
    }
    output.code
}
