//! `exactpair`: Hilbert functions, exact pairs of zero divisors, the
//! divisibility screen, matrix factorizations and the packaged examples.

mod commands;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use exactpair::arith::FieldSpec;
use exactpair::suite::DEFAULT_SEED;
use serde_json::{json, Value};

use commands::{AlgebraArgs, MfArgs, PairExpectation, ScreenExpectation, SearchArgs, SearchExpectation, VariantChoice};
use report::{render_text, report, CliError, EXIT_OK, EXIT_VERDICT};

#[derive(Parser)]
#[command(name = "exactpair", version, about = "Exact zero divisors in graded Artinian algebras")]
struct Cli {
    /// Emit the JSON report only.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field, overriding the file: `Q` or `F <p>`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Seed for random Artinian reductions.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Degree bound for the Artinian check, overriding the file.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Larger search limits and full per-strand detail.
    #[arg(long, global = true)]
    deep: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().and_then(FieldSpec::validate).map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let lo = a.trim().parse().map_err(|_| format!("bad bound `{a}`"))?;
    let hi = b.trim().parse().map_err(|_| format!("bad bound `{b}`"))?;
    if lo > hi {
        return Err(format!("empty window {lo},{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function, socle and minimal generator degrees.
    Hf {
        file: PathBuf,
    },
    /// Decide whether (theta1, theta2) is an exact pair.
    Pair {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta1: String,
        #[arg(long, allow_hyphen_values = true)]
        theta2: String,
        #[arg(long, value_enum)]
        expect: Option<PairExpectation>,
    },
    /// Search for linear exact zero divisors.
    EzdSearch {
        file: PathBuf,
        /// Comma-separated linear forms to test instead of enumerating.
        #[arg(long, allow_hyphen_values = true)]
        candidates: Option<String>,
        /// Test the linear forms with 0/1 coefficients.
        #[arg(long)]
        binary: bool,
        #[arg(long, value_enum)]
        expect: Option<SearchExpectation>,
    },
    /// Screen degree sums D by divisibility of the Hilbert series.
    Screen {
        file: Option<PathBuf>,
        /// Hilbert function, e.g. "1,5,11".
        #[arg(long)]
        hf: Option<String>,
        /// Candidate degree sums, e.g. "3,4".
        #[arg(long)]
        candidates: Option<String>,
        #[arg(long, value_enum)]
        expect: Option<ScreenExpectation>,
    },
    /// Residue-class sums of a Hilbert function modulo D.
    Sigma {
        #[arg(long)]
        hf: String,
        #[arg(short = 'D', long = "period")]
        d: i64,
        /// Also evaluate the binomial residuals with this many variables.
        #[arg(long)]
        s1: Option<u32>,
    },
    /// Matrix factorization of theta and, with --theta2, the periodic complex.
    Mf {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        theta2: Option<String>,
        #[arg(long, value_enum, default_value = "display")]
        variant: VariantChoice,
        /// Strand window `lo,hi`.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i64, i64)>,
        /// Include M and its partner as grids.
        #[arg(long)]
        matrices: bool,
    },
    /// Closed-form Hilbert data and combinatorics.
    Catalog {
        #[command(subcommand)]
        which: CatalogCommand,
    },
    /// Run the packaged examples against their stored expectations.
    PaperSuite(SuiteArgs),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Compressed level algebra of codimension c, socle degree e, type r.
    Compressed {
        #[arg(short)]
        c: u64,
        #[arg(short)]
        e: u64,
        #[arg(short)]
        r: u64,
    },
    /// Artinian reduction of the determinantal ring of r x c matrices.
    Det {
        #[arg(short)]
        r: u64,
        #[arg(short)]
        c: u64,
    },
    /// Eulerian polynomial A_s and Euler numbers up to E_s.
    Euler {
        #[arg(short)]
        s: u64,
    },
    /// Segre product of s projective lines.
    Segre {
        #[arg(short)]
        s: u64,
        /// Also build the ideal and reduce it (s = 3 only).
        #[arg(long)]
        direct: bool,
    },
    /// N_{a,b} with its closed form.
    Nab {
        #[arg(short)]
        a: u64,
        #[arg(short)]
        b: u64,
    },
    /// Rank and kernel of the alternating-binomial circulant.
    Circulant {
        #[arg(short)]
        b: usize,
        #[arg(short = 'B')]
        big_b: usize,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// Print the example names only.
    #[arg(long)]
    list: bool,
    /// Run only these examples.
    #[arg(long)]
    only: Vec<String>,
    /// Directory with the fixture files.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

fn algebra_args<'a>(cli: &Cli, file: &'a Path) -> AlgebraArgs<'a> {
    AlgebraArgs { file, field: cli.field, max_degree: cli.max_degree }
}

fn run(cli: &Cli) -> Result<(&'static str, Value, report::Outcome), CliError> {
    let path = |p: &Path| p.display().to_string();
    Ok(match &cli.command {
        Command::Hf { file } => ("hf", json!({"file": path(file)}), commands::hf(&algebra_args(cli, file))?),
        Command::Pair { file, theta1, theta2, expect } => (
            "pair",
            json!({"file": path(file), "theta1": theta1, "theta2": theta2}),
            commands::pair(&algebra_args(cli, file), theta1, theta2, *expect)?,
        ),
        Command::EzdSearch { file, candidates, binary, expect } => {
            let s = SearchArgs { candidates: candidates.as_deref(), binary: *binary, deep: cli.deep, expect: *expect };
            (
                "ezd-search",
                json!({"file": path(file), "candidates": candidates, "binary": binary, "deep": cli.deep}),
                commands::ezd_search(&algebra_args(cli, file), &s)?,
            )
        }
        Command::Screen { file, hf, candidates, expect } => {
            let a = file.as_deref().map(|f| algebra_args(cli, f));
            (
                "screen",
                json!({"file": file.as_deref().map(path), "hf": hf, "candidates": candidates}),
                commands::screen(a.as_ref(), hf.as_deref(), candidates.as_deref(), *expect)?,
            )
        }
        Command::Sigma { hf, d, s1 } => ("sigma", json!({"hf": hf, "d": d, "s1": s1}), commands::sigma(hf, *d, *s1)?),
        Command::Mf { file, theta, theta2, variant, window, matrices } => {
            let m = MfArgs {
                theta,
                theta2: theta2.as_deref(),
                variant: *variant,
                window: *window,
                matrices: *matrices,
                deep: cli.deep,
            };
            let inputs = json!({
                "file": path(file),
                "theta": theta,
                "theta2": theta2,
                "variant": format!("{variant:?}"),
                "window": window.map(|(a, b)| [a, b]),
            });
            ("mf", inputs, commands::mf(&algebra_args(cli, file), &m)?)
        }
        Command::Catalog { which } => match which {
            CatalogCommand::Compressed { c, e, r } => {
                ("catalog compressed", json!({"c": c, "e": e, "r": r}), commands::catalog_compressed(*c, *e, *r)?)
            }
            CatalogCommand::Det { r, c } => ("catalog det", json!({"r": r, "c": c}), commands::catalog_det(*r, *c)?),
            CatalogCommand::Euler { s } => ("catalog euler", json!({"s": s}), commands::catalog_euler(*s)?),
            CatalogCommand::Segre { s, direct } => (
                "catalog segre",
                json!({"s": s, "direct": direct}),
                commands::catalog_segre(*s, *direct, cli.seed)?,
            ),
            CatalogCommand::Nab { a, b } => ("catalog nab", json!({"a": a, "b": b}), commands::catalog_nab(*a, *b)?),
            CatalogCommand::Circulant { b, big_b } => {
                ("catalog circulant", json!({"b": b, "B": big_b}), commands::catalog_circulant(*b, *big_b)?)
            }
        },
        Command::PaperSuite(s) => (
            "paper-suite",
            json!({"list": s.list, "only": s.only, "fixtures": s.fixtures.as_deref().map(path)}),
            commands::paper_suite(s.list, &s.only, s.fixtures.as_deref(), cli.seed, cli.json || cli.deep)?,
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((command, inputs, outcome)) => {
            let r = report(command, inputs, &outcome);
            let text = if cli.json {
                serde_json::to_string_pretty(&r).expect("json") + "\n"
            } else {
                let verdict = if outcome.verdict_ok { "ok" } else { "FAILED" };
                format!("{}verdict                  {verdict}\n", render_text(&r))
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(if outcome.verdict_ok { EXIT_OK } else { EXIT_VERDICT } as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
