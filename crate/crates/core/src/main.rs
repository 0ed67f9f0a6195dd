use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use froblab::cache::Cache;
use froblab::commands::{self, CommandError, CurveInput, Outcome, Render};
use froblab::curve::LPolynomial;

/// Point counts, zeta functions and ordinarity checks for superelliptic
/// curves y^m = f(x) over finite fields.
///
/// Exit status: 0 when every check passes, 1 on a negative verdict or failed
/// claim, 2 on usage errors, unmet hypotheses and budget limits.
#[derive(Parser)]
#[command(name = "froblab", version, about, long_about)]
struct Cli {
    /// Emit one JSON object on stdout (keys sorted).
    #[arg(long, global = true)]
    json: bool,
    /// Cache file (JSON lines). Defaults to ~/.cache/froblab/cache.jsonl.
    #[arg(long, global = true, env = "FROBLAB_CACHE")]
    cache: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveArgs {
    /// Exponent m in y^m = f(x).
    #[arg(long)]
    m: Option<u32>,
    /// f(x) with integer coefficients, e.g. "x^9 - x".
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Whole curve, e.g. "y^3 = x^9 - x" (instead of --m and --f).
    #[arg(long, conflicts_with_all = ["m", "f"])]
    curve: Option<String>,
    /// Prime p.
    #[arg(long)]
    p: u64,
}

impl CurveArgs {
    fn input(&self) -> Result<CurveInput, CommandError> {
        CurveInput::from_args(self.m, self.f.as_deref(), self.curve.as_deref(), self.p)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Point counts, L-polynomial, Weil check and Newton polygon.
    ///
    /// JSON keys: cached, counts [{k, n}], curve, error {hint, kind,
    /// limiting_k, message} | null, genus, lpoly, m, newton {p_rank,
    /// valuations}, ordinary, p, weil {functional_equation,
    /// max_modulus_deviation, modulus_check, tolerance, violations}.
    Zeta {
        #[command(flatten)]
        curve: CurveArgs,
        /// Count up to F_(p^k) and check every count beyond the genus
        /// against the L-polynomial.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Ordinarity from the Hasse-Witt matrix (needs p = 1 mod m).
    ///
    /// JSON keys: block_sizes, cached, curve, genus, m, method, ordinary,
    /// p, p_rank.
    Ordinary {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Morse test: f' squarefree and distinct critical values.
    ///
    /// JSON keys: critical_values_distinct, derivative_squarefree, f,
    /// morse, p, witness.
    Morse {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        p: u64,
    },
    /// Splitting of p in Q(zeta_n) and/or Q(sqrt(D)).
    ///
    /// JSON keys: fields [{field {kind, conductor | discriminant}, p,
    /// splits}], p, splits.
    Split {
        #[arg(long)]
        p: u64,
        /// Cyclotomic conductor n.
        #[arg(long)]
        n: Option<u64>,
        /// Fundamental discriminant D.
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
    },
    /// Checks that q^-d (product of d eigenvalues)^2 is never a root of unity.
    ///
    /// Input is a curve (--m/--f/--p) or an L-polynomial (--lpoly, --q).
    /// JSON keys: certified, genus, lpoly, q, results [{certified, d,
    /// direct_oracle, ordinary, structural_pass, valuation_range}].
    LemmaCheck {
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, conflicts_with_all = ["m", "f"])]
        curve: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        /// Comma-separated coefficients b_0..b_2g, e.g. "1,2,5".
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["m", "f", "curve"])]
        lpoly: Option<String>,
        /// Field size for --lpoly.
        #[arg(long, requires = "lpoly")]
        q: Option<u64>,
        /// Odd d; all odd d <= 2g when omitted.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Check the statements about y^3 = x^9 - x at primes p = 1 mod 24.
    ///
    /// JSON keys: all_pass, primes [{claims [{anchor, evidence, id, pass}],
    /// hypothesis, p, pass}], tool_version.
    PaperVerify {
        #[arg(long, conflicts_with = "count")]
        p: Option<u64>,
        /// Use the first N primes = 1 mod 24, from 73.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Inspect or compact the cache.
    ///
    /// JSON keys: path, records, warnings.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// List the current record per key.
    Show,
    /// Rewrite the file with one record per key.
    Compact,
}

fn default_cache() -> Option<PathBuf> {
    let home = std::env::var_os("HOME")?;
    Some(PathBuf::from(home).join(".cache").join("froblab").join("cache.jsonl"))
}

fn emit<T: Serialize + Render>(json: bool, out: Outcome<T>) -> i32 {
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    if json {
        println!("{}", commands::to_json(&out.report));
    } else {
        print!("{}", out.report.render());
    }
    out.status.exit_code()
}

fn parse_lpoly(s: &str, q: Option<u64>) -> Result<LPolynomial, CommandError> {
    let q = q.ok_or_else(|| CommandError::Usage("--lpoly needs --q".into()))?;
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<i128>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CommandError::Usage(format!("--lpoly: {e}")))?;
    if coeffs.is_empty() {
        return Err(CommandError::Usage("--lpoly is empty".into()));
    }
    Ok(LPolynomial::new(coeffs, q)?)
}

fn run(cli: Cli) -> Result<i32, CommandError> {
    let cache = if cli.no_cache {
        None
    } else {
        cli.cache.clone().or_else(default_cache).map(Cache::new)
    };
    let cache = cache.as_ref();
    let json = cli.json;
    Ok(match cli.command {
        Command::Zeta { curve, k } => emit(json, commands::zeta(&curve.input()?, k, cache)?),
        Command::Ordinary { curve } => emit(json, commands::ordinary(&curve.input()?, cache)?),
        Command::Morse { f, p } => emit(json, commands::morse(&froblab::poly::parse_poly(&f)?, p)?),
        Command::Split { p, n, disc } => emit(json, commands::split(p, n, disc)?),
        Command::LemmaCheck {
            m,
            f,
            curve,
            p,
            lpoly,
            q,
            d,
        } => {
            let l = match lpoly {
                Some(s) => parse_lpoly(&s, q)?,
                None => {
                    let p = p.ok_or_else(|| CommandError::Usage("give --p with a curve, or --lpoly".into()))?;
                    let input = CurveInput::from_args(m, f.as_deref(), curve.as_deref(), p)?;
                    let (l, warnings) = commands::lpoly_for(&input, cache)?;
                    for w in warnings {
                        eprintln!("warning: {w}");
                    }
                    l
                }
            };
            emit(json, commands::lemma_check(&l, d)?)
        }
        Command::PaperVerify { p, count } => {
            let primes = match (p, count) {
                (Some(p), _) => vec![p],
                (None, Some(n)) => commands::primes_one_mod_24(n),
                (None, None) => vec![73],
            };
            emit(json, commands::paper_verify(&primes)?)
        }
        Command::Cache { action } => {
            let cache = cache.ok_or_else(|| CommandError::Usage("no cache path (set --cache or FROBLAB_CACHE)".into()))?;
            match action {
                CacheAction::Show => emit(json, commands::cache_show(cache)?),
                CacheAction::Compact => emit(json, commands::cache_compact(cache)?),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
