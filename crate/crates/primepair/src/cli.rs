//! Command-line interface.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use primepair_core::analysis::{self, FigureSeries, FigureSpec, TMethod};
use primepair_core::constants;
use primepair_core::sieve::{self, DEFAULT_SEGMENT_SIZE};
use primepair_core::zeros::ZeroTable;

use crate::cache::{header_line, PairCache};
use crate::error::{CliError, Result};
use crate::pipeline::{self, Engine};
use crate::progress;
use crate::zeros_io;

/// Above this every `x` needs `--big`.
pub const DESK_LIMIT: u64 = 1_000_000_000;
/// Largest limit accepted by `--dump-primes`.
pub const DUMP_LIMIT: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "primepair", version, about = "Prime pairs, Hardy-Littlewood constants and the error function Delta_N(x)")]
pub struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    /// Sieve segment length in integers.
    #[arg(long, global = true, default_value_t = DEFAULT_SEGMENT_SIZE, value_parser = parse_count)]
    pub segment_size: u64,

    /// Allow x above 10^9; such runs take hours.
    #[arg(long, global = true)]
    pub big: bool,

    /// No progress lines on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    /// Directory for cached pair counts.
    #[arg(long = "cache", env = "PRIMEPAIR_CACHE", default_value = "primepair-cache")]
    pub dir: PathBuf,

    /// Neither read nor write the cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct ZeroArgs {
    /// Zero-ordinate table, one value per line, optionally gzipped.
    #[arg(long, env = "PRIMEPAIR_ZEROS")]
    pub zeros_file: Option<PathBuf>,

    /// Use only the first this many zeros.
    #[arg(long, value_parser = parse_count)]
    pub max_zeros: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Psi,
    Zeros,
}

impl From<Method> for TMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Psi => TMethod::Psi,
            Method::Zeros => TMethod::Zeros,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    /// Delta_N(x) against 2N at one x.
    FixedX,
    /// Delta_N(x) against x at one N.
    FixedN,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count prime pairs p, p + 2r for every even gap up to --max-gap.
    Count {
        /// Comma-separated checkpoints, e.g. 1e3,1e4,1e6.
        #[arg(long, value_delimiter = ',', value_parser = parse_count, required = true)]
        x_list: Vec<u64>,
        /// Largest even gap 2N.
        #[arg(long, default_value_t = 5000, value_parser = parse_count)]
        max_gap: u64,
        #[command(flatten)]
        cache: CacheArgs,
        /// Also write the primes up to the largest checkpoint to this CSV.
        #[arg(long)]
        dump_primes: Option<PathBuf>,
    },
    /// Print C2r / C2 as exact fractions and the prefix sums S_N / C2.
    Constants {
        /// Largest even gap 2N.
        #[arg(long, default_value_t = 5000, value_parser = parse_count)]
        max_gap: u64,
        /// Multiply the twin-prime constant over primes up to this bound.
        #[arg(long, default_value_t = constants::DEFAULT_C2_PRIME_LIMIT, value_parser = parse_count)]
        c2_limit: u64,
    },
    /// Evaluate the oscillation term T(x).
    Tx {
        /// Evaluation point, e.g. 1e6.
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Exact Chebyshev psi or the truncated sum over zeta zeros.
        #[arg(long, value_enum, default_value_t = Method::Psi)]
        method: Method,
        #[command(flatten)]
        zeros: ZeroArgs,
    },
    /// Delta_N(x) rows at one x.
    Table {
        /// Evaluation point, e.g. 1e6.
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// N values: a comma list or start:end:step, inclusive.
        #[arg(long, default_value = "50:2500:50")]
        n_list: String,
        /// How T(x) is evaluated.
        #[arg(long, value_enum, default_value_t = Method::Psi)]
        t_method: Method,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[command(flatten)]
        cache: CacheArgs,
        /// Output CSV; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Data series and a gnuplot script for the Delta_N plots.
    Figure {
        /// Which sweep to produce.
        #[arg(long, value_enum)]
        kind: FigureKind,
        /// The fixed x of a fixed-x sweep.
        #[arg(long, value_parser = parse_count)]
        x: Option<u64>,
        /// The fixed N of a fixed-N sweep.
        #[arg(long, value_parser = parse_count)]
        n: Option<u64>,
        /// Largest x of a fixed-N sweep.
        #[arg(long, default_value = "1e8", value_parser = parse_count)]
        max_x: u64,
        /// How T(x) is evaluated.
        #[arg(long, value_enum, default_value_t = Method::Psi)]
        t_method: Method,
        #[command(flatten)]
        zeros: ZeroArgs,
        #[command(flatten)]
        cache: CacheArgs,
        /// Directory receiving figure.csv and figure.gp.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Compare against the published tables at x.
    Verify {
        /// Checkpoint with published values: 1e3, 1e4, 1e6, 1e8, or 1e10 and 1e12 with --big.
        #[arg(long, default_value = "1e6", value_parser = parse_count)]
        x: u64,
        #[command(flatten)]
        cache: CacheArgs,
    },
}

/// Parses `1000`, `1_000`, `1e6` or `2.5e6` into an exact integer.
pub fn parse_count(s: &str) -> std::result::Result<u64, String> {
    let t = s.trim().replace('_', "");
    let err = || format!("'{s}' is not a non-negative integer (examples: 1000, 1e6, 2.5e6)");
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<u32>().map_err(|_| err())?),
        None => (t.as_str(), 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let frac = frac.trim_end_matches('0');
    let shift = exp.checked_sub(frac.len() as u32).ok_or_else(|| format!("'{s}' is not an integer"))?;
    let digits: u64 = format!("{int}{frac}").parse().map_err(|_| err())?;
    10u64.checked_pow(shift).and_then(|p| digits.checked_mul(p)).ok_or_else(|| format!("'{s}' does not fit in 64 bits"))
}

/// Parses `50:2500:50` (inclusive) or `50,100,150`.
pub fn parse_n_list(s: &str) -> Result<Vec<u64>> {
    let bad = |why: &str| CliError::Usage(format!("--n-list '{s}': {why}"));
    let list: Vec<u64> = if s.contains(':') {
        let parts: Vec<u64> =
            s.split(':').map(parse_count).collect::<std::result::Result<_, _>>().map_err(|e| bad(&e))?;
        let [start, end, step] = parts[..] else { return Err(bad("expected start:end:step")) };
        if step == 0 || start > end {
            return Err(bad("need start <= end and step >= 1"));
        }
        (start..=end).step_by(step as usize).collect()
    } else {
        s.split(',').map(parse_count).collect::<std::result::Result<_, _>>().map_err(|e| bad(&e))?
    };
    if list.is_empty() || list.contains(&0) {
        return Err(bad("N values must be at least 1"));
    }
    Ok(list)
}

fn half_gap(max_gap: u64) -> Result<u64> {
    if max_gap < 2 || !max_gap.is_multiple_of(2) {
        return Err(CliError::Usage(format!("--max-gap must be an even number >= 2, got {max_gap}")));
    }
    Ok(max_gap / 2)
}

fn check_x(x: u64, big: bool) -> Result<()> {
    if x > DESK_LIMIT && !big {
        return Err(CliError::Usage(format!("x = {x} exceeds 10^9; pass --big to confirm a multi-hour run")));
    }
    Ok(())
}

fn engine(cli: &Cli, cache: Option<&CacheArgs>) -> Result<Engine> {
    let workers = cli.workers.map_or_else(pipeline::default_workers, |w| w as usize);
    let mut e = Engine::new(workers);
    e.segment_size = cli.segment_size;
    if let Some(c) = cache.filter(|c| !c.no_cache) {
        e = e.with_cache(PairCache::new(&c.dir));
    }
    e.sieve_config().validate()?;
    Ok(e)
}

fn load_zeros(args: &ZeroArgs, required: bool) -> Result<Option<ZeroTable>> {
    match &args.zeros_file {
        Some(path) => {
            let table = zeros_io::load_zeros(path, args.max_zeros.map(|m| m as usize))?;
            log::info!("loaded {} zeros from {}", table.len(), path.display());
            Ok(Some(table))
        }
        None if required => Err(CliError::Config(
            "T via zeros needs a zero table: pass --zeros-file or set PRIMEPAIR_ZEROS".into(),
        )),
        None => Ok(None),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            }
            fs::write(p, text).map_err(|e| CliError::io(p, e))
        }
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// Runs a parsed command line; the returned text goes to stdout.
pub fn run(cli: &Cli) -> Result<()> {
    progress::set_quiet(cli.quiet);
    match &cli.command {
        Command::Count { x_list, max_gap, cache, dump_primes } => {
            let mut xs = x_list.clone();
            xs.sort_unstable();
            xs.dedup();
            for &x in &xs {
                check_x(x, cli.big)?;
            }
            let n = half_gap(*max_gap)?;
            let engine = engine(cli, Some(cache))?;
            let table = engine.pair_counts(&xs, n)?;
            if let Some(path) = dump_primes {
                let limit = *xs.last().unwrap();
                if limit > DUMP_LIMIT {
                    return Err(CliError::Usage(format!("--dump-primes is limited to x <= {DUMP_LIMIT}")));
                }
                let mut text = format!("{}\np\n", header_line(&format!("primes limit={limit}")));
                for p in sieve::primes_vec(limit)? {
                    let _ = writeln!(text, "{p}");
                }
                write_output(Some(path), &text)?;
            }
            match &engine.cache {
                Some(c) => println!("{}", c.path_for(table.checkpoints(), table.max_half_gap()).display()),
                None => {
                    let mut text = format!("{}\nx,two_r,count\n", header_line(&format!("count {xs:?} {n}")));
                    for (x, two_r, count) in table.entries() {
                        let _ = writeln!(text, "{x},{two_r},{count}");
                    }
                    write_output(None, &text)?;
                }
            }
            Ok(())
        }
        Command::Constants { max_gap, c2_limit } => {
            let n = half_gap(*max_gap)?;
            let mut engine = engine(cli, None)?;
            engine.c2_prime_limit = *c2_limit;
            let c2 = engine.c2()?;
            let sums = engine.prefix_sums(n)?;
            let mut text = format!(
                "{}\n# C2 = {:.12} +- {:.1e}\ntwo_r,ratio_num,ratio_den,s_over_c2\n",
                header_line(&format!("constants n={n} c2_limit={c2_limit}")),
                c2.value,
                c2.tail_bound
            );
            for r in 1..=n {
                let q = constants::ratio(r)?;
                let _ = writeln!(text, "{},{},{},{:.7}", 2 * r, q.numerator, q.denominator, sums.s_over_c2(r)?);
            }
            write_output(None, &text)
        }
        Command::Tx { x, method, zeros } => {
            check_x(*x, cli.big)?;
            if *x < 2 {
                return Err(CliError::Usage("--x must be at least 2".into()));
            }
            let table = load_zeros(zeros, *method == Method::Zeros)?;
            let engine = engine(cli, None)?;
            let t = engine.t_values(&[*x], (*method).into(), table.as_ref())?[0];
            println!("{t:.5}");
            Ok(())
        }
        Command::Table { x, n_list, t_method, zeros, cache, out } => {
            check_x(*x, cli.big)?;
            let n_list = parse_n_list(n_list)?;
            let table = load_zeros(zeros, *t_method == Method::Zeros)?;
            let mut engine = engine(cli, Some(cache))?;
            let rows = engine.table(*x, &n_list, (*t_method).into(), table.as_ref())?;
            let mut text = format!(
                "{}\nx,two_n,s_over_c2,pi_n,q_n,t_x,delta_n,delta_bar\n",
                header_line(&format!("table x={x} n={n_list:?} t={t_method:?}"))
            );
            for r in rows {
                let _ = writeln!(
                    text,
                    "{},{},{:.5},{},{:.5},{:.5},{:.5},{:.5}",
                    r.x, r.two_n, r.s_over_c2, r.pi_n, r.q_n, r.t_x, r.delta_n, r.delta_bar
                );
            }
            write_output(out.as_deref(), &text)
        }
        Command::Figure { kind, x, n, max_x, t_method, zeros, cache, out_dir } => {
            let spec = match kind {
                FigureKind::FixedX => {
                    let x = x.ok_or_else(|| CliError::Usage("--kind fixed-x needs --x".into()))?;
                    if n.is_some() {
                        return Err(CliError::Usage("--n does not apply to --kind fixed-x".into()));
                    }
                    FigureSpec::fixed_x(x)
                }
                FigureKind::FixedN => {
                    let n = n.ok_or_else(|| CliError::Usage("--kind fixed-n needs --n".into()))?;
                    if x.is_some() {
                        return Err(CliError::Usage("--x does not apply to --kind fixed-n; use --max-x".into()));
                    }
                    FigureSpec::fixed_n(n, *max_x)
                }
            };
            spec.validate()?;
            let (xs, n_max) = spec.requirements();
            for &x in &xs {
                check_x(x, cli.big)?;
            }
            let table = load_zeros(zeros, *t_method == Method::Zeros)?;
            let mut engine = engine(cli, Some(cache))?;
            let counts = engine.pair_counts(&xs, n_max)?;
            let sums = engine.prefix_sums(n_max)?;
            let contexts = engine.contexts(&xs, (*t_method).into(), table.as_ref())?;
            let series = analysis::figure_series(&spec, &contexts, &counts, &sums)?;
            let config = format!("figure {spec:?} t={t_method:?}");
            fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
            let csv = out_dir.join("figure.csv");
            let gp = out_dir.join("figure.gp");
            write_output(Some(&csv), &figure_csv(&series, &config))?;
            write_output(Some(&gp), &gnuplot_script(&series, &config))?;
            println!("{}\n{}", csv.display(), gp.display());
            Ok(())
        }
        Command::Verify { x, cache } => {
            check_x(*x, cli.big)?;
            let mut engine = engine(cli, Some(cache))?;
            let checks = pipeline::verify(&mut engine, *x)?;
            let mut out = std::io::stdout().lock();
            for c in &checks {
                let _ = writeln!(out, "{}", c.line());
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            let _ = writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len());
            if failed > 0 {
                return Err(CliError::Verification { failed, total: checks.len() });
            }
            Ok(())
        }
    }
}

pub fn figure_csv(series: &FigureSeries, config: &str) -> String {
    let overlay = series.has_delta_bar();
    let abscissa = match series.spec {
        FigureSpec::FixedX { .. } => "two_n",
        FigureSpec::FixedN { .. } => "x",
    };
    let mut text = format!("{}\n{abscissa},delta_n{}\n", header_line(config), if overlay { ",delta_bar" } else { "" });
    for p in &series.points {
        let _ = write!(text, "{},{:.5}", p.abscissa, p.delta_n);
        if let Some(b) = p.delta_bar {
            let _ = write!(text, ",{b:.5}");
        }
        text.push('\n');
    }
    text
}

pub fn gnuplot_script(series: &FigureSeries, config: &str) -> String {
    let mut s = format!("{}\nset datafile separator ','\nset key top right\nset grid\n", header_line(config));
    match &series.spec {
        FigureSpec::FixedX { x, .. } => {
            let _ = writeln!(s, "set title 'Delta_N(x), x = {x}'\nset xlabel '2N'\nset ylabel 'Delta_N(x)'");
            let _ = write!(s, "plot 'figure.csv' using 1:2 every ::1 with lines title 'Delta_N(x)'");
            if series.has_delta_bar() {
                let _ = write!(s, ", \\\n     'figure.csv' using 1:3 every ::1 with lines dashtype 2 title 'model'");
            }
            s.push('\n');
        }
        FigureSpec::FixedN { n, .. } => {
            let _ = writeln!(
                s,
                "set title 'Delta_N(x), N = {n}'\nset logscale x\nset format x '10^{{%L}}'\nset xlabel 'x'\nset ylabel 'Delta_N(x)'"
            );
            let _ = writeln!(s, "plot 'figure.csv' using 1:2 every ::1 with linespoints pt 7 ps 0.5 title 'Delta_N(x)'");
        }
    }
    s.push_str("pause mouse close\n");
    s
}
