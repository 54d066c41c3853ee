//! Command-line front end. Output is fully deterministic.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::poset::{Poset, PosetCode, DEFAULT_MAX_ANTICHAINS};
use crate::verify::{verify_poset_cycle, verify_universal_cycle, verify_walk, CycleReport};
use crate::weight_range::{eulerian_cycle, generate_full, path_to_sink, Limits, WeightRangeParams};
use crate::word::{Cycle, Format, Word};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dbcycle", version, about = "Construct, verify and decode de Bruijn cycles")]
struct Cli {
    /// Accepted for scripts; output never depends on randomness.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Digits,
    Csv,
}

impl FormatArg {
    fn resolve(choice: Option<FormatArg>, alphabet_size: u32) -> Format {
        match choice {
            Some(FormatArg::Digits) => Format::Digits,
            Some(FormatArg::Csv) => Format::Csv,
            None => Format::default_for(alphabet_size),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    WeightRange,
    Poset,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Largest digraph (number of vertices) to traverse.
    #[arg(long, default_value_t = Limits::default().max_vertices)]
    max_vertices: u64,

    /// Largest cycle to emit.
    #[arg(long, default_value_t = Limits::default().max_cycle_length)]
    max_cycle_length: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_vertices: self.max_vertices, max_cycle_length: self.max_cycle_length }
    }
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    s: u64,
    #[arg(long)]
    t: u64,
}

impl RangeArgs {
    fn params(&self) -> Result<WeightRangeParams> {
        WeightRangeParams::new(self.n, self.k, self.s, self.t)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classic de Bruijn cycle of all k^n words.
    GenDebruijn {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Cycle of all n-letter k-ary words with weight in [s, t].
    GenWeightRange {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Cycle of all assignments of {1..n} to the elements of a poset.
    GenPoset {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_ANTICHAINS)]
        max_antichains: u64,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Count n-letter k-ary words by weight, as `j<TAB>count` lines.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, requires = "t", conflicts_with = "j")]
        s: Option<u64>,
        #[arg(long, requires = "s")]
        t: Option<u64>,
        #[arg(long)]
        j: Option<u64>,
    },
    /// Check a cycle; exit 0 on PASS, 1 on FAIL, 2 on bad input.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        poset: Option<PathBuf>,
        /// The cycle; read from the first line of stdin when omitted.
        #[arg(long)]
        cycle: Option<String>,
        /// Print `key=value` lines instead of the human summary.
        #[arg(long)]
        machine: bool,
    },
    /// Print the assignment coded by one window of a poset cycle.
    Decode {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        at: usize,
    },
    /// Trace the walk from a vertex to the sink vertex.
    PathDemo {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        from: String,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

fn read_poset(path: &PathBuf) -> Result<Poset> {
    let text = fs::read_to_string(path).map_err(|e| Error::Poset(format!("cannot read {}: {e}", path.display())))?;
    Poset::parse(&text)
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::GenDebruijn { k, n, format, limits } => {
            let cycle = generate_full(k, n, &limits.limits())?;
            writeln!(out, "{}", cycle.render(FormatArg::resolve(format, k))).map_err(io_error)?;
        }
        Command::GenWeightRange { range, format, limits } => {
            let params = range.params()?;
            let cycle = eulerian_cycle(&params, &limits.limits())?;
            writeln!(out, "{}", cycle.render(FormatArg::resolve(format, params.k()))).map_err(io_error)?;
        }
        Command::GenPoset { poset, n, format, max_antichains, limits } => {
            let code = PosetCode::new(read_poset(&poset)?, max_antichains)?;
            let cycle = code.cycle(n, &limits.limits())?;
            let format = FormatArg::resolve(format, cycle.alphabet_size());
            writeln!(out, "{}", cycle.render(format)).map_err(io_error)?;
            write!(out, "{}", code.legend()).map_err(io_error)?;
        }
        Command::Count { n, k, s, t, j } => {
            let table = CountTable::new(n, k)?;
            let max = table.max_weight();
            if n == 0 {
                return Err(Error::InvalidParams("requires n >= 1".into()));
            }
            let (lo, hi) = match (s, t, j) {
                (_, _, Some(j)) => (j, j),
                (Some(s), Some(t), None) => (s, t),
                _ => (0, max),
            };
            if lo > hi || hi > max {
                return Err(Error::InvalidParams(format!("requires 0 <= s <= t <= n(k-1) = {max}")));
            }
            for weight in lo..=hi {
                writeln!(out, "{weight}\t{}", table.get(weight)).map_err(io_error)?;
            }
            if j.is_none() {
                writeln!(out, "total\t{}", table.range_sum(lo, hi)).map_err(io_error)?;
            }
        }
        Command::Verify { mode, n, k, s, t, poset, cycle, machine } => {
            let text = match cycle {
                Some(text) => text,
                None => first_line(stdin)?,
            };
            let report = match mode {
                Mode::WeightRange => {
                    let missing = |flag: &str| Error::InvalidParams(format!("--mode weight-range needs --{flag}"));
                    let k = k.ok_or_else(|| missing("k"))?;
                    let params =
                        WeightRangeParams::new(n, k, s.ok_or_else(|| missing("s"))?, t.ok_or_else(|| missing("t"))?)?;
                    verify_universal_cycle(&Cycle::parse(&text, k, n)?, &params)
                }
                Mode::Poset => {
                    let path = poset.ok_or_else(|| Error::InvalidParams("--mode poset needs --poset".into()))?;
                    let poset = read_poset(&path)?;
                    let alpha = crate::poset::antichains(&poset, DEFAULT_MAX_ANTICHAINS)?.len() as u32;
                    verify_poset_cycle(&Cycle::parse(&text, alpha.max(2), n)?, &poset, n)?
                }
            };
            print_report(&report, machine, out)?;
            return Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL });
        }
        Command::Decode { poset, n, cycle, at } => {
            let code = PosetCode::new(read_poset(&poset)?, DEFAULT_MAX_ANTICHAINS)?;
            let cycle = Cycle::parse(&cycle, code.alpha() as u32, n)?;
            if at >= cycle.len() {
                return Err(Error::InvalidParams(format!("--at must be below the cycle length {}", cycle.len())));
            }
            let assignment = code.decode(&cycle, at)?;
            writeln!(out, "{}", assignment.render_stacked(code.poset())).map_err(io_error)?;
        }
        Command::PathDemo { range, from } => {
            let params = range.params()?;
            let start = Word::parse(&from, params.k())?;
            let walk = path_to_sink(&start, &params)?;
            let report = verify_walk(&walk, &params);
            writeln!(out, "{}", report.render_trace()).map_err(io_error)?;
            if !report.passed() {
                return Err(Error::Internal("constructed walk failed verification".into()));
            }
        }
    }
    Ok(EXIT_PASS)
}

fn first_line(stdin: &mut dyn BufRead) -> Result<String> {
    for line in stdin.lines() {
        let line = line.map_err(io_error)?;
        if !line.trim().is_empty() {
            return Ok(line.trim().to_string());
        }
    }
    Err(Error::InvalidParams("no cycle given on --cycle or stdin".into()))
}

fn print_report(report: &CycleReport, machine: bool, out: &mut dyn Write) -> Result<()> {
    let text = if machine { report.render_machine() } else { report.render_human() + "\n" };
    out.write_all(text.as_bytes()).map_err(io_error)
}
