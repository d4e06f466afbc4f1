//! The `ncps` command-line tool: JSON series in, JSON series out.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing property, 2 on
//! malformed input or usage errors.

pub mod document;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ncps_core::combinatorics::words_up_to;
use ncps_core::cumulants::{
    boolean_oracle_recursion, free_oracle_nc_with_cap, monotone_formula_symbolic, monotone_oracle_formula,
    monotone_oracle_trees_with_cap, CumulantKind, NC_ORACLE_DEFAULT_CAP, TREE_ORACLE_DEFAULT_CAP,
};
use ncps_core::verify::{self, Fault, VerifyOptions};
use ncps_core::{parse_rational, Coefficient, Execution, Rational, TruncatedSeries, Word};

use document::{rational_series, AnySeries, SeriesDocument};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed documents or operands outside
    /// an operation's domain.
    Input(String),
    /// A property suite found a counterexample.
    VerificationFailed,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::VerificationFailed => 1,
        }
    }
}

impl From<ncps_core::Error> for CliError {
    fn from(e: ncps_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "ncps", version, about = "Exact truncated non-commutative power series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Free,
    Boolean,
    Monotone,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    /// Moments to cumulants.
    M2c,
    /// Cumulants to moments.
    C2m,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpName {
    Mul,
    Inv,
    Compose,
    Sinv,
    Substitute,
    Prelie,
    Bracket,
    Exp,
    Log,
    Bch,
    Flow,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleName {
    NcFree,
    BooleanRecursion,
    MonotoneFormula,
    MonotoneTrees,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FaultName {
    DropInsertionGap,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert between moments and free, Boolean or monotone cumulants.
    Convert {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Also print the series in readable form.
        #[arg(long)]
        pretty: bool,
    },
    /// Apply a series operation to one or two operands.
    Op {
        #[arg(value_enum)]
        name: OpName,
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// For `flow`: evaluate at this value of t instead of returning a
        /// polynomial in t.
        #[arg(long = "t-param")]
        t_param: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Run one of the combinatorial oracles.
    Oracle {
        #[arg(value_enum)]
        name: OracleName,
        /// Input series (not used by monotone-formula).
        #[arg(short = 'i', long = "input")]
        input: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Print only the value at this word, e.g. `1,2,1`.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<u32>>,
        /// Moment index for monotone-formula.
        #[arg(short = 'n', long)]
        n: Option<usize>,
        /// Numeric h_1,h_2,… for monotone-formula; symbolic when omitted.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<String>>,
        /// Override the default size cap of nc-free or monotone-trees.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only the named suite (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
        /// Disable the thread pool.
        #[arg(long)]
        sequential: bool,
        #[arg(long = "inject-fault", value_enum, hide = true)]
        inject_fault: Option<FaultName>,
    },
}

fn read_series(path: &Path) -> Result<AnySeries, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    SeriesDocument::parse(&text)
}

fn emit(out: &mut dyn Write, output: Option<&Path>, s: &AnySeries, pretty: bool) -> Result<(), CliError> {
    let text = SeriesDocument::render(s);
    let io = |e: std::io::Error| CliError::input(format!("write failed: {e}"));
    match output {
        Some(p) => fs::write(p, &text).map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io)?,
    }
    if pretty {
        let shown = match s {
            AnySeries::Rational(s) => s.to_string(),
            AnySeries::PolyT(s) => s.to_string(),
        };
        writeln!(out, "{shown}").map_err(io)?;
    }
    Ok(())
}

fn convert_generic<C: Coefficient>(
    kind: CumulantKind,
    direction: Direction,
    s: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>, CliError> {
    use ncps_core::cumulants::*;
    let out = match (kind, direction) {
        (CumulantKind::Free, Direction::M2c) => free_from_moments(s),
        (CumulantKind::Free, Direction::C2m) => moments_from_free(s),
        (CumulantKind::Boolean, Direction::M2c) => boolean_from_moments(s),
        (CumulantKind::Boolean, Direction::C2m) => moments_from_boolean(s),
        (CumulantKind::Monotone, Direction::M2c) => monotone_from_moments(s),
        (CumulantKind::Monotone, Direction::C2m) => moments_from_monotone(s),
    };
    Ok(out?)
}

fn cmd_convert(kind: Kind, direction: Direction, input: &Path) -> Result<AnySeries, CliError> {
    let kind = match kind {
        Kind::Free => CumulantKind::Free,
        Kind::Boolean => CumulantKind::Boolean,
        Kind::Monotone => CumulantKind::Monotone,
    };
    match read_series(input)? {
        AnySeries::Rational(s) => Ok(convert_generic(kind, direction, &s)?.into()),
        AnySeries::PolyT(s) => Ok(convert_generic(kind, direction, &s)?.into()),
    }
}

fn op_generic<C: Coefficient>(
    name: OpName,
    a: &TruncatedSeries<C>,
    b: Option<&TruncatedSeries<C>>,
) -> Result<TruncatedSeries<C>, CliError> {
    let b = || b.ok_or_else(|| CliError::input("this operation needs a second operand"));
    let out = match name {
        OpName::Mul => a.cauchy_mul(b()?),
        OpName::Inv => a.cauchy_inv(),
        OpName::Compose => a.shifted_compose(b()?),
        OpName::Sinv => a.shifted_inverse(),
        OpName::Substitute => a.shifted_substitute(b()?),
        OpName::Prelie => a.pre_lie(b()?),
        OpName::Bracket => a.lie_bracket(b()?),
        OpName::Exp => a.exp_g(),
        OpName::Log => a.log_g(),
        OpName::Bch => a.bch(b()?),
        OpName::Flow => unreachable!("flow is handled separately"),
    };
    Ok(out?)
}

fn is_binary(name: OpName) -> bool {
    matches!(
        name,
        OpName::Mul | OpName::Compose | OpName::Substitute | OpName::Prelie | OpName::Bracket | OpName::Bch
    )
}

fn cmd_op(name: OpName, a: &Path, b: Option<&Path>, t_param: Option<&str>) -> Result<AnySeries, CliError> {
    match (is_binary(name), b) {
        (true, None) => return Err(CliError::input("this operation needs a second operand")),
        (false, Some(_)) => return Err(CliError::input("this operation takes a single operand")),
        _ => {}
    }
    if t_param.is_some() && !matches!(name, OpName::Flow) {
        return Err(CliError::input("--t-param only applies to flow"));
    }
    let a = read_series(a)?;
    let b = b.map(read_series).transpose()?;
    if let OpName::Flow = name {
        let h = rational_series(a, "the flow generator")?;
        let m = h.flow()?;
        return Ok(match t_param {
            Some(t) => m.specialize(&parse_rational(t)?).into(),
            None => m.into(),
        });
    }
    match (a, b) {
        (AnySeries::Rational(a), None) => Ok(op_generic(name, &a, None)?.into()),
        (AnySeries::Rational(a), Some(AnySeries::Rational(b))) => Ok(op_generic(name, &a, Some(&b))?.into()),
        (AnySeries::PolyT(a), None) => Ok(op_generic(name, &a, None)?.into()),
        (AnySeries::PolyT(a), Some(AnySeries::PolyT(b))) => Ok(op_generic(name, &a, Some(&b))?.into()),
        _ => Err(CliError::input("operands use different coefficient rings")),
    }
}

struct OracleArgs<'a> {
    input: Option<&'a Path>,
    word: Option<&'a [u32]>,
    n: Option<usize>,
    h: Option<&'a [String]>,
    cap: Option<usize>,
}

enum OracleOutput {
    Series(AnySeries),
    Text(String),
}

fn nc_free_series<C: Coefficient>(k: &TruncatedSeries<C>, cap: usize) -> Result<TruncatedSeries<C>, CliError> {
    if k.degree() > cap {
        return Err(CliError::input(format!(
            "truncation {} exceeds the non-crossing oracle cap {cap}",
            k.degree()
        )));
    }
    let mut m = TruncatedSeries::zero(k.alphabet(), k.degree())?;
    for w in words_up_to(k.alphabet(), k.degree()) {
        let c = free_oracle_nc_with_cap(k, &w, cap)?;
        m.set(w, c)?;
    }
    Ok(m)
}

fn oracle_on<C: Coefficient>(
    name: OracleName,
    s: &TruncatedSeries<C>,
    args: &OracleArgs,
) -> Result<TruncatedSeries<C>, CliError> {
    match name {
        OracleName::NcFree => {
            let cap = args.cap.unwrap_or(NC_ORACLE_DEFAULT_CAP);
            if let Some(w) = args.word {
                let mut single = TruncatedSeries::zero(s.alphabet(), s.degree())?;
                let w = Word::new(w.to_vec())?;
                single.set(w.clone(), free_oracle_nc_with_cap(s, &w, cap)?)?;
                return Ok(single);
            }
            nc_free_series(s, cap)
        }
        OracleName::BooleanRecursion => Ok(boolean_oracle_recursion(s)?),
        OracleName::MonotoneTrees => Ok(monotone_oracle_trees_with_cap(
            s,
            args.cap.unwrap_or(TREE_ORACLE_DEFAULT_CAP),
        )?),
        OracleName::MonotoneFormula => unreachable!("handled without an input series"),
    }
}

fn word_value(s: &AnySeries, w: &[u32]) -> Result<String, CliError> {
    let w = Word::new(w.to_vec())?;
    Ok(match s {
        AnySeries::Rational(s) => s.coefficient(&w).to_string(),
        AnySeries::PolyT(s) => s.coefficient(&w).to_string(),
    })
}

fn cmd_oracle(name: OracleName, args: &OracleArgs) -> Result<OracleOutput, CliError> {
    if let OracleName::MonotoneFormula = name {
        let n = args.n.ok_or_else(|| CliError::input("monotone-formula needs -n"))?;
        if n == 0 {
            return Err(CliError::input("-n must be at least 1"));
        }
        return Ok(OracleOutput::Text(match args.h {
            None => monotone_formula_symbolic(n).to_string(),
            Some(h) => {
                let h = h
                    .iter()
                    .map(|v| parse_rational(v))
                    .collect::<Result<Vec<Rational>, _>>()?;
                monotone_oracle_formula(&h, n)?.to_string()
            }
        }));
    }
    let input = args.input.ok_or_else(|| CliError::input("this oracle needs -i"))?;
    let out: AnySeries = match read_series(input)? {
        AnySeries::Rational(s) => oracle_on(name, &s, args)?.into(),
        AnySeries::PolyT(s) => oracle_on(name, &s, args)?.into(),
    };
    match args.word {
        Some(w) => Ok(OracleOutput::Text(word_value(&out, w)?)),
        None => Ok(OracleOutput::Series(out)),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    out: &mut dyn Write,
    alphabet: usize,
    degree: usize,
    trials: usize,
    seed: u64,
    suites: Vec<String>,
    sequential: bool,
    fault: Option<FaultName>,
) -> Result<(), CliError> {
    let mut opts = VerifyOptions::new(alphabet, degree, trials, seed);
    if !suites.is_empty() {
        opts.only = Some(suites);
    }
    if sequential {
        opts.execution = Execution::Sequential;
    }
    opts.fault = fault.map(|FaultName::DropInsertionGap| Fault::DropInsertionGap);
    let report = verify::run(&opts)?;
    writeln!(out, "{report}").map_err(|e| CliError::input(format!("write failed: {e}")))?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Convert {
            kind,
            direction,
            input,
            output,
            pretty,
        } => {
            let s = cmd_convert(kind, direction, &input)?;
            emit(out, output.as_deref(), &s, pretty)
        }
        Command::Op {
            name,
            a,
            b,
            output,
            t_param,
            pretty,
        } => {
            let s = cmd_op(name, &a, b.as_deref(), t_param.as_deref())?;
            emit(out, output.as_deref(), &s, pretty)
        }
        Command::Oracle {
            name,
            input,
            output,
            word,
            n,
            h,
            cap,
            pretty,
        } => {
            let args = OracleArgs {
                input: input.as_deref(),
                word: word.as_deref(),
                n,
                h: h.as_deref(),
                cap,
            };
            match cmd_oracle(name, &args)? {
                OracleOutput::Series(s) => emit(out, output.as_deref(), &s, pretty),
                OracleOutput::Text(t) => match output {
                    Some(p) => fs::write(&p, format!("{t}\n"))
                        .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display()))),
                    None => writeln!(out, "{t}").map_err(|e| CliError::input(format!("write failed: {e}"))),
                },
            }
        }
        Command::Verify {
            alphabet,
            degree,
            trials,
            seed,
            suites,
            list,
            sequential,
            inject_fault,
        } => {
            if list {
                for name in verify::suite_names() {
                    writeln!(out, "{name}").map_err(|e| CliError::input(format!("write failed: {e}")))?;
                }
                return Ok(());
            }
            cmd_verify(out, alphabet, degree, trials, seed, suites, sequential, inject_fault)
        }
    }
}

/// Parse `args` (including the program name) and run, returning the exit
/// code. Diagnostics go to `err` as a single line.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(err, "ncps: {}", line.trim_start_matches("error: "));
            return 2;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            if let CliError::Input(msg) = &e {
                let _ = writeln!(err, "ncps: {}", msg.replace('\n', " "));
            }
            e.exit_code()
        }
    }
}
