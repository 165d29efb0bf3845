//! The `fmds` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a block fails to decode (or the demo
//! differs from its expected values), 2 on usage and parse errors.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand};

use crate::codec;
use crate::demo;
use crate::error::{Error, Result};
use crate::fieldsearch;
use crate::fourier::FourierCtx;
use crate::gf::Fe;
use crate::mdscode::CodeSpec;
use crate::planner::{self, Rate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DECODE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fmds", version, about = "Fourier-matrix MDS codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fields GF(p^β) that contain a primitive n-th root of unity.
    Field {
        #[arg(long)]
        n: u64,
        /// Restrict to one characteristic.
        #[arg(long)]
        p: Option<u64>,
        /// Most fields to list when no characteristic is given.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Write a code descriptor.
    Gen {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: usize,
        /// Field characteristic; the smallest suitable extension is used.
        #[arg(long)]
        p: u64,
        /// Index of the first generator row.
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Step between generator rows, coprime to n.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Encode r-symbol blocks into n-symbol codewords.
    Encode(StreamArgs),
    /// Decode n-symbol blocks, correcting up to t errors each.
    Decode(StreamArgs),
    /// Code parameters for a rate and error capability.
    Plan {
        /// Rate as a/b, strictly between 0 and 1.
        #[arg(long, value_parser = parse_rate)]
        rate: Rate,
        #[arg(long)]
        errors: u64,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Series of codes with a fixed rate.
    ///
    /// With --p: multiples of the rate fraction over characteristic p. Without:
    /// codes of length p − 1 over prime fields GF(p) with p ≡ 1 mod the denominator.
    Series {
        #[arg(long, value_parser = parse_rate)]
        rate: Rate,
        #[arg(long)]
        p: Option<u64>,
        /// Tolerance for replacing the rate when p divides its denominator.
        #[arg(long, value_parser = parse_rate)]
        eps: Option<Rate>,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Decode the (12, 6) example over GF(13) step by step.
    Demo,
}

#[derive(Debug, clap::Args)]
struct StreamArgs {
    /// Code descriptor file.
    #[arg(long)]
    code: String,
    /// Input file (default: standard input).
    #[arg(long = "in")]
    input: Option<String>,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<String>,
}

fn parse_rate(s: &str) -> std::result::Result<Rate, String> {
    let rate: Rate = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a fraction a/b"))?;
    Ok(rate)
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Field { n, p, limit } => cmd_field(n, p, limit, stdout),
        Command::Gen { n, r, p, b, k, out } => cmd_gen(n, r, p, b, k, out.as_deref(), stdout),
        Command::Encode(a) => cmd_stream(&a, false, stdin, stdout, stderr),
        Command::Decode(a) => cmd_stream(&a, true, stdin, stdout, stderr),
        Command::Plan { rate, errors, p } => cmd_plan(rate, errors, p, stdout),
        Command::Series { rate, p, eps, count } => cmd_series(rate, p, eps, count, stdout),
        Command::Demo => cmd_demo(stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidArgument(format!("i/o: {e}"))
}

fn field_name(p: u64, beta: u32) -> String {
    if beta == 1 {
        format!("GF({p})")
    } else {
        format!("GF({p}^{beta})")
    }
}

/// (p, β) for primes below max(100, 2n) not dividing n, smallest field first.
pub fn candidate_fields(n: u64, limit: usize) -> Result<Vec<(u64, u32)>> {
    let bound = 100.max(2 * n);
    let mut found = Vec::new();
    for p in (2..bound).filter(|&p| fieldsearch::is_prime(p) && !n.is_multiple_of(p)) {
        found.push((p, fieldsearch::minimal_degree(n, p)?));
    }
    found.sort_by(|a, b| {
        let size = |(p, beta): &(u64, u32)| *beta as f64 * (*p as f64).ln();
        size(a).total_cmp(&size(b))
    });
    found.truncate(limit);
    Ok(found)
}

fn cmd_field(n: u64, p: Option<u64>, limit: usize, out: &mut dyn Write) -> Result<i32> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let list = match p {
        Some(p) => vec![(p, fieldsearch::minimal_degree(n, p)?)],
        None => candidate_fields(n, limit)?,
    };
    for (p, beta) in list {
        let tag = if beta == 1 { "  prime field" } else { "" };
        writeln!(out, "p={p} beta={beta} {}{tag}", field_name(p, beta)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_gen(n: u64, r: usize, p: u64, b: usize, k: usize, path: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let field = fieldsearch::find_field(n, p)?;
    let len = usize::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} too large")))?;
    let ctx = FourierCtx::with_default_root(field, len)?;
    let code = CodeSpec::new(ctx, r, b, k)?;
    let text = code.to_descriptor();
    match path {
        Some(path) => fs::write(path, text).map_err(io_err)?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

/// Reads whitespace-separated symbols, checking each against the field order.
fn read_symbols(code: &CodeSpec, text: &str) -> Result<Vec<Fe>> {
    let field = code.field();
    let mut symbols = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for token in line.split_whitespace() {
            let value: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: '{token}' is not a symbol", lineno + 1)))?;
            let fe = field.from_int(value).map_err(|_| {
                Error::Parse(format!(
                    "line {}: symbol {value} out of range for {field}",
                    lineno + 1
                ))
            })?;
            symbols.push(fe);
        }
    }
    Ok(symbols)
}

fn join(v: &[Fe]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.value().to_string()).collect();
    parts.join(" ")
}

fn cmd_stream(
    args: &StreamArgs,
    decoding: bool,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let descriptor = fs::read_to_string(&args.code).map_err(io_err)?;
    let code = CodeSpec::from_descriptor(&descriptor)?;
    let mut text = String::new();
    match &args.input {
        Some(path) => text = fs::read_to_string(path).map_err(io_err)?,
        None => {
            stdin.read_to_string(&mut text).map_err(io_err)?;
        }
    }
    let symbols = read_symbols(&code, &text)?;
    let block = if decoding { code.n() } else { code.r() };
    if symbols.len() % block != 0 {
        return Err(Error::Parse(format!(
            "input has {} symbols, not a multiple of the block size {block}; pad the final block",
            symbols.len()
        )));
    }

    let mut output = String::new();
    let mut failures = 0;
    for (i, chunk) in symbols.chunks_exact(block).enumerate() {
        if decoding {
            match codec::decode(&code, chunk) {
                Ok(d) => {
                    output.push_str(&join(&d.data));
                    output.push('\n');
                    writeln!(stderr, "block {i}: ok, corrected positions {:?}", d.positions).map_err(io_err)?;
                }
                Err(e) => {
                    failures += 1;
                    writeln!(stderr, "block {i}: FAIL ({e})").map_err(io_err)?;
                }
            }
        } else {
            output.push_str(&join(&codec::encode(&code, chunk)?));
            output.push('\n');
        }
    }
    match &args.out {
        Some(path) => fs::write(path, output).map_err(io_err)?,
        None => stdout.write_all(output.as_bytes()).map_err(io_err)?,
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_DECODE_FAILURE })
}

fn decimal(r: Rate) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn cmd_plan(rate: Rate, t: u64, p: Option<u64>, out: &mut dyn Write) -> Result<i32> {
    let plan = planner::plan(rate, t, p)?;
    let mut text = String::new();
    text.push_str(&format!("rate = {rate}, t = {t}\n"));
    text.push_str(&format!("min_length = {}\n", plan.min_length));
    if plan.adjusted {
        text.push_str(&format!(
            "adjusted n = {} -> {} (characteristic {} divides {})\n",
            plan.min_length,
            plan.n,
            p.unwrap_or(0),
            plan.min_length
        ));
    }
    text.push_str(&format!("code = ({}, {}, {})\n", plan.n, plan.r, plan.d));
    let achieved = plan.achieved_rate();
    text.push_str(&format!("achieved rate = {achieved} ~ {:.6}\n", decimal(achieved)));
    let fields = match p {
        Some(p) => vec![(p, fieldsearch::minimal_degree(plan.n, p)?)],
        None => candidate_fields(plan.n, 5)?,
    };
    let names: Vec<String> = fields.iter().map(|&(p, b)| field_name(p, b)).collect();
    text.push_str(&format!("fields = {}\n", names.join(", ")));
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_series(rate: Rate, p: Option<u64>, eps: Option<Rate>, count: usize, out: &mut dyn Write) -> Result<i32> {
    let mut text = String::new();
    match p {
        Some(p) => {
            let base = if rate.denom().is_multiple_of(p) {
                let eps = eps.ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "{p} divides the denominator of {rate}; give --eps to approximate the rate"
                    ))
                })?;
                let approx = planner::approx_rate(rate, eps, p)?;
                text.push_str(&format!("rate {rate} replaced by {approx}\n"));
                approx
            } else {
                rate
            };
            text.push_str("n r d field\n");
            for e in planner::series_multiples(*base.denom(), *base.numer(), p, count)? {
                text.push_str(&format!("{} {} {} {}\n", e.n, e.r, e.d, e.field_name()));
            }
        }
        None => {
            let b = *rate.denom();
            let start = (1..)
                .map(|m| m * b + 1)
                .find(|&q| (rate * (q - 1)).floor().to_integer() >= 1)
                .unwrap_or(2);
            let primes = planner::primes_congruent(1, b, start, count);
            text.push_str("n r d field\n");
            for e in planner::prime_series(rate, &primes, count)? {
                text.push_str(&format!("{} {} {} GF({})\n", e.n, e.r, e.d, e.p));
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_demo(out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let report = demo::run()?;
    out.write_all(report.transcript.as_bytes()).map_err(io_err)?;
    match report.mismatch {
        None => Ok(EXIT_OK),
        Some(m) => {
            writeln!(err, "demo mismatch: {m}").map_err(io_err)?;
            Ok(EXIT_DECODE_FAILURE)
        }
    }
}
