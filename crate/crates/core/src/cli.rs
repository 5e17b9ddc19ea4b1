//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 on a failed check or a domain error, 2 on a usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{MultiPoly, Rat, RatFun, Var};
use crate::binomials::binomial;
use crate::closedforms::{closed_leaf, LeafFormulaInput};
use crate::error::{Error, Result};
use crate::partitions::{critical_data, induced_decomposition, render_decomposition, Cell, Partition};
use crate::stemleaf::{leaf, stem};
use crate::table::{table_rows, write_table, ShapeFilter, TableFormat};
use crate::verify::{run_suite, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "jackleaf", version, about = "Jack binomial coefficients, stems and leaves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The binomial coefficient b^λ_μ.
    Binomial(PairArgs),
    /// The stem K^λ_μ.
    Stem(PairArgs),
    /// The leaf L_{λ/μ}.
    Leaf(PairArgs),
    /// Label the boxes of λ relative to μ.
    Decompose {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Do not mark the critical box with `*`.
        #[arg(long)]
        no_critical: bool,
    },
    /// The closed-form two-row leaf.
    ClosedForm {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Critical hook `g+l*r`; defaults to 0.
        #[arg(long, value_parser = parse_hook, conflicts_with = "y_symbolic")]
        y: Option<MultiPoly>,
        /// Keep y as an indeterminate.
        #[arg(long)]
        y_symbolic: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        u_max: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Stem and leaf of every pair up to a size bound.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_parser = parse_filter, default_value = "all")]
        shape: ShapeFilter,
        #[arg(long, value_enum, default_value_t = TableFmt::Csv)]
        format: TableFmt,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Empty for the zero partition.
    #[arg(long, value_parser = parse_partition, default_value = "")]
    mu: Partition,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    pair: Pair,
    /// Evaluate at `r=<rational>`.
    #[arg(long, value_parser = parse_eval)]
    eval: Option<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFmt {
    Csv,
    Json,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_filter(s: &str) -> std::result::Result<ShapeFilter, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_eval(s: &str) -> std::result::Result<Rat, String> {
    let v = s.strip_prefix("r=").ok_or_else(|| format!("expected r=<rational>, got {s:?}"))?;
    v.trim().parse().map_err(|e: Error| e.to_string())
}

/// `g+l*r` with nonnegative integers; either summand may be left out and
/// `1*r` may be written `r`.
pub fn parse_hook(s: &str) -> std::result::Result<MultiPoly, String> {
    let bad = || format!("expected g+l*r with nonnegative integers, got {s:?}");
    let (mut g, mut l) = (0i64, 0i64);
    for term in s.split('+').map(str::trim) {
        if let Some(coef) = term.strip_suffix('r') {
            let coef = coef.trim().trim_end_matches('*').trim();
            l += if coef.is_empty() { 1 } else { coef.parse::<u32>().map_err(|_| bad())? as i64 };
        } else {
            g += term.parse::<u32>().map_err(|_| bad())? as i64;
        }
    }
    Ok(MultiPoly::linear_r(g, l))
}

#[derive(Serialize)]
struct Decomposition {
    lambda: Partition,
    mu: Partition,
    rows: Vec<String>,
    critical_box: Option<Cell>,
    y: MultiPoly,
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string(v).map_err(|e| Error::Io(e.into()))
}

fn ratfun_output(q: &RatFun, eval: Option<&Rat>) -> Result<String> {
    match eval {
        Some(r) => to_json(&q.eval(r)?.to_string()),
        None => to_json(q),
    }
}

/// Output and whether it records a failed check.
fn dispatch(cmd: Command) -> Result<(String, bool)> {
    let out = match cmd {
        Command::Binomial(a) => ratfun_output(&binomial(&a.pair.lambda, &a.pair.mu), a.eval.as_ref())?,
        Command::Stem(a) => ratfun_output(&stem(&a.pair.lambda, &a.pair.mu)?, a.eval.as_ref())?,
        Command::Leaf(a) => {
            let mut ctx = crate::binomials::BinomialContext::new();
            let l = leaf(&a.pair.lambda, &a.pair.mu, &mut ctx)?;
            match (a.eval.as_ref(), l.as_polynomial()) {
                (None, Some(p)) => to_json(&MultiPoly::from_unipoly(p))?,
                (e, _) => ratfun_output(&l, e)?,
            }
        }
        Command::Decompose { pair, format, no_critical } => match format {
            Format::Ascii => {
                let s = render_decomposition(&pair.lambda, &pair.mu, !no_critical)?;
                s.trim_end_matches('\n').to_string()
            }
            Format::Json => {
                let labels = induced_decomposition(&pair.lambda, &pair.mu)?;
                let crit = critical_data(&pair.lambda, &pair.mu)?;
                to_json(&Decomposition {
                    lambda: pair.lambda,
                    mu: pair.mu,
                    rows: labels.row_strings(),
                    critical_box: crit.xstar,
                    y: crit.y,
                })?
            }
        },
        Command::ClosedForm { u, d, m, y, y_symbolic } => {
            let y = if y_symbolic { MultiPoly::var(Var::Y) } else { y.unwrap_or_else(MultiPoly::zero) };
            to_json(&closed_leaf(&LeafFormulaInput::new(u, d, m, y))?)?
        }
        Command::Verify { suite, u_max, d_max, m_max, n_max, format, report } => {
            let rep = run_suite(&suite, VerifyOptions { u_max, d_max, m_max, n_max })?;
            let json = serde_json::to_string_pretty(&rep).map_err(|e| Error::Io(e.into()))?;
            if let Some(path) = report {
                std::fs::write(path, format!("{json}\n"))?;
            }
            let out = match format {
                Format::Json => json,
                Format::Ascii => rep.to_string().trim_end().to_string(),
            };
            return Ok((out, !rep.all_pass()));
        }
        Command::Table { n_max, shape, format, output } => {
            let rows = table_rows(n_max, shape)?;
            let fmt = match format {
                TableFmt::Csv => TableFormat::Csv,
                TableFmt::Json => TableFormat::Json,
            };
            let mut buf = Vec::new();
            write_table(&rows, fmt, &mut buf)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, buf)?;
                    format!("wrote {} rows to {}", rows.len(), path.display())
                }
                None => String::from_utf8(buf).expect("table output is UTF-8").trim_end().to_string(),
            }
        }
    };
    Ok((out, false))
}

/// Parse `args` (program name first) and run the subcommand.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((out, failed)) => {
            let _ = writeln!(stdout, "{out}");
            i32::from(failed)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_syntax() {
        assert_eq!(parse_hook("1+r").unwrap(), MultiPoly::linear_r(1, 1));
        assert_eq!(parse_hook("2+3*r").unwrap(), MultiPoly::linear_r(2, 3));
        assert_eq!(parse_hook("4").unwrap(), MultiPoly::linear_r(4, 0));
        assert_eq!(parse_hook("2*r").unwrap(), MultiPoly::linear_r(0, 2));
        assert!(parse_hook("1-r").is_err());
        assert!(parse_hook("y").is_err());
    }
}
