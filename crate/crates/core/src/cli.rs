//! The `tci` command line.
//!
//! Exit status 0 means success (or "is an identity", "certificate valid"),
//! 1 means a negative verdict and 2 means the input was rejected.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::chident::{ch, ch_recursive, f_kd};
use crate::error::{Result, TciError};
use crate::interp::{encode, interpret_perm, reduce_to_basic, verify_certificate, InterpContext};
use crate::json;
use crate::matexval::{is_identity, is_identity_multilinear};
use crate::symgroup::{parse_cycles, parse_index_list, split_cycle_left, split_cycles};

#[derive(Parser, Debug)]
#[command(name = "tci", version, about = "Tensor trace identities for matrices, computed exactly")]
pub struct Cli {
    /// Emit machine-readable JSON for textual results.
    #[arg(long, global = true)]
    json: bool,
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tensor Cayley-Hamilton element of degree K for D x D matrices.
    Ch {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Keep tr(1) symbolic instead of setting it to D.
        #[arg(long)]
        formal_lambda: bool,
        /// Build it by iterated partial traces.
        #[arg(long)]
        recursive: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Multilinear relation F_{K,D}.
    Fkd {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Exit 0 iff the element in FILE vanishes on D x D matrices.
    Verify {
        #[arg(long)]
        d: usize,
        file: PathBuf,
        /// Decide through the permutation encoding (multilinear input only).
        #[arg(long)]
        multilinear: bool,
    },
    /// Interpretation of a permutation of S_{N+K}.
    Interpret {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        out: Output,
    },
    /// Group algebra element encoding a multilinear element.
    Encode {
        file: PathBuf,
        /// Number of variables; defaults to the largest variable index present.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Split a permutation of S_M relative to the subset A.
    Split {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        perm: String,
        #[arg(long = "A")]
        a: String,
        /// Put the S_A factor on the left.
        #[arg(long)]
        left: bool,
    },
    /// Partial trace over the last tensor slot.
    Ptrace {
        file: PathBuf,
        /// Set tr(1) to D afterwards.
        #[arg(long)]
        specialize: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Certificate reducing interpret(perm * A(C)) to a basic relation.
    Reduce {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        /// Number of variables among the M points (the last K).
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        perm: String,
        #[arg(long = "C")]
        c: String,
        #[command(flatten)]
        out: Output,
    },
    /// Exit 0 iff the certificate replays to its target.
    CheckCert { file: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| TciError::Parse(format!("{}: {e}", path.display())))
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| TciError::Parse(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn verdict(cli: &Cli, key: &str, value: bool) -> i32 {
    if cli.json {
        println!("{{\"{key}\":{value}}}");
    } else {
        println!("{}", if value { key.replace('_', " ") } else { format!("not {}", key.replace('_', " ")) });
    }
    if value {
        0
    } else {
        1
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Ch {
            d,
            k,
            formal_lambda,
            recursive,
            out,
        } => {
            let e = match (recursive, formal_lambda) {
                (true, true) => {
                    return Err(TciError::Range(
                        "--recursive specializes tr(1) = d and cannot be combined with --formal-lambda".into(),
                    ))
                }
                (true, false) => ch_recursive(*k, *d)?,
                (false, true) => ch(*k, *d)?,
                (false, false) => ch(*k, *d)?.specialize_lambda(*d as i64),
            };
            emit(out, &json::element_to_string(&e, pretty))?;
        }
        Command::Fkd { d, k, out } => emit(out, &json::element_to_string(&f_kd(*k, *d)?, pretty))?,
        Command::Verify { d, file, multilinear } => {
            if *d == 0 {
                return Err(TciError::Range("d must be at least 1".into()));
            }
            let e = json::element_from_str(&read(file)?)?;
            let ok = if *multilinear {
                is_identity_multilinear(&e, *d)?
            } else {
                is_identity(&e, *d)?
            };
            return Ok(verdict(cli, "identity", ok));
        }
        Command::Interpret { n, k, perm, out } => {
            let ctx = InterpContext::new(*n, *k)?;
            let p = parse_cycles(n + k, perm)?;
            emit(out, &json::element_to_string(&interpret_perm(&p, &ctx)?, pretty))?;
        }
        Command::Encode { file, k, out } => {
            let e = json::element_from_str(&read(file)?)?;
            let k = k.unwrap_or_else(|| e.variables().into_iter().max().unwrap_or(0) as usize);
            let g = encode(&e, &InterpContext::new(e.arity(), k)?)?;
            emit(out, &json::group_algebra_to_string(&g, pretty))?;
        }
        Command::Split { m, perm, a, left } => {
            let p = parse_cycles(*m, perm)?;
            let a = parse_index_list(a, *m)?;
            let s = if *left { split_cycle_left(&p, &a) } else { split_cycles(&p, &a) };
            if cli.json {
                let factors: Vec<String> = s.display_factors().split(" | ").map(str::to_owned).collect();
                let doc = serde_json::json!({ "factors": factors, "side": if *left { "left" } else { "right" } });
                println!("{}", if pretty { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) }.expect("json"));
            } else {
                println!("{}", s.display_factors());
            }
        }
        Command::Ptrace { file, specialize, out } => {
            let mut e = json::element_from_str(&read(file)?)?.partial_trace()?;
            if let Some(d) = specialize {
                e = e.specialize_lambda(*d);
            }
            emit(out, &json::element_to_string(&e, pretty))?;
        }
        Command::Reduce { d, m, k, perm, c, out } => {
            if k > m {
                return Err(TciError::Range(format!("k = {k} exceeds m = {m}")));
            }
            let ctx = InterpContext::new(m - k, *k)?;
            let p = parse_cycles(*m, perm)?;
            let c = parse_index_list(c, *m)?;
            let cert = reduce_to_basic(&p, &c, &ctx, *d)?;
            emit(out, &json::certificate_to_string(&cert, pretty))?;
        }
        Command::CheckCert { file } => {
            let cert = json::certificate_from_str(&read(file)?)?;
            return Ok(verdict(cli, "certificate_valid", verify_certificate(&cert)?));
        }
    }
    Ok(0)
}

/// Runs the command line on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            2
        }
    }
}
