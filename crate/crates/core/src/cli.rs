//! The `lamplighter` command line.
//!
//! Every subcommand prints newline-terminated `key=value` records (or TSV
//! for sphere tables) and exits with 0 on success, 1 when a check ran and
//! failed, and 2 on malformed input.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::element::{GenLetter, LnParams};
use crate::finite_group::{cyclic_group, load_group_file, FiniteGroupTable};
use crate::metric;
use crate::oracle::{self, CayleyGraph};
use crate::phenomena;
use crate::tour::Side;
use crate::wreath::WreathProduct;

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "lamplighter",
    version,
    about = "Word metrics and geodesics in lamplighter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Word length by the closed-form metric, with both normal-form costs.
    Length {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        word: String,
    },
    /// A canonical geodesic, or every enumerated variant.
    Geodesic {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        word: String,
        #[arg(long)]
        enumerate: bool,
    },
    /// Sphere sizes of a ball, optionally checked against the metric.
    Ball {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        ball: BallArgs,
    },
    /// Dead-end report for the family d_m or for a given word.
    Deadend {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        m: Option<i64>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_depth: u32,
    },
    /// Seesaw report for w_m with pivot t.
    Seesaw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: i64,
        /// Swing to check; defaults to m.
        #[arg(long)]
        swing: Option<u32>,
    },
    /// The pair w_k t, w_k t^-1 and, with --search, their distance inside the ball.
    Convexity {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        witness: i64,
        #[arg(long)]
        search: bool,
    },
    /// The same operations in G wr Z for a finite group G.
    Wreath {
        /// `cyclic:<k>` or the path of a group table file.
        #[arg(long)]
        group: String,
        #[command(subcommand)]
        command: WreathCommand,
    },
}

#[derive(Debug, Args)]
struct BallArgs {
    #[arg(long)]
    radius: u32,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    spheres: bool,
}

#[derive(Debug, Subcommand)]
enum WreathCommand {
    Length {
        #[arg(long)]
        word: String,
    },
    Geodesic {
        #[arg(long)]
        word: String,
        #[arg(long)]
        enumerate: bool,
    },
    Ball {
        #[command(flatten)]
        ball: BallArgs,
    },
    /// Dead-end report for the lifted family (dead end `a` of G on [-m, m]) or a word.
    Deadend {
        #[arg(
            long,
            requires = "m",
            conflicts_with = "word",
            required_unless_present = "word"
        )]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        m: Option<i64>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_depth: u32,
    },
}

/// Malformed input; ends the command with exit status 2.
enum Failure {
    Usage(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

// Ok(false) means a check ran and failed.
type Out = Result<bool, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!(
                        "{}\n",
                        e.to_string().lines().next().unwrap_or("usage error")
                    ),
                },
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(true) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Ok(false) => Outcome {
            code: 1,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn params(n: u32) -> Result<LnParams, Failure> {
    LnParams::new(n).map_err(usage)
}

fn dispatch(command: Command, out: &mut String) -> Out {
    match command {
        Command::Length { n, word } => {
            let p = params(n)?;
            let e = p.eval(&p.parse(&word).map_err(usage)?);
            writeln!(out, "length={}", metric::word_length(&e)).unwrap();
            for side in [Side::RightFirst, Side::LeftFirst] {
                writeln!(out, "{}", metric::normal_form(&e, side)).unwrap();
            }
            Ok(true)
        }
        Command::Geodesic { n, word, enumerate } => {
            let p = params(n)?;
            let e = p.eval(&p.parse(&word).map_err(usage)?);
            if enumerate {
                for w in metric::enumerate_geodesics(&e) {
                    writeln!(out, "{w}").unwrap();
                }
            } else {
                writeln!(out, "{}", metric::emit_geodesic(&e)).unwrap();
            }
            Ok(true)
        }
        Command::Ball { n, ball } => ball_command(&params(n)?, &ball, out),
        Command::Deadend {
            n,
            m,
            word,
            max_depth,
        } => {
            let p = params(n)?;
            let (e, family) = match (m, word) {
                (Some(m), _) => (phenomena::dead_end_family_d_m(p, m).map_err(usage)?, true),
                (None, Some(w)) => (p.eval(&p.parse(&w).map_err(usage)?), false),
                (None, None) => unreachable!("clap requires one of --m, --word"),
            };
            let report = phenomena::check_dead_end(&p, &e, max_depth);
            for line in report.lines() {
                writeln!(out, "{line}").unwrap();
            }
            Ok(!family || report.is_dead_end)
        }
        Command::Seesaw { n, m, swing } => {
            let p = params(n)?;
            let e = phenomena::seesaw_family_w_n(p, m, 1, 1).map_err(usage)?;
            let k = swing.unwrap_or(m.max(1) as u32);
            if k < 1 {
                return Err(usage("--swing must be at least 1"));
            }
            let report = phenomena::check_seesaw(&p, &e, GenLetter::T, k);
            writeln!(out, "{report}").unwrap();
            // the two descending paths, cursor apart by 2l after l steps
            let (mut fwd, mut bwd) = (e.clone(), e.clone());
            for l in 1..k {
                fwd = fwd.apply(GenLetter::T);
                bwd = bwd.apply(GenLetter::T_INV);
                writeln!(
                    out,
                    "step={l} forward_length={} backward_length={} separation={}",
                    metric::word_length(&fwd),
                    metric::word_length(&bwd),
                    fwd.cursor() - bwd.cursor()
                )
                .unwrap();
            }
            Ok(report.holds)
        }
        Command::Convexity { n, witness, search } => {
            let p = params(n)?;
            let report = phenomena::convexity_witness(p, witness, search, oracle::DEFAULT_CAP)
                .map_err(usage)?;
            writeln!(out, "{report}").unwrap();
            Ok(report.violates_mac != Some(false))
        }
        Command::Wreath { group, command } => wreath_command(&load_group(&group)?, command, out),
    }
}

fn load_group(spec: &str) -> Result<WreathProduct, Failure> {
    let table: FiniteGroupTable = match spec.strip_prefix("cyclic:") {
        Some(k) => {
            let k: usize = k
                .parse()
                .map_err(|_| usage(format!("bad cyclic order {k:?}")))?;
            cyclic_group(k).map_err(usage)?
        }
        None => load_group_file(Path::new(spec)).map_err(|e| usage(format!("{spec}: {e}")))?,
    };
    Ok(WreathProduct::new(Arc::new(table)))
}

fn ball_command<G: CayleyGraph>(graph: &G, args: &BallArgs, out: &mut String) -> Out {
    let ball = oracle::enumerate_ball(graph, args.radius).map_err(usage)?;
    if args.spheres || !args.verify {
        out.push_str(&ball.sphere_tsv());
    }
    if args.verify {
        let check = oracle::check_metric(graph, &ball);
        writeln!(out, "{check}").unwrap();
        return Ok(check.passed());
    }
    Ok(true)
}

fn wreath_command(w: &WreathProduct, command: WreathCommand, out: &mut String) -> Out {
    match command {
        WreathCommand::Length { word } => {
            let e = w.eval(&w.parse_word(&word).map_err(usage)?);
            writeln!(out, "length={}", w.length(&e)).unwrap();
            writeln!(out, "element={e}").unwrap();
            Ok(true)
        }
        WreathCommand::Geodesic { word, enumerate } => {
            let e = w.eval(&w.parse_word(&word).map_err(usage)?);
            if enumerate {
                for g in w.enumerate_split_geodesics(&e).map_err(usage)? {
                    writeln!(out, "{}", w.render_word(&g)).unwrap();
                }
            } else {
                writeln!(out, "{}", w.render_word(&w.emit_geodesic(&e))).unwrap();
            }
            Ok(true)
        }
        WreathCommand::Ball { ball } => ball_command(w, &ball, out),
        WreathCommand::Deadend {
            a,
            m,
            word,
            max_depth,
        } => {
            let (e, family) = match (a, m, word) {
                (Some(a), Some(m), _) => (w.lift_dead_end_family(a, m).map_err(usage)?, true),
                (_, _, Some(text)) => (w.eval(&w.parse_word(&text).map_err(usage)?), false),
                _ => unreachable!("clap requires --a with --m, or --word"),
            };
            let report = phenomena::check_dead_end(w, &e, max_depth);
            for line in report.lines() {
                writeln!(out, "{line}").unwrap();
            }
            Ok(!family || report.is_dead_end)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("lamplighter").chain(args.iter().copied()))
    }

    #[test]
    fn length_first_line() {
        let o = call(&["length", "--n", "2", "--word", "t a T T a t"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout.lines().next(), Some("length=6"));
        assert_eq!(o.stdout.lines().count(), 3);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["length", "--n", "2", "--word", "t b"]).code, 2);
        assert_eq!(call(&["length", "--n", "1", "--word", "t"]).code, 2);
        assert_eq!(call(&["deadend", "--n", "2"]).code, 2);
        assert_eq!(call(&["deadend", "--n", "2", "--m", "0"]).code, 2);
        assert_eq!(call(&["nonsense"]).code, 2);
        assert_eq!(
            call(&["wreath", "--group", "cyclic:x", "length", "--word", "t"]).code,
            2
        );
        let o = call(&["wreath", "--group", "/nonexistent", "length", "--word", "t"]);
        assert_eq!(o.code, 2);
        assert_eq!(o.stderr.lines().count(), 1);
    }

    #[test]
    fn seesaw_failure_exits_one() {
        let o = call(&["seesaw", "--n", "2", "--m", "1", "--swing", "3"]);
        assert_eq!(o.code, 1);
        assert!(o
            .stdout
            .starts_with("length=6 pivot=t swing_checked=3 holds=false max_swing=2"));
    }
}
