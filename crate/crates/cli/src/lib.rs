//! The `nicecolor` command line, callable in-process through [`run`].
//!
//! Exit codes: 0 on success (or a colorable/feasible instance), 1 when the
//! answer is negative, 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use nicecolor::format::{
    parse_hypergraph, parse_instance, parse_portfolios, render_coloring, render_hypergraph, render_instance,
    render_schedule,
};
use nicecolor::generate::{random_rows, render_rows, rng, special_rows};
use nicecolor::predicates::is_c_fair;
use nicecolor::scheduler::{make_schedule, validate_schedule};
use nicecolor::{from_hypergraph, is_special, partialize, solve, to_hypergraph, Alphabet};

#[derive(Debug, Parser)]
#[command(name = "nicecolor", version, about = "Nice colorings of tuple multisets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report fairness, the special pattern (triples only) and colorability.
    Check {
        #[arg(long = "colors", short = 'c', default_value_t = 2)]
        colors: u32,
        /// Only report whether every element is avoided by enough tuples.
        #[arg(long)]
        fair_only: bool,
        /// Instance file, `-` for stdin.
        file: PathBuf,
    },
    /// Print a nice coloring as `index color` lines, or `NONE`.
    Color {
        #[arg(long = "colors", short = 'c', default_value_t = 2)]
        colors: u32,
        /// Color at most k + 1 tuples per color and leave the rest uncolored.
        #[arg(long)]
        partial: bool,
        file: PathBuf,
    },
    /// Split teams into groups of 3 and 4 and schedule three rounds per group.
    Schedule {
        /// Portfolio file: `team p1 p2 p3` per line.
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Convert between the tuple and hypergraph formats.
    Hypergraph {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Tuple size when converting from a hypergraph.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Emit a seeded random instance, or a special one with `--special`.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 9)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        special: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    /// Tuples to hypergraph.
    To,
    /// Hypergraph to tuples.
    From,
}

/// Failure that ends a command with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, InputError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(InputError(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, InputError> {
    match command {
        Command::Check {
            colors,
            fair_only,
            file,
        } => {
            if colors == 0 {
                return Err(InputError("--colors must be at least 1".into()));
            }
            let (ts, _) = parse_instance(&read_input(&file)?)?;
            let fair = is_c_fair(&ts, colors as usize);
            let mut words = vec![if fair { "FAIR" } else { "NOT-FAIR" }];
            if fair_only {
                writeln!(out, "{}", words[0])?;
                return Ok(if fair { 0 } else { 1 });
            }
            if ts.k() == 3 {
                words.push(if is_special(&ts)? { "SPECIAL" } else { "NOT-SPECIAL" });
            }
            let colorable = solve(&ts, colors)?.is_some();
            words.push(if colorable { "COLORABLE" } else { "NOT-COLORABLE" });
            writeln!(out, "{}", words.join(" "))?;
            Ok(if colorable { 0 } else { 1 })
        }
        Command::Color { colors, partial, file } => {
            if colors == 0 {
                return Err(InputError("--colors must be at least 1".into()));
            }
            let (ts, _) = parse_instance(&read_input(&file)?)?;
            match solve(&ts, colors)? {
                Some(col) => {
                    let col = if partial { partialize(&ts, &col, &[])? } else { col };
                    write!(out, "{}", render_coloring(&col))?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "NONE")?;
                    Ok(1)
                }
            }
        }
        Command::Schedule { file, json } => {
            let (portfolios, alphabet) = parse_portfolios(&read_input(&file)?)?;
            let schedule = match make_schedule(&portfolios) {
                Ok(s) => s,
                Err(reason) => {
                    writeln!(out, "INFEASIBLE: {reason}")?;
                    return Ok(1);
                }
            };
            debug_assert_eq!(validate_schedule(&portfolios, &schedule), Ok(()));
            if json {
                let doc = schedule.document(&portfolios, |p| alphabet.token(p).to_owned());
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write!(out, "{}", render_schedule(&schedule, &portfolios, &alphabet))?;
            }
            Ok(0)
        }
        Command::Hypergraph { direction, file, k } => {
            let text = read_input(&file)?;
            match direction {
                Direction::To => {
                    let (ts, _) = parse_instance(&text)?;
                    write!(out, "{}", render_hypergraph(&to_hypergraph(&ts)))?;
                }
                Direction::From => {
                    let ts = from_hypergraph(&parse_hypergraph(&text)?, k)?;
                    write!(out, "{}", render_instance(&ts, &Alphabet::numeric(ts.m())))?;
                }
            }
            Ok(0)
        }
        Command::Gen { n, m, k, seed, special } => {
            let mut rng = rng(seed);
            let rows = if special {
                if k != 3 || n < 4 || m < 5 {
                    return Err(InputError("--special needs k = 3, n >= 4 and m >= 5".into()));
                }
                special_rows(&mut rng, n, m)
            } else {
                if k == 0 || k > m {
                    return Err(InputError(format!("cannot draw {k}-tuples from {m} elements")));
                }
                random_rows(&mut rng, n, m, k)
            };
            write!(out, "{}", render_rows(&rows))?;
            Ok(0)
        }
    }
}
