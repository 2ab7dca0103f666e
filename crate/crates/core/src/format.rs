//! Plain-text formats.
//!
//! * Instances: one tuple per line, whitespace-separated tokens.
//! * Colorings: `index color` per colored tuple, indices 1-based; two colors
//!   are written `red`/`blue`, otherwise color numbers `0..c`.
//! * Hypergraphs: a header `n m`, then `m` edge lines of 1-based vertex ids;
//!   `-` stands for an empty edge.
//! * Portfolios: `team p1 p2 p3` per line.
//!
//! Everywhere, blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::MultiHypergraph;
use crate::scheduler::{Portfolio, Schedule};
use crate::tuples::{normalize, Alphabet, KTuple, TupleSet};

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn with_line(lines: &[usize], err: Error) -> Error {
    let at = |index: usize| lines.get(index).copied().unwrap_or(0);
    match err {
        Error::NonUniformTupleSize { index, expected, found } => Error::Parse {
            line: at(index),
            message: format!("expected {expected} tokens, found {found}"),
        },
        Error::RepeatedElementInTuple { index, token } => Error::Parse {
            line: at(index),
            message: format!("token `{token}` repeated"),
        },
        other => other,
    }
}

pub fn parse_instance(text: &str) -> Result<(TupleSet, Alphabet)> {
    let (lines, rows): (Vec<usize>, Vec<Vec<&str>>) = content_lines(text)
        .map(|(n, l)| (n, l.split_whitespace().collect()))
        .unzip();
    normalize(&rows).map_err(|e| with_line(&lines, e))
}

/// Tuples with their original tokens, elements in normalized-id order.
pub fn render_instance(ts: &TupleSet, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    for t in ts.iter() {
        let tokens: Vec<&str> = t.iter().map(|&e| alphabet.token(e)).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

pub fn color_name(color: Color, c: u32) -> String {
    match (c, color) {
        (2, 0) => "red".to_owned(),
        (2, 1) => "blue".to_owned(),
        _ => color.to_string(),
    }
}

pub fn parse_color_name(name: &str, c: u32) -> Option<Color> {
    match (c, name) {
        (2, "red") => Some(0),
        (2, "blue") => Some(1),
        _ => name.parse().ok().filter(|&x| x < c),
    }
}

pub fn render_coloring(col: &Coloring) -> String {
    let mut out = String::new();
    for (i, a) in col.assignment().iter().enumerate() {
        if let Some(color) = a {
            writeln!(out, "{} {}", i + 1, color_name(*color, col.colors())).unwrap();
        }
    }
    out
}

/// Reads [`render_coloring`] output back for an instance of `n` tuples.
pub fn parse_coloring(text: &str, n: usize, c: u32) -> Result<Coloring> {
    let mut assignment = vec![None; n];
    for (line, l) in content_lines(text) {
        let err = |message: String| Error::Parse { line, message };
        let mut parts = l.split_whitespace();
        let (Some(index), Some(color), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err("expected `index color`".into()));
        };
        let index: usize = index.parse().map_err(|_| err(format!("bad index `{index}`")))?;
        if index == 0 || index > n {
            return Err(err(format!("index {index} out of range")));
        }
        let color = parse_color_name(color, c).ok_or_else(|| err(format!("bad color `{color}`")))?;
        assignment[index - 1] = Some(color);
    }
    Coloring::new(c, assignment)
}

pub fn parse_hypergraph(text: &str) -> Result<MultiHypergraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let header: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line,
            message: "header must be `n m`".into(),
        })?;
    let [n, m] = header[..] else {
        return Err(Error::Parse {
            line,
            message: "header must be `n m`".into(),
        });
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than {m} edges"),
            });
        }
        if l == "-" {
            edges.push(Vec::new());
            continue;
        }
        let edge = l
            .split_whitespace()
            .map(|v| match v.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::Parse {
                    line,
                    message: format!("bad vertex `{v}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    MultiHypergraph::new(n, edges)
}

pub fn render_hypergraph(h: &MultiHypergraph) -> String {
    let mut out = format!("{} {}\n", h.n_vertices(), h.n_edges());
    for edge in h.edges() {
        if edge.is_empty() {
            out.push('-');
        } else {
            let ids: Vec<String> = edge.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&ids.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Portfolios with problem labels normalized in first-occurrence order.
pub fn parse_portfolios(text: &str) -> Result<(Vec<Portfolio>, Alphabet)> {
    let mut teams = Vec::new();
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let mut parts = l.split_whitespace();
        let team = parts.next().expect("non-empty line");
        let problems: Vec<&str> = parts.collect();
        if problems.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("team `{team}` lists {} problems, expected 3", problems.len()),
            });
        }
        teams.push(team.to_owned());
        lines.push(line);
        rows.push(problems);
    }
    if rows.is_empty() {
        return Ok((Vec::new(), Alphabet::default()));
    }
    let (ts, alphabet) = normalize(&rows).map_err(|e| with_line(&lines, e))?;
    let portfolios = teams
        .into_iter()
        .zip(ts.iter())
        .map(|(team, t)| {
            Ok(Portfolio {
                team,
                problems: KTuple::new(t.to_vec())?,
            })
        })
        .collect::<Result<_>>()?;
    Ok((portfolios, alphabet))
}

pub fn render_schedule(schedule: &Schedule, portfolios: &[Portfolio], alphabet: &Alphabet) -> String {
    let mut out = String::new();
    for (gi, group) in schedule.groups.iter().enumerate() {
        let names: Vec<&str> = group.teams.iter().map(|&t| portfolios[t].team.as_str()).collect();
        writeln!(out, "group {}: {}", gi + 1, names.join(" ")).unwrap();
        for (r, round) in group.rounds.iter().enumerate() {
            let entries: Vec<String> = names
                .iter()
                .zip(round)
                .map(|(team, &p)| format!("{team}={}", alphabet.token(p)))
                .collect();
            writeln!(out, "  round {}: {}", r + 1, entries.join(" ")).unwrap();
        }
    }
    out
}
