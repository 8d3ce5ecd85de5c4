//! Plain-text file formats: point sets, cell lists, scripts and rational
//! vectors. All indices in files are 1-based. Lines whose first non-blank
//! character is `#` are comments; blank lines are ignored.
//!
//! Parsers never panic on malformed input.

use crate::error::Error;
use crate::geom::{Facet, PointSet};
use crate::rational::{parse_rational, Rational};
use crate::subdivide::{Action, Cell, LexScript, Step};
use std::collections::BTreeSet;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{message}", if *.line > 0 { format!("line {}: ", .line) } else { String::new() })]
pub struct ParseError {
    /// 1-based line number, 0 when the problem concerns the whole file.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::at(line, format!("invalid {what} {tok:?}")))
}

fn parse_index(line: usize, tok: &str, n: usize) -> Result<usize, ParseError> {
    let k = parse_count(line, tok, "point index")?;
    if k == 0 || k > n {
        return Err(ParseError::at(
            line,
            format!("point index {k} out of range 1..={n}"),
        ));
    }
    Ok(k - 1)
}

/// Header `d n`, then `n` lines of `d` rationals.
pub fn parse_points(text: &str) -> Result<PointSet, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::at(0, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [d, n] = toks[..] else {
        return Err(ParseError::at(hline, "header must be \"d n\""));
    };
    let d = parse_count(hline, d, "dimension")?;
    let n = parse_count(hline, n, "point count")?;
    if d == 0 || n == 0 {
        return Err(ParseError::at(
            hline,
            "dimension and point count must be positive",
        ));
    }
    let mut points = Vec::new();
    for (line, row) in lines {
        if points.len() == n {
            return Err(ParseError::at(line, format!("more than {n} points")));
        }
        let coords = row
            .split_whitespace()
            .map(|t| {
                parse_rational(t)
                    .ok_or_else(|| ParseError::at(line, format!("invalid rational {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d {
            return Err(ParseError::at(
                line,
                format!("expected {d} coordinates, found {}", coords.len()),
            ));
        }
        points.push(coords);
    }
    if points.len() != n {
        return Err(ParseError::at(
            0,
            format!("expected {n} points, found {}", points.len()),
        ));
    }
    PointSet::new(points).map_err(|e| ParseError::at(0, e.to_string()))
}

/// Header `m`, then `m` lines of distinct 1-based indices. Cell sizes are
/// not checked here.
pub fn parse_cells(text: &str, n: usize) -> Result<Vec<Cell>, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::at(0, "missing header"))?;
    let m = parse_count(hline, header, "cell count")?;
    let mut cells = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, row) in lines {
        if cells.len() == m {
            return Err(ParseError::at(line, format!("more than {m} cells")));
        }
        let mut labels = BTreeSet::new();
        for tok in row.split_whitespace() {
            let k = parse_index(line, tok, n)?;
            if !labels.insert(k) {
                return Err(ParseError::at(line, format!("index {} repeated", k + 1)));
            }
        }
        let cell = Cell::new(labels);
        if !seen.insert(cell.clone()) {
            return Err(ParseError::at(line, "cell listed twice"));
        }
        cells.push(cell);
    }
    if cells.len() != m {
        return Err(ParseError::at(
            0,
            format!("expected {m} cells, found {}", cells.len()),
        ));
    }
    Ok(cells)
}

/// One `pull K` or `push K` per line.
pub fn parse_script(text: &str, n: usize) -> Result<LexScript, ParseError> {
    let mut steps = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, row) in data_lines(text) {
        let toks: Vec<&str> = row.split_whitespace().collect();
        let [verb, k] = toks[..] else {
            return Err(ParseError::at(line, "expected \"pull K\" or \"push K\""));
        };
        let action = match verb {
            "pull" => Action::Pull,
            "push" => Action::Push,
            _ => return Err(ParseError::at(line, format!("unknown action {verb:?}"))),
        };
        let label = parse_index(line, k, n)?;
        if !seen.insert(label) {
            return Err(ParseError::at(
                line,
                format!("point {} appears twice", label + 1),
            ));
        }
        steps.push(Step { label, action });
    }
    LexScript::new(steps).map_err(|e: Error| ParseError::at(0, e.to_string()))
}

/// Whitespace- or newline-separated rationals.
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, ParseError> {
    data_lines(text)
        .flat_map(|(line, row)| row.split_whitespace().map(move |t| (line, t)))
        .map(|(line, t)| {
            parse_rational(t).ok_or_else(|| ParseError::at(line, format!("invalid rational {t:?}")))
        })
        .collect()
}

/// `i j ... : a1 ... ad | alpha`, one facet per line.
pub fn write_facets(facets: &[Facet]) -> String {
    let mut out = String::new();
    for f in facets {
        let labels: Vec<String> = f.vertices.iter().map(|l| (l + 1).to_string()).collect();
        let normal: Vec<String> = f.hyperplane.normal.iter().map(|a| a.to_string()).collect();
        let _ = writeln!(
            out,
            "{} : {} | {}",
            labels.join(" "),
            normal.join(" "),
            f.hyperplane.offset
        );
    }
    out
}
