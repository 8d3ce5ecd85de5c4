//! Command-line front end. Each command returns an [`Output`] holding the
//! text for standard output and standard error plus the exit status, so the
//! binary stays a thin wrapper.

use crate::error::Error;
use crate::format::{
    parse_cells, parse_points, parse_rationals, parse_script, write_facets, ParseError,
};
use crate::geom::PointSet;
use crate::gkz::{gkz_vector, GkzVector};
use crate::lexenum::{enumerate_lex, roundtrip_report, Coverage, EnumerateOptions};
use crate::rational::format_rational;
use crate::recover::recover;
use crate::subdivide::{
    lex_subdivision, lex_triangulation, regular_from_heights, validate, Side, Subdivision,
    Triangulation, Violation,
};
use clap::{Parser, Subcommand};
use std::fmt::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    InputError = 1,
    RecoveryFailure = 2,
    ValidationFailure = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            status: Status::Success,
        }
    }

    fn fail(status: Status, stderr: impl Into<String>) -> Self {
        Self {
            stdout: String::new(),
            stderr: stderr.into(),
            status,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lextri",
    version,
    about = "Lexicographic triangulations and GKZ-vectors in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the facets of the convex hull of a point set.
    Hull { points: PathBuf },
    /// Build the lexicographic triangulation of a pull/push script.
    Triangulate {
        points: PathBuf,
        script: PathBuf,
        /// Accept partial scripts and print the (possibly non-simplicial) subdivision.
        #[arg(long)]
        subdivision: bool,
    },
    /// Compute the GKZ-vector of a triangulation.
    Gkz {
        points: PathBuf,
        triangulation: PathBuf,
    },
    /// Recover a lexicographic triangulation and a script from a GKZ-vector.
    Recover { points: PathBuf, gkz: PathBuf },
    /// Enumerate lexicographic triangulations and check GKZ round trips.
    Enumerate {
        points: PathBuf,
        /// Sample this many random scripts instead of enumerating all of them.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regular subdivision induced by lifting points to the given heights.
    Lift {
        points: PathBuf,
        heights: PathBuf,
        /// Use upper instead of lower facets.
        #[arg(long)]
        upper: bool,
    },
    /// Validate a triangulation file.
    Check {
        points: PathBuf,
        triangulation: PathBuf,
    },
}

type CmdResult<T> = Result<T, Output>;

fn read(path: &Path) -> CmdResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Output::fail(Status::InputError, format!("{}: {e}\n", path.display())))
}

fn input<T>(path: &Path, r: Result<T, ParseError>) -> CmdResult<T> {
    r.map_err(|e| Output::fail(Status::InputError, format!("{}: {e}\n", path.display())))
}

fn load_points(path: &Path) -> CmdResult<PointSet> {
    input(path, parse_points(&read(path)?))
}

fn load_cells(ps: &PointSet, path: &Path) -> CmdResult<Subdivision> {
    Ok(Subdivision::from_cells(input(
        path,
        parse_cells(&read(path)?, ps.len()),
    )?))
}

fn load_vector(ps: &PointSet, path: &Path) -> CmdResult<Vec<crate::Rational>> {
    let v = input(path, parse_rationals(&read(path)?))?;
    if v.len() != ps.len() {
        return Err(Output::fail(
            Status::InputError,
            format!(
                "{}: expected {} values, found {}\n",
                path.display(),
                ps.len(),
                v.len()
            ),
        ));
    }
    Ok(v)
}

/// Every violation of `sub` as a triangulation: cover conditions plus cell
/// sizes.
fn triangulation_violations(ps: &PointSet, sub: &Subdivision) -> Vec<Violation> {
    let mut v = validate(ps, sub).violations;
    for c in sub.cells() {
        if c.len() > ps.dim() + 1 {
            v.push(Violation::NotSimplex(c.clone()));
        }
    }
    v
}

fn violation_text(v: &[Violation]) -> String {
    v.iter().map(|v| format!("{v}\n")).collect()
}

pub fn run(cli: Cli) -> Output {
    let r = match cli.command {
        Command::Hull { points } => cmd_hull(&points),
        Command::Triangulate {
            points,
            script,
            subdivision,
        } => cmd_triangulate(&points, &script, subdivision),
        Command::Gkz {
            points,
            triangulation,
        } => cmd_gkz(&points, &triangulation),
        Command::Recover { points, gkz } => cmd_recover(&points, &gkz),
        Command::Enumerate {
            points,
            limit,
            seed,
        } => cmd_enumerate(&points, limit, seed),
        Command::Lift {
            points,
            heights,
            upper,
        } => cmd_lift(&points, &heights, upper),
        Command::Check {
            points,
            triangulation,
        } => cmd_check(&points, &triangulation),
    };
    r.unwrap_or_else(|o| o)
}

pub fn cmd_hull(points: &Path) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let facets = ps
        .hull_facets(&ps.labels())
        .expect("point sets are full-dimensional");
    Ok(Output::ok(write_facets(&facets)))
}

pub fn cmd_triangulate(points: &Path, script: &Path, subdivision: bool) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let script = input(script, parse_script(&read(script)?, ps.len()))?;
    if subdivision {
        return Ok(Output::ok(lex_subdivision(&ps, &script).to_string()));
    }
    match lex_triangulation(&ps, &script) {
        Ok(t) => Ok(Output::ok(t.to_string())),
        Err(Error::PartialScript) => Err(Output::fail(
            Status::InputError,
            "script does not cover every point; use --subdivision for partial scripts\n",
        )),
        Err(e) => Err(Output::fail(Status::InputError, format!("{e}\n"))),
    }
}

pub fn cmd_gkz(points: &Path, triangulation: &Path) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let sub = load_cells(&ps, triangulation)?;
    let violations = triangulation_violations(&ps, &sub);
    if !violations.is_empty() {
        return Err(Output::fail(
            Status::ValidationFailure,
            violation_text(&violations),
        ));
    }
    let t = Triangulation::new(&ps, sub).expect("validated above");
    Ok(Output::ok(gkz_vector(&ps, &t).to_string()))
}

pub fn cmd_recover(points: &Path, gkz: &Path) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let z = GkzVector(load_vector(&ps, gkz)?);
    match recover(&ps, &z) {
        Ok(r) => Ok(Output::ok(format!("{}\n{}", r.script, r.triangulation))),
        Err(e @ Error::NegativeEntry(_)) => Err(Output::fail(Status::InputError, format!("{e}\n"))),
        Err(e) => Err(Output::fail(
            Status::RecoveryFailure,
            format!("recovery failed: {e}\n"),
        )),
    }
}

pub fn cmd_enumerate(points: &Path, limit: Option<usize>, seed: u64) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let opts = EnumerateOptions {
        limit,
        seed,
        ..Default::default()
    };
    let report = enumerate_lex(&ps, &opts)
        .map_err(|e| Output::fail(Status::InputError, format!("{e}\n")))?;
    let rt = roundtrip_report(&ps, &report);
    let mut out = String::new();
    let _ = writeln!(out, "distinct: {}", report.len());
    let _ = match report.coverage {
        Coverage::Exhaustive { scripts } => {
            writeln!(out, "coverage: exhaustive, {scripts} scripts")
        }
        Coverage::Sampled { samples, seed } => {
            writeln!(out, "coverage: sampled, {samples} scripts, seed {seed}")
        }
    };
    for (i, e) in report.triangulations.iter().enumerate() {
        let script: Vec<String> = e.witness.steps().iter().map(|s| s.to_string()).collect();
        let cells: Vec<String> = e.triangulation.cells().map(|c| c.to_string()).collect();
        let gkz: Vec<String> = e.gkz.entries().iter().map(format_rational).collect();
        let status = match rt.failures.iter().find(|f| f.index == i) {
            None => "ok".to_string(),
            Some(f) => format!("FAILED ({})", f.reason),
        };
        let _ = writeln!(out, "\ntriangulation {}", i + 1);
        let _ = writeln!(out, "script: {}", script.join(", "));
        let _ = writeln!(out, "cells: {}", cells.join(" / "));
        let _ = writeln!(out, "gkz: {}", gkz.join(" "));
        let _ = writeln!(out, "roundtrip: {status}");
    }
    let _ = writeln!(
        out,
        "\ngkz-injective: {}",
        if report.gkz_injective() { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "roundtrip: {}/{} ok",
        rt.total - rt.failures.len(),
        rt.total
    );
    let status = if rt.all_ok() {
        Status::Success
    } else {
        Status::RecoveryFailure
    };
    Ok(Output {
        stdout: out,
        stderr: String::new(),
        status,
    })
}

pub fn cmd_lift(points: &Path, heights: &Path, upper: bool) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let h = load_vector(&ps, heights)?;
    let side = if upper { Side::Upper } else { Side::Lower };
    let sub = regular_from_heights(&ps, &h, side)
        .map_err(|e| Output::fail(Status::InputError, format!("{e}\n")))?;
    Ok(Output::ok(sub.to_string()))
}

pub fn cmd_check(points: &Path, triangulation: &Path) -> CmdResult<Output> {
    let ps = load_points(points)?;
    let sub = load_cells(&ps, triangulation)?;
    let violations = triangulation_violations(&ps, &sub);
    if violations.is_empty() {
        Ok(Output::ok("valid\n".to_string()))
    } else {
        Ok(Output {
            stdout: format!("invalid\n{}", violation_text(&violations)),
            stderr: String::new(),
            status: Status::ValidationFailure,
        })
    }
}
