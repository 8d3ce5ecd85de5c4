//! Subdivisions, pulling and pushing refinements, lexicographic
//! constructions and regular subdivisions induced by height functions.

use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::rational::{format_rational, Rational};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A sorted, duplicate-free set of point labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(Vec<usize>);

impl Cell {
    pub fn new(labels: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = labels.into_iter().collect();
        Self(set.into_iter().collect())
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn without(&self, label: usize) -> Cell {
        Cell(self.0.iter().copied().filter(|&l| l != label).collect())
    }

    pub fn is_subset(&self, other: &Cell) -> bool {
        self.0.iter().all(|&l| other.contains(l))
    }
}

impl fmt::Display for Cell {
    /// 1-based labels separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

/// A set of cells over a point set. Structural equality is set equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subdivision {
    cells: BTreeSet<Cell>,
}

impl Subdivision {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Labels used by at least one cell.
    pub fn present_points(&self) -> BTreeSet<usize> {
        self.cells
            .iter()
            .flat_map(|c| c.0.iter().copied())
            .collect()
    }

    /// Every cell of `self` lies in some cell of `coarser`.
    pub fn is_refinement_of(&self, coarser: &Subdivision) -> bool {
        self.cells
            .iter()
            .all(|c| coarser.cells.iter().any(|s| c.is_subset(s)))
    }

    /// All cells have exactly `dim + 1` labels.
    pub fn is_simplicial(&self, dim: usize) -> bool {
        self.cells.iter().all(|c| c.len() == dim + 1)
    }
}

impl fmt::Display for Subdivision {
    /// Cell-list file form: a count line, then one cell per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.cells.len())?;
        for c in &self.cells {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A subdivision whose cells are all `d`-simplices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation(Subdivision);

impl Triangulation {
    /// Checks that every cell has `d + 1` affinely independent points. Does
    /// not check the covering conditions; see [`validate`].
    pub fn new(ps: &PointSet, sub: Subdivision) -> Result<Self> {
        let d = ps.dim();
        for c in sub.cells() {
            if c.len() != d + 1 || !ps.is_full_dimensional(c.labels()) {
                return Err(Error::NotSimplicial {
                    cell: c.labels().to_vec(),
                    size: c.len(),
                    expected: d + 1,
                });
            }
        }
        Ok(Self(sub))
    }

    pub fn subdivision(&self) -> &Subdivision {
        &self.0
    }

    pub fn into_subdivision(self) -> Subdivision {
        self.0
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.0.cells()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Pull,
    Push,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Pull => "pull",
            Action::Push => "push",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub label: usize,
    pub action: Action,
}

impl Step {
    pub fn pull(label: usize) -> Self {
        Self {
            label,
            action: Action::Pull,
        }
    }

    pub fn push(label: usize) -> Self {
        Self {
            label,
            action: Action::Push,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.action, self.label + 1)
    }
}

/// An ordered list of pull/push steps, each label at most once.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexScript(Vec<Step>);

impl LexScript {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for s in &steps {
            if !seen.insert(s.label) {
                return Err(Error::RepeatedLabel(s.label));
            }
        }
        Ok(Self(steps))
    }

    /// Every label in ascending order with the same action.
    pub fn uniform(n: usize, action: Action) -> Self {
        Self((0..n).map(|label| Step { label, action }).collect())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Covers labels `0..n` exactly.
    pub fn is_full(&self, n: usize) -> bool {
        self.0.len() == n && self.0.iter().all(|s| s.label < n)
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.0.iter().position(|s| s.label == label)
    }

    /// The script with `step` moved to the front (replacing any existing
    /// entry for its label).
    pub fn with_first(&self, step: Step) -> Self {
        let mut steps = vec![step];
        steps.extend(self.0.iter().copied().filter(|s| s.label != step.label));
        Self(steps)
    }

    /// Steps whose labels satisfy `keep`, in order.
    pub fn restricted(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self(self.0.iter().copied().filter(|s| keep(s.label)).collect())
    }
}

impl fmt::Display for LexScript {
    /// One `pull K` / `push K` per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn trivial(ps: &PointSet) -> Subdivision {
    Subdivision::from_cells([Cell::new(0..ps.len())])
}

/// Cones from `label` over the facets of `cell` that miss it. A simplex is
/// returned unchanged.
pub fn pull_cell(ps: &PointSet, cell: &Cell, label: usize) -> Vec<Cell> {
    if !cell.contains(label) || cell.len() == ps.dim() + 1 {
        return vec![cell.clone()];
    }
    ps.hull_facets(cell.labels())
        .expect("cells of a subdivision are full-dimensional")
        .into_iter()
        .filter(|f| !f.contains(label))
        .map(|f| Cell::new(f.vertices.into_iter().chain([label])))
        .collect()
}

/// Pushing `label` in one cell: pyramids with apex `label` are kept;
/// otherwise the cell loses `label` and gains cones over the facets of the
/// remainder visible from it.
pub fn push_cell(ps: &PointSet, cell: &Cell, label: usize) -> Vec<Cell> {
    if !cell.contains(label) || cell.len() == ps.dim() + 1 {
        return vec![cell.clone()];
    }
    let rest = cell.without(label);
    if !ps.is_full_dimensional(rest.labels()) {
        return vec![cell.clone()];
    }
    let p = ps.point(label);
    let facets = ps
        .hull_facets(rest.labels())
        .expect("remainder checked full-dimensional");
    let mut out = vec![rest];
    out.extend(
        facets
            .into_iter()
            .filter(|f| f.is_visible(p))
            .map(|f| Cell::new(f.vertices.into_iter().chain([label]))),
    );
    out
}

fn refine(s: &Subdivision, split: impl Fn(&Cell) -> Vec<Cell>) -> Subdivision {
    Subdivision::from_cells(s.cells().flat_map(split))
}

/// Pulls `label` in every cell containing it. Absent labels leave `s` as is.
pub fn pull_point(ps: &PointSet, s: &Subdivision, label: usize) -> Subdivision {
    refine(s, |c| pull_cell(ps, c, label))
}

/// Pushes `label` in every cell containing it. Absent labels leave `s` as is.
pub fn push_point(ps: &PointSet, s: &Subdivision, label: usize) -> Subdivision {
    refine(s, |c| push_cell(ps, c, label))
}

pub fn apply_step(ps: &PointSet, s: &Subdivision, step: Step) -> Subdivision {
    match step.action {
        Action::Pull => pull_point(ps, s, step.label),
        Action::Push => push_point(ps, s, step.label),
    }
}

/// Folds the script over the trivial subdivision.
pub fn lex_subdivision(ps: &PointSet, script: &LexScript) -> Subdivision {
    script
        .steps()
        .iter()
        .fold(trivial(ps), |s, &step| apply_step(ps, &s, step))
}

/// The lexicographic triangulation of a full script.
pub fn lex_triangulation(ps: &PointSet, script: &LexScript) -> Result<Triangulation> {
    for s in script.steps() {
        ps.check_label(s.label)?;
    }
    if !script.is_full(ps.len()) {
        return Err(Error::PartialScript);
    }
    let sub = lex_subdivision(ps, script);
    if let Some(c) = sub.cells().find(|c| c.len() != ps.dim() + 1) {
        return Err(Error::NotSimplicial {
            cell: c.labels().to_vec(),
            size: c.len(),
            expected: ps.dim() + 1,
        });
    }
    Triangulation::new(ps, sub)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The cell's hull is not full-dimensional.
    DegenerateCell(Cell),
    /// A triangulation cell that is not a simplex.
    NotSimplex(Cell),
    /// The two cells do not meet in a common face.
    Overlap(Cell, Cell),
    /// Cell volumes do not add up to the volume of the whole set.
    VolumeMismatch { cells: Rational, hull: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegenerateCell(c) => write!(f, "degenerate cell: {c}"),
            Violation::NotSimplex(c) => write!(f, "not a simplex: {c}"),
            Violation::Overlap(a, b) => write!(f, "cells overlap: {a} / {b}"),
            Violation::VolumeMismatch { cells, hull } => write!(
                f,
                "volume mismatch: cells sum to {}, hull has {}",
                format_rational(cells),
                format_rational(hull)
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Certifies that `s` subdivides `conv(V)`: full-dimensional cells that
/// pairwise meet in common faces and whose volumes sum to the hull volume.
pub fn validate(ps: &PointSet, s: &Subdivision) -> ValidationReport {
    let mut violations = Vec::new();
    let cells: Vec<&Cell> = s.cells().collect();
    let mut good = Vec::new();
    for &c in &cells {
        if ps.is_full_dimensional(c.labels()) {
            good.push(c);
        } else {
            violations.push(Violation::DegenerateCell(c.clone()));
        }
    }
    for (i, a) in good.iter().enumerate() {
        for b in &good[i + 1..] {
            if !ps.cells_meet_properly(a.labels(), b.labels()) {
                violations.push(Violation::Overlap((*a).clone(), (*b).clone()));
            }
        }
    }
    let sum = cells
        .iter()
        .fold(Rational::zero(), |acc, c| acc + ps.volume(c.labels()));
    let hull = ps.volume(&ps.labels());
    if sum != hull {
        violations.push(Violation::VolumeMismatch { cells: sum, hull });
    }
    ValidationReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Projects the lower (or upper) facets of the lifted set
/// `{(v_i, h_i)}` back down. A lift with affinely dependent heights has no
/// such facets and yields the trivial subdivision.
pub fn regular_from_heights(
    ps: &PointSet,
    heights: &[Rational],
    side: Side,
) -> Result<Subdivision> {
    if heights.len() != ps.len() {
        return Err(Error::LengthMismatch {
            expected: ps.len(),
            found: heights.len(),
        });
    }
    let lifted: Vec<Vec<Rational>> = ps
        .points()
        .iter()
        .zip(heights)
        .map(|(p, h)| p.iter().cloned().chain([h.clone()]).collect())
        .collect();
    let lifted = match PointSet::new(lifted) {
        Ok(l) => l,
        Err(Error::NotFullDimensional { .. }) => return Ok(trivial(ps)),
        Err(e) => return Err(e),
    };
    let d = ps.dim();
    let facets = lifted.hull_facets(&lifted.labels())?;
    Ok(Subdivision::from_cells(
        facets
            .into_iter()
            .filter(|f| match side {
                Side::Lower => f.hyperplane.normal[d].is_negative(),
                Side::Upper => f.hyperplane.normal[d].is_positive(),
            })
            .map(|f| Cell::new(f.vertices)),
    ))
}

/// Maximum number of times the height scale is doubled in [`lex_as_lift`].
pub const MAX_LIFT_DOUBLINGS: u32 = 60;

/// Heights `h_i = ±M^{-r(i)}` (`+` for pushed, `-` for pulled, `r` the
/// 1-based script position) inducing the lexicographic subdivision of a full
/// script as a lower hull. `M` starts at `n (1 + max |coordinate|)^2` and is
/// doubled until the induced subdivision matches.
pub fn lex_as_lift(ps: &PointSet, script: &LexScript) -> Result<Vec<Rational>> {
    for s in script.steps() {
        ps.check_label(s.label)?;
    }
    if !script.is_full(ps.len()) {
        return Err(Error::PartialScript);
    }
    let target = lex_subdivision(ps, script);
    let max_coord = ps
        .points()
        .iter()
        .flatten()
        .map(|x| x.abs().ceil().to_integer())
        .max()
        .unwrap_or_else(BigInt::zero);
    let base = BigInt::from(ps.len()) * (BigInt::one() + &max_coord).pow(2);
    let mut scale = Rational::from_integer(base);
    for _ in 0..=MAX_LIFT_DOUBLINGS {
        let mut heights = vec![Rational::zero(); ps.len()];
        let mut mag = Rational::one();
        for s in script.steps() {
            mag /= &scale;
            heights[s.label] = match s.action {
                Action::Push => mag.clone(),
                Action::Pull => -mag.clone(),
            };
        }
        if regular_from_heights(ps, &heights, Side::Lower)? == target {
            return Ok(heights);
        }
        scale *= Rational::from_integer(BigInt::from(2));
    }
    Err(Error::NoConvergence {
        doublings: MAX_LIFT_DOUBLINGS,
    })
}
