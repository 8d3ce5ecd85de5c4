//! Exact geometric kernel: point sets, orientation, volumes, hull facets,
//! visibility, shadows and face tests.
//!
//! Points are addressed by 0-based labels into a [`PointSet`]. Every
//! predicate is exact; nothing here rounds.

use crate::error::{Error, Result};
use crate::linalg::{self, canonical_up_to_sign, kernel_line, primitive};
use crate::lp::{lp_feasible_strict, Row};
use crate::rational::{abs, dot, Rational};
use itertools::Itertools;
use num::{BigInt, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

/// A finite, full-dimensional set of distinct points in `R^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    /// Builds a point set, rejecting mixed dimensions, duplicates and
    /// configurations whose affine hull is not all of `R^d`.
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointSet)?.len();
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                index,
                expected: dim,
                found: p.len(),
            });
        }
        let mut seen: BTreeMap<&[Rational], usize> = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p.as_slice()) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        let found = affine_dimension(&points);
        if dim == 0 || found != dim {
            return Err(Error::NotFullDimensional {
                expected: dim,
                found,
            });
        }
        Ok(Self { dim, points })
    }

    /// Convenience constructor for integer coordinates.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&x| crate::rational::int(x))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, label: usize) -> &[Rational] {
        &self.points[label]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn labels(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    pub(crate) fn check_label(&self, label: usize) -> Result<()> {
        if label < self.len() {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange {
                label,
                n: self.len(),
            })
        }
    }

    fn gather(&self, labels: &[usize]) -> Vec<&[Rational]> {
        labels.iter().map(|&l| self.point(l)).collect()
    }

    /// Dimension of the affine span of `labels`; `-1` for the empty set.
    pub fn subset_dimension(&self, labels: &[usize]) -> isize {
        if labels.is_empty() {
            -1
        } else {
            affine_dimension(&self.gather(labels)) as isize
        }
    }

    pub fn is_full_dimensional(&self, labels: &[usize]) -> bool {
        self.subset_dimension(labels) == self.dim as isize
    }

    /// Facets of `conv(labels)`, sorted by vertex labels.
    pub fn hull_facets(&self, labels: &[usize]) -> Result<Vec<Facet>> {
        let found = self.subset_dimension(labels);
        if found != self.dim as isize {
            return Err(Error::DegenerateSet {
                expected: self.dim,
                found,
            });
        }
        let pts = self.gather(labels);
        let mut facets: Vec<Facet> = facets_of(&pts, self.dim)
            .into_iter()
            .map(|(idx, hyperplane)| Facet {
                vertices: idx.into_iter().map(|i| labels[i]).sorted().collect(),
                hyperplane,
            })
            .collect();
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(facets)
    }

    /// `d`-dimensional volume of `conv(labels)`; zero for flat subsets.
    pub fn volume(&self, labels: &[usize]) -> Rational {
        if !self.is_full_dimensional(labels) {
            return Rational::zero();
        }
        hull_volume(&self.gather(labels), self.dim)
    }

    pub fn simplex_volume(&self, labels: &[usize]) -> Rational {
        simplex_volume(&self.gather(labels))
    }

    /// Whether `candidate` is a face of `subset` in the supporting-hyperplane
    /// sense: the empty set is a face, `subset` itself is not.
    pub fn is_face(&self, subset: &[usize], candidate: &[usize]) -> bool {
        if candidate.is_empty() {
            return true;
        }
        let rest: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|l| !candidate.contains(l))
            .collect();
        if rest.is_empty() {
            return false;
        }
        let eq: Vec<Row> = candidate
            .iter()
            .map(|&l| self.homogeneous_row(l, false))
            .collect();
        let strict: Vec<Row> = rest
            .iter()
            .map(|&l| self.homogeneous_row(l, false))
            .collect();
        lp_feasible_strict(&eq, &[], &strict)
    }

    /// Whether `a` and `b` meet in a common face: some hyperplane contains
    /// `a ∩ b` and strictly separates the remaining points of each.
    pub fn cells_meet_properly(&self, a: &[usize], b: &[usize]) -> bool {
        let common: Vec<usize> = a.iter().copied().filter(|l| b.contains(l)).collect();
        let eq: Vec<Row> = common
            .iter()
            .map(|&l| self.homogeneous_row(l, false))
            .collect();
        let strict: Vec<Row> = a
            .iter()
            .filter(|l| !common.contains(l))
            .map(|&l| self.homogeneous_row(l, false))
            .chain(
                b.iter()
                    .filter(|l| !common.contains(l))
                    .map(|&l| self.homogeneous_row(l, true)),
            )
            .collect();
        lp_feasible_strict(&eq, &[], &strict)
    }

    /// Row `±(x, -1)` acting on unknowns `(a, alpha)`, right-hand side zero.
    pub(crate) fn homogeneous_row(&self, label: usize, negate: bool) -> Row {
        let mut row: Vec<Rational> = self.point(label).to_vec();
        row.push(-Rational::one());
        if negate {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        (row, Rational::zero())
    }

    /// Facets of `conv(subset)` visible from point `w`.
    pub fn shadow_facets(&self, subset: &[usize], w: usize) -> Result<Vec<Facet>> {
        let p = self.point(w);
        Ok(self
            .hull_facets(subset)?
            .into_iter()
            .filter(|f| f.is_visible(p))
            .collect())
    }

    /// Subfacets of `conv(subset)` lying in exactly one facet of the shadow of
    /// `w`, as sorted label sets.
    pub fn shadow_boundary(&self, subset: &[usize], w: usize) -> Result<Vec<Vec<usize>>> {
        let facets = self.hull_facets(subset)?;
        let p = self.point(w);
        let visible: Vec<bool> = facets.iter().map(|f| f.is_visible(p)).collect();
        let ridge_dim = self.dim as isize - 2;
        let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (i, j) in (0..facets.len()).tuple_combinations() {
            let ridge: Vec<usize> = facets[i]
                .vertices
                .iter()
                .copied()
                .filter(|l| facets[j].vertices.contains(l))
                .collect();
            if self.subset_dimension(&ridge) != ridge_dim {
                continue;
            }
            let count = usize::from(visible[i]) + usize::from(visible[j]);
            *ridges.entry(ridge).or_insert(0) += count;
        }
        Ok(ridges
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect())
    }
}

/// A hyperplane `a·x = alpha` stored as a primitive integer vector, oriented
/// so the owning point set lies in `a·x <= alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Hyperplane {
    /// `a·p - alpha`: positive on the outer side.
    pub fn eval(&self, p: &[Rational]) -> Rational {
        self.normal.iter().zip(p).fold(
            -Rational::from_integer(self.offset.clone()),
            |acc, (a, x)| acc + x * a,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Every label of the owning subset on the hyperplane, sorted.
    pub vertices: Vec<usize>,
    pub hyperplane: Hyperplane,
}

impl Facet {
    /// Strictly beyond the facet, in the open halfspace away from the hull.
    pub fn is_visible(&self, p: &[Rational]) -> bool {
        self.hyperplane.eval(p).is_positive()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.vertices.binary_search(&label).is_ok()
    }
}

/// Dimension of the affine span of a nonempty list of points.
///
/// # Panics
/// If `points` is empty.
pub fn affine_dimension<P: AsRef<[Rational]>>(points: &[P]) -> usize {
    let (first, rest) = points.split_first().expect("affine_dimension of no points");
    let first = first.as_ref();
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.as_ref().iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&diffs)
}

fn difference_matrix<P: AsRef<[Rational]>>(simplex: &[P]) -> Vec<Vec<Rational>> {
    let (first, rest) = simplex.split_first().expect("empty simplex");
    let first = first.as_ref();
    rest.iter()
        .map(|p| p.as_ref().iter().zip(first).map(|(a, b)| a - b).collect())
        .collect()
}

/// Sign of `det[p2 - p1, ..., p_{d+1} - p1]` for `d + 1` points in `R^d`.
pub fn orientation<P: AsRef<[Rational]>>(simplex: &[P]) -> Ordering {
    linalg::determinant(&difference_matrix(simplex)).cmp(&Rational::zero())
}

/// `|det| / d!` for `d + 1` points in `R^d`.
pub fn simplex_volume<P: AsRef<[Rational]>>(simplex: &[P]) -> Rational {
    let d = simplex.len().saturating_sub(1);
    let fact = (1..=d as i64).product::<i64>();
    abs(&linalg::determinant(&difference_matrix(simplex))) / Rational::from_integer(fact.into())
}

/// Brute-force facet enumeration of a full-dimensional point list in `R^d`.
/// Returns the indices on each facet and its outward hyperplane.
fn facets_of(points: &[&[Rational]], d: usize) -> Vec<(Vec<usize>, Hyperplane)> {
    let n = points.len();
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    for combo in (0..n).combinations(d) {
        let base = points[combo[0]];
        let diffs: Vec<Vec<Rational>> = combo[1..]
            .iter()
            .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let normal = if d == 1 {
            vec![Rational::one()]
        } else {
            match kernel_line(&diffs, d) {
                Some(k) => k,
                None => continue,
            }
        };
        let mut full = normal.clone();
        full.push(dot(&normal, base));
        if !seen.insert(canonical_up_to_sign(&full)) {
            continue;
        }
        let values: Vec<Rational> = points.iter().map(|p| dot(&normal, p) - &full[d]).collect();
        let pos = values.iter().any(|v| v.is_positive());
        let neg = values.iter().any(|v| v.is_negative());
        if pos && neg {
            continue;
        }
        if pos {
            full.iter_mut().for_each(|x| *x = -&*x);
        }
        let mut ints = primitive(&full);
        let offset = ints.pop().expect("offset");
        let on: Vec<usize> = (0..n).filter(|&i| values[i].is_zero()).collect();
        out.push((
            on,
            Hyperplane {
                normal: ints,
                offset,
            },
        ));
    }
    out
}

/// Volume of a full-dimensional point list by coning its first point over
/// every facet that misses it. Each cone's volume is
/// `|a·v - alpha| * vol_{d-1}(projected facet) / (d * |a_j|)` where the facet
/// is projected along a coordinate `j` with `a_j != 0`.
fn hull_volume(points: &[&[Rational]], d: usize) -> Rational {
    if d == 1 {
        let (lo, hi) = points
            .iter()
            .map(|p| &p[0])
            .minmax()
            .into_option()
            .expect("nonempty");
        return hi - lo;
    }
    let apex = points[0];
    let mut total = Rational::zero();
    for (idx, h) in facets_of(points, d) {
        let height = abs(&h.eval(apex));
        if height.is_zero() {
            continue;
        }
        let j = h
            .normal
            .iter()
            .position(|a| !a.is_zero())
            .expect("nonzero normal");
        let projected: Vec<Vec<Rational>> = idx
            .iter()
            .map(|&i| {
                points[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let refs: Vec<&[Rational]> = projected.iter().map(Vec::as_slice).collect();
        let base = hull_volume(&refs, d - 1);
        let scale = Rational::from_integer(h.normal[j].abs() * BigInt::from(d));
        total += height * base / scale;
    }
    total
}
