//! GKZ-vectors and the extremal-value tests that identify which point can be
//! pulled or pushed first (or next) in a lexicographic triangulation.

use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::lp::{lp_feasible_strict, Row};
use crate::rational::{format_rational, Rational};
use crate::subdivide::{Action, Step, Subdivision, Triangulation};
use num::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Per-point sums of the volumes of incident simplices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GkzVector(pub Vec<Rational>);

impl GkzVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, label: usize) -> &Rational {
        &self.0[label]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for GkzVector {
    /// One rational per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for z in &self.0 {
            writeln!(f, "{}", format_rational(z))?;
        }
        Ok(())
    }
}

pub fn gkz_vector(ps: &PointSet, t: &Triangulation) -> GkzVector {
    let mut z = vec![Rational::zero(); ps.len()];
    for c in t.cells() {
        let vol = ps.simplex_volume(c.labels());
        for &l in c.labels() {
            z[l] += &vol;
        }
    }
    GkzVector(z)
}

fn require_full(ps: &PointSet, subset: &[usize]) -> Result<()> {
    let found = ps.subset_dimension(subset);
    if found == ps.dim() as isize {
        Ok(())
    } else {
        Err(Error::DegenerateSet {
            expected: ps.dim(),
            found,
        })
    }
}

/// Largest possible entry for `label` over triangulations of `subset`.
pub fn z_max(ps: &PointSet, subset: &[usize], label: usize) -> Result<Rational> {
    require_full(ps, subset)?;
    Ok(if subset.contains(&label) {
        ps.volume(subset)
    } else {
        Rational::zero()
    })
}

/// Smallest possible entry for `label` over triangulations of `subset`.
pub fn z_min(ps: &PointSet, subset: &[usize], label: usize) -> Result<Rational> {
    require_full(ps, subset)?;
    Ok(if subset.contains(&label) {
        let rest: Vec<usize> = subset.iter().copied().filter(|&l| l != label).collect();
        ps.volume(subset) - ps.volume(&rest)
    } else {
        Rational::zero()
    })
}

/// `label` is not in the convex hull of the other points.
pub fn is_extreme_point(ps: &PointSet, label: usize) -> bool {
    ps.is_face(&ps.labels(), &[label])
}

/// Ear-point test by entries: an extreme point whose GKZ entry equals
/// `vol(V) - vol(V \ {label})`.
pub fn is_ear_point(ps: &PointSet, t: &Triangulation, label: usize) -> bool {
    let all = ps.labels();
    is_extreme_point(ps, label)
        && *gkz_vector(ps, t).get(label)
            == z_min(ps, &all, label).expect("point set is full-dimensional")
}

/// Whether `cell` lies in the closure of `conv(V) \ conv(V \ {label})`,
/// decided by finding a hyperplane with `V \ {label}` weakly on one side and
/// `cell` weakly on the other, `label` strictly beyond.
pub fn cell_in_ear_region(ps: &PointSet, cell: &[usize], label: usize) -> bool {
    let mut weak: Vec<Row> = (0..ps.len())
        .filter(|&l| l != label)
        .map(|l| ps.homogeneous_row(l, false))
        .collect();
    weak.extend(
        cell.iter()
            .filter(|&&l| l != label)
            .map(|&l| ps.homogeneous_row(l, true)),
    );
    let (row, _) = ps.homogeneous_row(label, true);
    weak.push((row, -Rational::one()));
    lp_feasible_strict(&[], &weak, &[])
}

/// Labels that can be pulled (entry attains `z_max`) or pushed (entry
/// attains `z_min`) first. Sorted by label, pull before push.
pub fn first_candidates(ps: &PointSet, z: &GkzVector) -> Vec<Step> {
    let all = ps.labels();
    let mut out = Vec::new();
    for label in 0..ps.len().min(z.len()) {
        let zl = z.get(label);
        if *zl == z_max(ps, &all, label).expect("full-dimensional") {
            out.push(Step::pull(label));
        }
        if *zl == z_min(ps, &all, label).expect("full-dimensional") {
            out.push(Step::push(label));
        }
    }
    out
}

/// Sums over the cells of `s` of the largest and smallest entries `label`
/// can take in a triangulation of each cell.
pub fn extremal_sums(ps: &PointSet, s: &Subdivision, label: usize) -> (Rational, Rational) {
    let mut pull = Rational::zero();
    let mut push = Rational::zero();
    for c in s.cells().filter(|c| c.contains(label)) {
        let vol = ps.volume(c.labels());
        push += &vol - ps.volume(c.without(label).labels());
        pull += vol;
    }
    (pull, push)
}

/// Labels of `remaining` that can be pulled or pushed next on top of `s`.
/// Sorted by label, pull before push.
pub fn next_candidates(
    ps: &PointSet,
    s: &Subdivision,
    z: &GkzVector,
    remaining: &BTreeSet<usize>,
) -> Vec<Step> {
    let mut out = Vec::new();
    for &label in remaining {
        let Some(zl) = z.0.get(label) else { continue };
        let (pull, push) = extremal_sums(ps, s, label);
        if *zl == pull {
            out.push(Step {
                label,
                action: Action::Pull,
            });
        }
        if *zl == push {
            out.push(Step {
                label,
                action: Action::Push,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::subdivide::{lex_triangulation, pull_point, trivial, LexScript};

    fn sq() -> PointSet {
        PointSet::from_integers(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap()
    }

    fn sqc() -> PointSet {
        PointSet::from_integers(&[[0, 0], [2, 0], [2, 2], [0, 2], [1, 1]]).unwrap()
    }

    fn z(v: &[(i64, i64)]) -> GkzVector {
        GkzVector(v.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    fn pull_v1(ps: &PointSet) -> Triangulation {
        lex_triangulation(ps, &LexScript::uniform(ps.len(), Action::Pull)).unwrap()
    }

    fn sqc_fan(ps: &PointSet) -> Triangulation {
        let s = LexScript::new(vec![
            Step::pull(4),
            Step::pull(0),
            Step::pull(1),
            Step::pull(2),
            Step::pull(3),
        ])
        .unwrap();
        lex_triangulation(ps, &s).unwrap()
    }

    #[test]
    fn gkz_examples() {
        let s = sq();
        assert_eq!(
            gkz_vector(&s, &pull_v1(&s)),
            z(&[(1, 1), (1, 2), (1, 2), (1, 1)])
        );
        let c = sqc();
        assert_eq!(
            gkz_vector(&c, &sqc_fan(&c)),
            z(&[(2, 1), (2, 1), (2, 1), (2, 1), (4, 1)])
        );
        let push4 = LexScript::new(vec![
            Step::push(3),
            Step::pull(0),
            Step::pull(1),
            Step::pull(2),
        ])
        .unwrap();
        let t = lex_triangulation(&s, &push4).unwrap();
        assert_eq!(gkz_vector(&s, &t), z(&[(1, 2), (1, 1), (1, 1), (1, 2)]));
    }

    #[test]
    fn extremal_values() {
        let s = sq();
        let all = s.labels();
        assert_eq!(z_max(&s, &all, 0).unwrap(), int(1));
        assert_eq!(z_max(&s, &[0, 1, 3], 2).unwrap(), int(0));
        assert_eq!(z_max(&s, &[0, 1, 3], 1).unwrap(), ratio(1, 2));
        assert_eq!(z_min(&s, &all, 0).unwrap(), ratio(1, 2));
        assert_eq!(z_min(&s, &[0, 1, 3], 0).unwrap(), ratio(1, 2));
        let c = sqc();
        assert_eq!(z_min(&c, &c.labels(), 4).unwrap(), int(0));
        assert!(z_max(&s, &[0, 3], 0).is_err());
        assert!(z_min(&s, &[0, 3], 0).is_err());
    }

    #[test]
    fn ear_points() {
        let s = sq();
        let t = pull_v1(&s);
        assert!(is_ear_point(&s, &t, 1));
        assert!(!is_ear_point(&s, &t, 0));
        let c = sqc();
        assert!(!is_ear_point(&c, &sqc_fan(&c), 4));
    }

    #[test]
    fn first_candidate_examples() {
        let s = sq();
        assert_eq!(
            first_candidates(&s, &z(&[(1, 1), (1, 2), (1, 2), (1, 1)])),
            vec![Step::pull(0), Step::push(1), Step::push(2), Step::pull(3)]
        );
        // The centre lies on the diagonal of each corner-deleted square, so
        // every corner attains its minimum of 4 - 2 = 2.
        let c = sqc();
        assert_eq!(
            first_candidates(&c, &z(&[(2, 1), (2, 1), (2, 1), (2, 1), (4, 1)])),
            vec![
                Step::push(0),
                Step::push(1),
                Step::push(2),
                Step::push(3),
                Step::pull(4)
            ]
        );
        let tri = PointSet::from_integers(&[[0, 0], [3, 0], [0, 3]]).unwrap();
        let a = ratio(9, 2);
        let zz = GkzVector(vec![a.clone(), a.clone(), a]);
        assert_eq!(first_candidates(&tri, &zz).len(), 6);
    }

    #[test]
    fn next_candidate_examples() {
        let s = sq();
        let zz = z(&[(1, 1), (1, 2), (1, 2), (1, 1)]);
        let all: BTreeSet<usize> = (0..4).collect();
        assert_eq!(
            next_candidates(&s, &trivial(&s), &zz, &all),
            first_candidates(&s, &zz)
        );

        let sub = pull_point(&s, &trivial(&s), 0);
        let rest: BTreeSet<usize> = [1, 2, 3].into();
        assert_eq!(
            next_candidates(&s, &sub, &zz, &rest),
            vec![
                Step::pull(1),
                Step::push(1),
                Step::pull(2),
                Step::push(2),
                Step::pull(3),
                Step::push(3)
            ]
        );
        let ones = z(&[(1, 1), (1, 1), (1, 1), (1, 1)]);
        assert_eq!(
            next_candidates(&s, &sub, &ones, &rest),
            vec![Step::pull(3), Step::push(3)]
        );
    }

    #[test]
    fn ear_region_cells() {
        let s = sq();
        // Corner (1,1) cut off by the diagonal through (1,0),(0,1).
        assert!(cell_in_ear_region(&s, &[1, 2, 3], 3));
        assert!(!cell_in_ear_region(&s, &[0, 1, 3], 3));
    }
}
