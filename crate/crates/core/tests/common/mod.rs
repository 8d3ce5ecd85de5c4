#![allow(dead_code)]

use lextri::{Action, LexScript, PointSet, Step};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn sq() -> PointSet {
    PointSet::from_integers(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap()
}

pub fn sqc() -> PointSet {
    PointSet::from_integers(&[[0, 0], [2, 0], [2, 2], [0, 2], [1, 1]]).unwrap()
}

pub fn pent() -> PointSet {
    PointSet::from_integers(&[[0, 0], [2, 0], [3, 2], [1, 4], [-1, 2]]).unwrap()
}

pub fn hex() -> PointSet {
    PointSet::from_integers(&[[0, 0], [2, 0], [3, 2], [2, 4], [0, 4], [-1, 2]]).unwrap()
}

/// Outer triangle with a smaller inner triangle.
pub fn moae() -> PointSet {
    PointSet::from_integers(&[[0, 0], [4, 0], [0, 4], [1, 1], [2, 1], [1, 2]]).unwrap()
}

pub fn cube() -> PointSet {
    PointSet::from_integers(&[
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [0, 0, 1],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
    ])
    .unwrap()
}

/// 2x1 grid of unit squares: boundary points in the middle of two edges.
pub fn grid() -> PointSet {
    PointSet::from_integers(&[[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]]).unwrap()
}

/// Apex (1,2) over the collinear base (0,0),(1,0),(2,0),(3,0).
pub fn planar_pyramid() -> PointSet {
    PointSet::from_integers(&[[0, 0], [1, 0], [2, 0], [3, 0], [1, 2]]).unwrap()
}

/// Square pyramid in 3-space, apex last.
pub fn square_pyramid() -> PointSet {
    PointSet::from_integers(&[
        [0, 0, 0],
        [2, 0, 0],
        [0, 2, 0],
        [2, 2, 0],
        [1, 1, 0],
        [1, 1, 2],
    ])
    .unwrap()
}

/// Every one of the `n! * 2^n` full scripts on `n` labels.
pub fn all_scripts(n: usize) -> Vec<LexScript> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        for mask in 0..(1u32 << n) {
            let steps = perm
                .iter()
                .enumerate()
                .map(|(i, &label)| Step {
                    label,
                    action: if mask >> i & 1 == 1 {
                        Action::Push
                    } else {
                        Action::Pull
                    },
                })
                .collect();
            out.push(LexScript::new(steps).unwrap());
        }
    }
    out
}

/// A uniformly random full script whose first step is `first` when given.
pub fn random_script(n: usize, first: Option<Step>, rng: &mut impl Rng) -> LexScript {
    let mut labels: Vec<usize> = (0..n)
        .filter(|&l| Some(l) != first.map(|s| s.label))
        .collect();
    labels.shuffle(rng);
    let steps = first
        .into_iter()
        .chain(labels.into_iter().map(|label| Step {
            label,
            action: if rng.gen_bool(0.5) {
                Action::Pull
            } else {
                Action::Push
            },
        }))
        .collect();
    LexScript::new(steps).unwrap()
}
