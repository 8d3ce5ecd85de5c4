//! Greedy reconstruction of a lexicographic triangulation from its
//! GKZ-vector.
//!
//! Starting from the trivial subdivision, each round pulls or pushes a
//! remaining point whose GKZ entry equals the largest (pull) or smallest
//! (push) value it can reach inside the cells of the current subdivision.
//! Any such candidate leads to the same triangulation, so the choice is
//! fixed as: lowest label first, pull before push. Points that have already
//! disappeared from the subdivision are appended at the end as pushes. Once
//! the subdivision is simplicial the remaining steps are no-ops and are
//! appended directly (present points pulled, absent points pushed).

use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::gkz::{gkz_vector, next_candidates, GkzVector};
use crate::subdivide::{apply_step, trivial, validate, LexScript, Step, Triangulation};
use num::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub step: Step,
    /// Number of cells after applying `step`.
    pub cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveryResult {
    pub script: LexScript,
    pub triangulation: Triangulation,
    pub trace: Vec<TraceEntry>,
}

pub fn recover(ps: &PointSet, z: &GkzVector) -> Result<RecoveryResult> {
    if z.len() != ps.len() {
        return Err(Error::LengthMismatch {
            expected: ps.len(),
            found: z.len(),
        });
    }
    if let Some(i) = z.entries().iter().position(|x| x.is_negative()) {
        return Err(Error::NegativeEntry(i));
    }

    let mut sub = trivial(ps);
    let mut remaining: BTreeSet<usize> = (0..ps.len()).collect();
    let mut steps = Vec::with_capacity(ps.len());
    let mut trace = Vec::with_capacity(ps.len());

    while !remaining.is_empty() {
        let present = sub.present_points();
        let live: BTreeSet<usize> = remaining.intersection(&present).copied().collect();
        if sub.is_simplicial(ps.dim()) {
            // Nothing left to refine; the verification below decides.
            let tail = live
                .iter()
                .map(|&l| Step::pull(l))
                .chain(remaining.difference(&live).map(|&l| Step::push(l)));
            for step in tail {
                steps.push(step);
                trace.push(TraceEntry {
                    step,
                    cells: sub.len(),
                });
            }
            break;
        }
        if live.is_empty() {
            // Every remaining point is absent: their entries must vanish.
            for &label in &remaining {
                if !z.get(label).is_zero() {
                    return Err(Error::NoCandidate { step: steps.len() });
                }
                let step = Step::push(label);
                steps.push(step);
                trace.push(TraceEntry {
                    step,
                    cells: sub.len(),
                });
            }
            break;
        }
        let step = next_candidates(ps, &sub, z, &live)
            .into_iter()
            .next()
            .ok_or(Error::NoCandidate { step: steps.len() })?;
        sub = apply_step(ps, &sub, step);
        remaining.remove(&step.label);
        steps.push(step);
        trace.push(TraceEntry {
            step,
            cells: sub.len(),
        });
    }

    let triangulation = Triangulation::new(ps, sub)?;
    if !verify(ps, z, &triangulation) {
        return Err(Error::VerificationFailed(format!(
            "greedy result has GKZ-vector ({}) instead of the input",
            gkz_vector(ps, &triangulation)
                .entries()
                .iter()
                .map(crate::rational::format_rational)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    Ok(RecoveryResult {
        script: LexScript::new(steps)?,
        triangulation,
        trace,
    })
}

/// `t` is a valid triangulation of the point set with GKZ-vector `z`.
pub fn verify(ps: &PointSet, z: &GkzVector, t: &Triangulation) -> bool {
    z.len() == ps.len() && gkz_vector(ps, t) == *z && validate(ps, t.subdivision()).is_valid()
}
