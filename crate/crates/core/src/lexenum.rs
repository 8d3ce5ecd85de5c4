//! Brute-force enumeration of lexicographic triangulations.
//!
//! The exhaustive mode walks the tree of script prefixes depth first. Two
//! prefixes reaching the same subdivision with the same set of unused
//! labels have identical completions, so each such state is expanded once,
//! and a simplicial subdivision ends its branch since every further step is
//! a no-op. The set of triangulations found equals the one obtained by
//! running all `n! * 2^n` scripts.

use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::gkz::{gkz_vector, GkzVector};
use crate::recover::recover;
use crate::subdivide::{
    apply_step, lex_triangulation, trivial, Action, LexScript, Step, Subdivision, Triangulation,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Sample this many uniformly random full scripts instead of enumerating.
    pub limit: Option<usize>,
    pub seed: u64,
    /// Largest script count enumerated exhaustively.
    pub budget: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            limit: None,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    /// Every one of `scripts` full scripts is accounted for.
    Exhaustive {
        scripts: u128,
    },
    Sampled {
        samples: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated {
    pub triangulation: Triangulation,
    pub witness: LexScript,
    pub gkz: GkzVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    /// Distinct triangulations in canonical (cell-set) order.
    pub triangulations: Vec<Enumerated>,
    /// GKZ-vector to indices into `triangulations`.
    pub gkz_map: BTreeMap<GkzVector, Vec<usize>>,
    pub coverage: Coverage,
}

impl EnumerationReport {
    pub fn len(&self) -> usize {
        self.triangulations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangulations.is_empty()
    }

    /// No two distinct triangulations share a GKZ-vector.
    pub fn gkz_injective(&self) -> bool {
        self.gkz_map.values().all(|v| v.len() == 1)
    }

    pub fn contains(&self, t: &Triangulation) -> bool {
        self.triangulations.iter().any(|e| e.triangulation == *t)
    }
}

/// `n! * 2^n`, or `None` on overflow.
pub fn script_count(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(2 * k))
}

pub fn enumerate_lex(ps: &PointSet, opts: &EnumerateOptions) -> Result<EnumerationReport> {
    let n = ps.len();
    let mut found: BTreeMap<Triangulation, LexScript> = BTreeMap::new();
    let coverage = match opts.limit {
        Some(samples) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut order: Vec<usize> = (0..n).collect();
            for _ in 0..samples {
                order.shuffle(&mut rng);
                let steps = order
                    .iter()
                    .map(|&label| Step {
                        label,
                        action: if rng.gen_bool(0.5) {
                            Action::Pull
                        } else {
                            Action::Push
                        },
                    })
                    .collect();
                let script = LexScript::new(steps)?;
                let t = lex_triangulation(ps, &script)?;
                found.entry(t).or_insert(script);
            }
            Coverage::Sampled {
                samples,
                seed: opts.seed,
            }
        }
        None => {
            let scripts = script_count(n)
                .filter(|&c| c <= opts.budget as u128)
                .ok_or_else(|| Error::BudgetExceeded {
                    scripts: script_count(n)
                        .map_or_else(|| format!("{n}! * 2^{n}"), |c| c.to_string()),
                    budget: opts.budget,
                })?;
            let mut walk = Walk {
                ps,
                visited: HashSet::new(),
                found: &mut found,
                prefix: Vec::with_capacity(n),
            };
            walk.visit(trivial(ps), (1u64 << n) - 1)?;
            Coverage::Exhaustive { scripts }
        }
    };

    let mut triangulations = Vec::with_capacity(found.len());
    let mut gkz_map: BTreeMap<GkzVector, Vec<usize>> = BTreeMap::new();
    for (i, (triangulation, witness)) in found.into_iter().enumerate() {
        let gkz = gkz_vector(ps, &triangulation);
        gkz_map.entry(gkz.clone()).or_default().push(i);
        triangulations.push(Enumerated {
            triangulation,
            witness,
            gkz,
        });
    }
    Ok(EnumerationReport {
        triangulations,
        gkz_map,
        coverage,
    })
}

struct Walk<'a> {
    ps: &'a PointSet,
    visited: HashSet<(Subdivision, u64)>,
    found: &'a mut BTreeMap<Triangulation, LexScript>,
    prefix: Vec<Step>,
}

impl Walk<'_> {
    fn visit(&mut self, sub: Subdivision, remaining: u64) -> Result<()> {
        let d = self.ps.dim();
        if remaining == 0 || sub.is_simplicial(d) {
            let mut steps = self.prefix.clone();
            steps.extend(
                (0..self.ps.len())
                    .filter(|l| remaining >> l & 1 == 1)
                    .map(Step::pull),
            );
            let t = Triangulation::new(self.ps, sub)?;
            if let Entry::Vacant(e) = self.found.entry(t) {
                e.insert(LexScript::new(steps)?);
            }
            return Ok(());
        }
        if !self.visited.insert((sub.clone(), remaining)) {
            return Ok(());
        }
        for label in (0..self.ps.len()).filter(|l| remaining >> l & 1 == 1) {
            for action in [Action::Pull, Action::Push] {
                let step = Step { label, action };
                let next = apply_step(self.ps, &sub, step);
                self.prefix.push(step);
                self.visit(next, remaining & !(1 << label))?;
                self.prefix.pop();
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripFailure {
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub total: usize,
    pub failures: Vec<RoundTripFailure>,
}

impl RoundTripReport {
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recovers every triangulation of `report` from its GKZ-vector.
pub fn roundtrip_report(ps: &PointSet, report: &EnumerationReport) -> RoundTripReport {
    let failures = report
        .triangulations
        .iter()
        .enumerate()
        .filter_map(|(index, e)| {
            let reason = match recover(ps, &e.gkz) {
                Ok(r) if r.triangulation == e.triangulation => return None,
                Ok(_) => "recovered a different triangulation".to_string(),
                Err(err) => err.to_string(),
            };
            Some(RoundTripFailure { index, reason })
        })
        .collect();
    RoundTripReport {
        total: report.len(),
        failures,
    }
}

pub fn roundtrip_all(ps: &PointSet, opts: &EnumerateOptions) -> Result<RoundTripReport> {
    Ok(roundtrip_report(ps, &enumerate_lex(ps, opts)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivide::validate;

    #[test]
    fn script_counts() {
        assert_eq!(script_count(0), Some(1));
        assert_eq!(script_count(4), Some(384));
        assert_eq!(script_count(6), Some(46080));
        assert_eq!(script_count(8), Some(10_321_920));
        assert_eq!(script_count(200), None);
    }

    #[test]
    fn square_has_two() {
        let ps = PointSet::from_integers(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let r = enumerate_lex(&ps, &EnumerateOptions::default()).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.gkz_injective());
        assert_eq!(r.coverage, Coverage::Exhaustive { scripts: 384 });
        for e in &r.triangulations {
            assert_eq!(lex_triangulation(&ps, &e.witness).unwrap(), e.triangulation);
            assert!(validate(&ps, e.triangulation.subdivision()).is_valid());
        }
        assert!(roundtrip_report(&ps, &r).all_ok());
    }

    #[test]
    fn segment_with_midpoint() {
        let ps = PointSet::from_integers(&[[0], [1], [2]]).unwrap();
        let r = enumerate_lex(&ps, &EnumerateOptions::default()).unwrap();
        let cells: Vec<String> = r
            .triangulations
            .iter()
            .map(|e| e.triangulation.to_string())
            .collect();
        assert_eq!(cells, vec!["2\n1 2\n2 3\n", "1\n1 3\n"]);
    }

    #[test]
    fn budget_and_sampling() {
        let ps = PointSet::from_integers(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let tight = EnumerateOptions {
            budget: 100,
            ..Default::default()
        };
        assert!(matches!(
            enumerate_lex(&ps, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        let sampled = EnumerateOptions {
            limit: Some(10),
            seed: 7,
            ..tight
        };
        let a = enumerate_lex(&ps, &sampled).unwrap();
        let b = enumerate_lex(&ps, &sampled).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.coverage,
            Coverage::Sampled {
                samples: 10,
                seed: 7
            }
        );
    }
}
