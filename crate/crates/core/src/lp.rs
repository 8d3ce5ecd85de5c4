//! Exact feasibility of mixed equality / weak / strict linear systems.
//!
//! A system `E x = e, W x <= w, S x < s` over free variables `x` is decided by
//! the auxiliary program
//!
//! ```text
//! maximize t  subject to  E x = e,  W x <= w,  S x + t <= s,  0 <= t <= 1
//! ```
//!
//! which is strictly feasible exactly when its optimum is positive. The
//! program is solved with a dense two-phase simplex method over exact
//! rationals using Bland's rule, so it always terminates.

use crate::rational::Rational;
use num::{One, Signed, Zero};

/// One row `coefficients · x (op) rhs`.
pub type Row = (Vec<Rational>, Rational);

struct Tableau {
    /// Each row holds the coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        self.rows[r].iter_mut().for_each(|x| *x /= &p);
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            let (pr, row) = if i < r {
                let (a, b) = self.rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = self.rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, y) in row.iter_mut().zip(pr) {
                *x -= &f * y;
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · y` over columns `< active`, Bland's rule throughout.
    fn maximize(&mut self, cost: &[Rational], active: usize) -> Outcome {
        loop {
            let entering = (0..active).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .basis
                    .iter()
                    .enumerate()
                    .fold(cost[j].clone(), |acc, (i, &b)| {
                        acc - &cost[b] * &self.rows[i][j]
                    });
                reduced.is_positive()
            });
            let Some(c) = entering else {
                return Outcome::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, c),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, &b)| {
                acc + &cost[b] * self.rhs(i)
            })
    }
}

/// Decides whether some `x` satisfies every equality, weak and strict row.
///
/// All rows must share one width (the number of variables). An empty system
/// is feasible.
pub fn lp_feasible_strict(equalities: &[Row], weak: &[Row], strict: &[Row]) -> bool {
    let nvars = equalities
        .iter()
        .chain(weak)
        .chain(strict)
        .map(|(a, _)| a.len())
        .next()
        .unwrap_or(0);

    // Column layout: x+ | x- | t | slacks | artificials.
    let t = 2 * nvars;
    let slack0 = t + 1;
    let nslack = weak.len() + strict.len() + 1;
    let nrows = equalities.len() + nslack;
    let art0 = slack0 + nslack;
    let ncols = art0 + nrows;

    let mut rows = Vec::with_capacity(nrows);
    let mut push_row = |a: &[Rational], rhs: &Rational, with_t: bool, slack: Option<usize>| {
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, v) in a.iter().enumerate() {
            row[j] = v.clone();
            row[nvars + j] = -v;
        }
        if with_t {
            row[t] = Rational::one();
        }
        if let Some(s) = slack {
            row[slack0 + s] = Rational::one();
        }
        row[ncols] = rhs.clone();
        if rhs.is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        let i = rows.len();
        row[art0 + i] = Rational::one();
        rows.push(row);
    };
    for (a, b) in equalities {
        push_row(a, b, false, None);
    }
    for (s, (a, b)) in weak.iter().enumerate() {
        push_row(a, b, false, Some(s));
    }
    for (s, (a, b)) in strict.iter().enumerate() {
        push_row(a, b, true, Some(weak.len() + s));
    }
    let zeros = vec![Rational::zero(); nvars];
    push_row(&zeros, &Rational::one(), true, Some(nslack - 1));

    let mut tab = Tableau {
        rows,
        basis: (art0..ncols).collect(),
        ncols,
    };

    // Phase one: drive the artificial variables to zero.
    let mut cost = vec![Rational::zero(); ncols];
    cost[art0..].iter_mut().for_each(|c| *c = -Rational::one());
    tab.maximize(&cost, ncols);
    if tab.objective(&cost).is_negative() {
        return false;
    }
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] < art0 {
            i += 1;
            continue;
        }
        match (0..art0).find(|&j| !tab.rows[i][j].is_zero()) {
            Some(j) => {
                tab.pivot(i, j);
                i += 1;
            }
            None => {
                tab.rows.remove(i);
                tab.basis.remove(i);
            }
        }
    }

    // Phase two: maximize t over the original columns only.
    let mut cost = vec![Rational::zero(); ncols];
    cost[t] = Rational::one();
    match tab.maximize(&cost, art0) {
        Outcome::Unbounded => true,
        Outcome::Optimal => tab.objective(&cost).is_positive(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn row(a: &[i64], b: i64) -> Row {
        (a.iter().map(|&x| int(x)).collect(), int(b))
    }

    #[test]
    fn empty_system_is_feasible() {
        assert!(lp_feasible_strict(&[], &[], &[]));
    }

    #[test]
    fn contradictory_strict_pair() {
        assert!(!lp_feasible_strict(
            &[],
            &[],
            &[row(&[1], 0), row(&[-1], 0)]
        ));
    }

    #[test]
    fn line_with_open_box() {
        // (1/2, 1/2) is a witness.
        assert!(lp_feasible_strict(
            &[row(&[1, 1], 1)],
            &[],
            &[row(&[1, 0], 1), row(&[0, 1], 1)]
        ));
    }

    #[test]
    fn weak_but_not_strict() {
        // x <= 0 and -x <= 0 pins x = 0; x < 0 is then impossible.
        assert!(lp_feasible_strict(&[], &[row(&[1], 0), row(&[-1], 0)], &[]));
        assert!(!lp_feasible_strict(&[], &[row(&[-1], 0)], &[row(&[1], 0)]));
    }

    #[test]
    fn infeasible_equalities() {
        assert!(!lp_feasible_strict(
            &[row(&[1, 1], 1), row(&[1, 1], 2)],
            &[],
            &[]
        ));
        // Redundant equalities are fine.
        assert!(lp_feasible_strict(
            &[row(&[1, 1], 1), row(&[2, 2], 2)],
            &[],
            &[]
        ));
    }
}
