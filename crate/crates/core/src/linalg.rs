//! Dense Gaussian elimination over the rationals.

use crate::rational::Rational;
use num::{BigInt, Integer, One, Signed, Zero};

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
fn echelon(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            let (head, tail) = rows.split_at_mut(i);
            for (x, y) in tail[0][c..].iter_mut().zip(&head[r][c..]) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &m[c][c];
            let (head, tail) = m.split_at_mut(i);
            for (x, y) in tail[0][c..].iter_mut().zip(&head[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// A nonzero vector spanning the kernel of `rows` when the kernel is exactly
/// one-dimensional, `None` otherwise.
pub fn kernel_line(rows: &[Vec<Rational>], ncols: usize) -> Option<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m);
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); ncols];
    x[free] = Rational::one();
    for (r, &c) in pivots.iter().enumerate().rev() {
        let s = (c + 1..ncols).fold(Rational::zero(), |acc, j| acc + &m[r][j] * &x[j]);
        x[c] = -s / &m[r][c];
    }
    Some(x)
}

/// Scales a rational vector by a positive factor to a primitive integer
/// vector (entries coprime as a whole).
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// `primitive` with the sign fixed so the first nonzero entry is positive.
pub fn canonical_up_to_sign(v: &[Rational]) -> Vec<BigInt> {
    let mut p = primitive(v);
    if p.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        p.iter_mut().for_each(|x| *x = -&*x);
    }
    p
}
