//! Row reduction over the rationals.

use crate::scalar::Scalar;
use num_traits::{One, Zero};

/// Reduced row-echelon form. Zero rows are dropped, so the returned rows form
/// a basis of the row space. Also returns the pivot column of each row.
pub fn rref(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Subtracts the echelon basis components from `v` (indexed by pivot
/// columns). The result is zero exactly when `v` lies in the row space.
pub fn reduce(basis: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for (row, &c) in basis.iter().zip(pivots) {
        if out[c].is_zero() {
            continue;
        }
        let factor = out[c].clone();
        for (x, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *x -= &factor * y;
            }
        }
    }
    out
}

/// Basis of the right kernel {x : row . x = 0 for every row} of a matrix in
/// reduced echelon form with `cols` columns.
pub fn kernel(basis: &[Vec<Scalar>], pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &c) in basis.iter().zip(pivots) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(rows: Vec<Vec<Scalar>>) -> usize {
    rref(rows).0.len()
}
