//! Brute-force reference implementations, independent of the engine: integer
//! points only, fraction-free elimination, closure of every subset.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

/// Rank by fraction-free row reduction over the integers.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            let pivot = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot) {
                *x = &*x * &a - y * &b;
            }
        }
        r += 1;
    }
    r
}

fn rows_of(points: &[Vec<i64>], mask: u32) -> Vec<Vec<i64>> {
    (0..points.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| points[i].clone())
        .collect()
}

/// Every spanned flat as `(dim, incident indices)`, from the closure of every
/// nonempty subset of points.
pub fn spanned_flats(points: &[Vec<i64>]) -> BTreeSet<(usize, Vec<usize>)> {
    let n = points.len();
    assert!(n < 20);
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let base = rows_of(points, mask);
        let r = rank(&base);
        let closure: Vec<usize> = (0..n)
            .filter(|&i| {
                let mut rows = base.clone();
                rows.push(points[i].clone());
                rank(&rows) == r
            })
            .collect();
        out.insert((r - 1, closure));
    }
    out
}

/// `(g_k, minimum number of flats achieving it)` by exhaustive search over
/// families of spanned flats of dimension at least 1 with total dimension at
/// most `k`.
pub fn cover(points: &[Vec<i64>], k: usize) -> (usize, usize) {
    let n = points.len();
    if k == 0 || n == 0 {
        return (0, 0);
    }
    if n == 1 {
        return (1, 1);
    }
    let flats: Vec<(usize, u32)> = spanned_flats(points)
        .into_iter()
        .filter(|(d, _)| *d >= 1 && *d <= k)
        .map(|(d, inc)| (d, inc.iter().fold(0u32, |m, &i| m | 1 << i)))
        .collect();
    let mut best = (0usize, usize::MAX);
    fn go(
        flats: &[(usize, u32)],
        start: usize,
        budget: usize,
        covered: u32,
        count: usize,
        best: &mut (usize, usize),
    ) {
        let c = covered.count_ones() as usize;
        if c > best.0 || (c == best.0 && count < best.1) {
            *best = (c, count);
        }
        for i in start..flats.len() {
            let (d, m) = flats[i];
            if d <= budget {
                go(flats, i + 1, budget - d, covered | m, count + 1, best);
            }
        }
    }
    go(&flats, 0, k, 0, 0, &mut best);
    best
}

/// Essential dimension by exhaustive search.
pub fn essential_dimension(points: &[Vec<i64>]) -> usize {
    let n = points.len();
    if n == 0 {
        return 0;
    }
    (1..).find(|&k| cover(points, k).0 == n).unwrap()
}

/// Whether two integer vectors are projectively equal.
pub fn same_point(a: &[i64], b: &[i64]) -> bool {
    rank(&[a.to_vec(), b.to_vec()]) < 2
}
