#![allow(dead_code)]

pub mod oracle;

use flatspan::{Config, Point};
use rand::Rng;

/// `n` distinct projective points of `P^d` with coordinates in `-r..=r`.
/// Small ranges give plenty of collinear and coplanar coincidences.
pub fn random_points<R: Rng>(rng: &mut R, n: usize, d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = Vec::with_capacity(n);
    while pts.len() < n {
        let v: Vec<i64> = (0..=d).map(|_| rng.gen_range(-r..=r)).collect();
        if v.iter().all(|x| *x == 0) || pts.iter().any(|p| oracle::same_point(p, &v)) {
            continue;
        }
        pts.push(v);
    }
    pts
}

pub fn to_config(d: usize, pts: &[Vec<i64>]) -> Config {
    Config::new(
        d,
        pts.iter().map(|p| Point::from_ints(p).unwrap()).collect(),
    )
    .unwrap()
}
