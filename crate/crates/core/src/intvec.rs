//! Integer incidence arithmetic used by the enumerator.
//!
//! Points and flat normals are scaled to primitive integer vectors. For a flat
//! with normals `N`, the residual of a point `q` is the vector `N q`; two
//! points off the flat span the same next-rank flat exactly when their
//! residuals are parallel. Residuals are keyed by their primitive direction.
//! Small inputs go through checked `i128` arithmetic; anything that overflows
//! is redone with big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalar::{self, Scalar};

#[derive(Clone, Debug)]
pub(crate) struct IntRows {
    big: Vec<Vec<BigInt>>,
    small: Option<Vec<Vec<i64>>>,
}

impl IntRows {
    pub(crate) fn from_rational(rows: &[Vec<Scalar>]) -> Self {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| scalar::primitive_integers(r)).collect();
        let small = big
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToPrimitive::to_i64)
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>();
        IntRows { big, small }
    }

    pub(crate) fn len(&self) -> usize {
        self.big.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum DirKey {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

fn small_keys(normals: &[Vec<i64>], points: &[Vec<i64>]) -> Option<Vec<Option<DirKey>>> {
    let mut out = Vec::with_capacity(points.len());
    for q in points {
        let mut res = Vec::with_capacity(normals.len());
        for nrm in normals {
            let mut acc: i128 = 0;
            for (a, b) in nrm.iter().zip(q) {
                acc = acc.checked_add((*a as i128).checked_mul(*b as i128)?)?;
            }
            if acc == i128::MIN {
                return None;
            }
            res.push(acc);
        }
        let g = res.iter().fold(0i128, |g, x| g.gcd(x));
        if g == 0 {
            out.push(None);
            continue;
        }
        let lead_negative = res.iter().find(|x| **x != 0).is_some_and(|x| *x < 0);
        let g = if lead_negative { -g } else { g };
        for x in res.iter_mut() {
            *x /= g;
        }
        out.push(Some(DirKey::Small(res)));
    }
    Some(out)
}

fn big_keys(normals: &[Vec<BigInt>], points: &[Vec<BigInt>]) -> Vec<Option<DirKey>> {
    points
        .iter()
        .map(|q| {
            let mut res: Vec<BigInt> = normals
                .iter()
                .map(|nrm| nrm.iter().zip(q).map(|(a, b)| a * b).sum())
                .collect();
            let g = res.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g.is_zero() {
                return None;
            }
            let lead_negative = res
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative());
            let g = if lead_negative { -g } else { g };
            for x in res.iter_mut() {
                *x = &*x / &g;
            }
            // keep the representation canonical: small whenever it fits
            match res
                .iter()
                .map(ToPrimitive::to_i128)
                .collect::<Option<Vec<i128>>>()
            {
                Some(s) => Some(DirKey::Small(s)),
                None => Some(DirKey::Big(res)),
            }
        })
        .collect()
}

/// Residual direction of every point with respect to a flat given by its
/// normals. `None` marks points on the flat.
pub(crate) fn residual_keys(normals: &IntRows, points: &IntRows) -> Vec<Option<DirKey>> {
    if let (Some(ns), Some(ps)) = (&normals.small, &points.small) {
        if let Some(keys) = small_keys(ns, ps) {
            return keys;
        }
    }
    big_keys(&normals.big, &points.big)
}
