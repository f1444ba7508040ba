//! Weighted flat sums.
//!
//! With point weights `W(p) >= 1`, a flat weighs the sum of its points'
//! weights. For a function `F` the sum `sum_{L in F_k} F(W(L))` can also be
//! computed by projecting from each point `p`: the `k`-flats through `p`
//! correspond to the `(k-1)`-flats of the projection, and each flat's value is
//! shared among its points in proportion to their weight. Both sides are
//! computed here exactly so they can be compared.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::config::Config;
use crate::enumerate::{enumerate_spanned, Enumeration, FlatRecord};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Positive, non-increasing functions with rational values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightFn {
    /// `F(w) = 1`
    One,
    /// `F(w) = 1 / w`
    Reciprocal,
    /// `F(w) = 2` for `w <= threshold`, else `1`
    Step { threshold: Scalar },
}

impl WeightFn {
    pub fn eval(&self, w: &Scalar) -> Scalar {
        match self {
            WeightFn::One => Scalar::one(),
            WeightFn::Reciprocal => w.recip(),
            WeightFn::Step { threshold } => {
                if w <= threshold {
                    scalar::int(2)
                } else {
                    Scalar::one()
                }
            }
        }
    }
}

impl FromStr for WeightFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one" | "const-1" | "constant" => Ok(WeightFn::One),
            "reciprocal" | "inverse" => Ok(WeightFn::Reciprocal),
            _ => {
                let t = s
                    .strip_prefix("step:")
                    .ok_or_else(|| Error::UnknownWeightFn(s.to_string()))?;
                let threshold =
                    scalar::parse(t).map_err(|_| Error::UnknownWeightFn(s.to_string()))?;
                Ok(WeightFn::Step { threshold })
            }
        }
    }
}

impl fmt::Display for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFn::One => write!(f, "one"),
            WeightFn::Reciprocal => write!(f, "reciprocal"),
            WeightFn::Step { threshold } => write!(f, "step:{}", scalar::format(threshold)),
        }
    }
}

pub fn flat_weight(config: &Config, rec: &FlatRecord) -> Scalar {
    rec.incident().iter().map(|&i| config.weight(i)).sum()
}

/// `sum_{L in F_k} F(W(L))` over an existing enumeration.
pub fn weighted_sum_in(config: &Config, en: &Enumeration, k: usize, f: &WeightFn) -> Scalar {
    en.level(k)
        .iter()
        .map(|r| f.eval(&flat_weight(config, r)))
        .sum()
}

/// `sum_{L in F_k} F(W(L))`, enumerating as needed. Flats above the ambient
/// dimension contribute nothing.
pub fn weighted_sum(config: &Config, k: usize, f: &WeightFn) -> Result<Scalar> {
    if k > config.ambient_dim() {
        return Ok(Scalar::zero());
    }
    let en = enumerate_spanned(config, k)?;
    Ok(weighted_sum_in(config, &en, k, f))
}

/// The same sum regrouped by projecting from every point `p`:
/// `sum_p sum_{L in F_{k-1}(proj_p)} W(p) F(W_p(L) + W(p)) / (W_p(L) + W(p))`.
pub fn weighted_sum_via_projection(config: &Config, k: usize, f: &WeightFn) -> Result<Scalar> {
    if k < 1 {
        return Err(Error::Range {
            what: "k",
            value: k as i64,
            allowed: "k >= 1".into(),
        });
    }
    let d = config.ambient_dim();
    if k > d {
        return Ok(Scalar::zero());
    }
    let mut total = Scalar::zero();
    for p in 0..config.len() {
        let wp = config.weight(p);
        let projected = config.project_from_point(p)?.config;
        let en = enumerate_spanned(&projected, k - 1)?;
        for rec in en.level(k - 1) {
            let w = flat_weight(&projected, rec) + &wp;
            total += &wp * f.eval(&w) / w;
        }
    }
    Ok(total)
}
