//! Enumeration of the flats spanned by a configuration.
//!
//! Flats are generated rank by rank: every spanned `(k+1)`-flat contains a
//! spanned `k`-flat, so the `(k+1)`-flats are exactly the spans of a spanned
//! `k`-flat with one more configuration point. For a fixed `k`-flat the
//! extensions are found in one pass by grouping the remaining points by the
//! direction of their residual modulo the flat (see [`crate::intvec`]).
//!
//! A spanned flat is the span of the points it contains, so its incident
//! point set identifies it; deduplication is keyed on that bitset.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::config::{Config, Origin};
use crate::error::{Error, Result};
use crate::geometry::Flat;
use crate::intvec::{self, IntRows};
use crate::par;

/// A spanned flat together with the configuration points lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatRecord {
    flat: Flat,
    incident: Vec<usize>,
    mask: FixedBitSet,
}

impl FlatRecord {
    pub(crate) fn new(flat: Flat, mask: FixedBitSet) -> Self {
        let incident = mask.ones().collect();
        FlatRecord {
            flat,
            incident,
            mask,
        }
    }

    pub fn flat(&self) -> &Flat {
        &self.flat
    }

    pub fn dim(&self) -> isize {
        self.flat.dim()
    }

    /// Sorted indices of the configuration points on the flat.
    pub fn incident(&self) -> &[usize] {
        &self.incident
    }

    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask.contains(i)
    }

    pub(crate) fn mask(&self) -> &FixedBitSet {
        &self.mask
    }
}

/// Spanned flats of a configuration, by dimension `0..=k_max`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    ambient: usize,
    n: usize,
    levels: Vec<Vec<FlatRecord>>,
}

impl Enumeration {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.levels.len() - 1
    }

    /// The spanned `k`-flats in canonical order. Empty beyond `k_max`.
    pub fn level(&self, k: usize) -> &[FlatRecord] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    /// `f_k`, with `f_{-1} = 1`.
    pub fn count(&self, k: isize) -> u64 {
        match k {
            -1 => 1,
            k if k < -1 => 0,
            k => self.level(k as usize).len() as u64,
        }
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &[FlatRecord])> {
        self.levels
            .iter()
            .enumerate()
            .map(|(k, l)| (k, l.as_slice()))
    }

    /// All spanned flats with dimension in `lo..=hi`.
    pub fn flats_in_dims(&self, lo: usize, hi: usize) -> impl Iterator<Item = &FlatRecord> {
        (lo..=hi.min(self.k_max())).flat_map(move |k| self.level(k).iter())
    }
}

/// Enumerates every spanned `k`-flat for `0 <= k <= k_max`.
pub fn enumerate_spanned(config: &Config, k_max: usize) -> Result<Enumeration> {
    let d = config.ambient_dim();
    if k_max > d {
        return Err(Error::Range {
            what: "k_max",
            value: k_max as i64,
            allowed: format!("0..={d}"),
        });
    }
    let n = config.len();
    let coords: Vec<_> = config
        .points()
        .iter()
        .map(|p| p.coords().to_vec())
        .collect();
    let ints = IntRows::from_rational(&coords);

    let level0 = config
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut mask = FixedBitSet::with_capacity(n);
            mask.insert(i);
            FlatRecord::new(Flat::of_point(p), mask)
        })
        .collect::<Vec<_>>();
    let mut levels = vec![level0];

    for _ in 0..k_max {
        let next = extend_level(config, &ints, levels.last().unwrap());
        levels.push(next);
    }
    Ok(Enumeration {
        ambient: d,
        n,
        levels,
    })
}

fn extend_level(config: &Config, ints: &IntRows, current: &[FlatRecord]) -> Vec<FlatRecord> {
    let n = config.len();
    // per flat: (mask of the extension, representative point)
    let per_flat: Vec<Vec<(FixedBitSet, usize)>> = par::map(current, |rec| {
        let normals = rec.flat.normals();
        if normals.is_empty() {
            return Vec::new();
        }
        let normals = IntRows::from_rational(&normals);
        debug_assert_eq!(ints.len(), n);
        let keys = intvec::residual_keys(&normals, ints);
        let mut groups: HashMap<intvec::DirKey, FixedBitSet> = HashMap::new();
        let mut reps: HashMap<intvec::DirKey, usize> = HashMap::new();
        for (i, key) in keys.into_iter().enumerate() {
            let Some(key) = key else { continue };
            reps.entry(key.clone()).or_insert(i);
            groups
                .entry(key)
                .or_insert_with(|| rec.mask.clone())
                .insert(i);
        }
        groups
            .into_iter()
            .map(|(key, mask)| {
                let rep = reps[&key];
                (mask, rep)
            })
            .collect()
    });

    let mut unique: HashMap<FixedBitSet, (usize, usize)> = HashMap::new();
    for (parent, exts) in per_flat.into_iter().enumerate() {
        for (mask, rep) in exts {
            unique
                .entry(mask)
                .and_modify(|e| *e = (*e).min((parent, rep)))
                .or_insert((parent, rep));
        }
    }
    let unique: Vec<(FixedBitSet, (usize, usize))> = unique.into_iter().collect();
    let mut next = par::map(&unique, |(mask, (parent, rep))| {
        let flat = current[*parent]
            .flat
            .join_point(config.point(*rep))
            .expect("ambient dimensions agree");
        FlatRecord::new(flat, mask.clone())
    });
    next.sort_by(|a, b| a.flat.cmp(&b.flat));
    next
}

/// Number of point-flat incidences `I(Q, F)` over a set of spanned flats.
pub fn incidences<'a>(flats: impl IntoIterator<Item = &'a FlatRecord>) -> u64 {
    flats.into_iter().map(|r| r.multiplicity() as u64).sum()
}

/// Counts of spanned flats through / not through the designated origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OriginSplit {
    pub through: u64,
    pub off: u64,
}

/// The f-vector `(f_{-1}, f_0, ..., f_d)` with multiplicity histograms.
///
/// For `k = 0` the origin split follows the convention that no point counts
/// as "through the origin": `through = 0` and `off` is the number of points
/// other than the origin itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub n: usize,
    pub ambient: usize,
    /// `counts[k + 1] = f_k` for `k = -1..=k_max`.
    pub counts: Vec<u64>,
    /// `histograms[k]` maps multiplicity `c` to `f_k^{=c}`.
    pub histograms: Vec<BTreeMap<usize, u64>>,
    pub origin_split: Option<Vec<OriginSplit>>,
}

impl FVector {
    pub fn from_enumeration(config: &Config, en: &Enumeration) -> Self {
        let counts = (-1..=en.k_max() as isize).map(|k| en.count(k)).collect();
        let histograms = en
            .levels()
            .map(|(_, flats)| {
                let mut h = BTreeMap::new();
                for r in flats {
                    *h.entry(r.multiplicity()).or_insert(0) += 1;
                }
                h
            })
            .collect();
        let origin_split = config.origin().map(|origin| {
            let o = config.origin_point().unwrap();
            en.levels()
                .map(|(k, flats)| {
                    if k == 0 {
                        let member = matches!(origin, Origin::Index(_)) as u64;
                        return OriginSplit {
                            through: 0,
                            off: flats.len() as u64 - member,
                        };
                    }
                    let through = match origin {
                        Origin::Index(i) => flats.iter().filter(|r| r.contains_index(*i)).count(),
                        Origin::Point(_) => flats.iter().filter(|r| r.flat.contains(o)).count(),
                    } as u64;
                    OriginSplit {
                        through,
                        off: flats.len() as u64 - through,
                    }
                })
                .collect()
        });
        FVector {
            n: config.len(),
            ambient: config.ambient_dim(),
            counts,
            histograms,
            origin_split,
        }
    }

    pub fn k_max(&self) -> usize {
        self.counts.len() - 2
    }

    /// `f_k`; zero outside the enumerated range (and `f_{-1} = 1`).
    pub fn f(&self, k: isize) -> u64 {
        if k < -1 {
            return 0;
        }
        self.counts.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn exactly(&self, k: usize, c: usize) -> u64 {
        self.histograms
            .get(k)
            .and_then(|h| h.get(&c))
            .copied()
            .unwrap_or(0)
    }

    pub fn at_least(&self, k: usize, c: usize) -> u64 {
        self.histograms
            .get(k)
            .map_or(0, |h| h.range(c..).map(|(_, v)| v).sum())
    }

    pub fn at_most(&self, k: usize, c: usize) -> u64 {
        self.histograms
            .get(k)
            .map_or(0, |h| h.range(..=c).map(|(_, v)| v).sum())
    }

    pub fn through_origin(&self, k: usize) -> Option<u64> {
        Some(self.origin_split.as_ref()?.get(k).map_or(0, |s| s.through))
    }

    pub fn off_origin(&self, k: usize) -> Option<u64> {
        Some(self.origin_split.as_ref()?.get(k).map_or(0, |s| s.off))
    }
}

/// Full f-vector of a configuration, enumerating up to the ambient dimension.
pub fn f_vector(config: &Config) -> Result<FVector> {
    let en = enumerate_spanned(config, config.ambient_dim())?;
    Ok(FVector::from_enumeration(config, &en))
}
