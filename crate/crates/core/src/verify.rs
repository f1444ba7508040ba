//! Exact claim checks. Every status comes from integer or rational
//! comparisons; `NotApplicable` is only used when a hypothesis fails.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;
use crate::constructions::raise;
use crate::enumerate::{enumerate_spanned, f_vector, Enumeration, FVector};
use crate::error::{Error, Result};
use crate::essential::{
    check_g_minimality, projection_degeneracy_with, span_dim, CoverSearch, CoverWitness,
};
use crate::scalar::{self, Scalar};
use crate::weighted::{weighted_sum_in, weighted_sum_via_projection, WeightFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }
}

/// Outcome of one claim check. The runtime is kept out of the serialised
/// form so reports stay byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: Status,
    pub details: BTreeMap<String, Value>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl ClaimReport {
    fn new(id: &str, status: Status, details: BTreeMap<String, Value>) -> Self {
        ClaimReport {
            claim_id: id.to_string(),
            status,
            details,
            runtime_ms: 0,
        }
    }

    fn na(id: &str, reason: impl Into<String>) -> Self {
        let mut d = BTreeMap::new();
        d.insert("reason".into(), json!(reason.into()));
        ClaimReport::new(id, Status::NotApplicable, d)
    }
}

fn timed(f: impl FnOnce() -> Result<ClaimReport>) -> Result<ClaimReport> {
    let start = Instant::now();
    let mut r = f()?;
    r.runtime_ms = start.elapsed().as_millis();
    Ok(r)
}

/// Claim identifiers accepted by [`run_claim`].
pub const CLAIMS: &[&str] = &[
    "flat-count-drop",
    "debruijn-erdos",
    "weighted-monotone",
    "projection-rewrite",
    "contained-flats",
    "witness-minimality",
    "projection-degeneracy",
    "partition-bound",
    "log-concavity",
    "expected-stats",
];

/// The degeneracy sequence as far as it was computed.
#[derive(Clone, Debug)]
pub struct Degeneracy {
    /// `g_0..g_t` with `t = min(K, kmax)`.
    pub g: Vec<usize>,
    pub witnesses: Vec<CoverWitness>,
    /// `None` when `K` exceeds the enumeration depth.
    pub essential_dim: Option<usize>,
}

/// Everything about one configuration that claims are checked against,
/// computed once and shared.
pub struct Facts {
    pub config: Config,
    pub enumeration: Enumeration,
    pub fvector: FVector,
    /// Whether the enumeration reaches every spanned flat.
    pub complete: bool,
    degeneracy: OnceLock<Result<Degeneracy>>,
}

impl Facts {
    /// Enumerates up to `kmax` (default: the ambient dimension).
    pub fn new(config: Config, kmax: Option<usize>) -> Result<Self> {
        let d = config.ambient_dim();
        let depth = kmax.map_or(d, |k| k.min(d));
        let enumeration = enumerate_spanned(&config, depth)?;
        let fvector = FVector::from_enumeration(&config, &enumeration);
        let complete = depth as isize >= span_dim(&config);
        Ok(Facts {
            config,
            enumeration,
            fvector,
            complete,
            degeneracy: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.config.len()
    }

    pub fn degeneracy(&self) -> Result<&Degeneracy> {
        self.degeneracy
            .get_or_init(|| self.compute_degeneracy())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_degeneracy(&self) -> Result<Degeneracy> {
        let n = self.n();
        if n > 0 && self.config.ambient_dim() == 0 {
            return Err(Error::Precondition(
                "a point of P^0 lies on no line; essential dimension undefined".into(),
            ));
        }
        let search = CoverSearch::new(&self.config, &self.enumeration);
        let limit = if self.complete {
            usize::MAX
        } else {
            self.enumeration.k_max()
        };
        let mut g = Vec::new();
        let mut witnesses = Vec::new();
        let mut essential_dim = None;
        let mut k = 0;
        loop {
            let w = search.witness(k)?;
            g.push(w.covered().len());
            witnesses.push(w);
            if g[k] == n && (k >= 1 || n == 0) {
                essential_dim = Some(k);
                break;
            }
            if k == limit {
                break;
            }
            k += 1;
        }
        Ok(Degeneracy {
            g,
            witnesses,
            essential_dim,
        })
    }

    fn essential(&self) -> Result<Option<usize>> {
        Ok(self.degeneracy()?.essential_dim)
    }
}

/// `f_{k-1} > f_k` or `f_{k-1} = f_k = 0`, for `k >= K` (default `k = K`).
pub fn flat_count_drop(facts: &Facts, k: Option<usize>) -> Result<ClaimReport> {
    const ID: &str = "flat-count-drop";
    timed(|| {
        let Some(ess) = facts.essential()? else {
            return Ok(ClaimReport::na(
                ID,
                "essential dimension above the enumeration depth",
            ));
        };
        let k = k.unwrap_or(ess);
        if k < ess {
            return Ok(ClaimReport::na(ID, format!("k = {k} is below K = {ess}")));
        }
        if k == 0 {
            return Ok(ClaimReport::na(ID, "k = 0"));
        }
        if k > facts.enumeration.k_max() && !facts.complete {
            return Ok(ClaimReport::na(ID, "k above the enumeration depth"));
        }
        let (lo, hi) = (facts.fvector.f(k as isize - 1), facts.fvector.f(k as isize));
        let mut d = BTreeMap::new();
        d.insert("k".into(), json!(k));
        d.insert("K".into(), json!(ess));
        d.insert("f_k_minus_1".into(), json!(lo));
        d.insert("f_k".into(), json!(hi));
        Ok(ClaimReport::new(
            ID,
            Status::from_bool(lo > hi || (lo == 0 && hi == 0)),
            d,
        ))
    })
}

/// `f_1 >= n` unless all points are collinear; equality forces a near pencil.
pub fn debruijn_erdos(facts: &Facts) -> Result<ClaimReport> {
    const ID: &str = "debruijn-erdos";
    timed(|| {
        let n = facts.n();
        if n < 2 {
            return Ok(ClaimReport::na(ID, "fewer than two points"));
        }
        if facts.enumeration.k_max() < 1 {
            return Ok(ClaimReport::na(ID, "lines not enumerated"));
        }
        let lines = facts.enumeration.level(1);
        let f1 = lines.len();
        let collinear = f1 == 1;
        let richest = lines.iter().map(|r| r.multiplicity()).max().unwrap_or(0);
        let near_pencil = richest + 1 == n;
        let equality = f1 == n;
        let ok = (f1 >= n || collinear) && (!equality || near_pencil);
        let mut d = BTreeMap::new();
        d.insert("n".into(), json!(n));
        d.insert("f_1".into(), json!(f1));
        d.insert("collinear".into(), json!(collinear));
        d.insert("equality".into(), json!(equality));
        d.insert("near_pencil".into(), json!(near_pencil));
        Ok(ClaimReport::new(ID, Status::from_bool(ok), d))
    })
}

/// `sum_{F_k} F(W) < sum_{F_{k-1}} F(W)` for `k >= K` with `f_k >= 1`.
pub fn weighted_monotone(facts: &Facts, k: Option<usize>, f: &WeightFn) -> Result<ClaimReport> {
    const ID: &str = "weighted-monotone";
    timed(|| {
        let Some(ess) = facts.essential()? else {
            return Ok(ClaimReport::na(
                ID,
                "essential dimension above the enumeration depth",
            ));
        };
        let k = k.unwrap_or(ess);
        if k < ess || k == 0 {
            return Ok(ClaimReport::na(ID, format!("k = {k} with K = {ess}")));
        }
        if k > facts.enumeration.k_max() || facts.fvector.f(k as isize) == 0 {
            return Ok(ClaimReport::na(ID, format!("no spanned {k}-flats")));
        }
        let hi = weighted_sum_in(&facts.config, &facts.enumeration, k, f);
        let lo = weighted_sum_in(&facts.config, &facts.enumeration, k - 1, f);
        let mut d = BTreeMap::new();
        d.insert("k".into(), json!(k));
        d.insert("function".into(), json!(f.to_string()));
        d.insert("sum_k".into(), json!(scalar::format(&hi)));
        d.insert("sum_k_minus_1".into(), json!(scalar::format(&lo)));
        Ok(ClaimReport::new(ID, Status::from_bool(hi < lo), d))
    })
}

/// The weighted k-flat sum equals its regrouping by projections from points.
pub fn projection_rewrite(facts: &Facts, k: usize, f: &WeightFn) -> Result<ClaimReport> {
    const ID: &str = "projection-rewrite";
    timed(|| {
        if k == 0 {
            return Ok(ClaimReport::na(ID, "k must be at least 1"));
        }
        if k > facts.enumeration.k_max() && !facts.complete {
            return Ok(ClaimReport::na(ID, "k above the enumeration depth"));
        }
        let direct = if k > facts.enumeration.k_max() {
            Scalar::zero()
        } else {
            weighted_sum_in(&facts.config, &facts.enumeration, k, f)
        };
        let regrouped = weighted_sum_via_projection(&facts.config, k, f)?;
        let mut d = BTreeMap::new();
        d.insert("k".into(), json!(k));
        d.insert("function".into(), json!(f.to_string()));
        d.insert("direct".into(), json!(scalar::format(&direct)));
        d.insert("via_projection".into(), json!(scalar::format(&regrouped)));
        Ok(ClaimReport::new(
            ID,
            Status::from_bool(direct == regrouped),
            d,
        ))
    })
}

/// Every spanned k-flat with `K <= k <= d` contains at least `k + 1 - K`
/// flats of the witness `G_K`.
pub fn contained_flats(facts: &Facts) -> Result<ClaimReport> {
    const ID: &str = "contained-flats";
    timed(|| {
        let deg = facts.degeneracy()?;
        let Some(ess) = deg.essential_dim else {
            return Ok(ClaimReport::na(
                ID,
                "essential dimension above the enumeration depth",
            ));
        };
        let cover = &deg.witnesses[ess];
        let mut checked = 0u64;
        let mut min_slack: Option<i64> = None;
        let mut violations = 0u64;
        for k in ess.max(1)..=facts.enumeration.k_max() {
            for r in facts.enumeration.level(k) {
                let inside = cover
                    .flats()
                    .iter()
                    .filter(|g| r.flat().contains_flat(g))
                    .count() as i64;
                let slack = inside - (k as i64 + 1 - ess as i64);
                checked += 1;
                min_slack = Some(min_slack.map_or(slack, |m| m.min(slack)));
                violations += u64::from(slack < 0);
            }
        }
        let mut d = BTreeMap::new();
        d.insert("K".into(), json!(ess));
        d.insert("flats_checked".into(), json!(checked));
        d.insert("min_slack".into(), json!(min_slack));
        d.insert("violations".into(), json!(violations));
        Ok(ClaimReport::new(ID, Status::from_bool(violations == 0), d))
    })
}

/// Each computed `G_k` has total dimension at most `k`, covers `g_k` points,
/// and passes the minimality inequality against every spanned probe.
pub fn witness_minimality(facts: &Facts) -> Result<ClaimReport> {
    const ID: &str = "witness-minimality";
    timed(|| {
        let deg = facts.degeneracy()?;
        let probes: Vec<_> = facts
            .enumeration
            .flats_in_dims(0, facts.enumeration.k_max())
            .collect();
        let mut invariant_failures = Vec::new();
        let mut probe_failures = 0u64;
        let mut pairs = 0u64;
        for (k, w) in deg.witnesses.iter().enumerate() {
            if w.total_dim() > k || w.covered().len() != deg.g[k] {
                invariant_failures.push(k);
            }
            if w.cardinality() < 2 {
                continue;
            }
            for r in &probes {
                pairs += 1;
                if !check_g_minimality(w, r.flat())? {
                    probe_failures += 1;
                }
            }
        }
        let mut d = BTreeMap::new();
        d.insert("witnesses".into(), json!(deg.witnesses.len()));
        d.insert("probes".into(), json!(probes.len()));
        d.insert("pairs_checked".into(), json!(pairs));
        d.insert("probe_failures".into(), json!(probe_failures));
        d.insert("invariant_failures".into(), json!(invariant_failures));
        let ok = probe_failures == 0 && invariant_failures.is_empty();
        Ok(ClaimReport::new(ID, Status::from_bool(ok), d))
    })
}

/// For every `k < K` and every point `p` outside `A = cover(G_k)`:
/// `g_i(proj_p A) <= g_i(A) + k^2` for `i < k`, and `|proj_p A| >= |A| - k^2`.
pub fn projection_degeneracy(facts: &Facts) -> Result<ClaimReport> {
    const ID: &str = "projection-degeneracy";
    timed(|| {
        let deg = facts.degeneracy()?;
        let Some(ess) = deg.essential_dim else {
            return Ok(ClaimReport::na(
                ID,
                "essential dimension above the enumeration depth",
            ));
        };
        let mut cases = 0u64;
        let mut failures = Vec::new();
        let mut min_size_slack: Option<i64> = None;
        let mut min_g_slack: Option<i64> = None;
        for k in 1..ess {
            let w = &deg.witnesses[k];
            for p in 0..facts.n() {
                if w.covered().binary_search(&p).is_ok() {
                    continue;
                }
                let rep = projection_degeneracy_with(&facts.config, w, k, p)?;
                cases += 1;
                let s = rep.projected as i64 + rep.slack() as i64 - rep.covered as i64;
                min_size_slack = Some(min_size_slack.map_or(s, |m| m.min(s)));
                for &(_, gp, ga) in &rep.rows {
                    let s = (ga + rep.slack()) as i64 - gp as i64;
                    min_g_slack = Some(min_g_slack.map_or(s, |m| m.min(s)));
                }
                if !rep.holds() {
                    failures.push(json!({"k": k, "p": p}));
                }
            }
        }
        let mut d = BTreeMap::new();
        d.insert("K".into(), json!(ess));
        d.insert("cases".into(), json!(cases));
        d.insert("min_size_slack".into(), json!(min_size_slack));
        d.insert("min_degeneracy_slack".into(), json!(min_g_slack));
        let ok = failures.is_empty();
        d.insert("failures".into(), Value::Array(failures));
        Ok(ClaimReport::new(ID, Status::from_bool(ok), d))
    })
}

/// `f_k(P) <= sum_{i=-1}^{k} f_i(P_1) f_{k-i-1}(P_2)` for a split of `P`.
pub fn partition_bound(config: &Config, part: &FixedBitSet, k: usize) -> Result<ClaimReport> {
    const ID: &str = "partition-bound";
    timed(|| {
        let d = config.ambient_dim();
        if k > d {
            return Ok(ClaimReport::na(
                ID,
                format!("k = {k} exceeds the dimension {d}"),
            ));
        }
        let (first, second): (Vec<usize>, Vec<usize>) =
            (0..config.len()).partition(|&i| part.contains(i));
        let whole = enumerate_spanned(config, k)?.count(k as isize);
        let f1 = f_vector(&config.subset(&first)?)?;
        let f2 = f_vector(&config.subset(&second)?)?;
        let bound: u128 = (-1..=k as isize)
            .map(|i| f1.f(i) as u128 * f2.f(k as isize - i - 1) as u128)
            .sum();
        let mut det = BTreeMap::new();
        det.insert("k".into(), json!(k));
        det.insert("part_sizes".into(), json!([first.len(), second.len()]));
        det.insert("f_k".into(), json!(whole));
        det.insert("bound".into(), json!(bound.to_string()));
        Ok(ClaimReport::new(
            ID,
            Status::from_bool(whole as u128 <= bound),
            det,
        ))
    })
}

/// Even/odd index split used when no partition is given.
pub fn default_partition(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for i in (0..n).step_by(2) {
        s.insert(i);
    }
    s
}

/// Reports `f_k^2 / (f_{k-1} f_{k+1})`; informational, always passes.
pub fn log_concavity(facts: &Facts) -> Result<ClaimReport> {
    const ID: &str = "log-concavity";
    timed(|| {
        let fv = &facts.fvector;
        let mut ratios = BTreeMap::new();
        for k in 1..fv.k_max() as isize {
            let (a, b, c) = (fv.f(k - 1), fv.f(k), fv.f(k + 1));
            if a > 0 && c > 0 {
                let r = Scalar::new(
                    (b as i128 * b as i128).into(),
                    (a as i128 * c as i128).into(),
                );
                ratios.insert(k.to_string(), json!(scalar::format(&r)));
            }
        }
        let mut d = BTreeMap::new();
        d.insert("ratios".into(), json!(ratios));
        d.insert("informational".into(), json!(true));
        Ok(ClaimReport::new(ID, Status::Pass, d))
    })
}

/// Axis points used when an expectation refers to the raised configuration.
pub fn raise_size(n: usize) -> usize {
    (3 * n).max(2)
}

fn stat_value(facts: &Facts, name: &str) -> Result<Option<i64>> {
    let fv = &facts.fvector;
    let parse_k = |s: &str| s.parse::<usize>().ok();
    if name == "n" {
        return Ok(Some(facts.n() as i64));
    }
    if name == "K" {
        return Ok(facts.essential()?.map(|k| k as i64));
    }
    if let Some(rest) = name.strip_prefix("raised_n_minus_g") {
        let Some(k) = parse_k(rest) else {
            return Ok(None);
        };
        let raised = raise(&facts.config, raise_size(facts.n()))?.config;
        let search = CoverSearch::for_config(&raised)?;
        let g = search.g(k.min(span_dim(&raised).max(0) as usize))?;
        return Ok(Some((raised.len() - g) as i64));
    }
    if let Some(rest) = name.strip_prefix("n_minus_g") {
        let Some(k) = parse_k(rest) else {
            return Ok(None);
        };
        let deg = facts.degeneracy()?;
        return Ok(deg
            .g
            .get(k)
            .map(|g| (facts.n() - g) as i64)
            .or(deg.essential_dim.map(|_| 0)));
    }
    if let Some(rest) = name.strip_prefix('g') {
        let Some(k) = parse_k(rest) else {
            return Ok(None);
        };
        let deg = facts.degeneracy()?;
        return Ok(deg
            .g
            .get(k)
            .copied()
            .or(deg.essential_dim.map(|_| facts.n()))
            .map(|g| g as i64));
    }
    if let Some(rest) = name.strip_prefix('f') {
        let (k, suffix) = match rest.split_once('_') {
            Some((k, s)) => (k, Some(s)),
            None => (rest, None),
        };
        let Some(k) = parse_k(k) else { return Ok(None) };
        if k > fv.k_max() {
            return Ok(None);
        }
        return Ok(match suffix {
            None => Some(fv.f(k as isize) as i64),
            Some("off") => fv.off_origin(k).map(|v| v as i64),
            Some("through") => fv.through_origin(k).map(|v| v as i64),
            Some(_) => None,
        });
    }
    Ok(None)
}

/// Compares `expect <stat> <value>` lines from a configuration file.
///
/// Statistics: `n`, `K`, `f<k>`, `f<k>_off`, `f<k>_through`, `g<k>`,
/// `n_minus_g<k>`, and `raised_n_minus_g<k>` (after raising with
/// [`raise_size`] axis points). A file without points is a placeholder and
/// reports not-applicable.
pub fn expected_stats(facts: &Facts, expectations: &BTreeMap<String, i64>) -> Result<ClaimReport> {
    const ID: &str = "expected-stats";
    timed(|| {
        if expectations.is_empty() {
            return Ok(ClaimReport::na(ID, "no expectations given"));
        }
        if facts.n() == 0 {
            return Ok(ClaimReport::na(ID, "placeholder without coordinates"));
        }
        let mut d = BTreeMap::new();
        let mut ok = true;
        for (name, &want) in expectations {
            let got = stat_value(facts, name)?;
            ok &= got == Some(want);
            d.insert(name.clone(), json!({"expected": want, "actual": got}));
        }
        Ok(ClaimReport::new(ID, Status::from_bool(ok), d))
    })
}

/// Options for [`run_claim`].
#[derive(Clone, Debug, Default)]
pub struct ClaimOptions {
    pub k: Option<usize>,
    pub function: Option<WeightFn>,
    pub expectations: BTreeMap<String, i64>,
}

pub fn run_claim(id: &str, facts: &Facts, opts: &ClaimOptions) -> Result<ClaimReport> {
    let f = opts.function.clone().unwrap_or(WeightFn::One);
    match id {
        "flat-count-drop" => flat_count_drop(facts, opts.k),
        "debruijn-erdos" => debruijn_erdos(facts),
        "weighted-monotone" => weighted_monotone(facts, opts.k, &f),
        "projection-rewrite" => projection_rewrite(facts, opts.k.unwrap_or(1), &f),
        "contained-flats" => contained_flats(facts),
        "witness-minimality" => witness_minimality(facts),
        "projection-degeneracy" => projection_degeneracy(facts),
        "partition-bound" => {
            let k = opts.k.unwrap_or(1.min(facts.config.ambient_dim()));
            partition_bound(&facts.config, &default_partition(facts.n()), k)
        }
        "log-concavity" => log_concavity(facts),
        "expected-stats" => expected_stats(facts, &opts.expectations),
        _ => Err(Error::Precondition(format!(
            "unknown claim `{id}`; known: {}",
            CLAIMS.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{collinear, near_pencil, skew_lines};

    fn facts(c: Config) -> Facts {
        Facts::new(c, None).unwrap()
    }

    #[test]
    fn drop_on_examples() {
        let r = flat_count_drop(&facts(collinear(5, 2).unwrap()), Some(1)).unwrap();
        assert_eq!(r.status, Status::Pass);
        let f = facts(skew_lines(4, 2, 3).unwrap());
        let r = flat_count_drop(&f, None).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.details["f_k_minus_1"], json!(18));
        assert_eq!(r.details["f_k"], json!(8));
        let r = flat_count_drop(&f, Some(1)).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
    }

    #[test]
    fn near_pencil_equality() {
        let r = debruijn_erdos(&facts(near_pencil(6).unwrap())).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.details["f_1"], json!(6));
        assert_eq!(r.details["equality"], json!(true));
        assert_eq!(r.details["near_pencil"], json!(true));
    }

    #[test]
    fn reciprocal_monotone_on_skew_lines() {
        let f = facts(skew_lines(4, 2, 3).unwrap());
        let r = weighted_monotone(&f, Some(2), &WeightFn::Reciprocal).unwrap();
        assert_eq!(r.status, Status::Pass);
        // 18 lines: 16 of weight 2, 2 of weight 4; 8 planes of weight 5
        assert_eq!(r.details["sum_k_minus_1"], json!("17/2"));
        assert_eq!(r.details["sum_k"], json!("8/5"));
    }

    #[test]
    fn structural_checks_pass() {
        for c in [skew_lines(3, 2, 3).unwrap(), near_pencil(5).unwrap()] {
            let f = facts(c);
            for id in CLAIMS {
                let r = run_claim(id, &f, &ClaimOptions::default()).unwrap();
                assert_ne!(r.status, Status::Fail, "{id}: {:?}", r.details);
            }
        }
    }

    #[test]
    fn log_concavity_ratio() {
        let r = log_concavity(&facts(skew_lines(4, 2, 3).unwrap())).unwrap();
        assert_eq!(r.details["ratios"]["1"], json!("81/16"));
    }

    #[test]
    fn expectations() {
        let f = facts(skew_lines(4, 2, 3).unwrap());
        let mut ex = BTreeMap::new();
        ex.insert("f1".to_string(), 18);
        ex.insert("K".to_string(), 2);
        ex.insert("n_minus_g1".to_string(), 4);
        assert_eq!(expected_stats(&f, &ex).unwrap().status, Status::Pass);
        ex.insert("f2".to_string(), 9);
        assert_eq!(expected_stats(&f, &ex).unwrap().status, Status::Fail);
    }

    #[test]
    fn shallow_enumeration_leaves_k_open() {
        let f = Facts::new(skew_lines(3, 3, 5).unwrap(), Some(2)).unwrap();
        let deg = f.degeneracy().unwrap();
        assert_eq!(deg.essential_dim, None);
        assert_eq!(deg.g, vec![0, 3, 6]);
    }
}
