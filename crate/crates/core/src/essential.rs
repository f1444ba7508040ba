//! Essential dimension and the degeneracy sequence `g_k`.
//!
//! `g_k` is the largest number of points coverable by a family of flats, each
//! of dimension at least 1, whose dimensions sum to at most `k`. The essential
//! dimension `K` is the least `k` with `g_k = n`.
//!
//! Search space: only spanned flats are considered. Any covering flat can be
//! replaced by the span of the configuration points it covers without raising
//! its dimension; a flat covering a single point is replaced by a line through
//! that point and another configuration point, which is again spanned. So
//! restricting to spanned flats loses neither coverage nor cardinality.
//!
//! The value `g_k` is found by branch and bound over combinations of flats.
//! During that phase a flat of dimension `j >= 2` is only useful if it adds at
//! least `2j + 1` new points: otherwise the points it adds can be covered by at
//! most `j` lines. The witness `G_k` is then found separately: the smallest
//! number of flats reaching `g_k`, and among those the lexicographically first
//! list in canonical flat order.

use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;

use crate::config::Config;
use crate::enumerate::{enumerate_spanned, Enumeration};
use crate::error::{Error, Result};
use crate::geometry::{span, Flat, Point};
use crate::par;

/// A family of flats (each of dimension at least 1) covering some points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    flats: Vec<Flat>,
    covered: Vec<usize>,
    total_dim: usize,
}

impl CoverWitness {
    pub fn empty() -> Self {
        CoverWitness {
            flats: Vec::new(),
            covered: Vec::new(),
            total_dim: 0,
        }
    }

    /// Builds a witness from flats, recomputing the covered points.
    pub fn from_flats(config: &Config, flats: Vec<Flat>) -> Result<Self> {
        let mut total_dim = 0;
        for f in &flats {
            if f.dim() < 1 {
                return Err(Error::Precondition(format!(
                    "cover flats need dimension >= 1, got {}",
                    f.dim()
                )));
            }
            if f.ambient_dim() != config.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    expected: config.ambient_dim(),
                    found: f.ambient_dim(),
                });
            }
            total_dim += f.dim() as usize;
        }
        let covered = (0..config.len())
            .filter(|&i| flats.iter().any(|f| f.contains(config.point(i))))
            .collect();
        Ok(CoverWitness {
            flats,
            covered,
            total_dim,
        })
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Sorted indices of the covered points.
    pub fn covered(&self) -> &[usize] {
        &self.covered
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn cardinality(&self) -> usize {
        self.flats.len()
    }
}

/// `g_0, ..., g_K` with a witness family for each.
#[derive(Clone, Debug)]
pub struct GVector {
    pub g: Vec<usize>,
    pub essential_dim: usize,
    pub witnesses: Vec<CoverWitness>,
}

impl GVector {
    pub fn n(&self) -> usize {
        self.g.last().copied().unwrap_or(0)
    }

    /// `g_k`, saturating at `n` beyond `K`.
    pub fn get(&self, k: usize) -> usize {
        self.g.get(k).copied().unwrap_or_else(|| self.n())
    }
}

#[derive(Clone, Debug)]
struct Cand {
    mask: FixedBitSet,
    dim: usize,
    mult: usize,
    flat: Flat,
}

/// Max-coverage search over the spanned flats of one configuration.
#[derive(Clone, Debug)]
pub struct CoverSearch {
    n: usize,
    /// Dimension up to which the candidate list is complete.
    max_dim: usize,
    /// Single-point configurations have no spanned line; this is the line
    /// used to cover the point.
    lone_line: Option<Flat>,
    cands: Vec<Cand>,
}

impl CoverSearch {
    pub fn new(config: &Config, en: &Enumeration) -> Self {
        let cands: Vec<Cand> = en
            .flats_in_dims(1, en.k_max())
            .map(|r| Cand {
                mask: r.mask().clone(),
                dim: r.dim() as usize,
                mult: r.multiplicity(),
                flat: r.flat().clone(),
            })
            .collect();
        // Levels above an empty level, or above a level holding the span of
        // everything, are empty as well.
        let top = en.level(en.k_max());
        let complete = en.k_max() == en.ambient_dim()
            || top.is_empty()
            || top.iter().any(|r| r.multiplicity() == config.len());
        let max_dim = if complete { usize::MAX } else { en.k_max() };
        let lone_line = (config.len() == 1 && config.ambient_dim() >= 1).then(|| {
            let p = config.point(0);
            let d = config.ambient_dim();
            let other = (0..=d)
                .map(|j| {
                    let mut c = vec![0i64; d + 1];
                    c[j] = 1;
                    Point::from_ints(&c).unwrap()
                })
                .find(|q| q != p)
                .unwrap();
            span(d, [p, &other]).unwrap()
        });
        CoverSearch {
            n: config.len(),
            max_dim,
            lone_line,
            cands,
        }
    }

    /// Enumerates everything the search can need and builds the searcher.
    pub fn for_config(config: &Config) -> Result<Self> {
        let en = enumerate_spanned(config, span_dim(config).max(0) as usize)?;
        Ok(CoverSearch::new(config, &en))
    }

    fn check_budget(&self, k: usize) -> Result<()> {
        if k > self.max_dim {
            return Err(Error::Precondition(format!(
                "cover budget {k} needs flats above the enumerated dimension {}",
                self.max_dim
            )));
        }
        Ok(())
    }

    /// Exact `g_k`.
    pub fn g(&self, k: usize) -> Result<usize> {
        self.check_budget(k)?;
        Ok(self.value(k))
    }

    fn value(&self, k: usize) -> usize {
        if k == 0 || self.n == 0 {
            return 0;
        }
        if self.n == 1 {
            return 1;
        }
        let mut pool: Vec<&Cand> = self
            .cands
            .iter()
            .filter(|c| c.dim <= k && (c.dim == 1 || c.mult > 2 * c.dim))
            .collect();
        // best points-per-dimension first
        pool.sort_by(|a, b| {
            (b.mult * a.dim)
                .cmp(&(a.mult * b.dim))
                .then(b.mult.cmp(&a.mult))
        });
        let incumbent = greedy(&pool, self.n, k);
        if incumbent == self.n {
            return incumbent;
        }
        let best = AtomicUsize::new(incumbent);
        let empty = FixedBitSet::with_capacity(self.n);
        let root = Bound::scan(&pool, 0, &empty, k);
        if (root.knapsack(k)).min(self.n) <= incumbent {
            return incumbent;
        }
        par::map_range(pool.len(), |i| {
            let c = pool[i];
            if c.dim > k {
                return;
            }
            let ctx = ValueCtx {
                pool: &pool,
                n: self.n,
                best: &best,
            };
            ctx.dfs(&c.mask, c.mult, k - c.dim, i + 1);
        });
        best.into_inner()
    }

    /// A minimum-cardinality family achieving `g_k`; ties broken by the
    /// lexicographically smallest list of flats in canonical order.
    pub fn witness(&self, k: usize) -> Result<CoverWitness> {
        self.check_budget(k)?;
        let target = self.value(k);
        if target == 0 {
            return Ok(CoverWitness::empty());
        }
        if let Some(line) = &self.lone_line {
            return Ok(CoverWitness {
                flats: vec![line.clone()],
                covered: vec![0],
                total_dim: 1,
            });
        }
        let pool: Vec<&Cand> = self.cands.iter().filter(|c| c.dim <= k).collect();
        let mut r = 1;
        loop {
            let ctx = WitnessCtx {
                pool: &pool,
                target,
            };
            let found = par::find_map_first(pool.len(), |i| {
                let c = pool[i];
                if c.dim > k {
                    return None;
                }
                let mut chosen = vec![i];
                ctx.dfs(&mut chosen, &c.mask, c.mult, k - c.dim, i + 1, r - 1)
                    .then_some(chosen)
            });
            if let Some(chosen) = found {
                let mut covered = FixedBitSet::with_capacity(self.n);
                for &i in &chosen {
                    covered.union_with(&pool[i].mask);
                }
                return Ok(CoverWitness {
                    total_dim: chosen.iter().map(|&i| pool[i].dim).sum(),
                    flats: chosen.iter().map(|&i| pool[i].flat.clone()).collect(),
                    covered: covered.ones().collect(),
                });
            }
            r += 1;
            assert!(
                r <= k,
                "no witness with at most {k} flats reaches g_{k} = {target}"
            );
        }
    }
}

/// Per-dimension best marginal gains over a candidate pool.
struct Bound {
    best: Vec<usize>,
}

impl Bound {
    /// Best marginal per dimension among eligible candidates `pool[start..]`.
    fn scan(pool: &[&Cand], start: usize, covered: &FixedBitSet, budget: usize) -> Self {
        let mut best = vec![0usize; budget + 1];
        for c in &pool[start..] {
            if c.dim > budget {
                continue;
            }
            let gain = c.mask.difference_count(covered);
            if gain > best[c.dim] && useful(c.dim, gain) {
                best[c.dim] = gain;
            }
        }
        Bound { best }
    }

    /// Optimistic gain from spending `budget`, ignoring overlaps.
    fn knapsack(&self, budget: usize) -> usize {
        let budget = budget.min(self.best.len() - 1);
        let mut table = vec![0usize; budget + 1];
        for t in 1..=budget {
            table[t] = (1..=t)
                .map(|j| self.best[j] + table[t - j])
                .max()
                .unwrap_or(0);
        }
        table[budget]
    }

    /// Optimistic gain from at most `count` more flats within `budget`.
    fn limited(&self, count: usize, budget: usize) -> usize {
        let budget = budget.min(self.best.len() - 1);
        // table[c][t]: best with c flats and budget t
        let mut prev = vec![0usize; budget + 1];
        for _ in 0..count {
            let mut cur = prev.clone();
            for t in 1..=budget {
                for j in 1..=t {
                    if self.best[j] > 0 {
                        cur[t] = cur[t].max(self.best[j] + prev[t - j]);
                    }
                }
            }
            prev = cur;
        }
        prev[budget]
    }
}

/// Whether a flat of dimension `dim` adding `gain` points can appear in an
/// optimal value-phase solution.
fn useful(dim: usize, gain: usize) -> bool {
    gain >= 1 && (dim == 1 || gain > 2 * dim)
}

fn greedy(pool: &[&Cand], n: usize, k: usize) -> usize {
    let mut covered = FixedBitSet::with_capacity(n);
    let mut count = 0;
    let mut budget = k;
    while budget > 0 {
        let pick = pool
            .iter()
            .filter(|c| c.dim <= budget)
            .map(|c| (c, c.mask.difference_count(&covered)))
            .filter(|(c, g)| useful(c.dim, *g))
            .max_by(|(a, ga), (b, gb)| (ga * b.dim).cmp(&(gb * a.dim)).then(ga.cmp(gb)));
        let Some((c, gain)) = pick else { break };
        covered.union_with(&c.mask);
        count += gain;
        budget -= c.dim;
    }
    count
}

struct ValueCtx<'a> {
    pool: &'a [&'a Cand],
    n: usize,
    best: &'a AtomicUsize,
}

impl ValueCtx<'_> {
    fn dfs(&self, covered: &FixedBitSet, count: usize, budget: usize, start: usize) {
        self.best.fetch_max(count, Ordering::Relaxed);
        if budget == 0 || count == self.n || start == self.pool.len() {
            return;
        }
        let bound = Bound::scan(self.pool, start, covered, budget);
        if (count + bound.knapsack(budget)).min(self.n) <= self.best.load(Ordering::Relaxed) {
            return;
        }
        for i in start..self.pool.len() {
            let c = self.pool[i];
            if c.dim > budget {
                continue;
            }
            let gain = c.mask.difference_count(covered);
            if !useful(c.dim, gain) {
                continue;
            }
            let rest = budget - c.dim;
            if (count + gain + bound.knapsack(rest)).min(self.n)
                <= self.best.load(Ordering::Relaxed)
            {
                continue;
            }
            let mut next = covered.clone();
            next.union_with(&c.mask);
            self.dfs(&next, count + gain, rest, i + 1);
        }
    }
}

struct WitnessCtx<'a> {
    pool: &'a [&'a Cand],
    target: usize,
}

impl WitnessCtx<'_> {
    /// Depth-first in index order, so the first hit is lexicographically least.
    fn dfs(
        &self,
        chosen: &mut Vec<usize>,
        covered: &FixedBitSet,
        count: usize,
        budget: usize,
        start: usize,
        remaining: usize,
    ) -> bool {
        if count >= self.target {
            // fewer flats than the current round cannot reach the target
            return remaining == 0;
        }
        if remaining == 0 || budget == 0 || start == self.pool.len() {
            return false;
        }
        let mut best = vec![0usize; budget + 1];
        for c in &self.pool[start..] {
            if c.dim <= budget {
                best[c.dim] = best[c.dim].max(c.mask.difference_count(covered));
            }
        }
        let bound = Bound { best };
        if count + bound.limited(remaining, budget) < self.target {
            return false;
        }
        for i in start..self.pool.len() {
            let c = self.pool[i];
            if c.dim > budget {
                continue;
            }
            let gain = c.mask.difference_count(covered);
            if gain == 0 {
                continue;
            }
            if count + gain + bound.limited(remaining - 1, budget - c.dim) < self.target {
                continue;
            }
            let mut next = covered.clone();
            next.union_with(&c.mask);
            chosen.push(i);
            if self.dfs(
                chosen,
                &next,
                count + gain,
                budget - c.dim,
                i + 1,
                remaining - 1,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Dimension of the span of all points (-1 for none).
pub fn span_dim(config: &Config) -> isize {
    span(config.ambient_dim(), config.points())
        .expect("points share the ambient dimension")
        .dim()
}

/// `K(P)` with a witness cover of total dimension `K`.
///
/// By convention `K` of the empty set is 0 and `K` of a single point is 1.
pub fn essential_dimension(config: &Config) -> Result<(usize, CoverWitness)> {
    let search = CoverSearch::for_config(config)?;
    let k = essential_dim_with(&search, config)?;
    Ok((k, search.witness(k)?))
}

fn essential_dim_with(search: &CoverSearch, config: &Config) -> Result<usize> {
    let n = config.len();
    if n == 0 {
        return Ok(0);
    }
    if config.ambient_dim() == 0 {
        return Err(Error::Precondition(
            "a point of P^0 lies on no line; essential dimension undefined".into(),
        ));
    }
    let upper = span_dim(config).max(1) as usize;
    for k in 1..upper {
        if search.g(k)? == n {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// `g_0..g_K` and the witnesses `G_0..G_K`.
pub fn g_vector(config: &Config) -> Result<GVector> {
    let search = CoverSearch::for_config(config)?;
    g_vector_with(&search, config)
}

pub fn g_vector_with(search: &CoverSearch, config: &Config) -> Result<GVector> {
    let k_ess = essential_dim_with(search, config)?;
    let mut g = Vec::with_capacity(k_ess + 1);
    let mut witnesses = Vec::with_capacity(k_ess + 1);
    for k in 0..=k_ess {
        let w = search.witness(k)?;
        g.push(w.covered().len());
        witnesses.push(w);
    }
    Ok(GVector {
        g,
        essential_dim: k_ess,
        witnesses,
    })
}

/// True iff every sub-family `A` of the witness with `|A| >= 2` satisfies
/// `sum_{G in A} dim(G ∩ probe) < dim(probe)`.
pub fn check_g_minimality(witness: &CoverWitness, probe: &Flat) -> Result<bool> {
    if witness.cardinality() < 2 {
        return Ok(true);
    }
    let mut dims = witness
        .flats()
        .iter()
        .map(|f| f.meet_dim(probe))
        .collect::<Result<Vec<isize>>>()?;
    dims.sort_unstable_by(|a, b| b.cmp(a));
    // the largest sum over |A| >= 2: the two largest terms plus every other
    // non-negative one
    let worst: isize = dims[0] + dims[1] + dims[2..].iter().map(|&x| x.max(0)).sum::<isize>();
    Ok(worst < probe.dim())
}

/// Both sides of the projection inequalities for one `(k, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub k: usize,
    pub p: usize,
    /// `|A|`, the points covered by `G_k`.
    pub covered: usize,
    /// `|proj_p(A)|`
    pub projected: usize,
    /// `(i, g_i(proj_p(A)), g_i(A))` for `0 <= i < k`.
    pub rows: Vec<(usize, usize, usize)>,
}

impl DegeneracyReport {
    pub fn slack(&self) -> usize {
        self.k * self.k
    }

    /// `g_i(proj_p(A)) <= g_i(A) + k^2` for every row.
    pub fn degeneracy_holds(&self) -> bool {
        self.rows.iter().all(|&(_, gp, ga)| gp <= ga + self.slack())
    }

    /// `|proj_p(A)| >= |A| - k^2`.
    pub fn size_holds(&self) -> bool {
        self.projected + self.slack() >= self.covered
    }

    pub fn holds(&self) -> bool {
        self.degeneracy_holds() && self.size_holds()
    }
}

/// Checks how projecting the points covered by `G_k` from a point `p` outside
/// them changes their degeneracy. Requires `k < K` and `p` not covered.
pub fn projection_degeneracy_check(
    config: &Config,
    k: usize,
    p: usize,
) -> Result<DegeneracyReport> {
    let gv = g_vector(config)?;
    if k >= gv.essential_dim {
        return Err(Error::Precondition(format!(
            "k = {k} must be below the essential dimension {}",
            gv.essential_dim
        )));
    }
    projection_degeneracy_with(config, &gv.witnesses[k], k, p)
}

/// As [`projection_degeneracy_check`], reusing a computed `G_k`.
pub fn projection_degeneracy_with(
    config: &Config,
    witness: &CoverWitness,
    k: usize,
    p: usize,
) -> Result<DegeneracyReport> {
    if p >= config.len() {
        return Err(Error::Precondition(format!("point index {p} out of range")));
    }
    if witness.covered().contains(&p) {
        return Err(Error::Precondition(format!(
            "point {p} is covered by the witness"
        )));
    }
    let a = config.subset(witness.covered())?.without_origin();
    let center = Flat::of_point(config.point(p));
    let projected = a.project(&center)?.config;
    let rows = if k == 0 {
        Vec::new()
    } else {
        let limit_a = (k - 1).min(a.ambient_dim());
        let limit_p = (k - 1).min(projected.ambient_dim());
        let search_a = CoverSearch::new(&a, &enumerate_spanned(&a, limit_a)?);
        let search_p = CoverSearch::new(&projected, &enumerate_spanned(&projected, limit_p)?);
        (0..k)
            .map(|i| Ok((i, search_p.g(i)?, search_a.g(i)?)))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(DegeneracyReport {
        k,
        p,
        covered: a.len(),
        projected: projected.len(),
        rows,
    })
}
