//! Explicit configurations: skew lines, hypercubes, cross-polytopes, near
//! pencils, and the raise-dimension combinator `P = S ∪ L`.
//!
//! Raising takes a base `S` in `P^d` with a designated affine origin `o`,
//! embeds it in the hyperplane `x_1 = 0` of `P^{d+1}` (a new coordinate is
//! inserted after the homogenising one), and adds `m` points `o + i e_1`,
//! `i = 1..m`, on the axis line `ℓ_0` through `o`.
//!
//! Counting the k-flats of `P` by how they meet `L`:
//!
//! * inside the hyperplane: `f_k(S)`;
//! * through exactly one axis point `q`: `span(q, Σ)` for a spanned
//!   `(k-1)`-flat `Σ` of `S` missing `o`, giving `m · f_{k-1}^ō(S)`;
//! * containing `ℓ_0`: `span(ℓ_0, Σ)` for a `(k-1)`-flat `Σ ∋ o` spanned by
//!   `S ∪ {o}`; for `k = 1` this is `ℓ_0` itself, i.e. `f_1(L) = 1`.
//!
//! The last class is often quoted as `f_{k-1}^o(S)`, the flats through `o`
//! spanned by `S` alone. That agrees whenever `o ∈ S` or every flat through
//! `o` spanned by `S ∪ {o}` is already spanned by `S` (the hypercube and
//! cross-polytope bases), but undercounts for a generic origin. [`RaiseTerms`]
//! carries both.

use num_traits::{One, Zero};

use crate::config::{Config, Origin};
use crate::enumerate::{enumerate_spanned, f_vector, FVector};
use crate::error::{Error, Result};
use crate::geometry::{span, Point};
use crate::scalar::{int, Scalar};

fn affine_config(d: usize, rows: Vec<Vec<Scalar>>) -> Result<Config> {
    Config::new(d, rows.into_iter().map(Point::affine).collect())
}

fn unit(d: usize, i: usize, v: i64) -> Vec<Scalar> {
    let mut c = vec![Scalar::zero(); d];
    c[i] = int(v);
    c
}

/// `points_per_line` points on each of `lines` pairwise skew lines in
/// `R^ambient`. Line 1 is the `x_1` axis at parameters `1..=p`; line `j >= 2`
/// passes through `e_{2j-2}` with direction `e_{2j-1}`.
pub fn skew_lines(points_per_line: usize, lines: usize, ambient: usize) -> Result<Config> {
    if lines < 2 {
        return Err(Error::Range {
            what: "lines",
            value: lines as i64,
            allowed: ">= 2".into(),
        });
    }
    if points_per_line < 2 {
        return Err(Error::Range {
            what: "points per line",
            value: points_per_line as i64,
            allowed: ">= 2".into(),
        });
    }
    if ambient < 2 * lines - 1 {
        return Err(Error::Range {
            what: "ambient dimension",
            value: ambient as i64,
            allowed: format!(">= {}", 2 * lines - 1),
        });
    }
    let mut rows = Vec::with_capacity(points_per_line * lines);
    for t in 1..=points_per_line as i64 {
        rows.push(unit(ambient, 0, t));
    }
    for j in 2..=lines {
        for t in 1..=points_per_line as i64 {
            let mut c = unit(ambient, 2 * j - 3, 1);
            c[2 * j - 2] = int(t);
            rows.push(c);
        }
    }
    affine_config(ambient, rows)
}

/// The `2^k` vertices `(±1, ..., ±1)` of `R^k`, origin at the centre.
pub fn hypercube(k: usize) -> Result<Config> {
    if k == 0 || k > 20 {
        return Err(Error::Range {
            what: "hypercube dimension",
            value: k as i64,
            allowed: "1..=20".into(),
        });
    }
    let rows = (0..1usize << k)
        .map(|mask| {
            (0..k)
                .map(|i| int(if mask >> (k - 1 - i) & 1 == 0 { 1 } else { -1 }))
                .collect()
        })
        .collect();
    let c = affine_config(k, rows)?;
    c.with_origin(Origin::Point(Point::affine(vec![Scalar::zero(); k])))
}

/// The `2d` vertices `±e_i` of `R^d`, origin at the centre.
pub fn cross_polytope(d: usize) -> Result<Config> {
    if d == 0 {
        return Err(Error::Range {
            what: "cross-polytope dimension",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let rows = (0..d)
        .flat_map(|i| [unit(d, i, 1), unit(d, i, -1)])
        .collect();
    let c = affine_config(d, rows)?;
    c.with_origin(Origin::Point(Point::affine(vec![Scalar::zero(); d])))
}

/// `n - 1` points on the `x` axis and one apex `(0, 1)`.
pub fn near_pencil(n: usize) -> Result<Config> {
    if n < 3 {
        return Err(Error::Range {
            what: "near-pencil size",
            value: n as i64,
            allowed: ">= 3".into(),
        });
    }
    let mut rows: Vec<Vec<Scalar>> = (0..n as i64 - 1).map(|i| vec![int(i), int(0)]).collect();
    rows.push(vec![int(0), int(1)]);
    affine_config(2, rows)
}

/// `n` points `(i, 0, ..., 0)` of `R^d`.
pub fn collinear(n: usize, d: usize) -> Result<Config> {
    if d == 0 {
        return Err(Error::Range {
            what: "ambient dimension",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    affine_config(d, (0..n as i64).map(|i| unit(d, 0, i)).collect())
}

/// `S_n^k`: the hypercube `C^k` raised by `m` axis points (`n = 2^k + m`).
pub fn hypercube_construction(k: usize, m: usize) -> Result<Config> {
    if k < 2 {
        return Err(Error::Range {
            what: "k",
            value: k as i64,
            allowed: ">= 2".into(),
        });
    }
    Ok(raise(&hypercube(k)?, m)?.config)
}

/// `T_n^j`: the cross-polytope `D^{3j}` raised by `m` axis points
/// (`n = 6j + m`).
pub fn crosspolytope_construction(j: usize, m: usize) -> Result<Config> {
    if j == 0 {
        return Err(Error::Range {
            what: "j",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    Ok(raise(&cross_polytope(3 * j)?, m)?.config)
}

/// The per-dimension terms of the raised f-vector, `f_k(P) = slope · m + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaiseTerms {
    pub k: usize,
    /// `f_{k-1}^ō(S)`
    pub off_origin: u64,
    /// `f_{k-1}^o(S)`, flats through `o` spanned by `S`.
    pub through_origin: u64,
    /// Flats through `o` spanned by `S ∪ {o}`, dimension `k - 1` (0 for k = 1).
    pub through_origin_closure: u64,
    /// `f_k(S)`
    pub base: u64,
    /// `f_k(L)`: 1 for the axis line, 0 otherwise.
    pub axis: u64,
}

impl RaiseTerms {
    pub fn slope(&self) -> u64 {
        self.off_origin
    }

    pub fn exact_intercept(&self) -> u64 {
        self.through_origin_closure + self.base + self.axis
    }

    /// `m f_{k-1}^ō(S) + f_{k-1}^o(S) + f_k(S) + f_k(L)`.
    pub fn literal(&self, m: u64) -> u64 {
        m * self.off_origin + self.through_origin + self.base + self.axis
    }

    /// The count with the axis-containing flats taken over `S ∪ {o}`.
    pub fn exact(&self, m: u64) -> u64 {
        m * self.slope() + self.exact_intercept()
    }

    /// Whether the literal and exact forms agree (for every `m`).
    pub fn literal_is_exact(&self) -> bool {
        self.through_origin == self.through_origin_closure
    }
}

fn affine_origin(base: &Config) -> Result<Point> {
    let o = base
        .origin_point()
        .ok_or_else(|| Error::Construction("base needs a designated origin".into()))?;
    if o.coords()[0].is_zero() {
        return Err(Error::Construction("origin must be an affine point".into()));
    }
    Ok(o.clone())
}

/// Terms of the raised counts for `k = 1..=d+1`, independent of `m`.
pub fn raise_terms(base: &Config) -> Result<Vec<RaiseTerms>> {
    let o = affine_origin(base)?;
    let fv = f_vector(base)?;
    let closure: FVector = match base.origin() {
        Some(Origin::Index(_)) => fv.clone(),
        _ => {
            let mut pts = base.points().to_vec();
            pts.push(o.clone());
            let with_o =
                Config::new(base.ambient_dim(), pts)?.with_origin(Origin::Index(base.len()))?;
            f_vector(&with_o)?
        }
    };
    let d = base.ambient_dim();
    Ok((1..=d + 1)
        .map(|k| RaiseTerms {
            k,
            off_origin: fv.off_origin(k - 1).unwrap(),
            through_origin: fv.through_origin(k - 1).unwrap(),
            through_origin_closure: if k == 1 {
                0
            } else {
                closure.through_origin(k - 1).unwrap()
            },
            base: fv.f(k as isize),
            axis: u64::from(k == 1),
        })
        .collect())
}

/// A raised configuration with the counts predicted from its base.
#[derive(Clone, Debug)]
pub struct Raised {
    pub config: Config,
    pub m: usize,
    /// `terms[k - 1]` describes `f_k(P)`.
    pub terms: Vec<RaiseTerms>,
}

impl Raised {
    pub fn literal(&self, k: usize) -> u64 {
        self.terms[k - 1].literal(self.m as u64)
    }

    pub fn exact(&self, k: usize) -> u64 {
        self.terms[k - 1].exact(self.m as u64)
    }
}

/// `P = S ∪ L` with `m >= 2` axis points through the base's origin.
pub fn raise(base: &Config, m: usize) -> Result<Raised> {
    if m < 2 {
        return Err(Error::Range {
            what: "m",
            value: m as i64,
            allowed: ">= 2".into(),
        });
    }
    let o = affine_origin(base)?;
    let lift = |c: &[Scalar], x1: Scalar| {
        let mut v = Vec::with_capacity(c.len() + 1);
        v.push(c[0].clone());
        v.push(x1);
        v.extend_from_slice(&c[1..]);
        Point::new(v).expect("lifting keeps the point nonzero")
    };
    let mut pts: Vec<Point> = base
        .points()
        .iter()
        .map(|p| lift(p.coords(), Scalar::zero()))
        .collect();
    pts.extend((1..=m as i64).map(|i| lift(o.coords(), int(i))));
    let origin = match base.origin() {
        Some(Origin::Index(i)) => Origin::Index(*i),
        _ => Origin::Point(lift(o.coords(), Scalar::zero())),
    };
    let config = Config::new(base.ambient_dim() + 1, pts)
        .map_err(|e| Error::Construction(format!("axis collides with the base: {e}")))?
        .with_origin(origin)?;
    Ok(Raised {
        config,
        m,
        terms: raise_terms(base)?,
    })
}

/// An affine point of `span(S)` lying on no proper spanned flat of `S`
/// (in particular not a point of `S`).
///
/// Candidates follow a moment curve `Σ t^i b_i` over the echelon basis of the
/// span; each proper flat holds only finitely many of them.
pub fn generic_origin(base: &Config) -> Result<Point> {
    let whole = span(base.ambient_dim(), base.points())?;
    if whole.rank() == 0 || whole.basis()[0][0].is_zero() {
        return Err(Error::Construction(
            "span of the base has no affine points".into(),
        ));
    }
    let top = whole.dim() as usize;
    let en = enumerate_spanned(base, top.saturating_sub(1).min(base.ambient_dim()))?;
    let proper: Vec<_> = en
        .flats_in_dims(0, top.saturating_sub(1))
        .map(|r| r.flat())
        .collect();
    for t in 2i64.. {
        let mut coords = vec![Scalar::zero(); base.ambient_dim() + 1];
        let mut w = Scalar::one();
        for row in whole.basis() {
            for (c, x) in coords.iter_mut().zip(row) {
                *c += &w * x;
            }
            w *= int(t);
        }
        let p = Point::new(coords)?;
        if top == 0 || !proper.iter().any(|f| f.contains(&p)) {
            return Ok(p);
        }
    }
    unreachable!()
}

/// Smallest `m0 >= 2` with `f_{k+1}(P) < f_k(P)` for every `m >= m0`, from
/// the exact affine counts; `None` if the inequality fails for large `m`.
pub fn monotone_threshold(terms: &[RaiseTerms], k: usize) -> Option<u64> {
    let lo = terms.get(k.checked_sub(1)?)?;
    let hi = terms.get(k)?;
    let (a_lo, b_lo) = (lo.slope() as i128, lo.exact_intercept() as i128);
    let (a_hi, b_hi) = (hi.slope() as i128, hi.exact_intercept() as i128);
    if a_hi > a_lo || (a_hi == a_lo && b_hi >= b_lo) {
        return None;
    }
    if a_hi == a_lo {
        return Some(2);
    }
    // a_hi m + b_hi < a_lo m + b_lo  <=>  m > (b_hi - b_lo) / (a_lo - a_hi)
    let m0 = (b_hi - b_lo).div_euclid(a_lo - a_hi) + 1;
    Some(m0.max(2) as u64)
}
