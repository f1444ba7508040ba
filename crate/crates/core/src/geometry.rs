//! Points and flats of rational projective space.
//!
//! A point of `P^d` is a nonzero vector of `d + 1` homogeneous coordinates,
//! stored scaled so that its first nonzero coordinate is 1. A flat is stored
//! as the reduced row-echelon basis of its underlying linear subspace, so two
//! flats are equal exactly when their bases are identical.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    /// Builds a point from homogeneous coordinates, normalising the first
    /// nonzero entry to 1.
    pub fn new(mut coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyCoordinates);
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::ZeroPoint)?;
        if !lead.is_one() {
            let inv = lead.recip();
            for c in coords.iter_mut() {
                *c *= &inv;
            }
        }
        Ok(Point { coords })
    }

    /// Lifts an affine point `x` of `R^d` to `(1, x)` in `P^d`.
    pub fn affine(coords: Vec<Scalar>) -> Self {
        let mut h = Vec::with_capacity(coords.len() + 1);
        h.push(Scalar::one());
        h.extend(coords);
        Point { coords: h }
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Point::new(coords.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn affine_ints(coords: &[i64]) -> Self {
        Point::affine(coords.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Affine coordinates, or `None` for a point at infinity.
    pub fn to_affine(&self) -> Option<&[Scalar]> {
        if self.coords[0].is_zero() {
            None
        } else {
            Some(&self.coords[1..])
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{}", scalar::format(c))?;
        }
        write!(f, ")")
    }
}

/// A projective subspace. `dim = rank - 1`, so the empty flat has dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Flat {
    pub fn empty(ambient: usize) -> Self {
        Flat {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let rows = (0..=ambient)
            .map(|i| {
                let mut r = vec![Scalar::zero(); ambient + 1];
                r[i] = Scalar::one();
                r
            })
            .collect();
        Flat {
            ambient,
            basis: rows,
            pivots: (0..=ambient).collect(),
        }
    }

    /// The flat spanned by arbitrary (possibly dependent) coordinate rows.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient + 1 {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: r.len().saturating_sub(1),
                });
            }
        }
        let (basis, pivots) = linalg::rref(rows);
        Ok(Flat {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn of_point(p: &Point) -> Self {
        // A canonical point is already a one-row reduced echelon basis.
        let pivot = p.coords.iter().position(|c| !c.is_zero()).unwrap();
        Flat {
            ambient: p.ambient_dim(),
            basis: vec![p.coords.clone()],
            pivots: vec![pivot],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains_coords(&self, v: &[Scalar]) -> bool {
        linalg::reduce(&self.basis, &self.pivots, v)
            .iter()
            .all(Zero::is_zero)
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.ambient_dim() == self.ambient && self.contains_coords(&p.coords)
    }

    pub fn contains_flat(&self, other: &Flat) -> bool {
        other.ambient == self.ambient
            && other.rank() <= self.rank()
            && other.basis.iter().all(|r| self.contains_coords(r))
    }

    /// Basis of the hyperplane normals cutting out this flat.
    pub fn normals(&self) -> Vec<Vec<Scalar>> {
        linalg::kernel(&self.basis, &self.pivots, self.ambient + 1)
    }

    fn check(&self, other_ambient: usize) -> Result<()> {
        if other_ambient != self.ambient {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other_ambient,
            })
        } else {
            Ok(())
        }
    }

    pub fn join(&self, other: &Flat) -> Result<Flat> {
        self.check(other.ambient)?;
        if other.rank() == 0 || self.contains_flat(other) {
            return Ok(self.clone());
        }
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Flat::from_rows(self.ambient, rows)
    }

    pub fn join_point(&self, p: &Point) -> Result<Flat> {
        self.check(p.ambient_dim())?;
        let residual = linalg::reduce(&self.basis, &self.pivots, &p.coords);
        if residual.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let mut rows = self.basis.clone();
        rows.push(residual);
        Flat::from_rows(self.ambient, rows)
    }

    /// The intersection, computed as the common zero set of both normal sets.
    pub fn meet(&self, other: &Flat) -> Result<Flat> {
        self.check(other.ambient)?;
        if self.is_empty() || other.is_empty() {
            return Ok(Flat::empty(self.ambient));
        }
        if self.contains_flat(other) {
            return Ok(other.clone());
        }
        if other.contains_flat(self) {
            return Ok(self.clone());
        }
        let mut normals = self.normals();
        normals.extend(other.normals());
        let (nb, np) = linalg::rref(normals);
        let rows = linalg::kernel(&nb, &np, self.ambient + 1);
        Flat::from_rows(self.ambient, rows)
    }

    /// `dim(self ∩ other)` via the modular law, without building the meet.
    pub fn meet_dim(&self, other: &Flat) -> Result<isize> {
        let joined = self.join(other)?;
        Ok(self.dim() + other.dim() - joined.dim())
    }
}

impl PartialOrd for Flat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lower dimension first, then the echelon bases lexicographically.
impl Ord for Flat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.basis.len().cmp(&other.basis.len()))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[dim {}:", self.dim())?;
        for row in &self.basis {
            write!(f, " (")?;
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", scalar::format(c))?;
            }
            write!(f, ")")?;
        }
        write!(f, "]")
    }
}

/// Smallest flat containing all `points`. The span of nothing is the empty flat.
pub fn span<'a>(ambient: usize, points: impl IntoIterator<Item = &'a Point>) -> Result<Flat> {
    let mut rows = Vec::new();
    for p in points {
        if p.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: p.ambient_dim(),
            });
        }
        rows.push(p.coords.clone());
    }
    Flat::from_rows(ambient, rows)
}

pub fn span_flats<'a>(ambient: usize, flats: impl IntoIterator<Item = &'a Flat>) -> Result<Flat> {
    let mut rows = Vec::new();
    for f in flats {
        if f.ambient != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: f.ambient,
            });
        }
        rows.extend(f.basis.iter().cloned());
    }
    Flat::from_rows(ambient, rows)
}

pub fn meet(a: &Flat, b: &Flat) -> Result<Flat> {
    a.meet(b)
}

/// Central projection from a flat onto a complementary coordinate subspace.
///
/// The image of `v` is `v` reduced modulo the center's echelon basis,
/// restricted to the center's non-pivot columns. This realises the quotient
/// map `P^d \ center -> P^(d-k-1)` for a center of dimension `k`.
#[derive(Clone, Debug)]
pub struct Projection {
    center: Flat,
    keep: Vec<usize>,
}

impl Projection {
    pub fn new(center: Flat) -> Result<Self> {
        let d = center.ambient;
        if center.is_empty() {
            return Err(Error::UndefinedProjection("center is the empty flat"));
        }
        if center.rank() > d {
            return Err(Error::UndefinedProjection("center is the whole space"));
        }
        let keep = (0..=d).filter(|c| !center.pivots.contains(c)).collect();
        Ok(Projection { center, keep })
    }

    pub fn from_point(p: &Point) -> Result<Self> {
        Projection::new(Flat::of_point(p))
    }

    pub fn center(&self) -> &Flat {
        &self.center
    }

    pub fn target_dim(&self) -> usize {
        self.keep.len() - 1
    }

    fn image(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = linalg::reduce(&self.center.basis, &self.center.pivots, v);
        self.keep.iter().map(|&c| r[c].clone()).collect()
    }

    pub fn point(&self, p: &Point) -> Result<Point> {
        self.center.check(p.ambient_dim())?;
        let img = self.image(&p.coords);
        if img.iter().all(Zero::is_zero) {
            return Err(Error::UndefinedProjection("point lies on the center"));
        }
        Point::new(img)
    }

    pub fn flat(&self, f: &Flat) -> Result<Flat> {
        self.center.check(f.ambient)?;
        if self.center.contains_flat(f) {
            return Err(Error::UndefinedProjection("flat lies inside the center"));
        }
        let rows = f.basis.iter().map(|r| self.image(r)).collect();
        Flat::from_rows(self.target_dim(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::from_ints(c).unwrap()
    }

    #[test]
    fn canonical_points() {
        assert_eq!(p(&[0, 2, 4]), p(&[0, -1, -2]));
        assert_eq!(p(&[0, 2, 4]).coords()[1], scalar::int(1));
        assert_eq!(Point::from_ints(&[0, 0]), Err(Error::ZeroPoint));
        assert_eq!(Point::new(vec![]), Err(Error::EmptyCoordinates));
    }

    #[test]
    fn span_examples() {
        let a = p(&[1, 0, 0]);
        let b = p(&[1, 1, 0]);
        assert_eq!(span(2, [&a, &b]).unwrap().dim(), 1);
        assert_eq!(span(2, []).unwrap().dim(), -1);
        // unit square lifted into the plane x3 = 0 of R^3
        let sq: Vec<Point> = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|c| Point::affine_ints(c))
            .collect();
        assert_eq!(span(3, &sq).unwrap().dim(), 2);
        assert!(matches!(
            span(3, [&a]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn span_is_order_independent() {
        let pts = [p(&[1, 2, 3, 4]), p(&[0, 1, 1, 0]), p(&[3, 0, 1, 1])];
        let f1 = span(3, [&pts[0], &pts[1], &pts[2]]).unwrap();
        let f2 = span(3, [&pts[2], &pts[0], &pts[1]]).unwrap();
        assert_eq!(f1, f2);
        for q in &pts {
            assert!(f1.contains(q));
        }
    }

    #[test]
    fn meet_examples() {
        // skew lines in P^3
        let l1 = span(3, [&p(&[1, 0, 0, 0]), &p(&[0, 1, 0, 0])]).unwrap();
        let l2 = span(3, [&p(&[0, 0, 1, 0]), &p(&[0, 0, 0, 1])]).unwrap();
        let m = meet(&l1, &l2).unwrap();
        assert_eq!(m.dim(), -1);
        assert_eq!(l1.join(&l2).unwrap().dim() + m.dim(), l1.dim() + l2.dim());
        assert_eq!(meet(&l1, &l1).unwrap(), l1);
        // coplanar lines through (1:0:0:0)
        let l3 = span(3, [&p(&[1, 0, 0, 0]), &p(&[0, 0, 1, 0])]).unwrap();
        let m = meet(&l1, &l3).unwrap();
        assert_eq!(m.dim(), 0);
        assert!(m.contains(&p(&[1, 0, 0, 0])));
        assert_eq!(l1.meet_dim(&l3).unwrap(), 0);
    }

    #[test]
    fn projection_dimension_cases() {
        // center: a point in P^3; image space P^2
        let c = p(&[0, 0, 0, 1]);
        let proj = Projection::from_point(&c).unwrap();
        assert_eq!(proj.target_dim(), 2);
        // plane missing the center maps onto all of P^2
        let plane = span(3, [&p(&[1, 0, 0, 0]), &p(&[0, 1, 0, 0]), &p(&[0, 0, 1, 0])]).unwrap();
        assert_eq!(proj.flat(&plane).unwrap().dim(), 2);
        // line through the center collapses to a point
        let through = span(3, [&c, &p(&[1, 0, 0, 0])]).unwrap();
        assert_eq!(proj.flat(&through).unwrap().dim(), 0);
        // line missing the center stays a line
        let off = span(3, [&p(&[1, 0, 0, 0]), &p(&[0, 1, 0, 0])]).unwrap();
        assert_eq!(proj.flat(&off).unwrap().dim(), 1);
        assert!(proj.point(&c).is_err());
        assert!(proj.flat(&Flat::of_point(&c)).is_err());
    }

    #[test]
    fn projection_identifies_lines_through_center() {
        let c = p(&[1, 0, 0]);
        let proj = Projection::from_point(&c).unwrap();
        let a = p(&[1, 1, 1]);
        let b = p(&[3, 2, 2]); // on the line through c and a
        assert_eq!(proj.point(&a).unwrap(), proj.point(&b).unwrap());
        assert_ne!(proj.point(&a).unwrap(), proj.point(&p(&[1, 1, 2])).unwrap());
    }

    #[test]
    fn flat_order_puts_low_dimension_first() {
        let pt = Flat::of_point(&p(&[0, 0, 1]));
        let line = span(2, [&p(&[1, 0, 0]), &p(&[0, 1, 0])]).unwrap();
        assert!(pt < line);
        assert!(Flat::empty(2) < pt);
        assert!(line < Flat::whole(2));
    }
}
