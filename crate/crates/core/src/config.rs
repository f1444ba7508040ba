use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::geometry::{Flat, Point, Projection};
use crate::scalar::{self, Scalar};

/// Designated origin of a configuration: one of its points, or a separate point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Index(usize),
    Point(Point),
}

/// An ordered, duplicate-free point set in `P^d`, with an optional origin and
/// optional point weights (each at least 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    ambient: usize,
    points: Vec<Point>,
    origin: Option<Origin>,
    weights: Option<Vec<Scalar>>,
}

impl Config {
    pub fn new(ambient: usize, points: Vec<Point>) -> Result<Self> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: p.ambient_dim(),
                });
            }
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(Config {
            ambient,
            points,
            origin: None,
            weights: None,
        })
    }

    pub fn with_origin(mut self, origin: Origin) -> Result<Self> {
        match &origin {
            Origin::Index(i) if *i >= self.points.len() => {
                return Err(Error::InvalidOrigin {
                    index: *i,
                    n: self.points.len(),
                })
            }
            Origin::Point(p) if p.ambient_dim() != self.ambient => {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient,
                    found: p.ambient_dim(),
                })
            }
            _ => {}
        }
        // a separate origin that coincides with a point becomes that index
        let origin = match origin {
            Origin::Point(p) => match self.index_of(&p) {
                Some(i) => Origin::Index(i),
                None => Origin::Point(p),
            },
            o => o,
        };
        self.origin = Some(origin);
        Ok(self)
    }

    pub fn without_origin(mut self) -> Self {
        self.origin = None;
        self
    }

    pub fn with_weights(mut self, weights: Vec<Scalar>) -> Result<Self> {
        if weights.len() != self.points.len() {
            return Err(Error::Precondition(format!(
                "{} weights given for {} points",
                weights.len(),
                self.points.len()
            )));
        }
        if let Some((index, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !scalar::is_at_least_one(w))
        {
            return Err(Error::InvalidWeight {
                index,
                weight: scalar::format(w),
            });
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn origin_point(&self) -> Option<&Point> {
        match self.origin.as_ref()? {
            Origin::Index(i) => Some(&self.points[*i]),
            Origin::Point(p) => Some(p),
        }
    }

    pub fn weights(&self) -> Option<&[Scalar]> {
        self.weights.as_deref()
    }

    /// Weight of point `i`; unweighted configurations have unit weights.
    pub fn weight(&self, i: usize) -> Scalar {
        self.weights
            .as_ref()
            .map_or_else(Scalar::one, |w| w[i].clone())
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// The sub-configuration on the given indices (in that order). Weights
    /// are carried over; the origin is kept as a separate point.
    pub fn subset(&self, indices: &[usize]) -> Result<Config> {
        let pts = indices.iter().map(|&i| self.points[i].clone()).collect();
        let mut c = Config::new(self.ambient, pts)?;
        if let Some(w) = &self.weights {
            c = c.with_weights(indices.iter().map(|&i| w[i].clone()).collect())?;
        }
        if let Some(o) = self.origin_point() {
            c = c.with_origin(Origin::Point(o.clone()))?;
        }
        Ok(c)
    }
}

/// Image of a configuration under projection from a flat.
#[derive(Clone, Debug)]
pub struct ProjectedConfig {
    /// Distinct images, ordered by their first preimage. Each image carries
    /// the summed weight of its preimages.
    pub config: Config,
    /// `preimages[j]` lists the source indices mapping to image `j`.
    pub preimages: Vec<Vec<usize>>,
    /// Source indices lying on the center (they have no image).
    pub on_center: Vec<usize>,
}

impl Config {
    /// Projects every point off `center`, merging points with equal images.
    pub fn project(&self, center: &Flat) -> Result<ProjectedConfig> {
        let proj = Projection::new(center.clone())?;
        let mut images: Vec<Point> = Vec::new();
        let mut index: HashMap<Point, usize> = HashMap::new();
        let mut preimages: Vec<Vec<usize>> = Vec::new();
        let mut on_center = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if center.contains(p) {
                on_center.push(i);
                continue;
            }
            let img = proj.point(p)?;
            match index.get(&img) {
                Some(&j) => preimages[j].push(i),
                None => {
                    index.insert(img.clone(), images.len());
                    images.push(img);
                    preimages.push(vec![i]);
                }
            }
        }
        let weights = preimages
            .iter()
            .map(|pre| pre.iter().map(|&i| self.weight(i)).sum())
            .collect();
        let config = Config::new(proj.target_dim(), images)?.with_weights(weights)?;
        Ok(ProjectedConfig {
            config,
            preimages,
            on_center,
        })
    }

    pub fn project_from_point(&self, i: usize) -> Result<ProjectedConfig> {
        self.project(&Flat::of_point(&self.points[i]))
    }
}
