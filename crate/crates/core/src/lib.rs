//! Exact computation with finite point configurations in rational projective
//! space: spanned flats and their counts, essential dimension and the
//! degeneracy sequence `g_k`, extremal constructions, and exact checks of the
//! inequalities relating them.
//!
//! All arithmetic is over arbitrary-precision rationals. Enumeration and the
//! cover search run on rayon when the `parallel` feature is enabled (the
//! default) and sequentially otherwise; results are identical either way.

pub mod config;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod essential;
pub mod geometry;
mod intvec;
pub mod io;
pub mod linalg;
pub mod par;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod weighted;

pub use config::{Config, Origin, ProjectedConfig};
pub use enumerate::{enumerate_spanned, f_vector, incidences, Enumeration, FVector, FlatRecord};
pub use error::{Error, Result};
pub use essential::{
    check_g_minimality, essential_dimension, g_vector, projection_degeneracy_check, CoverSearch,
    CoverWitness, DegeneracyReport, GVector,
};
pub use geometry::{meet, span, span_flats, Flat, Point, Projection};
pub use scalar::Scalar;
