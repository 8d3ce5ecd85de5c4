//! Exact lexicographic subdivisions and triangulations of finite point sets,
//! their GKZ-vectors, and greedy recovery of a lexicographic triangulation
//! from its GKZ-vector.
//!
//! Labels are 0-based throughout the library; the text formats in
//! [`format`] and the command line use 1-based indices.

pub mod cli;
pub mod error;
pub mod format;
pub mod geom;
pub mod gkz;
pub mod lexenum;
pub mod linalg;
pub mod lp;
pub mod rational;
pub mod recover;
pub mod subdivide;

pub use error::{Error, Result};
pub use geom::{affine_dimension, orientation, simplex_volume, Facet, Hyperplane, PointSet};
pub use gkz::{gkz_vector, GkzVector};
pub use rational::Rational;
pub use recover::{recover, RecoveryResult};
pub use subdivide::{Action, Cell, LexScript, Side, Step, Subdivision, Triangulation};
