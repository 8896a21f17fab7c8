use thiserror::Error;

use crate::exactpoly::{PolyError, Rational};
use crate::numberfield::FieldError;
use crate::point::PointError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Point(#[from] PointError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("point {0} does not lie on the variety")]
    NotOnVariety(String),
    #[error("singular parameter system at {0}: substitution maps are dependent")]
    Singular(String),
    #[error("the reduced quadratic does not vanish at the known root")]
    NotARoot,
    #[error("parametric degeneracy: the reduced quadratic vanishes identically")]
    ParametricDegeneracy,
    #[error("discriminant {0} is not a rational square")]
    NotASquare(Rational),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("ratio undefined: {0}")]
    NoRatio(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
