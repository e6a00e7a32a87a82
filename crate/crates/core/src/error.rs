use thiserror::Error;

use crate::perm::{Permutation, Transposition};
use crate::rank::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation must have at least one entry")]
    EmptyPermutation,
    #[error("{0:?} is not a bijection of 1..n")]
    NotBijection(Vec<usize>),
    #[error("degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("invalid transposition ({a},{b})")]
    InvalidTransposition { a: usize, b: usize },
    #[error("{t} does not act on degree {n}")]
    TranspositionOutOfRange { t: Transposition, n: usize },
    #[error("{x} is not below {w} in Bruhat order")]
    NotComparable { w: Permutation, x: Permutation },
    #[error("point {point} lies outside the square of degree {n}")]
    PointOutOfSquare { point: Point, n: usize },
    #[error("point {0} is not in the complement of the level set")]
    PointNotInComplement(Point),
    #[error("{0} is not in the reflection set of the pair")]
    NotInReflectionSet(Transposition),
    #[error("the pair ({w}, {x}) is not smooth")]
    NotSmooth { w: Permutation, x: Permutation },
    #[error("invalid minimal shape: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
