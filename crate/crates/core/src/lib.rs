//! Combinatorics of pairs of permutations `(w, x)` with `x ≤ w` in Bruhat
//! order: rank functions, level sets, reflection sets, smoothness, and the
//! tight / influential properties of the level set of a smooth pair.
//!
//! ```
//! use schub_core::{influence, PermPair, Permutation};
//!
//! let w: Permutation = "35142".parse().unwrap();
//! let x: Permutation = "21345".parse().unwrap();
//! let pair = PermPair::new(w, x).unwrap();
//! assert!(pair.is_smooth());
//! assert!(influence::is_influential(&pair));
//! assert!(influence::is_tight(&pair));
//! ```

pub mod error;
pub mod influence;
pub mod neighbor;
pub mod pair;
pub mod perm;
pub mod rank;
pub mod reduction;

pub use error::{Error, Result};
pub use pair::{PermPair, ReflectionSet};
pub use perm::{Permutation, Transposition, MAX_DEGREE};
pub use rank::{Point, PointSet, RankTable};

/// Patterns whose avoidance characterizes smoothness of `(w, e)`.
pub fn smooth_patterns() -> [Permutation; 2] {
    ["3412".parse().unwrap(), "4231".parse().unwrap()]
}

/// Patterns whose avoidance characterizes tightness of `(w, e)`.
pub fn tight_patterns() -> [Permutation; 4] {
    [
        "4231".parse().unwrap(),
        "35142".parse().unwrap(),
        "42513".parse().unwrap(),
        "351624".parse().unwrap(),
    ]
}
