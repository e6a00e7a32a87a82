//! Exhaustive verification of the structural claims about smooth pairs
//! implemented in `schub-core`, plus the text diagrams used by the `schub`
//! command-line tool.
//!
//! ```
//! let report = schub_verify::verify("theorem-main", 4).unwrap();
//! assert!(report.passed());
//! ```

pub mod claims;
pub mod enumerate;
pub mod render;
pub mod report;
pub mod sweep;

pub use claims::{catalog, verify, verify_with, VerifyOptions};
pub use enumerate::{enumerate_pairs, enumerate_smooth_pairs};
pub use render::render_diagram;
pub use report::{VerificationReport, Violation};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error(
        "degree {n} is not supported by {what} (maximum {max}; see --allow-slow and SCHUB_MAX_N)"
    )]
    UnsupportedDegree { n: usize, max: usize, what: String },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}
