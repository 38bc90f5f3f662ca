//! Independent re-checks of pipeline output.
//!
//! Nothing here proves linear independence. The bounded relation search, the
//! torsion flags and the height Gram determinant are evidence only.

mod height;
mod independence;
mod sequence;

pub use height::{canonical_height, height_gram, naive_height, GramEstimate, HeightEstimate};
pub use independence::{combine, independence_bounded, IndependenceReport, DEFAULT_RELATION_BOUND};
pub use sequence::{recheck_family, verify_sequence, FailureReason, SequenceCertificate, Verdict};
