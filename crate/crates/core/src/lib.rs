//! Skew Hadamard matrices, doubly regular tournaments and the Seidel
//! spectra that characterize them.
//!
//! The crate is organized by what each piece certifies:
//!
//! * [`tournament`] and [`hadamard`]: the objects, their predicates and the
//!   conversions between them (vertex deletion, one-vertex extension,
//!   bordering into a skew Hadamard matrix and back).
//! * [`exact`]: big-integer characteristic polynomials and pass/fail
//!   certificates with exact evidence.
//! * [`numeric`]: floating-point Seidel eigendecompositions and main
//!   angles, used as an independent oracle for [`exact`].
//! * [`search`]: labeled enumeration, censuses and the deletion/extension
//!   experiments, with deterministic parallelism.
//! * [`report`] and [`cli`]: the JSON envelope and the command-line front end.
//!
//! ```
//! use seidel_skew::{exact, Tournament};
//!
//! let paley = Tournament::paley(7).unwrap();
//! assert!(exact::certify_drt_spectrum(&paley).pass);
//! let deleted = paley.delete_vertex(0).unwrap();
//! assert!(exact::certify_thm1_spectrum(&deleted).pass);
//! assert!(deleted.extend_to_regular().unwrap().is_doubly_regular());
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod format;
pub mod hadamard;
pub mod numeric;
pub mod poly;
pub mod report;
pub mod search;
pub mod tournament;

pub use error::{Error, Result};
pub use hadamard::SkewHadamard;
pub use poly::{IntPolynomial, RatPolynomial};
pub use tournament::{ScoreVector, SkewPart, Tournament};
