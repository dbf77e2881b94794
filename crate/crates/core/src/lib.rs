//! Power decoding with multiplicities for homogeneous interleaved
//! Reed-Solomon codes.
//!
//! The crate covers finite-field and polynomial arithmetic, the powered key
//! equations, a simultaneous Hermite Padé solver, the resulting partial
//! decoder with its decoding-radius formulas, and a seeded Monte-Carlo
//! harness for failure-rate estimates.

pub mod code;
pub mod decoder;
pub mod error;
pub mod galois;
pub mod keyeq;
pub mod linalg;
pub mod multiindex;
pub mod pade;
pub mod poly;
pub mod radius;
pub mod rng;
pub mod simlab;

pub use code::{burst_weight, encode, random_instance, sample_error, CodeSpec, MessageVector, WordMatrix};
pub use decoder::{decode, DecodeOutcome, DecoderParams, FailStage};
pub use error::{Error, Result};
pub use galois::{Field, FieldElement};
pub use multiindex::MultiIndex;
pub use pade::{PadeProblem, PadeSolution};
pub use poly::Poly;

/// Exact rational scalar used for decoding radii.
pub type Rational = num_rational::BigRational;
/// Double-precision scalar for asymptotic analysis.
pub type Real = f64;
