//! Bessel-type inequalities for finite families of vectors in real or complex
//! inner product spaces.
//!
//! * [`numeric`]: coordinate vectors, the inner product, Gram matrices and
//!   lifting prescribed Fourier coefficients to vectors.
//! * [`classical`]: Boas-Bellman, Bombieri, Selberg, Heilbronn, Pečarić and
//!   related generalisations of Bessel's inequality.
//! * [`sharp`]: sharp bounds for coefficients confined to a disk, with their
//!   equality residuals and scalar corollaries.
//! * [`extremal`]: families attaining equality in the sharp bounds.
//! * [`harness`]: seeded random families, batch checking, fuzzing and
//!   tightness comparison.

pub mod classical;
pub mod error;
pub mod extremal;
pub mod harness;
pub mod numeric;
pub mod report;
pub mod sharp;
pub mod tolerance;

pub use error::{BoundError, Result};
pub use numeric::{Complex, Family, Field, GramMatrix, HVector};
pub use report::{BoundId, BoundReport, Status};
pub use sharp::Disk;
pub use tolerance::Tolerance;
