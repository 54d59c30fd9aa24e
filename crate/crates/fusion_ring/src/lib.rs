//! Fusion rings and their dimension data.

pub mod algreal;
pub mod analysis;
pub mod embed;
pub mod error;
pub mod factor;
pub mod grading;
pub mod io;
pub mod poly;
pub mod ring;

pub use algreal::AlgebraicReal;
pub use analysis::{attach_cyclotomic_embedding, attach_exact_dims, fpdim, fpdim_total, Dimensions};
pub use embed::{ConductorChoice, Embedder};
pub use error::RingError;
pub use grading::{dimensional_grading, universal_grading, DimensionalGrading, GradingPartition};
pub use ring::{FusionRing, Violation};
