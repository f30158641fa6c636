//! Side-channel traces and leakage assessment.

pub mod leakage;
pub mod report;
mod sample;
mod trace;

pub use leakage::{aes_sbox, convergence, cpa, cpa_direct, hw, leakage_points, nicv, ClassSums, ConvergencePoint, CpaByte};
pub use sample::{initbb_samples, record_sample, Sample};
pub use trace::{TraceError, TraceFile, TraceMeta, PTRC_MAGIC, PTRC_VERSION};
