//! Hamming-weight monogamy and polygamy bounds for bipartite quantum
//! correlation measures, with the state machinery needed to check them on
//! concrete few-qubit systems.
//!
//! The crate is split into four layers:
//!
//! * [`qstate`]: dense pure states and density matrices, partial traces and
//!   Haar sampling.
//! * [`measures`]: concurrence (pure and Wootters), Tsallis-q entropy and
//!   entanglement, a numeric entanglement-of-assistance search, and the closed
//!   forms for the three-qubit generalized Schmidt family.
//! * [`bounds`]: Hamming weights, the coefficient `K`, the scalar lemmas,
//!   hypothesis checks and every right-hand-side evaluator.
//! * [`verify`]: random sweeps, tightness comparisons and figure tables.

pub mod bounds;
pub mod error;
pub mod measures;
pub mod qstate;
pub mod verify;

pub use bounds::{BaselineKind, CoeffParams, ConditionReport, CorrelationVector};
pub use error::{Error, Result};
pub use measures::{EoaConfig, EoaEstimate, FamilyCorrelations};
pub use num_complex::Complex64;
pub use qstate::{DensityMatrix, PureState, SchmidtParams};
pub use verify::{
    BoundKind, BoundReport, Direction, FigureTable, Measure, SweepConfig, SweepMode, SweepResult, VectorSampler,
};
