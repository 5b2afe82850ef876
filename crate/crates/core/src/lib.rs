//! Exact combinatorics of Laumon quasiflag spaces for `SL_n`.
//!
//! The crate computes Kostant partitions, Poincare polynomials of the
//! Laumon spaces and their strata, the closed generating function those
//! polynomials assemble into, torus fixed points and cells, filtration
//! multiplicities of torsion quiver representations and the associated
//! `sl_n` characters. Every identity between these is
//! checked by the verification suites in [`suites`].

pub mod cells;
pub mod charseries;
pub mod cohomology;
pub mod error;
pub mod kostant;
pub mod modchar;
pub mod quiverfilt;
pub mod report;
pub mod rootdata;
pub mod suites;

pub use charseries::{CharSeries, LaurentPoly};
pub use error::{Error, Result};
pub use kostant::KostantPartition;
pub use report::{Category, Report, ReportRow, Status};
pub use rootdata::{CorootVector, PositiveCoroot, RootSystem, WeylElement};

/// Enumeration limits. These are configuration, not constants of the theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|gamma|` for which Kostant partitions are listed.
    pub kostant_weight: u32,
    /// Largest `n` for which `S_n` is walked element by element.
    pub weyl_rank: usize,
    /// Largest total dimension handed to the finite-field filtration counter.
    pub filtration_dim: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            kostant_weight: 12,
            weyl_rank: rootdata::DEFAULT_WEYL_CAP,
            filtration_dim: 8,
        }
    }
}
