//! Kissing configurations of unit spheres in four dimensions, organized by the
//! Hopf fibration S³ → S².
//!
//! A contact point of a kissing configuration is a unit vector in R⁴. Under the
//! Hopf map every such point lies on a great-circle fiber over a point of S²,
//! so a configuration can be read as a set of "circles" on S², each carrying a
//! handful of fiber angles. The modules here build, verify, regroup and search
//! for such configurations:
//!
//! - [`geometry`]: Hopf projection and lift, chord distances, the fiber
//!   distance formula and the separation bounds derived from it.
//! - [`config`]: configurations, kissing verification, circle grouping,
//!   signatures, antipodal pairs and SO(4) rotations.
//! - [`catalog`]: named configurations (24-cell, 3×6, 16×1, 6×2+4×1 and the
//!   22-point Cohn–Woo arrangement).
//! - [`cover`]: the cover relation between unpaired points, covering graphs,
//!   the reduction moves on them, and the signature classifier.
//! - [`search`]: a two-phase repulsion/maximin optimizer on S³.
//! - [`io`]: JSON documents and orthographic projection plots.

pub mod catalog;
pub mod config;
pub mod cover;
mod error;
pub mod geometry;
pub mod io;
pub mod search;

pub use catalog::CatalogId;
pub use config::{
    Configuration, FiberCircle, FiberedConfiguration, Rotation4, Signature, VerificationReport,
};
pub use cover::{CoverGraph, Status, Verdict};
pub use error::{Error, Result};
pub use geometry::{FiberAngle, PhiOffset, R4Point, S2Point};
pub use search::{SearchParams, SearchResult};

/// Default kissing tolerance: chords down to `1 - KISSING_TOL` count as kissing.
pub const KISSING_TOL: f64 = 1e-9;

/// Deviation from unit norm accepted for constructed points.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Deviation from unit norm accepted by the Hopf projection.
pub const PROJECTION_NORM_TOL: f64 = 1e-9;

/// Chord distance on S² below which two projected points share a circle.
pub const GROUPING_TOL: f64 = 1e-6;
