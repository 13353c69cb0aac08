//! Vertex isoperimetry on the l-infinity graph over `Z^k x N^d`.
//!
//! Two lattice points are adjacent when their l-infinity distance is 1; the
//! vertex boundary of a set is everything within distance 1 of it (including
//! the set). This crate provides:
//!
//! * the well-ordering on `Z^k` and `N^k` whose initial segments minimize the
//!   vertex boundary, with an explicit successor rule ([`ordering`]);
//! * finite point sets with neighborhoods, boundaries, sections, and
//!   projections ([`sets`]);
//! * the central / downward / initial-section compression operators and their
//!   fixpoint iteration ([`compress`]);
//! * the projection-sum boundary count for fully compressed sets and the
//!   initial-segment boundary increment rule ([`formula`]);
//! * an exhaustive oracle that certifies, at small scale, that initial
//!   segments attain the minimum boundary, with witness collection and
//!   symmetry-aware canonicalization ([`oracle`]);
//! * a text interchange format ([`textio`]) and an SVG renderer for 2-D sets
//!   ([`render`]).

pub mod compress;
pub mod domain;
pub mod error;
pub mod formula;
pub mod oracle;
pub mod ordering;
pub mod render;
pub mod report;
pub mod sets;
pub mod textio;

pub use domain::{CoordType, DomainSignature, LatticePoint};
pub use error::{Error, Result};
pub use ordering::{initial_segment, OrderKey};
pub use report::VerificationReport;
pub use sets::PointSet;
