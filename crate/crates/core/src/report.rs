//! Verification records produced by the exhaustive searches.

use std::time::Duration;

use serde_json::json;

use crate::domain::DomainSignature;
use crate::sets::PointSet;
use crate::textio::write_point_set;

/// Outcome of one minimum-boundary search at a fixed size `n`.
///
/// `min_boundary_found <= initial_segment_boundary` holds whenever the search
/// space contains the initial segment (which every search here guarantees);
/// strict inequality would mean a set beats the initial segment and is
/// reported as a falsification.
///
/// `witness_count` counts every minimizer the search encountered;
/// `witnesses` holds canonical representatives (deduplicated under the
/// witness symmetry group) of the minimizers collected up to the configured
/// cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub sig: DomainSignature,
    pub n: u64,
    pub min_boundary_found: u64,
    pub initial_segment_boundary: u64,
    pub witness_count: u64,
    pub witnesses: Vec<PointSet>,
    pub search_space_size: u64,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// True when some set strictly beats the initial segment.
    pub fn is_falsification(&self) -> bool {
        self.min_boundary_found < self.initial_segment_boundary
    }

    pub fn status(&self) -> &'static str {
        if self.is_falsification() {
            "FALSIFICATION"
        } else {
            "PASS"
        }
    }

    /// One-line text record. All fields except `elapsed_ms` are deterministic
    /// for a fixed search configuration.
    pub fn to_text_line(&self) -> String {
        format!(
            "z={} nat={} n={} min_boundary_found={} initial_segment_boundary={} \
             witness_count={} witnesses={} search_space_size={} elapsed_ms={} status={}",
            self.sig.z(),
            self.sig.n(),
            self.n,
            self.min_boundary_found,
            self.initial_segment_boundary,
            self.witness_count,
            self.witnesses.len(),
            self.search_space_size,
            self.elapsed.as_millis(),
            self.status(),
        )
    }

    /// Structured record; witnesses inline in the point-set text format.
    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: Vec<String> = self
            .witnesses
            .iter()
            .map(|w| write_point_set(w).expect("witness has coordinates"))
            .collect();
        json!({
            "sig": { "z": self.sig.z(), "nat": self.sig.n() },
            "n": self.n,
            "min_boundary_found": self.min_boundary_found,
            "initial_segment_boundary": self.initial_segment_boundary,
            "witness_count": self.witness_count,
            "witnesses": witnesses,
            "search_space_size": self.search_space_size,
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "status": self.status(),
        })
    }
}
