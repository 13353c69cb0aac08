//! Finite point sets, l-infinity neighborhoods, vertex boundaries, sections,
//! and coordinate-deleting projections.

use std::collections::HashSet;
use std::fmt;

use crate::domain::{DomainSignature, LatticePoint};
use crate::error::{Error, Result};
use crate::ordering::order_key;

/// A finite, duplicate-free set of points over one signature.
///
/// Points are stored sorted in the signature's canonical order, so iteration
/// is deterministic and equal sets compare equal structurally. A hash index
/// backs O(1) membership; values are immutable once constructed.
#[derive(Clone, Debug)]
pub struct PointSet {
    sig: DomainSignature,
    points: Vec<LatticePoint>,
    index: HashSet<LatticePoint>,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.points == other.points
    }
}

impl Eq for PointSet {}

impl PointSet {
    /// Builds a set from a list of points, validating each against `sig`,
    /// sorting canonically, and merging duplicates.
    pub fn new(sig: DomainSignature, points: Vec<LatticePoint>) -> Result<Self> {
        for p in &points {
            sig.validate_point(p)?;
        }
        let mut points = points;
        points.sort_by_cached_key(|p| order_key(p, sig).expect("validated point"));
        points.dedup();
        let index = points.iter().cloned().collect();
        Ok(PointSet { sig, points, index })
    }

    pub fn empty(sig: DomainSignature) -> Self {
        PointSet {
            sig,
            points: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn sig(&self) -> DomainSignature {
        self.sig
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in canonical order.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn contains(&self, point: &LatticePoint) -> bool {
        self.index.contains(point)
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.sig == other.sig && self.points.iter().all(|p| other.contains(p))
    }

    /// The vertex boundary: every domain point at l-infinity distance at most 1
    /// from the set. Contains the set itself; the boundary of the empty set is
    /// empty. No bounding box is imposed — only N-type floors clip.
    pub fn vertex_boundary(&self) -> PointSet {
        let mut out: HashSet<LatticePoint> = HashSet::with_capacity(self.points.len() * 2);
        let mut scratch = vec![0i64; self.sig.dims()];
        for p in &self.points {
            for_each_ball_point(p, self.sig, &mut scratch, &mut |coords| {
                if !out.contains(coords) {
                    out.insert(LatticePoint::new(coords.to_vec()));
                }
            });
        }
        PointSet::new(self.sig, out.into_iter().collect()).expect("boundary points are valid")
    }

    /// Deletes the coordinates in `delete` from every point, merging any
    /// points that collide. Deleting every coordinate of a nonempty set yields
    /// the zero-dimensional singleton.
    pub fn project(&self, delete: &[usize]) -> Result<PointSet> {
        let sub_sig = self.sig.delete_coords(delete)?;
        let projected: Vec<LatticePoint> = self
            .points
            .iter()
            .map(|p| p.delete_coords(delete))
            .collect();
        PointSet::new(sub_sig, projected)
    }

    /// The 1-D fiber of the set over `profile` along `coord`: all values `x`
    /// such that inserting `x` at position `coord` of `profile` lands in the
    /// set. Sorted ascending.
    pub fn section(&self, coord: usize, profile: &LatticePoint) -> Result<Vec<i64>> {
        if coord >= self.sig.dims() {
            return Err(Error::IndexOutOfRange {
                index: coord,
                dims: self.sig.dims(),
            });
        }
        self.sig.delete_coords(&[coord])?.validate_point(profile)?;
        let mut out: Vec<i64> = self
            .points
            .iter()
            .filter(|p| {
                let (before, rest) = p.coords().split_at(coord);
                before == &profile.coords()[..coord] && rest[1..] == profile.coords()[coord..]
            })
            .map(|p| p.coords()[coord])
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Translate by `offset` (one entry per coordinate). Errors if an N-type
    /// coordinate would go negative.
    pub fn translate(&self, offset: &[i64]) -> Result<PointSet> {
        if offset.len() != self.sig.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.sig.dims(),
                found: offset.len(),
            });
        }
        let moved: Vec<LatticePoint> = self
            .points
            .iter()
            .map(|p| {
                LatticePoint::new(
                    p.coords()
                        .iter()
                        .zip(offset)
                        .map(|(&c, &o)| c.checked_add(o).expect("coordinate overflow"))
                        .collect(),
                )
            })
            .collect();
        PointSet::new(self.sig, moved)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p})")?;
        }
        write!(f, "}}")
    }
}

/// Calls `visit` with the coordinates of every domain point within l-infinity
/// distance 1 of `center` (including `center` itself).
fn for_each_ball_point(
    center: &LatticePoint,
    sig: DomainSignature,
    scratch: &mut [i64],
    visit: &mut dyn FnMut(&[i64]),
) {
    fn rec(
        center: &[i64],
        sig: DomainSignature,
        pos: usize,
        scratch: &mut [i64],
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if pos == center.len() {
            visit(scratch);
            return;
        }
        for delta in [-1i64, 0, 1] {
            let v = center[pos] + delta;
            if pos >= sig.z() && v < 0 {
                continue;
            }
            scratch[pos] = v;
            rec(center, sig, pos + 1, scratch, visit);
        }
    }
    rec(center.coords(), sig, 0, scratch, visit);
}

/// The closed l-infinity unit ball around `x`, clipped to the domain.
pub fn neighbors(x: &LatticePoint, sig: DomainSignature) -> Result<PointSet> {
    sig.validate_point(x)?;
    let mut pts = Vec::new();
    let mut scratch = vec![0i64; sig.dims()];
    for_each_ball_point(x, sig, &mut scratch, &mut |coords| {
        pts.push(LatticePoint::new(coords.to_vec()));
    });
    PointSet::new(sig, pts)
}
