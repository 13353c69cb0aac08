//! Closed-form boundary counts.
//!
//! For a nonempty set compressed in every coordinate, the vertex boundary size
//! equals a sum over all subsets `I` of the coordinates,
//!
//! ```text
//! |bd S| = sum_I 2^(number of Z-type coords in I) * |P_I(S)|
//! ```
//!
//! where `P_I` deletes the coordinates in `I` (the empty `I` contributes `|S|`,
//! the full `I` contributes `2^k` for a nonempty set). For initial segments
//! there is also an increment rule: appending the next point `v` grows the
//! boundary by `3^l` on `Z^k` (`2^l` on `N^k`), `l` being the number of zero
//! coordinates of `v`.

use crate::compress::{first_uncompressed_coord, is_fully_compressed};
use crate::domain::{CoordType, DomainSignature, LatticePoint};
use crate::error::{Error, Result};
use crate::ordering::{ball_max, enumerate};
use crate::sets::PointSet;

fn checked_pow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("boundary count overflow")
}

/// The projection-sum functional `sum_I 2^(|I cap Z-coords|) |P_I(X)|`,
/// defined for every finite set. It equals the boundary size exactly when the
/// set is compressed in every coordinate; see [`boundary_via_projections`].
pub fn projection_functional(set: &PointSet) -> u64 {
    let dims = set.sig().dims();
    assert!(dims < 24, "the sum ranges over 2^dims coordinate subsets");
    let z = set.sig().z();
    let mut total: u64 = 0;
    for mask in 0u64..(1u64 << dims) {
        let delete: Vec<usize> = (0..dims).filter(|&i| mask & (1 << i) != 0).collect();
        let weight = checked_pow(2, delete.iter().filter(|&&i| i < z).count() as u32);
        let count = set.project(&delete).expect("indices in range").len() as u64;
        total = total
            .checked_add(weight.checked_mul(count).expect("boundary count overflow"))
            .expect("boundary count overflow");
    }
    total
}

/// Exact `|bd S|` for a nonempty, fully compressed set, via the projection
/// sum. Refuses non-compressed input: the identity is false in general, and a
/// silently wrong count would poison everything built on it.
pub fn boundary_via_projections(set: &PointSet) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(coordinate) = first_uncompressed_coord(set) {
        return Err(Error::NotCompressed { coordinate });
    }
    Ok(projection_functional(set))
}

/// Boundary growth when the initial segment absorbs its next point `v`:
/// `3^l` on `Z^k`, `2^l` on `N^k`, with `l` the number of zeros in `v`.
pub fn segment_boundary_increment(v: &LatticePoint, sig: DomainSignature) -> Result<u64> {
    sig.validate_point(v)?;
    if !sig.is_pure() {
        return Err(Error::MixedDomain {
            operation: "segment boundary increment",
        });
    }
    let base = if sig.is_pure_z() { 3 } else { 2 };
    let zeros = v.coords().iter().filter(|&&c| c == 0).count() as u32;
    Ok(checked_pow(base, zeros))
}

/// `|bd I_n|` for the initial segment of size `n >= 1`, summed from the
/// increment rule — the boundary is never materialized. The origin's own term
/// is `3^k` (resp. `2^k`), so the sum runs over all `n` points.
pub fn initial_segment_boundary_size(sig: DomainSignature, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut total: u64 = 0;
    for p in enumerate(sig, n)? {
        total = total
            .checked_add(segment_boundary_increment(&p, sig)?)
            .expect("boundary count overflow");
    }
    Ok(total)
}

/// A corner point of a nonempty, fully compressed set: a member whose every
/// coordinate bump (the latest ball element for Z-type, `+1` for N-type)
/// leaves the set. Ties break to the latest corner in canonical order.
pub fn find_corner_point(set: &PointSet) -> Result<LatticePoint> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(coordinate) = first_uncompressed_coord(set) {
        return Err(Error::NotCompressed { coordinate });
    }
    let sig = set.sig();
    let mut last: Option<&LatticePoint> = None;
    for p in set.iter() {
        let is_corner = (0..sig.dims()).all(|i| {
            let bumped = p.with_coord(i, ball_max(p.coords()[i], sig.coord_type(i)));
            !set.contains(&bumped)
        });
        if is_corner {
            last = Some(p);
        }
    }
    Ok(last
        .expect("a finite compressed set has a corner point")
        .clone())
}

/// The zero coordinates of a point, split by type. Peeling a corner point
/// from a compressed set removes exactly `3^|zero Z| * 2^|zero N|` boundary
/// vertices, and exactly the projections deleting a subset of these
/// coordinates drop by one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroProfile {
    z_zeros: Vec<usize>,
    n_zeros: Vec<usize>,
}

impl ZeroProfile {
    pub fn of(point: &LatticePoint, sig: DomainSignature) -> ZeroProfile {
        let mut z_zeros = Vec::new();
        let mut n_zeros = Vec::new();
        for (i, &c) in point.coords().iter().enumerate() {
            if c == 0 {
                match sig.coord_type(i) {
                    CoordType::Int => z_zeros.push(i),
                    CoordType::Nat => n_zeros.push(i),
                }
            }
        }
        ZeroProfile { z_zeros, n_zeros }
    }

    /// Indices of zero Z-type coordinates.
    pub fn zero_z_coords(&self) -> &[usize] {
        &self.z_zeros
    }

    /// Indices of zero N-type coordinates.
    pub fn zero_n_coords(&self) -> &[usize] {
        &self.n_zeros
    }

    /// `3^|zero Z| * 2^|zero N|`: the boundary vertices only this point's
    /// ball reaches when it sits at a corner of a compressed set.
    pub fn ball_weight(&self) -> u64 {
        checked_pow(3, self.z_zeros.len() as u32)
            .checked_mul(checked_pow(2, self.n_zeros.len() as u32))
            .expect("boundary count overflow")
    }

    /// Does deleting `coords` only touch zero coordinates of this point?
    pub fn covers(&self, coords: &[usize]) -> bool {
        coords
            .iter()
            .all(|i| self.z_zeros.contains(i) || self.n_zeros.contains(i))
    }
}

/// The exact boundary lost by peeling a corner point. Exposed for tests of
/// the peeling step.
pub fn corner_peel_decrement(corner: &LatticePoint, sig: DomainSignature) -> u64 {
    ZeroProfile::of(corner, sig).ball_weight()
}

/// True when the projection identity applies to `set` as-is.
pub fn formula_applies(set: &PointSet) -> bool {
    !set.is_empty() && is_fully_compressed(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::initial_segment;
    use crate::point;

    fn z(k: usize) -> DomainSignature {
        DomainSignature::new(k, 0)
    }

    fn nat(d: usize) -> DomainSignature {
        DomainSignature::new(0, d)
    }

    #[test]
    fn singleton_origin_counts() {
        let s = PointSet::new(z(2), vec![point![0, 0]]).unwrap();
        assert_eq!(boundary_via_projections(&s).unwrap(), 9);
        let m = PointSet::new(DomainSignature::new(1, 1), vec![point![0, 0]]).unwrap();
        assert_eq!(boundary_via_projections(&m).unwrap(), 6);
    }

    #[test]
    fn square_count_matches_direct() {
        let mut pts = Vec::new();
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                pts.push(point![a, b]);
            }
        }
        let sq = PointSet::new(z(2), pts).unwrap();
        assert_eq!(boundary_via_projections(&sq).unwrap(), 25);
        assert_eq!(sq.vertex_boundary().len(), 25);
    }

    #[test]
    fn formula_refuses_uncompressed_input() {
        let s = PointSet::new(z(2), vec![point![5, 0]]).unwrap();
        assert_eq!(
            boundary_via_projections(&s),
            Err(Error::NotCompressed { coordinate: 0 })
        );
        assert_eq!(
            boundary_via_projections(&PointSet::empty(z(2))),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn increments() {
        assert_eq!(
            segment_boundary_increment(&point![0, 0, 1], z(3)).unwrap(),
            9
        );
        assert_eq!(
            segment_boundary_increment(&point![1, 1, 1], z(3)).unwrap(),
            1
        );
        assert_eq!(
            segment_boundary_increment(&point![0, 1, 2], z(3)).unwrap(),
            3
        );
        assert_eq!(
            segment_boundary_increment(&point![0, 1], nat(2)).unwrap(),
            2
        );
        assert!(segment_boundary_increment(&point![0, 0], DomainSignature::new(1, 1)).is_err());
    }

    #[test]
    fn increment_matches_direct_count_at_step_28() {
        // The 29th point of Z^3 is (0,1,2), which has one zero coordinate.
        let seg28 = initial_segment(z(3), 28).unwrap();
        let seg29 = initial_segment(z(3), 29).unwrap();
        let diff = seg29.vertex_boundary().len() - seg28.vertex_boundary().len();
        assert_eq!(diff, 3);
    }

    #[test]
    fn segment_boundary_sizes() {
        assert_eq!(initial_segment_boundary_size(z(2), 1).unwrap(), 9);
        assert_eq!(initial_segment_boundary_size(z(2), 10).unwrap(), 28);
        assert_eq!(initial_segment_boundary_size(z(3), 1).unwrap(), 27);
        assert_eq!(
            initial_segment(z(2), 10).unwrap().vertex_boundary().len(),
            28
        );
        assert_eq!(initial_segment_boundary_size(z(2), 0), Err(Error::ZeroSize));
    }

    #[test]
    fn corner_points() {
        let lone = PointSet::new(z(1), vec![point![0]]).unwrap();
        assert_eq!(find_corner_point(&lone).unwrap(), point![0]);

        let mut pts = Vec::new();
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                pts.push(point![a, b]);
            }
        }
        let sq = PointSet::new(z(2), pts).unwrap();
        assert_eq!(find_corner_point(&sq).unwrap(), point![-1, -1]);

        let two = PointSet::new(nat(2), vec![point![0, 0], point![0, 1]]).unwrap();
        assert_eq!(find_corner_point(&two).unwrap(), point![0, 1]);
    }

    #[test]
    fn peeling_a_corner_matches_the_decrement() {
        let seg = initial_segment(z(2), 7).unwrap();
        let corner = find_corner_point(&seg).unwrap();
        let rest = PointSet::new(
            seg.sig(),
            seg.iter().filter(|&p| *p != corner).cloned().collect(),
        )
        .unwrap();
        let lost = seg.vertex_boundary().len() - rest.vertex_boundary().len();
        assert_eq!(lost as u64, corner_peel_decrement(&corner, seg.sig()));
    }
}
