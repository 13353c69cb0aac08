//! Compression operators.
//!
//! Three fiber rewrites, each of which preserves the set's size and never
//! enlarges its vertex boundary:
//!
//! * central compression along a Z-type coordinate replaces every 1-D fiber by
//!   the centered segment of the same size (`{-a..a}` or `{-a..a+1}`);
//! * downward compression along an N-type coordinate replaces every fiber by
//!   `{0..size-1}`;
//! * section compression on a pure `Z^k` set (`k >= 2`) replaces every
//!   `(k-1)`-dimensional section fixing one coordinate by the initial segment
//!   of the same size.
//!
//! [`centralize`] iterates the single-coordinate operators round-robin until a
//! full pass changes nothing. The loop terminates because the centered and
//! downward segments are the rank-sum-minimal fibers of their size, so the
//! total coordinate rank strictly decreases whenever anything moves.

use std::collections::HashMap;

use crate::domain::{CoordType, DomainSignature, LatticePoint};
use crate::error::{Error, Result};
use crate::ordering::initial_segment;
use crate::sets::PointSet;

/// A single compression operator, tagged with its coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Compression {
    /// Centered 1-D fibers along a Z-type coordinate.
    Central(usize),
    /// Zero-anchored 1-D fibers along an N-type coordinate.
    Downward(usize),
    /// Initial-segment sections fixing a coordinate of a pure Z set.
    InitialSections(usize),
}

impl Compression {
    pub fn apply(self, set: &PointSet) -> Result<PointSet> {
        match self {
            Compression::Central(i) => central_compress(set, i),
            Compression::Downward(j) => downward_compress(set, j),
            Compression::InitialSections(i) => section_compress(set, i),
        }
    }
}

/// Groups the set into 1-D fibers along `coord`: profile (the other
/// coordinates) -> the values present at that profile.
fn fibers_along(set: &PointSet, coord: usize) -> HashMap<Vec<i64>, Vec<i64>> {
    let mut fibers: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    for p in set.iter() {
        let mut profile = p.coords().to_vec();
        let value = profile.remove(coord);
        fibers.entry(profile).or_default().push(value);
    }
    fibers
}

fn rebuild(sig: DomainSignature, coord: usize, fibers: HashMap<Vec<i64>, Vec<i64>>) -> PointSet {
    let mut pts = Vec::new();
    for (profile, values) in fibers {
        for v in values {
            let mut coords = profile.clone();
            coords.insert(coord, v);
            pts.push(LatticePoint::new(coords));
        }
    }
    PointSet::new(sig, pts).expect("rebuilt points are valid")
}

/// The centered segment of `size` integers: `{-a..a}` when odd, `{-a..a+1}`
/// when even. This is exactly the size-`size` initial segment of `Z`.
fn centered_fiber(size: usize) -> impl Iterator<Item = i64> {
    let lo = -(((size as i64) - 1) / 2);
    lo..lo + size as i64
}

fn check_coord(set: &PointSet, coord: usize, want: CoordType) -> Result<()> {
    let dims = set.sig().dims();
    if coord >= dims {
        return Err(Error::IndexOutOfRange { index: coord, dims });
    }
    match (want, set.sig().coord_type(coord)) {
        (CoordType::Int, CoordType::Int) | (CoordType::Nat, CoordType::Nat) => Ok(()),
        (CoordType::Int, CoordType::Nat) => Err(Error::NotZCoordinate { index: coord }),
        (CoordType::Nat, CoordType::Int) => Err(Error::NotNCoordinate { index: coord }),
    }
}

/// Recenter every 1-D fiber along the Z-type coordinate `coord`.
pub fn central_compress(set: &PointSet, coord: usize) -> Result<PointSet> {
    check_coord(set, coord, CoordType::Int)?;
    let mut fibers = fibers_along(set, coord);
    for values in fibers.values_mut() {
        *values = centered_fiber(values.len()).collect();
    }
    Ok(rebuild(set.sig(), coord, fibers))
}

/// Drop every 1-D fiber along the N-type coordinate `coord` to `{0..size-1}`.
pub fn downward_compress(set: &PointSet, coord: usize) -> Result<PointSet> {
    check_coord(set, coord, CoordType::Nat)?;
    let mut fibers = fibers_along(set, coord);
    for values in fibers.values_mut() {
        *values = (0..values.len() as i64).collect();
    }
    Ok(rebuild(set.sig(), coord, fibers))
}

/// Replace every section of a pure `Z^k` set (`k >= 2`) fixing `coord` by the
/// initial segment of `Z^{k-1}` with the same size.
pub fn section_compress(set: &PointSet, coord: usize) -> Result<PointSet> {
    if !set.sig().is_pure_z() {
        return Err(Error::MixedDomain {
            operation: "section compression",
        });
    }
    if set.sig().dims() < 2 {
        return Err(Error::TooFewCoordinates {
            operation: "section compression",
            need: 2,
        });
    }
    let dims = set.sig().dims();
    if coord >= dims {
        return Err(Error::IndexOutOfRange { index: coord, dims });
    }
    let sub_sig = DomainSignature::new(dims - 1, 0);
    let mut sections: HashMap<i64, usize> = HashMap::new();
    for p in set.iter() {
        *sections.entry(p.coords()[coord]).or_default() += 1;
    }
    let mut pts = Vec::with_capacity(set.len());
    for (fixed, size) in sections {
        for q in initial_segment(sub_sig, size as u64)?.iter() {
            pts.push(q.insert_coord(coord, fixed));
        }
    }
    PointSet::new(set.sig(), pts)
}

/// Is every 1-D fiber along the Z-type coordinate `coord` a centered segment?
pub fn is_centrally_compressed(set: &PointSet, coord: usize) -> Result<bool> {
    check_coord(set, coord, CoordType::Int)?;
    Ok(fibers_along(set, coord).values_mut().all(|values| {
        values.sort_unstable();
        centered_fiber(values.len()).eq(values.iter().copied())
    }))
}

/// Is every 1-D fiber along the N-type coordinate `coord` of the form `{0..a}`?
pub fn is_downward_compressed(set: &PointSet, coord: usize) -> Result<bool> {
    check_coord(set, coord, CoordType::Nat)?;
    Ok(fibers_along(set, coord).values_mut().all(|values| {
        values.sort_unstable();
        (0..values.len() as i64).eq(values.iter().copied())
    }))
}

/// Compressed in every coordinate: centrally in each Z-type, downward in each
/// N-type. This is the precondition of the projection-sum boundary count.
pub fn is_fully_compressed(set: &PointSet) -> bool {
    first_uncompressed_coord(set).is_none()
}

pub(crate) fn first_uncompressed_coord(set: &PointSet) -> Option<usize> {
    let sig = set.sig();
    (0..sig.dims()).find(|&i| {
        let ok = match sig.coord_type(i) {
            CoordType::Int => is_centrally_compressed(set, i),
            CoordType::Nat => is_downward_compressed(set, i),
        };
        !ok.expect("coordinate type checked")
    })
}

/// Apply the type-appropriate single-coordinate compression.
pub fn compress_coordinate(set: &PointSet, coord: usize) -> Result<PointSet> {
    let dims = set.sig().dims();
    if coord >= dims {
        return Err(Error::IndexOutOfRange { index: coord, dims });
    }
    match set.sig().coord_type(coord) {
        CoordType::Int => central_compress(set, coord),
        CoordType::Nat => downward_compress(set, coord),
    }
}

/// Round-robin all single-coordinate compressions until a full pass is a
/// no-op. The result has the same size, a boundary no larger than the input's,
/// and is compressed in every coordinate.
pub fn centralize(set: &PointSet) -> PointSet {
    let mut current = set.clone();
    loop {
        let mut changed = false;
        for coord in 0..current.sig().dims() {
            let next = compress_coordinate(&current, coord).expect("coordinate in range");
            if next != current {
                changed = true;
                current = next;
            }
        }
        if !changed {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point;

    fn z(k: usize) -> DomainSignature {
        DomainSignature::new(k, 0)
    }

    fn set(sig: DomainSignature, pts: Vec<LatticePoint>) -> PointSet {
        PointSet::new(sig, pts).unwrap()
    }

    #[test]
    fn central_fibers() {
        // one fiber {3,4,5} along coordinate 0
        let s = set(z(2), vec![point![3, 7], point![4, 7], point![5, 7]]);
        let c = central_compress(&s, 0).unwrap();
        assert_eq!(
            c,
            set(z(2), vec![point![-1, 7], point![0, 7], point![1, 7]])
        );
        // even fiber {10,11,12,13} -> {-1,0,1,2}
        let s = set(z(1), vec![point![10], point![11], point![12], point![13]]);
        let c = central_compress(&s, 0).unwrap();
        assert_eq!(
            c,
            set(z(1), vec![point![-1], point![0], point![1], point![2]])
        );
        assert_eq!(central_compress(&c, 0).unwrap(), c);
    }

    #[test]
    fn downward_fibers() {
        let sig = DomainSignature::new(0, 1);
        let s = set(sig, vec![point![2], point![5], point![7]]);
        let d = downward_compress(&s, 0).unwrap();
        assert_eq!(d, set(sig, vec![point![0], point![1], point![2]]));
        assert_eq!(downward_compress(&d, 0).unwrap(), d);
        let zero = set(sig, vec![point![0]]);
        assert_eq!(downward_compress(&zero, 0).unwrap(), zero);
    }

    #[test]
    fn coordinate_type_errors() {
        let sig = DomainSignature::new(1, 1);
        let s = set(sig, vec![point![0, 0]]);
        assert_eq!(
            central_compress(&s, 1),
            Err(Error::NotZCoordinate { index: 1 })
        );
        assert_eq!(
            downward_compress(&s, 0),
            Err(Error::NotNCoordinate { index: 0 })
        );
        assert!(central_compress(&s, 2).is_err());
    }

    #[test]
    fn section_compress_fixpoints() {
        // Compressed in every section but not an initial segment.
        let a = set(
            z(3),
            vec![
                point![0, 0, 0],
                point![0, 0, 1],
                point![0, 1, 0],
                point![1, 0, 0],
            ],
        );
        for i in 0..3 {
            assert_eq!(section_compress(&a, i).unwrap(), a);
        }
        assert_ne!(a, initial_segment(z(3), 4).unwrap());

        let seg = initial_segment(z(2), 7).unwrap();
        for i in 0..2 {
            assert_eq!(section_compress(&seg, i).unwrap(), seg);
        }
    }

    #[test]
    fn section_compress_two_rows() {
        let a = set(z(2), vec![point![0, 5], point![0, 7]]);
        // Fixing coordinate 1 leaves two singleton sections, each already {0}.
        assert_eq!(section_compress(&a, 1).unwrap(), a);
        // Fixing coordinate 0 collects one section of size 2 -> {0, 1}.
        assert_eq!(
            section_compress(&a, 0).unwrap(),
            set(z(2), vec![point![0, 0], point![0, 1]])
        );
    }

    #[test]
    fn section_compress_requires_pure_z() {
        let s = set(DomainSignature::new(1, 1), vec![point![0, 0]]);
        assert!(section_compress(&s, 0).is_err());
        let one_d = set(z(1), vec![point![4]]);
        assert_eq!(
            section_compress(&one_d, 0),
            Err(Error::TooFewCoordinates {
                operation: "section compression",
                need: 2
            })
        );
    }

    #[test]
    fn centralize_examples() {
        let lone = set(z(2), vec![point![7, 3]]);
        assert_eq!(centralize(&lone), set(z(2), vec![point![0, 0]]));

        let block = set(
            z(2),
            vec![point![0, 0], point![0, 1], point![1, 0], point![1, 1]],
        );
        assert_eq!(centralize(&block), block);
        assert!(is_fully_compressed(&block));
    }

    #[test]
    fn centralize_is_a_fixpoint_with_no_worse_boundary() {
        let s = set(
            z(2),
            vec![
                point![4, -3],
                point![4, -2],
                point![5, 0],
                point![-2, 1],
                point![0, 6],
                point![1, 6],
                point![2, 6],
                point![9, 9],
            ],
        );
        let c = centralize(&s);
        assert_eq!(c.len(), s.len());
        assert!(c.vertex_boundary().len() <= s.vertex_boundary().len());
        assert!(is_fully_compressed(&c));
        assert_eq!(centralize(&c), c);
    }
}
