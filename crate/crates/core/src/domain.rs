//! Domains and points.
//!
//! The vertex set is `Z^k x N^d`: the first `k` coordinates range over all
//! integers, the last `d` over the nonnegative integers. Two vertices are
//! adjacent exactly when their l-infinity distance is 1.

use std::fmt;

use crate::error::{Error, Result};

/// Whether a coordinate ranges over `Z` or over `N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoordType {
    /// Unrestricted integer coordinate.
    Int,
    /// Nonnegative integer coordinate.
    Nat,
}

/// The shape of a domain: `z` integer coordinates followed by `n` nonnegative ones.
///
/// Lattice work assumes at least one coordinate; the zero-dimensional signature
/// exists only as the target of a full projection (its sole point is the empty
/// tuple).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DomainSignature {
    z: usize,
    n: usize,
}

impl DomainSignature {
    pub fn new(z: usize, n: usize) -> Self {
        DomainSignature { z, n }
    }

    /// Number of Z-type coordinates.
    pub fn z(&self) -> usize {
        self.z
    }

    /// Number of N-type coordinates.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> usize {
        self.z + self.n
    }

    pub fn coord_type(&self, index: usize) -> CoordType {
        if index < self.z {
            CoordType::Int
        } else {
            CoordType::Nat
        }
    }

    pub fn is_pure_z(&self) -> bool {
        self.n == 0
    }

    pub fn is_pure_n(&self) -> bool {
        self.z == 0
    }

    /// Pure means all coordinates share one type (this includes the 0-dim case).
    pub fn is_pure(&self) -> bool {
        self.z == 0 || self.n == 0
    }

    pub fn origin(&self) -> LatticePoint {
        LatticePoint::new(vec![0; self.dims()])
    }

    /// The signature left after deleting the given coordinate indices.
    ///
    /// Indices must be in range; duplicates are ignored.
    pub fn delete_coords(&self, indices: &[usize]) -> Result<DomainSignature> {
        let mut gone = vec![false; self.dims()];
        for &i in indices {
            if i >= self.dims() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dims: self.dims(),
                });
            }
            gone[i] = true;
        }
        let z = (0..self.z).filter(|&i| !gone[i]).count();
        let n = (self.z..self.dims()).filter(|&i| !gone[i]).count();
        Ok(DomainSignature { z, n })
    }

    /// Checks arity and the nonnegativity of N-type coordinates.
    pub fn validate_point(&self, point: &LatticePoint) -> Result<()> {
        if point.dims() != self.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                found: point.dims(),
            });
        }
        for i in self.z..self.dims() {
            if point.coords()[i] < 0 {
                return Err(Error::NegativeCoordinate {
                    index: i,
                    value: point.coords()[i],
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for DomainSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{} x N^{}", self.z, self.n)
    }
}

/// A point of the lattice: a fixed-length integer vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dims(&self) -> usize {
        self.coords.len()
    }

    /// Copy with coordinate `index` replaced by `value`.
    pub fn with_coord(&self, index: usize, value: i64) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords[index] = value;
        LatticePoint { coords }
    }

    /// Copy with `value` inserted so that it lands at position `index`.
    pub fn insert_coord(&self, index: usize, value: i64) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords.insert(index, value);
        LatticePoint { coords }
    }

    /// Copy with the given coordinate positions removed (duplicates ignored).
    pub fn delete_coords(&self, indices: &[usize]) -> LatticePoint {
        let mut gone = vec![false; self.coords.len()];
        for &i in indices {
            gone[i] = true;
        }
        let coords = self
            .coords
            .iter()
            .enumerate()
            .filter(|(i, _)| !gone[*i])
            .map(|(_, &c)| c)
            .collect();
        LatticePoint { coords }
    }
}

// Hashes and compares exactly like its coordinate slice, so hash sets of
// points can be probed with a borrowed `&[i64]`.
impl std::borrow::Borrow<[i64]> for LatticePoint {
    fn borrow(&self) -> &[i64] {
        &self.coords
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint::new(coords)
    }
}

impl From<&[i64]> for LatticePoint {
    fn from(coords: &[i64]) -> Self {
        LatticePoint::new(coords.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Convenience for tests and examples: a point from a coordinate list.
#[macro_export]
macro_rules! point {
    ($($c:expr),* $(,)?) => {
        $crate::domain::LatticePoint::new(vec![$($c as i64),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_partitions_coordinates() {
        let sig = DomainSignature::new(2, 1);
        assert_eq!(sig.dims(), 3);
        assert_eq!(sig.coord_type(0), CoordType::Int);
        assert_eq!(sig.coord_type(1), CoordType::Int);
        assert_eq!(sig.coord_type(2), CoordType::Nat);
        assert!(!sig.is_pure());
        assert!(DomainSignature::new(3, 0).is_pure_z());
        assert!(DomainSignature::new(0, 2).is_pure_n());
    }

    #[test]
    fn validate_rejects_negative_nat() {
        let sig = DomainSignature::new(1, 1);
        assert!(sig.validate_point(&point![5, 0]).is_ok());
        assert_eq!(
            sig.validate_point(&point![5, -1]),
            Err(Error::NegativeCoordinate {
                index: 1,
                value: -1
            })
        );
        assert_eq!(
            sig.validate_point(&point![1]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn delete_coords_splits_types() {
        let sig = DomainSignature::new(2, 2);
        let smaller = sig.delete_coords(&[0, 3]).unwrap();
        assert_eq!((smaller.z(), smaller.n()), (1, 1));
        let zero = sig.delete_coords(&[0, 1, 2, 3]).unwrap();
        assert_eq!(zero.dims(), 0);
    }

    #[test]
    fn point_surgery() {
        let p = point![4, -1, 0];
        assert_eq!(p.with_coord(1, 7), point![4, 7, 0]);
        assert_eq!(p.insert_coord(1, 9), point![4, 9, -1, 0]);
        assert_eq!(p.delete_coords(&[0, 2]), point![-1]);
        assert_eq!(p.to_string(), "4 -1 0");
    }
}
