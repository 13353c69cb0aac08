//! The enumeration order on `Z^k` and `N^k`.
//!
//! On `Z` the order runs `0, 1, -1, 2, -2, 3, ...`; on `N` it is the usual
//! `0 < 1 < 2 < ...`. On `Z^k` (and `N^k`) two distinct vectors are compared by
//! their latest coordinate value `M(u)`, breaking ties by the first position
//! where that value occurs (later position wins, i.e. comes earlier), and then
//! recursively on the vectors with that position deleted. The resulting total
//! order is a well-order whose initial segments are the boundary minimizers.
//!
//! Mixed `Z^k x N^d` signatures get a plain coordinatewise rank-lexicographic
//! order instead. That order is a storage convention of this crate (it fixes
//! the canonical iteration order of [`PointSet`]); it is *not* the recursive
//! order above and has no successor calculus — no result in this crate depends
//! on it beyond determinism.

use std::cmp::Ordering;

use crate::domain::{CoordType, DomainSignature, LatticePoint};
use crate::error::{Error, Result};
use crate::sets::PointSet;

/// Position of an integer in the list `0, 1, -1, 2, -2, ...`.
///
/// This is a bijection `Z -> N`; [`int_from_rank`] inverts it. Panics on
/// magnitudes within a factor of two of `i64::MAX`, where the rank would not
/// fit — silent wraparound would corrupt every order law downstream.
pub fn int_rank(a: i64) -> u64 {
    let wide = a as i128;
    let r = if wide > 0 { 2 * wide - 1 } else { -2 * wide };
    u64::try_from(r).expect("coordinate magnitude overflows rank arithmetic")
}

/// Inverse of [`int_rank`].
pub fn int_from_rank(rank: u64) -> i64 {
    let half = (rank / 2) as i128;
    let signed = if rank % 2 == 1 { half + 1 } else { -half };
    i64::try_from(signed).expect("rank overflows coordinate width")
}

/// Compares two integers in the order `0, 1, -1, 2, -2, ...`.
pub fn cmp_int(a: i64, b: i64) -> Ordering {
    int_rank(a).cmp(&int_rank(b))
}

/// Immediate successor of `a` in the order on `Z`: rank goes up by one.
pub fn succ_int(a: i64) -> i64 {
    if a == 0 {
        1
    } else if a > 0 {
        -a
    } else {
        a.checked_neg()
            .and_then(|x| x.checked_add(1))
            .expect("coordinate overflow")
    }
}

fn coord_rank(value: i64, ty: CoordType) -> u64 {
    match ty {
        CoordType::Int => int_rank(value),
        CoordType::Nat => {
            debug_assert!(value >= 0);
            value as u64
        }
    }
}

fn coord_succ(value: i64, ty: CoordType) -> i64 {
    match ty {
        CoordType::Int => succ_int(value),
        CoordType::Nat => value.checked_add(1).expect("coordinate overflow"),
    }
}

/// The latest element of `{a-1, a, a+1}` (intersected with the domain) in the
/// 1-D order. For N-type coordinates this is always `a + 1`.
pub fn ball_max(a: i64, ty: CoordType) -> i64 {
    match ty {
        CoordType::Int => {
            if a == 0 {
                -1
            } else if a > 0 {
                a.checked_add(1).expect("coordinate overflow")
            } else {
                a.checked_sub(1).expect("coordinate overflow")
            }
        }
        CoordType::Nat => a.checked_add(1).expect("coordinate overflow"),
    }
}

/// The earliest element of `{a-1, a, a+1}` (intersected with the domain) in
/// the 1-D order.
pub fn ball_min(a: i64, ty: CoordType) -> i64 {
    match ty {
        CoordType::Int => {
            if a == 0 {
                0
            } else if a > 0 {
                a - 1
            } else {
                a + 1
            }
        }
        CoordType::Nat => a.saturating_sub(1).max(0),
    }
}

/// Sort key realizing the order: lexicographic key comparison agrees with
/// [`cmp_points`] for every pair of points of the same signature.
///
/// Keys of points from different signatures are not comparable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderKey(Vec<u64>);

impl OrderKey {
    pub fn ranks(&self) -> &[u64] {
        &self.0
    }
}

fn max_rank_and_first_pos(coords: &[i64], ty: CoordType) -> (u64, usize) {
    let mut best = coord_rank(coords[0], ty);
    let mut pos = 0;
    for (i, &c) in coords.iter().enumerate().skip(1) {
        let r = coord_rank(c, ty);
        if r > best {
            best = r;
            pos = i;
        }
    }
    (best, pos)
}

fn pure_key_into(coords: &[i64], ty: CoordType, out: &mut Vec<u64>) {
    if coords.is_empty() {
        return;
    }
    if coords.len() == 1 {
        out.push(coord_rank(coords[0], ty));
        return;
    }
    let (rank, pos) = max_rank_and_first_pos(coords, ty);
    out.push(rank);
    // Larger first-occurrence position means the vector comes earlier, so the
    // key component must decrease in `pos`.
    out.push((coords.len() - 1 - pos) as u64);
    let mut rest: Vec<i64> = Vec::with_capacity(coords.len() - 1);
    rest.extend_from_slice(&coords[..pos]);
    rest.extend_from_slice(&coords[pos + 1..]);
    pure_key_into(&rest, ty, out);
}

/// The sort key of `point` under `sig`'s canonical order.
pub fn order_key(point: &LatticePoint, sig: DomainSignature) -> Result<OrderKey> {
    sig.validate_point(point)?;
    let mut out = Vec::new();
    if sig.is_pure() {
        let ty = if sig.is_pure_z() {
            CoordType::Int
        } else {
            CoordType::Nat
        };
        pure_key_into(point.coords(), ty, &mut out);
    } else {
        for (i, &c) in point.coords().iter().enumerate() {
            out.push(coord_rank(c, sig.coord_type(i)));
        }
    }
    Ok(OrderKey(out))
}

fn cmp_pure(u: &[i64], v: &[i64], ty: CoordType) -> Ordering {
    debug_assert_eq!(u.len(), v.len());
    if u.is_empty() {
        return Ordering::Equal;
    }
    if u.len() == 1 {
        return coord_rank(u[0], ty).cmp(&coord_rank(v[0], ty));
    }
    let (ru, iu) = max_rank_and_first_pos(u, ty);
    let (rv, iv) = max_rank_and_first_pos(v, ty);
    match ru.cmp(&rv) {
        Ordering::Equal => {}
        ne => return ne,
    }
    // A later first occurrence of the shared maximum comes earlier.
    match iv.cmp(&iu) {
        Ordering::Equal => {}
        ne => return ne,
    }
    let mut u2: Vec<i64> = Vec::with_capacity(u.len() - 1);
    u2.extend_from_slice(&u[..iu]);
    u2.extend_from_slice(&u[iu + 1..]);
    let mut v2: Vec<i64> = Vec::with_capacity(v.len() - 1);
    v2.extend_from_slice(&v[..iu]);
    v2.extend_from_slice(&v[iu + 1..]);
    cmp_pure(&u2, &v2, ty)
}

/// Compares two points of the same signature in the canonical order.
///
/// Pure signatures use the recursive rule; mixed signatures the flat
/// rank-lexicographic storage order.
pub fn cmp_points(u: &LatticePoint, v: &LatticePoint, sig: DomainSignature) -> Result<Ordering> {
    sig.validate_point(u)?;
    sig.validate_point(v)?;
    if sig.is_pure() {
        let ty = if sig.is_pure_z() {
            CoordType::Int
        } else {
            CoordType::Nat
        };
        return Ok(cmp_pure(u.coords(), v.coords(), ty));
    }
    for i in 0..sig.dims() {
        let ru = coord_rank(u.coords()[i], sig.coord_type(i));
        let rv = coord_rank(v.coords()[i], sig.coord_type(i));
        match ru.cmp(&rv) {
            Ordering::Equal => {}
            ne => return Ok(ne),
        }
    }
    Ok(Ordering::Equal)
}

/// Immediate successor of `x` in the order on a pure signature.
///
/// Let `m` be the earliest coordinate value of `x` in the 1-D order and `i_m`
/// the last position carrying it. The successor keeps all entries except:
/// earlier copies of `m` reset to 0, position `i_m` advances to the next 1-D
/// value `s`, and later entries already equal to `s` reset to 0.
pub fn successor(x: &LatticePoint, sig: DomainSignature) -> Result<LatticePoint> {
    sig.validate_point(x)?;
    if !sig.is_pure() {
        return Err(Error::MixedDomain {
            operation: "successor",
        });
    }
    if sig.dims() == 0 {
        return Err(Error::ZeroDimensional);
    }
    let ty = if sig.is_pure_z() {
        CoordType::Int
    } else {
        CoordType::Nat
    };
    let coords = x.coords();
    let mut min_rank = coord_rank(coords[0], ty);
    let mut pos = 0;
    for (i, &c) in coords.iter().enumerate().skip(1) {
        let r = coord_rank(c, ty);
        if r <= min_rank {
            min_rank = r;
            pos = i;
        }
    }
    let bumped = coord_succ(coords[pos], ty);
    let mut out = coords.to_vec();
    for (j, slot) in out.iter_mut().enumerate() {
        if (j < pos && *slot == coords[pos]) || (j > pos && *slot == bumped) {
            *slot = 0;
        }
    }
    out[pos] = bumped;
    Ok(LatticePoint::new(out))
}

/// The first `n` points of a pure signature, in order.
pub fn enumerate(sig: DomainSignature, n: u64) -> Result<Vec<LatticePoint>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if !sig.is_pure() {
        return Err(Error::MixedDomain {
            operation: "enumerate",
        });
    }
    if sig.dims() == 0 {
        return Err(Error::ZeroDimensional);
    }
    let mut out = Vec::with_capacity(usize::try_from(n).expect("size overflows memory"));
    let mut current = sig.origin();
    out.push(current.clone());
    for _ in 1..n {
        current = successor(&current, sig)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// The set of the first `n` points. `n = 0` yields the empty set for any
/// signature; `n >= 1` requires a pure one.
pub fn initial_segment(sig: DomainSignature, n: u64) -> Result<PointSet> {
    if n == 0 {
        return Ok(PointSet::empty(sig));
    }
    PointSet::new(sig, enumerate(sig, n)?)
}
