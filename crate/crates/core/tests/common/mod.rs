//! Shared helpers for the integration suites.

use isoperim::{CoordType, DomainSignature, LatticePoint, PointSet};

/// Deterministic splitmix64 stream; keeps the bulk suites reproducible
/// without pulling in an RNG crate.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Every signature with `1 <= z + n <= max_dims`.
pub fn signatures_up_to(max_dims: usize) -> Vec<DomainSignature> {
    let mut out = Vec::new();
    for dims in 1..=max_dims {
        for z in 0..=dims {
            out.push(DomainSignature::new(z, dims - z));
        }
    }
    out
}

/// All cells of the sampling window: `[-5, 5]` on Z-type coordinates,
/// `[0, 5]` on N-type.
pub fn sample_window(sig: DomainSignature) -> Vec<LatticePoint> {
    let ranges: Vec<(i64, i64)> = (0..sig.dims())
        .map(|i| match sig.coord_type(i) {
            CoordType::Int => (-5, 5),
            CoordType::Nat => (0, 5),
        })
        .collect();
    let mut out = Vec::new();
    let mut cursor: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        out.push(LatticePoint::new(cursor.clone()));
        let mut pos = ranges.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cursor[pos] < ranges[pos].1 {
                cursor[pos] += 1;
                for later in pos + 1..ranges.len() {
                    cursor[later] = ranges[later].0;
                }
                break;
            }
        }
    }
}

/// A random set of exactly `size` distinct window cells (capped by the
/// window itself).
pub fn random_set(
    rng: &mut Rng,
    sig: DomainSignature,
    window: &[LatticePoint],
    size: usize,
) -> PointSet {
    let size = size.min(window.len());
    let mut picked: Vec<usize> = Vec::with_capacity(size);
    while picked.len() < size {
        let i = rng.below(window.len());
        if !picked.contains(&i) {
            picked.push(i);
        }
    }
    PointSet::new(sig, picked.into_iter().map(|i| window[i].clone()).collect())
        .expect("window cells are valid")
}
