//! Bipartitions of n qubits as bitmasks, and the index bijection between a
//! global basis label and its (subsystem-A, subsystem-B) label pair.
//!
//! Bit `i` of a mask set means qubit `i` belongs to subsystem A. Subsystem
//! indices are formed by compressing the selected bits, least significant
//! first, so the map `k ↔ (j_A, l_B)` is a bijection onto
//! `{0..N_A−1} × {0..N_B−1}` with `N_A·N_B = 2^n`.

use crate::error::{Error, Result};

/// A bipartition of `n` qubits into subsystems A (mask bits set) and B.
///
/// Both subsystems are non-empty. Balanced masks (`n_A = ⌊n/2⌋`) are what
/// [`enumerate_balanced`] yields; [`complement`](Self::complement) of a
/// balanced mask at odd `n` carries weight `⌈n/2⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartitionMask {
    n: u32,
    mask: u64,
}

impl BipartitionMask {
    pub fn new(n: u32, mask: u64) -> Result<Self> {
        if !(2..=63).contains(&n) {
            return Err(Error::invalid(format!(
                "bipartition needs 2..=63 qubits, got n = {n}"
            )));
        }
        let full = (1u64 << n) - 1;
        if mask == 0 || mask >= full {
            return Err(Error::invalid(format!(
                "mask {mask:#x} does not split {n} qubits into two non-empty subsystems"
            )));
        }
        Ok(BipartitionMask { n, mask })
    }

    pub fn qubit_count(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Number of qubits in subsystem A.
    pub fn n_a(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Number of qubits in subsystem B.
    pub fn n_b(&self) -> u32 {
        self.n - self.n_a()
    }

    /// Dimension of subsystem A, `2^n_A`.
    pub fn dim_a(&self) -> usize {
        1usize << self.n_a()
    }

    /// Dimension of subsystem B, `2^n_B`.
    pub fn dim_b(&self) -> usize {
        1usize << self.n_b()
    }

    /// Whether `n_A = ⌊n/2⌋`.
    pub fn is_balanced(&self) -> bool {
        self.n_a() == self.n / 2
    }

    pub(crate) fn complement_bits(&self) -> u64 {
        !self.mask & ((1u64 << self.n) - 1)
    }

    /// The same split viewed from the other side: B becomes the selected
    /// subsystem. An involution.
    pub fn complement(&self) -> BipartitionMask {
        BipartitionMask {
            n: self.n,
            mask: self.complement_bits(),
        }
    }

    /// Split a basis label into `(j_A, l_B)` by compressing the bits of `k`
    /// at mask positions (A) and at the remaining positions (B), keeping
    /// relative order, least significant first.
    pub fn split_index(&self, k: u64) -> Result<(u64, u64)> {
        if k >= 1u64 << self.n {
            return Err(Error::invalid(format!(
                "basis index {k} out of range for n = {}",
                self.n
            )));
        }
        Ok((
            compress_bits(k, self.mask),
            compress_bits(k, self.complement_bits()),
        ))
    }

    /// Inverse of [`split_index`](Self::split_index): scatter `j_A` into the
    /// mask positions and `l_B` into the rest.
    pub fn join_index(&self, j_a: u64, l_b: u64) -> u64 {
        scatter_bits(j_a, self.mask) | scatter_bits(l_b, self.complement_bits())
    }

    /// Render as `0x`-prefixed uppercase hex, zero-padded to ⌈n/4⌉ digits
    /// (the form used in CSV output).
    pub fn hex_string(&self) -> String {
        let digits = (self.n as usize).div_ceil(4);
        format!("0x{:0width$X}", self.mask, width = digits)
    }
}

/// Keep the bits of `k` selected by `mask`, packed toward bit 0 in order.
fn compress_bits(k: u64, mut mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0u32;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if k & low != 0 {
            out |= 1u64 << bit;
        }
        bit += 1;
        mask &= mask - 1;
    }
    out
}

/// Spread the low bits of `value` into the set positions of `mask`, in order.
fn scatter_bits(value: u64, mut mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0u32;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if value & (1u64 << bit) != 0 {
            out |= low;
        }
        bit += 1;
        mask &= mask - 1;
    }
    out
}

/// All submasks of `mask` in ascending numeric order, 2^popcount of them.
/// Ascending submask order equals ascending compressed-index order, which is
/// what the purity kernel's gather relies on.
pub(crate) fn submasks_ascending(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask {
            None
        } else {
            Some(current.wrapping_sub(mask) & mask)
        };
        Some(current)
    })
}

/// Iterator over every n-bit mask of weight ⌊n/2⌋ in ascending order.
pub struct BalancedMasks {
    n: u32,
    limit: u64,
    next: Option<u64>,
}

impl Iterator for BalancedMasks {
    type Item = BipartitionMask;

    fn next(&mut self) -> Option<Self::Item> {
        let mask = self.next?;
        let succ = next_same_popcount(mask);
        self.next = (succ < self.limit).then_some(succ);
        Some(BipartitionMask { n: self.n, mask })
    }
}

/// Next integer above `v` with the same popcount (Gosper's hack).
fn next_same_popcount(v: u64) -> u64 {
    let t = v | (v - 1);
    (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1))
}

/// Enumerate every balanced bipartition of `n ≥ 2` qubits in ascending mask
/// order. The sequence has exactly `binomial(n, ⌊n/2⌋)` elements; for even
/// `n` a mask and its complement both appear.
pub fn enumerate_balanced(n: u32) -> Result<BalancedMasks> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "balanced bipartitions need n ≥ 2, got {n}"
        )));
    }
    if n > 63 {
        return Err(Error::invalid(format!("n = {n} exceeds the 63-bit mask limit")));
    }
    let n_a = n / 2;
    Ok(BalancedMasks {
        n,
        limit: 1u64 << n,
        next: Some((1u64 << n_a) - 1),
    })
}

/// binomial(n, ⌊n/2⌋): the number of balanced bipartitions of `n` qubits.
pub fn balanced_count(n: u32) -> u64 {
    let k = u64::from(n / 2);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (u64::from(n) - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn enumerate_small_counts() {
        let masks: Vec<u64> = enumerate_balanced(2).unwrap().map(|b| b.mask()).collect();
        assert_eq!(masks, vec![0b01, 0b10]);

        let masks: Vec<_> = enumerate_balanced(5).unwrap().collect();
        assert_eq!(masks.len(), 10);
        assert!(masks.iter().all(|b| b.n_a() == 2 && b.n_b() == 3));

        assert_eq!(enumerate_balanced(12).unwrap().count(), 924);
        assert!(enumerate_balanced(1).is_err());
    }

    #[test]
    fn enumerate_ascending_no_duplicates() {
        for n in 2..=14 {
            let masks: Vec<u64> = enumerate_balanced(n).unwrap().map(|b| b.mask()).collect();
            assert_eq!(masks.len() as u64, balanced_count(n), "n={n}");
            assert!(masks.windows(2).all(|w| w[0] < w[1]), "n={n}");
        }
    }

    #[test]
    fn even_n_contains_complement_pairs() {
        let set: HashSet<u64> = enumerate_balanced(8).unwrap().map(|b| b.mask()).collect();
        for &m in &set {
            assert!(set.contains(&(!m & 0xFF)));
        }
    }

    #[test]
    fn split_index_worked_example() {
        // n=4, mask 0011, k = 13 = 1101b: A bits (1,0) -> 1, B bits (1,1) -> 3.
        let b = BipartitionMask::new(4, 0b0011).unwrap();
        assert_eq!(b.split_index(13).unwrap(), (1, 3));
        assert_eq!(b.split_index(0).unwrap(), (0, 0));
        assert!(b.split_index(16).is_err());
    }

    #[test]
    fn split_index_bijective_exhaustive() {
        let b = BipartitionMask::new(3, 0b010).unwrap();
        let pairs: HashSet<(u64, u64)> = (0..8).map(|k| b.split_index(k).unwrap()).collect();
        assert_eq!(pairs.len(), 8);

        for n in 2..=10u32 {
            for b in enumerate_balanced(n).unwrap() {
                let mut seen = HashSet::new();
                for k in 0..1u64 << n {
                    let (j, l) = b.split_index(k).unwrap();
                    assert!(j < b.dim_a() as u64 && l < b.dim_b() as u64);
                    assert!(seen.insert((j, l)), "collision at n={n} mask={:#x}", b.mask());
                    assert_eq!(b.join_index(j, l), k);
                }
            }
        }
    }

    #[test]
    fn complement_involution_and_weights() {
        let b = BipartitionMask::new(4, 0b0011).unwrap();
        assert_eq!(b.complement().mask(), 0b1100);
        assert_eq!(b.complement().complement(), b);

        for b in enumerate_balanced(5).unwrap() {
            assert_eq!(b.n_a(), 2);
            assert_eq!(b.complement().n_a(), 3);
        }
    }

    #[test]
    fn mask_validation() {
        assert!(BipartitionMask::new(4, 0).is_err());
        assert!(BipartitionMask::new(4, 0b1111).is_err());
        assert!(BipartitionMask::new(4, 0b10000).is_err());
        assert!(BipartitionMask::new(1, 1).is_err());
    }

    #[test]
    fn hex_rendering() {
        let b = BipartitionMask::new(12, 0x0F3).unwrap();
        assert_eq!(b.hex_string(), "0x0F3");
        let b = BipartitionMask::new(5, 0b00011).unwrap();
        assert_eq!(b.hex_string(), "0x03");
    }

    #[test]
    fn submasks_cover_in_order() {
        let subs: Vec<u64> = submasks_ascending(0b1010).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);

        // Ascending submask order must match compressed-index order.
        for (j, s) in submasks_ascending(0b10110).enumerate() {
            assert_eq!(compress_bits(s, 0b10110), j as u64);
        }
    }

    proptest! {
        #[test]
        fn split_then_join_roundtrips(n in 2u32..=16, mask_bits in 1u64..u64::MAX, k_bits: u64) {
            let full = (1u64 << n) - 1;
            let mask = mask_bits & full;
            prop_assume!(mask != 0 && mask != full);
            let b = BipartitionMask::new(n, mask).unwrap();
            let k = k_bits & full;
            let (j, l) = b.split_index(k).unwrap();
            prop_assert_eq!(b.join_index(j, l), k);
        }
    }
}
