//! Deterministic seed derivation.
//!
//! Every randomized work item (graph sampling, optimizer restarts, grid
//! cells) owns a seed derived from the master seed and the item's identity,
//! never from its position in a shared stream. This keeps outputs
//! byte-identical at any parallelism level.

/// SplitMix64 step; the standard finalizer with full avalanche.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Folds a list of tag values into `base` one SplitMix64 step at a time.
pub fn derive_seed(base: u64, tags: &[u64]) -> u64 {
    let mut s = splitmix64(base);
    for &t in tags {
        s = splitmix64(s ^ t);
    }
    s
}

/// Stable 64-bit FNV-1a over a byte string, for tagging seeds with labels.
pub fn tag(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivation_is_stable() {
        // Frozen values; a change here would silently break every seeded run.
        assert_eq!(splitmix64(0), 0xe220a8397b1dcdaf);
        assert_eq!(derive_seed(42, &[1, 2]), derive_seed(42, &[1, 2]));
        assert_ne!(derive_seed(42, &[1, 2]), derive_seed(42, &[2, 1]));
        assert_eq!(tag("ma-qaoa"), tag("ma-qaoa"));
        assert_ne!(tag("ma-qaoa"), tag("qaoa-plus"));
    }
}
