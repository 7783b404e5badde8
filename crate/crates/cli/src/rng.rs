//! The sample stream generator.
//!
//! A 64-bit linear congruential generator with Knuth's MMIX constants. Each
//! draw returns the high 32 bits of the new state. Bounded draws reject the
//! incomplete top bucket so every residue is equally likely. The constants
//! and the seeding below are part of the report contract.

pub const MULTIPLIER: u64 = 6364136223846793005;
pub const INCREMENT: u64 = 1442695040888963407;
/// Spreads consecutive stream positions across the state space.
pub const POSITION_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(state: u64) -> Self {
        Lcg { state }
    }

    /// The independent stream for one sample of one identity.
    pub fn for_sample(seed: u64, id: &str, position: u64) -> Self {
        let state = seed ^ fnv1a(id.as_bytes()) ^ position.wrapping_mul(POSITION_STRIDE);
        let mut g = Lcg::new(state);
        g.next_u32();
        g
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0, "empty range");
        let zone = u32::MAX - (u32::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u32();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        let width = u32::try_from(hi - lo + 1).expect("range fits in u32");
        lo + i64::from(self.below(width))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_first_draws() {
        let mut g = Lcg::new(0);
        assert_eq!(g.next_u32(), (INCREMENT >> 32) as u32);
        let s1 = INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(g.next_u32(), (s1 >> 32) as u32);
    }

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut g = Lcg::new(7);
        for bound in [1u32, 2, 3, 5, 25, 1 << 31, u32::MAX] {
            for _ in 0..200 {
                assert!(g.below(bound) < bound);
            }
        }
        for _ in 0..200 {
            let v = g.range_i64(-12, 12);
            assert!((-12..=12).contains(&v));
        }
    }

    #[test]
    fn streams_differ_by_id_and_position() {
        let a = Lcg::for_sample(1, "TI1", 0).state();
        assert_ne!(a, Lcg::for_sample(1, "TI2", 0).state());
        assert_ne!(a, Lcg::for_sample(1, "TI1", 1).state());
        assert_eq!(a, Lcg::for_sample(1, "TI1", 0).state());
    }
}
