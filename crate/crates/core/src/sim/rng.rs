/// Marsaglia xorshift32 with shifts (13, 17, 5): the guest RNG device.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Xorshift32 {
    state: u32,
}

/// Used when a seed folds to zero, the generator's only fixed point.
const ZERO_SEED_REPLACEMENT: u32 = 0x9E37_79B9;

impl Xorshift32 {
    /// The 64-bit seed is folded to 32 bits by XOR of its halves.
    pub fn new(seed: u64) -> Self {
        let s = (seed ^ (seed >> 32)) as u32;
        Xorshift32 { state: if s == 0 { ZERO_SEED_REPLACEMENT } else { s } }
    }

    pub fn state(&self) -> u32 {
        self.state
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        self.state = x;
        x
    }
}
