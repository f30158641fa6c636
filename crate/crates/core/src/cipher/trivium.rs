//! Word-sliced Trivium.
//!
//! Each of the three shift registers lives in a `u128` with register position
//! `q` (1-based, as in the eSTREAM description) stored at bit `128 - q`. A tap
//! word `(reg >> (128 - q)) as u32` then holds the value of `s_q` for 32
//! consecutive clocks in bits 0..32, which lets one update produce 32
//! keystream bits at once.

const KEY_BYTES: usize = 10;
const IV_BYTES: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriviumState {
    a: u128,
    b: u128,
    c: u128,
}

impl std::fmt::Debug for TriviumState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TriviumState({:032x}:{:032x}:{:032x})", self.a, self.b, self.c)
    }
}

#[inline(always)]
fn tap(reg: u128, q: u32) -> u32 {
    (reg >> (128 - q)) as u32
}

/// Places `bytes` (eSTREAM byte order) at register positions 1..=80.
fn load(bytes: &[u8]) -> u128 {
    let mut reg = 0u128;
    for i in 0..80u32 {
        let byte = bytes[bytes.len() - 1 - (i / 8) as usize];
        let bit = (byte >> (7 - i % 8)) & 1;
        reg |= (bit as u128) << (127 - i);
    }
    reg
}

impl TriviumState {
    /// Loads key and IV and runs the 1152 warm-up clocks.
    pub fn new(key: &[u8; KEY_BYTES], iv: &[u8; IV_BYTES]) -> Self {
        let mut st = TriviumState {
            a: load(key),
            b: load(iv),
            // s286, s287, s288 are positions 109..=111 of the third register
            c: 0b111u128 << (128 - 111),
        };
        for _ in 0..1152 / 32 {
            st.clock32();
        }
        st
    }

    /// Advances 32 clocks and returns the keystream bits, first bit in bit 0.
    #[inline]
    pub fn clock32(&mut self) -> u32 {
        let (a, b, c) = (self.a, self.b, self.c);
        let mut t1 = tap(a, 66) ^ tap(a, 93);
        let mut t2 = tap(b, 69) ^ tap(b, 84);
        let mut t3 = tap(c, 66) ^ tap(c, 111);
        let z = t1 ^ t2 ^ t3;
        t1 ^= (tap(a, 91) & tap(a, 92)) ^ tap(b, 78);
        t2 ^= (tap(b, 82) & tap(b, 83)) ^ tap(c, 87);
        t3 ^= (tap(c, 109) & tap(c, 110)) ^ tap(a, 69);
        self.a = (a >> 32) | ((t3 as u128) << 96);
        self.b = (b >> 32) | ((t1 as u128) << 96);
        self.c = (c >> 32) | ((t2 as u128) << 96);
        z
    }
}
