//! AES-128 in counter mode, exposed through the same word-stream interface as
//! Trivium.
//!
//! The initial counter block is the 10 IV bytes followed by 48 zero bits; the
//! block counter is incremented as a big-endian 128-bit integer. Each 16-byte
//! keystream block yields four little-endian words.

use aes::cipher::{BlockEncrypt, KeyInit};
use aes::Aes128;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AesCtrState {
    counter: u128,
    block: [u32; 4],
    used: u8,
}

impl std::fmt::Debug for AesCtrState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AesCtrState(ctr={:032x}, used={})", self.counter, self.used)
    }
}

impl AesCtrState {
    pub fn from_counter(counter: u128) -> Self {
        AesCtrState { counter, block: [0; 4], used: 4 }
    }

    pub fn from_iv(iv: &[u8; 10]) -> Self {
        let mut block = [0u8; 16];
        block[..10].copy_from_slice(iv);
        Self::from_counter(u128::from_be_bytes(block))
    }

    pub fn counter(&self) -> u128 {
        self.counter
    }
}

#[derive(Clone)]
pub struct AesCtr {
    aes: Aes128,
}

impl AesCtr {
    pub fn new(key: &[u8; 16]) -> Self {
        AesCtr { aes: Aes128::new(key.into()) }
    }

    #[inline]
    pub fn next_word(&self, st: &mut AesCtrState) -> u32 {
        if st.used == 4 {
            let mut block = st.counter.to_be_bytes().into();
            self.aes.encrypt_block(&mut block);
            for (i, w) in st.block.iter_mut().enumerate() {
                *w = u32::from_le_bytes(block[4 * i..4 * i + 4].try_into().unwrap());
            }
            st.counter = st.counter.wrapping_add(1);
            st.used = 0;
        }
        let w = st.block[st.used as usize];
        st.used += 1;
        w
    }
}
