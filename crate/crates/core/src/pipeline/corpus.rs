//! The guest programs evaluated by the pipeline and their host oracles.
//!
//! Every program reads a 16-byte `key` and `pt`, writes 16 bytes to `ct`,
//! brackets the call to its secured function with TRACE_CTL and PHASE, and
//! exits with the first little-endian word of `ct`.

use aes::cipher::{BlockEncrypt, KeyInit};

#[derive(Debug, Clone, Copy)]
pub struct GuestProgram {
    pub name: &'static str,
    pub source: &'static str,
    /// The function that the configurations protect.
    pub secured: &'static str,
    pub oracle: fn(&[u8; 16], &[u8; 16]) -> [u8; 16],
}

pub const AES8: GuestProgram =
    GuestProgram { name: "aes8", source: include_str!("../../guest/corpus/aes8.s"), secured: "aes_encrypt", oracle: aes_oracle };

pub const XORBLOCK: GuestProgram =
    GuestProgram { name: "xorblock", source: include_str!("../../guest/corpus/xorblock.s"), secured: "xorblock", oracle: xorblock_oracle };

pub const SIMONISH: GuestProgram =
    GuestProgram { name: "simonish", source: include_str!("../../guest/corpus/simonish.s"), secured: "simonish", oracle: simonish_oracle };

pub const CORPUS: [GuestProgram; 3] = [AES8, XORBLOCK, SIMONISH];

pub fn program(name: &str) -> Option<GuestProgram> {
    CORPUS.iter().copied().find(|p| p.name == name)
}

pub fn aes_oracle(key: &[u8; 16], pt: &[u8; 16]) -> [u8; 16] {
    let c = aes::Aes128::new(key.into());
    let mut b = (*pt).into();
    c.encrypt_block(&mut b);
    b.into()
}

fn words(b: &[u8; 16]) -> [u32; 4] {
    std::array::from_fn(|i| u32::from_le_bytes(b[4 * i..4 * i + 4].try_into().unwrap()))
}

fn bytes(w: [u32; 4]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for (i, v) in w.iter().enumerate() {
        out[4 * i..4 * i + 4].copy_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn xorblock_oracle(key: &[u8; 16], pt: &[u8; 16]) -> [u8; 16] {
    let (k, p) = (words(key), words(pt));
    bytes(std::array::from_fn(|i| (p[i].wrapping_add(k[i]) ^ k[(i + 1) & 3]).wrapping_sub(i as u32)))
}

pub fn simonish_oracle(key: &[u8; 16], pt: &[u8; 16]) -> [u8; 16] {
    let k = words(key);
    let [mut x0, mut x1, mut y0, mut y1] = words(pt);
    let f = |w: u32| (w.rotate_left(1) & w.rotate_left(8)) ^ w.rotate_left(2);
    for r in 0..16 {
        let kr = k[r & 3];
        let n0 = f(x0) ^ kr ^ y0;
        let n1 = f(x1).wrapping_add(kr) ^ y1;
        (y0, y1, x0, x1) = (x0, x1, n0, n1);
    }
    bytes([x0, x1, y0, y1])
}
