//! Patchable instruction-level encryption.
//!
//! A [`Cipher`] is a keyed XOR-keystream generator. [`Cipher::init`] turns an
//! IV into a fresh [`CipherState`]; every call to [`Cipher::encrypt_word`]
//! consumes exactly one 32-bit keystream word. Because encryption is a plain
//! XOR, a ciphertext word can be patched after emission:
//! `enc(state, m ^ d) == patch_ciphertext(enc(state, m), d)`.

mod aes_ctr;
mod trivium;

use std::fmt;
use std::str::FromStr;

pub use aes_ctr::{AesCtr, AesCtrState};
pub use trivium::TriviumState;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CipherError {
    #[error("{backend} expects a {expected}-bit key, got {got} bits")]
    KeyWidth { backend: Backend, expected: usize, got: usize },
    #[error("invalid hex string: {0}")]
    Hex(String),
    #[error("unknown cipher backend `{0}`")]
    UnknownBackend(String),
    #[error("k_T must be at least 1")]
    ZeroInitCost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Trivium,
    AesCtr,
    /// All-zero keystream. Models a core whose decryption unit is never
    /// engaged: IV slots are still skipped but words pass through unchanged.
    Null,
}

impl Backend {
    pub fn key_bits(self) -> Option<usize> {
        match self {
            Backend::Trivium => Some(80),
            Backend::AesCtr => Some(128),
            Backend::Null => None,
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Trivium => "trivium",
            Backend::AesCtr => "aes-ctr",
            Backend::Null => "null",
        })
    }
}

impl FromStr for Backend {
    type Err = CipherError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivium" => Ok(Backend::Trivium),
            "aes-ctr" | "aes" => Ok(Backend::AesCtr),
            "null" => Ok(Backend::Null),
            other => Err(CipherError::UnknownBackend(other.to_string())),
        }
    }
}

/// Secret key. Debug output never shows the key material.
#[derive(Clone, PartialEq, Eq)]
pub struct Key {
    bytes: Vec<u8>,
}

impl Key {
    pub fn from_bytes(bytes: &[u8]) -> Self {
        Key { bytes: bytes.to_vec() }
    }

    pub fn from_hex(s: &str) -> Result<Self, CipherError> {
        let s = s.trim().trim_start_matches("0x");
        hex::decode(s).map(|bytes| Key { bytes }).map_err(|e| CipherError::Hex(e.to_string()))
    }

    pub fn bits(&self) -> usize {
        self.bytes.len() * 8
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key({} bits)", self.bits())
    }
}

/// 80-bit IV plus the 16 padding bits that fill its 3-word slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Iv {
    pub bytes: [u8; 10],
    pub pad: u16,
}

impl Iv {
    pub fn new(bytes: [u8; 10]) -> Self {
        Iv { bytes, pad: 0 }
    }

    /// Decodes a slot: word 0 holds IV bytes 0..4, word 1 bytes 4..8, the low
    /// half of word 2 bytes 8..10 and its high half the padding.
    pub fn from_slot_words(w: [u32; 3]) -> Self {
        let mut bytes = [0u8; 10];
        bytes[..4].copy_from_slice(&w[0].to_le_bytes());
        bytes[4..8].copy_from_slice(&w[1].to_le_bytes());
        bytes[8..].copy_from_slice(&w[2].to_le_bytes()[..2]);
        Iv { bytes, pad: (w[2] >> 16) as u16 }
    }

    pub fn to_slot_words(&self) -> [u32; 3] {
        let b = &self.bytes;
        [
            u32::from_le_bytes([b[0], b[1], b[2], b[3]]),
            u32::from_le_bytes([b[4], b[5], b[6], b[7]]),
            u32::from_le_bytes([b[8], b[9], 0, 0]) | (self.pad as u32) << 16,
        ]
    }

    pub fn from_hex(s: &str) -> Result<Self, CipherError> {
        let v = hex::decode(s.trim().trim_start_matches("0x")).map_err(|e| CipherError::Hex(e.to_string()))?;
        let bytes: [u8; 10] = v.try_into().map_err(|v: Vec<u8>| CipherError::Hex(format!("IV must be 10 bytes, got {}", v.len())))?;
        Ok(Iv::new(bytes))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CipherState {
    Trivium(TriviumState),
    AesCtr(AesCtrState),
    Null,
}

/// Backend choice plus its modeled hardware cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CipherConfig {
    pub backend: Backend,
    /// Keystream bits produced per hardware cycle. Only informs `k_t`.
    pub width_bits: u32,
    /// Cycles charged for one cipher (re)initialization.
    pub k_t: u32,
}

impl CipherConfig {
    pub fn trivium(width_bits: u32) -> Self {
        let k_t = if width_bits >= 128 { 9 } else { 35 };
        CipherConfig { backend: Backend::Trivium, width_bits, k_t }
    }

    pub fn trivium_k(k_t: u32) -> Self {
        let width_bits = if k_t <= 9 { 128 } else { 32 };
        CipherConfig { backend: Backend::Trivium, width_bits, k_t }
    }

    pub fn aes_ctr() -> Self {
        CipherConfig { backend: Backend::AesCtr, width_bits: 128, k_t: 11 }
    }

    /// Decryption unit disengaged: keystream is zero and every
    /// reinitialization costs a single cycle.
    pub fn null() -> Self {
        CipherConfig { backend: Backend::Null, width_bits: 32, k_t: 1 }
    }

    pub fn with_k_t(mut self, k_t: u32) -> Result<Self, CipherError> {
        if k_t == 0 {
            return Err(CipherError::ZeroInitCost);
        }
        self.k_t = k_t;
        Ok(self)
    }
}

#[derive(Clone)]
enum Engine {
    Trivium([u8; 10]),
    AesCtr(Box<AesCtr>),
    Null,
}

/// A keyed cipher instance.
#[derive(Clone)]
pub struct Cipher {
    engine: Engine,
}

impl fmt::Debug for Cipher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cipher({})", self.backend())
    }
}

impl Cipher {
    pub fn new(backend: Backend, key: &Key) -> Result<Self, CipherError> {
        let width = |expected: usize| CipherError::KeyWidth { backend, expected, got: key.bits() };
        let engine = match backend {
            Backend::Trivium => Engine::Trivium(key.as_bytes().try_into().map_err(|_| width(80))?),
            Backend::AesCtr => {
                let k: [u8; 16] = key.as_bytes().try_into().map_err(|_| width(128))?;
                Engine::AesCtr(Box::new(AesCtr::new(&k)))
            }
            Backend::Null => Engine::Null,
        };
        Ok(Cipher { engine })
    }

    pub fn null() -> Self {
        Cipher { engine: Engine::Null }
    }

    pub fn backend(&self) -> Backend {
        match self.engine {
            Engine::Trivium(_) => Backend::Trivium,
            Engine::AesCtr(_) => Backend::AesCtr,
            Engine::Null => Backend::Null,
        }
    }

    pub fn init(&self, iv: &Iv) -> CipherState {
        match &self.engine {
            Engine::Trivium(k) => CipherState::Trivium(TriviumState::new(k, &iv.bytes)),
            Engine::AesCtr(_) => CipherState::AesCtr(AesCtrState::from_iv(&iv.bytes)),
            Engine::Null => CipherState::Null,
        }
    }

    /// Next keystream word; advances `state` by exactly one word.
    #[inline]
    pub fn keystream_word(&self, state: &mut CipherState) -> u32 {
        match (&self.engine, state) {
            (Engine::Trivium(_), CipherState::Trivium(st)) => st.clock32(),
            (Engine::AesCtr(aes), CipherState::AesCtr(st)) => aes.next_word(st),
            (Engine::Null, CipherState::Null) => 0,
            (_, st) => panic!("cipher state {st:?} does not belong to backend {}", self.backend()),
        }
    }

    #[inline]
    pub fn encrypt_word(&self, mut state: CipherState, m: u32) -> (CipherState, u32) {
        let w = self.keystream_word(&mut state);
        (state, m ^ w)
    }

    #[inline]
    pub fn decrypt_word(&self, state: CipherState, c: u32) -> (CipherState, u32) {
        self.encrypt_word(state, c)
    }

    /// Encrypts `words` in place starting from `init(iv)`.
    pub fn encrypt_block(&self, iv: &Iv, words: &mut [u32]) {
        let mut st = self.init(iv);
        for w in words {
            *w ^= self.keystream_word(&mut st);
        }
    }
}

#[inline]
pub fn patch_ciphertext(c: u32, delta: u32) -> u32 {
    c ^ delta
}
