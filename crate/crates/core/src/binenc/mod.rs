//! Offline image encryptor.
//!
//! Walks every encrypted region slot by slot. Each slot holds
//! `[magic, magic, nb_I]`; it is overwritten with a fresh IV and the `nb_I`
//! words after it are encrypted under `init(key, IV)`.

use std::collections::BTreeSet;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::asm::{Image, RegionKind, IV_MAGIC};
use crate::cipher::{Cipher, Iv};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EncryptError {
    #[error("malformed IV slot at {addr:#x}")]
    MalformedSlot { addr: u32 },
    #[error("expected an IV slot at {addr:#x} (image already encrypted?)")]
    MissingSlot { addr: u32 },
    #[error("block at {addr:#x} with {nb} instructions overruns its region ending at {end:#x}")]
    Overrun { addr: u32, nb: u32, end: u32 },
    #[error("IV slot left outside encrypted regions at {addr:#x}")]
    LeftoverMagic { addr: u32 },
    #[error("IV drawn twice")]
    DuplicateIv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EncryptedBlock {
    /// Address of the IV slot.
    pub addr: u32,
    pub nb: u32,
    pub iv: Iv,
}

/// IV generator: seeded ChaCha20 by default, OS entropy on request.
pub enum IvSource {
    Seeded(u64),
    Os,
}

impl IvSource {
    fn rng(&self) -> Box<dyn RngCore> {
        match self {
            IvSource::Seeded(s) => Box::new(ChaCha20Rng::seed_from_u64(*s)),
            IvSource::Os => Box::new(rand::rngs::OsRng),
        }
    }
}

/// One slot-aligned block found by a scan of `image`'s encrypted regions.
fn scan(image: &Image) -> Result<Vec<(u32, u32)>, EncryptError> {
    let mut out = Vec::new();
    for r in image.encrypted_regions() {
        let mut a = r.start;
        while a < r.end {
            let w = |k: u32| image.word_at(a + 4 * k).unwrap_or(0);
            if a + 12 > r.end {
                return Err(EncryptError::MalformedSlot { addr: a });
            }
            match (w(0) == IV_MAGIC, w(1) == IV_MAGIC) {
                (true, true) => {}
                (true, false) => return Err(EncryptError::MalformedSlot { addr: a }),
                _ => return Err(EncryptError::MissingSlot { addr: a }),
            }
            let nb = w(2);
            if nb == IV_MAGIC {
                return Err(EncryptError::MalformedSlot { addr: a });
            }
            let end = a as u64 + 12 + 4 * nb as u64;
            if end > r.end as u64 {
                return Err(EncryptError::Overrun { addr: a, nb, end: r.end });
            }
            out.push((a, nb));
            a = end as u32;
        }
    }
    Ok(out)
}

fn check_plain_code(image: &Image) -> Result<(), EncryptError> {
    for r in image.regions.iter().filter(|r| r.kind == RegionKind::Plain) {
        let mut a = r.start;
        while a + 8 <= r.end {
            if image.word_at(a) == Some(IV_MAGIC) && image.word_at(a + 4) == Some(IV_MAGIC) {
                return Err(EncryptError::LeftoverMagic { addr: a });
            }
            a += 4;
        }
    }
    Ok(())
}

pub fn encrypt_image(image: &Image, cipher: &Cipher, ivs: IvSource) -> Result<(Image, Vec<EncryptedBlock>), EncryptError> {
    check_plain_code(image)?;
    let blocks = scan(image)?;
    let mut rng = ivs.rng();
    let mut out = image.clone();
    let mut seen = BTreeSet::new();
    let mut report = Vec::with_capacity(blocks.len());
    for (addr, nb) in blocks {
        let iv = loop {
            let mut b = [0u8; 10];
            rng.fill_bytes(&mut b);
            let iv = Iv::new(b);
            // a slot whose first word reads as magic would confuse later scans
            if iv.to_slot_words()[0] != IV_MAGIC {
                break iv;
            }
        };
        if !seen.insert(iv.bytes) {
            return Err(EncryptError::DuplicateIv);
        }
        let i = out.index_of(addr).unwrap();
        out.words[i..i + 3].copy_from_slice(&iv.to_slot_words());
        cipher.encrypt_block(&iv, &mut out.words[i + 3..i + 3 + nb as usize]);
        report.push(EncryptedBlock { addr, nb, iv });
    }
    Ok((out, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCheck {
    pub addr: u32,
    pub nb: u32,
    pub ok: bool,
    /// Address of the first mismatching instruction word.
    pub first_bad: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub blocks: Vec<BlockCheck>,
    /// Words outside encrypted blocks that differ between the two images.
    pub outside: Vec<u32>,
    /// Plain-code words still holding the slot magic.
    pub residual_magic: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outside.is_empty() && self.residual_magic == 0 && self.blocks.iter().all(|b| b.ok)
    }

    pub fn failing(&self) -> impl Iterator<Item = &BlockCheck> {
        self.blocks.iter().filter(|b| !b.ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("images differ in layout")]
    Layout,
    #[error(transparent)]
    Scan(#[from] EncryptError),
}

/// Decrypts every block of `enc` using the IVs it carries and compares
/// against the slot layout and words of `plain`.
pub fn verify_image(plain: &Image, enc: &Image, cipher: &Cipher) -> Result<VerifyReport, VerifyError> {
    if plain.base != enc.base || plain.words.len() != enc.words.len() || plain.regions != enc.regions {
        return Err(VerifyError::Layout);
    }
    let blocks = scan(plain)?;
    let mut rep = VerifyReport::default();
    let mut covered = vec![false; plain.words.len()];
    for (addr, nb) in blocks {
        let i = plain.index_of(addr).unwrap();
        let slot = [enc.words[i], enc.words[i + 1], enc.words[i + 2]];
        let mut st = cipher.init(&Iv::from_slot_words(slot));
        let mut first_bad = None;
        for k in 0..nb as usize {
            let w = enc.words[i + 3 + k] ^ cipher.keystream_word(&mut st);
            if w != plain.words[i + 3 + k] && first_bad.is_none() {
                first_bad = Some(addr + 12 + 4 * k as u32);
            }
        }
        covered[i..i + 3 + nb as usize].iter_mut().for_each(|c| *c = true);
        rep.blocks.push(BlockCheck { addr, nb, ok: first_bad.is_none(), first_bad });
    }
    for (k, c) in covered.iter().enumerate() {
        if !c && plain.words[k] != enc.words[k] {
            rep.outside.push(plain.base + 4 * k as u32);
        }
    }
    for r in enc.regions.iter().filter(|r| r.kind == RegionKind::Plain) {
        rep.residual_magic += (r.start..r.end).step_by(4).filter(|a| enc.word_at(*a) == Some(IV_MAGIC)).count();
    }
    Ok(rep)
}
