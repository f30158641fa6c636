//! Host-side generator that reproduces, word for word, what the guest SGPC
//! writes into an instance buffer.
//!
//! Random draws happen in a fixed order, shared with the guest runtime:
//!
//! 1. Register permutation: Fisher-Yates over the allocatable list,
//!    `i = n-1 .. 1`, `j = rng % (i+1)` (only with register shuffling).
//! 2. Per block, when the instance is encrypted: three IV words (`initbb`).
//! 3. Per window, one site per entry in plan order. The first site of a
//!    block never gets noise and draws nothing. Otherwise a site draws
//!    `c`; noise is inserted when `c & (2^p - 1) == 0`, and then a second
//!    draw gives the burst `2 << (rng % nmax)`.
//! 4. Per window of two or more entries: the Fisher-Yates shuffle of the
//!    emission order, as in 1.
//! 5. While emitting each entry that has a variant and a scratch register:
//!    one draw, variant when `rng & 1 == 1`.

use crate::asm::isa::{b_imm_bits, j_imm_bits};
use crate::cipher::{Cipher, CipherState, Iv};
use crate::sim::Xorshift32;

use super::plan::{flags, Action, Entry, Plan};
use super::variants::Family;

pub const NOP: u32 = 0x0000_0013;
/// `addi x0, x0, 1`; the dead register goes in both rd and rs1.
pub const NOISE_INC: u32 = 0x0010_0013;

/// Guest exit codes for generation faults.
pub mod exit {
    pub const OVERFLOW: u32 = 0xE000_0001;
    pub const IMM_RANGE: u32 = 0xE000_0002;
    pub const FIXUPS: u32 = 0xE000_0003;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("instance exceeds its buffer of {0} words")]
    Overflow(u32),
    #[error("jump offset {0} does not fit its encoding")]
    ImmRange(i64),
    #[error("more forward jumps than fixup slots")]
    Fixups,
    #[error("undefined symbol `{0}` in a template")]
    Undefined(String),
}

impl GenError {
    pub fn exit_code(&self) -> Option<u32> {
        match self {
            GenError::Overflow(_) => Some(exit::OVERFLOW),
            GenError::ImmRange(_) => Some(exit::IMM_RANGE),
            GenError::Fixups => Some(exit::FIXUPS),
            GenError::Undefined(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixup {
    /// Word index of the placeholder.
    pub at: usize,
    pub target: usize,
    /// Jump with register fields set and a zero offset.
    pub word: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NoiseStats {
    pub sites: u64,
    /// Burst length of every site that got noise.
    pub bursts: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    /// Buffer contents, as stored (encrypted when the plan says so).
    pub words: Vec<u32>,
    /// Word index of each block's start (its IV slot when encrypted).
    pub blocks: Vec<usize>,
    pub fixups: Vec<Fixup>,
    pub perm: [u8; 32],
    pub noise: NoiseStats,
}

impl Instance {
    pub fn bytes(&self) -> Vec<u8> {
        self.words.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}

/// Encodes `word | offset` for a jump or branch, checking the range.
pub fn place_offset(word: u32, off: i64) -> Result<u32, GenError> {
    let (lo, hi) = if word & 0x7F == 0x6F { (-(1i64 << 20), (1 << 20) - 2) } else { (-4096, 4094) };
    if off < lo || off > hi || off % 2 != 0 {
        return Err(GenError::ImmRange(off));
    }
    Ok(word | if word & 0x7F == 0x6F { j_imm_bits(off as i32) } else { b_imm_bits(off as i32) })
}

fn fisher_yates<T>(rng: &mut Xorshift32, v: &mut [T]) {
    for i in (1..v.len()).rev() {
        let j = (rng.next_u32() % (i as u32 + 1)) as usize;
        v.swap(i, j);
    }
}

struct Gen<'a> {
    plan: &'a Plan,
    cipher: &'a Cipher,
    rng: &'a mut Xorshift32,
    perm: [u8; 32],
    words: Vec<u32>,
    exec: Option<CipherState>,
    first: bool,
    stats: NoiseStats,
}

impl Gen<'_> {
    fn put(&mut self, w: u32) -> Result<(), GenError> {
        if self.words.len() as u32 >= self.plan.buffer_words {
            return Err(GenError::Overflow(self.plan.buffer_words));
        }
        let w = match &mut self.exec {
            Some(st) => w ^ self.cipher.keystream_word(st),
            None => w,
        };
        self.words.push(w);
        Ok(())
    }

    fn site(&mut self) -> u32 {
        if self.first {
            self.first = false;
            return 0;
        }
        if !self.plan.has(flags::NOISE) {
            return 0;
        }
        self.stats.sites += 1;
        if self.rng.next_u32() & self.plan.pmask != 0 {
            return 0;
        }
        let n = 2 << (self.rng.next_u32() % self.plan.nmax);
        self.stats.bursts.push(n);
        n
    }

    fn p(&self, r: crate::asm::Reg) -> u32 {
        self.perm[r.0 as usize] as u32
    }

    fn noise(&mut self, count: u32, e: &Entry) -> Result<(), GenError> {
        let d = self.p(e.dead());
        let w = if self.plan.has(flags::NOISE_DEAD) && d != 0 { NOISE_INC | d << 7 | d << 15 } else { NOP };
        for _ in 0..count {
            self.put(w)?;
        }
        Ok(())
    }

    fn regs(&self, e: &Entry) -> u32 {
        self.p(e.rd()) << 7 | self.p(e.rs1()) << 15 | self.p(e.rs2()) << 20
    }

    fn emit(&mut self, e: &Entry, template: u32) -> Result<(), GenError> {
        let family = Family::ALL.get((e.family() as usize).wrapping_sub(1)).copied();
        if let (true, Some(f), true) = (self.plan.has(flags::VARIANTS), family, e.scratch().0 != 0) {
            if self.rng.next_u32() & 1 == 1 {
                let t = crate::asm::Reg(self.perm[e.scratch().0 as usize]);
                let m = |r: crate::asm::Reg| crate::asm::Reg(self.perm[r.0 as usize]);
                for i in f.expand(m(e.rd()), m(e.rs1()), m(e.rs2()), t) {
                    self.put(i.encode().expect("variant encodes"))?;
                }
                return Ok(());
            }
        }
        let w = template | self.regs(e);
        self.put(w)
    }
}

/// Generates one instance of `plan` with templates resolved through
/// `addr_of`, drawing from `rng` and encrypting with `cipher` when the plan
/// asks for it.
pub fn generate(plan: &Plan, addr_of: &dyn Fn(&str) -> Option<u32>, rng: &mut Xorshift32, cipher: &Cipher) -> Result<Instance, GenError> {
    let resolve = |e: &Entry| e.template.resolve(addr_of).ok_or_else(|| GenError::Undefined(e.template.symbol().unwrap_or("").to_string()));
    let mut perm = [0u8; 32];
    for (k, p) in perm.iter_mut().enumerate() {
        *p = k as u8;
    }
    if plan.has(flags::SHUF_REGS) {
        let mut shuffled: Vec<u8> = plan.alloc.iter().map(|r| r.0).collect();
        // swapping perm[alloc[i]] with perm[alloc[j]] on an identity table
        fisher_yates(rng, &mut shuffled);
        for (r, s) in plan.alloc.iter().zip(&shuffled) {
            perm[r.0 as usize] = *s;
        }
    }
    let mut g = Gen { plan, cipher, rng, perm, words: Vec::new(), exec: None, first: true, stats: NoiseStats::default() };
    let mut blocks = Vec::with_capacity(plan.blocks.len());
    let mut fixups = Vec::new();
    for (k, b) in plan.blocks.iter().enumerate() {
        blocks.push(g.words.len());
        g.first = true;
        if plan.has(flags::ENC) {
            if g.words.len() as u32 + 3 > plan.buffer_words {
                return Err(GenError::Overflow(plan.buffer_words));
            }
            let slot = [g.rng.next_u32(), g.rng.next_u32(), g.rng.next_u32()];
            g.words.extend(slot);
            g.exec = Some(cipher.init(&Iv::from_slot_words(slot)));
        }
        for a in &b.actions {
            match a {
                Action::Window(entries) => {
                    let counts: Vec<u32> = entries.iter().map(|_| g.site()).collect();
                    let mut order: Vec<usize> = (0..entries.len()).collect();
                    if plan.has(flags::SHUF_INSTR) && entries.len() > 1 {
                        fisher_yates(g.rng, &mut order);
                    }
                    for (pos, &i) in order.iter().enumerate() {
                        g.noise(counts[pos], &entries[i])?;
                        g.emit(&entries[i], resolve(&entries[i])?)?;
                    }
                }
                Action::Jump { entry, target } => {
                    let count = g.site();
                    g.noise(count, entry)?;
                    let word = resolve(entry)? | g.regs(entry);
                    let at = g.words.len();
                    if *target <= k {
                        let off = 4 * (blocks[*target] as i64 - at as i64);
                        g.put(place_offset(word, off)?)?;
                    } else {
                        if fixups.len() as u32 >= plan.fixcap {
                            return Err(GenError::Fixups);
                        }
                        fixups.push(Fixup { at, target: *target, word });
                        g.put(0)?;
                    }
                }
            }
        }
    }
    for f in &fixups {
        let off = 4 * (blocks[f.target] as i64 - f.at as i64);
        g.words[f.at] ^= place_offset(f.word, off)?;
    }
    Ok(Instance { words: g.words, blocks, fixups, perm, noise: g.stats })
}

/// [`generate`] from a fresh guest RNG seeded with `seed`.
pub fn host_reference_generate(
    plan: &Plan,
    addr_of: &dyn Fn(&str) -> Option<u32>,
    seed: u64,
    cipher: &Cipher,
) -> Result<Instance, GenError> {
    generate(plan, addr_of, &mut Xorshift32::new(seed), cipher)
}

/// Decrypts an encrypted instance block by block.
pub fn decrypt_instance(inst: &Instance, cipher: &Cipher) -> Vec<u32> {
    let mut out = inst.words.clone();
    let mut bounds = inst.blocks.clone();
    bounds.push(out.len());
    for w in bounds.windows(2) {
        let (s, e) = (w[0], w[1]);
        let iv = Iv::from_slot_words([out[s], out[s + 1], out[s + 2]]);
        cipher.encrypt_block(&iv, &mut out[s + 3..e]);
    }
    out
}
