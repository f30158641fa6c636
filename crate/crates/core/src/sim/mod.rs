//! Functional RV32IM simulator with in-fetch decryption.
//!
//! Fetch path: when `decrypt_on` is set, every fetched word is XORed with the
//! next keystream word of the fetch channel. A taken control-flow instruction
//! first applies any pending `enable_dec`/`disable_dec`, then, if decryption
//! is on, reads the 3-word IV at the target, reinitializes the fetch channel
//! and resumes 12 bytes past the target.
//!
//! Cycle model: one cycle per retired instruction, except that a cipher
//! initialization (taken control flow while decrypting, or `initbb`) costs
//! `k_T` cycles in total. Hence `cycles = n + (k_T - 1) * inits`.
//!
//! MMIO (word accesses only):
//!
//! | address      | read                  | write                         |
//! |--------------|-----------------------|-------------------------------|
//! | `0xF000_0000`| next RNG word         | ignored                       |
//! | `0xF000_0004`| trace capture state   | 1/0: capture on/off           |
//! | `0xF000_0008`| 0                     | halt with the written code    |
//! | `0xF000_000C`| 0                     | append low byte to output     |
//! | `0xF000_0010`| current counter phase | select counter phase (0..4)   |
//!
//! `ecall` with `a7 = 93` exits with code `a0`; `a7 = 1` writes `a0` to the
//! output.

mod rng;

use crate::asm::{decode, Image, Instr, Op, Reg, IV_MAGIC};
use crate::cipher::{Cipher, CipherConfig, CipherError, CipherState, Iv, Key};
use crate::sca::{initbb_samples, record_sample, Sample};

pub use rng::Xorshift32;

pub mod mmio {
    pub const BASE: u32 = 0xF000_0000;
    pub const RNG_WORD: u32 = BASE;
    pub const TRACE_CTL: u32 = BASE + 4;
    pub const EXIT: u32 = BASE + 8;
    pub const PUTCHAR: u32 = BASE + 12;
    pub const PHASE: u32 = BASE + 16;
    pub const END: u32 = BASE + 0x100;
}

pub const ECALL_EXIT: u32 = 93;
pub const ECALL_PUTCHAR: u32 = 1;
pub const DEFAULT_MEM_SIZE: u32 = 1 << 20;
pub const PHASES: usize = 4;

/// Counter phases selected through the PHASE register.
pub mod phase {
    pub const OTHER: u32 = 0;
    pub const GENERATION: u32 = 1;
    pub const INSTANCE: u32 = 2;
    pub const SECURED: u32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PerfCounters {
    /// Instructions retired.
    pub n: u64,
    /// Taken control-flow instructions.
    pub b: u64,
    /// Cipher initializations on the fetch path.
    pub fetch_inits: u64,
    /// Cipher initializations by `initbb`.
    pub exec_inits: u64,
    pub cycles: u64,
}

impl PerfCounters {
    pub fn i(&self) -> u64 {
        self.n - self.b
    }

    pub fn inits(&self) -> u64 {
        self.fetch_inits + self.exec_inits
    }

    /// Taken control-flow instructions per instruction.
    pub fn rb(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.b as f64 / self.n as f64
        }
    }

    /// Cipher initializations per instruction: the `rb` of the overhead model.
    pub fn rb_init(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.inits() as f64 / self.n as f64
        }
    }

    pub fn add(&mut self, o: &PerfCounters) {
        self.n += o.n;
        self.b += o.b;
        self.fetch_inits += o.fetch_inits;
        self.exec_inits += o.exec_inits;
        self.cycles += o.cycles;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pending {
    None,
    Enable,
    Disable,
}

/// Change of `decrypt_on`, logged at the taken control-flow instruction that
/// applied it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeSwitch {
    pub step: u64,
    pub pc: u32,
    pub target: u32,
    pub decrypt_on: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Fault {
    #[error("illegal instruction {word:#010x} at {pc:#x}")]
    Illegal { pc: u32, word: u32 },
    #[error("fetched an IV slot word at {pc:#x} with decryption off")]
    MagicFetch { pc: u32 },
    #[error("misaligned access to {addr:#x} at {pc:#x}")]
    Misaligned { pc: u32, addr: u32 },
    #[error("access to unmapped address {addr:#x} at {pc:#x}")]
    Unmapped { pc: u32, addr: u32 },
    #[error("enc_word before any initbb at {pc:#x}")]
    EncryptUninit { pc: u32 },
    #[error("unknown ecall {a7} at {pc:#x}")]
    BadEcall { pc: u32, a7: u32 },
    #[error("ebreak at {pc:#x}")]
    Breakpoint { pc: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Continue,
    Halted(u32),
    Fault(Fault),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunOutcome {
    Exit(u32),
    Fault(Fault),
    Timeout,
}

#[derive(Debug, Clone)]
pub struct MachineConfig {
    pub mem_size: u32,
    pub cipher: CipherConfig,
    pub rng_seed: u64,
    /// Stop recording after this many samples (execution continues).
    pub max_samples: Option<usize>,
    pub log_mode_switches: bool,
}

impl Default for MachineConfig {
    fn default() -> Self {
        MachineConfig { mem_size: DEFAULT_MEM_SIZE, cipher: CipherConfig::null(), rng_seed: 1, max_samples: None, log_mode_switches: false }
    }
}

#[derive(Clone)]
pub struct Machine {
    pub regs: [u32; 32],
    pub pc: u32,
    mem: Vec<u8>,
    pub decrypt_on: bool,
    pub pending: Pending,
    fetch_state: CipherState,
    exec_state: Option<CipherState>,
    cipher: Cipher,
    k_t: u64,
    pub counters: [PerfCounters; PHASES],
    pub phase: u32,
    pub rng: Xorshift32,
    pub trace_on: bool,
    pub trace: Vec<Sample>,
    max_samples: usize,
    pub output: Vec<u8>,
    pub mode_log: Vec<ModeSwitch>,
    log_modes: bool,
    pub steps: u64,
}

impl std::fmt::Debug for Machine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Machine")
            .field("pc", &format_args!("{:#x}", self.pc))
            .field("decrypt_on", &self.decrypt_on)
            .field("pending", &self.pending)
            .field("steps", &self.steps)
            .finish_non_exhaustive()
    }
}

type Res<T> = Result<T, Fault>;

impl Machine {
    pub fn new(image: &Image, key: &Key, config: &MachineConfig) -> Result<Machine, CipherError> {
        let cipher = Cipher::new(config.cipher.backend, key)?;
        let mut mem = vec![0u8; config.mem_size as usize];
        let base = image.base as usize;
        assert!(base + 4 * image.words.len() <= mem.len(), "image does not fit guest memory");
        for (i, w) in image.words.iter().enumerate() {
            mem[base + 4 * i..base + 4 * i + 4].copy_from_slice(&w.to_le_bytes());
        }
        let mut regs = [0u32; 32];
        regs[Reg::SP.index()] = config.mem_size & !15;
        Ok(Machine {
            regs,
            pc: image.entry,
            mem,
            decrypt_on: false,
            pending: Pending::None,
            fetch_state: cipher.init(&Iv::default()),
            exec_state: None,
            cipher,
            k_t: config.cipher.k_t as u64,
            counters: [PerfCounters::default(); PHASES],
            phase: 0,
            rng: Xorshift32::new(config.rng_seed),
            trace_on: false,
            trace: Vec::new(),
            max_samples: config.max_samples.unwrap_or(usize::MAX),
            output: Vec::new(),
            mode_log: Vec::new(),
            log_modes: config.log_mode_switches,
            steps: 0,
        })
    }

    pub fn memory(&self) -> &[u8] {
        &self.mem
    }

    pub fn total(&self) -> PerfCounters {
        let mut t = PerfCounters::default();
        for c in &self.counters {
            t.add(c);
        }
        t
    }

    pub fn reg(&self, r: Reg) -> u32 {
        self.regs[r.index()]
    }

    pub fn set_reg(&mut self, r: Reg, v: u32) {
        if r != Reg::ZERO {
            self.regs[r.index()] = v;
        }
    }

    fn span(&self, addr: u32, len: u32) -> Res<usize> {
        let end = addr as u64 + len as u64;
        if end > self.mem.len() as u64 {
            return Err(Fault::Unmapped { pc: self.pc, addr });
        }
        Ok(addr as usize)
    }

    pub fn read_u32(&self, addr: u32) -> Option<u32> {
        let a = self.span(addr, 4).ok()?;
        Some(u32::from_le_bytes(self.mem[a..a + 4].try_into().unwrap()))
    }

    pub fn write_u32(&mut self, addr: u32, v: u32) -> bool {
        match self.span(addr, 4) {
            Ok(a) => {
                self.mem[a..a + 4].copy_from_slice(&v.to_le_bytes());
                true
            }
            Err(_) => false,
        }
    }

    pub fn read_bytes(&self, addr: u32, len: u32) -> Option<&[u8]> {
        let a = self.span(addr, len).ok()?;
        Some(&self.mem[a..a + len as usize])
    }

    pub fn write_bytes(&mut self, addr: u32, data: &[u8]) -> bool {
        match self.span(addr, data.len() as u32) {
            Ok(a) => {
                self.mem[a..a + data.len()].copy_from_slice(data);
                true
            }
            Err(_) => false,
        }
    }

    fn is_mmio(addr: u32) -> bool {
        (mmio::BASE..mmio::END).contains(&addr)
    }

    fn load(&mut self, addr: u32, size: u32) -> Res<u32> {
        if !addr.is_multiple_of(size) {
            return Err(Fault::Misaligned { pc: self.pc, addr });
        }
        if Self::is_mmio(addr) {
            if size != 4 {
                return Err(Fault::Misaligned { pc: self.pc, addr });
            }
            return Ok(match addr {
                mmio::RNG_WORD => self.rng.next_u32(),
                mmio::TRACE_CTL => self.trace_on as u32,
                mmio::PHASE => self.phase,
                _ => 0,
            });
        }
        let a = self.span(addr, size)?;
        let m = &self.mem[a..a + size as usize];
        Ok(match size {
            1 => m[0] as u32,
            2 => u16::from_le_bytes([m[0], m[1]]) as u32,
            _ => u32::from_le_bytes([m[0], m[1], m[2], m[3]]),
        })
    }

    /// Returns `Some(code)` when the store halts the machine.
    fn store(&mut self, addr: u32, size: u32, v: u32) -> Res<Option<u32>> {
        if !addr.is_multiple_of(size) {
            return Err(Fault::Misaligned { pc: self.pc, addr });
        }
        if Self::is_mmio(addr) {
            if size != 4 {
                return Err(Fault::Misaligned { pc: self.pc, addr });
            }
            match addr {
                mmio::TRACE_CTL => self.trace_on = v & 1 != 0,
                mmio::EXIT => return Ok(Some(v)),
                mmio::PUTCHAR => self.output.push(v as u8),
                mmio::PHASE => self.phase = v % PHASES as u32,
                _ => {}
            }
            return Ok(None);
        }
        let a = self.span(addr, size)?;
        self.mem[a..a + size as usize].copy_from_slice(&v.to_le_bytes()[..size as usize]);
        Ok(None)
    }

    fn push_sample(&mut self, s: Sample) {
        if self.trace.len() < self.max_samples {
            self.trace.push(s);
        }
    }

    pub fn step(&mut self) -> Step {
        match self.try_step() {
            Ok(s) => s,
            Err(f) => Step::Fault(f),
        }
    }

    fn try_step(&mut self) -> Res<Step> {
        let pc = self.pc;
        if !pc.is_multiple_of(4) {
            return Err(Fault::Misaligned { pc, addr: pc });
        }
        if Self::is_mmio(pc) {
            return Err(Fault::Unmapped { pc, addr: pc });
        }
        let a = self.span(pc, 4)?;
        let raw = u32::from_le_bytes(self.mem[a..a + 4].try_into().unwrap());
        let word = if self.decrypt_on {
            raw ^ self.cipher.keystream_word(&mut self.fetch_state)
        } else {
            if raw == IV_MAGIC {
                return Err(Fault::MagicFetch { pc });
            }
            raw
        };
        let ins = decode(word).map_err(|_| Fault::Illegal { pc, word })?;
        let capture = self.trace_on;
        let x1 = self.regs[ins.rs1.index()];
        let x2 = self.regs[ins.rs2.index()];
        let imm = ins.imm as u32;
        let mut target: Option<u32> = None;
        let mut wb: Option<u32> = None;
        let mut halt: Option<u32> = None;
        let mut init_slot: Option<[u32; 3]> = None;
        match ins.op {
            Op::Lui => wb = Some(imm << 12),
            Op::Auipc => wb = Some(pc.wrapping_add(imm << 12)),
            Op::Jal => {
                wb = Some(pc.wrapping_add(4));
                target = Some(pc.wrapping_add(imm));
            }
            Op::Jalr => {
                wb = Some(pc.wrapping_add(4));
                target = Some(x1.wrapping_add(imm) & !1);
            }
            Op::Beq | Op::Bne | Op::Blt | Op::Bge | Op::Bltu | Op::Bgeu => {
                let cond = match ins.op {
                    Op::Beq => x1 == x2,
                    Op::Bne => x1 != x2,
                    Op::Blt => (x1 as i32) < (x2 as i32),
                    Op::Bge => (x1 as i32) >= (x2 as i32),
                    Op::Bltu => x1 < x2,
                    _ => x1 >= x2,
                };
                if cond {
                    target = Some(pc.wrapping_add(imm));
                }
            }
            Op::Lb | Op::Lh | Op::Lw | Op::Lbu | Op::Lhu => {
                let addr = x1.wrapping_add(imm);
                let v = match ins.op {
                    Op::Lb => self.load(addr, 1)? as u8 as i8 as i32 as u32,
                    Op::Lh => self.load(addr, 2)? as u16 as i16 as i32 as u32,
                    Op::Lw => self.load(addr, 4)?,
                    Op::Lbu => self.load(addr, 1)?,
                    _ => self.load(addr, 2)?,
                };
                wb = Some(v);
            }
            Op::Sb | Op::Sh | Op::Sw => {
                let size = match ins.op {
                    Op::Sb => 1,
                    Op::Sh => 2,
                    _ => 4,
                };
                halt = self.store(x1.wrapping_add(imm), size, x2)?;
            }
            Op::Ecall => match self.regs[Reg::A7.index()] {
                ECALL_EXIT => halt = Some(self.regs[Reg::A0.index()]),
                ECALL_PUTCHAR => self.output.push(self.regs[Reg::A0.index()] as u8),
                a7 => return Err(Fault::BadEcall { pc, a7 }),
            },
            Op::Ebreak => return Err(Fault::Breakpoint { pc }),
            Op::InitBb => {
                if !x1.is_multiple_of(4) {
                    return Err(Fault::Misaligned { pc, addr: x1 });
                }
                if Self::is_mmio(x1) {
                    return Err(Fault::Unmapped { pc, addr: x1 });
                }
                self.span(x1, 12)?;
                let slot = [self.rng.next_u32(), self.rng.next_u32(), self.rng.next_u32()];
                for (k, w) in slot.iter().enumerate() {
                    self.write_u32(x1 + 4 * k as u32, *w);
                }
                self.exec_state = Some(self.cipher.init(&Iv::from_slot_words(slot)));
                wb = Some(x1 + 12);
                init_slot = Some(slot);
            }
            Op::EncWord => {
                let st = self.exec_state.as_mut().ok_or(Fault::EncryptUninit { pc })?;
                wb = Some(x1 ^ self.cipher.keystream_word(st));
            }
            Op::EnableDec => self.pending = Pending::Enable,
            Op::DisableDec => self.pending = Pending::Disable,
            _ => wb = Some(alu(&ins, x1, x2)),
        }
        if let Some(v) = wb {
            if ins.rd != Reg::ZERO {
                self.regs[ins.rd.index()] = v;
            }
        }
        let ph = self.phase as usize;
        self.steps += 1;
        let mut next = pc.wrapping_add(4);
        let mut cost = 1;
        if let Some(t) = target {
            self.counters[ph].b += 1;
            let before = self.decrypt_on;
            match std::mem::replace(&mut self.pending, Pending::None) {
                Pending::Enable => self.decrypt_on = true,
                Pending::Disable => self.decrypt_on = false,
                Pending::None => {}
            }
            if self.log_modes && before != self.decrypt_on {
                self.mode_log.push(ModeSwitch { step: self.steps, pc, target: t, decrypt_on: self.decrypt_on });
            }
            if self.decrypt_on {
                let mut slot = [0u32; 3];
                for (k, w) in slot.iter_mut().enumerate() {
                    *w = self.read_u32(t.wrapping_add(4 * k as u32)).ok_or(Fault::Unmapped { pc, addr: t })?;
                }
                self.fetch_state = self.cipher.init(&Iv::from_slot_words(slot));
                self.counters[ph].fetch_inits += 1;
                cost = self.k_t;
                next = t.wrapping_add(12);
            } else {
                next = t;
            }
        }
        if init_slot.is_some() {
            self.counters[ph].exec_inits += 1;
            cost = self.k_t;
        }
        self.counters[ph].n += 1;
        self.counters[ph].cycles += cost;
        if capture {
            match init_slot {
                Some(slot) => {
                    for s in initbb_samples(pc, word, slot) {
                        self.push_sample(s);
                    }
                }
                None => {
                    let s = record_sample(pc, word, &ins, &self.regs);
                    self.push_sample(s);
                }
            }
        }
        self.pc = next;
        Ok(match halt {
            Some(code) => Step::Halted(code),
            None => Step::Continue,
        })
    }

    pub fn run(&mut self, max_steps: u64) -> RunOutcome {
        for _ in 0..max_steps {
            match self.step() {
                Step::Continue => {}
                Step::Halted(code) => return RunOutcome::Exit(code),
                Step::Fault(f) => return RunOutcome::Fault(f),
            }
        }
        RunOutcome::Timeout
    }
}

fn alu(i: &Instr, a: u32, b: u32) -> u32 {
    let imm = i.imm as u32;
    match i.op {
        Op::Addi => a.wrapping_add(imm),
        Op::Slti => ((a as i32) < (imm as i32)) as u32,
        Op::Sltiu => (a < imm) as u32,
        Op::Xori => a ^ imm,
        Op::Ori => a | imm,
        Op::Andi => a & imm,
        Op::Slli => a << (imm & 31),
        Op::Srli => a >> (imm & 31),
        Op::Srai => ((a as i32) >> (imm & 31)) as u32,
        Op::Add => a.wrapping_add(b),
        Op::Sub => a.wrapping_sub(b),
        Op::Sll => a << (b & 31),
        Op::Slt => ((a as i32) < (b as i32)) as u32,
        Op::Sltu => (a < b) as u32,
        Op::Xor => a ^ b,
        Op::Srl => a >> (b & 31),
        Op::Sra => ((a as i32) >> (b & 31)) as u32,
        Op::Or => a | b,
        Op::And => a & b,
        Op::Mul => a.wrapping_mul(b),
        Op::Mulh => ((a as i32 as i64 * b as i32 as i64) >> 32) as u32,
        Op::Mulhsu => ((a as i32 as i64 * b as i64) >> 32) as u32,
        Op::Mulhu => ((a as u64 * b as u64) >> 32) as u32,
        Op::Div => match (a as i32, b as i32) {
            (_, 0) => u32::MAX,
            (i32::MIN, -1) => a,
            (x, y) => (x / y) as u32,
        },
        Op::Divu => a.checked_div(b).unwrap_or(u32::MAX),
        Op::Rem => match (a as i32, b as i32) {
            (_, 0) => a,
            (i32::MIN, -1) => 0,
            (x, y) => (x % y) as u32,
        },
        Op::Remu => a.checked_rem(b).unwrap_or(a),
        other => unreachable!("{other:?} is not an ALU instruction"),
    }
}
