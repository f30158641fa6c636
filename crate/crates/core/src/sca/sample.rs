//! Trace samples and the per-format recording rule.

use crate::asm::{Format, Instr, Op};

/// One `<PC, INSN, r0, r1, r2>` sample, register values taken after the
/// instruction has retired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Sample {
    pub pc: u32,
    pub insn: u32,
    pub r0: u32,
    pub r1: u32,
    pub r2: u32,
}

impl Sample {
    pub fn fields(&self) -> [u32; 5] {
        [self.pc, self.insn, self.r0, self.r1, self.r2]
    }
}

/// R: (rs1, rs2, rd); I: (rs1, 0, rd); S and B: (rs1, rs2, 0); U and J:
/// (0, 0, rd). `enc_word` is recorded like an I-type, `enable_dec` and
/// `disable_dec` record zeros. `initbb` is handled by [`initbb_samples`].
pub fn record_sample(pc: u32, word: u32, i: &Instr, regs: &[u32; 32]) -> Sample {
    let r = |x: crate::asm::Reg| regs[x.index()];
    let (r0, r1, r2) = match i.format() {
        Format::R => (r(i.rs1), r(i.rs2), r(i.rd)),
        Format::I => (r(i.rs1), 0, r(i.rd)),
        Format::S | Format::B => (r(i.rs1), r(i.rs2), 0),
        Format::U | Format::J => (0, 0, r(i.rd)),
        Format::Ext => match i.op {
            Op::EncWord | Op::InitBb => (r(i.rs1), 0, r(i.rd)),
            _ => (0, 0, 0),
        },
    };
    Sample { pc, insn: word, r0, r1, r2 }
}

/// The three samples of an `initbb`: one per IV slot word.
pub fn initbb_samples(pc: u32, word: u32, slot: [u32; 3]) -> [Sample; 3] {
    slot.map(|w| Sample { pc, insn: word, r0: w, r1: 0, r2: 0 })
}
