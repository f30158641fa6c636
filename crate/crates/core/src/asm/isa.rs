//! RV32IM subset plus the four code-encryption extension instructions.
//!
//! Extension encodings live on the custom-0 major opcode (`0001011`), I-type
//! layout with a zero immediate; funct3 selects the instruction:
//!
//! | funct3 | instruction        |
//! |--------|--------------------|
//! | 0      | `initbb rd, rs1`   |
//! | 1      | `enc_word rd, rs1` |
//! | 2      | `enable_dec`       |
//! | 3      | `disable_dec`      |

use std::fmt;

pub const OPC_CUSTOM0: u32 = 0x0B;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Reg(pub u8);

const ABI: [&str; 32] = [
    "zero", "ra", "sp", "gp", "tp", "t0", "t1", "t2", "s0", "s1", "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "s2", "s3", "s4", "s5",
    "s6", "s7", "s8", "s9", "s10", "s11", "t3", "t4", "t5", "t6",
];

impl Reg {
    pub const ZERO: Reg = Reg(0);
    pub const RA: Reg = Reg(1);
    pub const SP: Reg = Reg(2);
    pub const GP: Reg = Reg(3);
    pub const TP: Reg = Reg(4);
    pub const A0: Reg = Reg(10);
    pub const A1: Reg = Reg(11);
    pub const A7: Reg = Reg(17);

    pub fn parse(s: &str) -> Option<Reg> {
        if let Some(n) = s.strip_prefix('x') {
            if let Ok(v) = n.parse::<u8>() {
                if v < 32 && (n.len() == 1 || !n.starts_with('0')) {
                    return Some(Reg(v));
                }
            }
        }
        if s == "fp" {
            return Some(Reg(8));
        }
        ABI.iter().position(|&a| a == s).map(|i| Reg(i as u8))
    }

    pub fn name(self) -> &'static str {
        ABI[self.0 as usize & 31]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Reg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Reg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    R,
    I,
    S,
    B,
    U,
    J,
    Ext,
}

macro_rules! ops {
    ($($v:ident = $m:literal, $fmt:ident, $opc:literal, $f3:literal, $f7:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Op { $($v),* }

        impl Op {
            pub const ALL: &'static [Op] = &[$(Op::$v),*];

            pub fn mnemonic(self) -> &'static str {
                match self { $(Op::$v => $m),* }
            }

            pub fn format(self) -> Format {
                match self { $(Op::$v => Format::$fmt),* }
            }

            fn bits(self) -> (u32, u32, u32) {
                match self { $(Op::$v => ($opc, $f3, $f7)),* }
            }

            pub fn from_mnemonic(s: &str) -> Option<Op> {
                match s { $($m => Some(Op::$v),)* _ => None }
            }
        }
    };
}

ops! {
    Lui = "lui", U, 0x37, 0, 0;
    Auipc = "auipc", U, 0x17, 0, 0;
    Jal = "jal", J, 0x6F, 0, 0;
    Jalr = "jalr", I, 0x67, 0, 0;
    Beq = "beq", B, 0x63, 0, 0;
    Bne = "bne", B, 0x63, 1, 0;
    Blt = "blt", B, 0x63, 4, 0;
    Bge = "bge", B, 0x63, 5, 0;
    Bltu = "bltu", B, 0x63, 6, 0;
    Bgeu = "bgeu", B, 0x63, 7, 0;
    Lb = "lb", I, 0x03, 0, 0;
    Lh = "lh", I, 0x03, 1, 0;
    Lw = "lw", I, 0x03, 2, 0;
    Lbu = "lbu", I, 0x03, 4, 0;
    Lhu = "lhu", I, 0x03, 5, 0;
    Sb = "sb", S, 0x23, 0, 0;
    Sh = "sh", S, 0x23, 1, 0;
    Sw = "sw", S, 0x23, 2, 0;
    Addi = "addi", I, 0x13, 0, 0;
    Slti = "slti", I, 0x13, 2, 0;
    Sltiu = "sltiu", I, 0x13, 3, 0;
    Xori = "xori", I, 0x13, 4, 0;
    Ori = "ori", I, 0x13, 6, 0;
    Andi = "andi", I, 0x13, 7, 0;
    Slli = "slli", I, 0x13, 1, 0x00;
    Srli = "srli", I, 0x13, 5, 0x00;
    Srai = "srai", I, 0x13, 5, 0x20;
    Add = "add", R, 0x33, 0, 0x00;
    Sub = "sub", R, 0x33, 0, 0x20;
    Sll = "sll", R, 0x33, 1, 0x00;
    Slt = "slt", R, 0x33, 2, 0x00;
    Sltu = "sltu", R, 0x33, 3, 0x00;
    Xor = "xor", R, 0x33, 4, 0x00;
    Srl = "srl", R, 0x33, 5, 0x00;
    Sra = "sra", R, 0x33, 5, 0x20;
    Or = "or", R, 0x33, 6, 0x00;
    And = "and", R, 0x33, 7, 0x00;
    Mul = "mul", R, 0x33, 0, 0x01;
    Mulh = "mulh", R, 0x33, 1, 0x01;
    Mulhsu = "mulhsu", R, 0x33, 2, 0x01;
    Mulhu = "mulhu", R, 0x33, 3, 0x01;
    Div = "div", R, 0x33, 4, 0x01;
    Divu = "divu", R, 0x33, 5, 0x01;
    Rem = "rem", R, 0x33, 6, 0x01;
    Remu = "remu", R, 0x33, 7, 0x01;
    Ecall = "ecall", I, 0x73, 0, 0;
    Ebreak = "ebreak", I, 0x73, 0, 0;
    InitBb = "initbb", Ext, 0x0B, 0, 0;
    EncWord = "enc_word", Ext, 0x0B, 1, 0;
    EnableDec = "enable_dec", Ext, 0x0B, 2, 0;
    DisableDec = "disable_dec", Ext, 0x0B, 3, 0;
}

impl Op {
    pub fn is_branch(self) -> bool {
        self.format() == Format::B
    }

    pub fn is_load(self) -> bool {
        matches!(self, Op::Lb | Op::Lh | Op::Lw | Op::Lbu | Op::Lhu)
    }

    pub fn is_store(self) -> bool {
        self.format() == Format::S
    }

    pub fn is_shift_imm(self) -> bool {
        matches!(self, Op::Slli | Op::Srli | Op::Srai)
    }

    pub fn is_control_flow(self) -> bool {
        matches!(self, Op::Jal | Op::Jalr) || self.is_branch()
    }

    pub fn has_rd(self) -> bool {
        match self.format() {
            Format::R | Format::U | Format::J => true,
            Format::I => !matches!(self, Op::Ecall | Op::Ebreak),
            Format::S | Format::B => false,
            Format::Ext => matches!(self, Op::InitBb | Op::EncWord),
        }
    }

    pub fn has_rs1(self) -> bool {
        match self.format() {
            Format::R | Format::S | Format::B => true,
            Format::I => !matches!(self, Op::Ecall | Op::Ebreak),
            Format::U | Format::J => false,
            Format::Ext => matches!(self, Op::InitBb | Op::EncWord),
        }
    }

    pub fn has_rs2(self) -> bool {
        matches!(self.format(), Format::R | Format::S | Format::B)
    }

    pub fn has_imm(self) -> bool {
        !matches!(self.format(), Format::R | Format::Ext) && !matches!(self, Op::Ecall | Op::Ebreak)
    }

    /// Inclusive immediate range and required alignment.
    pub fn imm_range(self) -> (i64, i64, i64) {
        match self.format() {
            _ if self.is_shift_imm() => (0, 31, 1),
            Format::I | Format::S => (-2048, 2047, 1),
            Format::B => (-4096, 4094, 2),
            Format::U => (0, 0xFFFFF, 1),
            Format::J => (-(1 << 20), (1 << 20) - 2, 2),
            Format::R | Format::Ext => (0, 0, 1),
        }
    }
}

/// A decoded instruction. Fields an instruction does not use are zero, so
/// derived equality is exact. For U-type, `imm` is the raw 20-bit field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instr {
    pub op: Op,
    pub rd: Reg,
    pub rs1: Reg,
    pub rs2: Reg,
    pub imm: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("illegal instruction word {0:#010x}")]
pub struct Illegal(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EncodeError {
    #[error("immediate {imm} out of range for {op} ({lo}..={hi})")]
    ImmRange { op: &'static str, imm: i64, lo: i64, hi: i64 },
    #[error("immediate {imm} for {op} must be a multiple of {align}")]
    ImmAlign { op: &'static str, imm: i64, align: i64 },
    #[error("operand not allowed for {0}")]
    Operand(&'static str),
}

impl Instr {
    pub fn new(op: Op, rd: Reg, rs1: Reg, rs2: Reg, imm: i32) -> Self {
        Instr { op, rd, rs1, rs2, imm }
    }

    pub fn r(op: Op, rd: Reg, rs1: Reg, rs2: Reg) -> Self {
        Instr { op, rd, rs1, rs2, imm: 0 }
    }

    pub fn i(op: Op, rd: Reg, rs1: Reg, imm: i32) -> Self {
        Instr { op, rd, rs1, rs2: Reg::ZERO, imm }
    }

    pub fn nop() -> Self {
        Instr::i(Op::Addi, Reg::ZERO, Reg::ZERO, 0)
    }

    pub fn format(&self) -> Format {
        self.op.format()
    }

    /// `jal ra, _`: the only call form the toolchain understands.
    pub fn is_call(&self) -> bool {
        self.op == Op::Jal && self.rd != Reg::ZERO
    }

    pub fn is_ret(&self) -> bool {
        self.op == Op::Jalr && self.rd == Reg::ZERO && self.rs1 == Reg::RA && self.imm == 0
    }

    pub fn check(&self) -> Result<(), EncodeError> {
        let m = self.op.mnemonic();
        let (lo, hi, align) = self.op.imm_range();
        let imm = self.imm as i64;
        if imm < lo || imm > hi {
            return Err(EncodeError::ImmRange { op: m, imm, lo, hi });
        }
        if imm % align != 0 {
            return Err(EncodeError::ImmAlign { op: m, imm, align });
        }
        let unused = (!self.op.has_rd() && self.rd != Reg::ZERO)
            || (!self.op.has_rs1() && self.rs1 != Reg::ZERO)
            || (!self.op.has_rs2() && self.rs2 != Reg::ZERO)
            || self.rd.0 > 31
            || self.rs1.0 > 31
            || self.rs2.0 > 31;
        if unused {
            return Err(EncodeError::Operand(m));
        }
        Ok(())
    }

    pub fn encode(&self) -> Result<u32, EncodeError> {
        self.check()?;
        let (opc, f3, f7) = self.op.bits();
        let rd = (self.rd.0 as u32) << 7;
        let rs1 = (self.rs1.0 as u32) << 15;
        let rs2 = (self.rs2.0 as u32) << 20;
        let imm = self.imm as u32;
        let word = match self.format() {
            Format::R => f7 << 25 | rs2 | rs1 | f3 << 12 | rd | opc,
            Format::I => match self.op {
                Op::Ecall => 0x0000_0073,
                Op::Ebreak => 0x0010_0073,
                _ if self.op.is_shift_imm() => f7 << 25 | (imm & 31) << 20 | rs1 | f3 << 12 | rd | opc,
                _ => (imm & 0xFFF) << 20 | rs1 | f3 << 12 | rd | opc,
            },
            Format::S => (imm >> 5 & 0x7F) << 25 | rs2 | rs1 | f3 << 12 | (imm & 0x1F) << 7 | opc,
            Format::B => {
                (imm >> 12 & 1) << 31 | (imm >> 5 & 0x3F) << 25 | rs2 | rs1 | f3 << 12 | (imm >> 1 & 0xF) << 8 | (imm >> 11 & 1) << 7 | opc
            }
            Format::U => (imm & 0xFFFFF) << 12 | rd | opc,
            Format::J => (imm >> 20 & 1) << 31 | (imm >> 1 & 0x3FF) << 21 | (imm >> 11 & 1) << 20 | (imm >> 12 & 0xFF) << 12 | rd | opc,
            Format::Ext => rs1 | f3 << 12 | rd | opc,
        };
        Ok(word)
    }
}

/// Branch immediate field bits for a byte offset (offset must be in range).
pub fn b_imm_bits(off: i32) -> u32 {
    let imm = off as u32;
    (imm >> 12 & 1) << 31 | (imm >> 5 & 0x3F) << 25 | (imm >> 1 & 0xF) << 8 | (imm >> 11 & 1) << 7
}

/// Jump immediate field bits for a byte offset (offset must be in range).
pub fn j_imm_bits(off: i32) -> u32 {
    let imm = off as u32;
    (imm >> 20 & 1) << 31 | (imm >> 1 & 0x3FF) << 21 | (imm >> 11 & 1) << 20 | (imm >> 12 & 0xFF) << 12
}

fn sext(v: u32, bits: u32) -> i32 {
    ((v << (32 - bits)) as i32) >> (32 - bits)
}

pub fn decode(word: u32) -> Result<Instr, Illegal> {
    let opc = word & 0x7F;
    let rd = Reg((word >> 7 & 31) as u8);
    let f3 = word >> 12 & 7;
    let rs1 = Reg((word >> 15 & 31) as u8);
    let rs2 = Reg((word >> 20 & 31) as u8);
    let f7 = word >> 25;
    let z = Reg::ZERO;
    let bad = Err(Illegal(word));
    let i_imm = sext(word >> 20, 12);
    let instr = match opc {
        0x37 => Instr::new(Op::Lui, rd, z, z, (word >> 12) as i32),
        0x17 => Instr::new(Op::Auipc, rd, z, z, (word >> 12) as i32),
        0x6F => {
            let imm = (word >> 31 & 1) << 20 | (word >> 12 & 0xFF) << 12 | (word >> 20 & 1) << 11 | (word >> 21 & 0x3FF) << 1;
            Instr::new(Op::Jal, rd, z, z, sext(imm, 21))
        }
        0x67 if f3 == 0 => Instr::i(Op::Jalr, rd, rs1, i_imm),
        0x63 => {
            let op = match f3 {
                0 => Op::Beq,
                1 => Op::Bne,
                4 => Op::Blt,
                5 => Op::Bge,
                6 => Op::Bltu,
                7 => Op::Bgeu,
                _ => return bad,
            };
            let imm = (word >> 31 & 1) << 12 | (word >> 7 & 1) << 11 | (word >> 25 & 0x3F) << 5 | (word >> 8 & 0xF) << 1;
            Instr::new(op, z, rs1, rs2, sext(imm, 13))
        }
        0x03 => {
            let op = match f3 {
                0 => Op::Lb,
                1 => Op::Lh,
                2 => Op::Lw,
                4 => Op::Lbu,
                5 => Op::Lhu,
                _ => return bad,
            };
            Instr::i(op, rd, rs1, i_imm)
        }
        0x23 => {
            let op = match f3 {
                0 => Op::Sb,
                1 => Op::Sh,
                2 => Op::Sw,
                _ => return bad,
            };
            Instr::new(op, z, rs1, rs2, sext(f7 << 5 | (word >> 7 & 31), 12))
        }
        0x13 => {
            let op = match (f3, f7) {
                (0, _) => Op::Addi,
                (2, _) => Op::Slti,
                (3, _) => Op::Sltiu,
                (4, _) => Op::Xori,
                (6, _) => Op::Ori,
                (7, _) => Op::Andi,
                (1, 0) => Op::Slli,
                (5, 0) => Op::Srli,
                (5, 0x20) => Op::Srai,
                _ => return bad,
            };
            let imm = if op.is_shift_imm() { rs2.0 as i32 } else { i_imm };
            Instr::i(op, rd, rs1, imm)
        }
        0x33 => {
            let op = match (f7, f3) {
                (0x00, 0) => Op::Add,
                (0x20, 0) => Op::Sub,
                (0x00, 1) => Op::Sll,
                (0x00, 2) => Op::Slt,
                (0x00, 3) => Op::Sltu,
                (0x00, 4) => Op::Xor,
                (0x00, 5) => Op::Srl,
                (0x20, 5) => Op::Sra,
                (0x00, 6) => Op::Or,
                (0x00, 7) => Op::And,
                (0x01, 0) => Op::Mul,
                (0x01, 1) => Op::Mulh,
                (0x01, 2) => Op::Mulhsu,
                (0x01, 3) => Op::Mulhu,
                (0x01, 4) => Op::Div,
                (0x01, 5) => Op::Divu,
                (0x01, 6) => Op::Rem,
                (0x01, 7) => Op::Remu,
                _ => return bad,
            };
            Instr::r(op, rd, rs1, rs2)
        }
        0x73 => match word {
            0x0000_0073 => Instr::i(Op::Ecall, z, z, 0),
            0x0010_0073 => Instr::i(Op::Ebreak, z, z, 0),
            _ => return bad,
        },
        OPC_CUSTOM0 if word >> 20 == 0 => match f3 {
            0 => Instr::new(Op::InitBb, rd, rs1, z, 0),
            1 => Instr::new(Op::EncWord, rd, rs1, z, 0),
            2 if rd == z && rs1 == z => Instr::new(Op::EnableDec, z, z, z, 0),
            3 if rd == z && rs1 == z => Instr::new(Op::DisableDec, z, z, z, 0),
            _ => return bad,
        },
        _ => return bad,
    };
    Ok(instr)
}

impl fmt::Display for Instr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.op.mnemonic();
        let (rd, rs1, rs2, imm) = (self.rd, self.rs1, self.rs2, self.imm);
        match self.format() {
            Format::R => write!(f, "{m} {rd}, {rs1}, {rs2}"),
            Format::I if self.op.is_load() || self.op == Op::Jalr => write!(f, "{m} {rd}, {imm}({rs1})"),
            Format::I if matches!(self.op, Op::Ecall | Op::Ebreak) => f.write_str(m),
            Format::I => write!(f, "{m} {rd}, {rs1}, {imm}"),
            Format::S => write!(f, "{m} {rs2}, {imm}({rs1})"),
            Format::B => write!(f, "{m} {rs1}, {rs2}, {imm}"),
            Format::U => write!(f, "{m} {rd}, {imm:#x}"),
            Format::J => write!(f, "{m} {rd}, {imm}"),
            Format::Ext if self.op.has_rd() => write!(f, "{m} {rd}, {rs1}"),
            Format::Ext => f.write_str(m),
        }
    }
}
