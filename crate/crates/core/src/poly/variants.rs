//! Semantically equivalent replacement sequences.
//!
//! Each family rewrites `op d, a, b` into a short sequence that may clobber
//! one scratch register `t`, which must be dead and distinct from `d`, `a`
//! and `b`. Sequences are never rewritten again.

use crate::asm::{Instr, Op, Reg};

use super::liveness::{regs_in, RegSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u32)]
pub enum Family {
    Xor = 1,
    Add = 2,
    Sub = 3,
    Or = 4,
    And = 5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Xor, Family::Add, Family::Sub, Family::Or, Family::And];

    pub fn of(i: &Instr) -> Option<Family> {
        if i.rd == Reg::ZERO {
            return None;
        }
        Some(match i.op {
            Op::Xor => Family::Xor,
            Op::Add => Family::Add,
            Op::Sub => Family::Sub,
            Op::Or => Family::Or,
            Op::And => Family::And,
            _ => return None,
        })
    }

    pub fn op(self) -> Op {
        match self {
            Family::Xor => Op::Xor,
            Family::Add => Op::Add,
            Family::Sub => Op::Sub,
            Family::Or => Op::Or,
            Family::And => Op::And,
        }
    }

    pub fn id(self) -> u32 {
        self as u32
    }

    /// The replacement for `op d, a, b` using scratch `t`.
    pub fn expand(self, d: Reg, a: Reg, b: Reg, t: Reg) -> Vec<Instr> {
        let r = Instr::r;
        match self {
            Family::Xor => vec![r(Op::Or, t, a, b), r(Op::And, d, a, b), r(Op::Sub, d, t, d)],
            Family::Add => vec![r(Op::Sub, t, Reg::ZERO, b), r(Op::Sub, d, a, t)],
            Family::Sub => vec![Instr::i(Op::Xori, t, b, -1), r(Op::Add, d, a, t), Instr::i(Op::Addi, d, d, 1)],
            Family::Or => vec![r(Op::Xor, t, a, b), r(Op::And, d, a, b), r(Op::Add, d, d, t)],
            Family::And => vec![r(Op::Or, t, a, b), r(Op::Xor, d, a, b), r(Op::Sub, d, t, d)],
        }
    }
}

/// Picks the variant of `i` using the lowest register of `dead` not used by
/// `i`; returns `i` unchanged when no variant applies.
pub fn pick_variant(i: &Instr, dead: RegSet) -> Vec<Instr> {
    let Some(f) = Family::of(i) else { return vec![*i] };
    let busy = [i.rd, i.rs1, i.rs2];
    match regs_in(dead).into_iter().find(|r| !busy.contains(r)) {
        Some(t) => f.expand(i.rd, i.rs1, i.rs2, t),
        None => vec![*i],
    }
}
