//! Backward register liveness over a function's control-flow graph.

use crate::asm::{AsmInstr, Op, Reg};
use crate::cfgprep::Cfg;

pub type RegSet = u32;

pub fn bit(r: Reg) -> RegSet {
    if r == Reg::ZERO {
        0
    } else {
        1 << r.0
    }
}

pub fn set_of(regs: &[Reg]) -> RegSet {
    regs.iter().fold(0, |m, r| m | bit(*r))
}

pub fn regs_in(s: RegSet) -> Vec<Reg> {
    (1..32u8).filter(|i| s >> i & 1 == 1).map(Reg).collect()
}

/// a0-a7.
pub const ARGS: RegSet = 0xFF << 10;
/// t0-t2, t3-t6.
pub const TEMPS: RegSet = 0b111 << 5 | 0xF << 28;
/// s0-s1, s2-s11.
pub const SAVED: RegSet = 0b11 << 8 | 0x3FF << 18;
/// Registers a caller may read after `ret`: ra, sp, gp, tp, a0, a1 and the
/// callee-saved set.
pub const EXIT_LIVE: RegSet = 0b11110 | 0b11 << 10 | SAVED;

/// Registers read by `i`, including the implicit reads of calls, `ret` and
/// `ecall`.
pub fn uses(i: &AsmInstr) -> RegSet {
    let mut m = i.reads().fold(0, |m, r| m | bit(r));
    if i.is_ret() {
        m |= EXIT_LIVE;
    } else if i.is_call() || i.op == Op::Ecall {
        m |= ARGS;
    }
    m
}

/// Registers written by `i`; a call clobbers every caller-saved register.
pub fn defs(i: &AsmInstr) -> RegSet {
    let mut m = i.writes().map_or(0, bit);
    if i.is_call() {
        m |= bit(Reg::RA) | TEMPS | ARGS;
    }
    m
}

/// Live sets before and after each instruction of each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Liveness {
    pub before: Vec<Vec<RegSet>>,
    pub after: Vec<Vec<RegSet>>,
}

impl Liveness {
    pub fn live_in(&self, block: usize) -> RegSet {
        self.before[block].first().copied().unwrap_or(0)
    }

    pub fn entry(&self) -> RegSet {
        self.live_in(0)
    }
}

/// Successor blocks of `k`. A block whose last instruction neither jumps
/// nor returns and has no successor leaves the function, as does `ret`.
fn successors(cfg: &Cfg, k: usize) -> (Vec<usize>, bool) {
    let b = &cfg.blocks[k];
    let mut succ = Vec::new();
    let mut leaves = false;
    for i in b.instrs() {
        if i.is_call() {
            continue;
        }
        if let Some(t) = i.target() {
            succ.extend(cfg.index_of(t));
        } else if i.op == Op::Jalr {
            leaves = true;
        }
    }
    match b.fall.as_deref().or(b.island.as_deref()) {
        Some(l) => succ.extend(cfg.index_of(l)),
        None => {
            let last = b.last();
            if last.is_none_or(|i| !(i.is_jump() || i.op == Op::Jalr)) {
                leaves = true;
            }
        }
    }
    (succ, leaves)
}

pub fn analyze(cfg: &Cfg) -> Liveness {
    let n = cfg.blocks.len();
    let succ: Vec<_> = (0..n).map(|k| successors(cfg, k)).collect();
    let instrs: Vec<Vec<&AsmInstr>> = cfg.blocks.iter().map(|b| b.instrs().collect()).collect();
    let mut live_in = vec![0 as RegSet; n];
    loop {
        let mut changed = false;
        for k in (0..n).rev() {
            let (s, leaves) = &succ[k];
            let mut live = s.iter().fold(if *leaves { EXIT_LIVE } else { 0 }, |m, &d| m | live_in[d]);
            for i in instrs[k].iter().rev() {
                live = (live & !defs(i)) | uses(i);
            }
            if live != live_in[k] {
                live_in[k] = live;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut before = Vec::with_capacity(n);
    let mut after = Vec::with_capacity(n);
    for k in 0..n {
        let (s, leaves) = &succ[k];
        let mut live = s.iter().fold(if *leaves { EXIT_LIVE } else { 0 }, |m, &d| m | live_in[d]);
        let m = instrs[k].len();
        let (mut b, mut a) = (vec![0; m], vec![0; m]);
        for (j, i) in instrs[k].iter().enumerate().rev() {
            a[j] = live;
            live = (live & !defs(i)) | uses(i);
            b[j] = live;
        }
        before.push(b);
        after.push(a);
    }
    Liveness { before, after }
}
