//! Control-flow preparation of encrypted functions.
//!
//! Passes run in a fixed order: build, merge (optional), materialize
//! fallthroughs, bracket calls, insert IV slots. Afterwards every block of an
//! encrypted function starts with a 3-word IV slot and is entered only by a
//! taken control-flow instruction. Plain functions are left alone except
//! around calls into encrypted code, which get `enable_dec` before the call
//! and a one-block encrypted landing `[disable_dec; jal x0, cont]` after it
//! for the callee's return.

mod cfg;
mod passes;

use crate::asm::{AsmInstr, AsmProgram, Function, Imm, Item, Op, Reg, RegionKind, Stmt};

pub use cfg::{build_cfg, BasicBlock, BodyItem, Cfg, Edge, EdgeKind};
pub use passes::{bracket_calls, insert_iv_slots, materialize_fallthroughs, merge_blocks};

/// Name of the plain start stub added when the entry function is encrypted.
pub const START_STUB: &str = "__polen_start";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrepError {
    #[error("in `{func}`: jump to undefined label `{label}`")]
    UndefinedLabel { func: String, label: String },
    #[error("in `{func}`: call to unknown symbol `{callee}`")]
    UnknownCallee { func: String, callee: String },
    #[error("in `{func}`, line {line}: {what} is not supported in encrypted code")]
    Unsupported { func: String, line: usize, what: String },
    #[error("`{0}` already contains IV slots or regions")]
    AlreadyPrepared(String),
    #[error("in `{func}`: label `{label}` starts an empty block")]
    EmptyBlock { func: String, label: String },
    #[error("in `{func}`: block `{label}` is too long for its IV slot")]
    SlotOverflow { func: String, label: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrepOptions {
    pub merge: bool,
}

impl Default for PrepOptions {
    fn default() -> Self {
        PrepOptions { merge: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FunctionStats {
    pub blocks_before: usize,
    pub blocks: usize,
    pub instrs_before: usize,
    pub instrs: usize,
    pub jumps_removed: usize,
    pub jumps_added: usize,
    pub islands: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrepReport {
    pub functions: Vec<(String, FunctionStats)>,
    /// Encrypted landings added after calls from plain into encrypted code.
    pub landings: usize,
    pub start_stub: bool,
}

impl PrepReport {
    pub fn slots(&self) -> usize {
        self.functions.iter().map(|(_, s)| s.blocks).sum::<usize>() + self.landings
    }
}

/// Runs every pass on one encrypted function.
pub fn prepare_function(
    f: &Function,
    encrypted: &dyn Fn(&str) -> Option<bool>,
    opts: PrepOptions,
) -> Result<(Function, FunctionStats), PrepError> {
    for i in f.instrs() {
        if i.op == Op::Jalr && !i.is_ret() {
            return Err(PrepError::Unsupported { func: f.name.clone(), line: i.line, what: "indirect jump".into() });
        }
    }
    let cfg = build_cfg(f)?;
    let mut st = FunctionStats { blocks_before: cfg.blocks.len(), instrs_before: cfg.instr_count(), ..Default::default() };
    let cfg = if opts.merge { merge_blocks(cfg) } else { cfg };
    st.jumps_removed = st.instrs_before - cfg.instr_count();
    let n = cfg.instr_count();
    let cfg = materialize_fallthroughs(cfg);
    st.jumps_added = cfg.instr_count() - n;
    let cfg = insert_iv_slots(bracket_calls(cfg, encrypted)?)?;
    st.blocks = cfg.blocks.len();
    st.instrs = cfg.instr_count();
    st.islands = cfg.island_count();
    Ok((cfg.to_function(), st))
}

fn landing_label(f: &Function, k: usize) -> String {
    format!(".L{}.ret{}", f.name, k)
}

/// Adds `enable_dec` and an encrypted landing around each direct call from
/// a plain function into encrypted code. Returns the number of landings.
fn bracket_plain(f: &mut Function, encrypted: &dyn Fn(&str) -> Option<bool>) -> usize {
    let mut out = Vec::with_capacity(f.body.len());
    let mut k = 0;
    for s in std::mem::take(&mut f.body) {
        let callee = match &s {
            Stmt::Instr(i) if i.is_call() => i.target().map(str::to_string),
            _ => None,
        };
        match callee.filter(|c| encrypted(c) == Some(true)) {
            Some(_) => {
                let cont = landing_label(f, k);
                k += 1;
                out.push(Stmt::Instr(AsmInstr::bare(Op::EnableDec)));
                out.push(s);
                out.push(Stmt::Region(RegionKind::Encrypted));
                out.push(Stmt::IvSlot(2));
                out.push(Stmt::Instr(AsmInstr::bare(Op::DisableDec)));
                out.push(Stmt::Instr(AsmInstr::jump(&cont)));
                out.push(Stmt::EndRegion);
                out.push(Stmt::Label(cont));
            }
            None => out.push(s),
        }
    }
    f.body = out;
    k
}

fn start_stub(entry: &str) -> Function {
    let mut f = Function::new(START_STUB);
    f.body = vec![
        Stmt::Instr(AsmInstr::call(entry)),
        Stmt::Instr(AsmInstr::new(Op::Addi, Reg::A7, Reg::ZERO, Reg::ZERO, Imm::Value(crate::sim::ECALL_EXIT as i64))),
        Stmt::Instr(AsmInstr::bare(Op::Ecall)),
    ];
    f
}

/// Prepares every encrypted function and brackets calls into encrypted code
/// from plain functions. If the entry function is encrypted, a plain start
/// stub calls it and exits with its return value.
pub fn prepare_program(prog: &AsmProgram, opts: PrepOptions) -> Result<(AsmProgram, PrepReport), PrepError> {
    let mut out = prog.clone();
    let mut report = PrepReport::default();
    let entry = prog.entry_name().to_string();
    if prog.is_encrypted_target(&entry) == Some(true) {
        out.items.push(Item::Func(start_stub(&entry)));
        out.entry = Some(START_STUB.to_string());
        report.start_stub = true;
    }
    let lookup = |s: &str| prog.is_encrypted_target(s);
    for item in &mut out.items {
        let Item::Func(f) = item else { continue };
        if f.encrypt {
            let (g, st) = prepare_function(f, &lookup, opts)?;
            report.functions.push((f.name.clone(), st));
            *f = g;
        } else {
            report.landings += bracket_plain(f, &lookup);
        }
    }
    Ok((out, report))
}
