//! Generation plans: the per-block emission scripts an SGPC follows.

use crate::asm::{AsmInstr, Format, Function, Imm, Instr, Op, Reg};
use crate::cfgprep::{build_cfg, materialize_fallthroughs, merge_blocks, PrepError};

use super::config::PolyConfig;
use super::liveness::{self, bit, regs_in, RegSet, ARGS, EXIT_LIVE, TEMPS};
use super::variants::Family;
use super::windows::find_windows;

pub mod flags {
    pub const ENC: u32 = 1;
    pub const NOISE: u32 = 2;
    pub const VARIANTS: u32 = 4;
    pub const SHUF_INSTR: u32 = 8;
    pub const SHUF_REGS: u32 = 16;
    pub const NOISE_DEAD: u32 = 32;
}

/// Field positions inside a descriptor's info word.
pub mod info {
    pub const RS1: u32 = 5;
    pub const RS2: u32 = 10;
    pub const FAMILY: u32 = 18;
    pub const SCRATCH: u32 = 21;
    pub const DEAD: u32 = 26;
}

/// Encoding of an instruction with its register fields cleared. Symbolic
/// immediates are resolved once the image layout is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Word(u32),
    /// `lui` of `%hi(sym)`.
    Hi(String),
    /// I-type `base` with `%lo(sym)` in its immediate.
    LoI(String, u32),
    /// S-type `base` with `%lo(sym)` split over its immediate fields.
    LoS(String, u32),
}

impl Template {
    pub fn resolve(&self, addr_of: &dyn Fn(&str) -> Option<u32>) -> Option<u32> {
        let lo = |s: &str| addr_of(s).map(|a| a & 0xFFF);
        Some(match self {
            Template::Word(w) => *w,
            Template::Hi(s) => (addr_of(s)?.wrapping_add(0x800) & 0xFFFF_F000) | 0x37,
            Template::LoI(s, base) => lo(s)? << 20 | base,
            Template::LoS(s, base) => (lo(s)? >> 5) << 25 | (lo(s)? & 31) << 7 | base,
        })
    }

    pub fn symbol(&self) -> Option<&str> {
        match self {
            Template::Word(_) => None,
            Template::Hi(s) | Template::LoI(s, _) | Template::LoS(s, _) => Some(s),
        }
    }
}

/// One instruction to emit: template plus packed register and policy fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub template: Template,
    pub info: u32,
    pub source: AsmInstr,
}

impl Entry {
    pub fn rd(&self) -> Reg {
        Reg((self.info & 31) as u8)
    }
    pub fn rs1(&self) -> Reg {
        Reg((self.info >> info::RS1 & 31) as u8)
    }
    pub fn rs2(&self) -> Reg {
        Reg((self.info >> info::RS2 & 31) as u8)
    }
    pub fn family(&self) -> u32 {
        self.info >> info::FAMILY & 7
    }
    pub fn scratch(&self) -> Reg {
        Reg((self.info >> info::SCRATCH & 31) as u8)
    }
    pub fn dead(&self) -> Reg {
        Reg((self.info >> info::DEAD & 31) as u8)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// Independent instructions emitted in a possibly shuffled order.
    Window(Vec<Entry>),
    /// Direct jump or branch to block `target`.
    Jump { entry: Entry, target: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanBlock {
    pub label: String,
    pub actions: Vec<Action>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub name: String,
    pub blocks: Vec<PlanBlock>,
    pub alloc: Vec<Reg>,
    pub flags: u32,
    pub pmask: u32,
    pub nmax: u32,
    pub buffer_words: u32,
    pub fixcap: u32,
    pub regen_period: u32,
    pub live_in: RegSet,
}

impl Plan {
    pub fn entries(&self) -> usize {
        self.blocks
            .iter()
            .flat_map(|b| &b.actions)
            .map(|a| match a {
                Action::Window(v) => v.len(),
                Action::Jump { .. } => 1,
            })
            .sum()
    }

    pub fn has(&self, flag: u32) -> bool {
        self.flags & flag != 0
    }

    /// Worst-case instance size in words.
    pub fn bound_words(entries: usize, blocks: usize, nmax: u32) -> u32 {
        (entries as u32) * 3 * (1 << nmax) + 3 * blocks as u32
    }
}

fn unsupported(f: &Function, i: &AsmInstr, what: &str) -> PrepError {
    PrepError::Unsupported { func: f.name.clone(), line: i.line, what: what.to_string() }
}

fn template_of(f: &Function, i: &AsmInstr) -> Result<Template, PrepError> {
    let z = Reg::ZERO;
    let base = |imm: i32| Instr::new(i.op, z, z, z, imm).encode().map_err(|e| unsupported(f, i, &e.to_string()));
    Ok(match (&i.imm, i.op.format()) {
        (Imm::Value(v), _) => Template::Word(base(*v as i32)?),
        (Imm::Label(_), Format::B | Format::J) => Template::Word(base(0)?),
        (Imm::Hi(s), Format::U) if i.op == Op::Lui => Template::Hi(s.clone()),
        (Imm::Lo(s), Format::I) => Template::LoI(s.clone(), base(0)?),
        (Imm::Lo(s), Format::S) => Template::LoS(s.clone(), base(0)?),
        _ => return Err(unsupported(f, i, "symbolic operand")),
    })
}

fn pack(i: &AsmInstr, family: u32, scratch: Reg, dead: Reg) -> u32 {
    let f = |has: bool, r: Reg| if has { r.0 as u32 } else { 0 };
    f(i.op.has_rd(), i.rd)
        | f(i.op.has_rs1(), i.rs1) << info::RS1
        | f(i.op.has_rs2(), i.rs2) << info::RS2
        | family << info::FAMILY
        | (scratch.0 as u32) << info::SCRATCH
        | (dead.0 as u32) << info::DEAD
}

/// Registers eligible for renaming: the configured set (or t0-t6, a2-a7)
/// minus everything that is fixed, live on entry, observable after
/// return, or read by `ecall`.
pub fn allocatable(config: &PolyConfig, live_in: RegSet, has_ecall: bool) -> Vec<Reg> {
    let default = TEMPS | (0b11_1111 << 12);
    let want = match &config.alloc {
        Some(r) => liveness::set_of(r),
        None => default,
    };
    let mut deny = live_in | EXIT_LIVE | bit(Reg::ZERO);
    if has_ecall {
        deny |= ARGS;
    }
    regs_in(want & !deny)
}

/// Builds the generation plan of a `poly` function.
pub fn build_plan(f: &Function, config: &PolyConfig) -> Result<Plan, PrepError> {
    for i in f.instrs() {
        let bad = if i.is_call() {
            Some("call")
        } else if i.op == Op::Jalr && !i.is_ret() {
            Some("indirect jump")
        } else if i.op == Op::Auipc {
            Some("auipc")
        } else if i.op.format() == Format::Ext {
            Some("extension instruction")
        } else if (i.op.is_branch() || i.op == Op::Jal) && i.target().is_none() {
            Some("numeric jump offset")
        } else {
            None
        };
        if let Some(what) = bad {
            return Err(PrepError::Unsupported { func: f.name.clone(), line: i.line, what: format!("{what} in polymorphic code") });
        }
    }
    let cfg = materialize_fallthroughs(merge_blocks(build_cfg(f)?));
    let live = liveness::analyze(&cfg);
    let has_ecall = f.instrs().any(|i| i.op == Op::Ecall);
    let alloc = allocatable(config, live.entry(), has_ecall);
    let alloc_set = liveness::set_of(&alloc);

    let mut blocks = Vec::new();
    let mut fixcap = 0;
    for (k, b) in cfg.blocks.iter().enumerate() {
        let instrs: Vec<&AsmInstr> = b.instrs().collect();
        let mut actions = Vec::new();
        for w in find_windows(&instrs) {
            let mut regs = 0;
            for i in &instrs[w.clone()] {
                regs |= liveness::uses(i) | liveness::defs(i) | i.reads().fold(0, |m, r| m | bit(r));
            }
            let dead = alloc_set & !live.before[k][w.start] & !live.after[k][w.end - 1] & !regs;
            let t = regs_in(dead).first().copied().unwrap_or(Reg::ZERO);
            let entry = |i: &AsmInstr| -> Result<Entry, PrepError> {
                let family = i.to_instr().as_ref().and_then(Family::of).map_or(0, |f| f.id());
                Ok(Entry { template: template_of(f, i)?, info: pack(i, family, t, t), source: i.clone() })
            };
            let first = instrs[w.start];
            if let Some(label) = first.target() {
                let target = cfg.index_of(label).expect("targets resolved by build_cfg");
                if target > k {
                    fixcap += 1;
                }
                actions.push(Action::Jump { entry: entry(first)?, target });
            } else {
                actions.push(Action::Window(instrs[w].iter().map(|i| entry(i)).collect::<Result<_, _>>()?));
            }
        }
        blocks.push(PlanBlock { label: b.label.clone(), actions });
    }

    let t = config.transforms;
    let mut fl = 0;
    for (on, bit) in [
        (config.encrypt_instance, flags::ENC),
        (t.noise, flags::NOISE),
        (t.variants, flags::VARIANTS),
        (t.shuffle_instr, flags::SHUF_INSTR),
        (t.shuffle_regs, flags::SHUF_REGS),
        (config.noise_dead, flags::NOISE_DEAD),
    ] {
        if on {
            fl |= bit;
        }
    }
    let mut plan = Plan {
        name: f.name.clone(),
        blocks,
        alloc,
        flags: fl,
        pmask: config.pmask(),
        nmax: config.nmax,
        buffer_words: 0,
        fixcap,
        regen_period: config.regen_period,
        live_in: live.entry(),
    };
    plan.buffer_words = config.buffer_words.unwrap_or_else(|| Plan::bound_words(plan.entries(), plan.blocks.len(), config.nmax));
    Ok(plan)
}
