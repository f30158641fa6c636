use std::collections::{BTreeMap, BTreeSet};

use crate::asm::{AsmInstr, Function, Op, Stmt};

use super::PrepError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BodyItem {
    /// A label that does not start a block.
    Label(String),
    Instr(AsmInstr),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Sequential successor, including the not-taken side of a branch.
    Fallthrough,
    BranchTaken,
    Jump,
    /// Landing of a call's return on the block after it.
    Return,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicBlock {
    pub label: String,
    /// Further labels bound to the block start.
    pub aliases: Vec<String>,
    pub body: Vec<BodyItem>,
    /// Implicit successor reached without a taken control-flow instruction.
    pub fall: Option<String>,
    /// Continuation reached through a plaintext island after a call into
    /// unencrypted code.
    pub island: Option<String>,
    pub needs_iv: bool,
}

impl BasicBlock {
    fn new(label: String) -> Self {
        BasicBlock { label, aliases: Vec::new(), body: Vec::new(), fall: None, island: None, needs_iv: false }
    }

    pub fn instrs(&self) -> impl DoubleEndedIterator<Item = &AsmInstr> {
        self.body.iter().filter_map(|b| match b {
            BodyItem::Instr(i) => Some(i),
            BodyItem::Label(_) => None,
        })
    }

    /// Instruction count, excluding the IV slot.
    pub fn nb_i(&self) -> usize {
        self.instrs().count()
    }

    pub fn last(&self) -> Option<&AsmInstr> {
        self.instrs().next_back()
    }

    pub fn ends_with_call(&self) -> bool {
        self.last().is_some_and(|i| i.is_call())
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.label.as_str()).chain(self.aliases.iter().map(|s| s.as_str()))
    }
}

/// Control-flow graph of one function. Blocks are kept in layout order;
/// block 0 is the entry and carries the function's name as its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    pub name: String,
    pub encrypt: bool,
    pub poly: bool,
    pub line: usize,
    pub blocks: Vec<BasicBlock>,
    fresh: usize,
}

fn ends_block(i: &AsmInstr) -> bool {
    i.op.is_branch() || i.op == Op::Jal || i.op == Op::Jalr
}

fn falls_through(i: Option<&AsmInstr>) -> bool {
    match i {
        None => true,
        Some(i) => !(i.is_jump() || i.op == Op::Jalr),
    }
}

pub fn build_cfg(f: &Function) -> Result<Cfg, PrepError> {
    let err_at = |line: usize, what: &str| PrepError::Unsupported { func: f.name.clone(), line, what: what.to_string() };
    let mut defined = BTreeSet::new();
    let mut targeted = BTreeSet::new();
    for s in &f.body {
        match s {
            Stmt::Label(l) => {
                defined.insert(l.clone());
            }
            Stmt::Instr(i) if !i.is_call() => {
                if let Some(t) = i.target() {
                    targeted.insert(t.to_string());
                }
            }
            Stmt::Instr(_) => {}
            Stmt::Word(_) => return Err(err_at(f.line, "`.word` inside code")),
            Stmt::IvSlot(_) | Stmt::Region(_) | Stmt::EndRegion => {
                return Err(PrepError::AlreadyPrepared(f.name.clone()));
            }
        }
    }
    defined.insert(f.name.clone());
    if let Some(t) = targeted.iter().find(|t| !defined.contains(*t)) {
        return Err(PrepError::UndefinedLabel { func: f.name.clone(), label: t.clone() });
    }

    let mut cfg = Cfg { name: f.name.clone(), encrypt: f.encrypt, poly: f.poly, line: f.line, blocks: Vec::new(), fresh: 0 };
    let mut cur = BasicBlock::new(f.name.clone());
    let mut closed = false;
    for s in &f.body {
        match s {
            Stmt::Label(l) => {
                if cur.body.is_empty() && !closed {
                    cur.aliases.push(l.clone());
                } else if targeted.contains(l) || closed {
                    let prev = std::mem::replace(&mut cur, BasicBlock::new(l.clone()));
                    cfg.blocks.push(prev);
                    closed = false;
                } else {
                    cur.body.push(BodyItem::Label(l.clone()));
                }
            }
            Stmt::Instr(i) => {
                if closed {
                    let label = cfg.fresh_label(&defined);
                    let prev = std::mem::replace(&mut cur, BasicBlock::new(label));
                    cfg.blocks.push(prev);
                }
                cur.body.push(BodyItem::Instr(i.clone()));
                closed = ends_block(i);
            }
            _ => unreachable!(),
        }
    }
    match cfg.blocks.last_mut() {
        // trailing labels nobody jumps to
        Some(prev) if cur.body.is_empty() && !cur.labels().any(|l| targeted.contains(l)) => {
            prev.body.extend(cur.labels().map(|l| BodyItem::Label(l.to_string())));
        }
        _ => cfg.blocks.push(cur),
    }
    if let Some(b) = cfg.blocks.iter().find(|b| b.nb_i() == 0) {
        return Err(PrepError::EmptyBlock { func: f.name.clone(), label: b.label.clone() });
    }
    let n = cfg.blocks.len();
    for k in 0..n.saturating_sub(1) {
        if falls_through(cfg.blocks[k].last()) {
            cfg.blocks[k].fall = Some(cfg.blocks[k + 1].label.clone());
        }
    }
    Ok(cfg)
}

impl Cfg {
    fn fresh_label(&mut self, taken: &BTreeSet<String>) -> String {
        loop {
            let l = format!(".L{}.{}", self.name, self.fresh);
            self.fresh += 1;
            if !taken.contains(&l) && !self.blocks.iter().any(|b| b.labels().any(|x| x == l)) {
                return l;
            }
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.labels().any(|l| l == label))
    }

    fn label_map(&self) -> BTreeMap<&str, usize> {
        let mut m = BTreeMap::new();
        for (k, b) in self.blocks.iter().enumerate() {
            for l in b.labels() {
                m.insert(l, k);
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<Edge> {
        let map = self.label_map();
        let mut out = Vec::new();
        for (src, b) in self.blocks.iter().enumerate() {
            for i in b.instrs() {
                if i.is_call() {
                    continue;
                }
                if let Some(&dst) = i.target().and_then(|t| map.get(t)) {
                    let kind = if i.op.is_branch() { EdgeKind::BranchTaken } else { EdgeKind::Jump };
                    out.push(Edge { src, dst, kind });
                }
            }
            let via = b.fall.as_deref().or(b.island.as_deref());
            if let Some(&dst) = via.and_then(|l| map.get(l)) {
                let kind = if b.ends_with_call() { EdgeKind::Return } else { EdgeKind::Fallthrough };
                out.push(Edge { src, dst, kind });
            }
        }
        out
    }

    /// Predecessor count per block; the entry counts its external caller.
    pub fn pred_counts(&self) -> Vec<usize> {
        let mut p = vec![0; self.blocks.len()];
        if !p.is_empty() {
            p[0] = 1;
        }
        for e in self.edges() {
            p[e.dst] += 1;
        }
        p
    }

    pub fn instr_count(&self) -> usize {
        self.blocks.iter().map(|b| b.nb_i()).sum()
    }

    pub fn slot_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.needs_iv).count()
    }

    pub fn island_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.island.is_some()).count()
    }

    /// Lays the graph back out as a function body.
    pub fn to_function(&self) -> Function {
        let mut body = Vec::new();
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                body.push(Stmt::Label(b.label.clone()));
            }
            body.extend(b.aliases.iter().map(|a| Stmt::Label(a.clone())));
            if b.needs_iv {
                body.push(Stmt::IvSlot(b.nb_i() as u32));
            }
            for it in &b.body {
                body.push(match it {
                    BodyItem::Label(l) => Stmt::Label(l.clone()),
                    BodyItem::Instr(i) => Stmt::Instr(i.clone()),
                });
            }
            if let Some(cont) = &b.island {
                body.push(Stmt::Region(crate::asm::RegionKind::Plain));
                body.push(Stmt::Instr(AsmInstr::bare(Op::EnableDec)));
                body.push(Stmt::Instr(AsmInstr::jump(cont)));
                body.push(Stmt::EndRegion);
            }
        }
        Function { name: self.name.clone(), encrypt: self.encrypt, poly: self.poly, body, line: self.line }
    }
}
