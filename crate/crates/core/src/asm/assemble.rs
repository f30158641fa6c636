//! Two-pass layout and encoding.

use std::collections::BTreeMap;

use super::ast::*;
use super::image::{Image, Region, SymKind, Symbol};
use super::IV_MAGIC;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AsmError {
    #[error("duplicate symbol `{0}`")]
    Duplicate(String),
    #[error("in `{func}`, line {line}: {source}")]
    Resolve { func: String, line: usize, source: ResolveError },
    #[error("undefined symbol `{0}` in data")]
    UndefinedData(String),
    #[error("data value {0} does not fit its field")]
    DataRange(i64),
    #[error("entry symbol `{0}` is not defined")]
    NoEntry(String),
    #[error("base address {0:#x} is not word aligned")]
    Unaligned(u32),
}

struct Layout {
    symbols: BTreeMap<String, Symbol>,
    regions: Vec<Region>,
    end: u32,
}

fn define(symbols: &mut BTreeMap<String, Symbol>, name: &str, addr: u32, kind: SymKind) -> Result<(), AsmError> {
    if symbols.contains_key(name) {
        return Err(AsmError::Duplicate(name.to_string()));
    }
    symbols.insert(name.to_string(), Symbol { name: name.to_string(), addr, size: 0, kind });
    Ok(())
}

fn push_region(regions: &mut Vec<Region>, start: u32, end: u32, kind: RegionKind) {
    if start == end {
        return;
    }
    match regions.last_mut() {
        Some(r) if r.kind == kind && r.end == start => r.end = end,
        _ => regions.push(Region { start, end, kind }),
    }
}

/// Byte size of one statement.
pub fn stmt_size(s: &Stmt) -> u32 {
    match s {
        Stmt::Instr(_) => 4,
        Stmt::IvSlot(_) => 12,
        Stmt::Word(v) => 4 * v.len() as u32,
        Stmt::Label(_) | Stmt::Region(_) | Stmt::EndRegion => 0,
    }
}

fn layout(prog: &AsmProgram, base: u32) -> Result<Layout, AsmError> {
    let mut symbols = BTreeMap::new();
    let mut regions = Vec::new();
    let mut pc = base;
    for item in &prog.items {
        match item {
            Item::Func(f) => {
                let start = pc;
                define(&mut symbols, &f.name, pc, SymKind::Function)?;
                let outer = if f.encrypt { RegionKind::Encrypted } else { RegionKind::Plain };
                let mut stack = vec![outer];
                for s in &f.body {
                    match s {
                        Stmt::Label(l) => define(&mut symbols, l, pc, SymKind::Label)?,
                        Stmt::Region(k) => stack.push(*k),
                        Stmt::EndRegion => {
                            stack.pop();
                        }
                        _ => {
                            let n = stmt_size(s);
                            push_region(&mut regions, pc, pc + n, *stack.last().unwrap_or(&outer));
                            pc += n;
                        }
                    }
                }
                symbols.get_mut(&f.name).unwrap().size = pc - start;
            }
            Item::Data(d) => {
                let start = pc;
                let kind = if d.encrypt {
                    SymKind::CodeBuffer
                } else if d.scratch {
                    SymKind::Scratch
                } else {
                    SymKind::Data
                };
                define(&mut symbols, &d.name, pc, kind)?;
                let mut off = 0u32;
                for it in &d.items {
                    match it {
                        DataItem::Label(l) => define(&mut symbols, l, start + off, SymKind::Label)?,
                        DataItem::Words(w) => off = align4(off) + 4 * w.len() as u32,
                        DataItem::Bytes(b) => off += b.len() as u32,
                        DataItem::Space(n) => off += n,
                    }
                }
                pc = start + align4(off);
                symbols.get_mut(&d.name).unwrap().size = pc - start;
            }
        }
    }
    Ok(Layout { symbols, regions, end: pc })
}

pub fn assemble(prog: &AsmProgram, base: u32) -> Result<Image, AsmError> {
    if !base.is_multiple_of(4) {
        return Err(AsmError::Unaligned(base));
    }
    let Layout { symbols, regions, end } = layout(prog, base)?;
    let addr_of = |s: &str| symbols.get(s).map(|x| x.addr);
    let value = |v: &Value| -> Result<i64, AsmError> {
        match v {
            Value::Num(n) => Ok(*n),
            Value::Sym(s) => addr_of(s).map(|a| a as i64).ok_or_else(|| AsmError::UndefinedData(s.clone())),
        }
    };
    let word_of = |v: &Value| -> Result<u32, AsmError> {
        let n = value(v)?;
        if n < i32::MIN as i64 || n > u32::MAX as i64 {
            return Err(AsmError::DataRange(n));
        }
        Ok(n as u32)
    };
    let mut bytes = vec![0u8; (end - base) as usize];
    let put = |bytes: &mut [u8], addr: u32, w: u32| {
        let o = (addr - base) as usize;
        bytes[o..o + 4].copy_from_slice(&w.to_le_bytes());
    };
    for item in &prog.items {
        match item {
            Item::Func(f) => {
                let mut pc = symbols[&f.name].addr;
                for s in &f.body {
                    match s {
                        Stmt::Instr(i) => {
                            let w = i
                                .resolve(pc, addr_of)
                                .and_then(|r| r.encode().map_err(ResolveError::Encode))
                                .map_err(|source| AsmError::Resolve { func: f.name.clone(), line: i.line, source })?;
                            put(&mut bytes, pc, w);
                        }
                        Stmt::IvSlot(n) => {
                            put(&mut bytes, pc, IV_MAGIC);
                            put(&mut bytes, pc + 4, IV_MAGIC);
                            put(&mut bytes, pc + 8, *n);
                        }
                        Stmt::Word(vals) => {
                            for (k, v) in vals.iter().enumerate() {
                                put(&mut bytes, pc + 4 * k as u32, word_of(v)?);
                            }
                        }
                        _ => {}
                    }
                    pc += stmt_size(s);
                }
            }
            Item::Data(d) => {
                let start = symbols[&d.name].addr;
                let mut off = 0u32;
                for it in &d.items {
                    match it {
                        DataItem::Label(_) => {}
                        DataItem::Words(w) => {
                            off = align4(off);
                            for v in w {
                                put(&mut bytes, start + off, word_of(v)?);
                                off += 4;
                            }
                        }
                        DataItem::Bytes(b) => {
                            let o = (start - base + off) as usize;
                            bytes[o..o + b.len()].copy_from_slice(b);
                            off += b.len() as u32;
                        }
                        DataItem::Space(n) => off += n,
                    }
                }
            }
        }
    }
    let entry_name = prog.entry_name();
    let entry = addr_of(entry_name).ok_or_else(|| AsmError::NoEntry(entry_name.to_string()))?;
    let words = bytes.chunks(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect();
    Ok(Image { base, entry, words, symbols, regions })
}
