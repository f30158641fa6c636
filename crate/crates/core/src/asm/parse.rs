//! Line-oriented parser for the assembly dialect.
//!
//! ```text
//! .entry main
//! .func f encrypt poly      # attributes are optional
//! loop:   addi a0, a0, -1
//!         bnez a0, loop
//!         ret
//! .endfunc
//! .data table scratch
//!         .word 1, 2, sym
//!         .byte 0x63, 0x7c
//!         .space 16
//! .enddata
//! ```
//!
//! Comments start with `#` or `;`. Pseudo-instructions are expanded while
//! parsing, so the tree only ever holds base instructions.

use super::ast::*;
use super::isa::{Format, Op, Reg};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Operand {
    Reg(Reg),
    Imm(Imm),
    Mem(Imm, Reg),
}

struct Ctx {
    line: usize,
}

impl Ctx {
    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, col, msg: msg.into() })
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '.' || c == '$'
}

fn is_ident(s: &str) -> bool {
    let mut it = s.chars();
    matches!(it.next(), Some(c) if is_ident_start(c)) && it.all(|c| c.is_ascii_alphanumeric() || "_.$".contains(c))
}

pub fn parse_int(s: &str) -> Option<i64> {
    let s = s.trim();
    if let Some(c) = s.strip_prefix('\'').and_then(|r| r.strip_suffix('\'')) {
        let mut chars = c.chars();
        return match (chars.next(), chars.next()) {
            (Some(ch), None) if ch.is_ascii() => Some(ch as i64),
            _ => None,
        };
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let body = body.replace('_', "");
    let v = if let Some(h) = body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
        i64::from_str_radix(h, 16).ok()?
    } else if let Some(b) = body.strip_prefix("0b") {
        i64::from_str_radix(b, 2).ok()?
    } else if !body.is_empty() && body.chars().all(|c| c.is_ascii_digit()) {
        body.parse().ok()?
    } else {
        return None;
    };
    Some(if neg { -v } else { v })
}

fn parse_imm(s: &str) -> Option<Imm> {
    let s = s.trim();
    for (pre, ctor) in [("%hi(", Imm::Hi as fn(String) -> Imm), ("%lo(", Imm::Lo)] {
        if let Some(inner) = s.strip_prefix(pre).and_then(|r| r.strip_suffix(')')) {
            return is_ident(inner.trim()).then(|| ctor(inner.trim().to_string()));
        }
    }
    if let Some(v) = parse_int(s) {
        return Some(Imm::Value(v));
    }
    is_ident(s).then(|| Imm::Label(s.to_string()))
}

fn parse_operand(s: &str) -> Option<Operand> {
    let s = s.trim();
    if let Some(r) = Reg::parse(s) {
        return Some(Operand::Reg(r));
    }
    // imm(reg) — the immediate itself may contain parentheses (%lo(x))
    if s.ends_with(')') {
        if let Some(open) = s.rfind('(') {
            if let Some(r) = Reg::parse(&s[open + 1..s.len() - 1]) {
                let head = s[..open].trim();
                let imm = if head.is_empty() { Imm::Value(0) } else { parse_imm(head)? };
                return Some(Operand::Mem(imm, r));
            }
        }
    }
    parse_imm(s).map(Operand::Imm)
}

/// Splits on top-level commas, returning (column, text) pairs.
fn split_operands(s: &str, base_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if !s[start..].trim().is_empty() || !out.is_empty() {
        out.push((start, &s[start..]));
    }
    out.into_iter().map(|(off, t)| (base_col + off + (t.len() - t.trim_start().len()), t.trim())).collect()
}

struct Operands<'a> {
    ctx: &'a Ctx,
    mn: &'a str,
    col: usize,
    ops: Vec<(usize, Operand)>,
}

impl Operands<'_> {
    fn arity(&self, n: usize) -> Result<(), ParseError> {
        if self.ops.len() != n {
            return self.ctx.err(self.col, format!("`{}` expects {} operand(s), got {}", self.mn, n, self.ops.len()));
        }
        Ok(())
    }

    fn reg(&self, i: usize) -> Result<Reg, ParseError> {
        match &self.ops[i] {
            (_, Operand::Reg(r)) => Ok(*r),
            (c, _) => self.ctx.err(*c, format!("`{}` operand {} must be a register", self.mn, i + 1)),
        }
    }

    fn imm(&self, i: usize) -> Result<Imm, ParseError> {
        match &self.ops[i] {
            (_, Operand::Imm(v)) => Ok(v.clone()),
            (c, _) => self.ctx.err(*c, format!("`{}` operand {} must be an immediate or label", self.mn, i + 1)),
        }
    }

    fn value(&self, i: usize) -> Result<i64, ParseError> {
        match self.imm(i)? {
            Imm::Value(v) => Ok(v),
            _ => self.ctx.err(self.ops[i].0, format!("`{}` operand {} must be a number", self.mn, i + 1)),
        }
    }

    fn mem(&self, i: usize) -> Result<(Imm, Reg), ParseError> {
        match &self.ops[i] {
            (_, Operand::Mem(imm, r)) => Ok((imm.clone(), *r)),
            (c, _) => self.ctx.err(*c, format!("`{}` operand {} must be `offset(reg)`", self.mn, i + 1)),
        }
    }
}

fn sext12(v: u32) -> i64 {
    ((v << 20) as i32 >> 20) as i64
}

fn ins(op: Op, rd: Reg, rs1: Reg, rs2: Reg, imm: Imm) -> AsmInstr {
    AsmInstr::new(op, rd, rs1, rs2, imm)
}

fn expand(o: &Operands) -> Result<Vec<AsmInstr>, ParseError> {
    let z = Reg::ZERO;
    let v = |x: i64| Imm::Value(x);
    let branch_alias = |op: Op, swap: bool, zero_first: Option<bool>| -> Result<Vec<AsmInstr>, ParseError> {
        match zero_first {
            Some(zf) => {
                o.arity(2)?;
                let (r, t) = (o.reg(0)?, o.imm(1)?);
                let (a, b) = if zf { (z, r) } else { (r, z) };
                Ok(vec![ins(op, z, a, b, t)])
            }
            None => {
                o.arity(3)?;
                let (a, b, t) = (o.reg(0)?, o.reg(1)?, o.imm(2)?);
                let (a, b) = if swap { (b, a) } else { (a, b) };
                Ok(vec![ins(op, z, a, b, t)])
            }
        }
    };
    let out = match o.mn {
        "nop" => {
            o.arity(0)?;
            vec![ins(Op::Addi, z, z, z, v(0))]
        }
        "li" => {
            o.arity(2)?;
            let rd = o.reg(0)?;
            let val = o.value(1)?;
            if val < i32::MIN as i64 || val > u32::MAX as i64 {
                return o.ctx.err(o.ops[1].0, format!("`li` value {val} does not fit 32 bits"));
            }
            let w = val as u32;
            if (-2048..2048).contains(&(w as i32)) {
                vec![ins(Op::Addi, rd, z, z, v(w as i32 as i64))]
            } else {
                let lo = sext12(w);
                let hi = (w.wrapping_add(0x800) >> 12) as i64;
                let mut seq = vec![ins(Op::Lui, rd, z, z, v(hi))];
                if lo != 0 {
                    seq.push(ins(Op::Addi, rd, rd, z, v(lo)));
                }
                seq
            }
        }
        "la" => {
            o.arity(2)?;
            let rd = o.reg(0)?;
            let sym = match o.imm(1)? {
                Imm::Label(s) => s,
                _ => return o.ctx.err(o.ops[1].0, "`la` expects a symbol"),
            };
            vec![ins(Op::Lui, rd, z, z, Imm::Hi(sym.clone())), ins(Op::Addi, rd, rd, z, Imm::Lo(sym))]
        }
        "mv" => {
            o.arity(2)?;
            vec![ins(Op::Addi, o.reg(0)?, o.reg(1)?, z, v(0))]
        }
        "not" => {
            o.arity(2)?;
            vec![ins(Op::Xori, o.reg(0)?, o.reg(1)?, z, v(-1))]
        }
        "neg" => {
            o.arity(2)?;
            vec![ins(Op::Sub, o.reg(0)?, z, o.reg(1)?, v(0))]
        }
        "seqz" => {
            o.arity(2)?;
            vec![ins(Op::Sltiu, o.reg(0)?, o.reg(1)?, z, v(1))]
        }
        "snez" => {
            o.arity(2)?;
            vec![ins(Op::Sltu, o.reg(0)?, z, o.reg(1)?, v(0))]
        }
        "j" => {
            o.arity(1)?;
            vec![ins(Op::Jal, z, z, z, o.imm(0)?)]
        }
        "call" => {
            o.arity(1)?;
            vec![ins(Op::Jal, Reg::RA, z, z, o.imm(0)?)]
        }
        "jr" => {
            o.arity(1)?;
            vec![ins(Op::Jalr, z, o.reg(0)?, z, v(0))]
        }
        "ret" => {
            o.arity(0)?;
            vec![ins(Op::Jalr, z, Reg::RA, z, v(0))]
        }
        "beqz" => branch_alias(Op::Beq, false, Some(false))?,
        "bnez" => branch_alias(Op::Bne, false, Some(false))?,
        "bltz" => branch_alias(Op::Blt, false, Some(false))?,
        "bgez" => branch_alias(Op::Bge, false, Some(false))?,
        "blez" => branch_alias(Op::Bge, false, Some(true))?,
        "bgtz" => branch_alias(Op::Blt, false, Some(true))?,
        "bgt" => branch_alias(Op::Blt, true, None)?,
        "ble" => branch_alias(Op::Bge, true, None)?,
        "bgtu" => branch_alias(Op::Bltu, true, None)?,
        "bleu" => branch_alias(Op::Bgeu, true, None)?,
        mn => {
            let op = match Op::from_mnemonic(mn).or(if mn == "initBB" { Some(Op::InitBb) } else { None }) {
                Some(op) => op,
                None => return o.ctx.err(o.col, format!("unknown mnemonic `{mn}`")),
            };
            vec![base(op, o)?]
        }
    };
    Ok(out)
}

fn base(op: Op, o: &Operands) -> Result<AsmInstr, ParseError> {
    let z = Reg::ZERO;
    let bad_imm = |i: usize, what: &str| o.ctx.err(o.ops[i].0, format!("`{}` does not accept {what}", o.mn));
    let i = match op.format() {
        Format::R => {
            o.arity(3)?;
            ins(op, o.reg(0)?, o.reg(1)?, o.reg(2)?, Imm::Value(0))
        }
        Format::I if matches!(op, Op::Ecall | Op::Ebreak) => {
            o.arity(0)?;
            ins(op, z, z, z, Imm::Value(0))
        }
        Format::I if op.is_load() => {
            o.arity(2)?;
            let (imm, base) = o.mem(1)?;
            if matches!(imm, Imm::Label(_) | Imm::Hi(_)) {
                return bad_imm(1, "a label offset");
            }
            ins(op, o.reg(0)?, base, z, imm)
        }
        Format::I if op == Op::Jalr => match o.ops.len() {
            1 => ins(op, Reg::RA, o.reg(0)?, z, Imm::Value(0)),
            2 => {
                let (imm, base) = o.mem(1)?;
                ins(op, o.reg(0)?, base, z, imm)
            }
            _ => {
                o.arity(3)?;
                ins(op, o.reg(0)?, o.reg(1)?, z, Imm::Value(o.value(2)?))
            }
        },
        Format::I => {
            o.arity(3)?;
            let imm = o.imm(2)?;
            if matches!(imm, Imm::Label(_) | Imm::Hi(_)) || (op.is_shift_imm() && !matches!(imm, Imm::Value(_))) {
                return bad_imm(2, "a symbolic operand here");
            }
            ins(op, o.reg(0)?, o.reg(1)?, z, imm)
        }
        Format::S => {
            o.arity(2)?;
            let (imm, base) = o.mem(1)?;
            if matches!(imm, Imm::Label(_) | Imm::Hi(_)) {
                return bad_imm(1, "a label offset");
            }
            ins(op, z, base, o.reg(0)?, imm)
        }
        Format::B => {
            o.arity(3)?;
            let imm = o.imm(2)?;
            if matches!(imm, Imm::Hi(_) | Imm::Lo(_)) {
                return bad_imm(2, "%hi/%lo");
            }
            ins(op, z, o.reg(0)?, o.reg(1)?, imm)
        }
        Format::U => {
            o.arity(2)?;
            let imm = o.imm(1)?;
            if matches!(imm, Imm::Label(_) | Imm::Lo(_)) {
                return bad_imm(1, "a label or %lo");
            }
            ins(op, o.reg(0)?, z, z, imm)
        }
        Format::J => {
            let (rd, t) = match o.ops.len() {
                1 => (Reg::RA, o.imm(0)?),
                _ => {
                    o.arity(2)?;
                    (o.reg(0)?, o.imm(1)?)
                }
            };
            if matches!(t, Imm::Hi(_) | Imm::Lo(_)) {
                return bad_imm(o.ops.len() - 1, "%hi/%lo");
            }
            ins(op, rd, z, z, t)
        }
        Format::Ext => {
            if op.has_rd() {
                o.arity(2)?;
                ins(op, o.reg(0)?, o.reg(1)?, z, Imm::Value(0))
            } else {
                o.arity(0)?;
                ins(op, z, z, z, Imm::Value(0))
            }
        }
    };
    if let Imm::Value(v) = i.imm {
        let (lo, hi, align) = op.imm_range();
        if v < lo || v > hi || v % align != 0 {
            let col = o.ops.last().map(|x| x.0).unwrap_or(o.col);
            return o.ctx.err(col, format!("immediate {v} out of range for `{}`", op.mnemonic()));
        }
    }
    Ok(i)
}

enum Open {
    None,
    Func(Function),
    Data(DataObject),
}

fn values(ctx: &Ctx, args: &[(usize, &str)]) -> Result<Vec<Value>, ParseError> {
    args.iter()
        .map(|(c, a)| {
            if let Some(v) = parse_int(a) {
                Ok(Value::Num(v))
            } else if is_ident(a) {
                Ok(Value::Sym(a.to_string()))
            } else {
                ctx.err(*c, format!("bad value `{a}`"))
            }
        })
        .collect()
}

pub fn parse(text: &str) -> Result<AsmProgram, ParseError> {
    let mut prog = AsmProgram::default();
    let mut open = Open::None;
    let mut region_depth = 0usize;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let ctx = Ctx { line: idx + 1 };
        last_line = idx + 1;
        let code = match raw.find(['#', ';']) {
            Some(p) => &raw[..p],
            None => raw,
        };
        let mut rest = code;
        let mut col = 1;
        // leading labels
        loop {
            let trimmed = rest.trim_start();
            col += rest.len() - trimmed.len();
            rest = trimmed;
            let Some(colon) = rest.find(':') else { break };
            let name = &rest[..colon];
            if !is_ident(name) {
                break;
            }
            match &mut open {
                Open::Func(f) => f.body.push(Stmt::Label(name.to_string())),
                Open::Data(d) => d.items.push(DataItem::Label(name.to_string())),
                Open::None => return ctx.err(col, format!("label `{name}` outside of .func/.data")),
            }
            rest = &rest[colon + 1..];
            col += colon + 1;
        }
        let rest = rest.trim_end();
        if rest.is_empty() {
            continue;
        }
        let (word, args_text) = match rest.find(char::is_whitespace) {
            Some(p) => (&rest[..p], &rest[p..]),
            None => (rest, ""),
        };
        let args = split_operands(args_text, col + word.len());
        if word.starts_with('.') {
            directive(&ctx, col, word, &args, &mut prog, &mut open, &mut region_depth)?;
            continue;
        }
        let Open::Func(f) = &mut open else {
            return ctx.err(col, format!("instruction `{word}` outside of .func"));
        };
        let mut ops = Vec::new();
        for (c, a) in &args {
            match parse_operand(a) {
                Some(op) => ops.push((*c, op)),
                None => return ctx.err(*c, format!("bad operand `{a}`")),
            }
        }
        let o = Operands { ctx: &ctx, mn: word, col, ops };
        for i in expand(&o)? {
            f.body.push(Stmt::Instr(i.at(ctx.line)));
        }
    }
    match open {
        Open::None => Ok(prog),
        Open::Func(f) => Err(ParseError { line: last_line, col: 1, msg: format!("missing .endfunc for `{}`", f.name) }),
        Open::Data(d) => Err(ParseError { line: last_line, col: 1, msg: format!("missing .enddata for `{}`", d.name) }),
    }
}

fn directive(
    ctx: &Ctx,
    col: usize,
    word: &str,
    args: &[(usize, &str)],
    prog: &mut AsmProgram,
    open: &mut Open,
    region_depth: &mut usize,
) -> Result<(), ParseError> {
    let words: Vec<&str> = args.iter().flat_map(|(_, a)| a.split_whitespace()).collect();
    match word {
        ".func" | ".data" => {
            if !matches!(open, Open::None) {
                return ctx.err(col, format!("`{word}` inside another block"));
            }
            let Some((name, attrs)) = words.split_first() else {
                return ctx.err(col, format!("`{word}` needs a name"));
            };
            if !is_ident(name) {
                return ctx.err(col, format!("bad name `{name}`"));
            }
            if word == ".func" {
                let mut f = Function::new(name);
                f.line = ctx.line;
                for a in attrs {
                    match *a {
                        "encrypt" => f.encrypt = true,
                        "poly" => f.poly = true,
                        other => return ctx.err(col, format!("unknown function attribute `{other}`")),
                    }
                }
                *open = Open::Func(f);
            } else {
                let mut d = DataObject::new(name);
                d.line = ctx.line;
                for a in attrs {
                    match *a {
                        "scratch" => d.scratch = true,
                        "encrypt" => d.encrypt = true,
                        other => return ctx.err(col, format!("unknown data attribute `{other}`")),
                    }
                }
                *open = Open::Data(d);
            }
        }
        ".endfunc" => match std::mem::replace(open, Open::None) {
            Open::Func(f) => {
                if *region_depth != 0 {
                    return ctx.err(col, "unterminated .region");
                }
                prog.items.push(Item::Func(f));
            }
            _ => return ctx.err(col, "`.endfunc` without `.func`"),
        },
        ".enddata" => match std::mem::replace(open, Open::None) {
            Open::Data(d) => prog.items.push(Item::Data(d)),
            _ => return ctx.err(col, "`.enddata` without `.data`"),
        },
        ".entry" => match words.as_slice() {
            [name] if is_ident(name) => prog.entry = Some(name.to_string()),
            _ => return ctx.err(col, "`.entry` needs one symbol"),
        },
        ".word" => {
            let vals = values(ctx, args)?;
            match open {
                Open::Func(f) => f.body.push(Stmt::Word(vals)),
                Open::Data(d) => d.items.push(DataItem::Words(vals)),
                Open::None => return ctx.err(col, "`.word` outside of a block"),
            }
        }
        ".byte" => {
            let Open::Data(d) = open else { return ctx.err(col, "`.byte` only allowed in .data") };
            let mut bytes = Vec::new();
            for (c, a) in args {
                match parse_int(a) {
                    Some(v) if (-128..256).contains(&v) => bytes.push(v as u8),
                    _ => return ctx.err(*c, format!("bad byte `{a}`")),
                }
            }
            match d.items.last_mut() {
                Some(DataItem::Bytes(prev)) => prev.extend(bytes),
                _ => d.items.push(DataItem::Bytes(bytes)),
            }
        }
        ".space" => {
            let Open::Data(d) = open else { return ctx.err(col, "`.space` only allowed in .data") };
            match words.as_slice() {
                [n] => match parse_int(n) {
                    Some(v) if (0..=1 << 24).contains(&v) => d.items.push(DataItem::Space(v as u32)),
                    _ => return ctx.err(col, format!("bad size `{n}`")),
                },
                _ => return ctx.err(col, "`.space` needs one size"),
            }
        }
        ".ivslot" => {
            let Open::Func(f) = open else { return ctx.err(col, "`.ivslot` only allowed in .func") };
            match words.as_slice() {
                [n] => match parse_int(n) {
                    Some(v) if (0..0xFFFF_FFFF).contains(&v) => f.body.push(Stmt::IvSlot(v as u32)),
                    _ => return ctx.err(col, format!("bad instruction count `{n}`")),
                },
                _ => return ctx.err(col, "`.ivslot` needs one count"),
            }
        }
        ".region" => {
            let Open::Func(f) = open else { return ctx.err(col, "`.region` only allowed in .func") };
            let kind = match words.as_slice() {
                ["plain"] => RegionKind::Plain,
                ["encrypt"] => RegionKind::Encrypted,
                _ => return ctx.err(col, "`.region` expects `plain` or `encrypt`"),
            };
            *region_depth += 1;
            f.body.push(Stmt::Region(kind));
        }
        ".endregion" => {
            let Open::Func(f) = open else { return ctx.err(col, "`.endregion` only allowed in .func") };
            if *region_depth == 0 {
                return ctx.err(col, "`.endregion` without `.region`");
            }
            *region_depth -= 1;
            f.body.push(Stmt::EndRegion);
        }
        other => return ctx.err(col, format!("unknown directive `{other}`")),
    }
    Ok(())
}
