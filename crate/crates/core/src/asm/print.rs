//! Renders a syntax tree back into the dialect accepted by [`super::parse`].

use std::fmt::{self, Display, Formatter, Write};

use super::ast::*;
use super::isa::{Format, Op};

impl Display for Imm {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Imm::Value(v) => write!(f, "{v}"),
            Imm::Label(s) => f.write_str(s),
            Imm::Hi(s) => write!(f, "%hi({s})"),
            Imm::Lo(s) => write!(f, "%lo({s})"),
        }
    }
}

impl Display for Value {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(v) => write!(f, "{v}"),
            Value::Sym(s) => f.write_str(s),
        }
    }
}

impl Display for AsmInstr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let m = self.op.mnemonic();
        let (rd, rs1, rs2, imm) = (self.rd, self.rs1, self.rs2, &self.imm);
        match self.op.format() {
            Format::R => write!(f, "{m} {rd}, {rs1}, {rs2}"),
            Format::I if matches!(self.op, Op::Ecall | Op::Ebreak) => f.write_str(m),
            Format::I if self.op.is_load() || self.op == Op::Jalr => write!(f, "{m} {rd}, {imm}({rs1})"),
            Format::I => write!(f, "{m} {rd}, {rs1}, {imm}"),
            Format::S => write!(f, "{m} {rs2}, {imm}({rs1})"),
            Format::B => write!(f, "{m} {rs1}, {rs2}, {imm}"),
            Format::U => match imm {
                Imm::Value(v) => write!(f, "{m} {rd}, {v:#x}"),
                _ => write!(f, "{m} {rd}, {imm}"),
            },
            Format::J => write!(f, "{m} {rd}, {imm}"),
            Format::Ext if self.op.has_rd() => write!(f, "{m} {rd}, {rs1}"),
            Format::Ext => f.write_str(m),
        }
    }
}

fn list<T: Display>(items: &[T]) -> String {
    let mut s = String::new();
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        write!(s, "{it}").unwrap();
    }
    s
}

impl Display for Function {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, ".func {}", self.name)?;
        if self.encrypt {
            f.write_str(" encrypt")?;
        }
        if self.poly {
            f.write_str(" poly")?;
        }
        writeln!(f)?;
        for s in &self.body {
            match s {
                Stmt::Label(l) => writeln!(f, "{l}:")?,
                Stmt::Instr(i) => writeln!(f, "    {i}")?,
                Stmt::IvSlot(n) => writeln!(f, "    .ivslot {n}")?,
                Stmt::Word(v) => writeln!(f, "    .word {}", list(v))?,
                Stmt::Region(RegionKind::Plain) => writeln!(f, "    .region plain")?,
                Stmt::Region(RegionKind::Encrypted) => writeln!(f, "    .region encrypt")?,
                Stmt::EndRegion => writeln!(f, "    .endregion")?,
            }
        }
        writeln!(f, ".endfunc")
    }
}

impl Display for DataObject {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, ".data {}", self.name)?;
        if self.scratch {
            f.write_str(" scratch")?;
        }
        if self.encrypt {
            f.write_str(" encrypt")?;
        }
        writeln!(f)?;
        for it in &self.items {
            match it {
                DataItem::Label(l) => writeln!(f, "{l}:")?,
                DataItem::Words(v) => writeln!(f, "    .word {}", list(v))?,
                DataItem::Bytes(b) => {
                    for chunk in b.chunks(16) {
                        let hex: Vec<String> = chunk.iter().map(|x| format!("{x:#04x}")).collect();
                        writeln!(f, "    .byte {}", hex.join(", "))?;
                    }
                }
                DataItem::Space(n) => writeln!(f, "    .space {n}")?,
            }
        }
        writeln!(f, ".enddata")
    }
}

impl Display for AsmProgram {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if let Some(e) = &self.entry {
            writeln!(f, ".entry {e}")?;
        }
        for (i, it) in self.items.iter().enumerate() {
            if i > 0 || self.entry.is_some() {
                writeln!(f)?;
            }
            match it {
                Item::Func(func) => write!(f, "{func}")?,
                Item::Data(d) => write!(f, "{d}")?,
            }
        }
        Ok(())
    }
}
