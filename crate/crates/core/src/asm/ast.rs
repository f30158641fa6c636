//! Syntax tree of the assembly dialect.

use super::isa::{EncodeError, Instr, Op, Reg};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Imm {
    Value(i64),
    /// PC-relative target of a branch or `jal`.
    Label(String),
    /// `%hi(sym)`: upper 20 bits, rounded so that `%lo` can be added.
    Hi(String),
    /// `%lo(sym)`: sign-extended low 12 bits.
    Lo(String),
}

impl Imm {
    pub fn symbol(&self) -> Option<&str> {
        match self {
            Imm::Value(_) => None,
            Imm::Label(s) | Imm::Hi(s) | Imm::Lo(s) => Some(s),
        }
    }
}

/// An instruction whose immediate may still be symbolic.
#[derive(Debug, Clone, Eq)]
pub struct AsmInstr {
    pub op: Op,
    pub rd: Reg,
    pub rs1: Reg,
    pub rs2: Reg,
    pub imm: Imm,
    pub line: usize,
}

impl PartialEq for AsmInstr {
    fn eq(&self, o: &Self) -> bool {
        (self.op, self.rd, self.rs1, self.rs2) == (o.op, o.rd, o.rs1, o.rs2) && self.imm == o.imm
    }
}

impl AsmInstr {
    pub fn new(op: Op, rd: Reg, rs1: Reg, rs2: Reg, imm: Imm) -> Self {
        AsmInstr { op, rd, rs1, rs2, imm, line: 0 }
    }

    pub fn from_instr(i: Instr) -> Self {
        AsmInstr::new(i.op, i.rd, i.rs1, i.rs2, Imm::Value(i.imm as i64))
    }

    pub fn jump(target: &str) -> Self {
        AsmInstr::new(Op::Jal, Reg::ZERO, Reg::ZERO, Reg::ZERO, Imm::Label(target.to_string()))
    }

    pub fn call(target: &str) -> Self {
        AsmInstr::new(Op::Jal, Reg::RA, Reg::ZERO, Reg::ZERO, Imm::Label(target.to_string()))
    }

    pub fn bare(op: Op) -> Self {
        AsmInstr::new(op, Reg::ZERO, Reg::ZERO, Reg::ZERO, Imm::Value(0))
    }

    pub fn at(mut self, line: usize) -> Self {
        self.line = line;
        self
    }

    pub fn is_call(&self) -> bool {
        self.op == Op::Jal && self.rd != Reg::ZERO
    }

    pub fn is_jump(&self) -> bool {
        self.op == Op::Jal && self.rd == Reg::ZERO
    }

    pub fn is_ret(&self) -> bool {
        self.op == Op::Jalr && self.rd == Reg::ZERO && self.rs1 == Reg::RA && self.imm == Imm::Value(0)
    }

    /// Label operand of a branch or jal, if symbolic.
    pub fn target(&self) -> Option<&str> {
        match (&self.imm, self.op.is_branch() || self.op == Op::Jal) {
            (Imm::Label(l), true) => Some(l),
            _ => None,
        }
    }

    /// The concrete instruction, for immediates that are already numeric.
    pub fn to_instr(&self) -> Option<Instr> {
        match self.imm {
            Imm::Value(v) => Some(Instr::new(self.op, self.rd, self.rs1, self.rs2, v as i32)),
            _ => None,
        }
    }

    /// Resolves the immediate with `resolve(sym)` and encodes.
    pub fn resolve(&self, pc: u32, addr_of: impl Fn(&str) -> Option<u32>) -> Result<Instr, ResolveError> {
        let lookup = |s: &str| addr_of(s).ok_or_else(|| ResolveError::Undefined(s.to_string()));
        let imm: i64 = match &self.imm {
            Imm::Value(v) => *v,
            Imm::Label(s) => lookup(s)?.wrapping_sub(pc) as i32 as i64,
            Imm::Hi(s) => (lookup(s)?.wrapping_add(0x800) >> 12) as i64,
            Imm::Lo(s) => ((lookup(s)? << 20) as i32 >> 20) as i64,
        };
        if imm < i32::MIN as i64 || imm > u32::MAX as i64 {
            return Err(ResolveError::Encode(EncodeError::ImmRange {
                op: self.op.mnemonic(),
                imm,
                lo: i32::MIN as i64,
                hi: u32::MAX as i64,
            }));
        }
        let i = Instr::new(self.op, self.rd, self.rs1, self.rs2, imm as i32);
        i.check().map_err(ResolveError::Encode)?;
        Ok(i)
    }

    pub fn reads(&self) -> impl Iterator<Item = Reg> {
        let a = self.op.has_rs1().then_some(self.rs1);
        let b = self.op.has_rs2().then_some(self.rs2);
        a.into_iter().chain(b).filter(|r| *r != Reg::ZERO)
    }

    pub fn writes(&self) -> Option<Reg> {
        (self.op.has_rd() && self.rd != Reg::ZERO).then_some(self.rd)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("undefined symbol `{0}`")]
    Undefined(String),
    #[error(transparent)]
    Encode(EncodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    Plain,
    Encrypted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Num(i64),
    Sym(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Label(String),
    Instr(AsmInstr),
    /// Three-word IV slot preceding a block of `n` instructions.
    IvSlot(u32),
    Word(Vec<Value>),
    /// Switches the encryption kind until the matching `EndRegion`.
    Region(RegionKind),
    EndRegion,
}

#[derive(Debug, Clone, Eq)]
pub struct Function {
    pub name: String,
    pub encrypt: bool,
    pub poly: bool,
    pub body: Vec<Stmt>,
    pub line: usize,
}

impl PartialEq for Function {
    fn eq(&self, o: &Self) -> bool {
        (&self.name, self.encrypt, self.poly, &self.body) == (&o.name, o.encrypt, o.poly, &o.body)
    }
}

impl Function {
    pub fn new(name: &str) -> Self {
        Function { name: name.to_string(), encrypt: false, poly: false, body: Vec::new(), line: 0 }
    }

    pub fn instrs(&self) -> impl Iterator<Item = &AsmInstr> {
        self.body.iter().filter_map(|s| match s {
            Stmt::Instr(i) => Some(i),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataItem {
    Label(String),
    Words(Vec<Value>),
    Bytes(Vec<u8>),
    Space(u32),
}

#[derive(Debug, Clone, Eq)]
pub struct DataObject {
    pub name: String,
    /// Excluded from the architectural memory digest.
    pub scratch: bool,
    /// Holds code that is generated and encrypted at run time.
    pub encrypt: bool,
    pub items: Vec<DataItem>,
    pub line: usize,
}

impl PartialEq for DataObject {
    fn eq(&self, o: &Self) -> bool {
        (&self.name, self.scratch, self.encrypt, &self.items) == (&o.name, o.scratch, o.encrypt, &o.items)
    }
}

impl DataObject {
    pub fn new(name: &str) -> Self {
        DataObject { name: name.to_string(), scratch: false, encrypt: false, items: Vec::new(), line: 0 }
    }

    /// Size in bytes, rounded up to a whole word.
    pub fn size(&self) -> u32 {
        let mut n = 0u32;
        for it in &self.items {
            match it {
                DataItem::Label(_) => {}
                DataItem::Words(w) => n = align4(n) + 4 * w.len() as u32,
                DataItem::Bytes(b) => n += b.len() as u32,
                DataItem::Space(s) => n += s,
            }
        }
        align4(n)
    }
}

pub(crate) fn align4(n: u32) -> u32 {
    (n + 3) & !3
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Func(Function),
    Data(DataObject),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Func(f) => &f.name,
            Item::Data(d) => &d.name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AsmProgram {
    pub entry: Option<String>,
    pub items: Vec<Item>,
}

impl AsmProgram {
    pub fn functions(&self) -> impl Iterator<Item = &Function> {
        self.items.iter().filter_map(|i| match i {
            Item::Func(f) => Some(f),
            _ => None,
        })
    }

    pub fn functions_mut(&mut self) -> impl Iterator<Item = &mut Function> {
        self.items.iter_mut().filter_map(|i| match i {
            Item::Func(f) => Some(f),
            _ => None,
        })
    }

    pub fn data(&self) -> impl Iterator<Item = &DataObject> {
        self.items.iter().filter_map(|i| match i {
            Item::Data(d) => Some(d),
            _ => None,
        })
    }

    pub fn function(&self, name: &str) -> Option<&Function> {
        self.functions().find(|f| f.name == name)
    }

    pub fn function_mut(&mut self, name: &str) -> Option<&mut Function> {
        self.functions_mut().find(|f| f.name == name)
    }

    pub fn data_object(&self, name: &str) -> Option<&DataObject> {
        self.data().find(|d| d.name == name)
    }

    pub fn entry_name(&self) -> &str {
        self.entry.as_deref().unwrap_or("main")
    }

    /// Whether calling `sym` lands in encrypted code.
    pub fn is_encrypted_target(&self, sym: &str) -> Option<bool> {
        self.items.iter().find(|i| i.name() == sym).map(|i| match i {
            Item::Func(f) => f.encrypt,
            Item::Data(d) => d.encrypt,
        })
    }

    /// Appends the items of `other`, keeping this program's entry.
    pub fn extend(&mut self, other: AsmProgram) {
        self.items.extend(other.items);
    }
}
