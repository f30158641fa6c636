//! Flat guest images and the `PVO1` container.
//!
//! All integers are little-endian.
//!
//! ```text
//! magic      "PVO1"
//! u32        version (1)
//! u32        base address
//! u32        entry address
//! u32        word count W
//! u32        symbol count S
//! u32        region count R
//! u32 × W    payload, word i at address base + 4·i
//! S × symbol { u32 addr, u32 size, u8 kind, u16 name_len, name bytes (UTF-8) }
//! R × region { u32 start, u32 end, u8 kind }        kind: 0 plain, 1 encrypted
//! ```
//!
//! Symbol kinds: 0 label, 1 function, 2 data, 3 scratch data, 4 runtime code
//! buffer.

use std::collections::BTreeMap;

use super::ast::RegionKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymKind {
    Label,
    Function,
    Data,
    Scratch,
    /// Scratch object that receives code generated at run time.
    CodeBuffer,
}

impl SymKind {
    fn to_u8(self) -> u8 {
        match self {
            SymKind::Label => 0,
            SymKind::Function => 1,
            SymKind::Data => 2,
            SymKind::Scratch => 3,
            SymKind::CodeBuffer => 4,
        }
    }

    fn from_u8(v: u8) -> Option<Self> {
        Some(match v {
            0 => SymKind::Label,
            1 => SymKind::Function,
            2 => SymKind::Data,
            3 => SymKind::Scratch,
            4 => SymKind::CodeBuffer,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub addr: u32,
    pub size: u32,
    pub kind: SymKind,
}

/// Half-open byte range `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub start: u32,
    pub end: u32,
    pub kind: RegionKind,
}

impl Region {
    pub fn contains(&self, addr: u32) -> bool {
        (self.start..self.end).contains(&addr)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Image {
    pub base: u32,
    pub entry: u32,
    pub words: Vec<u32>,
    pub symbols: BTreeMap<String, Symbol>,
    pub regions: Vec<Region>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImageError {
    #[error("not a PVO1 image")]
    BadMagic,
    #[error("unsupported PVO1 version {0}")]
    Version(u32),
    #[error("truncated image")]
    Truncated,
    #[error("corrupt image: {0}")]
    Corrupt(String),
}

pub const PVO1_MAGIC: &[u8; 4] = b"PVO1";

impl Image {
    pub fn end(&self) -> u32 {
        self.base + 4 * self.words.len() as u32
    }

    pub fn symbol(&self, name: &str) -> Option<&Symbol> {
        self.symbols.get(name)
    }

    pub fn addr_of(&self, name: &str) -> Option<u32> {
        self.symbols.get(name).map(|s| s.addr)
    }

    pub fn index_of(&self, addr: u32) -> Option<usize> {
        if !addr.is_multiple_of(4) || addr < self.base || addr >= self.end() {
            return None;
        }
        Some(((addr - self.base) / 4) as usize)
    }

    pub fn word_at(&self, addr: u32) -> Option<u32> {
        self.index_of(addr).map(|i| self.words[i])
    }

    pub fn encrypted_regions(&self) -> impl Iterator<Item = &Region> {
        self.regions.iter().filter(|r| r.kind == RegionKind::Encrypted)
    }

    /// Total bytes covered by code regions.
    pub fn code_bytes(&self) -> u32 {
        self.regions.iter().map(|r| r.end - r.start).sum()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(28 + 4 * self.words.len());
        out.extend_from_slice(PVO1_MAGIC);
        for v in [1, self.base, self.entry, self.words.len() as u32, self.symbols.len() as u32, self.regions.len() as u32] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for w in &self.words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        for s in self.symbols.values() {
            out.extend_from_slice(&s.addr.to_le_bytes());
            out.extend_from_slice(&s.size.to_le_bytes());
            out.push(s.kind.to_u8());
            out.extend_from_slice(&(s.name.len() as u16).to_le_bytes());
            out.extend_from_slice(s.name.as_bytes());
        }
        for r in &self.regions {
            out.extend_from_slice(&r.start.to_le_bytes());
            out.extend_from_slice(&r.end.to_le_bytes());
            out.push(match r.kind {
                RegionKind::Plain => 0,
                RegionKind::Encrypted => 1,
            });
        }
        out
    }

    pub fn from_bytes(data: &[u8]) -> Result<Image, ImageError> {
        let mut r = Reader { data, pos: 0 };
        if r.take(4)? != PVO1_MAGIC {
            return Err(ImageError::BadMagic);
        }
        let version = r.u32()?;
        if version != 1 {
            return Err(ImageError::Version(version));
        }
        let (base, entry, nw, ns, nr) = (r.u32()?, r.u32()?, r.u32()?, r.u32()?, r.u32()?);
        if (nw as usize).saturating_mul(4) > data.len() {
            return Err(ImageError::Truncated);
        }
        let words = (0..nw).map(|_| r.u32()).collect::<Result<Vec<_>, _>>()?;
        let mut symbols = BTreeMap::new();
        for _ in 0..ns {
            let (addr, size) = (r.u32()?, r.u32()?);
            let kind = SymKind::from_u8(r.u8()?).ok_or_else(|| ImageError::Corrupt("symbol kind".into()))?;
            let len = u16::from_le_bytes(r.take(2)?.try_into().unwrap()) as usize;
            let name = std::str::from_utf8(r.take(len)?).map_err(|_| ImageError::Corrupt("symbol name".into()))?.to_string();
            symbols.insert(name.clone(), Symbol { name, addr, size, kind });
        }
        let mut regions = Vec::new();
        for _ in 0..nr {
            let (start, end) = (r.u32()?, r.u32()?);
            let kind = match r.u8()? {
                0 => RegionKind::Plain,
                1 => RegionKind::Encrypted,
                k => return Err(ImageError::Corrupt(format!("region kind {k}"))),
            };
            regions.push(Region { start, end, kind });
        }
        if r.pos != data.len() {
            return Err(ImageError::Corrupt("trailing bytes".into()));
        }
        let img = Image { base, entry, words, symbols, regions };
        img.validate()?;
        Ok(img)
    }

    pub fn validate(&self) -> Result<(), ImageError> {
        let bad = |m: String| Err(ImageError::Corrupt(m));
        if !self.base.is_multiple_of(4) {
            return bad("unaligned base".into());
        }
        if self.index_of(self.entry).is_none() {
            return bad(format!("entry {:#x} outside image", self.entry));
        }
        let mut sorted = self.regions.clone();
        sorted.sort_by_key(|r| r.start);
        for (i, r) in sorted.iter().enumerate() {
            if r.start % 4 != 0 || r.end % 4 != 0 || r.start > r.end || r.start < self.base || r.end > self.end() {
                return bad(format!("bad region {:#x}..{:#x}", r.start, r.end));
            }
            if i > 0 && sorted[i - 1].end > r.start {
                return bad(format!("overlapping regions at {:#x}", r.start));
            }
        }
        Ok(())
    }
}

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], ImageError> {
        let s = self.data.get(self.pos..self.pos + n).ok_or(ImageError::Truncated)?;
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, ImageError> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, ImageError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
}
