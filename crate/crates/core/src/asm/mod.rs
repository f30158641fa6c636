//! Assembly dialect, instruction encoding and the flat image format.

mod assemble;
mod ast;
mod image;
pub mod isa;
mod parse;
mod print;

pub use assemble::{assemble, stmt_size, AsmError};
pub use ast::*;
pub use image::{Image, ImageError, Region, SymKind, Symbol, PVO1_MAGIC};
pub use isa::{decode, Format, Illegal, Instr, Op, Reg};
pub use parse::{parse, parse_int, ParseError};

/// Filler for IV slot words before encryption. All-ones is not a valid
/// RV32IM encoding, so fetching it as an instruction faults.
pub const IV_MAGIC: u32 = 0xFFFF_FFFF;

/// Default load address of images.
pub const DEFAULT_BASE: u32 = 0x0000_1000;
