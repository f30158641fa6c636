//! Shuffle windows: runs of mutually independent instructions.

use std::ops::Range;

use crate::asm::{AsmInstr, Format, Op};

use super::liveness::{defs, uses};

/// Longest window the generator shuffles.
pub const MAX_WINDOW: usize = 32;

/// Instructions that are never reordered: memory accesses, control flow,
/// system and extension instructions.
pub fn is_barrier(i: &AsmInstr) -> bool {
    i.op.is_load()
        || i.op.is_store()
        || i.op.is_control_flow()
        || matches!(i.op, Op::Ecall | Op::Ebreak | Op::Auipc)
        || i.op.format() == Format::Ext
}

/// Splits `instrs` into maximal windows, in order. Barriers get windows of
/// their own; any register dependence (RAW, WAR, WAW) closes a window.
pub fn find_windows(instrs: &[&AsmInstr]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    let (mut r, mut w) = (0u32, 0u32);
    for (k, i) in instrs.iter().enumerate() {
        let (u, d) = (uses(i), defs(i));
        let dependent = u & w != 0 || d & (r | w) != 0;
        if k > start && (is_barrier(i) || dependent || k - start == MAX_WINDOW || is_barrier(instrs[start])) {
            out.push(start..k);
            start = k;
            r = 0;
            w = 0;
        }
        r |= u;
        w |= d;
    }
    if start < instrs.len() {
        out.push(start..instrs.len());
    }
    out
}
