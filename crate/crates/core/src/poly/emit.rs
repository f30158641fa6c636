//! Polygen: replaces each `poly` function with a wrapper, its SGPC and the
//! data the SGPC works on.

use std::fmt::Write;

use crate::asm::{self, AsmProgram, Item};
use crate::cfgprep::PrepError;

use super::config::PolyConfig;
use super::plan::{build_plan, Action, Entry, Plan, Template};
use super::windows::MAX_WINDOW;

pub const RUNTIME_SRC: &str = include_str!("../../guest/runtime.s");

/// Symbol that marks the runtime as already present.
pub const RUNTIME_MARK: &str = "__poly_window";

/// Which generated parts carry the `encrypt` attribute. The instance
/// itself follows `PolyConfig::encrypt_instance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PolyTargets {
    pub wrapper: bool,
    /// The SGPC and the shared runtime.
    pub sgpc: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error("invalid polymorphism config: {0}")]
    Config(String),
    #[error("generated code does not parse: {0}")]
    Internal(#[from] asm::ParseError),
}

pub fn sgpc_name(f: &str) -> String {
    format!("__sgpc_{f}")
}

pub fn buffer_name(f: &str) -> String {
    format!("__poly_buf_{f}")
}

pub fn ctx_name(f: &str) -> String {
    format!("__poly_ctx_{f}")
}

fn attrs(encrypt: bool) -> &'static str {
    if encrypt {
        " encrypt"
    } else {
        ""
    }
}

fn load_template(s: &mut String, t: &Template) {
    match t {
        Template::Word(w) => writeln!(s, "        li t0, {w:#x}").unwrap(),
        Template::Hi(sym) => {
            writeln!(s, "        lui t0, %hi({sym})\n        ori t0, t0, 0x37").unwrap();
        }
        Template::LoI(sym, base) => {
            writeln!(s, "        addi t0, zero, %lo({sym})\n        slli t0, t0, 20").unwrap();
            writeln!(s, "        li t1, {base:#x}\n        or t0, t0, t1").unwrap();
        }
        Template::LoS(sym, base) => {
            writeln!(s, "        addi t0, zero, %lo({sym})\n        slli t1, t0, 20").unwrap();
            writeln!(s, "        srli t1, t1, 25\n        slli t1, t1, 25").unwrap();
            writeln!(s, "        andi t0, t0, 31\n        slli t0, t0, 7\n        or t0, t0, t1").unwrap();
            writeln!(s, "        li t1, {base:#x}\n        or t0, t0, t1").unwrap();
        }
    }
}

fn descriptor(s: &mut String, k: usize, e: &Entry) {
    load_template(s, &e.template);
    writeln!(s, "        sw t0, {}(s1)", 8 * k).unwrap();
    writeln!(s, "        li t0, {:#x}\n        sw t0, {}(s1)", e.info, 8 * k + 4).unwrap();
}

/// Assembly of the wrapper, SGPC and data objects for one plan.
pub fn emit_sgpc(plan: &Plan, targets: PolyTargets) -> String {
    let f = &plan.name;
    let ctx = ctx_name(f);
    let buf = buffer_name(f);
    let mut s = String::new();

    writeln!(s, "# wrapper: regenerates every {} call(s), then runs the instance", plan.regen_period).unwrap();
    writeln!(s, ".func {f}{}", attrs(targets.wrapper)).unwrap();
    s += "        addi sp, sp, -48\n        sw ra, 44(sp)\n";
    for k in 0..8 {
        writeln!(s, "        sw a{k}, {}(sp)", 4 * k).unwrap();
    }
    writeln!(s, "        la t0, __poly_cnt_{f}\n        lw t1, 0(t0)\n        bnez t1, .L{f}.run").unwrap();
    s += "        li t2, 0xF0000000\n        lw t3, 4(t2)\n        lw t4, 16(t2)\n";
    s += "        sw t3, 32(sp)\n        sw t4, 36(sp)\n        sw zero, 4(t2)\n        li t3, 1\n        sw t3, 16(t2)\n";
    writeln!(s, "        call {}", sgpc_name(f)).unwrap();
    s += "        li t2, 0xF0000000\n        lw t3, 32(sp)\n        sw t3, 4(t2)\n        lw t4, 36(sp)\n        sw t4, 16(t2)\n";
    writeln!(s, "        la t0, __poly_cnt_{f}\n        li t1, {}", plan.regen_period).unwrap();
    writeln!(s, ".L{f}.run:").unwrap();
    s += "        addi t1, t1, -1\n        sw t1, 0(t0)\n";
    s += "        li t2, 0xF0000000\n        lw t4, 16(t2)\n        sw t4, 36(sp)\n        li t3, 2\n        sw t3, 16(t2)\n";
    for k in 0..8 {
        writeln!(s, "        lw a{k}, {}(sp)", 4 * k).unwrap();
    }
    writeln!(s, "        call {buf}").unwrap();
    s += "        li t2, 0xF0000000\n        lw t4, 36(sp)\n        sw t4, 16(t2)\n";
    s += "        lw ra, 44(sp)\n        addi sp, sp, 48\n        ret\n.endfunc\n\n";

    writeln!(s, ".func {}{}", sgpc_name(f), attrs(targets.sgpc)).unwrap();
    s += "        addi sp, sp, -16\n        sw ra, 12(sp)\n        sw s0, 8(sp)\n        sw s1, 4(sp)\n";
    writeln!(s, "        la s0, {ctx}\n        la s1, __poly_win_{f}").unwrap();
    s += "        mv a0, s0\n        call __poly_begin\n";
    for (k, b) in plan.blocks.iter().enumerate() {
        writeln!(s, "        # block {k}: {}", b.label).unwrap();
        writeln!(s, "        mv a0, s0\n        li a1, {k}\n        call __poly_block").unwrap();
        for a in &b.actions {
            match a {
                Action::Window(entries) => {
                    for (i, e) in entries.iter().enumerate() {
                        descriptor(&mut s, i, e);
                    }
                    writeln!(s, "        mv a0, s0\n        mv a1, s1\n        li a2, {}", entries.len()).unwrap();
                    s += "        call __poly_window\n";
                }
                Action::Jump { entry, target } => {
                    load_template(&mut s, &entry.template);
                    writeln!(s, "        mv a1, t0\n        li a2, {:#x}\n        li a3, {target}", entry.info).unwrap();
                    s += "        mv a0, s0\n        call __poly_jump\n";
                }
            }
        }
    }
    s += "        mv a0, s0\n        call __poly_end\n";
    s += "        lw s1, 4(sp)\n        lw s0, 8(sp)\n        lw ra, 12(sp)\n        addi sp, sp, 16\n        ret\n.endfunc\n\n";

    let nblk = plan.blocks.len();
    let fixcap = plan.fixcap.max(1);
    writeln!(s, ".data {ctx} scratch").unwrap();
    writeln!(s, "        .word {buf}, __poly_bufend_{f}, 0, {:#x}, {:#x}, {}", plan.flags, plan.pmask, plan.nmax).unwrap();
    writeln!(s, "        .word 0, {nblk}, __poly_blk_{f}, __poly_fix_{f}, 0").unwrap();
    writeln!(s, "        .word __poly_perm_{f}, __poly_alloc_{f}, {}, __poly_idx_{f}, {}, 0", plan.alloc.len(), plan.fixcap).unwrap();
    s += ".enddata\n";
    writeln!(s, ".data {buf} scratch{}", attrs(plan.flags & super::plan::flags::ENC != 0)).unwrap();
    writeln!(s, "        .space {}\n__poly_bufend_{f}:", 4 * plan.buffer_words).unwrap();
    s += ".enddata\n";
    let space = |s: &mut String, name: &str, n: usize| {
        writeln!(s, ".data {name} scratch\n        .space {n}\n.enddata").unwrap();
    };
    space(&mut s, &format!("__poly_blk_{f}"), 4 * nblk);
    space(&mut s, &format!("__poly_fix_{f}"), 12 * fixcap as usize);
    space(&mut s, &format!("__poly_perm_{f}"), 32);
    space(&mut s, &format!("__poly_idx_{f}"), 8 * MAX_WINDOW);
    space(&mut s, &format!("__poly_win_{f}"), 8 * MAX_WINDOW);
    writeln!(s, ".data __poly_alloc_{f} scratch").unwrap();
    if !plan.alloc.is_empty() {
        let regs: Vec<String> = plan.alloc.iter().map(|r| r.0.to_string()).collect();
        writeln!(s, "        .byte {}", regs.join(", ")).unwrap();
    }
    s += ".enddata\n";
    writeln!(s, ".data __poly_cnt_{f} scratch\n        .word 0\n.enddata").unwrap();
    s
}

fn runtime(encrypt: bool) -> Result<AsmProgram, PolyError> {
    let mut rt = asm::parse(RUNTIME_SRC)?;
    for f in rt.functions_mut() {
        f.encrypt = encrypt;
    }
    Ok(rt)
}

/// Rewrites every `poly` function of `prog`. Returns the new program and
/// the plan of each rewritten function.
pub fn polygen(prog: &AsmProgram, config: &PolyConfig, targets: PolyTargets) -> Result<(AsmProgram, Vec<Plan>), PolyError> {
    config.validate().map_err(PolyError::Config)?;
    let mut out = AsmProgram { entry: prog.entry.clone(), items: Vec::new() };
    let mut plans = Vec::new();
    for item in &prog.items {
        match item {
            Item::Func(f) if f.poly => {
                let plan = build_plan(f, config)?;
                let src = emit_sgpc(&plan, PolyTargets { wrapper: targets.wrapper || f.encrypt, ..targets });
                let mut gen = asm::parse(&src)?;
                for it in &mut gen.items {
                    if let Item::Func(g) = it {
                        g.line = f.line;
                    }
                }
                out.items.extend(gen.items);
                plans.push(plan);
            }
            _ => out.items.push(item.clone()),
        }
    }
    if !plans.is_empty() && prog.function(RUNTIME_MARK).is_none() {
        out.extend(runtime(targets.sgpc)?);
    }
    Ok((out, plans))
}

/// Size in bytes of the generated data that is not instance buffer.
pub fn data_bytes(prog: &AsmProgram, f: &str) -> u32 {
    prog.data()
        .filter(|d| d.name.starts_with("__poly_") && d.name.ends_with(&format!("_{f}")) && d.name != buffer_name(f))
        .map(|d| d.size())
        .sum()
}
