//! Polymorphic fixtures and the guest-versus-host differential check.

use polen::asm::{assemble, parse, Image, DEFAULT_BASE};
use polen::binenc::{encrypt_image, IvSource};
use polen::cfgprep::{prepare_program, PrepOptions};
use polen::cipher::{Backend, Cipher, CipherConfig, Key};
use polen::poly::*;
use polen::sim::{Machine, MachineConfig, RunOutcome};

pub const ADD_XOR: &str = "\
.func main
    call f
    li a7, 93
    ecall
.endfunc
.func f poly
    add a0, a1, a0
    xor a2, a1, a0
    mv a0, a2
    ret
.endfunc
";

/// Loop with a backward jump and two forward branches.
pub const CHECKSUM: &str = "\
.func main
    call f
    li a7, 93
    ecall
.endfunc
.func f poly
    li t0, 0
    andi a1, a1, 15
.Lf.loop:
    beq a1, zero, .Lf.done
    xor t0, t0, a0
    add t0, t0, a1
    slli t1, t0, 3
    sub a0, a0, t1
    and t2, a0, t0
    add a0, a0, t2
    or t3, a0, a1
    xor t0, t0, t3
    addi a1, a1, -1
    j .Lf.loop
.Lf.done:
    bltu a0, t0, .Lf.skip
    xor a0, a0, t0
.Lf.skip:
    add a0, a0, t0
    ret
.endfunc
";

/// Symbol-relative loads and stores, a forward branch and a forward jump.
pub const TABLE: &str = "\
.func main
    addi sp, sp, -16
    sw ra, 12(sp)
    call f
    la t0, tab
    lw t1, 0(t0)
    lw t2, 8(t0)
    add a0, a0, t1
    xor a0, a0, t2
    lw ra, 12(sp)
    addi sp, sp, 16
    li a7, 93
    ecall
.endfunc
.func f poly
    lui t0, %hi(tab)
    addi t0, t0, %lo(tab)
    andi t1, a0, 12
    add t1, t0, t1
    lw t2, 0(t1)
    xor t2, t2, a1
    sw t2, 0(t1)
    lui t3, %hi(tab)
    lw t4, %lo(tab)(t3)
    bge t2, t4, .Lg.big
    sub a0, t2, t4
    j .Lg.out
.Lg.big:
    add a0, t2, t4
.Lg.out:
    sw a0, %lo(tab)(t3)
    ret
.endfunc
.data tab
    .word 0x11111111, 0x22222222, 0x33333333, 0x44444444
.enddata
";

/// An encrypted function calling a plain one.
pub const PLAIN_CALLEE: &str = "
.func main
    li a0, 7
    call f
    li a7, 93
    ecall
.endfunc
.func f encrypt
    addi sp, sp, -16
    sw ra, 12(sp)
    addi a0, a0, 1
    call g
    addi a0, a0, 100
    lw ra, 12(sp)
    addi sp, sp, 16
    ret
.endfunc
.func g
    slli a0, a0, 1
    ret
.endfunc
";

pub const FIXTURES: [(&str, &str); 3] = [("add_xor", ADD_XOR), ("checksum", CHECKSUM), ("table", TABLE)];

#[derive(Debug, Clone)]
pub struct PolyCase {
    pub name: &'static str,
    pub config: PolyConfig,
    pub targets: PolyTargets,
    pub cipher: CipherConfig,
    /// Encrypt the image (wrapper, SGPC and runtime) before running.
    pub encrypt_image: bool,
}

pub fn cases() -> Vec<PolyCase> {
    let none = Transforms { variants: false, shuffle_instr: false, shuffle_regs: false, noise: false };
    vec![
        PolyCase {
            name: "all",
            config: PolyConfig::default(),
            targets: PolyTargets::default(),
            cipher: CipherConfig::null(),
            encrypt_image: false,
        },
        PolyCase {
            name: "dead_noise",
            config: PolyConfig { p: 1, noise_dead: true, transforms: Transforms { noise: true, ..none }, ..PolyConfig::default() },
            targets: PolyTargets::default(),
            cipher: CipherConfig::null(),
            encrypt_image: false,
        },
        PolyCase {
            name: "shuffle_variants",
            config: PolyConfig { transforms: Transforms { noise: false, ..Transforms::ALL }, ..PolyConfig::default() },
            targets: PolyTargets::default(),
            cipher: CipherConfig::null(),
            encrypt_image: false,
        },
        PolyCase {
            name: "polen",
            config: PolyConfig { encrypt_instance: true, noise_dead: true, ..PolyConfig::default() },
            targets: PolyTargets { wrapper: true, sgpc: true },
            cipher: CipherConfig::trivium(32),
            encrypt_image: true,
        },
    ]
}

pub fn key_for(c: &CipherConfig) -> Key {
    match c.backend {
        Backend::Null => Key::from_bytes(&[]),
        _ => super::tri_key(),
    }
}

pub struct PolyBuild {
    pub image: Image,
    pub plans: Vec<Plan>,
    pub cipher: Cipher,
}

pub fn poly_build(src: &str, case: &PolyCase) -> PolyBuild {
    let (p, plans) = polygen(&parse(src).unwrap(), &case.config, case.targets).unwrap();
    let (p, _) = prepare_program(&p, PrepOptions::default()).unwrap();
    let plain = assemble(&p, DEFAULT_BASE).unwrap();
    let cipher = Cipher::new(case.cipher.backend, &key_for(&case.cipher)).unwrap();
    let image = if case.encrypt_image { encrypt_image(&plain, &cipher, IvSource::Seeded(9)).unwrap().0 } else { plain };
    PolyBuild { image, plans, cipher }
}

/// The fixture with the `poly` attribute dropped.
pub fn plain_build(src: &str) -> Image {
    let mut p = parse(src).unwrap();
    for f in p.functions_mut() {
        f.poly = false;
    }
    assemble(&p, DEFAULT_BASE).unwrap()
}

pub fn run_with(img: &Image, cipher: CipherConfig, seed: u64, inputs: &[u32]) -> (RunOutcome, Machine) {
    let cfg = MachineConfig { cipher, rng_seed: seed, ..MachineConfig::default() };
    let mut m = Machine::new(img, &key_for(&cipher), &cfg).unwrap();
    for (k, v) in inputs.iter().enumerate() {
        m.regs[10 + k] = *v;
    }
    (m.run(5_000_000), m)
}

pub fn guest_buffer(b: &PolyBuild, m: &Machine, len: usize) -> Vec<u32> {
    let buf = b.image.addr_of(&buffer_name(&b.plans[0].name)).unwrap();
    (0..len).map(|k| m.read_u32(buf + 4 * k as u32).unwrap()).collect()
}

pub fn host_instance(b: &PolyBuild, seed: u64) -> Result<Instance, GenError> {
    let addr_of = |s: &str| b.image.addr_of(s);
    host_reference_generate(&b.plans[0], &addr_of, seed, &b.cipher)
}

/// Runs the fixture once; the guest buffer must equal the host instance
/// and the result must equal the plain build's.
pub fn differential(src: &str, plain: &Image, b: &PolyBuild, case: &PolyCase, seed: u64, inputs: &[u32]) -> Result<(), String> {
    let (out, m) = run_with(&b.image, case.cipher, seed, inputs);
    let (want, _) = run_with(plain, CipherConfig::null(), 0, inputs);
    if out != want {
        return Err(format!("{src:.20}.. seed {seed} inputs {inputs:x?}: {out:?} vs plain {want:?}"));
    }
    let inst = host_instance(b, seed).map_err(|e| e.to_string())?;
    if guest_buffer(b, &m, inst.words.len()) != inst.words {
        return Err(format!("seed {seed}: guest instance differs from host reference"));
    }
    Ok(())
}
