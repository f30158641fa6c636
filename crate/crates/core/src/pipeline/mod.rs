//! End-to-end flow: parse a corpus program, apply a configuration, prepare,
//! assemble and encrypt it, then run it once or as a trace campaign.

pub mod config;
pub mod corpus;

use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::asm::{self, assemble, AsmProgram, Image, Item, Reg, SymKind, DEFAULT_BASE};
use crate::binenc::{encrypt_image, EncryptError, EncryptedBlock, IvSource};
use crate::cfgprep::{prepare_program, PrepError, PrepOptions, PrepReport};
use crate::cipher::{Cipher, CipherConfig, CipherError};
use crate::poly::{host_reference_generate, polygen, Plan, PolyError};
use crate::sca::{Sample, TraceFile, TraceMeta};
use crate::sim::{phase, Machine, MachineConfig, PerfCounters, RunOutcome, PHASES};

pub use config::{BuildConfig, ConfigFileError, ConfigName};
pub use corpus::{program, GuestProgram, CORPUS};

pub const DEFAULT_MAX_STEPS: u64 = 50_000_000;
/// Samples kept per campaign trace.
pub const DEFAULT_MAX_SAMPLES: usize = 512;

/// Registers compared across configurations: the callee-saved and global
/// ones plus the two return registers.
pub const OBSERVED_REGS: [Reg; 17] = [
    Reg::A0,
    Reg::A1,
    Reg::SP,
    Reg::GP,
    Reg::TP,
    Reg(8),
    Reg(9),
    Reg(18),
    Reg(19),
    Reg(20),
    Reg(21),
    Reg(22),
    Reg(23),
    Reg(24),
    Reg(25),
    Reg(26),
    Reg(27),
];

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Parse(#[from] asm::ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error(transparent)]
    Asm(#[from] asm::AsmError),
    #[error(transparent)]
    Encrypt(#[from] EncryptError),
    #[error(transparent)]
    Cipher(#[from] CipherError),
    #[error("no function `{0}` to secure")]
    NoSecured(String),
    #[error("data object `{0}` is missing or too small")]
    Data(String),
    #[error("run did not exit: {0:?}")]
    Run(RunOutcome),
    #[error("trace {index}: ciphertext {got} differs from the oracle's {want}")]
    Mismatch { index: usize, got: String, want: String },
}

/// A built program: the prepared, assembled image before and after
/// encryption.
#[derive(Debug, Clone)]
pub struct Build {
    pub program: String,
    pub config: BuildConfig,
    pub asm: AsmProgram,
    pub plans: Vec<Plan>,
    pub prep: PrepReport,
    /// Prepared image, IV slots still holding magic words.
    pub plain: Image,
    pub image: Image,
    pub blocks: Vec<EncryptedBlock>,
}

impl Build {
    pub fn cipher(&self) -> Result<Cipher, CipherError> {
        Cipher::new(self.config.cipher.backend, &self.config.machine_key())
    }
}

/// Marks `secured` according to the configuration.
pub fn apply_config(prog: &mut AsmProgram, secured: &str, cfg: &BuildConfig) -> Result<(), PipelineError> {
    let f = prog.function_mut(secured).ok_or_else(|| PipelineError::NoSecured(secured.to_string()))?;
    f.encrypt = cfg.encrypt_secured();
    f.poly = cfg.name.polymorphic();
    Ok(())
}

pub fn build_source(name: &str, src: &str, secured: &str, cfg: &BuildConfig) -> Result<Build, PipelineError> {
    let mut prog = asm::parse(src)?;
    apply_config(&mut prog, secured, cfg)?;
    let (prog, plans) = if cfg.name.polymorphic() { polygen(&prog, &cfg.poly, cfg.poly_targets())? } else { (prog, Vec::new()) };
    let (mut prog, prep) = prepare_program(&prog, PrepOptions::default())?;
    data_first(&mut prog);
    let plain = assemble(&prog, DEFAULT_BASE)?;
    let (image, blocks) = if plain.encrypted_regions().next().is_some() {
        let cipher = Cipher::new(cfg.cipher.backend, &cfg.machine_key())?;
        encrypt_image(&plain, &cipher, IvSource::Seeded(cfg.binenc_seed))?
    } else {
        (plain.clone(), Vec::new())
    };
    Ok(Build { program: name.to_string(), config: cfg.clone(), asm: prog, plans, prep, plain, image, blocks })
}

/// Moves the program's own data objects to the front so that they sit at
/// the same addresses whatever code the configuration adds, and pointers
/// left in registers compare equal across configurations.
pub fn data_first(prog: &mut AsmProgram) {
    let is_data = |i: &Item| matches!(i, Item::Data(d) if !d.scratch && !d.encrypt);
    let (mut front, back): (Vec<Item>, Vec<Item>) = std::mem::take(&mut prog.items).into_iter().partition(is_data);
    front.extend(back);
    prog.items = front;
}

pub fn build(p: &GuestProgram, cfg: &BuildConfig) -> Result<Build, PipelineError> {
    build_source(p.name, p.source, p.secured, cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunInput {
    /// Overrides for the `key` and `pt` data objects.
    pub key: Option<[u8; 16]>,
    pub pt: Option<[u8; 16]>,
    pub rng_seed: u64,
    pub max_samples: Option<usize>,
    pub max_steps: u64,
}

impl Default for RunInput {
    fn default() -> Self {
        RunInput { key: None, pt: None, rng_seed: 1, max_samples: None, max_steps: DEFAULT_MAX_STEPS }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub outcome: RunOutcome,
    pub ct: [u8; 16],
    pub regs: [u32; 17],
    pub digest: [u8; 32],
    pub output: Vec<u8>,
    pub counters: [PerfCounters; PHASES],
    pub trace: Vec<Sample>,
    /// Words at the start of each poly function's instance buffer.
    pub instances: Vec<Vec<u32>>,
}

impl RunResult {
    pub fn total(&self) -> PerfCounters {
        let mut t = PerfCounters::default();
        for c in &self.counters {
            t.add(c);
        }
        t
    }

    /// What must not change under any configuration.
    pub fn observable(&self) -> (RunOutcome, [u32; 17], [u8; 32], &[u8]) {
        (self.outcome, self.regs, self.digest, &self.output)
    }
}

/// SHA-256 over the name and final contents of every non-scratch data
/// object, in name order.
pub fn memory_digest(image: &Image, m: &Machine) -> [u8; 32] {
    let mut h = Sha256::new();
    for s in image.symbols.values().filter(|s| s.kind == SymKind::Data) {
        h.update(s.name.as_bytes());
        h.update([0]);
        h.update(m.read_bytes(s.addr, s.size).unwrap_or(&[]));
    }
    h.finalize().into()
}

fn poke(m: &mut Machine, image: &Image, name: &str, data: &[u8]) -> Result<(), PipelineError> {
    let s = image.symbol(name).filter(|s| s.size as usize >= data.len()).ok_or_else(|| PipelineError::Data(name.into()))?;
    if !m.write_bytes(s.addr, data) {
        return Err(PipelineError::Data(name.into()));
    }
    Ok(())
}

/// Runs `image` with the build's cipher unless `cipher` overrides it.
pub fn run_image(b: &Build, image: &Image, cipher: CipherConfig, input: &RunInput) -> Result<RunResult, PipelineError> {
    let key = if cipher.backend == crate::cipher::Backend::Null { crate::cipher::Key::from_bytes(&[]) } else { b.config.machine_key() };
    let mc = MachineConfig { cipher, rng_seed: input.rng_seed, max_samples: input.max_samples, ..MachineConfig::default() };
    let mut m = Machine::new(image, &key, &mc)?;
    if let Some(k) = &input.key {
        poke(&mut m, image, "key", k)?;
    }
    if let Some(p) = &input.pt {
        poke(&mut m, image, "pt", p)?;
    }
    let outcome = m.run(input.max_steps);
    let ct_sym = image.symbol("ct").filter(|s| s.size >= 16).ok_or_else(|| PipelineError::Data("ct".into()))?;
    let ct = m.read_bytes(ct_sym.addr, 16).unwrap().try_into().unwrap();
    let instances = b
        .plans
        .iter()
        .map(|p| {
            let s = &image.symbols[&crate::poly::buffer_name(&p.name)];
            (0..s.size / 4).map(|k| m.read_u32(s.addr + 4 * k).unwrap()).collect()
        })
        .collect();
    Ok(RunResult {
        outcome,
        ct,
        regs: OBSERVED_REGS.map(|r| m.reg(r)),
        digest: memory_digest(image, &m),
        output: m.output.clone(),
        counters: m.counters,
        trace: std::mem::take(&mut m.trace),
        instances,
    })
}

pub fn run(b: &Build, input: &RunInput) -> Result<RunResult, PipelineError> {
    run_image(b, &b.image, b.config.cipher, input)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignSpec {
    pub traces: usize,
    pub key: [u8; 16],
    pub seed: u64,
    pub max_samples: usize,
}

/// Plaintext and guest RNG seed of every trace, drawn sequentially from a
/// ChaCha20 stream so that the parallel runs stay reproducible.
pub fn campaign_inputs(seed: u64, n: usize) -> Vec<([u8; 16], u64)> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut pt = [0u8; 16];
            rng.fill_bytes(&mut pt);
            (pt, rng.next_u64())
        })
        .collect()
}

pub fn campaign(b: &Build, p: &GuestProgram, spec: &CampaignSpec) -> Result<(TraceFile, TraceMeta), PipelineError> {
    let inputs = campaign_inputs(spec.seed, spec.traces);
    let traces = inputs
        .par_iter()
        .enumerate()
        .map(|(index, (pt, rng_seed))| {
            let input = RunInput {
                key: Some(spec.key),
                pt: Some(*pt),
                rng_seed: *rng_seed,
                max_samples: Some(spec.max_samples),
                max_steps: DEFAULT_MAX_STEPS,
            };
            let r = run(b, &input)?;
            if !matches!(r.outcome, RunOutcome::Exit(_)) {
                return Err(PipelineError::Run(r.outcome));
            }
            let want = (p.oracle)(&spec.key, pt);
            if r.ct != want {
                return Err(PipelineError::Mismatch { index, got: hex::encode(r.ct), want: hex::encode(want) });
            }
            Ok(r.trace)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let meta = TraceMeta {
        algorithm: p.name.to_string(),
        program: p.name.to_string(),
        config: b.config.name.to_string(),
        key: hex::encode(spec.key),
        plaintexts: inputs.iter().map(|(pt, _)| hex::encode(pt)).collect(),
        campaign_seed: spec.seed,
        binenc_seed: b.config.binenc_seed,
        max_samples: spec.max_samples,
    };
    Ok((TraceFile { traces }, meta))
}

/// Differences between a configuration's run and the unprotected one.
pub fn transparency(p: &GuestProgram, cfg: &BuildConfig, input: &RunInput) -> Result<Vec<String>, PipelineError> {
    let base = run(&build(p, &BuildConfig::preset(ConfigName::Unprotected))?, input)?;
    let r = run(&build(p, cfg)?, input)?;
    let mut diffs = Vec::new();
    if r.outcome != base.outcome {
        diffs.push(format!("outcome {:?} vs {:?}", r.outcome, base.outcome));
    }
    for (k, reg) in OBSERVED_REGS.iter().enumerate() {
        if r.regs[k] != base.regs[k] {
            diffs.push(format!("{reg:?} {:#x} vs {:#x}", r.regs[k], base.regs[k]));
        }
    }
    if r.digest != base.digest {
        diffs.push("memory digest".into());
    }
    if r.output != base.output {
        diffs.push("output".into());
    }
    Ok(diffs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverheadRow {
    pub program: String,
    pub config: ConfigName,
    pub k_t: u32,
    pub cycles: u64,
    pub n: u64,
    pub b: u64,
    pub inits: u64,
    /// Cycles of the same image with the decryption unit disengaged.
    pub cycles_plain: u64,
    pub o_measured: f64,
    pub o_model: f64,
    /// Against the unprotected build; for inspection only.
    pub o_vs_unprotected: f64,
    pub code_bytes: u32,
    pub static_vs_unprotected: f64,
    pub instance_words: usize,
    pub generation_cycles: u64,
}

impl OverheadRow {
    pub fn rb(&self) -> f64 {
        self.b as f64 / self.n as f64
    }

    pub fn rb_init(&self) -> f64 {
        self.inits as f64 / self.n as f64
    }
}

pub const OVERHEAD_HEADER: &str = "program,config,k_t,cycles,n,b,inits,rb,rb_init,cycles_plain,o_measured,o_model,o_vs_unprotected,code_bytes,static_vs_unprotected,instance_words,generation_cycles";

pub fn overhead_row(p: &GuestProgram, cfg: &BuildConfig, base: (u64, u32), rng_seed: u64) -> Result<OverheadRow, PipelineError> {
    let b = build(p, cfg)?;
    let input = RunInput { rng_seed, ..RunInput::default() };
    let r = run(&b, &input)?;
    let plain = run_image(&b, &b.plain, CipherConfig::null(), &input)?;
    for x in [&r, &plain] {
        if !matches!(x.outcome, RunOutcome::Exit(_)) {
            return Err(PipelineError::Run(x.outcome));
        }
    }
    let t = r.total();
    let k_t = cfg.cipher.k_t;
    let cycles_plain = plain.total().cycles;
    let instance_words = match b.plans.first() {
        Some(plan) => {
            let addr_of = |s: &str| b.image.addr_of(s);
            host_reference_generate(plan, &addr_of, rng_seed, &b.cipher()?).map(|i| i.words.len()).unwrap_or(0)
        }
        None => 0,
    };
    Ok(OverheadRow {
        program: p.name.to_string(),
        config: cfg.name,
        k_t,
        cycles: t.cycles,
        n: t.n,
        b: t.b,
        inits: t.inits(),
        cycles_plain,
        o_measured: t.cycles as f64 / cycles_plain as f64,
        o_model: 1.0 + (k_t as f64 - 1.0) * t.rb_init(),
        o_vs_unprotected: t.cycles as f64 / base.0 as f64,
        code_bytes: b.image.code_bytes(),
        static_vs_unprotected: b.image.code_bytes() as f64 / base.1 as f64,
        instance_words,
        generation_cycles: r.counters[phase::GENERATION as usize].cycles,
    })
}

pub fn overhead_report(programs: &[GuestProgram], configs: &[ConfigName], rng_seed: u64) -> Result<Vec<OverheadRow>, PipelineError> {
    let mut rows = Vec::new();
    for p in programs {
        let ub = build(p, &BuildConfig::preset(ConfigName::Unprotected))?;
        let ur = run(&ub, &RunInput { rng_seed, ..RunInput::default() })?;
        let base = (ur.total().cycles, ub.image.code_bytes());
        for c in configs {
            rows.push(overhead_row(p, &BuildConfig::preset(*c), base, rng_seed)?);
        }
    }
    Ok(rows)
}

pub fn overhead_csv(rows: &[OverheadRow]) -> String {
    let mut s = format!("{OVERHEAD_HEADER}\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{:.6},{:.6},{},{:.6},{:.6},{:.4},{},{:.4},{},{}",
            r.program,
            r.config,
            r.k_t,
            r.cycles,
            r.n,
            r.b,
            r.inits,
            r.rb(),
            r.rb_init(),
            r.cycles_plain,
            r.o_measured,
            r.o_model,
            r.o_vs_unprotected,
            r.code_bytes,
            r.static_vs_unprotected,
            r.instance_words,
            r.generation_cycles
        )
        .unwrap();
    }
    s
}
