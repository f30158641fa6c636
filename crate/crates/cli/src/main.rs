//! Command-line front end: assembler, preparation, polygen, encryptor,
//! simulator runs, trace campaigns and leakage analyses.

use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use polen::asm::{self, assemble, parse_int, Image};
use polen::binenc::{encrypt_image, IvSource};
use polen::cfgprep::{prepare_program, PrepOptions};
use polen::cipher::{Backend, Cipher, CipherConfig, Key};
use polen::pipeline::{self, BuildConfig, CampaignSpec, ConfigName, CORPUS};
use polen::poly::{polygen, PolyConfig, PolyTargets};
use polen::sca::{self, report, ClassSums, TraceFile, TraceMeta};
use polen::sim::{Machine, MachineConfig, RunOutcome, PHASES};

#[derive(Parser)]
#[command(name = "polen", version, about = "Basic-block code encryption and runtime polymorphism on a simulated RV32IM core")]
struct Cli {
    /// Directory that receives every output file.
    #[arg(long, global = true, default_value = "artifacts")]
    dir: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Assemble a source file into a PVO1 image.
    Asm {
        input: PathBuf,
        #[arg(short, default_value = "out.pvo")]
        o: PathBuf,
        #[arg(long, default_value = "0x1000", value_parser = parse_u32)]
        base: u32,
    },
    /// Prepare encrypted functions: merge blocks, fix fallthroughs, add IV slots.
    Prep {
        input: PathBuf,
        #[arg(short, default_value = "prepared.s")]
        o: PathBuf,
        #[arg(long)]
        no_merge: bool,
    },
    /// Replace `poly` functions with a wrapper and their SGPC.
    Polygen {
        input: PathBuf,
        #[arg(short, default_value = "poly.s")]
        o: PathBuf,
        /// Polymorphism config file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Encrypt the generated wrapper, SGPC and runtime.
        #[arg(long)]
        encrypt_generator: bool,
    },
    /// Fill IV slots and encrypt every encrypted region of an image.
    Encrypt {
        input: PathBuf,
        #[arg(short, default_value = "encrypted.pvo")]
        o: PathBuf,
        #[command(flatten)]
        cipher: CipherArgs,
        /// IV generator seed.
        #[arg(long, default_value_t = 1, conflicts_with = "random")]
        seed: u64,
        /// Draw IVs from OS entropy (not reproducible).
        #[arg(long)]
        random: bool,
    },
    /// Run an image on the simulator.
    Run {
        image: PathBuf,
        #[command(flatten)]
        cipher: CipherArgs,
        /// Engage the decryption unit with `--key`.
        #[arg(long)]
        decrypt: bool,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        #[arg(long, default_value_t = pipeline::DEFAULT_MAX_STEPS)]
        max_steps: u64,
        #[arg(long, requires = "meta")]
        trace: Option<PathBuf>,
        #[arg(long, requires = "trace")]
        meta: Option<PathBuf>,
        #[arg(long)]
        counters: Option<PathBuf>,
    },
    /// Build a corpus program under a configuration and record traces.
    Campaign {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value_t = 1000)]
        traces: usize,
        /// 16-byte key of the guest program, hex.
        #[arg(long, default_value = "2b7e151628aed2a6abf7158809cf4f3c")]
        key: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = pipeline::DEFAULT_MAX_SAMPLES)]
        max_samples: usize,
    },
    /// NICV per key byte and trace point.
    Nicv {
        traces: PathBuf,
        meta: PathBuf,
        #[arg(short, default_value = "nicv.csv")]
        o: PathBuf,
        #[arg(long)]
        max_traces: Option<usize>,
    },
    /// CPA on the first-round S-box output.
    Cpa {
        traces: PathBuf,
        meta: PathBuf,
        #[arg(short, default_value = "cpa.csv")]
        o: PathBuf,
        #[arg(long)]
        max_traces: Option<usize>,
        /// Also write ranks after every `--step` traces.
        #[arg(long)]
        convergence: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        step: usize,
    },
    /// Overhead table over the corpus and the six configurations.
    Report {
        #[arg(short, default_value = "overhead.csv")]
        o: PathBuf,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// Comma-separated program names; all by default.
        #[arg(long)]
        programs: Option<String>,
    },
}

#[derive(Args)]
struct CipherArgs {
    /// Cipher key, hex.
    #[arg(long, default_value = polen::pipeline::config::DEFAULT_CIPHER_KEY)]
    key: String,
    #[arg(long, default_value = "trivium")]
    backend: Backend,
    /// Reinitialization cost; the backend's default if absent.
    #[arg(long)]
    k_t: Option<u32>,
    /// Trivium keystream width in bits per cycle.
    #[arg(long, default_value_t = 32)]
    width: u32,
}

impl CipherArgs {
    fn config(&self) -> Result<CipherConfig> {
        let c = match self.backend {
            Backend::Trivium => CipherConfig::trivium(self.width),
            Backend::AesCtr => CipherConfig::aes_ctr(),
            Backend::Null => CipherConfig::null(),
        };
        Ok(match self.k_t {
            Some(k) => c.with_k_t(k)?,
            None => c,
        })
    }

    fn key(&self) -> Result<Key> {
        Ok(Key::from_hex(&self.key)?)
    }
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, default_value = "aes8")]
    program: String,
    /// Build config file; overrides `--preset`.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "unprotected")]
    preset: ConfigName,
}

impl BuildArgs {
    fn resolve(&self) -> Result<(pipeline::GuestProgram, BuildConfig)> {
        let p = pipeline::program(&self.program).with_context(|| format!("unknown program `{}`; known: {}", self.program, names()))?;
        let c = match &self.config {
            Some(path) => BuildConfig::parse(&read(path)?)?,
            None => BuildConfig::preset(self.preset),
        };
        Ok((p, c))
    }
}

fn names() -> String {
    CORPUS.iter().map(|p| p.name).collect::<Vec<_>>().join(", ")
}

fn parse_u32(s: &str) -> Result<u32, String> {
    parse_int(s).and_then(|v| u32::try_from(v).ok()).ok_or_else(|| format!("bad address `{s}`"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_image(path: &Path) -> Result<Image> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Image::from_bytes(&bytes)?)
}

struct Out {
    dir: PathBuf,
}

impl Out {
    fn path(&self, p: &Path) -> Result<PathBuf> {
        let full = if p.is_absolute() { p.to_path_buf() } else { self.dir.join(p) };
        if let Some(parent) = full.parent() {
            fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
        }
        Ok(full)
    }

    fn write(&self, p: &Path, data: impl AsRef<[u8]>) -> Result<PathBuf> {
        let full = self.path(p)?;
        fs::write(&full, data).with_context(|| format!("writing {}", full.display()))?;
        println!("wrote {}", full.display());
        Ok(full)
    }
}

fn load_traces(traces: &Path, meta: &Path, max: Option<usize>) -> Result<(TraceFile, TraceMeta, Vec<[u8; 16]>)> {
    let mut tf = TraceFile::read_from(&mut fs::File::open(traces).with_context(|| format!("opening {}", traces.display()))?)?;
    let mut m = TraceMeta::from_json(&read(meta)?)?;
    m.check(&tf)?;
    if let Some(n) = max {
        tf.traces.truncate(n);
        m.plaintexts.truncate(n);
    }
    if tf.len() < 2 {
        bail!("need at least two traces");
    }
    let pts = m.plaintext_bytes()?;
    Ok((tf, m, pts))
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let out = Out { dir: cli.dir };
    match cli.cmd {
        Cmd::Asm { input, o, base } => {
            let img = assemble(&asm::parse(&read(&input)?)?, base)?;
            out.write(&o, img.to_bytes())?;
            println!("{} words, entry {:#x}", img.words.len(), img.entry);
        }
        Cmd::Prep { input, o, no_merge } => {
            let (p, rep) = prepare_program(&asm::parse(&read(&input)?)?, PrepOptions { merge: !no_merge })?;
            out.write(&o, p.to_string())?;
            for (f, s) in &rep.functions {
                println!("{f}: {} -> {} blocks, {} islands", s.blocks_before, s.blocks, s.islands);
            }
        }
        Cmd::Polygen { input, o, config, encrypt_generator } => {
            let c = match config {
                Some(p) => PolyConfig::parse(&read(&p)?)?,
                None => PolyConfig::default(),
            };
            let targets = PolyTargets { wrapper: encrypt_generator, sgpc: encrypt_generator };
            let (p, plans) = polygen(&asm::parse(&read(&input)?)?, &c, targets)?;
            out.write(&o, p.to_string())?;
            for plan in &plans {
                println!("{}: {} entries, buffer {} words", plan.name, plan.entries(), plan.buffer_words);
            }
        }
        Cmd::Encrypt { input, o, cipher, seed, random } => {
            let img = read_image(&input)?;
            let c = Cipher::new(cipher.config()?.backend, &cipher.key()?)?;
            let ivs = if random {
                println!("IVs from OS entropy; the output is not reproducible");
                IvSource::Os
            } else {
                println!("iv seed {seed}");
                IvSource::Seeded(seed)
            };
            let (enc, blocks) = encrypt_image(&img, &c, ivs)?;
            out.write(&o, enc.to_bytes())?;
            println!("{} blocks encrypted", blocks.len());
        }
        Cmd::Run { image, cipher, decrypt, rng_seed, max_steps, trace, meta, counters } => {
            let img = read_image(&image)?;
            let (cc, key) = if decrypt { (cipher.config()?, cipher.key()?) } else { (CipherConfig::null(), Key::from_bytes(&[])) };
            println!("rng seed {rng_seed}");
            let mc = MachineConfig { cipher: cc, rng_seed, ..MachineConfig::default() };
            let mut m = Machine::new(&img, &key, &mc)?;
            let outcome = m.run(max_steps);
            if !m.output.is_empty() {
                println!("output: {}", String::from_utf8_lossy(&m.output));
            }
            let t = m.total();
            println!("{outcome:?}: n={} b={} inits={} cycles={}", t.n, t.b, t.inits(), t.cycles);
            if let (Some(tp), Some(mp)) = (trace, meta) {
                let pt = img.symbol("pt").filter(|s| s.size >= 16).map(|s| hex::encode(m.read_bytes(s.addr, 16).unwrap()));
                let tm = TraceMeta {
                    algorithm: "unknown".into(),
                    program: image.display().to_string(),
                    config: if decrypt { cc.backend.to_string() } else { "plain".into() },
                    key: img
                        .symbol("key")
                        .filter(|s| s.size >= 16)
                        .map(|s| hex::encode(m.read_bytes(s.addr, 16).unwrap()))
                        .unwrap_or_default(),
                    plaintexts: vec![pt.unwrap_or_default()],
                    campaign_seed: rng_seed,
                    binenc_seed: 0,
                    max_samples: usize::MAX,
                };
                let tf = TraceFile { traces: vec![std::mem::take(&mut m.trace)] };
                out.write(&tp, tf.to_bytes())?;
                out.write(&mp, tm.to_json())?;
            }
            if let Some(cp) = counters {
                let mut s = String::from("phase,n,b,fetch_inits,exec_inits,cycles\n");
                let names = ["other", "generation", "instance", "secured"];
                for (k, c) in m.counters.iter().enumerate().take(PHASES) {
                    s += &format!("{},{},{},{},{},{}\n", names[k], c.n, c.b, c.fetch_inits, c.exec_inits, c.cycles);
                }
                s += &format!("total,{},{},{},{},{}\n", t.n, t.b, t.fetch_inits, t.exec_inits, t.cycles);
                out.write(&cp, s)?;
            }
            if !matches!(outcome, RunOutcome::Exit(_)) {
                bail!("run did not exit cleanly");
            }
        }
        Cmd::Campaign { build, traces, key, seed, max_samples } => {
            let (p, c) = build.resolve()?;
            let key: [u8; 16] = hex::decode(key.trim())?.try_into().map_err(|_| anyhow::anyhow!("the key must be 16 bytes"))?;
            println!("program {} config {} campaign seed {seed} binenc seed {}", p.name, c.name, c.binenc_seed);
            let b = pipeline::build(&p, &c)?;
            let spec = CampaignSpec { traces, key, seed, max_samples };
            let (tf, meta) = pipeline::campaign(&b, &p, &spec)?;
            out.write(Path::new("build.cfg"), c.to_text())?;
            out.write(Path::new("image.pvo"), b.image.to_bytes())?;
            let tp = out.path(Path::new("traces.trc"))?;
            tf.write_to(&mut BufWriter::new(fs::File::create(&tp)?))?;
            println!("wrote {}", tp.display());
            out.write(Path::new("meta.json"), meta.to_json())?;
            println!("{} traces, {} to {} samples", tf.len(), tf.min_len(), tf.traces.iter().map(|t| t.len()).max().unwrap_or(0));
        }
        Cmd::Nicv { traces, meta, o, max_traces } => {
            let (tf, _, pts) = load_traces(&traces, &meta, max_traces)?;
            let v = sca::nicv(&ClassSums::from_traces(&tf, &pts));
            let mut buf = Vec::new();
            report::write_nicv(&mut buf, &v)?;
            out.write(&o, buf)?;
            for (b, row) in v.iter().enumerate() {
                println!("byte {b:2}: max NICV {:.4}", row.iter().cloned().fold(0.0, f64::max));
            }
        }
        Cmd::Cpa { traces, meta, o, max_traces, convergence, step } => {
            let (tf, m, pts) = load_traces(&traces, &meta, max_traces)?;
            let key = m.key_bytes()?;
            let r = sca::cpa(&ClassSums::from_traces(&tf, &pts));
            let mut buf = Vec::new();
            report::write_cpa(&mut buf, &r)?;
            out.write(&o, buf)?;
            for (b, x) in r.iter().enumerate() {
                println!("byte {b:2}: key rank {:3}, best guess {:02x}", x.rank_of(key[b]), x.ranking()[0]);
            }
            if let Some(cp) = convergence {
                let checkpoints: Vec<usize> = (1..).map(|k| k * step.max(2)).take_while(|&n| n <= tf.len()).collect();
                let conv = sca::convergence(&tf, &pts, &key, &checkpoints);
                let mut buf = Vec::new();
                report::write_convergence(&mut buf, &conv)?;
                out.write(&cp, buf)?;
            }
        }
        Cmd::Report { o, rng_seed, programs } => {
            let progs: Vec<_> = match programs {
                Some(list) => list
                    .split(',')
                    .map(|n| pipeline::program(n.trim()).with_context(|| format!("unknown program `{n}`; known: {}", names())))
                    .collect::<Result<_>>()?,
                None => CORPUS.to_vec(),
            };
            println!("rng seed {rng_seed}");
            let rows = pipeline::overhead_report(&progs, &ConfigName::ALL, rng_seed)?;
            out.write(&o, pipeline::overhead_csv(&rows))?;
            for r in &rows {
                println!(
                    "{:9} {:13} O measured {:.4} model {:.4} vs unprotected {:.2}x, static {:.2}x",
                    r.program, r.config, r.o_measured, r.o_model, r.o_vs_unprotected, r.static_vs_unprotected
                );
            }
        }
    }
    Ok(())
}
