//! Polymorphism parameters and their flat `key = value` file format.
//!
//! ```text
//! # defaults shown
//! p = 3
//! nmax = 5
//! regen_period = 1
//! transforms = variants, shuffle_instr, shuffle_regs, noise
//! noise = nop                # or `dead`
//! encrypt_instance = false
//! buffer_words = auto        # or a word count
//! alloc = auto               # or a register list
//! ```

use crate::asm::Reg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Transforms {
    pub variants: bool,
    pub shuffle_instr: bool,
    pub shuffle_regs: bool,
    pub noise: bool,
}

impl Transforms {
    pub const NONE: Transforms = Transforms { variants: false, shuffle_instr: false, shuffle_regs: false, noise: false };
    pub const ALL: Transforms = Transforms { variants: true, shuffle_instr: true, shuffle_regs: true, noise: true };
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyConfig {
    /// Noise is inserted at a site with probability 2^-p.
    pub p: u32,
    /// Burst length is 2^N with N uniform in [1, nmax].
    pub nmax: u32,
    pub transforms: Transforms,
    /// Noise writes a dead register instead of being a `nop`.
    pub noise_dead: bool,
    /// Calls served by one instance before the next regeneration.
    pub regen_period: u32,
    /// Candidate registers for renaming and scratch use; `None` uses
    /// t0-t6 and a2-a7.
    pub alloc: Option<Vec<Reg>>,
    pub encrypt_instance: bool,
    /// Instance buffer size; `None` uses the worst-case bound.
    pub buffer_words: Option<u32>,
}

impl Default for PolyConfig {
    fn default() -> Self {
        PolyConfig {
            p: 3,
            nmax: 5,
            transforms: Transforms::ALL,
            noise_dead: false,
            regen_period: 1,
            alloc: None,
            encrypt_instance: false,
            buffer_words: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("config line {line}: {msg}")]
pub struct ConfigError {
    pub line: usize,
    pub msg: String,
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "on" | "1" => Some(true),
        "false" | "no" | "off" | "0" => Some(false),
        _ => None,
    }
}

impl PolyConfig {
    pub fn identity() -> Self {
        PolyConfig { transforms: Transforms::NONE, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.nmax == 0 || self.nmax > 16 {
            return Err("nmax must be in 1..=16".into());
        }
        if self.p > 31 {
            return Err("p must be in 0..=31".into());
        }
        if self.regen_period == 0 {
            return Err("regen_period must be at least 1".into());
        }
        Ok(())
    }

    /// `2^p - 1`: a site gets noise when `rng & mask == 0`.
    pub fn pmask(&self) -> u32 {
        (1u32 << self.p) - 1
    }

    pub fn parse(text: &str) -> Result<PolyConfig, ConfigError> {
        let mut c = PolyConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| ConfigError { line, msg };
            let s = raw.split('#').next().unwrap().trim();
            if s.is_empty() {
                continue;
            }
            let (k, v) = s.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
            let (k, v) = (k.trim(), v.trim());
            let num = |v: &str| v.parse::<u32>().map_err(|_| err(format!("`{k}` expects a number")));
            let flag = |v: &str| parse_bool(v).ok_or_else(|| err(format!("`{k}` expects true/false")));
            match k {
                "p" => c.p = num(v)?,
                "nmax" => c.nmax = num(v)?,
                "regen_period" => c.regen_period = num(v)?,
                "encrypt_instance" => c.encrypt_instance = flag(v)?,
                "buffer_words" => c.buffer_words = if v == "auto" { None } else { Some(num(v)?) },
                "noise" => {
                    c.noise_dead = match v {
                        "nop" => false,
                        "dead" => true,
                        _ => return Err(err("`noise` is `nop` or `dead`".into())),
                    }
                }
                "transforms" => {
                    let mut t = Transforms::NONE;
                    for name in v.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                        match name {
                            "none" => {}
                            "all" => t = Transforms::ALL,
                            "variants" => t.variants = true,
                            "shuffle_instr" => t.shuffle_instr = true,
                            "shuffle_regs" => t.shuffle_regs = true,
                            "noise" => t.noise = true,
                            _ => return Err(err(format!("unknown transform `{name}`"))),
                        }
                    }
                    c.transforms = t;
                }
                "alloc" => {
                    c.alloc = if v == "auto" {
                        None
                    } else {
                        let regs: Option<Vec<Reg>> = v.split(',').map(|r| Reg::parse(r.trim())).collect();
                        Some(regs.ok_or_else(|| err("bad register in `alloc`".into()))?)
                    }
                }
                _ => return Err(err(format!("unknown key `{k}`"))),
            }
        }
        c.validate().map_err(|msg| ConfigError { line: 0, msg })?;
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        let t = self.transforms;
        let names: Vec<&str> =
            [(t.variants, "variants"), (t.shuffle_instr, "shuffle_instr"), (t.shuffle_regs, "shuffle_regs"), (t.noise, "noise")]
                .iter()
                .filter(|x| x.0)
                .map(|x| x.1)
                .collect();
        let mut s = format!(
            "p = {}\nnmax = {}\nregen_period = {}\ntransforms = {}\nnoise = {}\nencrypt_instance = {}\n",
            self.p,
            self.nmax,
            self.regen_period,
            if names.is_empty() { "none".to_string() } else { names.join(", ") },
            if self.noise_dead { "dead" } else { "nop" },
            self.encrypt_instance
        );
        s += &match self.buffer_words {
            Some(n) => format!("buffer_words = {n}\n"),
            None => "buffer_words = auto\n".into(),
        };
        s += &match &self.alloc {
            Some(r) => format!("alloc = {}\n", r.iter().map(|r| r.name()).collect::<Vec<_>>().join(", ")),
            None => "alloc = auto\n".into(),
        };
        s
    }
}
