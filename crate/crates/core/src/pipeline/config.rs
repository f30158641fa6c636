//! The six evaluated configurations and the build configuration file.
//!
//! The file is flat `key = value` text with `#` comments. Pipeline keys:
//!
//! ```text
//! config      = unprotected | encrypted_9 | encrypted_35 | polymorphic | polen_9 | polen_35
//! cipher_key  = <hex>        # 80-bit Trivium key
//! binenc_seed = <u64>        # IV generator seed
//! backend     = trivium | aes-ctr | null
//! k_t         = <u32>        # overrides the preset's reinitialization cost
//! ```
//!
//! Every other key is a polymorphism key (`p`, `nmax`, `transforms`, ...)
//! applied on top of the preset.

use std::fmt;
use std::str::FromStr;

use crate::cipher::{Backend, CipherConfig, Key};
use crate::poly::{PolyConfig, PolyTargets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigName {
    Unprotected,
    Encrypted9,
    Encrypted35,
    Polymorphic,
    Polen9,
    Polen35,
}

impl ConfigName {
    pub const ALL: [ConfigName; 6] = [
        ConfigName::Unprotected,
        ConfigName::Encrypted9,
        ConfigName::Encrypted35,
        ConfigName::Polymorphic,
        ConfigName::Polen9,
        ConfigName::Polen35,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConfigName::Unprotected => "unprotected",
            ConfigName::Encrypted9 => "encrypted_9",
            ConfigName::Encrypted35 => "encrypted_35",
            ConfigName::Polymorphic => "polymorphic",
            ConfigName::Polen9 => "polen_9",
            ConfigName::Polen35 => "polen_35",
        }
    }

    pub fn encrypted(self) -> bool {
        !matches!(self, ConfigName::Unprotected | ConfigName::Polymorphic)
    }

    pub fn polymorphic(self) -> bool {
        matches!(self, ConfigName::Polymorphic | ConfigName::Polen9 | ConfigName::Polen35)
    }

    pub fn k_t(self) -> Option<u32> {
        match self {
            ConfigName::Encrypted9 | ConfigName::Polen9 => Some(9),
            ConfigName::Encrypted35 | ConfigName::Polen35 => Some(35),
            _ => None,
        }
    }
}

impl fmt::Display for ConfigName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConfigName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ConfigName::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown configuration `{s}`"))
    }
}

pub const DEFAULT_CIPHER_KEY: &str = "0f62b5085bae0154a7fa";
pub const DEFAULT_BINENC_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct BuildConfig {
    pub name: ConfigName,
    pub cipher: CipherConfig,
    pub cipher_key: Key,
    pub binenc_seed: u64,
    pub poly: PolyConfig,
}

impl BuildConfig {
    pub fn preset(name: ConfigName) -> Self {
        let cipher = match name.k_t() {
            Some(9) => CipherConfig::trivium(128),
            Some(_) => CipherConfig::trivium(32),
            None => CipherConfig::null(),
        };
        let poly = PolyConfig { encrypt_instance: name.encrypted() && name.polymorphic(), ..PolyConfig::default() };
        BuildConfig {
            name,
            cipher,
            cipher_key: Key::from_hex(DEFAULT_CIPHER_KEY).expect("valid default key"),
            binenc_seed: DEFAULT_BINENC_SEED,
            poly,
        }
    }

    /// Whether the secured function itself carries `encrypt`.
    pub fn encrypt_secured(&self) -> bool {
        self.name.encrypted()
    }

    pub fn poly_targets(&self) -> PolyTargets {
        let e = self.name.encrypted();
        PolyTargets { wrapper: e, sgpc: e }
    }

    /// The key the machine is loaded with. Plain configurations still get
    /// one so that every run uses the same constructor.
    pub fn machine_key(&self) -> Key {
        match self.cipher.backend {
            Backend::Null => Key::from_bytes(&[]),
            _ => self.cipher_key.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ConfigFileError> {
        let mut name = None;
        let mut rest = Vec::new();
        let mut settings = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(ConfigFileError { line: n + 1, msg: format!("expected `key = value`, found `{line}`") });
            };
            let (k, v) = (k.trim(), v.trim());
            match k {
                "config" => name = Some(v.parse::<ConfigName>().map_err(|msg| ConfigFileError { line: n + 1, msg })?),
                "cipher_key" | "binenc_seed" | "backend" | "k_t" => settings.push((n + 1, k, v)),
                _ => rest.push((n + 1, line)),
            }
        }
        let name = name.ok_or(ConfigFileError { line: 0, msg: "missing `config`".into() })?;
        let mut c = BuildConfig::preset(name);
        for (line, k, v) in settings {
            let err = |msg: String| ConfigFileError { line, msg };
            match k {
                "cipher_key" => c.cipher_key = Key::from_hex(v).map_err(|e| err(e.to_string()))?,
                "binenc_seed" => c.binenc_seed = v.parse().map_err(|_| err(format!("bad seed `{v}`")))?,
                "backend" => {
                    let b: Backend = v.parse().map_err(|e: crate::cipher::CipherError| err(e.to_string()))?;
                    c.cipher = match b {
                        Backend::Trivium => CipherConfig::trivium_k(c.cipher.k_t.max(9)),
                        Backend::AesCtr => CipherConfig::aes_ctr(),
                        Backend::Null => CipherConfig::null(),
                    };
                }
                _ => {
                    let k_t = v.parse().map_err(|_| err(format!("bad k_t `{v}`")))?;
                    c.cipher = c.cipher.with_k_t(k_t).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        // the preset's poly settings come first so the file can override them
        let lines = rest.len();
        let mut poly_text = c.poly.to_text();
        let offset = poly_text.lines().count();
        for (_, l) in &rest {
            poly_text.push_str(l);
            poly_text.push('\n');
        }
        c.poly = PolyConfig::parse(&poly_text).map_err(|e| {
            let line = if e.line > offset && e.line - offset <= lines { rest[e.line - offset - 1].0 } else { e.line };
            ConfigFileError { line, msg: e.msg }
        })?;
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        format!(
            "config = {}\nbackend = {}\nk_t = {}\ncipher_key = {}\nbinenc_seed = {}\n{}",
            self.name,
            self.cipher.backend,
            self.cipher.k_t,
            hex::encode(self.cipher_key.as_bytes()),
            self.binenc_seed,
            self.poly.to_text()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("config line {line}: {msg}")]
pub struct ConfigFileError {
    pub line: usize,
    pub msg: String,
}
