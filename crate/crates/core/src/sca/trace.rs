//! `PTRC` trace files and their JSON metadata sidecar.
//!
//! Layout, all fields little-endian `u32`:
//!
//! ```text
//! "PTRC"  version  count
//! repeated count times:  nsamples  (pc insn r0 r1 r2) * nsamples
//! ```

use std::io::{self, Read, Write};

use serde::{Deserialize, Serialize};

use super::Sample;

pub const PTRC_MAGIC: [u8; 4] = *b"PTRC";
pub const PTRC_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum TraceError {
    #[error("not a PTRC file")]
    Magic,
    #[error("unsupported PTRC version {0}")]
    Version(u32),
    #[error("trace file truncated")]
    Truncated,
    #[error("{0} bytes after the last trace")]
    Trailing(usize),
    #[error("metadata lists {meta} traces, file holds {traces}")]
    Count { meta: usize, traces: usize },
    #[error("bad metadata: {0}")]
    Meta(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraceFile {
    pub traces: Vec<Vec<Sample>>,
}

impl TraceFile {
    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    pub fn min_len(&self) -> usize {
        self.traces.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let total: usize = self.traces.iter().map(|t| 4 + 20 * t.len()).sum();
        let mut out = Vec::with_capacity(12 + total);
        out.extend_from_slice(&PTRC_MAGIC);
        out.extend_from_slice(&PTRC_VERSION.to_le_bytes());
        out.extend_from_slice(&(self.traces.len() as u32).to_le_bytes());
        for t in &self.traces {
            out.extend_from_slice(&(t.len() as u32).to_le_bytes());
            for s in t {
                for f in s.fields() {
                    out.extend_from_slice(&f.to_le_bytes());
                }
            }
        }
        out
    }

    pub fn from_bytes(data: &[u8]) -> Result<TraceFile, TraceError> {
        let mut pos = 0;
        let mut word = || -> Result<u32, TraceError> {
            let b = data.get(pos..pos + 4).ok_or(TraceError::Truncated)?;
            pos += 4;
            Ok(u32::from_le_bytes(b.try_into().unwrap()))
        };
        if data.get(..4) != Some(&PTRC_MAGIC[..]) {
            return Err(TraceError::Magic);
        }
        word()?;
        let version = word()?;
        if version != PTRC_VERSION {
            return Err(TraceError::Version(version));
        }
        let count = word()? as usize;
        let mut traces = Vec::with_capacity(count.min(1 << 20));
        for _ in 0..count {
            let n = word()? as usize;
            let mut t = Vec::with_capacity(n.min(1 << 20));
            for _ in 0..n {
                t.push(Sample { pc: word()?, insn: word()?, r0: word()?, r1: word()?, r2: word()? });
            }
            traces.push(t);
        }
        if pos != data.len() {
            return Err(TraceError::Trailing(data.len() - pos));
        }
        Ok(TraceFile { traces })
    }

    pub fn write_to(&self, w: &mut impl Write) -> io::Result<()> {
        w.write_all(&self.to_bytes())
    }

    pub fn read_from(r: &mut impl Read) -> Result<TraceFile, TraceError> {
        let mut buf = Vec::new();
        r.read_to_end(&mut buf)?;
        TraceFile::from_bytes(&buf)
    }
}

/// Sidecar describing a campaign: one plaintext per trace and the fixed
/// key, hex encoded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub algorithm: String,
    pub program: String,
    pub config: String,
    pub key: String,
    pub plaintexts: Vec<String>,
    pub campaign_seed: u64,
    pub binenc_seed: u64,
    pub max_samples: usize,
}

impl TraceMeta {
    pub fn key_bytes(&self) -> Result<[u8; 16], TraceError> {
        hex16(&self.key)
    }

    pub fn plaintext_bytes(&self) -> Result<Vec<[u8; 16]>, TraceError> {
        self.plaintexts.iter().map(|p| hex16(p)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("metadata serializes")
    }

    pub fn from_json(s: &str) -> Result<TraceMeta, TraceError> {
        serde_json::from_str(s).map_err(|e| TraceError::Meta(e.to_string()))
    }

    pub fn check(&self, traces: &TraceFile) -> Result<(), TraceError> {
        if self.plaintexts.len() != traces.len() {
            return Err(TraceError::Count { meta: self.plaintexts.len(), traces: traces.len() });
        }
        Ok(())
    }
}

fn hex16(s: &str) -> Result<[u8; 16], TraceError> {
    let v = hex::decode(s).map_err(|e| TraceError::Meta(e.to_string()))?;
    v.try_into().map_err(|_| TraceError::Meta(format!("`{s}` is not 16 bytes")))
}
