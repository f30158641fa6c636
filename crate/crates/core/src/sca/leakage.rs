//! Hamming-weight leakage, NICV and first-order CPA on the first S-box
//! output.
//!
//! Both analyses run on per-class sums: for every key byte position `b`,
//! plaintext value `z` and point `t`, the sum of `HW(X[t])` over traces
//! whose plaintext byte `b` equals `z`. CPA hypotheses only depend on `z`,
//! so the correlation numerator for all 256 key guesses is an XOR
//! convolution of those sums, computed with a Walsh-Hadamard transform.

use rayon::prelude::*;

use super::trace::TraceFile;

pub fn hw(x: u32) -> u32 {
    x.count_ones()
}

fn gmul(mut a: u8, mut b: u8) -> u8 {
    let mut p = 0;
    while b != 0 {
        if b & 1 != 0 {
            p ^= a;
        }
        a = (a << 1) ^ if a & 0x80 != 0 { 0x1B } else { 0 };
        b >>= 1;
    }
    p
}

/// The AES S-box, computed from the field inverse and the affine map.
pub fn aes_sbox() -> [u8; 256] {
    let mut s = [0u8; 256];
    for (x, out) in s.iter_mut().enumerate() {
        let inv = if x == 0 { 0 } else { (1..=255u8).find(|&y| gmul(x as u8, y) == 1).unwrap() };
        let mut v = inv;
        for k in 1..5 {
            v ^= inv.rotate_left(k);
        }
        *out = v ^ 0x63;
    }
    s
}

/// Leakage points of one trace: `HW` of each sample field, 5 per sample,
/// truncated to `len` samples.
pub fn leakage_points(trace: &[super::Sample], len: usize) -> Vec<u8> {
    trace[..len].iter().flat_map(|s| s.fields()).map(|f| hw(f) as u8).collect()
}

/// Running per-class statistics for the 16 plaintext byte positions.
#[derive(Debug, Clone)]
pub struct ClassSums {
    pub points: usize,
    pub n: u64,
    /// `[byte][class]` trace counts.
    pub counts: Vec<[u64; 256]>,
    /// `[byte][class * points + t]` sums of leakage.
    pub sums: Vec<Vec<u32>>,
    pub total: Vec<u64>,
    pub total_sq: Vec<u64>,
}

impl ClassSums {
    pub fn new(points: usize) -> Self {
        ClassSums {
            points,
            n: 0,
            counts: vec![[0; 256]; 16],
            sums: vec![vec![0; 256 * points]; 16],
            total: vec![0; points],
            total_sq: vec![0; points],
        }
    }

    pub fn add(&mut self, x: &[u8], pt: &[u8; 16]) {
        let p = self.points;
        let x = &x[..p];
        self.n += 1;
        for (t, &v) in x.iter().enumerate() {
            self.total[t] += v as u64;
            self.total_sq[t] += (v as u64) * (v as u64);
        }
        self.sums.par_iter_mut().zip(self.counts.par_iter_mut()).enumerate().for_each(|(b, (s, c))| {
            let z = pt[b] as usize;
            c[z] += 1;
            for (acc, &v) in s[z * p..(z + 1) * p].iter_mut().zip(x) {
                *acc += v as u32;
            }
        });
    }

    /// Sums over `traces` truncated to their common length.
    pub fn from_traces(traces: &TraceFile, pts: &[[u8; 16]]) -> Self {
        let len = traces.min_len();
        let mut cs = ClassSums::new(5 * len);
        for (t, pt) in traces.traces.iter().zip(pts) {
            cs.add(&leakage_points(t, len), pt);
        }
        cs
    }

    fn var_total(&self, t: usize) -> f64 {
        let n = self.n as f64;
        let m = self.total[t] as f64 / n;
        self.total_sq[t] as f64 / n - m * m
    }
}

/// NICV per byte position and point, classes being the plaintext byte
/// values. Points with zero total variance get 0.
pub fn nicv(cs: &ClassSums) -> Vec<Vec<f64>> {
    assert!(cs.n >= 2, "NICV needs at least two traces");
    let n = cs.n as f64;
    (0..16)
        .into_par_iter()
        .map(|b| {
            (0..cs.points)
                .map(|t| {
                    let var = cs.var_total(t);
                    if var <= 1e-12 {
                        return 0.0;
                    }
                    let m = cs.total[t] as f64 / n;
                    let mut between = 0.0;
                    for z in 0..256 {
                        let c = cs.counts[b][z];
                        if c > 0 {
                            let mz = cs.sums[b][z * cs.points + t] as f64 / c as f64;
                            between += c as f64 * (mz - m) * (mz - m);
                        }
                    }
                    let v = between / n / var;
                    debug_assert!((-1e-9..=1.0 + 1e-9).contains(&v));
                    v.clamp(0.0, 1.0)
                })
                .collect()
        })
        .collect()
}

fn wht(v: &mut [f64; 256]) {
    let mut h = 1;
    while h < 256 {
        for i in (0..256).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (v[j], v[j + h]);
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// `out[k] = sum_z f(z ^ k) * g(z)`.
fn xor_conv(fh: &[f64; 256], g: &[f64; 256]) -> [f64; 256] {
    let mut gh = *g;
    wht(&mut gh);
    for (a, b) in gh.iter_mut().zip(fh) {
        *a *= b;
    }
    wht(&mut gh);
    gh.map(|x| x / 256.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CpaByte {
    /// `max_t |rho|` per key guess.
    pub scores: Vec<f64>,
    /// Point where each guess peaks.
    pub peaks: Vec<usize>,
}

impl CpaByte {
    /// Key guesses from best to worst; ties keep the smaller guess first.
    pub fn ranking(&self) -> Vec<u8> {
        let mut k: Vec<u8> = (0..=255).collect();
        k.sort_by(|a, b| self.scores[*b as usize].total_cmp(&self.scores[*a as usize]).then(a.cmp(b)));
        k
    }

    /// 1 + the number of guesses scoring strictly higher than `key`.
    pub fn rank_of(&self, key: u8) -> usize {
        let s = self.scores[key as usize];
        1 + self.scores.iter().filter(|&&x| x > s).count()
    }
}

fn correlation(n: f64, sxy: f64, sx: f64, sxx: f64, sy: f64, syy: f64) -> f64 {
    let vx = n * sxx - sx * sx;
    let vy = n * syy - sy * sy;
    if vx <= 1e-9 || vy <= 1e-9 {
        return 0.0;
    }
    (n * sxy - sx * sy) / (vx * vy).sqrt()
}

fn hypothesis() -> [f64; 256] {
    let s = aes_sbox();
    s.map(|v| hw(v as u32) as f64)
}

/// CPA with hypothesis `HW(Sbox(pt[b] ^ k))` for every byte and guess.
pub fn cpa(cs: &ClassSums) -> Vec<CpaByte> {
    let g = hypothesis();
    let mut gh = g;
    wht(&mut gh);
    let mut g2h = g.map(|x| x * x);
    wht(&mut g2h);
    let n = cs.n as f64;
    (0..16)
        .into_par_iter()
        .map(|b| {
            let counts = cs.counts[b].map(|c| c as f64);
            let sh = xor_conv(&gh, &counts);
            let shh = xor_conv(&g2h, &counts);
            let mut scores = vec![0.0f64; 256];
            let mut peaks = vec![0usize; 256];
            let mut col = [0.0f64; 256];
            for t in 0..cs.points {
                for z in 0..256 {
                    col[z] = cs.sums[b][z * cs.points + t] as f64;
                }
                let shx = xor_conv(&gh, &col);
                let (sx, sxx) = (cs.total[t] as f64, cs.total_sq[t] as f64);
                for k in 0..256 {
                    let r = correlation(n, shx[k], sx, sxx, sh[k], shh[k]).abs();
                    if r > scores[k] {
                        scores[k] = r;
                        peaks[k] = t;
                    }
                }
            }
            CpaByte { scores, peaks }
        })
        .collect()
}

/// Direct CPA over the raw leakage matrix; slow, used to cross-check
/// [`cpa`].
pub fn cpa_direct(x: &[Vec<u8>], pts: &[[u8; 16]], byte: usize) -> CpaByte {
    let s = aes_sbox();
    let n = x.len() as f64;
    let points = x[0].len();
    let mut scores = vec![0.0; 256];
    let mut peaks = vec![0; 256];
    for k in 0..256usize {
        let h: Vec<f64> = pts.iter().map(|p| hw(s[p[byte] as usize ^ k] as u32) as f64).collect();
        let (sy, syy) = (h.iter().sum::<f64>(), h.iter().map(|v| v * v).sum::<f64>());
        for t in 0..points {
            let (mut sx, mut sxx, mut sxy) = (0.0, 0.0, 0.0);
            for (row, hv) in x.iter().zip(&h) {
                let v = row[t] as f64;
                sx += v;
                sxx += v * v;
                sxy += v * hv;
            }
            let r = correlation(n, sxy, sx, sxx, sy, syy).abs();
            if r > scores[k] {
                scores[k] = r;
                peaks[k] = t;
            }
        }
    }
    CpaByte { scores, peaks }
}

/// Rank of the true key byte after each prefix length in `checkpoints`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergencePoint {
    pub traces: usize,
    pub byte: usize,
    pub rank: usize,
    pub score_true: f64,
    pub score_best_wrong: f64,
}

pub fn convergence(traces: &TraceFile, pts: &[[u8; 16]], key: &[u8; 16], checkpoints: &[usize]) -> Vec<ConvergencePoint> {
    let len = traces.min_len();
    let mut cs = ClassSums::new(5 * len);
    let mut out = Vec::new();
    let mut cps: Vec<usize> = checkpoints.iter().copied().filter(|&c| c >= 2 && c <= traces.len()).collect();
    cps.sort_unstable();
    cps.dedup();
    let mut next = cps.iter().peekable();
    for (i, (t, pt)) in traces.traces.iter().zip(pts).enumerate() {
        cs.add(&leakage_points(t, len), pt);
        if next.peek() == Some(&&(i + 1)) {
            next.next();
            for (b, r) in cpa(&cs).iter().enumerate() {
                let k = key[b] as usize;
                let wrong = r.scores.iter().enumerate().filter(|(g, _)| *g != k).map(|(_, s)| *s).fold(0.0, f64::max);
                out.push(ConvergencePoint {
                    traces: i + 1,
                    byte: b,
                    rank: r.rank_of(key[b]),
                    score_true: r.scores[k],
                    score_best_wrong: wrong,
                });
            }
        }
    }
    out
}
