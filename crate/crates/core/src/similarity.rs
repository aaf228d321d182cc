//! Image representation and the three similarity metrics used by challenge
//! adjudication: intensity-histogram intersection, perceptual hash (pHash),
//! and difference hash (dHash), combined by a 2-of-3 duplicate decision.
//!
//! Adjudication replays on every validator, so everything here is exact and
//! platform-independent: resizing is edge-clamped bilinear sampling with a
//! documented rounding rule, and the DCT cosine table is built from a Taylor
//! expansion instead of the platform `cos`.

use crate::errors::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::{BufRead, Write};

/// Row-major 8-bit grayscale image.
#[derive(Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<GrayImage> {
        if width == 0 || height == 0 {
            return Err(Error::MalformedPayload("image dimensions must be >= 1".into()));
        }
        if pixels.len() != width * height {
            return Err(Error::MalformedPayload(format!(
                "pixel count {} does not match {}x{}",
                pixels.len(),
                width,
                height
            )));
        }
        Ok(GrayImage { width, height, pixels })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> GrayImage {
        GrayImage::new(width, height, vec![value; width * height]).expect("nonzero dims")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// Raw bytes that product digests are computed over: width, height, and
    /// the row-major pixels in the canonical encoding.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + self.pixels.len());
        out.extend_from_slice(&(self.width as u64).to_le_bytes());
        out.extend_from_slice(&(self.height as u64).to_le_bytes());
        out.extend_from_slice(&self.pixels);
        out
    }

    /// Parses a binary PGM (`P5`, maxval 255) image.
    pub fn read_pgm(mut input: impl BufRead) -> Result<GrayImage> {
        let mut header = Vec::new();
        // Header: magic, width, height, maxval as whitespace-separated
        // tokens, with `#` comments allowed between them.
        let mut tokens: Vec<String> = Vec::new();
        while tokens.len() < 4 {
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                return Err(Error::IoFailure("truncated pgm header".into()));
            }
            header.extend_from_slice(line.as_bytes());
            let body = line.split('#').next().unwrap_or("");
            tokens.extend(body.split_whitespace().map(|t| t.to_string()));
        }
        if tokens[0] != "P5" {
            return Err(Error::IoFailure("not a binary pgm (P5) file".into()));
        }
        let width: usize = tokens[1].parse().map_err(|_| Error::IoFailure("bad pgm width".into()))?;
        let height: usize = tokens[2].parse().map_err(|_| Error::IoFailure("bad pgm height".into()))?;
        if tokens[3] != "255" {
            return Err(Error::IoFailure("pgm maxval must be 255".into()));
        }
        let mut pixels = vec![0u8; width * height];
        input.read_exact(&mut pixels).map_err(|_| Error::IoFailure("truncated pgm pixels".into()))?;
        GrayImage::new(width, height, pixels)
    }

    /// Writes the image as binary PGM (`P5`, maxval 255).
    pub fn write_pgm(&self, mut out: impl Write) -> Result<()> {
        write!(out, "P5\n{} {}\n255\n", self.width, self.height)?;
        out.write_all(&self.pixels)?;
        Ok(())
    }

    /// Edge-clamped bilinear resize.
    ///
    /// Destination pixel centers map to source coordinates
    /// `s = (d + 0.5) * src_dim / dst_dim - 0.5`, clamped to
    /// `[0, src_dim - 1]`; the four neighbors are blended and the result is
    /// rounded half-up (`floor(v + 0.5)`). The rule is fixed so hashes are
    /// stable across implementations.
    pub fn resize(&self, new_width: usize, new_height: usize) -> GrayImage {
        assert!(new_width >= 1 && new_height >= 1);
        let mut pixels = Vec::with_capacity(new_width * new_height);
        for dy in 0..new_height {
            let sy = ((dy as f64 + 0.5) * self.height as f64 / new_height as f64 - 0.5)
                .clamp(0.0, (self.height - 1) as f64);
            let y0 = sy.floor() as usize;
            let y1 = (y0 + 1).min(self.height - 1);
            let fy = sy - y0 as f64;
            for dx in 0..new_width {
                let sx = ((dx as f64 + 0.5) * self.width as f64 / new_width as f64 - 0.5)
                    .clamp(0.0, (self.width - 1) as f64);
                let x0 = sx.floor() as usize;
                let x1 = (x0 + 1).min(self.width - 1);
                let fx = sx - x0 as f64;
                let top = (1.0 - fx) * self.pixel(x0, y0) as f64 + fx * self.pixel(x1, y0) as f64;
                let bot = (1.0 - fx) * self.pixel(x0, y1) as f64 + fx * self.pixel(x1, y1) as f64;
                let v = (1.0 - fy) * top + fy * bot;
                pixels.push((v + 0.5).floor().clamp(0.0, 255.0) as u8);
            }
        }
        GrayImage { width: new_width, height: new_height, pixels }
    }
}

impl fmt::Debug for GrayImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrayImage({}x{})", self.width, self.height)
    }
}

/// 64-bit perceptual hash value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hash64(pub u64);

impl Hash64 {
    pub fn to_hex(&self) -> String {
        format!("{:016x}", self.0)
    }
}

impl fmt::Debug for Hash64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hash64({:016x})", self.0)
    }
}

/// Hamming distance: popcount of the XOR.
pub fn hamming(a: Hash64, b: Hash64) -> u32 {
    (a.0 ^ b.0).count_ones()
}

const HIST_BINS: usize = 64;

/// Histogram intersection similarity over 64-bin, L1-normalized intensity
/// histograms. Symmetric, in [0, 1]; images may differ in size.
pub fn histogram_similarity(a: &GrayImage, b: &GrayImage) -> f64 {
    let ha = normalized_histogram(a);
    let hb = normalized_histogram(b);
    ha.iter().zip(hb.iter()).map(|(x, y)| x.min(*y)).sum()
}

fn normalized_histogram(img: &GrayImage) -> [f64; HIST_BINS] {
    let mut counts = [0u64; HIST_BINS];
    for &p in img.pixels() {
        counts[(p >> 2) as usize] += 1;
    }
    let total = img.pixels().len() as f64;
    let mut out = [0.0; HIST_BINS];
    for (o, c) in out.iter_mut().zip(counts.iter()) {
        *o = *c as f64 / total;
    }
    out
}

const PHASH_DIM: usize = 32;
const PHASH_BLOCK: usize = 8;

/// Perceptual hash: bilinear-resize to 32x32, 2-D type-II DCT, keep the 8x8
/// low-frequency block, and set bit `r*8 + c` when the coefficient exceeds
/// the median of the 63 AC coefficients. The DC coefficient keeps its bit but
/// is excluded from the median.
pub fn phash(img: &GrayImage) -> Hash64 {
    let small = img.resize(PHASH_DIM, PHASH_DIM);
    let coeffs = dct2d_low_block(&small);
    let mut ac: Vec<f64> = coeffs[1..].to_vec();
    ac.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let median = ac[(ac.len() - 1) / 2];
    let mut bits = 0u64;
    for (i, &c) in coeffs.iter().enumerate() {
        if c > median {
            bits |= 1 << i;
        }
    }
    Hash64(bits)
}

/// Difference hash: bilinear-resize to 9x8 and set bit `r*8 + c` when the
/// pixel to the right is strictly brighter.
pub fn dhash(img: &GrayImage) -> Hash64 {
    let small = img.resize(9, 8);
    let mut bits = 0u64;
    for r in 0..8 {
        for c in 0..8 {
            if small.pixel(c + 1, r) > small.pixel(c, r) {
                bits |= 1 << (r * 8 + c);
            }
        }
    }
    Hash64(bits)
}

/// Orthonormal 2-D type-II DCT of a 32x32 image, returning the top-left 8x8
/// block row-major (index 0 is the DC term).
fn dct2d_low_block(img: &GrayImage) -> [f64; PHASH_BLOCK * PHASH_BLOCK] {
    debug_assert_eq!(img.width(), PHASH_DIM);
    debug_assert_eq!(img.height(), PHASH_DIM);
    let table = cos_table();
    // Rows first: rows[y][u] = sum_x pix(x, y) * cos(pi*(2x+1)*u / 64).
    let mut rows = [[0.0f64; PHASH_BLOCK]; PHASH_DIM];
    for y in 0..PHASH_DIM {
        for u in 0..PHASH_BLOCK {
            let mut acc = 0.0;
            for x in 0..PHASH_DIM {
                acc += img.pixel(x, y) as f64 * table[(2 * x + 1) * u % 256];
            }
            rows[y][u] = acc;
        }
    }
    let scale0 = 1.0 / (PHASH_DIM as f64).sqrt();
    let scale = (2.0 / PHASH_DIM as f64).sqrt();
    let mut out = [0.0f64; PHASH_BLOCK * PHASH_BLOCK];
    for v in 0..PHASH_BLOCK {
        for u in 0..PHASH_BLOCK {
            let mut acc = 0.0;
            for y in 0..PHASH_DIM {
                acc += rows[y][u] * table[(2 * y + 1) * v % 256];
            }
            let su = if u == 0 { scale0 } else { scale };
            let sv = if v == 0 { scale0 } else { scale };
            let coeff = su * sv * acc;
            // Flush accumulation residue so mathematically-zero coefficients
            // (e.g. every AC term of a constant image) compare as exact ties.
            out[v * PHASH_BLOCK + u] = if coeff.abs() < 1e-8 { 0.0 } else { coeff };
        }
    }
    out
}

/// cos(pi * k / 64) for k in 0..256, computed from a Taylor expansion so the
/// table is bit-identical on every platform.
fn cos_table() -> [f64; 256] {
    let mut table = [0.0f64; 256];
    for (k, entry) in table.iter_mut().enumerate() {
        // cos(pi*k/64) has period 128 in k; fold the angle into [0, pi/2]
        // where the series converges fast.
        let mut m = k % 128;
        if m > 64 {
            m = 128 - m; // cos(2*pi - t) = cos(t)
        }
        *entry = if m <= 32 {
            taylor_cos(std::f64::consts::PI * m as f64 / 64.0)
        } else {
            // cos(t) = -cos(pi - t)
            -taylor_cos(std::f64::consts::PI * (64 - m) as f64 / 64.0)
        };
    }
    table
}

/// Taylor-series cosine, valid for |x| <= pi/2. Plain f64 arithmetic only,
/// so results are deterministic across platforms.
fn taylor_cos(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..16u32 {
        term *= -x2 / ((2 * n - 1) as f64 * (2 * n) as f64);
        sum += term;
    }
    sum
}

/// Per-metric acceptance thresholds for the duplicate decision.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct SimilarityThresholds {
    /// Minimum histogram intersection, in [0, 1].
    pub histogram_min: f64,
    /// Maximum pHash Hamming distance, 0..=64.
    pub phash_max_distance: u32,
    /// Maximum dHash Hamming distance, 0..=64.
    pub dhash_max_distance: u32,
}

impl Default for SimilarityThresholds {
    fn default() -> Self {
        SimilarityThresholds {
            histogram_min: 0.90,
            phash_max_distance: 10,
            dhash_max_distance: 10,
        }
    }
}

impl SimilarityThresholds {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.histogram_min)
            || self.phash_max_distance > 64
            || self.dhash_max_distance > 64
        {
            return Err(Error::ConfigInvalid("similarity thresholds out of range".into()));
        }
        Ok(())
    }
}

/// Per-metric similarity scores reported on-chain with a deregistration:
/// histogram intersection, and `1 - distance/64` for both hashes.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct SimilarityTuple {
    pub histogram: f64,
    pub phash: f64,
    pub dhash: f64,
}

impl SimilarityTuple {
    pub const ZERO: SimilarityTuple = SimilarityTuple { histogram: 0.0, phash: 0.0, dhash: 0.0 };

    pub fn in_range(&self) -> bool {
        [self.histogram, self.phash, self.dhash]
            .iter()
            .all(|v| (0.0..=1.0).contains(v))
    }
}

/// 2-of-3 duplicate decision. Returns the verdict, the reported similarity
/// tuple, and how many metrics passed.
pub fn is_duplicate(
    a: &GrayImage,
    b: &GrayImage,
    t: &SimilarityThresholds,
) -> (bool, SimilarityTuple, u32) {
    let hist = histogram_similarity(a, b);
    let pd = hamming(phash(a), phash(b));
    let dd = hamming(dhash(a), dhash(b));
    let mut passed = 0;
    if hist >= t.histogram_min {
        passed += 1;
    }
    if pd <= t.phash_max_distance {
        passed += 1;
    }
    if dd <= t.dhash_max_distance {
        passed += 1;
    }
    let tuple = SimilarityTuple {
        histogram: hist,
        phash: 1.0 - pd as f64 / 64.0,
        dhash: 1.0 - dd as f64 / 64.0,
    };
    (passed >= 2, tuple, passed)
}
