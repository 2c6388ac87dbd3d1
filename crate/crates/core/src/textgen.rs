//! Seeded generators for the benchmark inputs: uniform random texts and
//! patterns, planting of pattern occurrences, and the periodic worst case.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit seed
//! (`ChaCha8Rng::seed_from_u64`), so outputs are reproducible across
//! platforms.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbols::{Alphabet, Pattern, Symbol, Text};

/// Planting attempts allowed per requested occurrence.
pub const RETRIES_PER_PLANT: usize = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent seed from a base seed and a list of coordinates
/// (splitmix64 finalizer folded over the inputs).
pub fn derive_seed(base: u64, coords: &[u64]) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    coords.iter().fold(mix(base), |acc, &c| mix(acc ^ mix(c)))
}

fn random_alphabet(sigma: u32) -> Result<Alphabet> {
    if sigma < 2 {
        return Err(Error::invalid(format!(
            "random generation needs at least 2 symbols, got {sigma}"
        )));
    }
    Alphabet::new(sigma)
}

fn uniform_symbols(len: usize, alphabet: Alphabet, seed: u64) -> Vec<Symbol> {
    let mut rng = rng(seed);
    let sigma = alphabet.size();
    (0..len)
        .map(|_| rng.gen_range(0..sigma) as Symbol)
        .collect()
}

/// i.i.d. uniform text of length `n` over `0..sigma`.
pub fn gen_uniform_text(n: usize, sigma: u32, seed: u64) -> Result<Text> {
    let alphabet = random_alphabet(sigma)?;
    if n == 0 {
        return Err(Error::invalid("text length must be at least 1"));
    }
    Text::new(alphabet, uniform_symbols(n, alphabet, seed))
}

/// i.i.d. uniform pattern of length `m` over `0..sigma`.
pub fn gen_pattern(m: usize, sigma: u32, seed: u64) -> Result<Pattern> {
    let alphabet = random_alphabet(sigma)?;
    if m == 0 {
        return Err(Error::invalid("pattern length must be at least 1"));
    }
    Pattern::new(alphabet, uniform_symbols(m, alphabet, seed))
}

/// Where planted occurrences go.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distribution {
    /// Start positions uniform over the whole text.
    Uniform,
    /// `ceil(fraction * count)` plants start inside the trailing `region`
    /// share of the text; the rest start uniformly before it.
    Skewed { fraction: f64, region: f64 },
}

impl Distribution {
    /// Half of the plants in the last quarter of the text.
    pub const END_SKEWED: Distribution = Distribution::Skewed {
        fraction: 0.5,
        region: 0.25,
    };

    pub fn label(&self) -> String {
        match *self {
            Distribution::Uniform => "uniform".to_owned(),
            Distribution::Skewed { fraction, region } => format!("skewed:{fraction}:{region}"),
        }
    }

    /// Parses `uniform`, `end` (the default skew) or `FRACTION:REGION`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let d = match s {
            "uniform" | "none" => Distribution::Uniform,
            "end" | "skewed" => Distribution::END_SKEWED,
            _ => {
                let body = s.strip_prefix("skewed:").unwrap_or(s);
                let (f, r) = body
                    .split_once(':')
                    .ok_or_else(|| Error::invalid(format!("bad distribution {s:?}")))?;
                let parse = |v: &str| {
                    v.parse::<f64>()
                        .map_err(|_| Error::invalid(format!("bad number {v:?} in {s:?}")))
                };
                Distribution::Skewed {
                    fraction: parse(f)?,
                    region: parse(r)?,
                }
            }
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        if let Distribution::Skewed { fraction, region } = *self {
            let unit = |v: f64| v > 0.0 && v <= 1.0;
            if !unit(fraction) || !unit(region) {
                return Err(Error::invalid(format!(
                    "skew fraction and region must lie in (0, 1], got {fraction} and {region}"
                )));
            }
        }
        Ok(())
    }
}

/// How many copies of the pattern to plant, where, and with which seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantSpec {
    pub count: usize,
    pub distribution: Distribution,
    pub seed: u64,
}

impl PlantSpec {
    pub fn uniform(count: usize, seed: u64) -> Self {
        PlantSpec {
            count,
            distribution: Distribution::Uniform,
            seed,
        }
    }
}

/// Tracks accepted plant intervals to reject overlapping candidates.
struct Placements {
    m: usize,
    starts: BTreeSet<usize>,
}

impl Placements {
    fn fits(&self, start: usize) -> bool {
        let lo = start.saturating_sub(self.m - 1);
        self.starts.range(lo..start + self.m).next().is_none()
    }

    fn place<R: Rng>(
        &mut self,
        rng: &mut R,
        range: std::ops::RangeInclusive<usize>,
        count: usize,
        budget: &mut usize,
    ) -> Result<()> {
        let mut placed = 0;
        while placed < count {
            if range.is_empty() || *budget == 0 {
                return Err(Error::invalid(format!(
                    "could not place {count} non-overlapping occurrences of length {} in start range {range:?}",
                    self.m
                )));
            }
            *budget -= 1;
            let start = rng.gen_range(range.clone());
            if self.fits(start) {
                self.starts.insert(start);
                placed += 1;
            }
        }
        Ok(())
    }
}

/// Overwrites `spec.count` pairwise disjoint slices of the text with the
/// pattern. Returns the new text and the sorted planted start positions.
pub fn plant(text: &Text, pattern: &Pattern, spec: &PlantSpec) -> Result<(Text, Vec<usize>)> {
    if text.alphabet() != pattern.alphabet() {
        return Err(Error::invalid("text and pattern alphabets differ"));
    }
    spec.distribution.validate()?;
    let (n, m) = (text.len(), pattern.len());
    if spec.count == 0 {
        return Ok((text.clone(), Vec::new()));
    }
    if spec.count.saturating_mul(m) > n {
        return Err(Error::invalid(format!(
            "{} occurrences of length {m} do not fit in a text of length {n}",
            spec.count
        )));
    }

    let mut rng = rng(spec.seed);
    let mut placements = Placements {
        m,
        starts: BTreeSet::new(),
    };
    let mut budget = RETRIES_PER_PLANT.saturating_mul(spec.count);
    let last_start = n - m;
    match spec.distribution {
        Distribution::Uniform => {
            placements.place(&mut rng, 0..=last_start, spec.count, &mut budget)?;
        }
        Distribution::Skewed { fraction, region } => {
            let in_region = ((fraction * spec.count as f64).ceil() as usize).min(spec.count);
            let region_start = n - ((region * n as f64).floor() as usize).min(n);
            placements.place(&mut rng, region_start..=last_start, in_region, &mut budget)?;
            let rest = spec.count - in_region;
            if rest > 0 {
                let upper = region_start.min(last_start + 1);
                if upper == 0 {
                    return Err(Error::invalid("no room before the skew region"));
                }
                placements.place(&mut rng, 0..=upper - 1, rest, &mut budget)?;
            }
        }
    }

    let mut out = text.clone();
    for &start in &placements.starts {
        out.overwrite(start, pattern);
    }
    Ok((out, placements.starts.into_iter().collect()))
}

/// Text `0^n` and pattern `0^(m-1) 1` over a binary alphabet.
pub fn gen_periodic(n: usize, m: usize) -> Result<(Text, Pattern)> {
    if m < 2 || m > n {
        return Err(Error::invalid(format!(
            "periodic family needs 2 <= m <= n, got n={n}, m={m}"
        )));
    }
    let alphabet = Alphabet::new(2)?;
    let text = Text::new(alphabet, vec![0; n])?;
    let mut p = vec![0; m];
    p[m - 1] = 1;
    Ok((text, Pattern::new(alphabet, p)?))
}
