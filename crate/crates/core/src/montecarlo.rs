//! Return statistics of uniformly random braid words under the Gauss-Epple
//! homomorphism: exact counts by dynamic programming over reachable images,
//! Monte Carlo estimates, and a log-log decay fit.
//!
//! Words of length `N` are drawn uniformly from the `2(n-1)`-letter alphabet
//! `{σ_k^{±1}}`, with no reduction or filtering.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ge::{in_kernel_ge, GeElement};
use crate::perm::Permutation;
use crate::Int;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "GE_ENUM_BUDGET";

/// Default cap on the estimated number of dynamic-programming states.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// Words per Monte Carlo batch; batch `b` draws from stream `b` of the seed.
const BATCH: u64 = 4096;

/// Two-sided 99% normal quantile.
const Z99: f64 = 2.575_829_303_548_901;

pub fn budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Upper bound on reachable images at length `len`: `n! (2 len + 1)^n`.
pub fn state_estimate(n: usize, len: usize) -> u128 {
    let fact: u128 = (1..=n as u128).product();
    let side = 2 * len as u128 + 1;
    (0..n).fold(fact, |acc, _| acc.saturating_mul(side))
}

// Packed DP state: slot i holds (π(i), ℓ_i). Right-multiplying by σ_k^{±1}
// swaps slots k, k+1 in both components, then adds +1 to ℓ_{k+1} (or -1 to ℓ_k).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Packed(u128);

struct Codec {
    n: usize,
    offset: i64,
    perm_bits: u32,
    slot_bits: u32,
}

impl Codec {
    fn new(n: usize, max_len: usize) -> Result<Self> {
        let perm_bits = usize::BITS - (n.max(2) - 1).leading_zeros();
        let ell_bits = u64::BITS - (2 * max_len as u64).max(1).leading_zeros();
        let slot_bits = perm_bits + ell_bits;
        if slot_bits as usize * n > 128 {
            return Err(Error::UnsupportedRank(format!(
                "n = {n} with length {max_len} does not fit the packed state"
            )));
        }
        Ok(Codec {
            n,
            offset: max_len as i64,
            perm_bits,
            slot_bits,
        })
    }

    fn get(&self, s: Packed, i: usize) -> (usize, i64) {
        let slot = (s.0 >> (self.slot_bits as usize * i)) & ((1u128 << self.slot_bits) - 1);
        let p = (slot & ((1 << self.perm_bits) - 1)) as usize;
        let l = (slot >> self.perm_bits) as i64 - self.offset;
        (p, l)
    }

    fn set(&self, s: Packed, i: usize, (p, l): (usize, i64)) -> Packed {
        let shift = self.slot_bits as usize * i;
        let mask = ((1u128 << self.slot_bits) - 1) << shift;
        let slot = (((l + self.offset) as u128) << self.perm_bits) | p as u128;
        Packed((s.0 & !mask) | (slot << shift))
    }

    fn identity(&self) -> Packed {
        (0..self.n).fold(Packed(0), |s, i| self.set(s, i, (i, 0)))
    }

    /// Right multiplication by the image of letter `k` or `-k`.
    fn step(&self, s: Packed, letter: i32) -> Packed {
        let k = letter.unsigned_abs() as usize; // slots k-1, k
        let (a, b) = (self.get(s, k - 1), self.get(s, k));
        let (mut lo, mut hi) = (b, a);
        if letter > 0 {
            hi.1 += 1;
        } else {
            lo.1 -= 1;
        }
        let s = self.set(s, k - 1, lo);
        self.set(s, k, hi)
    }

    fn decode(&self, s: Packed) -> GeElement<Int> {
        let (images, ell): (Vec<usize>, Vec<i64>) = (0..self.n).map(|i| self.get(s, i)).map(|(p, l)| (p + 1, l)).unzip();
        GeElement::new(Permutation::from_images(&images).expect("packed state holds a permutation"), ell)
            .expect("lengths match")
    }
}

fn alphabet(n: usize) -> Vec<i32> {
    (1..n as i32).flat_map(|k| [k, -k]).collect()
}

/// Exact return counts and reachable-state counts for lengths `0..=max_length`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactWalk {
    pub n: usize,
    /// `counts[N]`: words of length `N` with trivial image.
    pub counts: Vec<u128>,
    /// `states[N]`: distinct images reached by words of length `N`.
    pub states: Vec<usize>,
}

impl ExactWalk {
    /// `counts[N] / (2(n-1))^N`.
    pub fn probability(&self, len: usize) -> f64 {
        let base = 2.0 * (self.n as f64 - 1.0);
        self.counts[len] as f64 / base.powi(len as i32)
    }
}

fn check_feasible(n: usize, max_length: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    // the total number of words must fit the counters
    if (max_length as f64) * (2.0 * (n as f64 - 1.0)).log2() >= 127.0 {
        return Err(Error::UnsupportedRank(format!("length {max_length} overflows exact counts at n = {n}")));
    }
    let estimate = state_estimate(n, max_length);
    let budget = budget();
    if estimate > budget {
        return Err(Error::Budget { estimate, budget });
    }
    Ok(())
}

fn convolve(codec: &Codec, letters: &[i32], dist: &HashMap<Packed, u128>) -> HashMap<Packed, u128> {
    let mut next = HashMap::with_capacity(dist.len() * 2);
    for (&s, &c) in dist {
        for &l in letters {
            *next.entry(codec.step(s, l)).or_insert(0) += c;
        }
    }
    next
}

pub fn exact_walk(n: usize, max_length: usize) -> Result<ExactWalk> {
    check_feasible(n, max_length)?;
    let codec = Codec::new(n, max_length)?;
    let letters = alphabet(n);
    let id = codec.identity();
    let mut dist = HashMap::from([(id, 1u128)]);
    let mut counts = vec![1];
    let mut states = vec![1];
    for _ in 0..max_length {
        dist = convolve(&codec, &letters, &dist);
        counts.push(dist.get(&id).copied().unwrap_or(0));
        states.push(dist.len());
    }
    Ok(ExactWalk { n, counts, states })
}

/// `counts[N]` for `N = 0..=max_length`.
pub fn exact_kernel_count(n: usize, max_length: usize) -> Result<Vec<u128>> {
    exact_walk(n, max_length).map(|w| w.counts)
}

/// The exact distribution of the image of a uniform word of length `length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkDistribution {
    pub n: usize,
    pub length: usize,
    pub mass: HashMap<GeElement<Int>, u128>,
}

impl WalkDistribution {
    pub fn exact(n: usize, length: usize) -> Result<Self> {
        check_feasible(n, length)?;
        let codec = Codec::new(n, length)?;
        let letters = alphabet(n);
        let mut dist = HashMap::from([(codec.identity(), 1u128)]);
        for _ in 0..length {
            dist = convolve(&codec, &letters, &dist);
        }
        let mass = dist.into_iter().map(|(s, c)| (codec.decode(s), c)).collect();
        Ok(WalkDistribution { n, length, mass })
    }

    pub fn total(&self) -> u128 {
        self.mass.values().sum()
    }

    pub fn probability_of(&self, g: &GeElement<Int>) -> f64 {
        self.mass.get(g).copied().unwrap_or(0) as f64 / self.total() as f64
    }
}

/// A binomial proportion with its 99% Wilson interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub hits: u64,
    pub samples: u64,
    pub estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    pub fn wilson(hits: u64, samples: u64) -> Self {
        let n = samples as f64;
        let p = hits as f64 / n;
        let z2 = Z99 * Z99;
        let denom = 1.0 + z2 / n;
        let centre = (p + z2 / (2.0 * n)) / denom;
        let half = Z99 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
        Estimate {
            hits,
            samples,
            estimate: p,
            ci_low: (centre - half).max(0.0),
            ci_high: (centre + half).min(1.0),
        }
    }

    pub fn contains(&self, p: f64) -> bool {
        self.ci_low <= p && p <= self.ci_high
    }
}

/// Fraction of `samples` uniform words of length `length` lying in the
/// kernel. Batches run in parallel on independent ChaCha streams, so the
/// result depends only on the arguments.
pub fn kernel_hit_probability(n: usize, length: usize, samples: u64, seed: u64) -> Result<Estimate> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    if samples == 0 {
        return Err(Error::Estimation("need at least one sample".into()));
    }
    let batches = samples.div_ceil(BATCH);
    let hits: u64 = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let size = BATCH.min(samples - b * BATCH);
            (0..size)
                .filter(|_| in_kernel_ge(&BraidWord::random_with(n, length, &mut rng)))
                .count() as u64
        })
        .sum();
    Ok(Estimate::wilson(hits, samples))
}

/// Least-squares slope of `log p` against `log N`, negated, over the points
/// with even `N >= 4` and `p > 0`.
pub fn estimate_decay_exponent(points: &[(usize, f64)]) -> Result<f64> {
    let used: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(len, p)| len >= 4 && len % 2 == 0 && p > 0.0)
        .map(|&(len, p)| ((len as f64).ln(), p.ln()))
        .collect();
    if used.len() < 3 {
        return Err(Error::Estimation(format!(
            "need at least 3 points with even N >= 4 and p > 0, got {}",
            used.len()
        )));
    }
    let k = used.len() as f64;
    let mx = used.iter().map(|p| p.0).sum::<f64>() / k;
    let my = used.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = used.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = used.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::Estimation("all points share one length".into()));
    }
    Ok(-(sxy / sxx))
}

/// CSV with one row per length `1..=max_length`: exact counts where the
/// budget allows (`NA` otherwise), the Monte Carlo estimate with its 99%
/// interval, and natural logs of `N` and the estimate for log-log plots.
pub fn walk_csv(n: usize, max_length: usize, samples: u64, seed: u64) -> Result<String> {
    let exact = match exact_walk(n, max_length) {
        Ok(w) => Some(w),
        Err(Error::Budget { .. }) | Err(Error::UnsupportedRank(_)) => None,
        Err(e) => return Err(e),
    };
    let mut out = String::from("n,N,exact_count,estimate,ci_low,ci_high,log_N,log_estimate\n");
    for len in 1..=max_length {
        // distinct streams per length
        let est = kernel_hit_probability(n, len, samples, seed.wrapping_add(len as u64))?;
        let count = exact.as_ref().map_or("NA".to_string(), |w| w.counts[len].to_string());
        let log_p = if est.hits > 0 { format!("{:.6}", est.estimate.ln()) } else { "NA".into() };
        writeln!(
            out,
            "{n},{len},{count},{:.6},{:.6},{:.6},{:.6},{log_p}",
            est.estimate,
            est.ci_low,
            est.ci_high,
            (len as f64).ln()
        )
        .expect("writing to a string");
    }
    Ok(out)
}
