//! Braid words, their text format, and the writhe and permutation homomorphisms.
//!
//! A letter `k > 0` stands for the Artin generator `σ_k`, and `-k` for its
//! inverse. A word `g_1 g_2 … g_m` denotes the product in written order and
//! acts on points right-to-left, so `g_m` acts first.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        for (position, &k) in letters.iter().enumerate() {
            if k == 0 || k.unsigned_abs() as usize > n - 1 {
                return Err(Error::Range {
                    position,
                    index: k as i64,
                    max: n - 1,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "braid groups need at least two strands");
        BraidWord { n, letters: Vec::new() }
    }

    /// Parses whitespace-separated tokens `±k` or `±k^e`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let parse_err = |reason: &str| Error::Parse {
                position,
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => {
                    let e: usize = e.parse().map_err(|_| parse_err("exponent must be a positive integer"))?;
                    if e == 0 {
                        return Err(parse_err("exponent must be at least 1"));
                    }
                    (b, e)
                }
                None => (token, 1),
            };
            let digits = base.strip_prefix(['+', '-']).unwrap_or(base);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(parse_err("expected a signed generator index"));
            }
            let k: i64 = base.parse().map_err(|_| parse_err("generator index too large"))?;
            if k == 0 || k.unsigned_abs() as usize > n - 1 {
                return Err(Error::Range { position, index: k, max: n - 1 });
            }
            letters.extend(std::iter::repeat_n(k as i32, exp));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        // π = t_{g1} ∘ … ∘ t_{gm}; right-multiplying by t_k swaps image slots k, k+1
        for &k in &self.letters {
            let k = k.unsigned_abs() as usize;
            images.swap(k - 1, k);
        }
        Permutation::from_zero_based(images)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Cancels adjacent `k, -k` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if out.last() == Some(&-k) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&k| -k).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "concatenating words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, e: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(e),
        }
    }

    /// Each letter uniform over `{±1, …, ±(n-1)}`, deterministic in `seed`.
    pub fn random(n: usize, length: usize, seed: u64) -> BraidWord {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(n, length, &mut rng)
    }

    pub fn random_with<R: Rng + ?Sized>(n: usize, length: usize, rng: &mut R) -> BraidWord {
        assert!(n >= 2, "braid groups need at least two strands");
        let letters = (0..length).map(|_| random_letter(n, rng)).collect();
        BraidWord { n, letters }
    }

    /// The canonical text form: single letters separated by spaces.
    pub fn format(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|k| k.to_string()).collect();
        parts.join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("braid words always serialize")
    }
}

#[inline]
pub(crate) fn random_letter<R: Rng + ?Sized>(n: usize, rng: &mut R) -> i32 {
    let m = (n - 1) as i32;
    let r = rng.gen_range(0..2 * m);
    if r < m {
        r + 1
    } else {
        -(r - m + 1)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, {:?})", self.n, self.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Free function forms mirroring the method API.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n)
}

pub fn writhe(w: &BraidWord) -> i64 {
    w.writhe()
}

pub fn permutation(w: &BraidWord) -> Permutation {
    w.permutation()
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn random_word(n: usize, length: usize, seed: u64) -> BraidWord {
    BraidWord::random(n, length, seed)
}
