//! Permutations of `{1, …, n}`.
//!
//! The public API is one-indexed throughout. Composition is right-to-left:
//! `a.compose(&b)` is the map `x ↦ a(b(x))`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-indexed images; images[i] = π(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(i, j)` on `[n]`, one-indexed.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::Permutation(format!("bad transposition ({i}, {j}) on [{n}]")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The adjacent transposition `(k, k+1)`. Panics when `k` is out of range.
    pub fn adjacent(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k < n, "adjacent transposition index {k} out of range for n = {n}");
        let mut p = Self::identity(n);
        p.images.swap(k - 1, k);
        p
    }

    /// Builds a permutation from one-indexed images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Permutation(format!("{images:?} is not a bijection of [1, {n}]")));
            }
            seen[x - 1] = true;
            zero.push(x - 1);
        }
        Ok(Permutation { images: zero })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[1, 3, 2]]` maps 1→3→2→1.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || touched[x - 1] {
                    return Err(Error::Permutation(format!("bad cycle {cycle:?} on [{n}]")));
                }
                touched[x - 1] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                if next == 0 || next > n {
                    return Err(Error::Permutation(format!("bad cycle {cycle:?} on [{n}]")));
                }
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses either cycle notation `(1,3,2)(4,5)` or a one-line image list `2,3,1`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('(') {
            let n = n.ok_or_else(|| Error::Permutation("cycle notation needs an explicit n".into()))?;
            let mut cycles = Vec::new();
            for chunk in t.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Permutation(format!("malformed cycle notation {text:?}")))?;
                let cycle = parse_list(inner)?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            Self::from_cycles(n, &cycles)
        } else {
            let inner = t.trim_start_matches('[').trim_end_matches(']');
            let images = parse_list(inner)?;
            if let Some(n) = n {
                if images.len() != n {
                    return Err(Error::Dimension { expected: n, got: images.len() });
                }
            }
            Self::from_images(&images)
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π(a)` for one-indexed `a`.
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1] + 1
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let p = &self.images;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// 0 for even permutations, 1 for odd.
    pub fn parity(&self) -> u8 {
        (self.inversions() % 2) as u8
    }

    pub fn sign(&self) -> i8 {
        if self.parity() == 0 {
            1
        } else {
            -1
        }
    }

    /// Adjacent-transposition indices `k_1, …, k_f` with
    /// `self = (k_1,k_1+1) ∘ … ∘ (k_f,k_f+1)`, found by bubble sort.
    /// The result is a reduced word (its length is the inversion count).
    pub fn adjacent_decomposition(&self) -> Vec<usize> {
        let mut p = self.images.clone();
        let mut swaps = Vec::new();
        // p ∘ t_k swaps positions k, k+1 of the image list
        loop {
            let mut changed = false;
            for k in 0..p.len().saturating_sub(1) {
                if p[k] > p[k + 1] {
                    p.swap(k, k + 1);
                    swaps.push(k + 1);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        swaps.reverse();
        swaps
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation in its symmetric group.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect()
    }

    /// Every permutation of `[n]` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Permutation(format!("not a point label: {t:?}")))
        })
        .collect()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn compose_is_right_to_left() {
        let t1 = Permutation::adjacent(3, 1);
        let t2 = Permutation::adjacent(3, 2);
        // t1 ∘ t2: 1→1→2, 2→3→3, 3→2→1
        assert_eq!(t1.compose(&t2).images(), vec![2, 3, 1]);
    }

    #[test]
    fn cycles_roundtrip() {
        let p = Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap();
        assert_eq!(p.images(), vec![3, 1, 2]);
        assert_eq!(p.cycle_string(), "(1,3,2)");
        assert_eq!(Permutation::parse("(1,3,2)", Some(3)).unwrap(), p);
        assert_eq!(Permutation::parse("3,1,2", None).unwrap(), p);
        assert_eq!(Permutation::parse("[3, 1, 2]", Some(3)).unwrap(), p);
        assert_eq!(Permutation::identity(4).cycle_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::transposition(3, 2, 2).is_err());
    }

    #[test]
    fn all_counts() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..8).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(Permutation::from_zero_based)
        })
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs(p in perm_strategy()) {
            let word = p.adjacent_decomposition();
            prop_assert_eq!(word.len(), p.inversions());
            let n = p.n();
            let q = word.iter().fold(Permutation::identity(n), |acc, &k| acc.compose(&Permutation::adjacent(n, k)));
            prop_assert_eq!(q, p);
        }

        #[test]
        fn inverse_and_parity(p in perm_strategy()) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert_eq!(p.parity(), p.inverse().parity());
            let cyc = Permutation::from_cycles(p.n(), &p.cycles()).unwrap();
            prop_assert_eq!(cyc, p);
        }
    }
}
