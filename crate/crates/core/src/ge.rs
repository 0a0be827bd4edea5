//! The Gauss-Epple action of `B_n` on `[n] × Z` and its factorization through
//! the semidirect product `Z^n ⋊ S_n`.
//!
//! An element `(π, ℓ)` acts by `(a, b) ↦ (π(a), b + ℓ[a])`, and the product is
//! `(π1, ℓ1)·(π2, ℓ2) = (π1∘π2, ℓ2 + ℓ1∘π2)`. Under this convention
//! `σ_k ↦ ((k, k+1), e_{k+1})` reproduces the generator rule exactly:
//! `(k, b) ↦ (k+1, b)` and `(k+1, b) ↦ (k, b+1)`.
//!
//! The symmetric variant sends `σ_k ↦ ((k, k+1), e_k + e_{k+1})`.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::scalar::{sum_exact, Scalar};

/// A point `(a, b)` of `[n] × Z`, with `a` one-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GePoint<S> {
    pub a: usize,
    pub b: S,
}

impl<S> GePoint<S> {
    pub fn new(a: usize, b: S) -> Self {
        GePoint { a, b }
    }
}

/// An element `(π, ℓ)` of `Z^n ⋊ S_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeElement<S> {
    pi: Permutation,
    ell: Vec<S>,
}

impl<S: Scalar> GeElement<S> {
    pub fn new(pi: Permutation, ell: Vec<S>) -> Result<Self> {
        if ell.len() != pi.n() {
            return Err(Error::Dimension { expected: pi.n(), got: ell.len() });
        }
        Ok(GeElement { pi, ell })
    }

    pub fn identity(n: usize) -> Self {
        GeElement {
            pi: Permutation::identity(n),
            ell: vec![S::zero(); n],
        }
    }

    /// `((k, k+1), e_{k+1})`, the image of `σ_k`.
    pub fn ge_generator(n: usize, k: usize) -> Self {
        let mut ell = vec![S::zero(); n];
        ell[k] = S::one();
        GeElement { pi: Permutation::adjacent(n, k), ell }
    }

    /// `((k, k+1), e_k + e_{k+1})`, the symmetric image of `σ_k`.
    pub fn symge_generator(n: usize, k: usize) -> Self {
        let mut ell = vec![S::zero(); n];
        ell[k - 1] = S::one();
        ell[k] = S::one();
        GeElement { pi: Permutation::adjacent(n, k), ell }
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn ell(&self) -> &[S] {
        &self.ell
    }

    pub fn is_identity(&self) -> bool {
        self.pi.is_identity() && self.ell.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &GeElement<S>) -> GeElement<S> {
        let p2 = rhs.pi.zero_based();
        let ell = rhs
            .ell
            .iter()
            .zip(p2)
            .map(|(&l2, &j)| l2.add_exact(self.ell[j]))
            .collect();
        GeElement {
            pi: self.pi.compose(&rhs.pi),
            ell,
        }
    }

    pub fn inverse(&self) -> GeElement<S> {
        let inv = self.pi.inverse();
        // (π, ℓ)^{-1} = (π^{-1}, -ℓ∘π^{-1})
        let ell = inv.zero_based().iter().map(|&j| self.ell[j].neg_exact()).collect();
        GeElement { pi: inv, ell }
    }

    pub fn act(&self, p: GePoint<S>) -> GePoint<S> {
        GePoint {
            a: self.pi.apply(p.a),
            b: p.b.add_exact(self.ell[p.a - 1]),
        }
    }

    pub fn ell_sum(&self) -> S {
        sum_exact(&self.ell)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group elements always serialize")
    }
}

impl<S: Scalar> fmt::Debug for GeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.pi, self.ell)
    }
}

/// Applies one letter of the Gauss-Epple action directly from its rule.
fn ge_apply_letter<S: Scalar>(k: i32, p: GePoint<S>) -> GePoint<S> {
    let kk = k.unsigned_abs() as usize;
    let one = S::one();
    match (k > 0, p.a) {
        (_, a) if a != kk && a != kk + 1 => p,
        (true, a) if a == kk => GePoint::new(kk + 1, p.b),
        (true, _) => GePoint::new(kk, p.b.add_exact(one)),
        (false, a) if a == kk => GePoint::new(kk + 1, p.b.sub_exact(one)),
        (false, _) => GePoint::new(kk, p.b),
    }
}

/// Applies `w` to `p` letter by letter, rightmost letter first.
pub fn ge_apply<S: Scalar>(w: &BraidWord, p: GePoint<S>) -> Result<GePoint<S>> {
    if p.a == 0 || p.a > w.n() {
        return Err(Error::Index(format!("point first component {} not in [1, {}]", p.a, w.n())));
    }
    Ok(w.letters().iter().rev().fold(p, |q, &k| ge_apply_letter(k, q)))
}

fn image_with<S: Scalar>(w: &BraidWord, generator: fn(usize, usize) -> GeElement<S>) -> GeElement<S> {
    let n = w.n();
    let gens: Vec<(GeElement<S>, GeElement<S>)> = (1..n)
        .map(|k| {
            let g = generator(n, k);
            let gi = g.inverse();
            (g, gi)
        })
        .collect();
    w.letters().iter().fold(GeElement::identity(n), |acc, &k| {
        let (g, gi) = &gens[k.unsigned_abs() as usize - 1];
        acc.mul(if k > 0 { g } else { gi })
    })
}

pub fn ge_image<S: Scalar>(w: &BraidWord) -> GeElement<S> {
    image_with(w, GeElement::ge_generator)
}

pub fn symge_image<S: Scalar>(w: &BraidWord) -> GeElement<S> {
    image_with(w, GeElement::symge_generator)
}

pub fn in_kernel_ge(w: &BraidWord) -> bool {
    ge_image::<i64>(w).is_identity()
}

pub fn in_kernel_symge(w: &BraidWord) -> bool {
    symge_image::<i64>(w).is_identity()
}

/// Writhe-permutation kernel: pure with zero writhe.
pub fn in_kernel_wp(w: &BraidWord) -> bool {
    w.writhe() == 0 && w.is_pure()
}

/// Whether some braid has writhe `writhe` and permutation `pi`.
pub fn wp_realizable(writhe: i64, pi: &Permutation) -> bool {
    writhe.rem_euclid(2) as u8 == pi.parity()
}

/// Whether `(pi, ell)` lies in the image of the Gauss-Epple factorization.
/// Requires at least three strands.
pub fn ge_realizable<S: Scalar>(ell: &[S], pi: &Permutation) -> Result<bool> {
    let n = pi.n();
    if ell.len() != n {
        return Err(Error::Dimension { expected: n, got: ell.len() });
    }
    if n < 3 {
        return Err(Error::UnsupportedRank(format!(
            "image characterization needs n >= 3, got n = {n}"
        )));
    }
    let sum_parity = if sum_exact(ell).is_even() { 0 } else { 1 };
    Ok(sum_parity == pi.parity())
}

/// A braid word whose Gauss-Epple image is `(pi, ell)`.
///
/// Realizes `pi` by a reduced word of positive generators, then corrects the
/// linking vector with a pure word built from `σ_k^{±2}` and
/// `(σ_{n-2} σ_{n-1})^{±3}` blocks. The output is free-reduced but otherwise
/// not canonical.
pub fn construct_braid<S: Scalar>(pi: &Permutation, ell: &[S]) -> Result<BraidWord> {
    if !ge_realizable(ell, pi)? {
        return Err(Error::Realizability(format!(
            "sum of linking vector has parity different from permutation {pi}"
        )));
    }
    let n = pi.n();
    let base_letters: Vec<i32> = pi.adjacent_decomposition().into_iter().map(|k| k as i32).collect();
    let base = BraidWord::new(n, base_letters)?;
    let base_ell = ge_image::<S>(&base).ell;

    // the pure correction adds its linking vector directly
    let mut residual: Vec<S> = ell.iter().zip(&base_ell).map(|(&t, &b)| t.sub_exact(b)).collect();
    let mut letters = base.letters().to_vec();

    let push_power = |letters: &mut Vec<i32>, block: &[i32], count: S| {
        let reps = count.abs().to_usize().expect("repetition count fits in usize");
        let block: Vec<i32> = if count < S::zero() {
            block.iter().rev().map(|&k| -k).collect()
        } else {
            block.to_vec()
        };
        for _ in 0..reps {
            letters.extend_from_slice(&block);
        }
    };

    // sweep left to right with σ_k^2, whose linking vector is e_k + e_{k+1}
    for k in 1..n {
        let x = residual[k - 1];
        if !x.is_zero() {
            push_power(&mut letters, &[k as i32, k as i32], x);
            residual[k - 1] = S::zero();
            residual[k] = residual[k].sub_exact(x);
        }
    }
    // what is left is an even multiple of e_n: 2h·e_n = h·(2,2,2) - 2h·(e_{n-2} + e_{n-1})
    let last = residual[n - 1];
    debug_assert!(last.is_even());
    let h = last / (S::one() + S::one());
    if !h.is_zero() {
        let a = (n - 2) as i32;
        let b = (n - 1) as i32;
        push_power(&mut letters, &[a, b, a, b, a, b], h);
        push_power(&mut letters, &[a, a], h.mul_exact(S::from_i64_exact(-2)));
    }
    Ok(BraidWord::new(n, letters)?.free_reduce())
}
