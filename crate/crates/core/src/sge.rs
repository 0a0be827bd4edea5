//! The super-Gauss-Epple homomorphism into (zero-diagonal matrices) ⋊ `S_n`,
//! pure-braid generators, and the 1-cocycle `F̄: S_n → antisymmetric matrices`.
//!
//! Permutations act on matrices by simultaneous row and column relabeling,
//! `(π·M)[π(i), π(j)] = M[i, j]`, and the product is
//! `(M1, π1)·(M2, π2) = (M1 + π1·M2, π1∘π2)`. The generator `σ_i` maps to
//! `(O_{i,i+1}, (i, i+1))`.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::scalar::{sum_exact, Scalar};

/// Dense `n × n` integer matrix, one-indexed accessors, row-major storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<S> {
    n: usize,
    data: Vec<S>,
}

/// SGE matrices are square matrices with zero diagonal.
pub type SgeMatrix<S> = SquareMatrix<S>;

impl<S: Scalar> SquareMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    /// `O_{i,j}`: a single 1 at row `i`, column `j`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(i, j, S::one());
        m
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (1..=self.n).all(|i| self.get(i, i).is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.transpose()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        SquareMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a.add_exact(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        SquareMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a.sub_exact(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| a.neg_exact()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        SquareMatrix { n, data }
    }

    /// `π·M`, defined by `(π·M)[π(i), π(j)] = M[i, j]`.
    pub fn permuted(&self, pi: &Permutation) -> Self {
        let n = self.n;
        assert_eq!(pi.n(), n);
        let p = pi.zero_based();
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[p[i] * n + p[j]] = self.data[i * n + j];
            }
        }
        SquareMatrix { n, data }
    }

    pub fn row_sums(&self) -> Vec<S> {
        self.data.chunks(self.n).map(sum_exact).collect()
    }

    pub fn col_sums(&self) -> Vec<S> {
        self.transpose().row_sums()
    }
}

impl<S: Scalar> fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl<S: Scalar> Serialize for SquareMatrix<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.rows().serialize(serializer)
    }
}

/// An antisymmetric integer matrix, `A = -Aᵀ`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent, bound = "S: Scalar")]
pub struct AntisymMatrix<S>(SquareMatrix<S>);

impl<S: Scalar> AntisymMatrix<S> {
    pub fn new(m: SquareMatrix<S>) -> Result<Self> {
        if m.neg() != m.transpose() {
            return Err(Error::Matrix("matrix is not antisymmetric".into()));
        }
        Ok(AntisymMatrix(m))
    }

    pub fn zeros(n: usize) -> Self {
        AntisymMatrix(SquareMatrix::zeros(n))
    }

    /// `O_{i,j} - O_{j,i}`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        AntisymMatrix(SquareMatrix::unit(n, i, j).sub(&SquareMatrix::unit(n, j, i)))
    }

    pub fn matrix(&self) -> &SquareMatrix<S> {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.0.get(i, j)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        AntisymMatrix(self.0.add(&rhs.0))
    }

    pub fn permuted(&self, pi: &Permutation) -> Self {
        AntisymMatrix(self.0.permuted(pi))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<S: Scalar> fmt::Debug for AntisymMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// An element `(M, π)` of (zero-diagonal matrices) ⋊ `S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SgeElement<S> {
    m: SquareMatrix<S>,
    pi: Permutation,
}

impl<S: Scalar> SgeElement<S> {
    pub fn new(m: SquareMatrix<S>, pi: Permutation) -> Result<Self> {
        if m.n() != pi.n() {
            return Err(Error::Dimension { expected: pi.n(), got: m.n() });
        }
        if !m.has_zero_diagonal() {
            return Err(Error::Matrix("SGE matrices must have zero diagonal".into()));
        }
        Ok(SgeElement { m, pi })
    }

    pub fn identity(n: usize) -> Self {
        SgeElement {
            m: SquareMatrix::zeros(n),
            pi: Permutation::identity(n),
        }
    }

    /// `(O_{k,k+1}, (k, k+1))`.
    pub fn generator(n: usize, k: usize) -> Self {
        SgeElement {
            m: SquareMatrix::unit(n, k, k + 1),
            pi: Permutation::adjacent(n, k),
        }
    }

    pub fn m(&self) -> &SquareMatrix<S> {
        &self.m
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn is_identity(&self) -> bool {
        self.pi.is_identity() && self.m.is_zero()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        SgeElement {
            m: self.m.add(&rhs.m.permuted(&self.pi)),
            pi: self.pi.compose(&rhs.pi),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.pi.inverse();
        SgeElement {
            m: self.m.permuted(&inv).neg(),
            pi: inv,
        }
    }

    /// `M - Mᵀ`.
    pub fn antisymmetric_part(&self) -> AntisymMatrix<S> {
        AntisymMatrix(self.m.sub(&self.m.transpose()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group elements always serialize")
    }
}

impl<S: Scalar> Serialize for SgeElement<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = serializer.serialize_struct("SgeElement", 2)?;
        st.serialize_field("pi", &self.pi)?;
        st.serialize_field("m", &self.m)?;
        st.end()
    }
}

impl<S: Scalar> fmt::Debug for SgeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.m, self.pi)
    }
}

pub fn sge_image<S: Scalar>(w: &BraidWord) -> SgeElement<S> {
    let n = w.n();
    let gens: Vec<(SgeElement<S>, SgeElement<S>)> = (1..n)
        .map(|k| {
            let g = SgeElement::generator(n, k);
            let gi = g.inverse();
            (g, gi)
        })
        .collect();
    w.letters().iter().fold(SgeElement::identity(n), |acc, &k| {
        let (g, gi) = &gens[k.unsigned_abs() as usize - 1];
        acc.mul(if k > 0 { g } else { gi })
    })
}

pub fn in_kernel_sge(w: &BraidWord) -> bool {
    sge_image::<i64>(w).is_identity()
}

/// `A_{i,j} = σ_{j-1} … σ_{i+1} σ_i² σ_{i+1}^{-1} … σ_{j-1}^{-1}`.
pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    if i < 1 || i >= j || j > n {
        return Err(Error::Index(format!("pure generator A_({i},{j}) needs 1 <= i < j <= {n}")));
    }
    let mut letters: Vec<i32> = (i + 1..j).rev().map(|k| k as i32).collect();
    letters.push(i as i32);
    letters.push(i as i32);
    letters.extend((i + 1..j).map(|k| -(k as i32)));
    BraidWord::new(n, letters)
}

/// `F(w) = M - Mᵀ` where `sge_image(w) = (M, π)`.
pub fn cocycle_f<S: Scalar>(w: &BraidWord) -> AntisymMatrix<S> {
    sge_image::<S>(w).antisymmetric_part()
}

/// `F̄(π)` via `F̄(τϱ) = F̄(τ) + τ·F̄(ϱ)` over a reduced adjacent-transposition
/// decomposition, with `F̄((k, k+1)) = O_{k,k+1} - O_{k+1,k}`.
pub fn cocycle_fbar<S: Scalar>(pi: &Permutation) -> AntisymMatrix<S> {
    let n = pi.n();
    pi.adjacent_decomposition()
        .into_iter()
        .rev()
        .fold(AntisymMatrix::zeros(n), |acc, k| {
            let tau = Permutation::adjacent(n, k);
            AntisymMatrix::elementary(n, k, k + 1).add(&acc.permuted(&tau))
        })
}

/// Whether `(m, pi)` lies in the SGE image: `m - mᵀ == F̄(pi)`.
pub fn sge_membership<S: Scalar>(m: &SquareMatrix<S>, pi: &Permutation) -> Result<bool> {
    if m.n() != pi.n() {
        return Err(Error::Dimension { expected: pi.n(), got: m.n() });
    }
    if !m.has_zero_diagonal() {
        return Err(Error::Matrix("SGE matrices must have zero diagonal".into()));
    }
    Ok(m.sub(&m.transpose()) == *cocycle_fbar::<S>(pi).matrix())
}
