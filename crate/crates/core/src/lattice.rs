//! Exact integer kernels by unimodular column reduction.

use crate::scalar::Scalar;

/// A basis of the integer lattice `{x ∈ Z^cols : A x = 0}`, in row Hermite
/// normal form (so the result is canonical for a given lattice).
///
/// Works on the augmented matrix `[A; I]`: column operations that bring `A`
/// to echelon form leave, under every zero column of `A`, a kernel vector in
/// the identity block. The operations are unimodular, so these vectors span
/// the full lattice rather than a finite-index sublattice.
pub fn integer_kernel<S: Scalar>(rows: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    for r in rows {
        assert_eq!(r.len(), cols, "ragged constraint matrix");
    }
    let m = rows.len();
    // columns of [A; I]
    let mut c: Vec<Vec<S>> = (0..cols)
        .map(|j| {
            let mut col: Vec<S> = rows.iter().map(|r| r[j]).collect();
            col.extend((0..cols).map(|i| if i == j { S::one() } else { S::zero() }));
            col
        })
        .collect();

    let mut pivot = 0;
    for r in 0..m {
        if pivot == cols {
            break;
        }
        // Euclid across columns pivot.. until only one has a nonzero entry in row r
        loop {
            let best = (pivot..cols)
                .filter(|&j| !c[j][r].is_zero())
                .min_by_key(|&j| c[j][r].abs());
            let Some(best) = best else { break };
            c.swap(pivot, best);
            let p = c[pivot][r];
            let mut done = true;
            for j in pivot + 1..cols {
                let x = c[j][r];
                if x.is_zero() {
                    continue;
                }
                let q = x / p;
                if !q.is_zero() {
                    let (head, tail) = c.split_at_mut(j);
                    axpy(&mut tail[0], q.neg_exact(), &head[pivot]);
                }
                if !c[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }

    let kernel: Vec<Vec<S>> = c[pivot..].iter().map(|col| col[m..].to_vec()).collect();
    hermite_rows(kernel)
}

// y += k x
fn axpy<S: Scalar>(y: &mut [S], k: S, x: &[S]) {
    for (a, &b) in y.iter_mut().zip(x) {
        *a = a.add_exact(k.mul_exact(b));
    }
}

/// Row Hermite normal form of a set of linearly independent integer vectors.
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
pub fn hermite_rows<S: Scalar>(mut v: Vec<Vec<S>>) -> Vec<Vec<S>> {
    let Some(width) = v.first().map(|r| r.len()) else {
        return v;
    };
    let mut row = 0;
    for col in 0..width {
        if row == v.len() {
            break;
        }
        loop {
            let best = (row..v.len())
                .filter(|&i| !v[i][col].is_zero())
                .min_by_key(|&i| v[i][col].abs());
            let Some(best) = best else { break };
            v.swap(row, best);
            let p = v[row][col];
            let mut done = true;
            for i in row + 1..v.len() {
                let q = v[i][col] / p;
                if !q.is_zero() {
                    let (head, tail) = v.split_at_mut(i);
                    axpy(&mut tail[0], q.neg_exact(), &head[row]);
                }
                if !v[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if row < v.len() && !v[row][col].is_zero() {
            if v[row][col] < S::zero() {
                for x in v[row].iter_mut() {
                    *x = x.neg_exact();
                }
            }
            let p = v[row][col];
            for i in 0..row {
                // floor division so the remainder is nonnegative
                let x = v[i][col];
                let mut q = x / p;
                if x % p < S::zero() {
                    q = q - S::one();
                }
                if !q.is_zero() {
                    let (head, tail) = v.split_at_mut(row);
                    axpy(&mut head[i], q.neg_exact(), &tail[0]);
                }
            }
            row += 1;
        }
    }
    v.retain(|r| r.iter().any(|x| !x.is_zero()));
    v
}

/// Matrix-vector product with overflow checking.
pub fn apply<S: Scalar>(rows: &[Vec<S>], x: &[S]) -> Vec<S> {
    rows.iter()
        .map(|r| r.iter().zip(x).fold(S::zero(), |acc, (&a, &b)| acc.add_exact(a.mul_exact(b))))
        .collect()
}

/// Rank over the rationals (equal to the rank of the row lattice).
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let nonzero: Vec<Vec<S>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    if nonzero.is_empty() {
        return 0;
    }
    let cols = nonzero[0].len();
    cols - integer_kernel(&nonzero, cols).len()
}
