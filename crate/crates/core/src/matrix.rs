//! The 0/1 matrix `M(λ/μ)`, the difference matrix `A(λ/μ)`, exact
//! determinants and the column/row shift transforms relating `A` matrices
//! along a strip chain.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Dense square integer matrix, row-major.
///
/// Serialises as an array of rows. The 0x0 matrix is allowed and has
/// determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        IntMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        IntMatrix::from_fn(dim, |i, j| i64::from(i == j))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadIndices { first: dim, second: 0, dim });
        }
        Ok(IntMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

/// Shifted parts `p_i - i` for `i = 1..=dim`.
fn shifted(p: &Partition, dim: usize) -> Vec<i64> {
    (0..dim).map(|i| p.part(i) as i64 - (i as i64 + 1)).collect()
}

fn check_contained(outer: &Partition, inner: &Partition) -> Result<()> {
    if outer.contains(inner) {
        Ok(())
    } else {
        Err(Error::NotContained { outer: outer.clone(), inner: inner.clone() })
    }
}

/// `m_ij = 1` iff `λ_i - i >= μ_j - j` and `n | (λ_i - i - μ_j + j)`;
/// size `ℓ(λ)`, `μ` zero-padded.
pub fn build_m(outer: &Partition, inner: &Partition, n: usize) -> Result<IntMatrix> {
    check_contained(outer, inner)?;
    assert!(n >= 1, "strip modulus must be positive");
    let dim = outer.length();
    let rows = shifted(outer, dim);
    let cols = shifted(inner, dim);
    let n = n as i64;
    Ok(IntMatrix::from_fn(dim, |i, j| {
        let diff = rows[i] - cols[j];
        i64::from(diff >= 0 && diff % n == 0)
    }))
}

/// `a_ij = λ_i - i - μ_j + j`; size `ℓ(λ)`, `μ` zero-padded.
pub fn build_a(outer: &Partition, inner: &Partition) -> Result<IntMatrix> {
    build_a_padded(outer, inner, outer.length())
}

/// As [`build_a`] but with both partitions padded to `dim` rows, for
/// comparing intermediate shapes of a chain inside a longer outer shape.
pub fn build_a_padded(outer: &Partition, inner: &Partition, dim: usize) -> Result<IntMatrix> {
    check_contained(outer, inner)?;
    let dim = dim.max(outer.length());
    let rows = shifted(outer, dim);
    let cols = shifted(inner, dim);
    Ok(IntMatrix::from_fn(dim, |i, j| rows[i] - cols[j]))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    let dim = m.dim();
    if dim == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..dim).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..dim - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..dim).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[dim - 1][dim - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `C^p_{k,l}`: drop column `k`, shift columns `k+1..=l` one place left and
/// put the old column `k` plus `p·n` at position `l` (1-based). `k == l`
/// just adds `p·n` to column `k`.
pub fn col_transform(m: &IntMatrix, k: usize, l: usize, p: usize, n: usize) -> Result<IntMatrix> {
    let dim = m.dim();
    if k == 0 || k > l || l > dim {
        return Err(Error::BadIndices { first: k, second: l, dim });
    }
    let shift = (p * n) as i64;
    let (k, l) = (k - 1, l - 1);
    Ok(IntMatrix::from_fn(dim, |i, j| match j {
        j if j < k || j > l => m.get(i, j),
        j if j == l => m.get(i, k) + shift,
        j => m.get(i, j + 1),
    }))
}

/// `R^p_{r,s}`: drop row `r`, shift rows `s..=r-1` one place down and put
/// the old row `r` plus `p·n` at position `s` (1-based). `r == s` just adds
/// `p·n` to row `r`.
pub fn row_transform(m: &IntMatrix, r: usize, s: usize, p: usize, n: usize) -> Result<IntMatrix> {
    let dim = m.dim();
    if s == 0 || r < s || r > dim {
        return Err(Error::BadIndices { first: r, second: s, dim });
    }
    let shift = (p * n) as i64;
    let (r, s) = (r - 1, s - 1);
    Ok(IntMatrix::from_fn(dim, |i, j| match i {
        i if i < s || i > r => m.get(i, j),
        i if i == s => m.get(r, j) + shift,
        i => m.get(i - 1, j),
    }))
}
