//! Exact inertia of integer symmetric matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Largest dimension accepted by [`signature_oracle`].
pub const ORACLE_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("row {row} has length {len}, expected {dim}")]
    Ragged { row: usize, len: usize, dim: usize },
    #[error("oracle handles dimension at most {max}, got {dim}")]
    DimensionTooLarge { dim: usize, max: usize },
}

impl LinalgError {
    pub fn code(&self) -> &'static str {
        match self {
            LinalgError::Asymmetric { .. } | LinalgError::Ragged { .. } => "linalg.asymmetric",
            LinalgError::DimensionTooLarge { .. } => "linalg.dimension",
        }
    }
}

/// Square symmetric matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymIntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl SymIntMatrix {
    pub fn zero(dim: usize) -> Self {
        SymIntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let dim = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(LinalgError::Ragged {
                    row,
                    len: r.len(),
                    dim,
                });
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(LinalgError::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymIntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn negated(&self) -> Self {
        SymIntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let dim = self.dim + other.dim;
        let mut m = Self::zero(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.entries[i * dim + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.entries[(self.dim + i) * dim + self.dim + j] = other.get(i, j).clone();
            }
        }
        m
    }

    /// `Bᵀ M B` where the columns of `B` are the given vectors.
    pub fn restrict(&self, columns: &[Vec<i64>]) -> Self {
        let k = columns.len();
        let mv: Vec<Vec<BigInt>> = columns
            .iter()
            .map(|v| {
                (0..self.dim)
                    .map(|i| {
                        (0..self.dim)
                            .filter(|&j| v[j] != 0)
                            .map(|j| self.get(i, j) * v[j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let mut out = Self::zero(k);
        for a in 0..k {
            for b in 0..k {
                out.entries[a * k + b] = (0..self.dim)
                    .filter(|&i| columns[a][i] != 0)
                    .map(|i| &mv[b][i] * columns[a][i])
                    .sum();
            }
        }
        out
    }

    /// `Sᵀ M S` for a square integer matrix `S` given by rows.
    pub fn congruent(&self, s: &[Vec<BigInt>]) -> Self {
        let n = self.dim;
        let ms: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.get(i, k) * &s[k][j]).sum())
                    .collect()
            })
            .collect();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = (0..n).map(|k| &s[k][i] * &ms[k][j]).sum();
            }
        }
        out
    }
}

/// Inertia: positive and negative indices and nullity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SignatureTriple {
    pub p: usize,
    pub q: usize,
    pub z: usize,
}

impl SignatureTriple {
    pub fn signature(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn rank(&self) -> usize {
        self.p + self.q
    }
}

/// Inertia by symmetric Gaussian elimination over the rationals.
///
/// Pivots on the first nonzero diagonal entry. When the remaining diagonal
/// vanishes but an off-diagonal entry `a_ij` does not, the pair `(i, j)`
/// spans a hyperbolic plane and is split off as one positive and one
/// negative direction.
pub fn signature(m: &SymIntMatrix) -> SignatureTriple {
    let mut a: Vec<Vec<BigRational>> = m
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut active: Vec<usize> = (0..m.dim()).collect();
    let mut t = SignatureTriple::default();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let i = active.remove(pos);
            let piv = a[i][i].clone();
            if piv.is_positive() {
                t.p += 1;
            } else {
                t.q += 1;
            }
            for &k in &active {
                if a[k][i].is_zero() {
                    continue;
                }
                let f = &a[k][i] / &piv;
                for &l in &active {
                    let delta = &f * &a[i][l];
                    a[k][l] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            t.z += active.len();
            break;
        };
        active.retain(|&k| k != i && k != j);
        t.p += 1;
        t.q += 1;
        // With a_ii = a_jj = 0 the block [[0, c], [c, 0]] has inverse
        // [[0, 1/c], [1/c, 0]], which gives this Schur complement.
        let c = a[i][j].clone();
        for &k in &active {
            for &l in &active {
                let delta = (&a[k][i] * &a[j][l] + &a[k][j] * &a[i][l]) / &c;
                a[k][l] -= delta;
            }
        }
    }
    t
}

/// Coefficients of `det(xI - M)`, lowest degree first.
///
/// Faddeev–LeVerrier recurrence; every division is exact over the integers.
pub fn characteristic_polynomial(m: &SymIntMatrix) -> Vec<BigInt> {
    let n = m.dim();
    let a = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|l| &a[i][l] * &mk[l][j]).sum())
                    .collect()
            })
            .collect();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(A M_k) / k
        let tr: BigInt = (0..n)
            .map(|i| (0..n).map(|l| &a[i][l] * &mk[l][i]).sum::<BigInt>())
            .sum();
        coeffs[n - k] = -(tr / BigInt::from(k));
    }
    coeffs
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Independent inertia check through the characteristic polynomial.
///
/// All roots are real, so Descartes' rule of signs counts the positive roots
/// of `p(x)` and of `p(-x)` exactly.
pub fn signature_oracle(m: &SymIntMatrix) -> Result<SignatureTriple, LinalgError> {
    if m.dim() > ORACLE_MAX_DIM {
        return Err(LinalgError::DimensionTooLarge {
            dim: m.dim(),
            max: ORACLE_MAX_DIM,
        });
    }
    let p = characteristic_polynomial(m);
    let z = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let pos = sign_changes(p.iter());
    let reflected: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    let neg = sign_changes(reflected.iter());
    Ok(SignatureTriple { p: pos, q: neg, z })
}
