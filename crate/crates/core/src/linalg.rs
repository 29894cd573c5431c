//! Exact rank computations over `Q` and `F_p`.
//!
//! Over `Q` ranks come from fraction-free (Bareiss) elimination on the
//! integer matrix. The elimination runs in checked `i128` and restarts in
//! arbitrary precision if an intermediate minor ever overflows. Over `F_p`
//! plain Gaussian elimination on residues is used. No floating point.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The coefficient field `K`: `Q` (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// `0` selects `Q`; anything else must be a prime below `2^32`.
    pub fn new(characteristic: u64) -> Result<Self> {
        match u32::try_from(characteristic) {
            Ok(0) => Ok(Self::RATIONALS),
            Ok(p) if is_prime(p) => Ok(FieldSpec { characteristic: p }),
            _ => Err(Error::BadCharacteristic(characteristic)),
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self · rhs`; panics on shape mismatch.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    /// Rank over the given field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field.characteristic() {
            0 => rank_bareiss_i128(self).unwrap_or_else(|| rank_bareiss_big(self)),
            p => rank_mod_p(self, p),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        f.write_str("]")
    }
}

/// Returns `None` if an intermediate value leaves the `i128` range.
fn rank_bareiss_i128(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<i128> = m.data.iter().map(|&x| i128::from(x)).collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col];
        for i in rank + 1..rows {
            let f = a[i * cols + col];
            for j in col + 1..cols {
                let lhs = p.checked_mul(a[i * cols + j])?;
                let rhs = f.checked_mul(a[rank * cols + j])?;
                a[i * cols + j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i * cols + col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_big(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<BigInt> = m.data.iter().map(|&x| BigInt::from(x)).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let p = a[rank * cols + col].clone();
        for i in rank + 1..rows {
            let f = a[i * cols + col].clone();
            for j in col + 1..cols {
                let v = (&p * &a[i * cols + j] - &f * &a[rank * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
            a[i * cols + col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &IntMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<u64> = m
        .data
        .iter()
        .map(|&x| x.rem_euclid(p as i64) as u64)
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for i in rank + 1..rows {
            let f = a[i * cols + col] * inv % p;
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let sub = f * a[rank * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
