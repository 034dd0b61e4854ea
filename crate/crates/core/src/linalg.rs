//! Exact rank computations.
//!
//! Integer matrices are ranked either modulo a prime (sparse column
//! reduction, with a bit-packed path for GF(2)) or over ℚ by fraction-free
//! elimination. [`Echelon`] is an incremental reduced row echelon form over a
//! [`RingField`], used by the face-ring code.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::{FieldSpec, RingField};

/// A sparse integer matrix stored by columns; each column lists `(row, value)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] += v;
            }
        }
        m
    }

    /// Product `self · other` as a dense matrix.
    pub fn mul_dense(&self, other: &SparseMatrix) -> Vec<Vec<i64>> {
        let a = self.to_dense();
        let b = other.to_dense();
        let inner = self.cols.len();
        let mut out = vec![vec![0i64; other.cols.len()]; self.rows];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..inner).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }
}

/// Rank of an integer matrix over the given field.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p),
        FieldSpec::Rationals => rank_rational(&m.to_dense()),
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v = vec![0u64; words];
        for &(i, x) in col {
            if x.rem_euclid(2) == 1 {
                v[i / 64] ^= 1 << (i % 64);
            }
        }
        while let Some(low) = highest_bit(&v) {
            match &pivots[low] {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Column reduction modulo `p`, pivoting on the largest row index.
fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let p = p as u64;
    let mut owner: Vec<Option<Vec<(usize, u64)>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.cols {
        let mut v: Vec<(usize, u64)> = {
            let mut acc: Vec<(usize, u64)> = col.iter().map(|&(i, x)| (i, x.rem_euclid(p as i64) as u64)).collect();
            acc.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, u64)> = Vec::with_capacity(acc.len());
            for (i, x) in acc {
                match merged.last_mut() {
                    Some(last) if last.0 == i => last.1 = (last.1 + x) % p,
                    _ => merged.push((i, x)),
                }
            }
            merged.retain(|e| e.1 != 0);
            merged
        };
        while let Some(&(low, c)) = v.last() {
            match &owner[low] {
                Some(piv) => {
                    // piv is normalised so its lowest entry is 1
                    let factor = (p - c) % p;
                    v = axpy_sparse(&v, piv, factor, p);
                }
                None => {
                    let inv = inv_mod(c, p);
                    let normed: Vec<(usize, u64)> = v.iter().map(|&(i, x)| (i, x * inv % p)).collect();
                    owner[low] = Some(normed);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a + f·b` for sorted sparse vectors mod p, dropping zeros.
fn axpy_sparse(a: &[(usize, u64)], b: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (idx, val) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            a[i - 1]
        } else if i >= a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, f * b[j - 1].1 % p)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, (a[i - 1].1 + f * b[j - 1].1) % p)
        };
        if val != 0 {
            out.push((idx, val));
        }
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i64) as u64
}

/// Rank over ℚ by Bareiss fraction-free elimination. Runs in checked `i128`
/// and restarts with big integers if an intermediate minor overflows.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].unsigned_abs()) else {
            continue;
        };
        a.swap(r, piv);
        let pv = a[r][c];
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            for j in c + 1..cols {
                let num = pv.checked_mul(row[j])?.checked_sub(f.checked_mul(pivot_row[j])?)?;
                row[j] = num / prev;
            }
            row[c] = 0;
        }
        prev = pv;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].abs()) else {
            continue;
        };
        a.swap(r, piv);
        let pv = a[r][c].clone();
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                row[j] = (&pv * &row[j] - &f * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        r += 1;
    }
    r
}

/// Incrementally built reduced row echelon form over a [`RingField`].
///
/// Rows are dense with `dim` columns. Every stored row has a 1 in its pivot
/// column and zeros in all other pivot columns, so reducing a vector only
/// touches the pivot columns where it is nonzero.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: RingField,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: RingField, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new(), pivot_row: vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduces `v` in place so that it vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for c in 0..self.dim {
            let x = v[c];
            if x == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let neg = f.neg(x);
                for (a, &b) in v.iter_mut().zip(&self.rows[r]) {
                    if b != 0 {
                        *a = f.add(*a, f.mul(neg, b));
                    }
                }
            }
        }
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field.clone();
        let inv = f.inv(v[c]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let coef = row[c];
            if coef != 0 {
                let neg = f.neg(coef);
                for (a, &b) in row.iter_mut().zip(&v) {
                    if b != 0 {
                        *a = f.add(*a, f.mul(neg, b));
                    }
                }
            }
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(v);
        true
    }
}

/// Rank of a dense matrix (given by rows) over a [`RingField`].
pub fn rank_ring(field: &RingField, rows: impl IntoIterator<Item = Vec<u32>>, dim: usize) -> usize {
    let mut e = Echelon::new(field.clone(), dim);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(dense: &[Vec<i64>]) -> SparseMatrix {
        let rows = dense.len();
        let ncols = dense.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| (0..rows).filter(|&i| dense[i][j] != 0).map(|i| (i, dense[i][j])).collect())
            .collect();
        SparseMatrix { rows, cols }
    }

    #[test]
    fn ranks_agree_across_fields_on_generic_matrix() {
        let m = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        for field in [FieldSpec::Rationals, FieldSpec::Prime(5), FieldSpec::Prime(32003)] {
            assert_eq!(rank(&sparse(&m), field), 3, "{field}");
        }
        let singular = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        assert_eq!(rank(&sparse(&singular), FieldSpec::Rationals), 2);
    }

    #[test]
    fn characteristic_dependent_rank() {
        // determinant 2: full rank over Q and GF(3), rank 1 over GF(2)
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&sparse(&m), FieldSpec::Rationals), 2);
        assert_eq!(rank(&sparse(&m), FieldSpec::Prime(3)), 2);
        assert_eq!(rank(&sparse(&m), FieldSpec::Prime(2)), 1);
    }

    #[test]
    fn bareiss_falls_back_on_overflow() {
        let big = 1i64 << 62;
        let m = vec![vec![big, big - 1, 3], vec![big - 5, big, 7], vec![1, 2, big]];
        assert_eq!(rank_rational(&m), 3);
        let dependent = vec![vec![big, 2], vec![big, 2]];
        assert_eq!(rank_rational(&dependent), 1);
    }

    #[test]
    fn echelon_tracks_span() {
        let f = RingField::prime(7).unwrap();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(!e.insert(vec![2, 4, 6]));
        assert!(e.insert(vec![0, 1, 1]));
        assert_eq!(e.free_columns(), vec![2]);
        let mut v = vec![1, 3, 4];
        e.reduce(&mut v);
        assert_eq!(v, vec![0, 0, 0]);
        assert_eq!(rank_ring(&RingField::prime(7).unwrap(), vec![vec![1, 0], vec![0, 1], vec![1, 1]], 2), 2);
    }
}
