//! Row-major sparse matrices over exact scalars.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::qring::{inv_mod, mul_mod, LaurentPoly, RatAcc, RatFun};

pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    type Acc: Default;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn acc_add(acc: &mut Self::Acc, a: &Self);
    fn acc_add_prod(acc: &mut Self::Acc, a: &Self, b: &Self);
    fn acc_finish(acc: Self::Acc) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Scalar for LaurentPoly {
    type Acc = LaurentPoly;
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn acc_add(acc: &mut Self, a: &Self) {
        *acc = LaurentPoly::add(acc, a);
    }
    fn acc_add_prod(acc: &mut Self, a: &Self, b: &Self) {
        *acc = LaurentPoly::add(acc, &LaurentPoly::mul(a, b));
    }
    fn acc_finish(acc: Self) -> Self {
        acc
    }
}

impl Scalar for RatFun {
    type Acc = RatAcc;
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFun::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFun::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn acc_add(acc: &mut RatAcc, a: &Self) {
        acc.add(a);
    }
    fn acc_add_prod(acc: &mut RatAcc, a: &Self, b: &Self) {
        acc.add_prod(a, b);
    }
    fn acc_finish(acc: RatAcc) -> Self {
        acc.finish()
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

/// Integers modulo [`PRIME`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl Fp {
    pub fn inv(self) -> Option<Fp> {
        (self.0 != 0).then(|| Fp(inv_mod(self.0, PRIME)))
    }
}

impl Scalar for Fp {
    type Acc = u128;
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % PRIME)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(mul_mod(self.0, o.0, PRIME))
    }
    fn neg(&self) -> Self {
        Fp((PRIME - self.0) % PRIME)
    }
    fn acc_add(acc: &mut u128, a: &Self) {
        *acc = (*acc + a.0 as u128) % PRIME as u128;
    }
    fn acc_add_prod(acc: &mut u128, a: &Self, b: &Self) {
        *acc = (*acc + a.0 as u128 * b.0 as u128) % PRIME as u128;
    }
    fn acc_finish(acc: u128) -> Self {
        Fp(acc as u64)
    }
}

/// Sparse matrix; each row holds `(column, value)` pairs sorted by column,
/// with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(u32, S)>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { nrows: n, ncols: n, rows: (0..n).map(|i| vec![(i as u32, S::one())]).collect() }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut rows: Vec<Vec<(u32, S)>> = vec![Vec::new(); nrows];
        for (i, j, v) in entries {
            assert!(i < nrows && j < ncols, "entry ({i},{j}) outside {nrows}x{ncols}");
            rows[i].push((j as u32, v));
        }
        for r in &mut rows {
            r.sort_by_key(|e| e.0);
            let mut out: Vec<(u32, S)> = Vec::with_capacity(r.len());
            for (j, v) in r.drain(..) {
                match out.last_mut() {
                    Some((k, w)) if *k == j => *w = w.add(&v),
                    _ => out.push((j, v)),
                }
            }
            out.retain(|e| !e.1.is_zero());
            *r = out;
        }
        SparseMatrix { nrows, ncols, rows }
    }

    /// Builds from sorted rows; zeros are dropped.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(u32, S)>>) -> Self {
        let rows: Vec<Vec<(u32, S)>> = rows.into_iter().map(|r| r.into_iter().filter(|e| !e.1.is_zero()).collect()).collect();
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        SparseMatrix { nrows: rows.len(), ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[(u32, S)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&S> {
        let r = &self.rows[i];
        r.binary_search_by_key(&(j as u32), |e| e.0).ok().map(|k| &r[k].1)
    }

    pub fn get_or_zero(&self, i: usize, j: usize) -> S {
        self.get(i, j).cloned().unwrap_or_else(S::zero)
    }

    /// All stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j as usize, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        SparseMatrix::from_rows(self.ncols, self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, f(v))).collect()).collect())
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<SparseMatrix<T>> {
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (j, v) in r {
                out.push((*j, f(v)?));
            }
            rows.push(out);
        }
        Some(SparseMatrix::from_rows(self.ncols, rows))
    }

    /// `self * o`.
    pub fn mul(&self, o: &SparseMatrix<S>) -> Result<SparseMatrix<S>> {
        if self.ncols != o.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows, self.ncols, o.nrows, o.ncols
            )));
        }
        let mut acc: Vec<Option<S::Acc>> = (0..o.ncols).map(|_| None).collect();
        let mut touched: Vec<u32> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            for (k, a) in r {
                for (j, b) in &o.rows[*k as usize] {
                    let slot = &mut acc[*j as usize];
                    if slot.is_none() {
                        *slot = Some(S::Acc::default());
                        touched.push(*j);
                    }
                    S::acc_add_prod(slot.as_mut().unwrap(), a, b);
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                let v = S::acc_finish(acc[j as usize].take().unwrap());
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            rows.push(out);
        }
        Ok(SparseMatrix { nrows: self.nrows, ncols: o.ncols, rows })
    }

    fn combine(&self, o: &SparseMatrix<S>, f: impl Fn(Option<&S>, Option<&S>) -> S) -> Result<SparseMatrix<S>> {
        if (self.nrows, self.ncols) != (o.nrows, o.ncols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.nrows, self.ncols, o.nrows, o.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let (col, v) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                        i += 1;
                        (a[i - 1].0, f(Some(&a[i - 1].1), None))
                    } else if i == a.len() || b[j].0 < a[i].0 {
                        j += 1;
                        (b[j - 1].0, f(None, Some(&b[j - 1].1)))
                    } else {
                        i += 1;
                        j += 1;
                        (a[i - 1].0, f(Some(&a[i - 1].1), Some(&b[j - 1].1)))
                    };
                    if !v.is_zero() {
                        out.push((col, v));
                    }
                }
                out
            })
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows })
    }

    pub fn add(&self, o: &SparseMatrix<S>) -> Result<SparseMatrix<S>> {
        self.combine(o, |a, b| match (a, b) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => S::zero(),
        })
    }

    pub fn sub(&self, o: &SparseMatrix<S>) -> Result<SparseMatrix<S>> {
        self.combine(o, |a, b| match (a, b) {
            (Some(x), Some(y)) => x.sub(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.neg(),
            (None, None) => S::zero(),
        })
    }

    pub fn scale(&self, c: &S) -> SparseMatrix<S> {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|v| v.mul(c))
    }

    pub fn transpose(&self) -> SparseMatrix<S> {
        let mut rows: Vec<Vec<(u32, S)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j as usize].push((i as u32, v.clone()));
            }
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// `self (x) id_d` in row-major tuple order.
    pub fn kron_id(&self, d: usize) -> SparseMatrix<S> {
        let mut rows = Vec::with_capacity(self.nrows * d);
        for r in &self.rows {
            for k in 0..d {
                rows.push(r.iter().map(|(j, v)| (*j * d as u32 + k as u32, v.clone())).collect());
            }
        }
        SparseMatrix { nrows: self.nrows * d, ncols: self.ncols * d, rows }
    }

    /// `id_d (x) self` in row-major tuple order.
    pub fn id_kron(&self, d: usize) -> SparseMatrix<S> {
        let mut rows = Vec::with_capacity(self.nrows * d);
        for k in 0..d {
            for r in &self.rows {
                rows.push(r.iter().map(|(j, v)| (*j + (k * self.ncols) as u32, v.clone())).collect());
            }
        }
        SparseMatrix { nrows: self.nrows * d, ncols: self.ncols * d, rows }
    }

    pub fn trace(&self) -> S {
        let mut acc = S::Acc::default();
        for i in 0..self.nrows.min(self.ncols) {
            if let Some(v) = self.get(i, i) {
                S::acc_add(&mut acc, v);
            }
        }
        S::acc_finish(acc)
    }

    /// Applies the matrix to a sparse column vector.
    pub fn apply(&self, v: &[(u32, S)]) -> Vec<(u32, S)> {
        let dense: std::collections::HashMap<u32, &S> = v.iter().map(|(i, x)| (*i, x)).collect();
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = S::Acc::default();
            let mut any = false;
            for (j, a) in r {
                if let Some(x) = dense.get(j) {
                    S::acc_add_prod(&mut acc, a, x);
                    any = true;
                }
            }
            if any {
                let s = S::acc_finish(acc);
                if !s.is_zero() {
                    out.push((i as u32, s));
                }
            }
        }
        out
    }
}

/// Rank of a dense matrix over `F_p` by row reduction; also returns the pivot
/// columns.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> (usize, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = inv_mod(rows[rank][c], PRIME);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, PRIME);
        }
        let pivot_row = rows[rank].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && r[c] != 0 {
                let f = r[c];
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x = (*x + PRIME - mul_mod(f, *y, PRIME)) % PRIME;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (rank, pivots)
}
