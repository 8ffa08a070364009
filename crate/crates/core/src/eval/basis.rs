//! Tensor bases: tuples of subsets of `{1..n}` with prescribed sizes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The `a`-subsets of `{1..n}` as bitmasks in colexicographic order, which is
/// increasing numeric order of the masks.
pub fn subsets(n: usize, a: usize) -> Arc<Vec<u32>> {
    static T: OnceLock<Mutex<HashMap<(usize, usize), Arc<Vec<u32>>>>> = OnceLock::new();
    let t = T.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = t.lock().unwrap().get(&(n, a)) {
        return v.clone();
    }
    let v: Arc<Vec<u32>> = Arc::new((0u32..1 << n).filter(|m| m.count_ones() as usize == a).collect());
    t.lock().unwrap().insert((n, a), v.clone());
    v
}

/// Colexicographic rank of a subset among subsets of the same size.
pub fn subset_rank(mask: u32) -> usize {
    let mut r = 0;
    let mut i = 0;
    let mut m = mask;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        i += 1;
        r += binom(c, i);
        m &= m - 1;
    }
    r
}

/// `l(S, T)`: pairs `i < j` with `i` in `S` and `j` in `T`.
pub fn ell(s: u32, t: u32) -> u32 {
    let mut total = 0;
    let mut m = t;
    while m != 0 {
        let j = m.trailing_zeros();
        total += (s & ((1u32 << j) - 1)).count_ones();
        m &= m - 1;
    }
    total
}

/// Basis of `V_{a_1} (x) ... (x) V_{a_d}`, tuples in row-major order. Factors
/// labeled 0 or n have dimension one, so removing them leaves indices intact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TensorBasis {
    pub n: usize,
    pub labels: Vec<u32>,
    #[serde(skip)]
    dims: Vec<usize>,
    #[serde(skip)]
    strides: Vec<usize>,
}

impl TensorBasis {
    pub fn new(n: usize, labels: &[u32]) -> Result<TensorBasis> {
        if let Some(a) = labels.iter().find(|&&a| a as usize > n) {
            return Err(Error::LabelOutOfRange(format!("label {a} exceeds n = {n}")));
        }
        let dims: Vec<usize> = labels.iter().map(|&a| binom(n, a as usize)).collect();
        let mut strides = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        Ok(TensorBasis { n, labels: labels.to_vec(), dims, strides })
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn index(&self, tuple: &[u32]) -> usize {
        tuple.iter().zip(&self.strides).map(|(&m, &s)| subset_rank(m) * s).sum()
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.dims.len()];
        for i in 0..self.dims.len() {
            let k = idx / self.strides[i];
            idx %= self.strides[i];
            out[i] = subsets(self.n, self.labels[i] as usize)[k];
        }
        out
    }

    /// Labels other than 0 and n.
    pub fn nontrivial_labels(&self) -> Vec<u32> {
        crate::webs::nontrivial(self.n, &self.labels)
    }

    /// Whether two bases agree after removing 0 and n factors.
    pub fn same_space(&self, o: &TensorBasis) -> bool {
        self.n == o.n && self.nontrivial_labels() == o.nontrivial_labels()
    }

    /// The gl weight of a basis vector: multiplicity of each `i` across the
    /// tuple, packed as a comparable key.
    pub fn content(&self, idx: usize) -> Vec<u8> {
        let mut c = vec![0u8; self.n];
        for m in self.tuple(idx) {
            for (i, x) in c.iter_mut().enumerate() {
                *x += ((m >> i) & 1) as u8;
            }
        }
        c
    }
}
