//! Merges, splits, rungs and ladders as matrices.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use serde_json::{json, Value};

use super::basis::{ell, subset_rank, subsets, TensorBasis};
use super::matrix::{Scalar, SparseMatrix};
use crate::error::{Error, Result};
use crate::qring::{LaurentPoly, RatFun};
use crate::webs::{Ladder, LadderStack, Rung, Tilt};

/// A linear map between tensor bases.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalMatrix<S = RatFun> {
    pub rows: TensorBasis,
    pub cols: TensorBasis,
    pub m: SparseMatrix<S>,
}

impl<S: Scalar> EvalMatrix<S> {
    pub fn identity(b: TensorBasis) -> Self {
        EvalMatrix { m: SparseMatrix::identity(b.size()), rows: b.clone(), cols: b }
    }

    /// `self` after `lower`.
    pub fn compose(&self, lower: &EvalMatrix<S>) -> Result<EvalMatrix<S>> {
        if !self.cols.same_space(&lower.rows) {
            return Err(Error::DimensionMismatch(format!("{:?} after {:?}", self.cols.labels, lower.rows.labels)));
        }
        Ok(EvalMatrix { rows: self.rows.clone(), cols: lower.cols.clone(), m: self.m.mul(&lower.m)? })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> EvalMatrix<T> {
        EvalMatrix { rows: self.rows.clone(), cols: self.cols.clone(), m: self.m.map(f) }
    }

    /// `self (x) id` on an extra right factor labeled `a`.
    pub fn tensor_id(&self, a: u32) -> Result<EvalMatrix<S>> {
        let mut r = self.rows.labels.clone();
        r.push(a);
        let mut c = self.cols.labels.clone();
        c.push(a);
        let rows = TensorBasis::new(self.rows.n, &r)?;
        let d = rows.dims().last().copied().unwrap_or(1);
        Ok(EvalMatrix { rows, cols: TensorBasis::new(self.cols.n, &c)?, m: self.m.kron_id(d) })
    }

    pub fn same_entries(&self, o: &EvalMatrix<S>) -> bool {
        self.rows.same_space(&o.rows) && self.cols.same_space(&o.cols) && self.m == o.m
    }
}

impl EvalMatrix<LaurentPoly> {
    pub fn to_ratfun(&self) -> EvalMatrix<RatFun> {
        self.map(|p| RatFun::from_poly(p.clone()))
    }
}

impl EvalMatrix<RatFun> {
    /// `{"rows": d1, "cols": d2, "entries": [[i, j, ratfun], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.m.entries().map(|(i, j, v)| json!([i, j, v.to_json()])).collect();
        json!({ "cols": self.m.ncols(), "entries": entries, "rows": self.m.nrows() })
    }

    /// Inverse of [`to_json`](Self::to_json) given the two bases.
    pub fn from_json(rows: TensorBasis, cols: TensorBasis, v: &Value) -> Result<Self> {
        let bad = || Error::Parse("malformed matrix".into());
        let (nr, nc) = (v["rows"].as_u64().ok_or_else(bad)? as usize, v["cols"].as_u64().ok_or_else(bad)? as usize);
        if nr != rows.size() || nc != cols.size() {
            return Err(Error::DimensionMismatch(format!("stored {nr}x{nc}, expected {}x{}", rows.size(), cols.size())));
        }
        let mut trips = Vec::new();
        for e in v["entries"].as_array().ok_or_else(bad)? {
            let i = e[0].as_u64().ok_or_else(bad)? as usize;
            let j = e[1].as_u64().ok_or_else(bad)? as usize;
            if i >= nr || j >= nc {
                return Err(bad());
            }
            trips.push((i, j, RatFun::from_json(&e[2])?));
        }
        Ok(EvalMatrix { rows, cols, m: SparseMatrix::from_triplets(nr, nc, trips) })
    }

    /// Entries specialized at a rational `q`, rendered as strings.
    pub fn specialize_json(&self, q: &BigRational) -> Result<Value> {
        let mut entries = Vec::new();
        for (i, j, v) in self.m.entries() {
            let x = v.specialize(q)?;
            if x != BigRational::from_integer(0.into()) {
                entries.push(json!([i, j, x.to_string()]));
            }
        }
        Ok(json!({ "at": q.to_string(), "cols": self.m.ncols(), "entries": entries, "rows": self.m.nrows() }))
    }
}

fn check_pair(n: usize, a: u32, b: u32) -> Result<()> {
    if (a + b) as usize > n {
        return Err(Error::LabelOutOfRange(format!("{a} + {b} exceeds n = {n}")));
    }
    Ok(())
}

/// `(-q)^e` as `(sign, exponent)`.
fn neg_q(e: i32) -> (bool, i32) {
    (e.rem_euclid(2) == 1, e)
}

fn mono((neg, e): (bool, i32)) -> LaurentPoly {
    LaurentPoly::monomial(if neg { -1 } else { 1 }, e)
}

/// `V_a (x) V_b -> V_{a+b}`: `x_S (x) x_T` goes to `(-q)^l(S,T) x_{S u T}`
/// when `S` and `T` are disjoint, and to zero otherwise.
pub fn merge_matrix(n: usize, a: u32, b: u32) -> Result<EvalMatrix<LaurentPoly>> {
    check_pair(n, a, b)?;
    let rows = TensorBasis::new(n, &[a + b])?;
    let cols = TensorBasis::new(n, &[a, b])?;
    let mut t = Vec::new();
    for &s in subsets(n, a as usize).iter() {
        for &u in subsets(n, b as usize).iter() {
            if s & u == 0 {
                t.push((subset_rank(s | u), cols.index(&[s, u]), mono(neg_q(ell(s, u) as i32))));
            }
        }
    }
    Ok(EvalMatrix { m: SparseMatrix::from_triplets(rows.size(), cols.size(), t), rows, cols })
}

/// `V_{a+b} -> V_a (x) V_b`: `x_S` goes to
/// `(-1)^(ab) sum_T (-q)^(-l(S\T, T)) x_T (x) x_{S\T}` over `a`-subsets `T`.
pub fn split_matrix(n: usize, a: u32, b: u32) -> Result<EvalMatrix<LaurentPoly>> {
    check_pair(n, a, b)?;
    let rows = TensorBasis::new(n, &[a, b])?;
    let cols = TensorBasis::new(n, &[a + b])?;
    let mut t = Vec::new();
    for &s in subsets(n, (a + b) as usize).iter() {
        for &tt in subsets(n, a as usize).iter() {
            if tt & !s == 0 {
                let (neg, e) = neg_q(-(ell(s & !tt, tt) as i32));
                let neg = neg ^ ((a * b) % 2 == 1);
                t.push((rows.index(&[tt, s & !tt]), subset_rank(s), mono((neg, e))));
            }
        }
    }
    Ok(EvalMatrix { m: SparseMatrix::from_triplets(rows.size(), cols.size(), t), rows, cols })
}

/// Action of one rung on a pair of factors: for each input local index, the
/// output local indices with signed monomial coefficients.
struct LocalRung {
    out_dim: usize,
    entries: Vec<Vec<(usize, bool, i32)>>,
}

type RungKey = (usize, u32, u32, u32, Tilt);

fn local_rung(n: usize, a: u32, b: u32, s: u32, tilt: Tilt) -> Arc<LocalRung> {
    static T: OnceLock<Mutex<HashMap<RungKey, Arc<LocalRung>>>> = OnceLock::new();
    let t = T.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, a, b, s, tilt);
    if let Some(r) = t.lock().unwrap().get(&key) {
        return r.clone();
    }
    let (c, d) = match tilt {
        Tilt::NE => (a - s, b + s),
        Tilt::NW => (a + s, b - s),
    };
    let sb = subsets(n, b as usize);
    let out_db = subsets(n, d as usize).len();
    let mut entries = Vec::new();
    for &x in subsets(n, a as usize).iter() {
        for &u in sb.iter() {
            let mut row = Vec::new();
            match tilt {
                Tilt::NE => {
                    for &tt in subsets(n, c as usize).iter() {
                        if tt & !x != 0 {
                            continue;
                        }
                        let r = x & !tt;
                        if r & u != 0 {
                            continue;
                        }
                        let e = ell(r, u) as i32 - ell(r, tt) as i32;
                        let neg = (e.rem_euclid(2) == 1) ^ ((c * s) % 2 == 1);
                        row.push((subset_rank(tt) * out_db + subset_rank(r | u), neg, e));
                    }
                }
                Tilt::NW => {
                    for &tt in subsets(n, s as usize).iter() {
                        if tt & !u != 0 || tt & x != 0 {
                            continue;
                        }
                        let rest = u & !tt;
                        let e = ell(x, tt) as i32 - ell(rest, tt) as i32;
                        let neg = (e.rem_euclid(2) == 1) ^ ((s * d) % 2 == 1);
                        row.push((subset_rank(x | tt) * out_db + subset_rank(rest), neg, e));
                    }
                }
            }
            entries.push(row);
        }
    }
    let r = Arc::new(LocalRung { out_dim: subsets(n, c as usize).len() * out_db, entries });
    t.lock().unwrap().insert(key, r.clone());
    r
}

/// The rung on the pair `(a, b)` as a matrix; a zero crossbar is the identity.
pub fn eval_rung(n: usize, a: u32, b: u32, rung: &Rung) -> Result<EvalMatrix<LaurentPoly>> {
    let l = Ladder { bottom: vec![a, b], n, rungs: if rung.s == 0 { vec![] } else { vec![Rung { pos: 0, ..*rung }] } };
    l.validate()?;
    Ok(eval_ladder(&l))
}

/// Bottom-to-top product of the rung matrices, computed column by column.
pub fn eval_ladder(l: &Ladder) -> EvalMatrix<LaurentPoly> {
    let levels = l.levels().expect("validated ladder");
    let n = l.n;
    let cols = TensorBasis::new(n, &l.bottom).expect("validated ladder");
    let mut vecs: Vec<Vec<(usize, LaurentPoly)>> = (0..cols.size()).map(|j| vec![(j, LaurentPoly::one())]).collect();
    for (r, lv) in l.rungs.iter().zip(&levels) {
        let basis = TensorBasis::new(n, lv).unwrap();
        let dims = basis.dims();
        let low: usize = dims[r.pos + 2..].iter().product();
        let din = dims[r.pos] * dims[r.pos + 1];
        let table = local_rung(n, lv[r.pos], lv[r.pos + 1], r.s, r.tilt);
        let dout = table.out_dim;
        for v in vecs.iter_mut() {
            let mut next: HashMap<usize, LaurentPoly> = HashMap::with_capacity(v.len());
            for (idx, c) in v.iter() {
                let hi = idx / (din * low);
                let mid = (idx / low) % din;
                let lo = idx % low;
                for &(mo, neg, e) in &table.entries[mid] {
                    let term = if neg { c.shift(e).neg() } else { c.shift(e) };
                    let k = (hi * dout + mo) * low + lo;
                    match next.get_mut(&k) {
                        Some(x) => *x = x.add(&term),
                        None => {
                            next.insert(k, term);
                        }
                    }
                }
            }
            let mut out: Vec<(usize, LaurentPoly)> = next.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            out.sort_by_key(|e| e.0);
            *v = out;
        }
    }
    let rows = TensorBasis::new(n, levels.last().unwrap()).unwrap();
    let m = SparseMatrix::from_triplets(
        rows.size(),
        cols.size(),
        vecs.into_iter().enumerate().flat_map(|(j, v)| v.into_iter().map(move |(i, x)| (i, j, x))),
    );
    EvalMatrix { rows, cols, m }
}

/// Product of the pieces of a stack, glued along their nontrivial labels.
pub fn eval_stack(st: &LadderStack) -> Result<EvalMatrix<LaurentPoly>> {
    let mut acc = eval_ladder(&st.pieces[0]);
    for p in &st.pieces[1..] {
        acc = eval_ladder(p).compose(&acc)?;
    }
    Ok(acc)
}

/// A linear combination of ladders with a common boundary, evaluated.
pub fn eval_sum(terms: &[(LaurentPoly, Ladder)], rows: &[u32], cols: &[u32], n: usize) -> Result<EvalMatrix<LaurentPoly>> {
    let rb = TensorBasis::new(n, rows)?;
    let cb = TensorBasis::new(n, cols)?;
    let mut m = SparseMatrix::zeros(rb.size(), cb.size());
    for (c, l) in terms {
        let e = eval_ladder(l);
        if !e.rows.same_space(&rb) || !e.cols.same_space(&cb) {
            return Err(Error::DimensionMismatch(format!("term {l} does not match boundary {cols:?} -> {rows:?}")));
        }
        m = m.add(&e.m.scale(c))?;
    }
    Ok(EvalMatrix { rows: rb, cols: cb, m })
}
