//! Clasps from the triple clasp expansion, local intersection forms and the
//! coefficients gamma.
//!
//! Every clasp lives on the canonical sequence of its weight. The recursion
//! peels off the largest fundamental index `a` of `lambda`, so the sequence
//! of `lambda - omega_a` followed by `a` is again canonical and no transport
//! is needed for the clasp itself.

mod checks;
mod gamma;
mod kappa;
mod oracle;

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};
use std::sync::{Arc, Mutex};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::eval::{eval_ladder, EvalMatrix, TensorBasis};
use crate::qring::RatFun;
use crate::webs::{canonical_labels, tier};
use crate::weights::{GlWeight, SlWeight};

pub use checks::{
    alt_decomposition_holds, conjecture_sweep, outward_rungs, sweep_pairs, validate_clasp, ClaspReport, SweepReport, SweepRow,
};
pub use gamma::{gamma, recursive1_check, Recursive1Report};
pub use kappa::{
    kappa_conjecture, kappa_method, kappa_methods, kappa_recursive, weyl_dim, weyl_dim_at_one, KappaMethod,
    KappaValue,
};
pub use oracle::clasp_oracle;

const CACHE_VERSION: u64 = 1;

/// The clasp of `lambda` on its canonical sequence.
#[derive(Clone, Debug)]
pub struct ClaspRecord {
    pub lambda: SlWeight,
    pub sequence: Vec<u8>,
    pub matrix: EvalMatrix<RatFun>,
    pub rank: usize,
}

impl ClaspRecord {
    fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_string(),
            "matrix": self.matrix.to_json(),
            "n": self.lambda.n(),
            "rank": self.rank,
            "sequence": self.sequence,
            "version": CACHE_VERSION,
        })
    }

    fn from_json(lambda: &SlWeight, v: &Value) -> Result<Self> {
        if v["version"].as_u64() != Some(CACHE_VERSION) || v["lambda"].as_str() != Some(&lambda.to_string()) {
            return Err(Error::Parse("stale cache entry".into()));
        }
        let b = basis_of(lambda)?;
        let matrix = EvalMatrix::from_json(b.clone(), b, &v["matrix"])?;
        let rank = v["rank"].as_u64().ok_or_else(|| Error::Parse("missing rank".into()))? as usize;
        Ok(ClaspRecord { lambda: lambda.clone(), sequence: lambda.canonical_sequence()?, matrix, rank })
    }
}

pub(crate) fn basis_of(lambda: &SlWeight) -> Result<TensorBasis> {
    TensorBasis::new(lambda.n(), &canonical_labels(lambda)?)
}

/// Largest `a` with `lambda_a > 0`, 1-based.
fn pivot(lambda: &SlWeight) -> Option<usize> {
    (1..lambda.n()).rev().find(|&a| lambda.get(a) > 0)
}

/// The non-highest weights of `V_{omega_a}`.
pub fn lowering_weights(n: usize, a: usize) -> Vec<GlWeight> {
    GlWeight::level(n, a).into_iter().filter(|m| !m.is_highest()).collect()
}

/// Memoized clasps and local intersection forms, optionally persisted as one
/// JSON file per `(n, lambda)`.
#[derive(Default)]
pub struct ClaspEngine {
    clasps: Mutex<HashMap<SlWeight, Arc<ClaspRecord>>>,
    kappas: Mutex<HashMap<(SlWeight, GlWeight), RatFun>>,
    cache_dir: Option<PathBuf>,
}

impl ClaspEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        ClaspEngine { cache_dir: Some(dir.into()), ..Self::default() }
    }

    pub fn cache_dir(&self) -> Option<&FsPath> {
        self.cache_dir.as_deref()
    }

    fn cache_file(&self, lambda: &SlWeight) -> Option<PathBuf> {
        let coords: Vec<String> = lambda.coords().iter().map(|c| c.to_string()).collect();
        self.cache_dir.as_ref().map(|d| d.join(format!("n{}", lambda.n())).join(format!("clasp-{}.json", coords.join("_"))))
    }

    fn load(&self, lambda: &SlWeight) -> Option<ClaspRecord> {
        let text = fs::read_to_string(self.cache_file(lambda)?).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        ClaspRecord::from_json(lambda, &v).ok()
    }

    fn store(&self, rec: &ClaspRecord) -> Result<()> {
        let Some(path) = self.cache_file(&rec.lambda) else { return Ok(()) };
        let dir = path.parent().expect("cache file has a parent");
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
        tmp.write_all(rec.to_json().to_string().as_bytes()).map_err(io)?;
        tmp.persist(&path).map_err(|e| io(e.error))?;
        Ok(())
    }

    /// The clasp of a dominant weight on its canonical sequence.
    pub fn clasp(&self, lambda: &SlWeight) -> Result<Arc<ClaspRecord>> {
        lambda.ensure_dominant()?;
        if let Some(r) = self.clasps.lock().unwrap().get(lambda) {
            return Ok(r.clone());
        }
        let rec = match self.load(lambda) {
            Some(r) => r,
            None => {
                let r = self.build(lambda)?;
                self.store(&r)?;
                r
            }
        };
        let rec = Arc::new(rec);
        self.clasps.lock().unwrap().insert(lambda.clone(), rec.clone());
        Ok(rec)
    }

    fn build(&self, lambda: &SlWeight) -> Result<ClaspRecord> {
        let n = lambda.n();
        let sequence = lambda.canonical_sequence()?;
        let Some(a) = pivot(lambda).filter(|_| sequence.len() > 1) else {
            let b = basis_of(lambda)?;
            let rank = b.size();
            return Ok(ClaspRecord { lambda: lambda.clone(), sequence, matrix: EvalMatrix::identity(b), rank });
        };
        let base_w = lambda.minus_fundamental(a);
        let mut p = self.clasp(&base_w)?.matrix.tensor_id(a as u32)?;
        for mu in lowering_weights(n, a) {
            if !base_w.add_gl(&mu).is_dominant() {
                continue;
            }
            let (e, ebar, k) = self.intersection(&base_w, &mu)?;
            if k.is_zero() {
                return Err(Error::DegenerateKappa(format!("kappa({base_w}, {mu}) = 0")));
            }
            let term = ebar.compose(&e)?;
            p.m = p.m.sub(&term.m.scale(&k.inv()?))?;
        }
        let rank = weyl_dim_at_one(lambda)? as usize;
        Ok(ClaspRecord { lambda: lambda.clone(), sequence, matrix: p, rank })
    }

    /// The tier `E_mu` on `lambda a` as a matrix.
    pub fn tier_matrix(&self, lambda: &SlWeight, mu: &GlWeight) -> Result<EvalMatrix<RatFun>> {
        let t = tier(lambda.n(), &canonical_labels(lambda)?, mu.a() as u32, mu)?;
        Ok(eval_ladder(&t).to_ratfun())
    }

    /// `E = P_{lambda+mu} T (P_lambda (x) id)`, `Ebar = (P_lambda (x) id) flip(T) P_{lambda+mu}`
    /// and `kappa`, with `E Ebar = kappa P_{lambda+mu}` checked entrywise.
    pub fn intersection(&self, lambda: &SlWeight, mu: &GlWeight) -> Result<(EvalMatrix, EvalMatrix, RatFun)> {
        let n = lambda.n();
        if mu.n() != n {
            return Err(Error::InvalidWeight(format!("{mu} is not a weight for n = {n}")));
        }
        lambda.ensure_dominant()?;
        let target = lambda.add_gl(mu);
        target.ensure_dominant()?;
        let a = mu.a() as u32;
        let pl = self.clasp(lambda)?.matrix.tensor_id(a)?;
        let pt = self.clasp(&target)?;
        let t = tier(n, &canonical_labels(lambda)?, a, mu)?;
        let tm = eval_ladder(&t).to_ratfun();
        let tbar = eval_ladder(&t.flip()).to_ratfun();
        let e = pt.matrix.compose(&tm)?.compose(&pl)?;
        let ebar = pl.compose(&tbar)?.compose(&pt.matrix)?;
        let prod = e.compose(&ebar)?;
        let k = prod.m.trace().div(&RatFun::from_int(pt.rank as i64))?;
        if !prod.m.sub(&pt.matrix.m.scale(&k))?.is_zero() {
            return Err(Error::CheckFailed(format!("E Ebar is not a multiple of the clasp for ({lambda}, {mu})")));
        }
        self.kappas.lock().unwrap().insert((lambda.clone(), mu.clone()), k.clone());
        Ok((e, ebar, k))
    }

    /// `kappa_{lambda, mu}` as the trace ratio of `E Ebar` against `P_{lambda+mu}`.
    pub fn kappa_matrix(&self, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
        if let Some(k) = self.kappas.lock().unwrap().get(&(lambda.clone(), mu.clone())) {
            return Ok(k.clone());
        }
        Ok(self.intersection(lambda, mu)?.2)
    }
}

/// The clasp of `lambda`, computed without a shared engine.
pub fn compute_clasp(lambda: &SlWeight) -> Result<ClaspRecord> {
    Ok((*ClaspEngine::new().clasp(lambda)?).clone())
}

/// `kappa_{lambda, mu}` from matrices, computed without a shared engine.
pub fn kappa_matrix(lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
    ClaspEngine::new().kappa_matrix(lambda, mu)
}
