//! Validation of computed clasps and the sweep comparing the kappa methods.

use rayon::prelude::*;
use serde::Serialize;

use super::kappa::{kappa_conjecture, kappa_recursive, weyl_dim_at_one};
use super::{basis_of, ClaspEngine};
use crate::error::Result;
use crate::eval::eval_ladder;
use crate::qring::RatFun;
use crate::webs::{canonical_labels, classify_rung, Ladder, Rung, RungClass};
use crate::weights::{GlWeight, SlWeight};

#[derive(Clone, Debug, Serialize)]
pub struct ClaspReport {
    pub n: usize,
    pub lambda: String,
    pub sequence: Vec<u8>,
    pub size: usize,
    pub rank: usize,
    pub weyl_dim: u64,
    pub outward_checked: usize,
    pub failures: Vec<String>,
}

impl ClaspReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every single-rung outward ladder on the canonical sequence of `lambda`.
pub fn outward_rungs(lambda: &SlWeight) -> Result<Vec<Ladder>> {
    let n = lambda.n();
    let labels = canonical_labels(lambda)?;
    let mut out = Vec::new();
    for pos in 0..labels.len().saturating_sub(1) {
        let (a, b) = (labels[pos] as i64, labels[pos + 1] as i64);
        for s in 1..=n as u32 {
            for r in [Rung::ne(pos, s), Rung::nw(pos, s)] {
                if classify_rung(n, a, b, &r).is_ok_and(|c| c == RungClass::Outward) {
                    out.push(Ladder::new(n, labels.clone(), vec![r])?);
                }
            }
        }
    }
    Ok(out)
}

/// Idempotence, the `x_top` entry, the trace against the Weyl dimension, and
/// annihilation by outward rungs on both sides.
pub fn validate_clasp(engine: &ClaspEngine, lambda: &SlWeight) -> Result<ClaspReport> {
    let rec = engine.clasp(lambda)?;
    let p = &rec.matrix;
    let dim = weyl_dim_at_one(lambda)?;
    let mut failures = Vec::new();
    if p.compose(p)?.m != p.m {
        failures.push("P is not idempotent".to_string());
    }
    if !p.m.get_or_zero(0, 0).is_one() {
        failures.push("x_top entry is not 1".to_string());
    }
    let tr = p.m.trace();
    if !tr.sub(&RatFun::from_int(dim as i64)).is_zero() {
        failures.push(format!("trace {tr} differs from dimension {dim}"));
    }
    let outs = outward_rungs(lambda)?;
    for o in &outs {
        let e = eval_ladder(o).to_ratfun();
        if !e.compose(p)?.m.is_zero() {
            failures.push(format!("{o} after P is nonzero"));
        }
        if !p.compose(&eval_ladder(&o.flip()).to_ratfun())?.m.is_zero() {
            failures.push(format!("P after flip of {o} is nonzero"));
        }
    }
    Ok(ClaspReport {
        n: lambda.n(),
        lambda: lambda.to_string(),
        sequence: rec.sequence.clone(),
        size: basis_of(lambda)?.size(),
        rank: rec.rank,
        weyl_dim: dim,
        outward_checked: outs.len(),
        failures,
    })
}

/// `P_lambda (x) id_a = sum_mu (1/kappa_{lambda,mu}) Ebar_mu E_mu` over all of
/// Omega(a) with `lambda + mu` dominant.
pub fn alt_decomposition_holds(engine: &ClaspEngine, lambda: &SlWeight, a: usize) -> Result<bool> {
    let lhs = engine.clasp(lambda)?.matrix.tensor_id(a as u32)?;
    let mut rhs = lhs.m.scale(&RatFun::zero());
    for mu in GlWeight::level(lambda.n(), a) {
        if !lambda.add_gl(&mu).is_dominant() {
            continue;
        }
        let (e, ebar, k) = engine.intersection(lambda, &mu)?;
        rhs = rhs.add(&ebar.compose(&e)?.m.scale(&k.inv()?))?;
    }
    Ok(rhs == lhs.m)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub lambda: String,
    pub mu: String,
    pub kappa_matrix: String,
    pub kappa_conjecture: String,
    pub kappa_recursive: Option<String>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub level_bound: i64,
    pub checked: usize,
    pub disagreements: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

fn show(r: &Result<RatFun>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn same(a: &Result<RatFun>, b: &Result<RatFun>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x.sub(y).is_zero())
}

fn sweep_row(engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> SweepRow {
    let m = engine.kappa_matrix(lambda, mu);
    let c = kappa_conjecture(lambda, mu);
    let r = (lambda.n() <= 4).then(|| kappa_recursive(lambda, mu));
    let agree = same(&m, &c) && r.as_ref().is_none_or(|r| same(&m, r));
    SweepRow {
        n: lambda.n(),
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        kappa_matrix: show(&m),
        kappa_conjecture: show(&c),
        kappa_recursive: r.as_ref().map(show),
        agree,
    }
}

/// All pairs `(lambda, mu)` of the sweep: `lambda` dominant of level at most
/// `level_bound`, `mu` in some Omega(a) with `lambda + mu` dominant.
pub fn sweep_pairs(n: usize, level_bound: i64) -> Vec<(SlWeight, GlWeight)> {
    let mut out = Vec::new();
    for lambda in SlWeight::dominant_up_to(n, level_bound) {
        for a in 1..n {
            for mu in GlWeight::level(n, a) {
                if lambda.add_gl(&mu).is_dominant() {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}

/// Compares kappa from matrices, from the product formula and (for n <= 4)
/// from the recursion on every pair of the sweep. Clasps are built level by
/// level first, so parallel workers rarely repeat work.
pub fn conjecture_sweep(engine: &ClaspEngine, n: usize, level_bound: i64, jobs: usize) -> Result<SweepReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| crate::error::Error::InvalidInput(e.to_string()))?;
    let pairs = sweep_pairs(n, level_bound);
    let mut rows = pool.install(|| -> Result<Vec<SweepRow>> {
        let all = SlWeight::dominant_up_to(n, level_bound + 1);
        for level in 0..=level_bound + 1 {
            all.par_iter().filter(|w| w.level() == level).try_for_each(|w| engine.clasp(w).map(|_| ()))?;
        }
        Ok(pairs.par_iter().map(|(l, m)| sweep_row(engine, l, m)).collect())
    })?;
    rows.sort();
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    Ok(SweepReport { n, level_bound, checked: rows.len(), disagreements, rows })
}
