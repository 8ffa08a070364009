//! The coefficients gamma from matrices, and the first recursion for kappa
//! checked with every ingredient computed from matrices.

use serde::Serialize;

use super::kappa::{minus_last_string, sigma};
use super::{lowering_weights, ClaspEngine};
use crate::error::{Error, Result};
use crate::eval::{eval_ladder, EvalMatrix};
use crate::qring::{qbinom, RatFun};
use crate::webs::{canonical_labels, tier};
use crate::weights::{GlWeight, SlWeight};

/// `gamma_{lambda, mu, nu}`: the tier of `nu` flipped into the
/// `(lambda - omega_{x_k})`-clasp, followed by the tier of `mu`, between the
/// clasps of `lambda - omega_{x_k} + nu` and `lambda + mu`, as a multiple of
/// `E_sigma` with `sigma = mu + omega_{x_k} - nu`.
pub fn gamma(engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight, nu: &GlWeight) -> Result<RatFun> {
    let n = lambda.n();
    if mu.n() != n || nu.n() != n {
        return Err(Error::InvalidWeight(format!("weights must have length {n}")));
    }
    if mu.is_highest() {
        return Err(Error::InvalidInput(format!("{mu} is a highest weight")));
    }
    let d = mu.elementary_data();
    let xk = d.x[d.k - 1];
    if nu.a() != xk {
        return Err(Error::InvalidInput(format!("{nu} does not lie in level {xk}")));
    }
    let lm = lambda.minus_fundamental(xk);
    lm.ensure_dominant()?;
    let mid = lm.add_gl(nu);
    mid.ensure_dominant()?;
    let top = lambda.add_gl(mu);
    top.ensure_dominant()?;
    let Some(s) = sigma(mu, xk, nu) else { return Ok(RatFun::zero()) };
    let a = mu.a() as u32;

    let pm = engine.clasp(&mid)?;
    let pt = engine.clasp(&top)?;
    let pl = engine.clasp(&lm)?;
    let lower = tier(n, &canonical_labels(&lm)?, xk as u32, nu)?;
    let lower = pl.matrix.tensor_id(xk as u32)?.compose(&eval_ladder(&lower.flip()).to_ratfun())?.compose(&pm.matrix)?;
    let mut live = canonical_labels(&lm)?;
    live.push(xk as u32);
    let upper = eval_ladder(&tier(n, &live, a, mu)?).to_ratfun();
    let g = pt.matrix.compose(&upper)?.compose(&lower.tensor_id(a)?)?;

    let es = engine.tier_matrix(&mid, &s)?;
    let es = pt.matrix.compose(&es)?.compose(&pm.matrix.tensor_id(a)?)?;
    proportion(&g, &es).ok_or_else(|| {
        Error::CheckFailed(format!("gamma({lambda}, {mu}, {nu}) is not a multiple of E_{s}"))
    })
}

/// `c` with `g = c e`, if any.
fn proportion(g: &EvalMatrix, e: &EvalMatrix) -> Option<RatFun> {
    let c = match e.m.entries().next() {
        Some((i, j, v)) => g.m.get_or_zero(i, j).div(v).ok()?,
        None => return g.m.is_zero().then(RatFun::zero),
    };
    g.m.sub(&e.m.scale(&c)).ok()?.is_zero().then_some(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct Recursive1Report {
    pub lambda: String,
    pub mu: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Both sides of the first recursion for `kappa_{lambda, mu}`, with kappa
/// and gamma taken from matrices and `kappa_{lambda, 0} = 1`.
pub fn recursive1_check(engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<Recursive1Report> {
    if mu.is_highest() {
        return Err(Error::InvalidInput(format!("{mu} is a highest weight")));
    }
    let lhs = engine.kappa_matrix(lambda, mu)?;
    let d = mu.elementary_data();
    let k = d.k;
    let xk = d.x[k - 1];
    let lm = lambda.minus_fundamental(xk);
    let mut rhs = RatFun::from_poly(qbinom((d.y[k] - d.alpha[k - 1]) as i64, d.beta[k - 1] as i64));
    if d.alpha[k - 1] > 0 {
        rhs = rhs.mul(&engine.kappa_matrix(&lm, &minus_last_string(mu))?);
    }
    for nu in lowering_weights(mu.n(), xk) {
        if !lm.add_gl(&nu).is_dominant() {
            continue;
        }
        let Some(s) = sigma(mu, xk, &nu) else { continue };
        let g = gamma(engine, lambda, mu, &nu)?;
        let num = engine.kappa_matrix(&lm.add_gl(&nu), &s)?;
        let den = engine.kappa_matrix(&lm, &nu)?;
        rhs = rhs.sub(&num.div(&den)?.mul(&g).mul(&g));
    }
    Ok(Recursive1Report {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        holds: lhs.sub(&rhs).is_zero(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}
