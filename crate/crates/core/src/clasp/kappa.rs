//! Local intersection forms by the product formula and by the recursion in
//! `lambda - omega_{x_k}`, plus the quantum Weyl dimension.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ClaspEngine;
use crate::error::{Error, Result};
use crate::qring::{qbinom, RatFun};
use crate::weights::{pairing_a, positive_roots, GlWeight, SlWeight};

/// A kappa value together with the method that produced it.
#[derive(Clone, Debug)]
pub struct KappaValue {
    pub lambda: SlWeight,
    pub mu: GlWeight,
    pub value: RatFun,
    pub method: &'static str,
}

/// One way of computing `kappa_{lambda, mu}`.
pub trait KappaMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn kappa(&self, engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun>;

    fn value(&self, engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<KappaValue> {
        Ok(KappaValue { lambda: lambda.clone(), mu: mu.clone(), value: self.kappa(engine, lambda, mu)?, method: self.name() })
    }
}

struct Matrix;
struct Conjecture;
struct Recursive;

impl KappaMethod for Matrix {
    fn name(&self) -> &'static str {
        "matrix"
    }
    fn kappa(&self, engine: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
        engine.kappa_matrix(lambda, mu)
    }
}

impl KappaMethod for Conjecture {
    fn name(&self) -> &'static str {
        "conjecture"
    }
    fn kappa(&self, _: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
        kappa_conjecture(lambda, mu)
    }
}

impl KappaMethod for Recursive {
    fn name(&self) -> &'static str {
        "recursive"
    }
    fn kappa(&self, _: &ClaspEngine, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
        kappa_recursive(lambda, mu)
    }
}

/// Every method, in report order.
pub fn kappa_methods() -> Vec<Box<dyn KappaMethod>> {
    vec![Box::new(Matrix), Box::new(Conjecture), Box::new(Recursive)]
}

pub fn kappa_method(name: &str) -> Result<Box<dyn KappaMethod>> {
    kappa_methods()
        .into_iter()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown kappa method {name}")))
}

fn check_pair(lambda: &SlWeight, mu: &GlWeight) -> Result<()> {
    if mu.n() != lambda.n() {
        return Err(Error::InvalidWeight(format!("{mu} is not a weight for n = {}", lambda.n())));
    }
    lambda.ensure_dominant()?;
    lambda.add_gl(mu).ensure_dominant()
}

/// `prod_{alpha in Phi(mu)} [A(lambda, alpha)] / [A(lambda, alpha) - 1]`,
/// checked against `prod [A(lambda, alpha)] / [A(lambda + mu, alpha)]`.
pub fn kappa_conjecture(lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
    check_pair(lambda, mu)?;
    let top = lambda.add_gl(mu);
    let roots = mu.inversion_set();
    let nums: Vec<i64> = roots.iter().map(|&r| pairing_a(lambda, r)).collect();
    let dens: Vec<i64> = nums.iter().map(|a| a - 1).collect();
    let alt: Vec<i64> = roots.iter().map(|&r| pairing_a(&top, r)).collect();
    let k = RatFun::qint_ratio(&nums, &dens)?;
    if !k.sub(&RatFun::qint_ratio(&nums, &alt)?).is_zero() {
        return Err(Error::CheckFailed(format!("the two product forms differ at ({lambda}, {mu})")));
    }
    Ok(k)
}

/// The weight `mu` with its last 1-string removed.
pub(crate) fn minus_last_string(mu: &GlWeight) -> GlWeight {
    let d = mu.elementary_data();
    let mut bits = mu.bits().to_vec();
    for b in bits.iter_mut().take(d.y[d.k]).skip(d.x[d.k - 1]) {
        *b = 0;
    }
    GlWeight::new(bits).expect("bits stay 0/1")
}

/// `sigma = mu + omega_c - nu` when it is a 01-sequence.
pub(crate) fn sigma(mu: &GlWeight, c: usize, nu: &GlWeight) -> Option<GlWeight> {
    let w = GlWeight::highest(mu.n(), c);
    let v: Vec<i64> = mu.bits().iter().zip(w.bits()).zip(nu.bits()).map(|((&m, &o), &x)| m as i64 + o as i64 - x as i64).collect();
    if v.iter().all(|&x| x == 0 || x == 1) {
        Some(GlWeight::new(v.into_iter().map(|x| x as u8).collect()).unwrap())
    } else {
        None
    }
}

/// The gamma coefficients available in closed form for `n <= 4`.
fn gamma_closed(lambda: &SlWeight, mu: &GlWeight, nu: &GlWeight) -> Result<RatFun> {
    let d = mu.elementary_data();
    let xk = d.x[d.k - 1];
    if sigma(mu, xk, nu).is_none() {
        return Ok(RatFun::zero());
    }
    if nu.is_highest() || d.k == 1 {
        return Ok(RatFun::one());
    }
    match (mu.to_string().as_str(), nu.to_string().as_str()) {
        ("0101", "0111") => {
            let b = lambda.get(1);
            RatFun::qint_ratio(&[b + 1], &[b])
        }
        ("0101", "1101") => Ok(RatFun::one()),
        _ => Err(Error::UnsupportedRank(mu.n())),
    }
}

struct Recursion {
    memo: HashMap<(SlWeight, GlWeight), RatFun>,
    active: HashSet<(SlWeight, GlWeight)>,
}

impl Recursion {
    fn kappa(&mut self, lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
        if mu.is_highest() {
            return Ok(RatFun::one());
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(k) = self.memo.get(&key) {
            return Ok(k.clone());
        }
        if !self.active.insert(key.clone()) {
            return Err(Error::CheckFailed(format!("recursion for ({lambda}, {mu}) is cyclic")));
        }
        let d = mu.elementary_data();
        let k = d.k;
        let xk = d.x[k - 1];
        let lm = lambda.minus_fundamental(xk);
        let first = RatFun::from_poly(qbinom((d.y[k] - d.alpha[k - 1]) as i64, d.beta[k - 1] as i64));
        let mut acc = if d.alpha[k - 1] == 0 { first } else { first.mul(&self.kappa(&lm, &minus_last_string(mu))?) };
        for nu in super::lowering_weights(mu.n(), xk) {
            if !lm.add_gl(&nu).is_dominant() {
                continue;
            }
            let Some(s) = sigma(mu, xk, &nu) else { continue };
            let g = gamma_closed(lambda, mu, &nu)?;
            let num = self.kappa(&lm.add_gl(&nu), &s)?;
            let den = self.kappa(&lm, &nu)?;
            acc = acc.sub(&num.div(&den)?.mul(&g).mul(&g));
        }
        self.active.remove(&key);
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }
}

/// `kappa_{lambda, mu}` from the recursion in `lambda - omega_{x_k}`, with
/// the gamma coefficients in closed form; available for `n <= 4`.
pub fn kappa_recursive(lambda: &SlWeight, mu: &GlWeight) -> Result<RatFun> {
    check_pair(lambda, mu)?;
    if lambda.n() > 4 {
        return Err(Error::UnsupportedRank(lambda.n()));
    }
    Recursion { memo: HashMap::new(), active: HashSet::new() }.kappa(lambda, mu)
}

/// The quantum dimension `prod_{alpha > 0} [A(lambda, alpha)] / [A(0, alpha)]`.
pub fn weyl_dim(lambda: &SlWeight) -> Result<RatFun> {
    lambda.ensure_dominant()?;
    let roots = positive_roots(lambda.n());
    let nums: Vec<i64> = roots.iter().map(|&r| pairing_a(lambda, r)).collect();
    let dens: Vec<i64> = roots.iter().map(|r| (r.j - r.i) as i64).collect();
    RatFun::qint_ratio(&nums, &dens)
}

/// The dimension of `V_lambda`.
pub fn weyl_dim_at_one(lambda: &SlWeight) -> Result<u64> {
    lambda.ensure_dominant()?;
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for r in positive_roots(lambda.n()) {
        num *= pairing_a(lambda, r);
        den *= (r.j - r.i) as i64;
    }
    (num / den).to_u64().ok_or_else(|| Error::InvalidInput(format!("dimension of {lambda} overflows")))
}
