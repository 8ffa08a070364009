//! Cyclotomic polynomials and factorizations into them.
//!
//! Every denominator met in practice is a product of quantum integers, and
//! `[k] = q^(1-k) * prod_{d | 2k, d > 2} Phi_d(q)`, so rational functions
//! keep such denominators as exponent vectors over `Phi_d`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::LaurentPoly;

/// Exponents `(d, e)` of `prod Phi_d^e`, sorted by `d`, every `e > 0`.
pub type CycExps = Vec<(u32, u32)>;

fn table() -> &'static Mutex<HashMap<u32, Arc<LaurentPoly>>> {
    static T: OnceLock<Mutex<HashMap<u32, Arc<LaurentPoly>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

fn divisors(d: u32) -> Vec<u32> {
    (1..=d).filter(|e| d % e == 0).collect()
}

/// The d-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> Arc<LaurentPoly> {
    assert!(d >= 1);
    if let Some(p) = table().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = LaurentPoly::q_pow(d as i32).sub(&LaurentPoly::one());
    for e in divisors(d) {
        if e < d {
            p = p.div_exact(&cyclotomic(e)).expect("cyclotomic division is exact");
        }
    }
    let p = Arc::new(p);
    table().lock().unwrap().insert(d, p.clone());
    p
}

pub fn euler_phi(mut d: u32) -> u32 {
    let mut r = d;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            while d % p == 0 {
                d /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if d > 1 {
        r -= r / d;
    }
    r
}

/// The d with `phi(d) <= deg`, ascending. Uses `phi(d) >= sqrt(d / 2)`.
fn candidates(deg: u32) -> Vec<u32> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<Vec<u32>>>>> = OnceLock::new();
    let c = C.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = c.lock().unwrap().get(&deg) {
        return v.as_ref().clone();
    }
    let bound = 2 * deg * deg + 2;
    let v: Vec<u32> = (1..=bound).filter(|&d| euler_phi(d) <= deg).collect();
    c.lock().unwrap().insert(deg, Arc::new(v.clone()));
    v
}

/// `Phi_d^e` product for the given exponents.
pub fn product(exps: &[(u32, u32)]) -> LaurentPoly {
    let mut r = LaurentPoly::one();
    for &(d, e) in exps {
        let p = cyclotomic(d);
        for _ in 0..e {
            r = r.mul(&p);
        }
    }
    r
}

/// Factorization of a polynomial (lowest exponent 0, positive leading
/// coefficient) as a product of cyclotomic polynomials, if it is one.
pub fn factor(p: &LaurentPoly) -> Option<CycExps> {
    if p.is_zero() || p.low_exp() != 0 {
        return None;
    }
    if p.is_one() {
        return Some(Vec::new());
    }
    let lc = p.leading_coeff();
    let tc = p.trailing_coeff();
    let one = num_bigint::BigInt::from(1);
    if lc != one || (tc != one && tc != -one.clone()) {
        return None;
    }
    let deg = p.high_exp() as u32;
    let cs = p.terms();
    let get = |e: i32| p.coeff(e);
    for (e, c) in &cs {
        let mirror = get(deg as i32 - e);
        if mirror != *c && mirror != -c.clone() {
            return None;
        }
    }
    let mut rest = p.clone();
    let mut out = Vec::new();
    for d in candidates(deg) {
        let phi = euler_phi(d) as i32;
        if rest.high_exp() < phi {
            continue;
        }
        let f = cyclotomic(d);
        let mut e = 0;
        while rest.high_exp() >= phi {
            match rest.div_exact(&f) {
                Some(q) => {
                    rest = q;
                    e += 1;
                }
                None => break,
            }
        }
        if e > 0 {
            out.push((d, e));
        }
        if rest.is_one() {
            return Some(out);
        }
    }
    if rest.is_one() {
        Some(out)
    } else {
        None
    }
}

/// Cyclotomic exponents and q-shift of the quantum integer `[k]`, `k > 0`:
/// `[k] = q^(1-k) * prod Phi_d`.
pub fn qint_factors(k: u32) -> (i32, CycExps) {
    assert!(k > 0);
    let exps = divisors(2 * k).into_iter().filter(|&d| d > 2).map(|d| (d, 1)).collect();
    (1 - k as i32, exps)
}

pub fn merge_add(a: &[(u32, u32)], b: &[(u32, u32)]) -> CycExps {
    merge_with(a, b, |x, y| x + y)
}

pub fn merge_max(a: &[(u32, u32)], b: &[(u32, u32)]) -> CycExps {
    merge_with(a, b, |x, y| x.max(y))
}

fn merge_with(a: &[(u32, u32)], b: &[(u32, u32)], f: impl Fn(u32, u32) -> u32) -> CycExps {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, f(a[i].1, 0)));
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f(0, b[j].1)));
            j += 1;
        } else {
            out.push((a[i].0, f(a[i].1, b[j].1)));
            i += 1;
            j += 1;
        }
    }
    out
}

/// `prod Phi_d^(to_d - from_d)`, assuming `from <= to` pointwise.
pub fn lift(from: &[(u32, u32)], to: &[(u32, u32)]) -> LaurentPoly {
    let mut r = LaurentPoly::one();
    let mut i = 0;
    for &(d, e) in to {
        while i < from.len() && from[i].0 < d {
            i += 1;
        }
        let have = if i < from.len() && from[i].0 == d { from[i].1 } else { 0 };
        let f = cyclotomic(d);
        for _ in have..e {
            r = r.mul(&f);
        }
    }
    r
}

/// Divides out as many factors of the denominator `exps` from `num` as
/// possible.
pub fn cancel(mut num: LaurentPoly, exps: CycExps) -> (LaurentPoly, CycExps) {
    if num.is_zero() {
        return (num, Vec::new());
    }
    let mut out = Vec::with_capacity(exps.len());
    for (d, mut e) in exps {
        if !num.is_monomial() {
            let phi = euler_phi(d) as usize;
            let f = cyclotomic(d);
            while e > 0 && num.len() > phi {
                match num.div_exact(&f) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
        }
        if e > 0 {
            out.push((d, e));
        }
    }
    (num, out)
}
