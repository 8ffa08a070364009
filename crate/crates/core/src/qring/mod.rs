//! Exact arithmetic over Z[q, q^-1] and Q(q).

pub mod cyclo;
mod poly;
mod ratfun;

pub use poly::LaurentPoly;
pub use ratfun::{RatAcc, RatFun};
pub(crate) use poly::{inv_mod, mul_mod};

/// The balanced quantum integer `[k] = q^(k-1) + q^(k-3) + ... + q^(1-k)`,
/// with `[0] = 0` and `[-k] = -[k]`.
pub fn qint(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    let m = k.unsigned_abs() as usize;
    let mut v = vec![0i64; 2 * m - 1];
    for i in (0..v.len()).step_by(2) {
        v[i] = 1;
    }
    let p = LaurentPoly::from_small(1 - m as i32, v);
    if k < 0 {
        p.neg()
    } else {
        p
    }
}

/// `delta = q + q^-1 = [2]`.
pub fn delta() -> LaurentPoly {
    qint(2)
}

/// Quantum binomial `[m][m-1]...[m-k+1] / [k]!`, valid for negative `m`;
/// zero for `k < 0`.
pub fn qbinom(m: i64, k: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 0..k {
        num = num.mul(&qint(m - i));
        den = den.mul(&qint(i + 1));
    }
    num.div_exact(&den).expect("quantum binomials are Laurent polynomials")
}

/// Coefficients `c_i` with `p = sum c_i delta^i`, for bar-invariant `p`.
pub fn delta_expansion(p: &LaurentPoly) -> Option<Vec<num_bigint::BigInt>> {
    if p.bar() != *p {
        return None;
    }
    let mut rest = p.clone();
    let top = p.high_exp().max(0) as usize;
    let mut out = vec![num_bigint::BigInt::from(0); top + 1];
    while !rest.is_zero() {
        let d = rest.high_exp();
        if d < 0 {
            return None;
        }
        let c = rest.leading_coeff();
        out[d as usize] = c.clone();
        rest = rest.sub(&delta().pow(d as u32).scale(&c));
    }
    Some(out)
}
