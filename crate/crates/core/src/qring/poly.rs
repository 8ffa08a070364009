//! Laurent polynomials in q with integer coefficients.
//!
//! Coefficients live in `i64` while every intermediate result fits and are
//! promoted to `BigInt` on the first overflow; nothing ever wraps.

use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// An element of Z[q, q^-1].
///
/// Stored densely from the lowest to the highest nonzero exponent. Both ends
/// are trimmed, the zero polynomial has no coefficients, and the small form
/// is used whenever every coefficient fits in an `i64`, so derived equality
/// and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i32,
    c: Coeffs,
}

fn trim_range<T>(v: &[T], is_zero: impl Fn(&T) -> bool) -> Option<(usize, usize)> {
    let start = v.iter().position(|x| !is_zero(x))?;
    let end = v.iter().rposition(|x| !is_zero(x)).unwrap();
    Some((start, end + 1))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, c: Coeffs::Small(Vec::new()) }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::from_small(e, vec![c])
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// `(-q)^e`, the scalar appearing in merges and splits.
    pub fn neg_q_pow(e: i32) -> Self {
        Self::monomial(if e.rem_euclid(2) == 0 { 1 } else { -1 }, e)
    }

    pub fn from_small(lo: i32, v: Vec<i64>) -> Self {
        match trim_range(&v, |x| *x == 0) {
            None => Self::zero(),
            Some((s, e)) => {
                let v = if s == 0 && e == v.len() { v } else { v[s..e].to_vec() };
                LaurentPoly { lo: lo + s as i32, c: Coeffs::Small(v) }
            }
        }
    }

    pub fn from_big(lo: i32, v: Vec<BigInt>) -> Self {
        match trim_range(&v, |x| x.is_zero()) {
            None => Self::zero(),
            Some((s, e)) => {
                let v = &v[s..e];
                let lo = lo + s as i32;
                let small: Option<Vec<i64>> = v.iter().map(|x| x.to_i64()).collect();
                match small {
                    Some(sv) => LaurentPoly { lo, c: Coeffs::Small(sv) },
                    None => LaurentPoly { lo, c: Coeffs::Big(v.to_vec()) },
                }
            }
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            v[(e - lo) as usize] += c;
        }
        Self::from_big(lo, v)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && matches!(&self.c, Coeffs::Small(v) if v.as_slice() == [1])
    }

    /// Number of stored coefficients, `hi - lo + 1` (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        match &self.c {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for zero).
    pub fn low_exp(&self) -> i32 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient (0 for zero).
    pub fn high_exp(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.lo + self.len() as i32 - 1
        }
    }

    pub(crate) fn big_coeffs(&self) -> Cow<'_, [BigInt]> {
        match &self.c {
            Coeffs::Small(v) => Cow::Owned(v.iter().map(|&x| BigInt::from(x)).collect()),
            Coeffs::Big(v) => Cow::Borrowed(v.as_slice()),
        }
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i32) -> BigInt {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.len() {
            return BigInt::zero();
        }
        match &self.c {
            Coeffs::Small(v) => BigInt::from(v[i as usize]),
            Coeffs::Big(v) => v[i as usize].clone(),
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending in the exponent.
    pub fn terms(&self) -> Vec<(i32, BigInt)> {
        self.big_coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.lo + i as i32, c.clone()))
            .collect()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeff(self.high_exp())
    }

    pub fn trailing_coeff(&self) -> BigInt {
        self.coeff(self.lo)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn neg(&self) -> Self {
        match &self.c {
            Coeffs::Small(v) => {
                let n: Option<Vec<i64>> = v.iter().map(|x| x.checked_neg()).collect();
                match n {
                    Some(n) => LaurentPoly { lo: self.lo, c: Coeffs::Small(n) },
                    None => Self::from_big(self.lo, v.iter().map(|&x| -BigInt::from(x)).collect()),
                }
            }
            Coeffs::Big(v) => Self::from_big(self.lo, v.iter().map(|x| -x).collect()),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let lo = self.lo.min(o.lo);
        let hi = self.high_exp().max(o.high_exp());
        let len = (hi - lo + 1) as usize;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &o.c) {
            let mut v = vec![0i64; len];
            let off_a = (self.lo - lo) as usize;
            v[off_a..off_a + a.len()].copy_from_slice(a);
            let off_b = (o.lo - lo) as usize;
            let mut ok = true;
            for (i, &y) in b.iter().enumerate() {
                let r = if negate { v[off_b + i].checked_sub(y) } else { v[off_b + i].checked_add(y) };
                match r {
                    Some(r) => v[off_b + i] = r,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Self::from_small(lo, v);
            }
        }
        let mut v = vec![BigInt::zero(); len];
        for (i, x) in self.big_coeffs().iter().enumerate() {
            v[(self.lo - lo) as usize + i] = x.clone();
        }
        for (i, y) in o.big_coeffs().iter().enumerate() {
            let slot = &mut v[(o.lo - lo) as usize + i];
            if negate {
                *slot -= y;
            } else {
                *slot += y;
            }
        }
        Self::from_big(lo, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let lo = self.lo + o.lo;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &o.c) {
            if let Some(v) = mul_small(a, b) {
                return Self::from_small(lo, v);
            }
        }
        let a = self.big_coeffs();
        let b = o.big_coeffs();
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Self::from_big(lo, v)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if let (Some(k), Coeffs::Small(v)) = (k.to_i64(), &self.c) {
            let s: Option<Vec<i64>> = v.iter().map(|x| x.checked_mul(k)).collect();
            if let Some(s) = s {
                return Self::from_small(self.lo, s);
            }
        }
        Self::from_big(self.lo, self.big_coeffs().iter().map(|x| x * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = -self.high_exp();
        match &self.c {
            Coeffs::Small(v) => Self::from_small(lo, v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Self::from_big(lo, v.iter().rev().cloned().collect()),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in Z[q, q^-1].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.len() < d.len() {
            return None;
        }
        let lo = self.lo - d.lo;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &d.c) {
            let lc = *b.last().unwrap();
            if lc == 1 || lc == -1 {
                match div_small_unit(a, b) {
                    Some(Some(qv)) => return Some(Self::from_small(lo, qv)),
                    Some(None) => return None,
                    None => {}
                }
            }
        }
        div_big(&self.big_coeffs(), &d.big_coeffs()).map(|qv| Self::from_big(lo, qv))
    }

    /// Value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() && self.lo < 0 {
            return Err(Error::PoleAtValue(x.to_string()));
        }
        let mut acc = BigRational::zero();
        for c in self.big_coeffs().iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        let xp = if self.lo >= 0 { pow_rat(x, self.lo as u32) } else { pow_rat(x, (-self.lo) as u32).recip() };
        Ok(acc * xp)
    }

    /// Value modulo the prime `p` at `q = x` (with `x` invertible mod `p`).
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let mut acc = 0u64;
        match &self.c {
            Coeffs::Small(v) => {
                for &c in v.iter().rev() {
                    acc = add_mod(mul_mod(acc, x, p), c.rem_euclid(p as i64) as u64, p);
                }
            }
            Coeffs::Big(v) => {
                let pb = BigInt::from(p);
                for c in v.iter().rev() {
                    let r = c.mod_floor(&pb).to_u64().unwrap();
                    acc = add_mod(mul_mod(acc, x, p), r, p);
                }
            }
        }
        let base = if self.lo >= 0 { x } else { inv_mod(x, p) };
        mul_mod(acc, pow_mod(base, self.lo.unsigned_abs() as u64, p), p)
    }

    /// Value at q = 1.
    pub fn at_one(&self) -> BigInt {
        self.big_coeffs().iter().sum()
    }

    /// Rendering as a sorted `exponent:coefficient` list, e.g. `-1:1 1:1`.
    pub fn term_list(&self) -> String {
        self.terms().iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(" ")
    }
}

fn mul_small(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut acc = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = acc[i + j].checked_add(x * y as i128)?;
        }
    }
    acc.into_iter().map(|x| i64::try_from(x).ok()).collect()
}

/// Division by a polynomial whose leading coefficient is a unit. The outer
/// `None` reports an overflow, the inner one a nonzero remainder.
fn div_small_unit(a: &[i64], b: &[i64]) -> Option<Option<Vec<i64>>> {
    let m = b.len() - 1;
    let lc = b[m] as i128;
    let mut r: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let steps = a.len() - m;
    let mut q = vec![0i64; steps];
    for i in (0..steps).rev() {
        let t = r[i + m] * lc;
        if t == 0 {
            continue;
        }
        q[i] = i64::try_from(t).ok()?;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = r[i + j].checked_sub(t.checked_mul(bj as i128)?)?;
        }
    }
    if r[..m].iter().any(|&x| x != 0) {
        return Some(None);
    }
    Some(Some(q))
}

fn div_big(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = b.len() - 1;
    let lc = &b[m];
    let mut r = a.to_vec();
    let steps = a.len() - m;
    let mut q = vec![BigInt::zero(); steps];
    for i in (0..steps).rev() {
        if r[i + m].is_zero() {
            continue;
        }
        let (t, rem) = r[i + m].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &t * bj;
        }
        q[i] = t;
    }
    if r[..m].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(q)
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut r = BigRational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "no inverse of zero");
    pow_mod(a, p - 2, p)
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `q^2 + 2 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomials over Z with ascending coefficients, used for gcds on
/// the slow path of rational function arithmetic.
pub(crate) mod upoly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn content(a: &[BigInt]) -> BigInt {
        a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn primitive(a: &[BigInt]) -> Vec<BigInt> {
        let c = content(a);
        if c.is_zero() {
            return Vec::new();
        }
        let mut v: Vec<BigInt> = a.iter().map(|x| x / &c).collect();
        if v.last().is_some_and(|x| x.is_negative()) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        v
    }

    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        let m = b.len() - 1;
        let lc = &b[m];
        while r.len() > m && !r.is_empty() {
            let k = r.len() - 1 - m;
            let t = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &t * bj;
            }
            r = trim(r);
        }
        r
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() {
            return primitive_with_content(b);
        }
        if b.is_empty() {
            return primitive_with_content(a);
        }
        let g = content(a).gcd(&content(b));
        let (mut x, mut y) = (primitive(a), primitive(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            y = primitive(&r);
        }
        x.iter().map(|c| c * &g).collect()
    }

    fn primitive_with_content(a: &[BigInt]) -> Vec<BigInt> {
        let mut v = a.to_vec();
        if v.last().is_some_and(|x| x.is_negative()) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        v
    }
}
