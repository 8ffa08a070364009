//! The fraction field Q(q) in canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cyclo::{self, CycExps};
use super::poly::{upoly, LaurentPoly};
use crate::error::{Error, Result};

/// Denominator of a canonical fraction.
///
/// `Cyc` holds a product of cyclotomic polynomials by its exponents; `Gen`
/// holds any other polynomial (lowest exponent 0, positive leading
/// coefficient), integer content included. The split is unique, so
/// structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Den {
    Cyc(CycExps),
    Gen(LaurentPoly),
}

/// A rational function `num / den` with `num` and `den` coprime, `den` a
/// genuine polynomial with positive leading coefficient and nonzero
/// constant term, and all powers of q carried by `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: Den,
}

impl RatFun {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFun { num: p, den: Den::Cyc(Vec::new()) }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(
            LaurentPoly::from_terms([(0, r.numer().clone())]),
            LaurentPoly::from_terms([(0, r.denom().clone())]),
        )
        .expect("rational has nonzero denominator")
    }

    /// Canonical form of `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        Self::from_parts(num, den)
    }

    fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low_exp() - den.low_exp();
        let n = num.big_coeffs().into_owned();
        let d = den.big_coeffs().into_owned();
        let g = upoly::gcd(&n, &d);
        let gp = LaurentPoly::from_big(0, g);
        let mut n = LaurentPoly::from_big(0, n).div_exact(&gp).expect("gcd divides");
        let mut d = LaurentPoly::from_big(0, d).div_exact(&gp).expect("gcd divides");
        if d.leading_coeff().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        let num = n.shift(shift);
        let den = match cyclo::factor(&d) {
            Some(e) => Den::Cyc(e),
            None => Den::Gen(d),
        };
        Ok(RatFun { num, den })
    }

    fn from_cyc(num: LaurentPoly, exps: CycExps) -> Self {
        let (num, exps) = cyclo::cancel(num, exps);
        RatFun { num, den: Den::Cyc(exps) }
    }

    /// The quantum integer `[k]`.
    pub fn qint(k: i64) -> Self {
        Self::from_poly(super::qint(k))
    }

    /// `prod [a_i] / prod [b_j]`, every `b_j` nonzero.
    pub fn qint_ratio(nums: &[i64], dens: &[i64]) -> Result<Self> {
        let mut num = LaurentPoly::one();
        for &a in nums {
            num = num.mul(&super::qint(a));
        }
        let mut exps = Vec::new();
        for &b in dens {
            if b == 0 {
                return Err(Error::ZeroDenominator);
            }
            let (s, e) = cyclo::qint_factors(b.unsigned_abs() as u32);
            num = num.shift(-s);
            if b < 0 {
                num = num.neg();
            }
            exps = cyclo::merge_add(&exps, &e);
        }
        Ok(Self::from_cyc(num, exps))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator as a polynomial.
    pub fn denominator(&self) -> LaurentPoly {
        match &self.den {
            Den::Cyc(e) => cyclo::product(e),
            Den::Gen(p) => p.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den == Den::Cyc(Vec::new())
    }

    /// Laurent polynomial value when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        match &self.den {
            Den::Cyc(e) if e.is_empty() => Some(&self.num),
            _ => None,
        }
    }

    /// Rational constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.num.is_monomial() || self.num.low_exp() != 0 {
            return None;
        }
        let d = self.denominator();
        if !d.is_monomial() || d.low_exp() != 0 {
            return None;
        }
        Some(BigRational::new(self.num.coeff(0), d.coeff(0)))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        match (&self.den, &o.den) {
            (Den::Cyc(a), Den::Cyc(b)) => {
                if a == b {
                    Self::from_cyc(self.num.add(&o.num), a.clone())
                } else {
                    let l = cyclo::merge_max(a, b);
                    let x = self.num.mul(&cyclo::lift(a, &l));
                    let y = o.num.mul(&cyclo::lift(b, &l));
                    Self::from_cyc(x.add(&y), l)
                }
            }
            _ => {
                let (d1, d2) = (self.denominator(), o.denominator());
                let num = self.num.mul(&d2).add(&o.num.mul(&d1));
                Self::from_parts(num, d1.mul(&d2)).expect("nonzero denominator")
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        match (&self.den, &o.den) {
            (Den::Cyc(a), Den::Cyc(b)) => {
                if a.is_empty() && b.is_empty() {
                    return Self::from_poly(self.num.mul(&o.num));
                }
                let (n1, b1) = cyclo::cancel(self.num.clone(), b.clone());
                let (n2, a1) = cyclo::cancel(o.num.clone(), a.clone());
                RatFun { num: n1.mul(&n2), den: Den::Cyc(cyclo::merge_add(&a1, &b1)) }
            }
            _ => Self::from_parts(self.num.mul(&o.num), self.denominator().mul(&o.denominator()))
                .expect("nonzero denominator"),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let shift = self.num.low_exp();
        let mut p = self.num.shift(-shift);
        let mut top = self.denominator().shift(-shift);
        if p.leading_coeff().is_negative() {
            p = p.neg();
            top = top.neg();
        }
        let den = match cyclo::factor(&p) {
            Some(e) => Den::Cyc(e),
            None => Den::Gen(p),
        };
        Ok(RatFun { num: top, den })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
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
        let d = self.denominator();
        Self::from_parts(self.num.bar(), d.bar()).expect("nonzero denominator")
    }

    /// Exact value at the rational point `x`.
    pub fn specialize(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.denominator().eval_rational(x)?;
        if d.is_zero() {
            return Err(Error::PoleAtValue(x.to_string()));
        }
        Ok(self.num.eval_rational(x)? / d)
    }

    /// Value modulo `p` at `q = x`, or `None` at a pole.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.denominator().eval_mod(x, p);
        if d == 0 {
            return None;
        }
        Some(super::poly::mul_mod(self.num.eval_mod(x, p), super::poly::inv_mod(d, p), p))
    }

    /// `{"num": [[exp, coef], ...], "den": [[exp, coef], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({ "den": terms_json(&self.denominator()), "num": terms_json(&self.num) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = terms_from_json(v.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
        let den = terms_from_json(v.get("den").ok_or_else(|| Error::Parse("missing den".into()))?)?;
        Self::from_parts(num, den)
    }
}

fn terms_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .into_iter()
            .map(|(e, c)| {
                let c: serde_json::Number = c.to_string().parse().expect("integer literal");
                json!([e, c])
            })
            .collect(),
    )
}

fn terms_from_json(v: &Value) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("term list must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse(format!("bad term {t}")))?;
        let e = pair[0].as_i64().ok_or_else(|| Error::Parse(format!("bad exponent {t}")))?;
        let c: BigInt = pair[1].to_string().parse().map_err(|_| Error::Parse(format!("bad coefficient {t}")))?;
        terms.push((e as i32, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.denominator();
        if d.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, d)
        }
    }
}

/// Running sum of products with cyclotomic denominators, reduced once at
/// the end instead of after every term.
#[derive(Clone, Debug, Default)]
pub struct RatAcc {
    num: LaurentPoly,
    exps: CycExps,
    used: bool,
    slow: Option<RatFun>,
}

impl RatAcc {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, n: LaurentPoly, e: CycExps) {
        if !self.used {
            self.num = n;
            self.exps = e;
            self.used = true;
        } else if self.exps == e {
            self.num = self.num.add(&n);
        } else {
            let l = cyclo::merge_max(&self.exps, &e);
            let x = self.num.mul(&cyclo::lift(&self.exps, &l));
            let y = n.mul(&cyclo::lift(&e, &l));
            self.num = x.add(&y);
            self.exps = l;
        }
    }

    fn push_slow(&mut self, r: RatFun) {
        self.slow = Some(match self.slow.take() {
            None => r,
            Some(s) => s.add(&r),
        });
    }

    pub fn add(&mut self, a: &RatFun) {
        if a.is_zero() {
            return;
        }
        match &a.den {
            Den::Cyc(e) => self.push(a.num.clone(), e.clone()),
            Den::Gen(_) => self.push_slow(a.clone()),
        }
    }

    pub fn add_prod(&mut self, a: &RatFun, b: &RatFun) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&a.den, &b.den) {
            (Den::Cyc(x), Den::Cyc(y)) => {
                let e = if x.is_empty() {
                    y.clone()
                } else if y.is_empty() {
                    x.clone()
                } else {
                    cyclo::merge_add(x, y)
                };
                self.push(a.num.mul(&b.num), e)
            }
            _ => self.push_slow(a.mul(b)),
        }
    }

    pub fn finish(self) -> RatFun {
        let fast = if self.used { RatFun::from_cyc(self.num, self.exps) } else { RatFun::zero() };
        match self.slow {
            None => fast,
            Some(s) => fast.add(&s),
        }
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl std::ops::Mul for RatFun {
    type Output = RatFun;
    fn mul(self, o: RatFun) -> RatFun {
        RatFun::mul(&self, &o)
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl std::ops::Add for RatFun {
    type Output = RatFun;
    fn add(self, o: RatFun) -> RatFun {
        RatFun::add(&self, &o)
    }
}
