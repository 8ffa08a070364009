//! Weights of sl_n: 01-sequences, fundamental coordinates, positive roots,
//! and the string data attached to a 01-sequence.

mod paths;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use paths::{count_paths, enumerate_paths, Path};

/// A weight of the a-th fundamental representation, written as a 01-sequence
/// of length n with a ones. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GlWeight {
    bits: Vec<u8>,
}

impl GlWeight {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() || bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWeight(format!("{bits:?}")));
        }
        Ok(GlWeight { bits })
    }

    /// The highest weight `1..10..0` of the a-th fundamental representation.
    pub fn highest(n: usize, a: usize) -> Self {
        assert!(a <= n);
        GlWeight { bits: (0..n).map(|i| (i < a) as u8).collect() }
    }

    /// All of Omega(a), in descending lexicographic order.
    pub fn level(n: usize, a: usize) -> Vec<GlWeight> {
        let mut out = Vec::new();
        for m in 0u32..(1u32 << n) {
            if m.count_ones() as usize == a {
                out.push(GlWeight { bits: (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect() });
            }
        }
        out.sort();
        out.reverse();
        out
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of ones, the fundamental index.
    pub fn a(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_highest(&self) -> bool {
        *self == Self::highest(self.n(), self.a())
    }

    /// Subset of `{1..n}` at the ones, as a bitmask with bit `i-1` for `i`.
    pub fn mask(&self) -> u32 {
        self.bits.iter().enumerate().filter(|(_, &b)| b == 1).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn from_mask(n: usize, m: u32) -> Self {
        GlWeight { bits: (0..n).map(|i| ((m >> i) & 1) as u8).collect() }
    }

    /// Fundamental coordinates: `bits[i] - bits[i+1]`.
    pub fn sl_coords(&self) -> SlWeight {
        SlWeight { coords: self.bits.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect() }
    }

    /// The pairs `(i, j)`, `i < j`, with a zero at i and a one at j.
    pub fn inversion_set(&self) -> Vec<PositiveRoot> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.bits[i] == 0 && self.bits[j] == 1 {
                    out.push(PositiveRoot { i: i + 1, j: j + 1 });
                }
            }
        }
        out
    }

    /// Coordinatewise difference `self - other` in gl coordinates.
    pub fn gl_sub(&self, o: &GlWeight) -> Vec<i64> {
        self.bits.iter().zip(&o.bits).map(|(&x, &y)| x as i64 - y as i64).collect()
    }

    pub fn elementary_data(&self) -> ElementaryData {
        ElementaryData::of(self)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for GlWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits: Option<Vec<u8>> = s
            .trim()
            .chars()
            .filter(|c| *c != ',')
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect();
        Self::new(bits.ok_or_else(|| Error::InvalidWeight(s.to_string()))?)
    }
}

impl TryFrom<String> for GlWeight {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GlWeight> for String {
    fn from(w: GlWeight) -> String {
        w.to_string()
    }
}

/// An sl_n weight in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SlWeight {
    coords: Vec<i64>,
}

impl SlWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        SlWeight { coords }
    }

    pub fn zero(n: usize) -> Self {
        SlWeight { coords: vec![0; n - 1] }
    }

    /// `omega_a`; zero for `a = 0` or `a = n`.
    pub fn fundamental(n: usize, a: usize) -> Self {
        GlWeight::highest(n, a).sl_coords()
    }

    /// rho, all ones.
    pub fn rho(n: usize) -> Self {
        SlWeight { coords: vec![1; n - 1] }
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate of `omega_i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn ensure_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `sum_i lambda_i`.
    pub fn level(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn add(&self, o: &SlWeight) -> SlWeight {
        SlWeight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &SlWeight) -> SlWeight {
        SlWeight { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn add_gl(&self, mu: &GlWeight) -> SlWeight {
        self.add(&mu.sl_coords())
    }

    pub fn plus_fundamental(&self, a: usize) -> SlWeight {
        self.add(&Self::fundamental(self.n(), a))
    }

    pub fn minus_fundamental(&self, a: usize) -> SlWeight {
        self.sub(&Self::fundamental(self.n(), a))
    }

    /// `lambda >= nu` in the dominance order: the difference is a nonnegative
    /// integer combination of simple roots.
    pub fn dominates(&self, nu: &SlWeight) -> bool {
        let n = self.n() as i64;
        let d = self.sub(nu).coords;
        // eps-coordinates of the difference, up to the all-ones vector
        let mut v = vec![0i64; d.len() + 1];
        for j in (0..d.len()).rev() {
            v[j] = v[j + 1] + d[j];
        }
        let s: i64 = v.iter().sum();
        if s.rem_euclid(n) != 0 {
            return false;
        }
        let mut partial = 0;
        for (j, x) in v.iter().enumerate().take(d.len()) {
            partial += x;
            if n * partial - (j as i64 + 1) * s < 0 {
                return false;
            }
        }
        true
    }

    /// Index i repeated `lambda_i` times, weakly increasing.
    pub fn canonical_sequence(&self) -> Result<Vec<u8>> {
        self.ensure_dominant()?;
        let mut out = Vec::new();
        for (i, &c) in self.coords.iter().enumerate() {
            out.extend(std::iter::repeat_n((i + 1) as u8, c as usize));
        }
        Ok(out)
    }

    /// The weight of a word of fundamental indices.
    pub fn of_word(n: usize, word: &[u8]) -> SlWeight {
        word.iter().fold(Self::zero(n), |w, &a| w.plus_fundamental(a as usize))
    }

    /// All dominant weights with `sum lambda_i <= bound`, in lexicographic order.
    pub fn dominant_up_to(n: usize, bound: i64) -> Vec<SlWeight> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; n - 1];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<SlWeight>) {
            if i == cur.len() {
                out.push(SlWeight { coords: cur.clone() });
                return;
            }
            for c in 0..=left {
                cur[i] = c;
                rec(i + 1, left - c, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, bound, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for SlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for SlWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let coords: std::result::Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let coords = coords.map_err(|_| Error::InvalidWeight(s.to_string()))?;
        if coords.is_empty() {
            return Err(Error::InvalidWeight(s.to_string()));
        }
        Ok(SlWeight { coords })
    }
}

impl TryFrom<String> for SlWeight {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SlWeight> for String {
    fn from(w: SlWeight) -> String {
        w.to_string()
    }
}

/// The positive root `eps_i - eps_j`, 1-based, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

pub fn positive_roots(n: usize) -> Vec<PositiveRoot> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(PositiveRoot { i, j });
        }
    }
    out
}

/// `A(lambda, alpha) = <lambda + rho, alpha> = sum_{k=i}^{j-1} (lambda_k + 1)`.
pub fn pairing_a(lambda: &SlWeight, alpha: PositiveRoot) -> i64 {
    (alpha.i..alpha.j).map(|k| lambda.get(k) + 1).sum()
}

/// Whether `lambda + mu` is dominant.
pub fn is_dominant_sum(lambda: &SlWeight, mu: &GlWeight) -> bool {
    lambda.add_gl(mu).is_dominant()
}

/// The 1-strings and 0-strings of a 01-sequence.
///
/// `y_i` ends the i-th 1-string and `x_i` the i-th 0-string (positions are
/// 1-based; an empty leading 1-string gives `y_1 = 0`). `alpha_i` counts the
/// ones in the first i 1-strings and `beta_i` the zeros in the first i
/// 0-strings. A trailing 0-string is not counted in `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryData {
    pub k: usize,
    pub y: Vec<usize>,
    pub x: Vec<usize>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl ElementaryData {
    pub fn of(mu: &GlWeight) -> Self {
        let bits = mu.bits();
        let mut runs: Vec<(u8, usize)> = Vec::new();
        for &b in bits {
            match runs.last_mut() {
                Some((v, len)) if *v == b => *len += 1,
                _ => runs.push((b, 1)),
            }
        }
        if runs.first().is_none_or(|r| r.0 == 0) {
            runs.insert(0, (1, 0));
        }
        if runs.last().unwrap().0 == 1 {
            runs.push((0, 0));
        }
        let pairs: Vec<(usize, usize)> = runs.chunks(2).map(|c| (c[0].1, c[1].1)).collect();
        let k = pairs.len() - 1;
        let (mut y, mut x, mut alpha, mut beta) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let (mut pos, mut ones, mut zeros) = (0, 0, 0);
        for (i, &(o, z)) in pairs.iter().enumerate() {
            pos += o;
            ones += o;
            y.push(pos);
            alpha.push(ones);
            if i < k {
                pos += z;
                zeros += z;
                x.push(pos);
                beta.push(zeros);
            }
        }
        let d = ElementaryData { k, y, x, alpha, beta };
        debug_assert!(d.consistent());
        d
    }

    /// `alpha_i + beta_i = x_i` and `alpha_{i+1} + beta_i = y_{i+1}`.
    pub fn consistent(&self) -> bool {
        (0..self.k).all(|i| self.alpha[i] + self.beta[i] == self.x[i] && self.alpha[i + 1] + self.beta[i] == self.y[i + 1])
    }

    /// Rebuilds the 01-sequence of length n.
    pub fn to_weight(&self, n: usize) -> GlWeight {
        let mut bits = vec![0u8; n];
        let mut start = 0;
        for i in 0..=self.k {
            for b in bits.iter_mut().take(self.y[i]).skip(start) {
                *b = 1;
            }
            if i < self.k {
                start = self.x[i];
            }
        }
        GlWeight { bits }
    }
}
