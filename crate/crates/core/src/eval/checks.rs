//! Triangularity of light ladders and ranks of double-ladder spans.

use std::collections::HashMap;

use num_rational::BigRational;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::basis::TensorBasis;
use super::functor::eval_ladder;
use super::matrix::{rank_mod_p, PRIME};
use crate::error::Result;
use crate::qring::{inv_mod, mul_mod, LaurentPoly};
use crate::webs::{light_ladder, neutral_sort};
use crate::weights::{enumerate_paths, Path, SlWeight};

fn word_labels(word: &[u8]) -> Vec<u32> {
    word.iter().map(|&a| a as u32).collect()
}

/// `+-q^k`.
fn is_unit(p: &LaurentPoly) -> bool {
    p.is_monomial() && {
        let c = p.leading_coeff();
        c == 1.into() || c == (-1).into()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangularityReport {
    pub n: usize,
    pub word: Vec<u8>,
    pub paths: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl TriangularityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn path_name(p: &Path) -> String {
    p.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(".")
}

/// For each path `e`, applies the light ladder of `e` to every `x_{w,f}`:
/// zero when `f > e`, a unit multiple of `x_top` when `f = e`, and no `x_top`
/// component otherwise. Also checks that sorting the word with neutral rungs
/// sends `x_top` to a unit multiple of `x_top` and nothing else onto it.
pub fn triangularity_report(n: usize, word: &[u8]) -> Result<TriangularityReport> {
    let paths = enumerate_paths(n, word, None);
    let labels = word_labels(word);
    let basis = TensorBasis::new(n, &labels)?;
    let mut failures = Vec::new();
    let mut checks = 0;
    for e in &paths {
        let m = eval_ladder(&light_ladder(n, word, e)?);
        let mt = m.m.transpose();
        for f in &paths {
            checks += 1;
            let col = mt.row(basis.index(&f.basis_tuple()));
            let tag = format!("e={} f={}", path_name(e), path_name(f));
            if f == e {
                if col.len() != 1 || col[0].0 != 0 || !is_unit(&col[0].1) {
                    failures.push(format!("{tag}: diagonal is not a unit multiple of x_top"));
                }
            } else if f.dominates(e) {
                if !col.is_empty() {
                    failures.push(format!("{tag}: f > e but image is nonzero"));
                }
            } else if col.first().is_some_and(|c| c.0 == 0) {
                let rel = if e.dominates(f) { "f < e" } else { "incomparable" };
                failures.push(format!("{tag}: x_top coefficient is nonzero ({rel})"));
            }
        }
    }
    let mut sorted = labels.clone();
    sorted.sort();
    let nl = eval_ladder(&neutral_sort(n, &labels, &sorted)?).m;
    checks += 1;
    let top = nl.row(0);
    let first_col = nl.transpose();
    let c0 = first_col.row(0);
    if c0.len() != 1 || c0[0].0 != 0 || !is_unit(&c0[0].1) || top.len() != 1 {
        failures.push("neutral sort is not unitriangular at x_top".into());
    }
    Ok(TriangularityReport { n, word: word.to_vec(), paths: paths.len(), checks, failures })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomRankReport {
    pub n: usize,
    pub source: Vec<u8>,
    pub target: Vec<u8>,
    pub count: usize,
    pub rank: usize,
    pub points: Vec<String>,
    pub certified: bool,
}

/// Light ladders of a word restricted to its dominant subbasis, grouped by
/// endpoint. Each entry lists sparse columns, one per path of the word.
struct Restricted {
    sub: Vec<usize>,
    by_end: HashMap<SlWeight, Vec<Vec<Vec<(usize, LaurentPoly)>>>>,
}

fn restricted(n: usize, word: &[u8], flipped: bool) -> Result<Restricted> {
    let paths = enumerate_paths(n, word, None);
    let basis = TensorBasis::new(n, &word_labels(word))?;
    let sub: Vec<usize> = paths.iter().map(|p| basis.index(&p.basis_tuple())).collect();
    let mut by_end: HashMap<SlWeight, Vec<Vec<Vec<(usize, LaurentPoly)>>>> = HashMap::new();
    for p in &paths {
        let l = light_ladder(n, word, p)?;
        let m = if flipped { eval_ladder(&l.flip()).m } else { eval_ladder(&l).m.transpose() };
        // rows of `m` are indexed by the word basis in both cases
        let vecs: Vec<Vec<(usize, LaurentPoly)>> =
            sub.iter().map(|&i| m.row(i).iter().map(|(j, v)| (*j as usize, v.clone())).collect()).collect();
        by_end.entry(p.endpoint().clone()).or_default().push(vecs);
    }
    Ok(Restricted { sub, by_end })
}

fn at(v: &[(usize, LaurentPoly)], x: u64) -> Vec<(usize, u64)> {
    v.iter().map(|(i, p)| (*i, p.eval_mod(x, PRIME))).filter(|e| e.1 != 0).collect()
}

fn dot(a: &[(usize, u64)], b: &[(usize, u64)]) -> u64 {
    let (mut i, mut j, mut acc) = (0, 0, 0u128);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = (acc + a[i].1 as u128 * b[j].1 as u128) % PRIME as u128;
                i += 1;
                j += 1;
            }
        }
    }
    acc as u64
}

/// Rank of the span of all double ladders from `source` to `target`,
/// compared with the number of path pairs. Each double ladder is restricted
/// to the dominant subbases and specialized at random rational `q`, reduced
/// modulo a large prime; a specialized rank is a lower bound for the generic
/// rank and the pair count an upper bound, so equality certifies both.
pub fn hom_rank(n: usize, source: &[u8], target: &[u8], points: usize, seed: u64) -> Result<HomRankReport> {
    let src = restricted(n, source, false)?;
    let tgt = restricted(n, target, true)?;
    let mut count = 0;
    for (w, es) in &src.by_end {
        if let Some(fs) = tgt.by_end.get(w) {
            count += es.len() * fs.len();
        }
    }
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut best = 0;
    let mut used = Vec::new();
    for _ in 0..points.max(3) {
        let (a, b): (u64, u64) = (rng.gen_range(2..1000), rng.gen_range(1..1000));
        used.push(BigRational::new((a as i64).into(), (b as i64).into()).to_string());
        let x = mul_mod(a, inv_mod(b, PRIME), PRIME);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(count);
        let mut ends: Vec<&SlWeight> = src.by_end.keys().collect();
        ends.sort();
        for w in ends {
            let Some(fs) = tgt.by_end.get(w) else { continue };
            let es: Vec<Vec<Vec<(usize, u64)>>> =
                src.by_end[w].iter().map(|cols| cols.iter().map(|c| at(c, x)).collect()).collect();
            let fs: Vec<Vec<Vec<(usize, u64)>>> =
                fs.iter().map(|rs| rs.iter().map(|r| at(r, x)).collect()).collect();
            for e in &es {
                for f in &fs {
                    let mut v = Vec::with_capacity(tgt.sub.len() * src.sub.len());
                    for r in f {
                        for c in e {
                            v.push(dot(r, c));
                        }
                    }
                    rows.push(v);
                }
            }
        }
        let r = if rows.is_empty() { 0 } else { rank_mod_p(rows).0 };
        best = best.max(r);
    }
    Ok(HomRankReport {
        n,
        source: source.to_vec(),
        target: target.to_vec(),
        count,
        rank: best,
        points: used,
        certified: best == count,
    })
}
