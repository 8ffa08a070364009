//! Web relations as identities between sums of ladders.

use serde::Serialize;

use super::functor::eval_sum;
use crate::error::{Error, Result};
use crate::qring::{qbinom, LaurentPoly};
use crate::webs::{Ladder, Rung};

/// One side of a relation: a linear combination of ladders.
#[derive(Clone, Debug)]
pub struct Side(pub Vec<(LaurentPoly, Ladder)>);

/// Both sides of a relation at fixed labels, sharing a boundary.
#[derive(Clone, Debug)]
pub struct Instance {
    pub params: Vec<i64>,
    pub mirrored: bool,
    pub n: usize,
    pub bottom: Vec<u32>,
    pub top: Vec<u32>,
    pub lhs: Side,
    pub rhs: Side,
}

impl Instance {
    pub fn mirror(&self) -> Instance {
        let m = |s: &Side| Side(s.0.iter().map(|(c, l)| (c.clone(), l.mirror())).collect());
        Instance {
            params: self.params.clone(),
            mirrored: !self.mirrored,
            n: self.n,
            bottom: self.bottom.iter().rev().copied().collect(),
            top: self.top.iter().rev().copied().collect(),
            lhs: m(&self.lhs),
            rhs: m(&self.rhs),
        }
    }

    /// Evaluates both sides and compares them exactly.
    pub fn holds(&self) -> Result<bool> {
        let l = eval_sum(&self.lhs.0, &self.top, &self.bottom, self.n)?;
        let r = eval_sum(&self.rhs.0, &self.top, &self.bottom, self.n)?;
        Ok(l.m == r.m)
    }
}

/// A family of relations indexed by integer parameters.
pub trait Relation: Send + Sync {
    fn name(&self) -> &'static str;
    fn params(&self) -> &'static [&'static str];
    /// The instance at the given parameters, or `None` when some label or
    /// crossbar on the left side is out of range.
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance>;
}

fn ladder(n: usize, bottom: &[i64], rungs: &[(usize, i64, bool)]) -> Option<Ladder> {
    if bottom.iter().any(|&x| x < 0 || x > n as i64) || rungs.iter().any(|r| r.1 < 0) {
        return None;
    }
    let rungs = rungs
        .iter()
        .filter(|r| r.1 > 0)
        .map(|&(pos, s, ne)| if ne { Rung::ne(pos, s as u32) } else { Rung::nw(pos, s as u32) })
        .collect();
    Ladder::new(n, bottom.iter().map(|&x| x as u32).collect(), rungs).ok()
}

fn instance(n: usize, p: &[i64], lhs: Vec<(LaurentPoly, Ladder)>, rhs: Vec<(LaurentPoly, Option<Ladder>)>) -> Option<Instance> {
    let first = &lhs.first()?.1;
    let bottom = first.bottom.clone();
    let top = first.top();
    let rhs = rhs
        .into_iter()
        .filter_map(|(c, l)| l.map(|l| (c, l)))
        .filter(|(c, _)| !c.is_zero())
        .collect::<Vec<_>>();
    Some(Instance { params: p.to_vec(), mirrored: false, n, bottom, top, lhs: Side(lhs), rhs: Side(rhs) })
}

const NE: bool = true;
const NW: bool = false;

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

/// Merging into, or splitting from, a middle upright in either order.
pub struct Associativity;

impl Relation for Associativity {
    fn name(&self) -> &'static str {
        "associativity"
    }
    fn params(&self) -> &'static [&'static str] {
        &["a", "b", "c", "s", "r", "variant"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[a, b, c, s, r, v] = p else { return None };
        if s < 1 || r < 1 || v > 1 {
            return None;
        }
        let bottom = [a, b, c];
        let (x, y) = if v == 0 { ((0, s, NE), (1, r, NW)) } else { ((0, r, NW), (1, s, NE)) };
        let l = ladder(n, &bottom, &[x, y])?;
        let rr = ladder(n, &bottom, &[y, x]);
        instance(n, p, vec![(one(), l)], vec![(one(), rr)])
    }
}

/// Two parallel rungs fuse into one.
pub struct RungSquash;

impl Relation for RungSquash {
    fn name(&self) -> &'static str {
        "rung-squash"
    }
    fn params(&self) -> &'static [&'static str] {
        &["k", "l", "s", "r"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[k, l, s, r] = p else { return None };
        if s < 1 || r < 1 {
            return None;
        }
        let lhs = ladder(n, &[k, l], &[(0, s, NE), (0, r, NE)])?;
        let rhs = ladder(n, &[k, l], &[(0, r + s, NE)]);
        instance(n, p, vec![(one(), lhs)], vec![(qbinom(r + s, r), rhs)])
    }
}

/// An NE rung under an NW rung, rewritten with the tilts in the other order.
pub struct RungSwap;

impl Relation for RungSwap {
    fn name(&self) -> &'static str {
        "rung-swap"
    }
    fn params(&self) -> &'static [&'static str] {
        &["k", "l", "s", "r"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[k, l, s, r] = p else { return None };
        if s < 1 || r < 1 {
            return None;
        }
        let lhs = ladder(n, &[k, l], &[(0, s, NE), (0, r, NW)])?;
        let rhs = (0..=s.min(r))
            .map(|t| (qbinom(k - l + r - s, t), ladder(n, &[k, l], &[(0, r - t, NW), (0, s - t, NE)])))
            .collect();
        instance(n, p, vec![(one(), lhs)], rhs)
    }
}

/// The braid-like relation among three uprights.
pub struct R3;

impl Relation for R3 {
    fn name(&self) -> &'static str {
        "r3"
    }
    fn params(&self) -> &'static [&'static str] {
        &["a", "b", "c", "r", "s", "t"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[a, b, c, r, s, t] = p else { return None };
        if r < 1 || s < 1 || t < 1 {
            return None;
        }
        let bottom = [a, b, c];
        let lhs = ladder(n, &bottom, &[(1, r, NE), (0, s, NE), (1, t, NE)])?;
        let rhs = (0..=s)
            .map(|j| (qbinom(r + t - s, t - j), ladder(n, &bottom, &[(0, j, NE), (1, r + t, NE), (0, s - j, NE)])))
            .collect();
        instance(n, p, vec![(one(), lhs)], rhs)
    }
}

/// Split then merge: `(0, k+l)` through `(k, l)` and back; variant 1 is the
/// loop beside an upright `k` next to an upright `n`.
pub struct Bigon;

impl Relation for Bigon {
    fn name(&self) -> &'static str {
        "bigon"
    }
    fn params(&self) -> &'static [&'static str] {
        &["k", "l", "variant"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[k, l, v] = p else { return None };
        match v {
            0 => {
                if k < 1 || l < 0 {
                    return None;
                }
                let lhs = ladder(n, &[0, k + l], &[(0, k, NW), (0, k, NE)])?;
                let rhs = ladder(n, &[0, k + l], &[]);
                instance(n, p, vec![(one(), lhs)], vec![(qbinom(k + l, l), rhs)])
            }
            1 => {
                if l < 1 {
                    return None;
                }
                let ni = n as i64;
                let lhs = ladder(n, &[k, ni], &[(0, l, NW), (0, l, NE)])?;
                let rhs = ladder(n, &[k, ni], &[]);
                instance(n, p, vec![(one(), lhs)], vec![(qbinom(ni - k, l), rhs)])
            }
            _ => None,
        }
    }
}

/// A closed loop labeled `k`: on `(0, n)` by NW then NE, or on `(n, 0)` by
/// NE then NW (variant 1), which gives `qbinom(n, n-k)`.
pub struct Circle;

impl Relation for Circle {
    fn name(&self) -> &'static str {
        "circle"
    }
    fn params(&self) -> &'static [&'static str] {
        &["k", "variant"]
    }
    fn build(&self, n: usize, p: &[i64]) -> Option<Instance> {
        let &[k, v] = p else { return None };
        let ni = n as i64;
        if k < 1 {
            return None;
        }
        let (lhs, coeff) = match v {
            0 => (ladder(n, &[0, ni], &[(0, k, NW), (0, k, NE)])?, qbinom(ni, k)),
            1 => (ladder(n, &[ni, 0], &[(0, k, NE), (0, k, NW)])?, qbinom(ni, ni - k)),
            _ => return None,
        };
        let rhs = Ladder::identity(n, lhs.bottom.clone());
        instance(n, p, vec![(one(), lhs)], vec![(coeff, Some(rhs))])
    }
}

/// Every relation, in a fixed order.
pub fn registry() -> Vec<Box<dyn Relation>> {
    vec![
        Box::new(Associativity),
        Box::new(RungSquash),
        Box::new(RungSwap),
        Box::new(R3),
        Box::new(Bigon),
        Box::new(Circle),
    ]
}

pub fn relation(name: &str) -> Result<Box<dyn Relation>> {
    registry()
        .into_iter()
        .find(|r| r.name() == name)
        .ok_or_else(|| Error::InvalidPattern(format!("unknown relation {name}")))
}

/// All instances with every parameter in `[0, n]`, mirrors included.
pub fn instances(rel: &dyn Relation, n: usize) -> Vec<Instance> {
    let k = rel.params().len();
    let mut out = Vec::new();
    let mut p = vec![0i64; k];
    loop {
        if let Some(i) = rel.build(n, &p) {
            out.push(i.mirror());
            out.push(i);
        }
        let mut j = 0;
        loop {
            if j == k {
                return out;
            }
            p[j] += 1;
            if p[j] <= n as i64 {
                break;
            }
            p[j] = 0;
            j += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one instance given explicit parameters.
pub fn check_relation(name: &str, params: &[i64], n: usize) -> Result<bool> {
    let rel = relation(name)?;
    if params.len() != rel.params().len() {
        return Err(Error::InvalidPattern(format!("{name} takes parameters {:?}", rel.params())));
    }
    let inst = rel
        .build(n, params)
        .ok_or_else(|| Error::InvalidPattern(format!("{name} is not admissible at {params:?} for n = {n}")))?;
    Ok(inst.holds()? && inst.mirror().holds()?)
}

/// Checks every admissible instance of a relation for rank n.
pub fn sweep_relation(rel: &dyn Relation, n: usize) -> Result<RelationReport> {
    let insts = instances(rel, n);
    let mut failures = Vec::new();
    for i in &insts {
        if !i.holds()? {
            failures.push(format!("{:?}{}", i.params, if i.mirrored { " mirrored" } else { "" }));
        }
    }
    Ok(RelationReport { relation: rel.name().to_string(), n, checked: insts.len(), failures })
}
