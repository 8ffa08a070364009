//! Ladders: uprights labeled in `[0, n]` joined by tilted rungs.

mod light;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use light::{canonical_labels, double_ladder, elementary_ladder, light_ladder, tier, LadderStack};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tilt {
    NE,
    NW,
}

impl Tilt {
    pub fn swapped(self) -> Tilt {
        match self {
            Tilt::NE => Tilt::NW,
            Tilt::NW => Tilt::NE,
        }
    }
}

/// A rung between uprights `pos` and `pos + 1`. NE moves `s` from the left
/// upright to the right one, NW the other way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rung {
    pub pos: usize,
    pub s: u32,
    pub tilt: Tilt,
}

impl Rung {
    pub fn ne(pos: usize, s: u32) -> Rung {
        Rung { pos, s, tilt: Tilt::NE }
    }

    pub fn nw(pos: usize, s: u32) -> Rung {
        Rung { pos, s, tilt: Tilt::NW }
    }

    /// Output labels on input `(a, b)`; may leave `[0, n]`.
    pub fn apply(&self, a: i64, b: i64) -> (i64, i64) {
        let s = self.s as i64;
        match self.tilt {
            Tilt::NE => (a - s, b + s),
            Tilt::NW => (a + s, b - s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RungClass {
    Inward,
    Outward,
    Neutral,
}

/// Classifies the rung by comparing its input and output label pairs.
pub fn classify_rung(n: usize, a: i64, b: i64, rung: &Rung) -> Result<RungClass> {
    let (c, d) = rung.apply(a, b);
    let n = n as i64;
    if [a, b, c, d].iter().any(|&x| x < 0 || x > n) {
        return Err(Error::LabelOutOfRange(format!("({a},{b}) -> ({c},{d}) for n = {n}")));
    }
    let (lo_in, hi_in) = (a.min(b), a.max(b));
    let (lo_out, hi_out) = (c.min(d), c.max(d));
    Ok(if (lo_in, hi_in) == (lo_out, hi_out) {
        RungClass::Neutral
    } else if lo_out <= lo_in && hi_in <= hi_out {
        RungClass::Outward
    } else {
        RungClass::Inward
    })
}

/// A ladder read bottom to top. Intermediate labels stay in `[0, n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ladder {
    pub bottom: Vec<u32>,
    pub n: usize,
    pub rungs: Vec<Rung>,
}

impl Ladder {
    pub fn new(n: usize, bottom: Vec<u32>, rungs: Vec<Rung>) -> Result<Ladder> {
        let l = Ladder { bottom, n, rungs };
        l.validate()?;
        Ok(l)
    }

    pub fn identity(n: usize, bottom: Vec<u32>) -> Ladder {
        Ladder { bottom, n, rungs: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.bottom.len()
    }

    /// Checks label ranges and rung positions by replaying the rungs.
    pub fn validate(&self) -> Result<()> {
        if let Some(b) = self.bottom.iter().find(|&&b| b as usize > self.n) {
            return Err(Error::LabelOutOfRange(format!("bottom label {b} exceeds n = {}", self.n)));
        }
        self.levels().map(|_| ())
    }

    /// Labels at every level, bottom first.
    pub fn levels(&self) -> Result<Vec<Vec<u32>>> {
        let mut cur: Vec<i64> = self.bottom.iter().map(|&x| x as i64).collect();
        let mut out = vec![self.bottom.clone()];
        for (idx, r) in self.rungs.iter().enumerate() {
            if r.pos + 1 >= cur.len() {
                return Err(Error::Validation(format!("rung {idx} at position {} outside width {}", r.pos, cur.len())));
            }
            if r.s == 0 {
                return Err(Error::Validation(format!("rung {idx} has crossbar 0")));
            }
            let (c, d) = r.apply(cur[r.pos], cur[r.pos + 1]);
            if c < 0 || d < 0 || c > self.n as i64 || d > self.n as i64 {
                return Err(Error::LabelOutOfRange(format!("rung {idx} produces ({c},{d}) for n = {}", self.n)));
            }
            cur[r.pos] = c;
            cur[r.pos + 1] = d;
            out.push(cur.iter().map(|&x| x as u32).collect());
        }
        Ok(out)
    }

    pub fn top(&self) -> Vec<u32> {
        self.levels().expect("validated ladder").pop().unwrap()
    }

    /// `other` placed on top of `self`.
    pub fn then(&self, other: &Ladder) -> Result<Ladder> {
        if self.top() != other.bottom || self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", self.top(), other.bottom)));
        }
        let mut rungs = self.rungs.clone();
        rungs.extend_from_slice(&other.rungs);
        Ok(Ladder { bottom: self.bottom.clone(), n: self.n, rungs })
    }

    /// Duality flip: top becomes bottom, rung order reversed, tilts swapped.
    pub fn flip(&self) -> Ladder {
        let rungs = self.rungs.iter().rev().map(|r| Rung { tilt: r.tilt.swapped(), ..*r }).collect();
        Ladder { bottom: self.top(), n: self.n, rungs }
    }

    /// Left-right reflection.
    pub fn mirror(&self) -> Ladder {
        let w = self.width();
        let rungs = self.rungs.iter().map(|r| Rung { pos: w - 2 - r.pos, s: r.s, tilt: r.tilt.swapped() }).collect();
        Ladder { bottom: self.bottom.iter().rev().copied().collect(), n: self.n, rungs }
    }

    /// Classification of every rung, in order.
    pub fn classes(&self) -> Vec<RungClass> {
        let levels = self.levels().expect("validated ladder");
        self.rungs
            .iter()
            .zip(&levels)
            .map(|(r, l)| classify_rung(self.n, l[r.pos] as i64, l[r.pos + 1] as i64, r).unwrap())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ladder serializes")
    }

    pub fn from_json(s: &str) -> Result<Ladder> {
        let l: Ladder = serde_json::from_str(s).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        l.validate()?;
        Ok(l)
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bottom)?;
        for r in &self.rungs {
            write!(f, " {:?}{}@{}", r.tilt, r.s, r.pos)?;
        }
        Ok(())
    }
}

fn is_trivial(n: usize, x: u32) -> bool {
    x == 0 || x as usize == n
}

/// Positions kept after removing boundary uprights labeled 0 or n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reindex {
    pub bottom_kept: Vec<usize>,
    pub top_kept: Vec<usize>,
}

/// Removes the uprights labeled 0 or n at every level (never touched by a
/// rung) and records which boundary positions remain.
pub fn strip_trivial(l: &Ladder) -> (Ladder, Reindex) {
    let levels = l.levels().expect("validated ladder");
    let idle: Vec<bool> = (0..l.width())
        .map(|i| is_trivial(l.n, l.bottom[i]) && l.rungs.iter().all(|r| r.pos != i && r.pos + 1 != i))
        .collect();
    let kept: Vec<usize> = (0..l.width()).filter(|&i| !idle[i]).collect();
    let new_pos = |p: usize| kept.iter().position(|&k| k == p).unwrap();
    let rungs = l.rungs.iter().map(|r| Rung { pos: new_pos(r.pos), ..*r }).collect();
    let bottom = kept.iter().map(|&i| l.bottom[i]).collect();
    let top = levels.last().unwrap();
    let reindex = Reindex {
        bottom_kept: (0..l.width()).filter(|&i| !is_trivial(l.n, l.bottom[i])).collect(),
        top_kept: (0..l.width()).filter(|&i| !is_trivial(l.n, top[i])).collect(),
    };
    (Ladder { bottom, n: l.n, rungs }, reindex)
}

/// Labels other than 0 and n.
pub fn nontrivial(n: usize, labels: &[u32]) -> Vec<u32> {
    labels.iter().copied().filter(|&x| !is_trivial(n, x)).collect()
}

/// Bubble sort by target position, one neutral rung per swap of unequal
/// labels. `key[i]` is the target position of the strand now at `i`.
pub(crate) fn sort_rungs(labels: &[u32], key: &[usize]) -> Vec<Rung> {
    let mut labels = labels.to_vec();
    let mut key = key.to_vec();
    let mut rungs = Vec::new();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..labels.len().saturating_sub(1) {
            if key[i] > key[i + 1] {
                let (a, b) = (labels[i], labels[i + 1]);
                if a > b {
                    rungs.push(Rung::ne(i, a - b));
                } else if a < b {
                    rungs.push(Rung::nw(i, b - a));
                }
                labels.swap(i, i + 1);
                key.swap(i, i + 1);
                swapped = true;
            }
        }
    }
    rungs
}

/// A ladder of neutral rungs reordering `bottom` into `target`; equal labels
/// keep their relative order.
pub fn neutral_sort(n: usize, bottom: &[u32], target: &[u32]) -> Result<Ladder> {
    let mut used = vec![false; bottom.len()];
    let mut key = vec![0; bottom.len()];
    if bottom.len() != target.len() {
        return Err(Error::NotAPermutation(format!("{bottom:?} -> {target:?}")));
    }
    for (t, x) in target.iter().enumerate() {
        let i = (0..bottom.len())
            .find(|&i| !used[i] && bottom[i] == *x)
            .ok_or_else(|| Error::NotAPermutation(format!("{bottom:?} -> {target:?}")))?;
        used[i] = true;
        key[i] = t;
    }
    Ladder::new(n, bottom.to_vec(), sort_rungs(bottom, &key))
}
