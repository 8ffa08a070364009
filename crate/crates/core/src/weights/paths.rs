//! Minuscule Littelmann paths: dominant weight subsequences of a word.

use super::{GlWeight, SlWeight};

/// One weight chosen from each letter of a word, with every partial sum
/// dominant. `prefix_weights` has one more entry than `steps`, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub steps: Vec<GlWeight>,
    pub prefix_weights: Vec<SlWeight>,
}

impl Path {
    pub fn from_steps(n: usize, steps: Vec<GlWeight>) -> Path {
        let mut prefix_weights = vec![SlWeight::zero(n)];
        for s in &steps {
            let next = prefix_weights.last().unwrap().add_gl(s);
            prefix_weights.push(next);
        }
        Path { steps, prefix_weights }
    }

    /// The path through the highest weight of every letter.
    pub fn full(n: usize, word: &[u8]) -> Path {
        Self::from_steps(n, word.iter().map(|&a| GlWeight::highest(n, a as usize)).collect())
    }

    pub fn n(&self) -> usize {
        self.prefix_weights[0].n()
    }

    pub fn endpoint(&self) -> &SlWeight {
        self.prefix_weights.last().unwrap()
    }

    pub fn word(&self) -> Vec<u8> {
        self.steps.iter().map(|s| s.a() as u8).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.prefix_weights.iter().all(|w| w.is_dominant())
    }

    pub fn is_full(&self) -> bool {
        self.steps.iter().all(|s| s.is_highest())
    }

    /// `self >= other` in the path order: every prefix weight dominates.
    pub fn dominates(&self, other: &Path) -> bool {
        self.prefix_weights.len() == other.prefix_weights.len()
            && self.prefix_weights.iter().zip(&other.prefix_weights).all(|(a, b)| a.dominates(b))
    }

    /// Tuple of subsets `x_{w,e}` picked out by the steps, as bitmasks.
    pub fn basis_tuple(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.mask()).collect()
    }
}

/// All dominant weight subsequences of `word`, restricted to those ending at
/// `target` when given. Depth first, steps in descending lexicographic order.
pub fn enumerate_paths(n: usize, word: &[u8], target: Option<&SlWeight>) -> Vec<Path> {
    let levels: Vec<Vec<GlWeight>> = word.iter().map(|&a| GlWeight::level(n, a as usize)).collect();
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let mut prefix = vec![SlWeight::zero(n)];
    fn rec(
        t: usize,
        levels: &[Vec<GlWeight>],
        target: Option<&SlWeight>,
        steps: &mut Vec<GlWeight>,
        prefix: &mut Vec<SlWeight>,
        out: &mut Vec<Path>,
    ) {
        if t == levels.len() {
            if target.is_none_or(|w| w == prefix.last().unwrap()) {
                out.push(Path { steps: steps.clone(), prefix_weights: prefix.clone() });
            }
            return;
        }
        for mu in &levels[t] {
            let next = prefix.last().unwrap().add_gl(mu);
            if !next.is_dominant() {
                continue;
            }
            steps.push(mu.clone());
            prefix.push(next);
            rec(t + 1, levels, target, steps, prefix, out);
            steps.pop();
            prefix.pop();
        }
    }
    rec(0, &levels, target, &mut steps, &mut prefix, &mut out);
    out
}

/// Number of paths of `word` ending at `target`, by dynamic programming
/// over endpoints.
pub fn count_paths(n: usize, word: &[u8], target: &SlWeight) -> usize {
    use std::collections::HashMap;
    let mut cur: HashMap<SlWeight, usize> = HashMap::from([(SlWeight::zero(n), 1)]);
    for &a in word {
        let mut next = HashMap::new();
        for (w, c) in &cur {
            for mu in GlWeight::level(n, a as usize) {
                let v = w.add_gl(&mu);
                if v.is_dominant() {
                    *next.entry(v).or_insert(0) += c;
                }
            }
        }
        cur = next;
    }
    cur.get(target).copied().unwrap_or(0)
}
