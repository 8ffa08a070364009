//! Elementary light ladders, tiers, light ladders and double ladders.

use super::{is_trivial, nontrivial, sort_rungs, Ladder, Rung};
use crate::error::{Error, Result};
use crate::weights::{GlWeight, Path, SlWeight};

/// The elementary light ladder of a weight in Omega(a): bottom
/// `(x_1, .., x_k, a)`, top `(y_1, .., y_{k+1})`.
pub fn elementary_ladder(n: usize, mu: &GlWeight) -> Result<Ladder> {
    if mu.n() != n {
        return Err(Error::InvalidWeight(format!("{mu} is not a weight for n = {n}")));
    }
    let d = mu.elementary_data();
    let mut bottom: Vec<u32> = d.x.iter().map(|&x| x as u32).collect();
    bottom.push(mu.a() as u32);
    let rungs = (0..d.k).rev().map(|i| Rung::ne(i, d.beta[i] as u32)).collect();
    Ladder::new(n, bottom, rungs)
}

/// One tier: `live` is the top of the previous tiers (0 and n labels first,
/// then a canonical sequence) and `a` the incoming strand. The tier brings the
/// rightmost copies of `x_1..x_k` next to `a`, applies the elementary ladder,
/// and sorts the result back to the same shape.
pub fn tier(n: usize, live: &[u32], a: u32, mu: &GlWeight) -> Result<Ladder> {
    if mu.a() as u32 != a {
        return Err(Error::PathMismatch(format!("step {mu} does not lie in level {a}")));
    }
    let d = mu.elementary_data();
    let w = live.len() + 1;
    let mut bottom = live.to_vec();
    bottom.push(a);

    let mut chosen = Vec::with_capacity(d.k);
    for &x in &d.x {
        let i = (0..live.len())
            .rev()
            .find(|&i| live[i] == x as u32 && !chosen.contains(&i))
            .ok_or_else(|| Error::PathMismatch(format!("no strand labeled {x} for step {mu}")))?;
        chosen.push(i);
    }
    let others: Vec<usize> = (0..live.len()).filter(|i| !chosen.contains(i)).collect();
    let mut key = vec![0; w];
    for (t, &i) in others.iter().chain(&chosen).enumerate() {
        key[i] = t;
    }
    key[w - 1] = w - 1;
    let mut rungs = sort_rungs(&bottom, &key);
    let mut labels: Vec<u32> = others.iter().chain(&chosen).map(|&i| live[i]).collect();
    labels.push(a);

    let e = elementary_ladder(n, mu)?;
    let off = w - d.k - 1;
    rungs.extend(e.rungs.iter().map(|r| Rung { pos: r.pos + off, ..*r }));
    labels.truncate(off);
    labels.extend(e.top());

    let old_trivial = live.iter().take_while(|&&x| is_trivial(n, x)).count();
    let mut order: Vec<usize> = (0..old_trivial).collect();
    order.extend((old_trivial..w).filter(|&i| is_trivial(n, labels[i])));
    let mut rest: Vec<usize> = (old_trivial..w).filter(|&i| !is_trivial(n, labels[i])).collect();
    rest.sort_by_key(|&i| labels[i]);
    order.extend(rest);
    let mut key = vec![0; w];
    for (t, &i) in order.iter().enumerate() {
        key[i] = t;
    }
    rungs.extend(sort_rungs(&labels, &key));
    Ladder::new(n, bottom, rungs)
}

/// The light ladder of a dominant path: bottom the word, top the 0 and n
/// labels followed by the canonical sequence of the endpoint.
pub fn light_ladder(n: usize, word: &[u8], path: &Path) -> Result<Ladder> {
    if path.word() != word || path.n() != n {
        return Err(Error::PathMismatch(format!("path does not match word {word:?}")));
    }
    if !path.is_dominant() {
        return Err(Error::NotDominant("path leaves the dominant chamber".into()));
    }
    let mut labels: Vec<u32> = word.iter().map(|&a| a as u32).collect();
    let mut rungs = Vec::new();
    for (t, mu) in path.steps.iter().enumerate() {
        let tr = tier(n, &labels[..t], labels[t], mu)?;
        let top = tr.top();
        debug_assert_eq!(
            nontrivial(n, &top),
            path.prefix_weights[t + 1].canonical_sequence()?.iter().map(|&x| x as u32).collect::<Vec<_>>()
        );
        rungs.extend(tr.rungs);
        labels[..=t].copy_from_slice(&top);
    }
    Ladder::new(n, word.iter().map(|&a| a as u32).collect(), rungs)
}

/// Ladders glued end to end, where consecutive boundaries agree once 0 and n
/// labels are removed. Widths may differ between pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderStack {
    pub n: usize,
    pub pieces: Vec<Ladder>,
}

impl LadderStack {
    pub fn new(n: usize, pieces: Vec<Ladder>) -> Result<LadderStack> {
        if pieces.is_empty() {
            return Err(Error::InvalidInput("empty ladder stack".into()));
        }
        for w in pieces.windows(2) {
            if nontrivial(n, &w[0].top()) != nontrivial(n, &w[1].bottom) {
                return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", w[0].top(), w[1].bottom)));
            }
        }
        Ok(LadderStack { n, pieces })
    }

    pub fn bottom(&self) -> &[u32] {
        &self.pieces[0].bottom
    }

    pub fn top(&self) -> Vec<u32> {
        self.pieces.last().unwrap().top()
    }
}

/// `LL_f` flipped, stacked on `LL_e`: a map from `word_e` to `word_f` through
/// the canonical sequence of the common endpoint.
pub fn double_ladder(n: usize, word_e: &[u8], e: &Path, word_f: &[u8], f: &Path) -> Result<LadderStack> {
    if e.endpoint() != f.endpoint() {
        return Err(Error::WeightMismatch(format!("endpoints {} and {}", e.endpoint(), f.endpoint())));
    }
    let lower = light_ladder(n, word_e, e)?;
    let upper = light_ladder(n, word_f, f)?.flip();
    LadderStack::new(n, vec![lower, upper])
}

/// Canonical sequence as ladder labels.
pub fn canonical_labels(w: &SlWeight) -> Result<Vec<u32>> {
    Ok(w.canonical_sequence()?.into_iter().map(|x| x as u32).collect())
}
