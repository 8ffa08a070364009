//! The clasp as the unique endomorphism killed by every non-full light ladder
//! and fixing `x_top`, found by solving a linear system over Z[q, q^-1].

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use super::basis_of;
use crate::error::{Error, Result};
use crate::eval::{eval_ladder, eval_stack, EvalMatrix, SparseMatrix, PRIME};
use crate::qring::{inv_mod, mul_mod, LaurentPoly, RatFun};
use crate::webs::{double_ladder, light_ladder};
use crate::weights::{enumerate_paths, SlWeight};

/// Keeps only the listed columns.
fn columns(m: &SparseMatrix<LaurentPoly>, cols: &[usize]) -> SparseMatrix<LaurentPoly> {
    let t = m.transpose();
    let rows = cols.iter().map(|&c| t.row(c).to_vec()).collect();
    SparseMatrix::from_rows(m.nrows(), rows).transpose()
}

/// Row echelon form over F_p, grown one row at a time.
struct Echelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    /// Reduces `v` and keeps it if independent.
    fn push(&mut self, mut v: Vec<u64>) -> bool {
        for (p, r) in &self.rows {
            let f = v[*p];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + PRIME - mul_mod(f, *y, PRIME)) % PRIME;
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[p], PRIME);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, PRIME);
        }
        self.rows.push((p, v));
        true
    }
}

/// Solves the square system `a x = b` fraction-free. Returns `(d, y)` with
/// `x = y / d`.
fn bareiss(mut a: Vec<Vec<LaurentPoly>>, x: u64) -> Result<(LaurentPoly, Vec<LaurentPoly>)> {
    let u = a.len();
    let mut prev = LaurentPoly::one();
    for k in 0..u {
        let p = (k..u)
            .find(|&i| a[i][k].eval_mod(x, PRIME) != 0)
            .or_else(|| (k..u).find(|&i| !a[i][k].is_zero()))
            .ok_or_else(|| Error::NonUniqueSolution("singular system".into()))?;
        a.swap(k, p);
        for i in k + 1..u {
            for j in k + 1..=u {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss steps divide exactly");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut y = vec![LaurentPoly::zero(); u];
    for i in (0..u).rev() {
        let mut s = det.mul(&a[i][u]);
        for j in i + 1..u {
            s = s.sub(&a[i][j].mul(&y[j]));
        }
        y[i] = s.div_exact(&a[i][i]).ok_or_else(|| Error::CheckFailed("back substitution is not exact".into()))?;
    }
    Ok((det, y))
}

/// The clasp of `lambda` as a combination of double ladders on its canonical
/// sequence, solved independently of the triple clasp recursion.
pub fn clasp_oracle(lambda: &SlWeight) -> Result<EvalMatrix> {
    let n = lambda.n();
    let word = lambda.canonical_sequence()?;
    let basis = basis_of(lambda)?;
    if word.len() <= 1 {
        return Ok(EvalMatrix::identity(basis));
    }
    let paths = enumerate_paths(n, &word, None);
    let sub: Vec<usize> = paths.iter().map(|p| basis.index(&p.basis_tuple())).collect();

    let mut ds = Vec::new();
    for e in &paths {
        for f in paths.iter().filter(|f| f.endpoint() == e.endpoint()) {
            ds.push(eval_stack(&double_ladder(n, &word, e, &word, f)?)?);
        }
    }
    let u = ds.len();
    let lls: Vec<SparseMatrix<LaurentPoly>> = paths
        .iter()
        .filter(|g| !g.is_full())
        .map(|g| light_ladder(n, &word, g).map(|l| eval_ladder(&l).m))
        .collect::<Result<_>>()?;

    let x = {
        let mut rng = SmallRng::seed_from_u64(0x5eed ^ u as u64);
        mul_mod(rng.gen_range(2..1000), inv_mod(rng.gen_range(1..1000), PRIME), PRIME)
    };
    let mut ech = Echelon { rows: Vec::new() };
    let mut system: Vec<Vec<LaurentPoly>> = Vec::new();
    'outer: for ll in &lls {
        let prods: Vec<SparseMatrix<LaurentPoly>> =
            ds.iter().map(|d| ll.mul(&columns(&d.m, &sub))).collect::<Result<_>>()?;
        for r in 0..ll.nrows() {
            for c in 0..sub.len() {
                let eq: Vec<LaurentPoly> = prods.iter().map(|p| p.get_or_zero(r, c)).collect();
                if eq.iter().all(|v| v.is_zero()) {
                    continue;
                }
                if ech.push(eq.iter().map(|v| v.eval_mod(x, PRIME)).collect()) {
                    system.push(eq);
                    if system.len() + 1 == u {
                        break 'outer;
                    }
                }
            }
        }
    }
    let norm: Vec<LaurentPoly> = ds.iter().map(|d| d.m.get_or_zero(0, 0)).collect();
    if system.len() + 1 != u || !ech.push(norm.iter().map(|v| v.eval_mod(x, PRIME)).collect()) {
        return Err(Error::NonUniqueSolution(format!("{} independent conditions on {u} unknowns", system.len())));
    }
    system.push(norm);
    for (i, row) in system.iter_mut().enumerate() {
        row.push(if i + 1 == u { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    let (det, y) = bareiss(system, x)?;

    let mut phi = SparseMatrix::zeros(basis.size(), basis.size());
    for (c, d) in y.iter().zip(&ds) {
        if !c.is_zero() {
            phi = phi.add(&d.m.scale(c))?;
        }
    }
    for ll in &lls {
        if !ll.mul(&phi)?.is_zero() {
            return Err(Error::CheckFailed("oracle solution is not killed by a light ladder".into()));
        }
    }
    let m = phi.map(|v| RatFun::new(v.clone(), det.clone()).expect("determinant is nonzero"));
    Ok(EvalMatrix { rows: basis.clone(), cols: basis, m })
}
