use ladderlab::eval::basis::{ell, subset_rank, subsets, TensorBasis};
use ladderlab::eval::matrix::rank_mod_p;
use ladderlab::eval::{eval_ladder, eval_rung, merge_matrix, split_matrix, EvalMatrix, SparseMatrix};
use ladderlab::qring::LaurentPoly;
use ladderlab::webs::{Ladder, Rung};

#[test]
fn ell_examples() {
    assert_eq!(ell(0b1, 0b10), 1);
    assert_eq!(ell(0b10, 0b1), 0);
    assert_eq!(ell(0b101, 0b1010), 3);
}

#[test]
fn ranks_follow_colex_order() {
    for n in 1..7 {
        for a in 0..=n {
            for (i, &m) in subsets(n, a).iter().enumerate() {
                assert_eq!(subset_rank(m), i);
            }
        }
    }
}

#[test]
fn tuples_round_trip() {
    let b = TensorBasis::new(4, &[1, 0, 2, 4]).unwrap();
    assert_eq!(b.size(), 24);
    for i in 0..b.size() {
        assert_eq!(b.index(&b.tuple(i)), i);
    }
    assert_eq!(b.tuple(0), vec![0b1, 0, 0b11, 0b1111]);
}

fn m(rows: &[&[i64]]) -> SparseMatrix<LaurentPoly> {
    let nc = rows[0].len();
    SparseMatrix::from_triplets(
        rows.len(),
        nc,
        rows.iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, LaurentPoly::constant(v)))),
    )
}

#[test]
fn products_and_sums() {
    let a = m(&[&[1, 2], &[0, 1]]);
    let b = m(&[&[1, -2], &[0, 1]]);
    assert_eq!(a.mul(&b).unwrap(), SparseMatrix::identity(2));
    assert!(a.sub(&a).unwrap().is_zero());
    assert_eq!(a.trace(), LaurentPoly::constant(2));
    assert_eq!(a.transpose().transpose(), a);
    assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
}

#[test]
fn kronecker_with_identity() {
    let a = m(&[&[0, 1], &[1, 0]]);
    let k = a.kron_id(2);
    assert_eq!(k.get_or_zero(0, 2), LaurentPoly::one());
    assert_eq!(k.get_or_zero(1, 3), LaurentPoly::one());
    assert_eq!(k.nnz(), 4);
}

#[test]
fn ranks_mod_p() {
    let (r, piv) = rank_mod_p(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]]);
    assert_eq!(r, 2);
    assert_eq!(piv, vec![0, 2]);
}

fn q(e: i32) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

#[test]
fn merge_examples() {
    let m = merge_matrix(2, 1, 1).unwrap();
    let c = &m.cols;
    assert_eq!(m.m.get_or_zero(0, c.index(&[0b01, 0b10])), q(1).neg());
    assert_eq!(m.m.get_or_zero(0, c.index(&[0b10, 0b01])), q(0));
    assert!(m.m.get(0, c.index(&[0b01, 0b01])).is_none());
}

#[test]
fn split_examples() {
    let s = split_matrix(2, 1, 1).unwrap();
    let r = &s.rows;
    assert_eq!(s.m.get_or_zero(r.index(&[0b01, 0b10]), 0), q(0).neg());
    assert_eq!(s.m.get_or_zero(r.index(&[0b10, 0b01]), 0), q(-1));
    let t = split_matrix(3, 2, 0).unwrap();
    assert_eq!(t.m, SparseMatrix::identity(3));
}

#[test]
fn rungs_factor_through_merge_and_split() {
    let n = 4;
    for a in 0..=n as u32 {
        for b in 0..=n as u32 {
            for s in 1..=a {
                if b + s > n as u32 {
                    continue;
                }
                let split = split_matrix(n, a - s, s).unwrap().tensor_id(b).unwrap();
                let mut merge = merge_matrix(n, s, b).unwrap();
                merge = EvalMatrix {
                    rows: TensorBasis::new(n, &[a - s, b + s]).unwrap(),
                    cols: TensorBasis::new(n, &[a - s, s, b]).unwrap(),
                    m: merge.m.id_kron(TensorBasis::new(n, &[a - s]).unwrap().size()),
                };
                let expect = merge.compose(&split).unwrap();
                let got = eval_rung(n, a, b, &Rung::ne(0, s)).unwrap();
                assert_eq!(got.m, expect.m, "NE {s} on ({a},{b})");
            }
        }
    }
}

#[test]
fn identity_ladders() {
    let l = Ladder::identity(3, vec![1, 2]);
    assert_eq!(eval_ladder(&l).m, SparseMatrix::identity(9));
    assert_eq!(eval_rung(3, 1, 2, &Rung::ne(0, 0)).unwrap().m, SparseMatrix::identity(9));
}

#[test]
fn cup_cap_has_rank_one() {
    let l = Ladder::new(2, vec![1, 1], vec![Rung::ne(0, 1), Rung::nw(0, 1)]).unwrap();
    let m = eval_ladder(&l).m;
    assert_eq!(m.nnz(), 4);
    let a = m.get_or_zero(1, 1);
    let b = m.get_or_zero(1, 2);
    let c = m.get_or_zero(2, 1);
    let d = m.get_or_zero(2, 2);
    assert_eq!(a.mul(&d), b.mul(&c));
}
