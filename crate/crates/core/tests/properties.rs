use ladderlab::eval::{eval_ladder, TensorBasis};
use ladderlab::qring::{delta, delta_expansion, qbinom, qint, LaurentPoly, RatFun};
use ladderlab::webs::{neutral_sort, Ladder, Rung};
use proptest::prelude::*;

/// A valid ladder: proposed rungs that would leave the label range are dropped.
fn ladder() -> impl Strategy<Value = Ladder> {
    (2usize..=4, 2usize..=4)
        .prop_flat_map(|(n, w)| {
            (
                Just(n),
                prop::collection::vec(0..=n as u32, w),
                prop::collection::vec((0..w - 1, 1..=n as u32, any::<bool>()), 0..5),
            )
        })
        .prop_map(|(n, bottom, proposed)| {
            let mut rungs = Vec::new();
            for (pos, s, ne) in proposed {
                rungs.push(if ne { Rung::ne(pos, s) } else { Rung::nw(pos, s) });
                if Ladder::new(n, bottom.clone(), rungs.clone()).is_err() {
                    rungs.pop();
                }
            }
            Ladder::new(n, bottom, rungs).unwrap()
        })
}

fn qratio() -> impl Strategy<Value = RatFun> {
    (-6i64..=6, 1i64..=6, -3i64..=3).prop_map(|(a, b, c)| RatFun::qint(a).div(&RatFun::qint(b)).unwrap().add(&RatFun::from_int(c)))
}

fn x_top(labels: &[u32]) -> Vec<u32> {
    labels.iter().map(|&a| (1u32 << a) - 1).collect()
}

proptest! {
    #[test]
    fn qint_recurrence(k in -30i64..=30) {
        prop_assert_eq!(qint(k).mul(&delta()), qint(k + 1).add(&qint(k - 1)));
        prop_assert_eq!(qint(-k), qint(k).neg());
        prop_assert_eq!(qint(k).bar(), qint(k));
    }

    #[test]
    fn qbinom_symmetry_and_delta_integrality(m in 0i64..=12, k in 0i64..=12) {
        prop_assume!(k <= m);
        let b = qbinom(m, k);
        prop_assert_eq!(&b, &qbinom(m, m - k));
        prop_assert_eq!(b.bar(), b.clone());
        prop_assert!(delta_expansion(&b).is_some());
    }

    #[test]
    fn negative_binomials_are_bar_invariant(m in -8i64..0, k in 0i64..=6) {
        let b = qbinom(m, k);
        prop_assert!(!b.is_zero());
        prop_assert_eq!(b.bar(), b);
    }

    #[test]
    fn field_operations(a in qratio(), b in qratio(), c in qratio()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
        }
        prop_assert_eq!(RatFun::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn flips_and_mirrors_are_involutions(l in ladder()) {
        prop_assert_eq!(l.flip().flip(), l.clone());
        prop_assert_eq!(l.mirror().mirror(), l.clone());
        prop_assert_eq!(l.flip().top(), l.bottom.clone());
        let mut rev = l.top();
        rev.reverse();
        prop_assert_eq!(l.mirror().top(), rev);
    }

    #[test]
    fn labels_are_conserved(l in ladder()) {
        let total: u32 = l.bottom.iter().sum();
        for level in l.levels().unwrap() {
            prop_assert_eq!(level.iter().sum::<u32>(), total);
        }
        let back = Ladder::from_json(&l.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), l.to_json());
    }

    #[test]
    fn evaluation_is_functorial(l in ladder(), cut in 0usize..6) {
        let cut = cut.min(l.rungs.len());
        let lower = Ladder::new(l.n, l.bottom.clone(), l.rungs[..cut].to_vec()).unwrap();
        let upper = Ladder::new(l.n, lower.top(), l.rungs[cut..].to_vec()).unwrap();
        let whole = eval_ladder(&l);
        let parts = eval_ladder(&upper).compose(&eval_ladder(&lower)).unwrap();
        prop_assert_eq!(whole.m, parts.m);
    }

    #[test]
    fn neutral_ladders_are_unitriangular(
        n in 2usize..=4,
        word in prop::collection::vec(1u32..4, 2..=4),
        perm in any::<u64>(),
    ) {
        let word: Vec<u32> = word.into_iter().map(|a| 1 + (a - 1) % (n as u32 - 1)).collect();
        let mut target = word.clone();
        let mut s = perm;
        for i in (1..target.len()).rev() {
            target.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let nl = neutral_sort(n, &word, &target).unwrap();
        let m = eval_ladder(&nl).m;
        let src = TensorBasis::new(n, &word).unwrap().index(&x_top(&word));
        let dst = TensorBasis::new(n, &target).unwrap().index(&x_top(&target));
        let unit = m.get_or_zero(dst, src);
        prop_assert!(unit.is_monomial());
        prop_assert!(unit.leading_coeff() == 1.into() || unit.leading_coeff() == (-1).into());
        for (i, j, v) in m.entries() {
            if i == dst || j == src {
                prop_assert!((i, j) == (dst, src) || v.is_zero(), "extra entry at ({}, {})", i, j);
            }
        }
    }
}

#[test]
fn zero_rung_ladder_is_identity() {
    let l = Ladder::new(3, vec![1, 2, 0], vec![]).unwrap();
    let b = TensorBasis::new(3, &l.bottom).unwrap();
    assert_eq!(eval_ladder(&l).m, ladderlab::eval::SparseMatrix::<LaurentPoly>::identity(b.size()));
}
