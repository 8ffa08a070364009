use ladderlab::qring::cyclo::{cyclotomic, factor, product, qint_factors};
use ladderlab::qring::{delta_expansion, qbinom, qint, LaurentPoly, RatAcc, RatFun};
use ladderlab::Error;
use num_rational::BigRational;
use num_traits::One;

#[test]
fn quantum_integers() {
    assert!(qint(0).is_zero());
    assert_eq!(qint(2).to_string(), "q + q^-1");
    assert_eq!(qint(-3).to_string(), "-q^2 - 1 - q^-2");
    assert_eq!(qint(2).term_list(), "-1:1 1:1");
}

#[test]
fn quantum_binomials() {
    assert!(qbinom(5, 0).is_one());
    assert!(qbinom(3, -1).is_zero());
    assert_eq!(qbinom(4, 2).to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
    assert!(qbinom(-1, 2).is_one());
    assert_eq!(qbinom(4, 2).at_one(), 6.into());
}

#[test]
fn delta_basis() {
    let c = delta_expansion(&qbinom(4, 2)).unwrap();
    assert_eq!(c, vec![2.into(), 0.into(), (-3).into(), 0.into(), 1.into()]);
    assert!(delta_expansion(&LaurentPoly::q_pow(1)).is_none());
}

fn r(k: i64) -> RatFun {
    RatFun::qint(k)
}

#[test]
fn canonical_cancellation() {
    let x = RatFun::new(qint(3).mul(&qint(2)), qint(2)).unwrap();
    assert_eq!(x, r(3));
    let y = RatFun::new(qint(4), qint(2)).unwrap();
    assert_eq!(y.to_string(), "q^2 + q^-2");
    assert!(RatFun::new(LaurentPoly::zero(), qint(5)).unwrap().is_zero());
    assert_eq!(RatFun::new(qint(1), LaurentPoly::zero()), Err(Error::ZeroDenominator));
}

#[test]
fn fast_and_slow_paths_agree() {
    let a = r(3).div(&r(2)).unwrap();
    let b = r(5).div(&r(4)).unwrap();
    let fast = a.add(&b);
    let slow = RatFun::new(
        qint(3).mul(&qint(4)).add(&qint(5).mul(&qint(2))),
        qint(2).mul(&qint(4)),
    )
    .unwrap();
    assert_eq!(fast, slow);
    let g = RatFun::new(LaurentPoly::from_small(0, vec![2, 1]), LaurentPoly::from_small(0, vec![3, 0, 1])).unwrap();
    let h = g.mul(&a).div(&a).unwrap();
    assert_eq!(h, g);
    assert_eq!(g.inv().unwrap().inv().unwrap(), g);
}

#[test]
fn kappa_recursion_sl2() {
    let mut k = r(2);
    for b in 2..10 {
        k = r(2).sub(&k.inv().unwrap());
        assert_eq!(k, RatFun::qint_ratio(&[b + 1], &[b]).unwrap());
    }
}

#[test]
fn json_round_trip() {
    let x = RatFun::qint_ratio(&[4, 2], &[3]).unwrap();
    let v = x.to_json();
    assert_eq!(RatFun::from_json(&v).unwrap(), x);
}

#[test]
fn accumulator_matches_plain_sum() {
    let xs = [r(2).inv().unwrap(), r(3).div(&r(4)).unwrap(), r(6).inv().unwrap(), RatFun::from_int(7)];
    let mut acc = RatAcc::new();
    let mut plain = RatFun::zero();
    for a in &xs {
        for b in &xs {
            acc.add_prod(a, b);
            plain = plain.add(&a.mul(b));
        }
    }
    assert_eq!(acc.finish(), plain);
}

#[test]
fn specialization() {
    let x = r(3).div(&r(2)).unwrap();
    assert_eq!(x.specialize(&BigRational::one()).unwrap(), BigRational::new(3.into(), 2.into()));
    let pole = RatFun::new(LaurentPoly::one(), LaurentPoly::from_small(0, vec![-1, 1])).unwrap();
    assert!(matches!(pole.specialize(&BigRational::one()), Err(Error::PoleAtValue(_))));
}

#[test]
fn small_cyclotomics() {
    assert_eq!(cyclotomic(1).to_string(), "q - 1");
    assert_eq!(cyclotomic(4).to_string(), "q^2 + 1");
    assert_eq!(cyclotomic(6).to_string(), "q^2 - q + 1");
    assert_eq!(cyclotomic(12).to_string(), "q^4 - q^2 + 1");
}

#[test]
fn qint_factorization_matches() {
    for k in 1..15u32 {
        let (s, e) = qint_factors(k);
        assert_eq!(product(&e).shift(s), qint(k as i64));
    }
}

#[test]
fn factor_recovers_products() {
    let p = product(&[(3, 2), (4, 1), (10, 1)]);
    assert_eq!(factor(&p), Some(vec![(3, 2), (4, 1), (10, 1)]));
    let p = LaurentPoly::from_small(0, vec![1, 1, 1, 1]).mul(&LaurentPoly::from_small(0, vec![2, 1]));
    assert_eq!(factor(&p), None);
}
