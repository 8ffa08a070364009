use ladderlab::clasp::{
    alt_decomposition_holds, clasp_oracle, gamma, kappa_conjecture, kappa_method, kappa_recursive, recursive1_check,
    validate_clasp, weyl_dim, weyl_dim_at_one, ClaspEngine,
};
use ladderlab::qring::RatFun;
use ladderlab::weights::{GlWeight, SlWeight};
use ladderlab::Error;

fn w(s: &str) -> SlWeight {
    s.parse().unwrap()
}

fn g(s: &str) -> GlWeight {
    s.parse().unwrap()
}

fn ratio(nums: &[i64], dens: &[i64]) -> RatFun {
    RatFun::qint_ratio(nums, dens).unwrap()
}

fn assert_eq_rf(a: &RatFun, b: &RatFun) {
    assert!(a.sub(b).is_zero(), "{a} != {b}");
}

#[test]
fn small_clasps_are_identities() {
    let e = ClaspEngine::new();
    for (n, l) in [(2, "1"), (3, "0,1"), (4, "0,1,0"), (3, "0,0")] {
        let p = e.clasp(&w(l)).unwrap();
        assert_eq!(p.matrix.m.nrows(), p.matrix.m.nnz(), "n={n} {l}");
        assert!(p.matrix.m.entries().all(|(i, j, v)| i == j && v.is_one()));
    }
}

#[test]
fn jones_wenzl_two_strands() {
    // P = id - (1/[2]) cup-cap: the x_{12} x_{21} block is [[1 - q^-1/[2], ...]]
    let e = ClaspEngine::new();
    let p = e.clasp(&w("2")).unwrap();
    assert_eq!(p.sequence, vec![1, 1]);
    assert_eq!(p.rank, 3);
    let id_minus = RatFun::one().sub(&p.matrix.m.get_or_zero(1, 1));
    // cup-cap has trace [2], so the subtracted trace is 1
    let sub_trace = RatFun::from_int(4).sub(&p.matrix.m.trace());
    assert_eq_rf(&sub_trace, &RatFun::one());
    assert!(!id_minus.is_zero());
    assert_eq_rf(&e.kappa_matrix(&w("1"), &g("01")).unwrap(), &RatFun::qint(2));
}

#[test]
fn kappa_examples() {
    let e = ClaspEngine::new();
    assert_eq_rf(&e.kappa_matrix(&w("2"), &g("01")).unwrap(), &ratio(&[3], &[2]));
    assert_eq_rf(&e.kappa_matrix(&w("1,1"), &g("001")).unwrap(), &ratio(&[2, 4], &[1, 3]));
    assert_eq_rf(&e.kappa_matrix(&w("1,1"), &g("011")).unwrap(), &ratio(&[2, 4], &[1, 3]));
    for (l, m) in [("2", "10"), ("1,1", "100"), ("1,1", "110"), ("1,0,1", "1100")] {
        assert!(e.kappa_matrix(&w(l), &g(m)).unwrap().is_one(), "{l} {m}");
    }
    assert!(matches!(e.kappa_matrix(&w("0"), &g("01")), Err(Error::NotDominant(_))));
}

#[test]
fn conjecture_examples() {
    assert!(kappa_conjecture(&w("3,1"), &g("110")).unwrap().is_one());
    assert_eq_rf(&kappa_conjecture(&w("1,1"), &g("001")).unwrap(), &ratio(&[2, 4], &[1, 3]));
    assert_eq_rf(&kappa_conjecture(&w("1,1,1"), &g("0011")).unwrap(), &ratio(&[2, 4, 4, 6], &[1, 3, 3, 5]));
    assert!(matches!(kappa_conjecture(&w("1,0"), &g("001")), Err(Error::NotDominant(_))));
}

#[test]
fn recursion_examples() {
    assert_eq_rf(&kappa_recursive(&w("1"), &g("01")).unwrap(), &RatFun::qint(2));
    let k2 = RatFun::qint(2).sub(&RatFun::qint(2).inv().unwrap());
    assert_eq_rf(&kappa_recursive(&w("2"), &g("01")).unwrap(), &k2);
    assert_eq_rf(&k2, &ratio(&[3], &[2]));
    assert_eq_rf(&kappa_recursive(&w("1,1"), &g("011")).unwrap(), &ratio(&[2, 4], &[1, 3]));
    assert!(matches!(kappa_recursive(&w("1,0,0,0"), &g("01000")), Err(Error::UnsupportedRank(5))));
}

#[test]
fn methods_by_name() {
    let e = ClaspEngine::new();
    for name in ["matrix", "conjecture", "recursive"] {
        let m = kappa_method(name).unwrap();
        assert_eq!(m.name(), name);
        assert_eq_rf(&m.kappa(&e, &w("1,2"), &g("010")).unwrap(), &ratio(&[2], &[1]));
    }
    assert!(kappa_method("guess").is_err());
}

#[test]
fn weyl_dimensions() {
    assert_eq!(weyl_dim_at_one(&w("1")).unwrap(), 2);
    assert_eq!(weyl_dim_at_one(&w("1,1")).unwrap(), 8);
    assert_eq!(weyl_dim_at_one(&w("1,0,1")).unwrap(), 15);
    assert_eq!(weyl_dim_at_one(&w("2")).unwrap(), 3);
    assert_eq_rf(&weyl_dim(&w("1,1")).unwrap(), &ratio(&[2, 2, 4], &[1, 1, 2]));
    assert!(weyl_dim(&w("1,-1")).is_err());
}

#[test]
fn clasps_validate() {
    let e = ClaspEngine::new();
    for (l, dim) in [("2", 3), ("3", 4), ("1,1", 8), ("2,1", 15), ("1,0,1", 15), ("0,2,0", 20)] {
        let r = validate_clasp(&e, &w(l)).unwrap();
        assert!(r.passed(), "{l}: {:?}", r.failures);
        assert_eq!(r.weyl_dim, dim);
        assert!(r.outward_checked > 0);
    }
}

#[test]
fn oracle_agrees() {
    let e = ClaspEngine::new();
    for l in ["2", "3", "1,1", "2,0", "0,2", "2,1", "1,0,1", "0,1,1"] {
        let o = clasp_oracle(&w(l)).unwrap();
        assert_eq!(o.m, e.clasp(&w(l)).unwrap().matrix.m, "{l}");
    }
}

#[test]
fn alternative_decomposition() {
    let e = ClaspEngine::new();
    for (l, a) in [("1", 1), ("2", 1), ("1,0", 1), ("1,0", 2), ("1,1", 1), ("0,1", 2)] {
        assert!(alt_decomposition_holds(&e, &w(l), a).unwrap(), "{l} {a}");
    }
}

#[test]
fn gamma_examples() {
    let e = ClaspEngine::new();
    assert!(gamma(&e, &w("1,1"), &g("001"), &g("110")).unwrap().is_one());
    assert!(gamma(&e, &w("1,1,1"), &g("0101"), &g("1110")).unwrap().is_one());
    assert_eq_rf(&gamma(&e, &w("1,0,1"), &g("0101"), &g("0111")).unwrap(), &ratio(&[2], &[1]));
    assert_eq_rf(&gamma(&e, &w("2,1,1"), &g("0101"), &g("0111")).unwrap(), &ratio(&[3], &[2]));
    assert!(gamma(&e, &w("1,0,2"), &g("0101"), &g("1101")).unwrap().is_one());
    assert!(matches!(gamma(&e, &w("1,0,1"), &g("0101"), &g("1101")), Err(Error::NotDominant(_))));
    assert!(gamma(&e, &w("1,1,1"), &g("0101"), &g("1011")).unwrap().is_zero());
    assert!(matches!(gamma(&e, &w("1,0,1"), &g("0101"), &g("0110")), Err(Error::InvalidInput(_))));
}

#[test]
fn first_recursion_from_matrices() {
    let e = ClaspEngine::new();
    for (l, m) in [("2", "01"), ("1,1", "001"), ("1,1", "011"), ("1,0,1", "0101"), ("1,1,1", "0001")] {
        let r = recursive1_check(&e, &w(l), &g(m)).unwrap();
        assert!(r.holds, "{l} {m}: {} vs {}", r.lhs, r.rhs);
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = ClaspEngine::with_cache_dir(dir.path());
    let p = a.clasp(&w("1,1")).unwrap();
    assert!(dir.path().join("n3").read_dir().unwrap().count() >= 2);
    let b = ClaspEngine::with_cache_dir(dir.path());
    assert_eq!(b.clasp(&w("1,1")).unwrap().matrix.m, p.matrix.m);
}
