use ladderlab::eval::{hom_rank, triangularity_report};

#[test]
fn hom_rank_examples() {
    assert_eq!(hom_rank(2, &[1], &[1], 3, 1).unwrap().rank, 1);
    let r = hom_rank(2, &[1, 1], &[1, 1], 3, 1).unwrap();
    assert_eq!((r.count, r.rank), (2, 2));
    let r = hom_rank(3, &[1, 2], &[1, 2], 3, 1).unwrap();
    assert_eq!((r.count, r.rank), (2, 2));
    assert!(r.certified);
}

#[test]
fn triangularity_holds_up_to_width_two() {
    for n in 2..=4u8 {
        for a in 1..n {
            for b in 0..n {
                let w: Vec<u8> = if b == 0 { vec![a] } else { vec![a, b] };
                let r = triangularity_report(n as usize, &w).unwrap();
                assert!(r.passed(), "{n} {w:?}: {:?}", r.failures);
            }
        }
    }
}

// Zero above the diagonal, units on it and nothing on x_top from
// incomparable paths hold everywhere. Paths strictly below `e` can reach
// x_top once a later tier sees a non-top input; this pins the smallest case.
#[test]
fn lower_paths_can_reach_top() {
    let r = triangularity_report(2, &[1, 1, 1]).unwrap();
    assert_eq!(r.failures, vec!["e=10.10.01 f=10.01.10: x_top coefficient is nonzero (f < e)".to_string()]);
    let r = triangularity_report(3, &[2, 1, 2]).unwrap();
    assert_eq!(r.failures, vec!["e=110.100.011 f=110.001.110: x_top coefficient is nonzero (f < e)".to_string()]);
    for (n, w) in [(4, vec![2u8, 2, 1, 3]), (4, vec![3, 1, 1, 1])] {
        let r = triangularity_report(n, &w).unwrap();
        assert!(!r.failures.is_empty());
        assert!(r.failures.iter().all(|f| f.ends_with("(f < e)")), "{:?}", r.failures);
    }
}
