use ladderlab::eval::{check_relation, registry, sweep_relation};

#[test]
fn all_relations_hold_for_small_ranks() {
    for n in 2..=4 {
        for rel in registry() {
            let rep = sweep_relation(rel.as_ref(), n).unwrap();
            println!("{} n={} checked={} failures={}", rep.relation, n, rep.checked, rep.failures.len());
            assert!(rep.checked > 0);
            assert!(rep.passed(), "{} n={n}: {:?}", rep.relation, &rep.failures[..rep.failures.len().min(10)]);
        }
    }
}

#[test]
fn named_examples() {
    assert!(check_relation("bigon", &[1, 1, 0], 4).unwrap());
    assert!(check_relation("circle", &[1, 0], 2).unwrap());
    assert!(check_relation("r3", &[2, 1, 1, 1, 1, 1], 4).unwrap());
    assert!(check_relation("r3", &[2, 1, 2, 1, 1, 1], 4).unwrap());
    assert!(check_relation("r3", &[0, 1, 1, 1, 1, 1], 4).is_err());
    assert!(check_relation("bigon", &[1, 1], 4).is_err());
}
