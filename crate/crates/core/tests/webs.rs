use ladderlab::webs::{
    canonical_labels, classify_rung, elementary_ladder, light_ladder, neutral_sort, nontrivial, strip_trivial, Ladder, Rung,
    RungClass,
};
use ladderlab::weights::{enumerate_paths, GlWeight, Path};
use ladderlab::Error;

#[test]
fn classification() {
    assert_eq!(classify_rung(6, 2, 4, &Rung::ne(0, 1)).unwrap(), RungClass::Outward);
    assert_eq!(classify_rung(6, 2, 4, &Rung::nw(0, 2)).unwrap(), RungClass::Neutral);
    assert_eq!(classify_rung(6, 2, 4, &Rung::nw(0, 1)).unwrap(), RungClass::Inward);
    assert!(classify_rung(3, 2, 3, &Rung::nw(0, 2)).is_err());
}

#[test]
fn flips() {
    let id = Ladder::identity(3, vec![1, 2]);
    assert_eq!(id.flip(), id);
    let l = Ladder::new(4, vec![3, 1], vec![Rung::ne(0, 1)]).unwrap();
    let f = l.flip();
    assert_eq!(f.bottom, vec![2, 2]);
    assert_eq!(f.rungs, vec![Rung::nw(0, 1)]);
    assert_eq!(f.top(), vec![3, 1]);
    assert_eq!(f.flip(), l);
    assert_eq!(l.classes(), vec![RungClass::Inward]);
    assert_eq!(f.classes(), vec![RungClass::Outward]);
}

#[test]
fn neutral_sorts() {
    assert!(neutral_sort(4, &[1, 2], &[1, 2]).unwrap().rungs.is_empty());
    assert_eq!(neutral_sort(4, &[1, 3], &[3, 1]).unwrap().rungs, vec![Rung::nw(0, 2)]);
    assert_eq!(neutral_sort(4, &[1, 2, 1], &[1, 1, 2]).unwrap().rungs, vec![Rung::ne(1, 1)]);
    assert!(matches!(neutral_sort(4, &[1, 2], &[1, 3]), Err(Error::NotAPermutation(_))));
}

#[test]
fn stripping() {
    let (l, r) = strip_trivial(&Ladder::identity(3, vec![0, 3]));
    assert!(l.bottom.is_empty());
    assert!(r.bottom_kept.is_empty());
    let (l, _) = strip_trivial(&Ladder::identity(3, vec![0, 2]));
    assert_eq!(l.bottom, vec![2]);
    let m = Ladder::identity(3, vec![1, 2]);
    assert_eq!(strip_trivial(&m).0, m);
}

#[test]
fn json_round_trip() {
    let l = Ladder::new(4, vec![1, 2, 3], vec![Rung::ne(0, 1), Rung::nw(1, 1)]).unwrap();
    let s = l.to_json();
    assert_eq!(s, r#"{"bottom":[1,2,3],"n":4,"rungs":[{"pos":0,"s":1,"tilt":"NE"},{"pos":1,"s":1,"tilt":"NW"}]}"#);
    assert_eq!(Ladder::from_json(&s).unwrap().to_json(), s);
    let bad = r#"{"bottom":[1,2],"n":4,"rungs":[{"pos":0,"s":2,"tilt":"NE"}]}"#;
    assert!(Ladder::from_json(bad).is_err());
    let empty = r#"{"bottom":[1,2],"n":4,"rungs":[]}"#;
    assert!(Ladder::from_json(empty).unwrap().rungs.is_empty());
}

#[test]
fn elementary_shapes() {
    let mu: GlWeight = "0101".parse().unwrap();
    let e = elementary_ladder(4, &mu).unwrap();
    assert_eq!(e.bottom, vec![1, 3, 2]);
    assert_eq!(e.top(), vec![0, 2, 4]);
    let top: GlWeight = "1100".parse().unwrap();
    assert!(elementary_ladder(4, &top).unwrap().rungs.is_empty());
}

#[test]
fn full_paths_are_identities_on_canonical_words() {
    let word = [1u8, 1, 2, 3];
    let p = Path::full(4, &word);
    assert!(light_ladder(4, &word, &p).unwrap().rungs.is_empty());
}

#[test]
fn tops_are_canonical() {
    for word in [vec![1u8, 2, 1, 2], vec![2, 2, 2], vec![3, 1, 2, 1]] {
        for p in enumerate_paths(4, &word, None) {
            let l = light_ladder(4, &word, &p).unwrap();
            assert_eq!(nontrivial(4, &l.top()), canonical_labels(p.endpoint()).unwrap());
        }
    }
}
