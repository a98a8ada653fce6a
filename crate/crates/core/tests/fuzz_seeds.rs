//! Replays the checked-in fuzz seeds through the same round trips the fuzz
//! targets assert, so the seeds stay valid on stable toolchains.

use std::fs;
use std::path::PathBuf;

use kfact::{
    jcdal, jcdal_inverse, least_entries, least_entries_inverse, KFactorization, KForest,
    ParkingFunction,
};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| entry.unwrap().path())
        .collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds for {target}");
    paths
        .into_iter()
        .map(|p| fs::read_to_string(p).unwrap())
        .collect()
}

#[test]
fn factorization_seeds() {
    for s in seeds("factorization_text") {
        let f = KFactorization::from_text(&s).unwrap();
        assert_eq!(KFactorization::from_text(&f.to_text()).unwrap(), f);
        assert_eq!(jcdal_inverse(&jcdal(&f).unwrap()).unwrap(), f);
    }
    for s in seeds("factorization_json") {
        let f = KFactorization::from_json(&s).unwrap();
        assert_eq!(KFactorization::from_json(&f.to_json()).unwrap(), f);
        assert_eq!(least_entries_inverse(&least_entries(&f)).unwrap(), f);
    }
}

#[test]
fn forest_seeds() {
    for s in seeds("forest_text") {
        let k = if s.contains(':') { 2 } else { 1 };
        let forest = KForest::from_text(&s, k).unwrap();
        assert_eq!(KForest::from_text(&forest.to_text(), k).unwrap(), forest);
        assert_eq!(jcdal(&jcdal_inverse(&forest).unwrap()).unwrap(), forest);
    }
    for s in seeds("forest_json") {
        let forest = KForest::from_json(&s).unwrap();
        assert_eq!(KForest::from_json(&forest.to_json()).unwrap(), forest);
    }
}

#[test]
fn parking_seeds() {
    for s in seeds("parking_text") {
        let p = ParkingFunction::from_text(&s, 3).unwrap();
        assert_eq!(least_entries(&least_entries_inverse(&p).unwrap()), p);
    }
    for s in seeds("parking_json") {
        let p = ParkingFunction::from_json(&s).unwrap();
        assert_eq!(ParkingFunction::from_json(&p.to_json()).unwrap(), p);
    }
}
