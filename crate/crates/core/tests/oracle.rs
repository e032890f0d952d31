use std::collections::BTreeSet;

use compset::search::{canonicalize, SearchOptions};
use compset::seeds::SeedDb;
use compset::{search_cs, search_gcp, theorem1, Alphabet, CoefficientTuple4, ComplementarySet};
use num_complex::Complex64;

type Rows = Vec<Vec<u32>>;

fn root(q: u32, t: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / q as f64)
}

fn float_cs(q: u32, rows: &Rows) -> bool {
    let n = rows[0].len();
    (1..n).all(|tau| {
        let s: Complex64 = rows
            .iter()
            .flat_map(|r| (0..n - tau).map(move |k| root(q, r[k]) * root(q, r[k + tau]).conj()))
            .sum();
        s.norm() < 1e-9
    })
}

/// Smallest representative over row scaling, row order, reversal and
/// conjugation.
fn class_of(q: u32, rows: &Rows) -> Rows {
    let mut best: Option<Rows> = None;
    for rev in [false, true] {
        for conj in [false, true] {
            let mut v: Rows = rows
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    if rev {
                        r.reverse();
                    }
                    if conj {
                        r.iter_mut().for_each(|t| *t = (q - *t) % q);
                    }
                    let f = r[0];
                    r.iter().map(|&t| (t + q - f) % q).collect()
                })
                .collect();
            v.sort();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

/// Every exponent matrix, no pruning.
fn brute_force(q: u32, size: usize, len: usize) -> BTreeSet<Rows> {
    let cells = size * len;
    let total = (q as u64).pow(cells as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let rows: Rows = (0..size)
            .map(|_| {
                (0..len)
                    .map(|_| {
                        let d = (c % q as u64) as u32;
                        c /= q as u64;
                        d
                    })
                    .collect()
            })
            .collect();
        if float_cs(q, &rows) {
            out.insert(class_of(q, &rows));
        }
    }
    out
}

fn searched(q: u32, size: usize, len: usize) -> BTreeSet<Rows> {
    let out = search_cs(
        Alphabet::new(q).unwrap(),
        size,
        len,
        SearchOptions::default(),
    )
    .unwrap();
    assert!(!out.incomplete);
    assert_eq!(out.total, out.results.len());
    out.results.iter().map(|s| class_of(q, &exps(s))).collect()
}

fn exps(set: &ComplementarySet) -> Rows {
    set.rows().iter().map(|r| r.exponents().to_vec()).collect()
}

#[test]
fn search_matches_unpruned_enumeration() {
    for size in 1..=4 {
        for len in 1..=4 {
            assert_eq!(
                searched(2, size, len),
                brute_force(2, size, len),
                "q=2 size={size} len={len}"
            );
        }
    }
    for len in 1..=4 {
        assert_eq!(searched(4, 2, len), brute_force(4, 2, len), "q=4 len={len}");
    }
}

#[test]
fn no_binary_pair_of_length_three() {
    let out = search_gcp(Alphabet::BINARY, 3, SearchOptions::default()).unwrap();
    assert!(out.results.is_empty());
    assert_eq!(out.total, 0);
}

#[test]
fn constructions_are_found_by_search() {
    let db = SeedDb::builtin().unwrap();
    let binary = Alphabet::BINARY;
    let pairs: Vec<ComplementarySet> = [1, 2]
        .iter()
        .map(|&l| db.seed(2, l).unwrap().pair.clone())
        .collect();
    for len in 2..=4 {
        let found = searched(2, 4, len);
        let mut built = 0;
        for a in &pairs {
            for b in &pairs {
                if a.length() + b.length() != len {
                    continue;
                }
                for c in CoefficientTuple4::all_admissible(binary) {
                    let cs = theorem1(a, b, c).unwrap();
                    assert!(found.contains(&class_of(2, &exps(&cs))), "len={len} {c}");
                    assert!(found.contains(&exps(&canonicalize(&cs))));
                    built += 1;
                }
            }
        }
        assert!(built > 0);
    }

    let seed = db.seed(4, 3).unwrap();
    assert!(searched(4, 2, 3).contains(&class_of(4, &exps(&seed.pair))));
}
