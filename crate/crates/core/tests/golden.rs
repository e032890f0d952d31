use compset::format::{parse_text, to_text};
use compset::seeds::{Derivation, SeedDb};
use compset::{
    golay_double, theorem1, theorem2, verify, CoefficientTuple4, CoefficientTuple8,
    ComplementarySet,
};

const EX1_A: &str = include_str!("../data/examples/example1_pair_a.txt");
const EX1_B: &str = include_str!("../data/examples/example1_pair_b.txt");
const EX1_CS: &str = include_str!("../data/examples/example1_cs.txt");
const EX2_PAIR: &str = include_str!("../data/examples/example2_pair.txt");
const EX2_SET: &str = include_str!("../data/examples/example2_set.txt");
const EX2_CS: &str = include_str!("../data/examples/example2_cs.txt");

fn load(text: &str) -> ComplementarySet {
    parse_text(text).unwrap().set.into_verified().unwrap()
}

fn pretty(set: &ComplementarySet) -> Vec<String> {
    set.rows().iter().map(|r| r.pretty()).collect()
}

#[test]
fn length_14_size_4() {
    let cs = theorem1(
        &load(EX1_A),
        &load(EX1_B),
        CoefficientTuple4::new(0, 0, 0, 1),
    )
    .unwrap();
    assert_eq!(
        pretty(&cs),
        [
            "++--+++-+-++-+",
            "+++++-+--++++-",
            "++--+++-+---+-",
            "+++++-+--+---+",
        ]
    );
    assert_eq!(to_text(&cs, None).unwrap(), EX1_CS);
    let report = verify(&cs);
    assert!(report.is_cs);
    assert_eq!(report.peak(), Some(56));
    for tau in 1..14 {
        assert!(report.sum_profile.at(tau).is_zero());
    }
}

#[test]
fn length_13_size_8() {
    let cs = theorem2(
        &load(EX2_PAIR),
        &load(EX2_SET),
        CoefficientTuple8::new(0, 1, 1, 0, 0, 0),
    )
    .unwrap();
    assert_eq!(
        pretty(&cs),
        [
            "+++-++-+++-++",
            "+++---+-+++--",
            "---+--+-+-+++",
            "---+++-++-+--",
            "---+--+-++-++",
            "---+++-++++--",
            "+++-++-++-+++",
            "+++---+-+-+--",
        ]
    );
    assert_eq!(to_text(&cs, None).unwrap(), EX2_CS);
    assert_eq!(verify(&cs).peak(), Some(104));
}

#[test]
fn stacked_examples() {
    let cs = load(EX1_CS);
    let s = compset::stack(&[cs.clone(), cs]).unwrap();
    assert_eq!((s.size(), s.length()), (8, 14));
}

#[test]
fn quaternary_length_29() {
    let db = SeedDb::builtin().unwrap();
    let three = db.seed(4, 3).unwrap().pair.clone();
    let thirteen = db.seed(4, 13).unwrap().pair.clone();
    let twenty_six = golay_double(&thirteen).unwrap();
    let cs = theorem1(&three, &twenty_six, CoefficientTuple4::new(0, 0, 0, 2)).unwrap();
    assert_eq!((cs.size(), cs.length(), cs.alphabet().q()), (4, 29, 4));
    assert!(verify(&cs).is_cs);
    assert_eq!(
        to_text(&cs, None).unwrap(),
        compset::golden::QUATERNARY29_CS
    );

    let via_db = db.gcp_for_length(4, 26).unwrap().into_witness().unwrap();
    assert_eq!(
        via_db.derivation,
        Derivation::Double(Box::new(Derivation::Seed { q: 4, length: 13 }))
    );
    assert_eq!(via_db.pair, twenty_six);
}

#[test]
fn packaged_files_selftest() {
    let checks = compset::golden::selftest().unwrap();
    assert_eq!(checks.len(), compset::golden::FILES.len() + 3);
}

#[test]
fn necessity_witness() {
    let cand = compset::construct::assemble_theorem1(
        &load(EX1_A),
        &load(EX1_B),
        CoefficientTuple4::new(0, 0, 0, 0),
    )
    .unwrap();
    let report = verify(&cand);
    assert!(!report.is_cs);
    assert!(report.first_defect_shift.is_some());
}

#[test]
fn mutated_symbol_is_caught() {
    let mut text = EX1_CS.to_owned();
    // first data row, sixth symbol
    let at = text.find('\n').unwrap() + 6;
    let flipped = if &text[at..at + 1] == "0" { "1" } else { "0" };
    text.replace_range(at..at + 1, flipped);
    let report = verify(&parse_text(&text).unwrap().set);
    assert!(!report.is_cs);
}
