//! Packaged example sets and the checks that reproduce them.

use crate::construct::{theorem1, theorem2, CoefficientTuple4, CoefficientTuple8};
use crate::error::{Error, Result};
use crate::format::{parse_text, to_text};
use crate::seeds::{GcpLookup, SeedDb};
use crate::verify::{verify, ComplementarySet};

pub const EXAMPLE1_PAIR_A: &str = include_str!("../data/examples/example1_pair_a.txt");
pub const EXAMPLE1_PAIR_B: &str = include_str!("../data/examples/example1_pair_b.txt");
pub const EXAMPLE1_CS: &str = include_str!("../data/examples/example1_cs.txt");
pub const EXAMPLE2_PAIR: &str = include_str!("../data/examples/example2_pair.txt");
pub const EXAMPLE2_SET: &str = include_str!("../data/examples/example2_set.txt");
pub const EXAMPLE2_CS: &str = include_str!("../data/examples/example2_cs.txt");
pub const QUATERNARY29_CS: &str = include_str!("../data/examples/quaternary29_cs.txt");

/// `(file name, contents)` of every packaged example.
pub const FILES: &[(&str, &str)] = &[
    ("example1_pair_a.txt", EXAMPLE1_PAIR_A),
    ("example1_pair_b.txt", EXAMPLE1_PAIR_B),
    ("example1_cs.txt", EXAMPLE1_CS),
    ("example2_pair.txt", EXAMPLE2_PAIR),
    ("example2_set.txt", EXAMPLE2_SET),
    ("example2_cs.txt", EXAMPLE2_CS),
    ("quaternary29_cs.txt", QUATERNARY29_CS),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn load(text: &str) -> Result<ComplementarySet> {
    parse_text(text)?.set.into_verified()
}

fn reproduce(name: &str, built: Result<ComplementarySet>, expected: &str) -> Check {
    let (passed, detail) = match built.and_then(|cs| Ok((to_text(&cs, None)?, verify(&cs)))) {
        Ok((text, report)) => {
            let same = text == expected;
            let detail = format!(
                "peak={} byte_identical={same}",
                report.peak().map_or("?".into(), |p| p.to_string())
            );
            (same && report.is_cs, detail)
        }
        Err(e) => (false, e.to_string()),
    };
    Check {
        name: name.to_owned(),
        passed,
        detail,
    }
}

/// Verifies every packaged file and rebuilds the two constructed examples.
pub fn run() -> Vec<Check> {
    let mut checks: Vec<Check> = FILES
        .iter()
        .map(|(name, text)| {
            let (passed, detail) = match parse_text(text).map(|f| verify(&f.set)) {
                Ok(r) => (
                    r.is_cs,
                    format!(
                        "q={} rows={} len={} peak={}",
                        r.sum_profile.at(0).q(),
                        r.set_size,
                        r.length,
                        r.peak().map_or("?".into(), |p| p.to_string())
                    ),
                ),
                Err(e) => (false, e.to_string()),
            };
            Check {
                name: (*name).to_owned(),
                passed,
                detail,
            }
        })
        .collect();

    let ex1 = load(EXAMPLE1_PAIR_A).and_then(|a| {
        let b = load(EXAMPLE1_PAIR_B)?;
        theorem1(&a, &b, CoefficientTuple4::new(0, 0, 0, 1))
    });
    checks.push(reproduce("theorem1 -> example1_cs.txt", ex1, EXAMPLE1_CS));

    let ex2 = load(EXAMPLE2_PAIR).and_then(|p| {
        let s = load(EXAMPLE2_SET)?;
        theorem2(&p, &s, CoefficientTuple8::new(0, 1, 1, 0, 0, 0))
    });
    checks.push(reproduce("theorem2 -> example2_cs.txt", ex2, EXAMPLE2_CS));

    let q29 = SeedDb::builtin().and_then(|db| {
        let three = db
            .seed(4, 3)
            .ok_or_else(|| Error::Unconstructible("q=4 length-3 seed".into()))?
            .pair
            .clone();
        let doubled = match db.gcp_for_length(4, 26)? {
            GcpLookup::Available(w) => w.pair,
            GcpLookup::Unavailable { .. } => {
                return Err(Error::Unconstructible("q=4 length-26 pair".into()))
            }
        };
        theorem1(&three, &doubled, CoefficientTuple4::new(0, 0, 0, 2))
    });
    checks.push(reproduce(
        "theorem1 -> quaternary29_cs.txt",
        q29,
        QUATERNARY29_CS,
    ));
    checks
}

/// `Ok` iff every check in [`run`] passes.
pub fn selftest() -> Result<Vec<Check>> {
    let checks = run();
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::ConstructionFailed(format!(
            "{}: {}",
            c.name, c.detail
        ))),
        None => Ok(checks),
    }
}
