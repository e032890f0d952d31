//! Verified-on-load Golay pair seeds and their composition to other lengths.
//!
//! Binary seeds cover lengths 1, 2, 10, 26; quaternary seeds 1, 2, 3, 5, 11,
//! 13. Longer pairs come from [`golay_double`] and [`turyn_product`] along a
//! planned derivation.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::algebra::Alphabet;
use crate::construct::{golay_double, turyn_product};
use crate::error::{Error, Result};
use crate::format::parse_text;
use crate::reach::{in_gcp_pattern, pattern_description};
use crate::verify::ComplementarySet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PublishedExample,
    DerivedSearch,
    Literature,
}

impl Provenance {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "published-example" => Some(Provenance::PublishedExample),
            "derived-search" => Some(Provenance::DerivedSearch),
            "literature" => Some(Provenance::Literature),
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::PublishedExample => "published-example",
            Provenance::DerivedSearch => "derived-search",
            Provenance::Literature => "literature",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedRecord {
    pub name: String,
    pub pair: ComplementarySet,
    pub provenance: Provenance,
    pub source: String,
}

impl SeedRecord {
    pub fn alphabet(&self) -> Alphabet {
        self.pair.alphabet()
    }

    pub fn length(&self) -> usize {
        self.pair.length()
    }
}

const BUILTIN: &[(&str, &str)] = &[
    ("q2_len01", include_str!("../data/seeds/q2_len01.txt")),
    ("q2_len02", include_str!("../data/seeds/q2_len02.txt")),
    ("q2_len10", include_str!("../data/seeds/q2_len10.txt")),
    ("q2_len26", include_str!("../data/seeds/q2_len26.txt")),
    ("q4_len01", include_str!("../data/seeds/q4_len01.txt")),
    ("q4_len02", include_str!("../data/seeds/q4_len02.txt")),
    ("q4_len03", include_str!("../data/seeds/q4_len03.txt")),
    ("q4_len05", include_str!("../data/seeds/q4_len05.txt")),
    ("q4_len11", include_str!("../data/seeds/q4_len11.txt")),
    ("q4_len13", include_str!("../data/seeds/q4_len13.txt")),
];

/// Seed lengths every database must provide.
pub fn required_lengths(q: u32) -> Result<&'static [usize]> {
    match q {
        2 => Ok(&[1, 2, 10, 26]),
        4 => Ok(&[1, 2, 3, 5, 11, 13]),
        _ => Err(Error::UnsupportedAlphabet(q)),
    }
}

fn seed_name(q: u32, len: usize) -> String {
    format!("q{q}_len{len:02}")
}

/// Parses and verifies one seed file.
pub fn parse_seed(name: &str, text: &str) -> Result<SeedRecord> {
    let seed_err = |reason: String| Error::Seed {
        name: name.to_owned(),
        reason,
    };
    let file = parse_text(text).map_err(|e| seed_err(e.to_string()))?;
    if file.set.size() != 2 {
        return Err(seed_err(format!(
            "expected 2 rows, found {}",
            file.set.size()
        )));
    }
    let note = file.note.unwrap_or_default();
    let (tag, source) = note.split_once(':').unwrap_or((note.as_str(), ""));
    let provenance = Provenance::parse(tag.trim())
        .ok_or_else(|| seed_err(format!("unknown provenance '{}'", tag.trim())))?;
    let pair = file
        .set
        .into_verified()
        .map_err(|e| seed_err(format!("not a Golay pair ({e})")))?;
    Ok(SeedRecord {
        name: name.to_owned(),
        pair,
        provenance,
        source: source.trim().to_owned(),
    })
}

/// Immutable collection of verified seeds.
#[derive(Debug, Clone)]
pub struct SeedDb {
    seeds: Vec<SeedRecord>,
}

impl SeedDb {
    /// The seeds compiled into the library.
    pub fn builtin() -> Result<Self> {
        SeedDb::from_sources(BUILTIN.iter().map(|&(n, t)| (n.to_owned(), t.to_owned())))
    }

    /// `(name, text)` pairs; every required length must be present.
    pub fn from_sources(sources: impl IntoIterator<Item = (String, String)>) -> Result<Self> {
        let mut seeds = sources
            .into_iter()
            .map(|(name, text)| parse_seed(&name, &text))
            .collect::<Result<Vec<_>>>()?;
        seeds.sort_by_key(|s| (s.alphabet().q(), s.length()));
        let db = SeedDb { seeds };
        for q in [2, 4] {
            for &len in required_lengths(q)? {
                if db.seed(q, len).is_none() {
                    return Err(Error::Seed {
                        name: seed_name(q, len),
                        reason: "missing data file".into(),
                    });
                }
            }
        }
        Ok(db)
    }

    /// Loads `q<q>_len<LL>.txt` files from a directory.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut sources = Vec::new();
        for q in [2u32, 4] {
            for &len in required_lengths(q)? {
                let name = seed_name(q, len);
                let path = dir.join(format!("{name}.txt"));
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Seed {
                    name: name.clone(),
                    reason: format!("missing data file {} ({e})", path.display()),
                })?;
                sources.push((name, text));
            }
        }
        SeedDb::from_sources(sources)
    }

    pub fn all(&self) -> &[SeedRecord] {
        &self.seeds
    }

    /// Seeds over `U_q`, sorted by length.
    pub fn load(&self, q: u32) -> Result<Vec<SeedRecord>> {
        required_lengths(q)?;
        Ok(self
            .seeds
            .iter()
            .filter(|s| s.alphabet().q() == q)
            .cloned()
            .collect())
    }

    pub fn seed(&self, q: u32, length: usize) -> Option<&SeedRecord> {
        self.seeds
            .iter()
            .find(|s| s.alphabet().q() == q && s.length() == length)
    }

    /// A verified Golay pair of length `length` over `U_q`, or the reason
    /// none can be produced.
    pub fn gcp_for_length(&self, q: u32, length: usize) -> Result<GcpLookup> {
        required_lengths(q)?;
        if length == 0 || !in_gcp_pattern(q, length)? {
            return Ok(GcpLookup::Unavailable {
                length,
                reason: Unavailability::OutsidePattern {
                    q,
                    pattern: pattern_description(q)?,
                },
            });
        }
        let mut planner = Planner {
            db: self,
            memo: HashMap::new(),
        };
        match planner.plan(q, length) {
            Some(derivation) => {
                let pair = self.realize(&derivation)?;
                Ok(GcpLookup::Available(GcpWitness { pair, derivation }))
            }
            None => Ok(GcpLookup::Unavailable {
                length,
                reason: Unavailability::NoConstructionPath { q },
            }),
        }
    }

    /// True if [`gcp_for_length`](Self::gcp_for_length) would succeed.
    pub fn is_constructible(&self, q: u32, length: usize) -> bool {
        let mut planner = Planner {
            db: self,
            memo: HashMap::new(),
        };
        length > 0 && planner.plan(q, length).is_some()
    }

    pub fn realize(&self, derivation: &Derivation) -> Result<ComplementarySet> {
        match derivation {
            Derivation::Seed { q, length } => self
                .seed(*q, *length)
                .map(|s| s.pair.clone())
                .ok_or_else(|| Error::Seed {
                    name: seed_name(*q, *length),
                    reason: "not in database".into(),
                }),
            Derivation::Double(inner) => golay_double(&self.realize(inner)?),
            Derivation::Turyn { binary, other } => {
                turyn_product(&self.realize(binary)?, &self.realize(other)?)
            }
        }
    }
}

/// How a Golay pair was composed from seeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "op")]
pub enum Derivation {
    Seed {
        q: u32,
        length: usize,
    },
    Double(Box<Derivation>),
    Turyn {
        binary: Box<Derivation>,
        other: Box<Derivation>,
    },
}

impl Derivation {
    pub fn length(&self) -> usize {
        match self {
            Derivation::Seed { length, .. } => *length,
            Derivation::Double(inner) => 2 * inner.length(),
            Derivation::Turyn { binary, other } => binary.length() * other.length(),
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::Seed { q, length } => write!(f, "seed(q={q}, len={length})"),
            Derivation::Double(inner) => write!(f, "double({inner})"),
            Derivation::Turyn { binary, other } => write!(f, "turyn({binary}, {other})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcpWitness {
    pub pair: ComplementarySet,
    pub derivation: Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Unavailability {
    OutsidePattern { q: u32, pattern: String },
    NoConstructionPath { q: u32 },
}

impl fmt::Display for Unavailability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unavailability::OutsidePattern { pattern, .. } => write!(f, "∉ {pattern}"),
            Unavailability::NoConstructionPath { .. } => {
                f.write_str("length reachable in principle, no construction path available")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcpLookup {
    Available(GcpWitness),
    Unavailable {
        length: usize,
        reason: Unavailability,
    },
}

impl GcpLookup {
    pub fn pair(&self) -> Option<&ComplementarySet> {
        match self {
            GcpLookup::Available(w) => Some(&w.pair),
            GcpLookup::Unavailable { .. } => None,
        }
    }

    pub fn into_witness(self) -> Option<GcpWitness> {
        match self {
            GcpLookup::Available(w) => Some(w),
            GcpLookup::Unavailable { .. } => None,
        }
    }

    /// Human-readable reason, e.g. `3 ∉ 2^α·10^β·26^γ`.
    pub fn reason(&self) -> Option<String> {
        match self {
            GcpLookup::Available(_) => None,
            GcpLookup::Unavailable { length, reason } => Some(format!("{length} {reason}")),
        }
    }
}

struct Planner<'a> {
    db: &'a SeedDb,
    memo: HashMap<(u32, usize), Option<Derivation>>,
}

impl Planner<'_> {
    /// Seed, then doubling, then Turyn with a binary factor, smallest first.
    fn plan(&mut self, q: u32, length: usize) -> Option<Derivation> {
        if let Some(hit) = self.memo.get(&(q, length)) {
            return hit.clone();
        }
        let found = self.plan_uncached(q, length);
        self.memo.insert((q, length), found.clone());
        found
    }

    fn plan_uncached(&mut self, q: u32, length: usize) -> Option<Derivation> {
        if self.db.seed(q, length).is_some() {
            return Some(Derivation::Seed { q, length });
        }
        if length.is_multiple_of(2) {
            if let Some(half) = self.plan(q, length / 2) {
                return Some(Derivation::Double(Box::new(half)));
            }
        }
        for m in 2..length {
            if !length.is_multiple_of(m) {
                continue;
            }
            let Some(binary) = self.plan(2, m) else {
                continue;
            };
            if let Some(other) = self.plan(q, length / m) {
                return Some(Derivation::Turyn {
                    binary: Box::new(binary),
                    other: Box::new(other),
                });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn db() -> SeedDb {
        SeedDb::builtin().unwrap()
    }

    #[test]
    fn builtin_loads_sorted() {
        let db = db();
        let q2: Vec<usize> = db.load(2).unwrap().iter().map(|s| s.length()).collect();
        assert_eq!(q2, [1, 2, 10, 26]);
        let q4: Vec<usize> = db.load(4).unwrap().iter().map(|s| s.length()).collect();
        assert_eq!(q4, [1, 2, 3, 5, 11, 13]);
        assert!(db.all().iter().all(|s| s.pair.is_verified()));
        assert_eq!(db.load(3).unwrap_err(), Error::UnsupportedAlphabet(3));
    }

    #[test]
    fn example_pair_is_a_seed() {
        let s = db().seed(2, 10).unwrap().clone();
        assert_eq!(s.pair.rows()[0].pretty(), "++--+++-+-");
        assert_eq!(s.pair.rows()[1].pretty(), "+++++-+--+");
        assert_eq!(s.provenance, Provenance::PublishedExample);
    }

    #[test]
    fn quaternary_length_three() {
        let s = db().seed(4, 3).unwrap().clone();
        assert_eq!(s.pair.rows()[0].exponents(), &[0, 0, 2]);
        assert_eq!(s.pair.rows()[1].exponents(), &[0, 1, 0]);
        assert_eq!(s.provenance, Provenance::DerivedSearch);
    }

    #[test]
    fn corrupted_seed_names_itself() {
        let mut sources: Vec<(String, String)> = BUILTIN
            .iter()
            .map(|&(n, t)| (n.to_owned(), t.to_owned()))
            .collect();
        sources[2].1 = sources[2].1.replacen("0011000101", "0011000100", 1);
        match SeedDb::from_sources(sources) {
            Err(Error::Seed { name, .. }) => assert_eq!(name, "q2_len10"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_seed_reported() {
        let sources = BUILTIN
            .iter()
            .filter(|(n, _)| *n != "q4_len13")
            .map(|&(n, t)| (n.to_owned(), t.to_owned()));
        match SeedDb::from_sources(sources) {
            Err(Error::Seed { name, reason }) => {
                assert_eq!(name, "q4_len13");
                assert!(reason.contains("missing"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lookup_paths() {
        let db = db();
        let four = db.gcp_for_length(2, 4).unwrap().into_witness().unwrap();
        assert_eq!(four.derivation.to_string(), "double(seed(q=2, len=2))");
        let fifty_two = db.gcp_for_length(2, 52).unwrap().into_witness().unwrap();
        assert_eq!(fifty_two.pair.length(), 52);
        assert!(fifty_two.pair.is_verified());
        let three = db.gcp_for_length(2, 3).unwrap();
        assert_eq!(three.reason().unwrap(), "3 ∉ 2^α·10^β·26^γ");
    }

    #[test]
    fn binary_pattern_lengths_to_64() {
        let db = db();
        for len in [1, 2, 4, 8, 10, 16, 20, 26, 32, 40, 52, 64] {
            let w = db.gcp_for_length(2, len).unwrap().into_witness();
            let w = w.unwrap_or_else(|| panic!("length {len}"));
            assert_eq!(w.pair.length(), len);
            assert_eq!(w.derivation.length(), len);
        }
    }

    #[test]
    fn quaternary_existence_only() {
        // 18 = 2·3² lies in the quaternary pattern but needs a length-9 factor
        let db = db();
        let r = db.gcp_for_length(4, 18).unwrap();
        assert!(matches!(
            r,
            GcpLookup::Unavailable {
                reason: Unavailability::NoConstructionPath { q: 4 },
                ..
            }
        ));
        let thirty = db.gcp_for_length(4, 30).unwrap().into_witness().unwrap();
        assert!(matches!(thirty.derivation, Derivation::Turyn { .. }));
    }
}
