//! Which lengths admit complementary sets of size 4 and 8.
//!
//! Golay pair lengths follow the known existence patterns:
//!
//! * binary: `2^α·10^β·26^γ`
//! * quaternary: `2^(α+u)·3^β·5^γ·11^η·13^ζ` with `β+γ+η+ζ <= α+2u+1` and
//!   `u <= γ+ζ`
//!
//! Size-4 lengths are sums `M + N` of pair lengths; size-8 lengths are sums
//! `M + P` of a pair length and a size-4 length, plus every size-4 length
//! (two stacked size-4 sets). Membership here is existence only; each entry
//! is additionally labeled `constructive` when the seed database can build
//! the operands.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::construct::{stack, theorem1, theorem2, CoefficientTuple4, CoefficientTuple8};
use crate::error::{Error, Result};
use crate::seeds::SeedDb;
use crate::verify::ComplementarySet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case", tag = "pattern")]
pub enum LengthFactorization {
    Binary {
        alpha: u32,
        beta: u32,
        gamma: u32,
    },
    Quaternary {
        alpha: u32,
        beta: u32,
        gamma: u32,
        eta: u32,
        zeta: u32,
        u: u32,
    },
}

impl LengthFactorization {
    pub fn length(&self) -> usize {
        match *self {
            LengthFactorization::Binary { alpha, beta, gamma } => {
                2usize.pow(alpha) * 10usize.pow(beta) * 26usize.pow(gamma)
            }
            LengthFactorization::Quaternary {
                alpha,
                beta,
                gamma,
                eta,
                zeta,
                u,
            } => {
                2usize.pow(alpha + u)
                    * 3usize.pow(beta)
                    * 5usize.pow(gamma)
                    * 11usize.pow(eta)
                    * 13usize.pow(zeta)
            }
        }
    }

    /// Whether the exponent constraints of the pattern hold.
    pub fn is_valid(&self) -> bool {
        match *self {
            LengthFactorization::Binary { .. } => true,
            LengthFactorization::Quaternary {
                alpha,
                beta,
                gamma,
                eta,
                zeta,
                u,
            } => beta + gamma + eta + zeta <= alpha + 2 * u + 1 && u <= gamma + zeta,
        }
    }
}

pub fn pattern_description(q: u32) -> Result<String> {
    match q {
        2 => Ok("2^α·10^β·26^γ".into()),
        4 => Ok("2^(α+u)·3^β·5^γ·11^η·13^ζ with β+γ+η+ζ ≤ α+2u+1, u ≤ γ+ζ".into()),
        _ => Err(Error::UnsupportedAlphabet(q)),
    }
}

fn powers(base: usize, max: usize) -> impl Iterator<Item = (u32, usize)> {
    std::iter::successors(Some((0u32, 1usize)), move |&(e, v)| {
        v.checked_mul(base)
            .filter(|&nv| nv <= max)
            .map(|nv| (e + 1, nv))
    })
}

/// Every valid exponent tuple whose length is at most `max`.
pub fn factorizations_up_to(q: u32, max: usize) -> Result<Vec<LengthFactorization>> {
    let mut out = Vec::new();
    match q {
        2 => {
            for (alpha, a) in powers(2, max) {
                for (beta, b) in powers(10, max / a) {
                    for (gamma, _) in powers(26, max / (a * b)) {
                        out.push(LengthFactorization::Binary { alpha, beta, gamma });
                    }
                }
            }
        }
        4 => {
            for (two, a) in powers(2, max) {
                for (beta, b) in powers(3, max / a) {
                    for (gamma, c) in powers(5, max / (a * b)) {
                        for (eta, d) in powers(11, max / (a * b * c)) {
                            for (zeta, _) in powers(13, max / (a * b * c * d)) {
                                for u in 0..=two {
                                    let f = LengthFactorization::Quaternary {
                                        alpha: two - u,
                                        beta,
                                        gamma,
                                        eta,
                                        zeta,
                                        u,
                                    };
                                    if f.is_valid() {
                                        out.push(f);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => return Err(Error::UnsupportedAlphabet(q)),
    }
    Ok(out)
}

/// Valid factorizations of exactly `length`.
pub fn factorizations(q: u32, length: usize) -> Result<Vec<LengthFactorization>> {
    Ok(factorizations_up_to(q, length)?
        .into_iter()
        .filter(|f| f.length() == length)
        .collect())
}

pub fn in_gcp_pattern(q: u32, length: usize) -> Result<bool> {
    Ok(!factorizations(q, length)?.is_empty())
}

/// Golay pair lengths up to `max`, by exhaustive exponent enumeration.
pub fn gcp_lengths(q: u32, max: usize) -> Result<BTreeSet<usize>> {
    Ok(factorizations_up_to(q, max)?
        .iter()
        .map(LengthFactorization::length)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case", tag = "rule")]
pub enum Witness {
    /// Pairs of lengths `m` and `n`.
    Theorem1 { m: usize, n: usize },
    /// A pair of length `m` and a size-4 set of length `p`.
    Theorem2 { m: usize, p: usize },
    /// Two size-4 sets of this length.
    Stack { length: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Theorem1 { m, n } => write!(f, "{m}+{n}"),
            Witness::Theorem2 { m, p } => write!(f, "{m}+cs4({p})"),
            Witness::Stack { length } => write!(f, "stack(cs4({length}))"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachEntry {
    pub length: usize,
    pub witnesses: Vec<Witness>,
    /// Some witness has operands the seed database can build.
    pub constructive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachabilitySet {
    pub q: u32,
    pub set_size: usize,
    pub max: usize,
    pub entries: BTreeMap<usize, ReachEntry>,
}

impl ReachabilitySet {
    pub fn lengths(&self) -> BTreeSet<usize> {
        self.entries.keys().copied().collect()
    }

    pub fn contains(&self, length: usize) -> bool {
        self.entries.contains_key(&length)
    }

    pub fn get(&self, length: usize) -> Option<&ReachEntry> {
        self.entries.get(&length)
    }

    pub fn constructive_lengths(&self) -> BTreeSet<usize> {
        self.entries
            .values()
            .filter(|e| e.constructive)
            .map(|e| e.length)
            .collect()
    }

    fn insert(&mut self, length: usize, witness: Witness) {
        self.entries
            .entry(length)
            .or_insert_with(|| ReachEntry {
                length,
                witnesses: Vec::new(),
                constructive: false,
            })
            .witnesses
            .push(witness);
    }
}

/// Size-4 lengths `M + N <= max`, witnesses listed with `M <= N`.
pub fn cs4_lengths(q: u32, max: usize) -> Result<ReachabilitySet> {
    let gcp: Vec<usize> = gcp_lengths(q, max)?.into_iter().collect();
    let mut set = ReachabilitySet {
        q,
        set_size: 4,
        max,
        entries: BTreeMap::new(),
    };
    for (i, &m) in gcp.iter().enumerate() {
        for &n in &gcp[i..] {
            if m + n <= max {
                set.insert(m + n, Witness::Theorem1 { m, n });
            }
        }
    }
    Ok(set)
}

/// Size-8 lengths: `M + P <= max` plus stacked size-4 lengths.
pub fn cs8_lengths(q: u32, max: usize) -> Result<ReachabilitySet> {
    let gcp = gcp_lengths(q, max)?;
    let cs4 = cs4_lengths(q, max)?;
    let mut set = ReachabilitySet {
        q,
        set_size: 8,
        max,
        entries: BTreeMap::new(),
    };
    for &m in &gcp {
        for &p in cs4.entries.keys() {
            if m + p <= max {
                set.insert(m + p, Witness::Theorem2 { m, p });
            }
        }
    }
    for &len in cs4.entries.keys() {
        set.insert(len, Witness::Stack { length: len });
    }
    Ok(set)
}

/// Either enumeration, by set size.
pub fn reachable(q: u32, set_size: usize, max: usize) -> Result<ReachabilitySet> {
    match set_size {
        4 => cs4_lengths(q, max),
        8 => cs8_lengths(q, max),
        _ => Err(Error::WrongSetSize {
            expected: 4,
            found: set_size,
        }),
    }
}

fn witness_constructive(db: &SeedDb, q: u32, w: &Witness) -> bool {
    match *w {
        Witness::Theorem1 { m, n } => db.is_constructible(q, m) && db.is_constructible(q, n),
        Witness::Theorem2 { m, p } => db.is_constructible(q, m) && cs4_constructive(db, q, p),
        Witness::Stack { length } => cs4_constructive(db, q, length),
    }
}

fn cs4_constructive(db: &SeedDb, q: u32, length: usize) -> bool {
    (1..length).any(|m| db.is_constructible(q, m) && db.is_constructible(q, length - m))
}

/// Marks each entry constructive or existence-only.
pub fn label_constructive(set: &mut ReachabilitySet, db: &SeedDb) {
    let q = set.q;
    for entry in set.entries.values_mut() {
        entry.constructive = entry
            .witnesses
            .iter()
            .any(|w| witness_constructive(db, q, w));
    }
}

/// A concrete verified set for one witness.
pub fn realize(db: &SeedDb, q: u32, witness: &Witness) -> Result<ComplementarySet> {
    let pair = |len: usize| {
        db.gcp_for_length(q, len)?
            .into_witness()
            .map(|w| w.pair)
            .ok_or_else(|| {
                Error::Unconstructible(format!("no Golay pair of length {len} over q={q}"))
            })
    };
    let alphabet = crate::algebra::Alphabet::new(q)?;
    match *witness {
        Witness::Theorem1 { m, n } => {
            theorem1(&pair(m)?, &pair(n)?, CoefficientTuple4::standard(alphabet)?)
        }
        Witness::Theorem2 { m, p } => {
            let (inner, _) = build_cs4(db, q, p)?;
            theorem2(&pair(m)?, &inner, CoefficientTuple8::standard(alphabet)?)
        }
        Witness::Stack { length } => {
            let (inner, _) = build_cs4(db, q, length)?;
            stack(&[inner.clone(), inner])
        }
    }
}

/// Builds a size-4 set of `length` from the first constructive split `M + N`
/// with `M` smallest.
pub fn build_cs4(db: &SeedDb, q: u32, length: usize) -> Result<(ComplementarySet, Witness)> {
    for m in 1..length {
        let n = length - m;
        if m > n {
            break;
        }
        if db.is_constructible(q, m) && db.is_constructible(q, n) {
            let w = Witness::Theorem1 { m, n };
            return Ok((realize(db, q, &w)?, w));
        }
    }
    Err(Error::Unconstructible(format!(
        "size-4 set of length {length} over q={q}"
    )))
}

/// Builds a size-8 set, preferring the pair-plus-set split with the smallest
/// pair, then stacking.
pub fn build_cs8(db: &SeedDb, q: u32, length: usize) -> Result<(ComplementarySet, Witness)> {
    for m in 1..length {
        let w = Witness::Theorem2 { m, p: length - m };
        if witness_constructive(db, q, &w) {
            return Ok((realize(db, q, &w)?, w));
        }
    }
    let w = Witness::Stack { length };
    if witness_constructive(db, q, &w) {
        return Ok((realize(db, q, &w)?, w));
    }
    Err(Error::Unconstructible(format!(
        "size-8 set of length {length} over q={q}"
    )))
}

pub fn build(
    db: &SeedDb,
    q: u32,
    set_size: usize,
    length: usize,
) -> Result<(ComplementarySet, Witness)> {
    match set_size {
        4 => build_cs4(db, q, length),
        8 => build_cs8(db, q, length),
        _ => Err(Error::WrongSetSize {
            expected: 4,
            found: set_size,
        }),
    }
}

/// Lengths printed in the published table of size-4 and size-8 sets up to 34.
pub mod table1 {
    use std::collections::BTreeSet;

    use serde::Serialize;

    use super::ReachabilitySet;

    pub const MAX: usize = 34;

    pub const CS4_BINARY: &[usize] = &[
        3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 16, 17, 18, 20, 21, 22, 24, 26, 27, 28, 30, 33, 34,
    ];

    /// The other three rows list every length from 3 to 34.
    pub fn printed(q: u32, set_size: usize) -> Option<BTreeSet<usize>> {
        match (q, set_size) {
            (2, 4) => Some(CS4_BINARY.iter().copied().collect()),
            (2, 8) | (4, 4) | (4, 8) => Some((3..=MAX).collect()),
            _ => None,
        }
    }

    #[derive(Debug, Clone, PartialEq, Eq, Serialize)]
    pub struct Table1Diff {
        /// Printed but not computed.
        pub missing: BTreeSet<usize>,
        /// Computed but not printed.
        pub extra: BTreeSet<usize>,
    }

    /// Compares lengths up to 34 against the printed row.
    pub fn diff(set: &ReachabilitySet) -> Option<Table1Diff> {
        let printed = printed(set.q, set.set_size)?;
        let computed: BTreeSet<usize> = set.lengths().into_iter().filter(|&l| l <= MAX).collect();
        Some(Table1Diff {
            missing: printed.difference(&computed).copied().collect(),
            extra: computed.difference(&printed).copied().collect(),
        })
    }
}
