//! Exact complementarity checks.
//!
//! A stack of `P` sequences of length `N` is complementary when the sum of
//! their autocorrelations vanishes at every shift `0 < τ < N` (and is `P·N`
//! at `τ = 0`). The check is done in `ℤ[ζ_q]`, so it is a decision procedure.

use std::collections::BTreeMap;

use crate::algebra::{aacf, same_alphabet, Alphabet, CorrelationProfile, Sequence};
use crate::error::{Error, Result};

/// `P` rows of equal length over one alphabet.
///
/// The `verified` flag is only ever set by [`ComplementarySet::into_verified`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementarySet {
    alphabet: Alphabet,
    rows: Vec<Sequence>,
    verified: bool,
}

impl ComplementarySet {
    /// An unverified candidate.
    pub fn new(rows: Vec<Sequence>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptySet)?;
        let (alphabet, len) = (first.alphabet(), first.len());
        for row in &rows[1..] {
            same_alphabet(alphabet, row.alphabet())?;
            if row.len() != len {
                return Err(Error::LengthMismatch {
                    left: len,
                    right: row.len(),
                });
            }
        }
        Ok(ComplementarySet {
            alphabet,
            rows,
            verified: false,
        })
    }

    pub fn pair(a: Sequence, b: Sequence) -> Result<Self> {
        ComplementarySet::new(vec![a, b])
    }

    /// Runs [`verify`] and marks the set verified, or reports the first defect.
    pub fn into_verified(mut self) -> Result<Self> {
        let report = verify(&self);
        if !report.is_cs {
            return Err(Error::NotComplementary {
                shift: report.first_defect_shift.unwrap_or(0),
            });
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> &[Sequence] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Sequence> {
        self.rows
    }

    /// Set size `P`.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Sequence length `N`.
    pub fn length(&self) -> usize {
        self.rows[0].len()
    }

    /// Fails unless this is a verified set of exactly `size` rows.
    pub(crate) fn require(&self, size: usize, what: &'static str) -> Result<()> {
        if self.size() != size {
            return Err(Error::WrongSetSize {
                expected: size,
                found: self.size(),
            });
        }
        if !self.verified {
            return Err(Error::NotVerified(what));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub is_cs: bool,
    pub set_size: usize,
    pub length: usize,
    /// Sum of the row autocorrelations over all shifts.
    pub sum_profile: CorrelationProfile,
    /// True if the zero-shift sum equals `P·N`.
    pub peak_ok: bool,
    pub first_defect_shift: Option<usize>,
    /// `|Σ ρ(τ)|` for every off-peak shift `τ > 0` where the sum is nonzero.
    pub defect_magnitudes: BTreeMap<usize, f64>,
}

impl VerificationReport {
    /// The zero-shift sum as an integer.
    pub fn peak(&self) -> Option<i64> {
        self.sum_profile.at(0).as_integer()
    }
}

pub fn verify(set: &ComplementarySet) -> VerificationReport {
    let mut rows = set.rows.iter();
    let mut sum = aacf(rows.next().expect("sets are nonempty"));
    for row in rows {
        sum = sum.add(&aacf(row)).expect("rows share a length");
    }
    let n = set.length();
    let p = set.size();
    let peak_ok = sum.at(0).as_integer() == Some((p * n) as i64);
    let defect_magnitudes: BTreeMap<usize, f64> = (1..n)
        .filter(|&tau| !sum.at(tau as isize).is_zero())
        .map(|tau| (tau, sum.at(tau as isize).norm()))
        .collect();
    let first_defect_shift = defect_magnitudes.keys().next().copied();
    VerificationReport {
        is_cs: peak_ok && first_defect_shift.is_none(),
        set_size: p,
        length: n,
        sum_profile: sum,
        peak_ok,
        first_defect_shift,
        defect_magnitudes,
    }
}

/// Checks rows that have not yet been assembled into a set.
pub fn verify_rows(rows: &[Sequence]) -> Result<VerificationReport> {
    Ok(verify(&ComplementarySet::new(rows.to_vec())?))
}

/// Golay complementary pair test.
pub fn is_gcp(a: &Sequence, b: &Sequence) -> Result<bool> {
    Ok(verify(&ComplementarySet::pair(a.clone(), b.clone())?).is_cs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rows: &[&str]) -> ComplementarySet {
        ComplementarySet::new(rows.iter().map(|r| Sequence::binary(r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn size4_length5_set() {
        let r = verify(&set(&["++-++", "+++--", "+-+++", "+-+--"]));
        assert!(r.is_cs);
        assert_eq!(r.peak(), Some(20));
    }

    #[test]
    fn sign_cancelling_stack() {
        assert!(verify(&set(&["++", "++", "+-", "+-"])).is_cs);
    }

    #[test]
    fn identical_rows_fail() {
        let r = verify(&set(&["++", "++"]));
        assert!(!r.is_cs);
        assert_eq!(r.first_defect_shift, Some(1));
        assert_eq!(r.defect_magnitudes[&1], 2.0);
    }

    #[test]
    fn gcp_examples() {
        let a = Sequence::binary("++--+++-+-").unwrap();
        let b = Sequence::binary("+++++-+--+").unwrap();
        assert!(is_gcp(&a, &b).unwrap());
        let one = Sequence::binary("+").unwrap();
        assert!(is_gcp(&one, &one).unwrap());
        let a3 = Sequence::from_exponents(4, &[0, 0, 2]).unwrap();
        let b3 = Sequence::from_exponents(4, &[0, 1, 0]).unwrap();
        assert!(is_gcp(&a3, &b3).unwrap());
    }

    #[test]
    fn malformed_sets() {
        assert_eq!(ComplementarySet::new(vec![]), Err(Error::EmptySet));
        let ragged = vec![
            Sequence::binary("++").unwrap(),
            Sequence::binary("+").unwrap(),
        ];
        assert!(matches!(
            ComplementarySet::new(ragged),
            Err(Error::LengthMismatch { .. })
        ));
        let mixed = vec![
            Sequence::binary("++").unwrap(),
            Sequence::from_exponents(4, &[0, 1]).unwrap(),
        ];
        assert!(matches!(
            ComplementarySet::new(mixed),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn into_verified_reports_shift() {
        assert_eq!(
            set(&["++", "++"]).into_verified(),
            Err(Error::NotComplementary { shift: 1 })
        );
        assert!(set(&["++", "+-"]).into_verified().unwrap().is_verified());
    }
}
