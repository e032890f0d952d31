//! Sequences over the q-th roots of unity and their aperiodic correlations.
//!
//! A sequence stores integer exponents `t` in `[0, q)`, each standing for
//! `exp(2πi·t/q)`. Correlation values are sums of roots of unity and live in
//! the cyclotomic integers `ℤ[ζ_q]`. They are kept as integer coordinates in
//! the power basis `1, ζ, …, ζ^(φ(q)-1)` after reduction modulo the cyclotomic
//! polynomial `Φ_q`, so two values are equal exactly when their coordinates are.
//! For `q ∈ {1, 2, 4}` the coordinates are plain (Gaussian) integers.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The group `U_q` of q-th roots of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet(u32);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);
    pub const QUATERNARY: Alphabet = Alphabet(4);

    pub fn new(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet(q))
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.0
    }

    /// Exponent of `-1`, if it lies in the alphabet.
    pub fn minus_one(self) -> Option<u32> {
        self.0.is_multiple_of(2).then_some(self.0 / 2)
    }

    /// Exponent of `i`, if it lies in the alphabet.
    pub fn imaginary_unit(self) -> Option<u32> {
        self.0.is_multiple_of(4).then_some(self.0 / 4)
    }

    /// Complex value of `ζ^t`.
    pub fn value(self, t: u32) -> Complex64 {
        // exact for the quarter turns so float cross-checks stay clean
        let q = self.0 as u64;
        let t = t as u64 % q;
        if (4 * t).is_multiple_of(q) {
            return match 4 * t / q {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        Complex64::from_polar(1.0, 2.0 * PI * t as f64 / q as f64)
    }

    #[inline]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - (b % self.0) as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn neg(self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.0)
    }
}

/// A nonempty sequence over `U_q`, stored as exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    alphabet: Alphabet,
    exps: Vec<u32>,
}

impl Sequence {
    pub fn new(alphabet: Alphabet, exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = exps.iter().find(|&&t| t >= alphabet.q()) {
            return Err(Error::InvalidExponent {
                value: bad,
                q: alphabet.q(),
            });
        }
        Ok(Sequence { alphabet, exps })
    }

    pub fn from_exponents(q: u32, exps: &[u32]) -> Result<Self> {
        Sequence::new(Alphabet::new(q)?, exps.to_vec())
    }

    /// Parses `+`/`-` (binary) or `+`/`-`/`i`/`î` (quaternary) glyphs.
    pub fn from_glyphs(alphabet: Alphabet, glyphs: &str) -> Result<Self> {
        let q = alphabet.q();
        let mut exps = Vec::with_capacity(glyphs.len());
        for (column, ch) in glyphs.chars().enumerate() {
            let t = match (ch, q) {
                ('+', _) => Some(0),
                ('-' | '−', 2 | 4) => alphabet.minus_one(),
                ('i', 4) => Some(1),
                ('î' | 'I', 4) => Some(3),
                _ => None,
            };
            match t {
                Some(t) => exps.push(t),
                None => {
                    return Err(Error::Parse {
                        line: 1,
                        column: column + 1,
                        message: format!("'{ch}' is not a glyph for {alphabet}"),
                    })
                }
            }
        }
        Sequence::new(alphabet, exps)
    }

    /// Shorthand for binary `+`/`-` strings.
    pub fn binary(signs: &str) -> Result<Self> {
        Sequence::from_glyphs(Alphabet::BINARY, signs)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Multiplies every element by `ζ^u`.
    pub fn scale(&self, u: u32) -> Result<Sequence> {
        if u >= self.alphabet.q() {
            return Err(Error::InvalidExponent {
                value: u,
                q: self.alphabet.q(),
            });
        }
        let a = self.alphabet;
        Ok(Sequence {
            alphabet: a,
            exps: self.exps.iter().map(|&t| a.add(t, u)).collect(),
        })
    }

    /// `-self`. Needs even q.
    pub fn negate(&self) -> Result<Sequence> {
        let half = self
            .alphabet
            .minus_one()
            .ok_or(Error::OddAlphabet(self.alphabet.q()))?;
        self.scale(half)
    }

    pub fn reverse(&self) -> Sequence {
        let mut exps = self.exps.clone();
        exps.reverse();
        Sequence {
            alphabet: self.alphabet,
            exps,
        }
    }

    pub fn conjugate(&self) -> Sequence {
        let a = self.alphabet;
        Sequence {
            alphabet: a,
            exps: self.exps.iter().map(|&t| a.neg(t)).collect(),
        }
    }

    pub fn concat(&self, other: &Sequence) -> Result<Sequence> {
        same_alphabet(self.alphabet, other.alphabet)?;
        let mut exps = Vec::with_capacity(self.len() + other.len());
        exps.extend_from_slice(&self.exps);
        exps.extend_from_slice(&other.exps);
        Ok(Sequence {
            alphabet: self.alphabet,
            exps,
        })
    }

    /// Re-expresses the sequence over `U_q'` where `q | q'`.
    pub fn embed(&self, target: Alphabet) -> Result<Sequence> {
        let (q, q2) = (self.alphabet.q(), target.q());
        if q2 % q != 0 {
            return Err(Error::AlphabetMismatch { left: q, right: q2 });
        }
        let factor = q2 / q;
        Ok(Sequence {
            alphabet: target,
            exps: self.exps.iter().map(|&t| t * factor).collect(),
        })
    }

    /// True if every element is `±1`.
    pub fn is_binary(&self) -> bool {
        let half = self.alphabet.minus_one();
        self.exps.iter().all(|&t| t == 0 || Some(t) == half)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.exps.iter().map(|&t| self.alphabet.value(t)).collect()
    }

    /// Renders with `+ - i î` glyphs for q ∈ {2, 4}; exponent digits otherwise.
    pub fn pretty(&self) -> String {
        match self.alphabet.q() {
            2 => self
                .exps
                .iter()
                .map(|&t| if t == 0 { '+' } else { '-' })
                .collect(),
            4 => self
                .exps
                .iter()
                .map(|&t| ['+', 'i', '-', 'î'][t as usize])
                .collect(),
            _ => self
                .exps
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

pub(crate) fn same_alphabet(a: Alphabet, b: Alphabet) -> Result<()> {
    if a != b {
        return Err(Error::AlphabetMismatch {
            left: a.q(),
            right: b.q(),
        });
    }
    Ok(())
}

/// Integer polynomial arithmetic for `Φ_q`, coefficients low to high.
mod poly {
    pub fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let lead = *den.last().unwrap();
        debug_assert!(lead == 1);
        let mut quot = vec![0; num.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &d) in den.iter().enumerate() {
                    rem[i + j] -= c * d;
                }
            }
        }
        debug_assert!(rem.iter().all(|&r| r == 0));
        quot
    }

    pub fn cyclotomic(n: u32) -> Vec<i64> {
        let n = n as usize;
        let mut p = vec![0i64; n + 1];
        p[0] = -1;
        p[n] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = divide_exact(&p, &cyclotomic(d as u32));
            }
        }
        p
    }
}

/// Reduction modulo `Φ_q`.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    q: u32,
    modulus: Vec<i64>,
    basis: Vec<Vec<i64>>,
}

impl Cyclotomic {
    pub fn new(alphabet: Alphabet) -> Self {
        let q = alphabet.q();
        let modulus = poly::cyclotomic(q);
        let degree = modulus.len() - 1;
        let mut this = Cyclotomic {
            q,
            modulus,
            basis: Vec::new(),
        };
        this.basis = (0..q as usize)
            .map(|t| {
                let mut raw = vec![0; q as usize];
                raw[t] = 1;
                let v = this.reduce(&raw);
                debug_assert_eq!(v.len(), degree);
                v
            })
            .collect();
        this
    }

    /// `φ(q)`, the number of coordinates.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduced coordinates of `ζ^t`.
    pub fn basis(&self, t: u32) -> &[i64] {
        &self.basis[t as usize]
    }

    /// Reduces `Σ raw[t]·ζ^t` (any length) to canonical coordinates.
    pub fn reduce(&self, raw: &[i64]) -> Vec<i64> {
        let d = self.degree();
        let mut rem = raw.to_vec();
        if rem.len() < d {
            rem.resize(d, 0);
        }
        for i in (d..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                let shift = i - d;
                for (j, &m) in self.modulus.iter().enumerate() {
                    rem[shift + j] -= c * m;
                }
            }
        }
        rem.truncate(d);
        rem
    }

    pub fn value(&self, raw: &[i64]) -> CorrelationValue {
        CorrelationValue {
            q: self.q,
            coords: self.reduce(raw),
        }
    }
}

/// An exact element of `ℤ[ζ_q]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorrelationValue {
    q: u32,
    coords: Vec<i64>,
}

impl CorrelationValue {
    pub fn zero(alphabet: Alphabet) -> Self {
        let d = Cyclotomic::new(alphabet).degree();
        CorrelationValue {
            q: alphabet.q(),
            coords: vec![0; d],
        }
    }

    /// The rational integer `n`.
    pub fn integer(alphabet: Alphabet, n: i64) -> Self {
        let mut v = CorrelationValue::zero(alphabet);
        v.coords[0] = n;
        v
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `(re, im)` as exact integers when q ∈ {1, 2, 4}.
    pub fn gaussian(&self) -> Option<(i64, i64)> {
        match self.q {
            1 | 2 => Some((self.coords[0], 0)),
            4 => Some((self.coords[0], self.coords[1])),
            _ => None,
        }
    }

    /// Value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coords[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coords[0])
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = Alphabet(self.q);
        self.coords
            .iter()
            .enumerate()
            .map(|(t, &c)| a.value(t as u32) * c as f64)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.to_complex().norm()
    }

    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let mut raw = vec![0i64; q];
        for (t, &c) in self.coords.iter().enumerate() {
            raw[(q - t) % q] += c;
        }
        Cyclotomic::new(Alphabet(self.q)).value(&raw)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "adding values from different alphabets");
        CorrelationValue {
            q: self.q,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for CorrelationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gaussian() {
            Some((re, 0)) => write!(f, "{re}"),
            Some((0, im)) => write!(f, "{im}i"),
            Some((re, im)) if im < 0 => write!(f, "{re}-{}i", -im),
            Some((re, im)) => write!(f, "{re}+{im}i"),
            None => {
                let z = self.to_complex();
                write!(f, "{:.6}{:+.6}i", z.re, z.im)
            }
        }
    }
}

/// A correlation function over shifts `-(N-1) ..= N-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    length: usize,
    values: Vec<CorrelationValue>,
}

impl CorrelationProfile {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn shifts(&self) -> std::ops::RangeInclusive<isize> {
        let m = self.length as isize - 1;
        -m..=m
    }

    /// Value at shift `tau`; `None` when `|tau| >= N`.
    pub fn get(&self, tau: isize) -> Option<&CorrelationValue> {
        let idx = tau + self.length as isize - 1;
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    pub fn at(&self, tau: isize) -> &CorrelationValue {
        self.get(tau)
            .unwrap_or_else(|| panic!("shift {tau} outside profile of length {}", self.length))
    }

    /// Values for `τ = 0 ..= N-1`.
    pub fn nonnegative(&self) -> &[CorrelationValue] {
        &self.values[self.length - 1..]
    }

    pub fn values(&self) -> &[CorrelationValue] {
        &self.values
    }

    /// Elementwise sum of profiles of the same length.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.length != other.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: other.length,
            });
        }
        Ok(CorrelationProfile {
            length: self.length,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }
}

/// Aperiodic cross-correlation `ρ_{a,b}(τ)`.
///
/// `ρ(τ) = Σ_k a_k·conj(b_{k+τ})` for `τ ≥ 0` and `Σ_k a_{k-τ}·conj(b_k)` for
/// `τ < 0`, so that `ρ_{a,b}(τ) = conj(ρ_{b,a}(-τ))`.
pub fn accf(a: &Sequence, b: &Sequence) -> Result<CorrelationProfile> {
    same_alphabet(a.alphabet, b.alphabet)?;
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let alpha = a.alphabet;
    let ring = Cyclotomic::new(alpha);
    let n = a.len();
    let q = alpha.q() as usize;
    let mut raw = vec![0i64; q];
    let mut values = Vec::with_capacity(2 * n - 1);
    for tau in -(n as isize - 1)..=(n as isize - 1) {
        raw.iter_mut().for_each(|r| *r = 0);
        let s = tau.unsigned_abs();
        for k in 0..n - s {
            let (x, y) = if tau >= 0 {
                (a.exps[k], b.exps[k + s])
            } else {
                (a.exps[k + s], b.exps[k])
            };
            raw[alpha.sub(x, y) as usize] += 1;
        }
        values.push(ring.value(&raw));
    }
    Ok(CorrelationProfile { length: n, values })
}

/// Aperiodic autocorrelation `ρ_a(τ) = ρ_{a,a}(τ)`.
pub fn aacf(a: &Sequence) -> CorrelationProfile {
    accf(a, a).expect("a sequence always matches itself")
}
