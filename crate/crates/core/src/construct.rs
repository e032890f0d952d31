//! Concatenation constructions for complementary sets.
//!
//! * [`theorem1`]: two Golay pairs of lengths `M` and `N` give a size-4 set of
//!   length `M + N`.
//! * [`theorem2`]: a Golay pair of length `M` and a size-4 set of length `P`
//!   give a size-8 set of length `M + P`.
//! * [`stack`]: vertical concatenation of sets of equal length.
//! * [`golay_double`] and [`turyn_product`]: classical pair compositions used to
//!   grow seed pairs to composite lengths.
//!
//! Coefficients are exponents of `U_q`. The unimodular identity
//! `x·conj(y) + x'·conj(y') = 0` holds exactly when `ζ^(x-y) = -ζ^(x'-y')`,
//! i.e. `x - y ≡ x' - y' + q/2 (mod q)`, which needs even `q`.

use std::fmt;

use crate::algebra::{same_alphabet, Alphabet, Cyclotomic, Sequence};
use crate::error::{Error, Result};
use crate::verify::ComplementarySet;

fn check_exponents(alphabet: Alphabet, exps: &[u32]) -> Result<()> {
    match exps.iter().find(|&&t| t >= alphabet.q()) {
        Some(&bad) => Err(Error::InvalidExponent {
            value: bad,
            q: alphabet.q(),
        }),
        None => Ok(()),
    }
}

/// `x·conj(y) + x'·conj(y') == 0` in exponent form.
fn cancels(alphabet: Alphabet, x: u32, y: u32, x2: u32, y2: u32) -> Result<bool> {
    let half = alphabet
        .minus_one()
        .ok_or(Error::OddAlphabet(alphabet.q()))?;
    let lhs = alphabet.sub(x, y);
    let rhs = alphabet.add(alphabet.sub(x2, y2), half);
    Ok(lhs == rhs)
}

/// The same condition evaluated as an element of `ℤ[ζ_q]`.
pub fn cancels_exact(alphabet: Alphabet, x: u32, y: u32, x2: u32, y2: u32) -> bool {
    let mut raw = vec![0i64; alphabet.q() as usize];
    raw[alphabet.sub(x, y) as usize] += 1;
    raw[alphabet.sub(x2, y2) as usize] += 1;
    Cyclotomic::new(alphabet).value(&raw).is_zero()
}

/// `(x0, x1, y0, y1)` for the size-4 construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientTuple4 {
    pub x0: u32,
    pub x1: u32,
    pub y0: u32,
    pub y1: u32,
}

impl CoefficientTuple4 {
    pub fn new(x0: u32, x1: u32, y0: u32, y1: u32) -> Self {
        CoefficientTuple4 { x0, x1, y0, y1 }
    }

    /// `(0, 0, 0, q/2)`, i.e. `(1, 1, 1, -1)`.
    pub fn standard(alphabet: Alphabet) -> Result<Self> {
        let half = alphabet
            .minus_one()
            .ok_or(Error::OddAlphabet(alphabet.q()))?;
        Ok(CoefficientTuple4::new(0, 0, 0, half))
    }

    pub fn check(&self, alphabet: Alphabet) -> Result<()> {
        check_exponents(alphabet, &[self.x0, self.x1, self.y0, self.y1])?;
        if !cancels(alphabet, self.x0, self.y0, self.x1, self.y1)? {
            return Err(Error::Inadmissible {
                identity: format!(
                    "x0·y0* + x1·y1* = ζ^{} + ζ^{} ({alphabet})",
                    alphabet.sub(self.x0, self.y0),
                    alphabet.sub(self.x1, self.y1)
                ),
            });
        }
        Ok(())
    }

    pub fn is_admissible(&self, alphabet: Alphabet) -> bool {
        self.check(alphabet).is_ok()
    }

    /// Every admissible tuple, in lexicographic order.
    pub fn all_admissible(alphabet: Alphabet) -> Vec<Self> {
        let q = alphabet.q();
        let mut out = Vec::new();
        for x0 in 0..q {
            for x1 in 0..q {
                for y0 in 0..q {
                    for y1 in 0..q {
                        let c = CoefficientTuple4::new(x0, x1, y0, y1);
                        if c.is_admissible(alphabet) {
                            out.push(c);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CoefficientTuple4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x0, self.x1, self.y0, self.y1)
    }
}

/// `(x0, x1, x2, x3, y0, y1)` for the size-8 construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientTuple8 {
    pub x0: u32,
    pub x1: u32,
    pub x2: u32,
    pub x3: u32,
    pub y0: u32,
    pub y1: u32,
}

impl CoefficientTuple8 {
    pub fn new(x0: u32, x1: u32, x2: u32, x3: u32, y0: u32, y1: u32) -> Self {
        CoefficientTuple8 {
            x0,
            x1,
            x2,
            x3,
            y0,
            y1,
        }
    }

    /// `(0, q/2, q/2, 0, 0, 0)`, i.e. `(1, -1, -1, 1, 1, 1)`.
    pub fn standard(alphabet: Alphabet) -> Result<Self> {
        let h = alphabet
            .minus_one()
            .ok_or(Error::OddAlphabet(alphabet.q()))?;
        Ok(CoefficientTuple8::new(0, h, h, 0, 0, 0))
    }

    pub fn check(&self, alphabet: Alphabet) -> Result<()> {
        check_exponents(
            alphabet,
            &[self.x0, self.x1, self.x2, self.x3, self.y0, self.y1],
        )?;
        if !cancels(alphabet, self.x0, self.y0, self.x2, self.y1)? {
            return Err(Error::Inadmissible {
                identity: format!(
                    "x0·y0* + x2·y1* = ζ^{} + ζ^{} ({alphabet})",
                    alphabet.sub(self.x0, self.y0),
                    alphabet.sub(self.x2, self.y1)
                ),
            });
        }
        if !cancels(alphabet, self.x1, self.y0, self.x3, self.y1)? {
            return Err(Error::Inadmissible {
                identity: format!(
                    "x1·y0* + x3·y1* = ζ^{} + ζ^{} ({alphabet})",
                    alphabet.sub(self.x1, self.y0),
                    alphabet.sub(self.x3, self.y1)
                ),
            });
        }
        Ok(())
    }

    pub fn is_admissible(&self, alphabet: Alphabet) -> bool {
        self.check(alphabet).is_ok()
    }

    pub fn all_admissible(alphabet: Alphabet) -> Vec<Self> {
        let q = alphabet.q();
        let mut out = Vec::new();
        for x0 in 0..q {
            for x1 in 0..q {
                for x2 in 0..q {
                    for x3 in 0..q {
                        for y0 in 0..q {
                            for y1 in 0..q {
                                let c = CoefficientTuple8::new(x0, x1, x2, x3, y0, y1);
                                if c.is_admissible(alphabet) {
                                    out.push(c);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CoefficientTuple8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.x0, self.x1, self.x2, self.x3, self.y0, self.y1
        )
    }
}

fn join(x: u32, left: &Sequence, y: u32, right: &Sequence) -> Result<Sequence> {
    left.scale(x)?.concat(&right.scale(y)?)
}

fn finish(candidate: ComplementarySet, what: &str) -> Result<ComplementarySet> {
    candidate
        .into_verified()
        .map_err(|e| Error::ConstructionFailed(format!("{what}: {e}")))
}

/// Rows `e, f, g, h` of the size-4 construction without any checks on the
/// inputs or coefficients. The result is an unverified candidate.
pub fn assemble_theorem1(
    pair_a: &ComplementarySet,
    pair_b: &ComplementarySet,
    c: CoefficientTuple4,
) -> Result<ComplementarySet> {
    same_alphabet(pair_a.alphabet(), pair_b.alphabet())?;
    let [a, b] = two(pair_a)?;
    let [cc, d] = two(pair_b)?;
    ComplementarySet::new(vec![
        join(c.x0, a, c.y0, cc)?,
        join(c.x0, b, c.y0, d)?,
        join(c.x1, a, c.y1, cc)?,
        join(c.x1, b, c.y1, d)?,
    ])
}

fn two(set: &ComplementarySet) -> Result<[&Sequence; 2]> {
    match set.rows() {
        [a, b] => Ok([a, b]),
        rows => Err(Error::WrongSetSize {
            expected: 2,
            found: rows.len(),
        }),
    }
}

/// Size-4 set of length `M + N` from Golay pairs `(a, b)` and `(c, d)`:
///
/// ```text
/// e = x0·a ‖ y0·c    f = x0·b ‖ y0·d
/// g = x1·a ‖ y1·c    h = x1·b ‖ y1·d
/// ```
pub fn theorem1(
    pair_a: &ComplementarySet,
    pair_b: &ComplementarySet,
    coeffs: CoefficientTuple4,
) -> Result<ComplementarySet> {
    pair_a.require(2, "first pair")?;
    pair_b.require(2, "second pair")?;
    same_alphabet(pair_a.alphabet(), pair_b.alphabet())?;
    coeffs.check(pair_a.alphabet())?;
    finish(
        assemble_theorem1(pair_a, pair_b, coeffs)?,
        "size-4 concatenation",
    )
}

pub fn assemble_theorem2(
    pair: &ComplementarySet,
    set: &ComplementarySet,
    c: CoefficientTuple8,
) -> Result<ComplementarySet> {
    same_alphabet(pair.alphabet(), set.alphabet())?;
    let [a, b] = two(pair)?;
    let [e, f, g, h] = match set.rows() {
        [e, f, g, h] => [e, f, g, h],
        rows => {
            return Err(Error::WrongSetSize {
                expected: 4,
                found: rows.len(),
            })
        }
    };
    ComplementarySet::new(vec![
        join(c.x0, a, c.y0, e)?,
        join(c.x0, b, c.y0, f)?,
        join(c.x1, a, c.y0, g)?,
        join(c.x1, b, c.y0, h)?,
        join(c.x2, a, c.y1, e)?,
        join(c.x2, b, c.y1, f)?,
        join(c.x3, a, c.y1, g)?,
        join(c.x3, b, c.y1, h)?,
    ])
}

/// Size-8 set of length `M + P` from a Golay pair `(a, b)` and a size-4 set
/// `(e, f, g, h)`; rows `p0..p7` are
///
/// ```text
/// x0·a ‖ y0·e   x0·b ‖ y0·f   x1·a ‖ y0·g   x1·b ‖ y0·h
/// x2·a ‖ y1·e   x2·b ‖ y1·f   x3·a ‖ y1·g   x3·b ‖ y1·h
/// ```
pub fn theorem2(
    pair: &ComplementarySet,
    set: &ComplementarySet,
    coeffs: CoefficientTuple8,
) -> Result<ComplementarySet> {
    pair.require(2, "pair")?;
    set.require(4, "size-4 set")?;
    same_alphabet(pair.alphabet(), set.alphabet())?;
    coeffs.check(pair.alphabet())?;
    finish(
        assemble_theorem2(pair, set, coeffs)?,
        "size-8 concatenation",
    )
}

/// Vertical concatenation of verified sets of one length and alphabet.
pub fn stack(sets: &[ComplementarySet]) -> Result<ComplementarySet> {
    let first = sets.first().ok_or(Error::EmptySet)?;
    let mut rows = Vec::new();
    for set in sets {
        if !set.is_verified() {
            return Err(Error::NotVerified("stacked set"));
        }
        same_alphabet(first.alphabet(), set.alphabet())?;
        if set.length() != first.length() {
            return Err(Error::LengthMismatch {
                left: first.length(),
                right: set.length(),
            });
        }
        rows.extend_from_slice(set.rows());
    }
    finish(ComplementarySet::new(rows)?, "stack")
}

/// `(a ‖ b, a ‖ -b)`.
pub fn golay_double(pair: &ComplementarySet) -> Result<ComplementarySet> {
    pair.require(2, "pair")?;
    let [a, b] = two(pair)?;
    let candidate = ComplementarySet::pair(a.concat(b)?, a.concat(&b.negate()?)?)?;
    finish(candidate, "doubling")
}

/// Turyn's composition of a binary pair `(a, b)` of length `M` with a pair
/// `(c, d)` of length `N`, giving a pair of length `M·N` over the alphabet of
/// the second pair.
///
/// With `p = (a + b)/2` and `s = (a - b)/2` (disjoint supports), the output
/// polynomials are `E = p(x)·C(x^M) + s(x)·D̃(x^M)` and
/// `F = p(x)·D(x^M) - s(x)·C̃(x^M)`, where `~` is reverse-conjugate.
pub fn turyn_product(
    binary: &ComplementarySet,
    other: &ComplementarySet,
) -> Result<ComplementarySet> {
    binary.require(2, "binary pair")?;
    other.require(2, "second pair")?;
    let [a, b] = two(binary)?;
    if !a.is_binary() || !b.is_binary() {
        return Err(Error::NotBinary);
    }
    let [c, d] = two(other)?;
    let alpha = other.alphabet();
    let half = alpha.minus_one().ok_or(Error::OddAlphabet(alpha.q()))?;
    let (m, n) = (a.len(), c.len());
    let (ce, de) = (c.exponents(), d.exponents());
    let mut e = vec![0u32; m * n];
    let mut f = vec![0u32; m * n];
    for i in 0..m {
        let ai = a.exponents()[i];
        let sign = if ai == 0 { 0 } else { half };
        let same = ai == b.exponents()[i];
        for j in 0..n {
            let at = i + m * j;
            if same {
                e[at] = alpha.add(sign, ce[j]);
                f[at] = alpha.add(sign, de[j]);
            } else {
                e[at] = alpha.add(sign, alpha.neg(de[n - 1 - j]));
                f[at] = alpha.add(alpha.add(sign, half), alpha.neg(ce[n - 1 - j]));
            }
        }
    }
    let candidate = ComplementarySet::pair(Sequence::new(alpha, e)?, Sequence::new(alpha, f)?)?;
    finish(candidate, "Turyn product")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    fn pair(a: &str, b: &str) -> ComplementarySet {
        ComplementarySet::pair(Sequence::binary(a).unwrap(), Sequence::binary(b).unwrap())
            .unwrap()
            .into_verified()
            .unwrap()
    }

    fn q4_pair(a: &[u32], b: &[u32]) -> ComplementarySet {
        ComplementarySet::pair(
            Sequence::from_exponents(4, a).unwrap(),
            Sequence::from_exponents(4, b).unwrap(),
        )
        .unwrap()
        .into_verified()
        .unwrap()
    }

    fn pretty(set: &ComplementarySet) -> Vec<String> {
        set.rows().iter().map(|r| r.pretty()).collect()
    }

    #[test]
    fn trivial_theorem1() {
        let one = pair("+", "+");
        let cs = theorem1(&one, &one, CoefficientTuple4::new(0, 0, 0, 1)).unwrap();
        assert_eq!(pretty(&cs), ["++", "++", "+-", "+-"]);
        assert!(cs.is_verified());
    }

    #[test]
    fn quaternary_trivial_theorem1() {
        let one = q4_pair(&[0], &[0]);
        let c = CoefficientTuple4::new(0, 1, 0, 3);
        assert!(c.is_admissible(Alphabet::QUATERNARY));
        let cs = theorem1(&one, &one, c).unwrap();
        assert_eq!(cs.length(), 2);
        assert_eq!(cs.size(), 4);
    }

    #[test]
    fn inadmissible_rejected_with_identity() {
        let one = pair("+", "+");
        let err = theorem1(&one, &one, CoefficientTuple4::new(0, 0, 0, 0)).unwrap_err();
        match err {
            Error::Inadmissible { identity } => assert!(identity.contains("x0·y0* + x1·y1*")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            theorem1(&one, &one, CoefficientTuple4::new(0, 0, 0, 2)),
            Err(Error::InvalidExponent { .. })
        ));
    }

    #[test]
    fn unverified_inputs_rejected() {
        let raw = ComplementarySet::pair(
            Sequence::binary("+").unwrap(),
            Sequence::binary("+").unwrap(),
        )
        .unwrap();
        let ok = pair("+", "+");
        assert_eq!(
            theorem1(&raw, &ok, CoefficientTuple4::new(0, 0, 0, 1)),
            Err(Error::NotVerified("first pair"))
        );
        assert!(matches!(golay_double(&raw), Err(Error::NotVerified(_))));
        assert!(matches!(stack(&[raw]), Err(Error::NotVerified(_))));
    }

    #[test]
    fn odd_alphabet_rejected() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(
            CoefficientTuple4::new(0, 0, 0, 0).check(a),
            Err(Error::OddAlphabet(3))
        );
        assert!(CoefficientTuple4::all_admissible(a).is_empty());
    }

    #[test]
    fn exponent_and_exact_admissibility_agree() {
        for q in 1..=8 {
            let alpha = Alphabet::new(q).unwrap();
            for x in 0..q {
                for y in 0..q {
                    for x2 in 0..q {
                        for y2 in 0..q {
                            let exact = cancels_exact(alpha, x, y, x2, y2);
                            let modular = cancels(alpha, x, y, x2, y2).unwrap_or(false);
                            assert_eq!(exact, modular, "q={q} ({x},{y},{x2},{y2})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_counts() {
        // each identity pins one coefficient
        assert_eq!(CoefficientTuple4::all_admissible(Alphabet::BINARY).len(), 8);
        assert_eq!(
            CoefficientTuple4::all_admissible(Alphabet::QUATERNARY).len(),
            64
        );
        assert_eq!(
            CoefficientTuple8::all_admissible(Alphabet::QUATERNARY).len(),
            256
        );
    }

    #[test]
    fn theorem2_equal_first_coefficients() {
        for alpha in [Alphabet::BINARY, Alphabet::QUATERNARY] {
            let h = alpha.minus_one().unwrap();
            for c in CoefficientTuple8::all_admissible(alpha) {
                if c.x0 == c.y0 {
                    assert_eq!(c.x2, alpha.add(c.y1, h));
                }
            }
        }
    }

    #[test]
    fn smallest_theorem2() {
        let one = pair("+", "+");
        let cs4 = theorem1(&one, &one, CoefficientTuple4::new(0, 0, 0, 1)).unwrap();
        let cs8 = theorem2(&one, &cs4, CoefficientTuple8::new(0, 1, 1, 0, 0, 0)).unwrap();
        assert_eq!(cs8.size(), 8);
        assert_eq!(cs8.length(), 3);
        assert!(matches!(
            theorem2(&one, &one, CoefficientTuple8::new(0, 1, 1, 0, 0, 0)),
            Err(Error::WrongSetSize {
                expected: 4,
                found: 2
            })
        ));
    }

    #[test]
    fn stacking() {
        let one = pair("+", "+");
        let a = theorem1(&one, &one, CoefficientTuple4::new(0, 0, 0, 1)).unwrap();
        assert_eq!(stack(std::slice::from_ref(&a)).unwrap(), a);
        let mut rows = a.rows().to_vec();
        rows.swap(0, 3);
        let b = ComplementarySet::new(rows)
            .unwrap()
            .into_verified()
            .unwrap();
        let s = stack(&[a.clone(), b]).unwrap();
        assert_eq!((s.size(), s.length()), (8, 2));
        let other = pair("++", "+-");
        let three = theorem1(&one, &other, CoefficientTuple4::new(0, 0, 0, 1)).unwrap();
        assert!(matches!(
            stack(&[a, three]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(stack(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn doubling() {
        let d = golay_double(&pair("+", "+")).unwrap();
        assert_eq!(pretty(&d), ["++", "+-"]);
        let d8 = golay_double(&pair("++-+", "+++-")).unwrap();
        assert_eq!(pretty(&d8), ["++-++++-", "++-+---+"]);
        let d20 = golay_double(&pair("++--+++-+-", "+++++-+--+")).unwrap();
        assert_eq!(d20.length(), 20);
    }

    #[test]
    fn turyn_products() {
        let two_pair = pair("++", "+-");
        let one = pair("+", "+");
        let t = turyn_product(&two_pair, &one).unwrap();
        assert_eq!(t.length(), 2);
        assert!(verify(&t).is_cs);

        let ten = pair("++--+++-+-", "+++++-+--+");
        let hundred = turyn_product(&ten, &ten).unwrap();
        assert_eq!(hundred.length(), 100);

        let q3 = q4_pair(&[0, 0, 2], &[0, 1, 0]);
        let thirty = turyn_product(&ten, &q3).unwrap();
        assert_eq!((thirty.length(), thirty.alphabet().q()), (30, 4));

        assert_eq!(turyn_product(&q3, &ten), Err(Error::NotBinary));
    }
}
