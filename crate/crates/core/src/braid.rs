//! Braid words in the standard generators `σ_1 .. σ_{m-1}`.
//!
//! Words are kept exactly as written. No free reduction or normal form is
//! applied, every invariant in this crate is computed on the raw letters.
//! The strand count travels with the word and operations on words with
//! different strand counts fail instead of embedding one group in another.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{ensure_same_size, Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+1",
            Sign::Neg => "-1",
        })
    }
}

/// `σ_index^sign`, with `index` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Letter::new(index, Sign::Pos)
    }

    pub fn neg(index: usize) -> Self {
        Letter::new(index, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.index, -self.sign)
    }

    /// `k` for `σ_k`, `-k` for `σ_k⁻¹`.
    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign.as_i64()
    }
}

// Lexicographic: by index, and σ_k⁻¹ before σ_k.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.index, self.sign).cmp(&(other.index, other.sign))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn generator(strands: usize, index: usize, sign: Sign) -> Result<Self> {
        Self::new(strands, vec![Letter::new(index, sign)])
    }

    /// Builds a word from signed indices: `k` is `σ_k`, `-k` is `σ_k⁻¹`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            if s == 0 {
                return Err(Error::GeneratorOutOfRange { index: 0, strands });
            }
            let sign = if s > 0 { Sign::Pos } else { Sign::Neg };
            letters.push(Letter::new(s.unsigned_abs() as usize, sign));
        }
        Self::new(strands, letters)
    }

    /// Parses either `-2 1 1 2` or `s2^-1 s1 s1 s2`. Powers like `s1^3` expand
    /// to repeated letters. Token positions in errors are 1-based.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let mut letters = Vec::new();
        for (n, token) in text.split_whitespace().enumerate() {
            let position = n + 1;
            let (index, power) = parse_token(position, token)?;
            if index == 0 || index >= strands {
                return Err(Error::parse(
                    position,
                    token,
                    format!("generator index must lie in 1..={}", strands - 1),
                ));
            }
            let sign = if power > 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..power.unsigned_abs() {
                letters.push(Letter::new(index, sign));
            }
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i64()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Pos)
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// The stacking product `self · other` (`self` on top).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        ensure_same_size(self.strands, other.strands)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self * by = by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        by.inverse().concat(self)?.concat(by)
    }

    pub fn power(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn freely_reduced(&self) -> BraidWord {
        let mut letters: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `|β|`: `|β|(j)` is the starting index of the strand that ends at
    /// position `j`. With this reading `|ab| = |a| ∘ |b|`.
    pub fn permutation(&self) -> Permutation {
        let mut tracker = StrandTracker::new(self.strands);
        for &letter in &self.letters {
            tracker.cross(letter);
        }
        tracker.into_permutation()
    }
}

fn parse_token(position: usize, token: &str) -> Result<(usize, i64)> {
    let bad = |reason: &str| Error::parse(position, token, reason);
    if let Some(rest) = token.strip_prefix('s') {
        let (index, power) = match rest.split_once('^') {
            Some((index, power)) => (index, power),
            None => (rest, "1"),
        };
        let index: usize = index
            .parse()
            .map_err(|_| bad("expected generator index after 's'"))?;
        let power: i64 = power.parse().map_err(|_| bad("expected integer exponent"))?;
        if power == 0 {
            return Err(bad("zero exponent"));
        }
        Ok((index, power))
    } else {
        let value: i64 = token
            .parse()
            .map_err(|_| bad("expected nonzero integer or sK^E"))?;
        if value == 0 {
            return Err(bad("zero is not a generator"));
        }
        Ok((value.unsigned_abs() as usize, value.signum()))
    }
}

impl fmt::Display for BraidWord {
    /// Canonical integer form, e.g. `-2 1 1 2 2 2 -1 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, letter) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", letter.signed())?;
        }
        Ok(())
    }
}

/// Parses the canonical integer form; the strand count is taken to be one
/// more than the largest index that occurs (at least 2).
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let probe = BraidWord::parse(usize::MAX, text)?;
        let strands = probe.letters.iter().map(|l| l.index + 1).max().unwrap_or(2);
        BraidWord::new(strands.max(2), probe.letters)
    }
}

/// Which strand sits at each position while reading a word top to bottom.
#[derive(Debug, Clone)]
pub(crate) struct StrandTracker {
    at: Vec<usize>,
}

impl StrandTracker {
    pub(crate) fn new(strands: usize) -> Self {
        StrandTracker {
            at: (0..strands).collect(),
        }
    }

    /// Applies one letter and returns the 0-based `(left, right)` strands
    /// that met at positions `p, p+1` before the swap.
    #[inline]
    pub(crate) fn cross(&mut self, letter: Letter) -> (usize, usize) {
        let p = letter.index - 1;
        let pair = (self.at[p], self.at[p + 1]);
        self.at.swap(p, p + 1);
        pair
    }

    pub(crate) fn into_permutation(self) -> Permutation {
        Permutation::from_zero_based(self.at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, s).unwrap()
    }

    #[test]
    fn concat_appends_letters() {
        let ab = w(3, &[1]).concat(&w(3, &[2])).unwrap();
        assert_eq!(ab.signed(), vec![1, 2]);
        let e = BraidWord::identity(3).unwrap();
        assert_eq!(e.concat(&w(3, &[1])).unwrap().signed(), vec![1]);
    }

    #[test]
    fn concat_builds_the_worked_example() {
        let a = w(3, &[-2, 1, 1]);
        let b = w(3, &[2, 2, 2, -1, 2]);
        let ab = a.concat(&b).unwrap();
        assert_eq!(ab.len(), 8);
        assert_eq!(ab.to_string(), "-2 1 1 2 2 2 -1 2");
    }

    #[test]
    fn mismatched_strands_fail() {
        assert_eq!(
            w(3, &[1]).concat(&w(4, &[1])),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
        assert!(w(3, &[1]).conjugate(&w(4, &[1])).is_err());
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w(3, &[1, -2]).inverse().signed(), vec![2, -1]);
        assert!(BraidWord::identity(3).unwrap().inverse().is_empty());
    }

    #[test]
    fn generator_swaps_adjacent_strands() {
        assert_eq!(w(2, &[1]).permutation().images(), vec![2, 1]);
        assert!(BraidWord::identity(4).unwrap().permutation().is_identity());
    }

    #[test]
    fn conjugate_has_expected_length() {
        let g = w(5, &[1]);
        let h = w(5, &[2, -3, -4, -4, -1, -1]);
        let c = g.conjugate(&h).unwrap();
        assert_eq!(c.len(), 13);
        assert_eq!(
            c.signed(),
            vec![1, 1, 4, 4, 3, -2, 1, 2, -3, -4, -4, -1, -1]
        );
        let e = BraidWord::identity(5).unwrap();
        assert_eq!(g.conjugate(&e).unwrap(), g);
    }

    #[test]
    fn parses_both_forms() {
        let a = BraidWord::parse(3, "-2 1 1 2 2 2 -1 2").unwrap();
        let b = BraidWord::parse(3, "s2^-1 s1 s1 s2 s2 s2 s1^-1 s2").unwrap();
        let c = BraidWord::parse(3, "s2^-1 s1^2 s2^3 s1^-1 s2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(BraidWord::parse(2, "").unwrap().is_empty());
        assert_eq!("-2 1 2".parse::<BraidWord>().unwrap().strands(), 3);
    }

    #[test]
    fn parse_reports_first_bad_token() {
        match BraidWord::parse(3, "1 2 x 1") {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 3);
                assert_eq!(token, "x");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            BraidWord::parse(3, "1 0"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            BraidWord::parse(3, "1 3"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            BraidWord::parse(3, "s1^0"),
            Err(Error::Parse { position: 1, .. })
        ));
    }

    #[test]
    fn rejects_out_of_range_generators() {
        assert_eq!(BraidWord::identity(1), Err(Error::TooFewStrands(1)));
        assert!(matches!(
            BraidWord::from_signed(3, &[3]),
            Err(Error::GeneratorOutOfRange { index: 3, strands: 3 })
        ));
    }

    #[test]
    fn power_repeats_or_inverts() {
        let a = w(3, &[1, -2]);
        assert_eq!(a.power(2).signed(), vec![1, -2, 1, -2]);
        assert_eq!(a.power(-1), a.inverse());
        assert!(a.power(0).is_empty());
    }

    #[test]
    fn free_reduction_cascades() {
        assert_eq!(w(3, &[1, 2, -2, -1, 2]).freely_reduced().signed(), vec![2]);
        assert_eq!(w(3, &[1, 1, -2]).freely_reduced().signed(), vec![1, 1, -2]);
        let a = w(4, &[3, -1, 2]);
        assert!(a.concat(&a.inverse()).unwrap().freely_reduced().is_empty());
    }
}
