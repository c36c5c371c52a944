//! Letters and words over the generating set `{a, b, c, d, s}`.
//!
//! Words are plain letter sequences; nothing here reduces implicitly. The
//! text form uses lowercase for a positive letter and uppercase for its
//! inverse, so `"aB"` is `a b⁻¹`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    B,
    C,
    D,
    S,
}

impl Base {
    pub const ALL: [Base; 5] = [Base::A, Base::B, Base::C, Base::D, Base::S];

    pub fn symbol(self) -> char {
        match self {
            Base::A => 'a',
            Base::B => 'b',
            Base::C => 'c',
            Base::D => 'd',
            Base::S => 's',
        }
    }

    /// `a` or `b`: the letters of the first free factor.
    pub fn is_ab(self) -> bool {
        matches!(self, Base::A | Base::B)
    }

    /// `c` or `d`: the letters of the second free factor.
    pub fn is_cd(self) -> bool {
        matches!(self, Base::C | Base::D)
    }

    /// Interchanges `a ↔ c` and `b ↔ d`; fixes `s`.
    pub fn swap_factors(self) -> Base {
        match self {
            Base::A => Base::C,
            Base::B => Base::D,
            Base::C => Base::A,
            Base::D => Base::B,
            Base::S => Base::S,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub base: Base,
    pub sign: Sign,
}

impl Generator {
    pub const fn new(base: Base, sign: Sign) -> Self {
        Generator { base, sign }
    }

    pub const fn pos(base: Base) -> Self {
        Generator::new(base, Sign::Pos)
    }

    pub const fn neg(base: Base) -> Self {
        Generator::new(base, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Generator::new(self.base, self.sign.flip())
    }

    pub fn is_inverse_of(self, other: Generator) -> bool {
        self.base == other.base && self.sign != other.sign
    }

    /// The exponent of the letter, `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        self.sign.value()
    }

    pub fn is_s(self) -> bool {
        self.base == Base::S
    }

    pub fn swap_factors(self) -> Self {
        Generator::new(self.base.swap_factors(), self.sign)
    }

    pub fn to_char(self) -> char {
        let c = self.base.symbol();
        match self.sign {
            Sign::Pos => c,
            Sign::Neg => c.to_ascii_uppercase(),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        let base = match c.to_ascii_lowercase() {
            'a' => Base::A,
            'b' => Base::B,
            'c' => Base::C,
            'd' => Base::D,
            's' => Base::S,
            _ => return None,
        };
        let sign = if c.is_ascii_lowercase() { Sign::Pos } else { Sign::Neg };
        Some(Generator::new(base, sign))
    }

    /// All ten signed generators in the order `a A b B c C d D s S`.
    pub fn all() -> impl Iterator<Item = Generator> {
        Base::ALL
            .into_iter()
            .flat_map(|b| [Generator::pos(b), Generator::neg(b)])
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid character {ch:?} at index {index}")]
pub struct ParseWordError {
    /// 0-based index of the first offending character.
    pub index: usize,
    pub ch: char,
}

/// A finite word. Equality is letter-by-letter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn parse(text: &str) -> Result<Self, ParseWordError> {
        text.chars()
            .enumerate()
            .map(|(index, ch)| Generator::from_char(ch).ok_or(ParseWordError { index, ch }))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(invert_letters(&self.0))
    }

    pub fn free_reduce(&self) -> Word {
        Word(free_reduce_letters(&self.0))
    }

    pub fn exponent_sum(&self) -> i64 {
        exponent_sum(&self.0)
    }

    /// Number of letters whose base is in `bases`, either sign.
    pub fn letter_count(&self, bases: &[Base]) -> usize {
        self.0.iter().filter(|g| bases.contains(&g.base)).count()
    }

    pub fn s_count(&self) -> usize {
        self.0.iter().filter(|g| g.is_s()).count()
    }

    pub fn is_s_free(&self) -> bool {
        self.0.iter().all(|g| !g.is_s())
    }

    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.0)
    }

    /// Subword by 0-based half-open range.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// The word with every letter whose base is in `bases` removed.
    pub fn delete_bases(&self, bases: &[Base]) -> Word {
        Word(self.0.iter().copied().filter(|g| !bases.contains(&g.base)).collect())
    }

    pub fn power(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl Deref for Word {
    type Target = [Generator];

    fn deref(&self) -> &[Generator] {
        &self.0
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.to_char())?;
        }
        Ok(())
    }
}

/// A nonempty run of letter positions, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        Interval { start, end }
    }

    /// From a nonempty 0-based half-open range.
    pub fn from_range(r: std::ops::Range<usize>) -> Self {
        Interval::new(r.start + 1, r.end)
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start - 1..self.end
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

pub fn parse_word(text: &str) -> Result<Word, ParseWordError> {
    Word::parse(text)
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

pub fn invert_letters(letters: &[Generator]) -> Vec<Generator> {
    letters.iter().rev().map(|g| g.inverse()).collect()
}

pub fn free_reduce_letters(letters: &[Generator]) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(letters.len());
    for &g in letters {
        match out.last() {
            Some(&top) if top.is_inverse_of(g) => {
                out.pop();
            }
            _ => out.push(g),
        }
    }
    out
}

pub fn exponent_sum(letters: &[Generator]) -> i64 {
    letters.iter().map(|g| g.exponent()).sum()
}

/// Even length, no `s`, signs alternate `+ - + - …` starting positive.
pub fn is_alternating(letters: &[Generator]) -> bool {
    letters.len().is_multiple_of(2)
        && letters.iter().enumerate().all(|(i, g)| {
            !g.is_s() && g.sign == if i % 2 == 0 { Sign::Pos } else { Sign::Neg }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w(""), Word::empty());
        assert_eq!(
            w("aB").letters(),
            &[Generator::pos(Base::A), Generator::neg(Base::B)]
        );
        assert_eq!(Word::parse("sQ"), Err(ParseWordError { index: 1, ch: 'Q' }));
        assert_eq!(Word::parse("ab x").unwrap_err().index, 2);
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_word(&Word::empty()), "");
        let word = Word::from_letters(vec![Generator::pos(Base::A), Generator::neg(Base::C)]);
        assert_eq!(format_word(&word), "aC");
        for t in ["", "abcdsABCDS", "sbDS", "aaaaA"] {
            assert_eq!(format_word(&w(t)), t);
        }
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w("aA").free_reduce(), Word::empty());
        assert_eq!(w("abBA").free_reduce(), Word::empty());
        assert_eq!(w("abBc").free_reduce(), w("ac"));
        assert_eq!(w("sSa").free_reduce(), w("a"));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(Word::empty().exponent_sum(), 0);
        assert_eq!(w("aab").exponent_sum(), 3);
        assert_eq!(w("abCD").exponent_sum(), 0);
    }

    #[test]
    fn letter_counts() {
        assert_eq!(w("sbDS").letter_count(&[Base::S]), 2);
        assert_eq!(w("abAB").letter_count(&[Base::A, Base::B]), 4);
        assert_eq!(Word::empty().letter_count(&[Base::A]), 0);
    }

    #[test]
    fn inversion() {
        assert_eq!(w("aB").inverse(), w("bA"));
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(w("sc").inverse(), w("CS"));
    }

    #[test]
    fn alternating() {
        assert!(Word::empty().is_alternating());
        assert!(w("bCcAaD").is_alternating());
        assert!(!w("ab").is_alternating());
        assert!(!w("sS").is_alternating());
        assert!(!w("aBc").is_alternating());
    }
}
