//! Letters, words and the rank of the ambient alphabet.
//!
//! Text form: a word whose letters are all at most 9 is written as a bare
//! digit string (`6345511235`); otherwise letters are comma separated
//! (`10,3,1`). Parsing accepts either form.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank. Columns are stored as bit sets in a `u32`.
pub const MAX_RANK: usize = 32;

/// Size `n` of the ordered alphabet `{1 < 2 < ... < n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u8);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if (1..=MAX_RANK).contains(&n) {
            Ok(Rank(n as u8))
        } else {
            Err(Error::InvalidRank { rank: n, max: MAX_RANK })
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// All letters of the alphabet in increasing order.
    pub fn letters(self) -> impl DoubleEndedIterator<Item = Letter> + Clone {
        (1..=self.0).map(Letter)
    }

    pub fn letter(self, value: usize) -> Result<Letter> {
        if value >= 1 && value <= self.get() {
            Ok(Letter(value as u8))
        } else {
            Err(Error::LetterOutOfRange { letter: value, rank: self.get() })
        }
    }

    pub fn check_word(self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|l| l.get() > self.get()) {
            Some(l) => Err(Error::LetterOutOfRange { letter: l.get(), rank: self.get() }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A symbol of the ordered alphabet. Always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    /// Builds a letter without a rank check. Panics on 0 or values above
    /// [`MAX_RANK`].
    pub fn new(value: usize) -> Letter {
        assert!((1..=MAX_RANK).contains(&value), "letter {value} out of range");
        Letter(value as u8)
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite, possibly empty, sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Convenience for tests and fixtures: panics on invalid letters.
    pub fn from_values(values: &[usize]) -> Word {
        Word(values.iter().map(|&v| Letter::new(v)).collect())
    }

    /// Parses the text form and checks every letter against `rank`.
    pub fn parse(text: &str, rank: Rank) -> Result<Word> {
        let word: Word = text.parse()?;
        rank.check_word(&word)?;
        Ok(word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(other);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// Writes letters in the compact digit form when possible, otherwise joined
/// by `sep`.
pub(crate) fn write_letters<'a>(
    f: &mut fmt::Formatter<'_>,
    letters: impl Iterator<Item = &'a Letter> + Clone,
    sep: char,
) -> fmt::Result {
    let compact = letters.clone().all(|l| l.get() <= 9);
    for (i, l) in letters.enumerate() {
        if i > 0 && !compact {
            write!(f, "{sep}")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Inverse of [`write_letters`]: splits on `sep` if present, otherwise reads
/// one digit per letter.
pub(crate) fn parse_letters(text: &str, sep: char) -> Result<Vec<Letter>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let parse_one = |s: &str| -> Result<Letter> {
        let v: usize = s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not a letter")))?;
        if v == 0 || v > MAX_RANK {
            return Err(Error::LetterOutOfRange { letter: v, rank: MAX_RANK });
        }
        Ok(Letter(v as u8))
    };
    if text.contains(sep) {
        text.split(sep).map(parse_one).collect()
    } else {
        text.chars()
            .map(|c| {
                let mut buf = [0u8; 4];
                parse_one(c.encode_utf8(&mut buf))
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0.iter(), ',')
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_letters(s, ',').map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True iff the word is non-decreasing. The empty word is a row.
pub fn is_row(word: &[Letter]) -> bool {
    word.windows(2).all(|p| p[0] <= p[1])
}

/// True iff the word is strictly decreasing.
pub fn is_column(word: &[Letter]) -> bool {
    word.windows(2).all(|p| p[0] > p[1])
}

/// Row domination `a ▷ b`: `a` is no longer than `b` and strictly larger
/// letter by letter. Both arguments are expected to be rows.
pub fn dominates(a: &[Letter], b: &[Letter]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x > y)
}
