use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{self, Letter, Rank, Word};

/// A nonempty strictly decreasing word, stored as the set of its letters.
///
/// Written top to bottom the letters decrease (`631`); indexing "from the
/// bottom" starts at the smallest letter. The derived order on the bit set
/// coincides with the lexicographic order of the written words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column(u32);

impl Column {
    pub fn from_letters(letters: &[Letter]) -> Result<Column> {
        if letters.is_empty() || !word::is_column(letters) {
            return Err(Error::NotAColumn(Word::from(letters.to_vec()).to_string()));
        }
        Ok(Column(letters.iter().fold(0, |m, l| m | bit(*l))))
    }

    pub fn singleton(letter: Letter) -> Column {
        Column(bit(letter))
    }

    /// Column whose letter set is `mask` (bit `i` stands for letter `i + 1`).
    pub fn from_mask(mask: u32) -> Option<Column> {
        (mask != 0).then_some(Column(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest letter that occurs, i.e. the top of the column.
    pub fn top(self) -> Letter {
        Letter::new(32 - self.0.leading_zeros() as usize)
    }

    pub fn bottom(self) -> Letter {
        Letter::new(self.0.trailing_zeros() as usize + 1)
    }

    /// The `i`-th letter counted from the bottom, starting at 1.
    pub fn from_bottom(self, i: usize) -> Option<Letter> {
        self.ascending().nth(i.checked_sub(1)?)
    }

    pub fn contains(self, letter: Letter) -> bool {
        self.0 & bit(letter) != 0
    }

    /// Letters from bottom to top (increasing).
    pub fn ascending(self) -> impl DoubleEndedIterator<Item = Letter> + Clone {
        (0..32).filter(move |i| self.0 >> i & 1 == 1).map(|i| Letter::new(i + 1))
    }

    /// Letters in written order, top to bottom (decreasing).
    pub fn letters(self) -> impl Iterator<Item = Letter> + Clone {
        self.ascending().rev()
    }

    pub fn to_word(self) -> Word {
        self.letters().collect()
    }

    /// `self ⪰ other`: `self` may stand immediately left of `other` in a
    /// tableau. Holds iff `self` is at least as long and, counting from the
    /// bottom, each letter of `self` is at most the matching letter of
    /// `other`.
    pub fn column_ge(self, other: Column) -> bool {
        self.len() >= other.len() && self.ascending().zip(other.ascending()).all(|(a, b)| a <= b)
    }

    pub(crate) fn with_letter(self, letter: Letter) -> Column {
        Column(self.0 | bit(letter))
    }

    pub(crate) fn replace(self, old: Letter, new: Letter) -> Column {
        Column(self.0 & !bit(old) | bit(new))
    }

    pub fn fits_rank(self, rank: Rank) -> bool {
        self.top().get() <= rank.get()
    }

    /// All `2^n - 1` columns over the alphabet of rank `n`, in lexicographic
    /// order of their written form.
    pub fn all(rank: Rank) -> Vec<Column> {
        (1..(1u64 << rank.get())).map(|m| Column(m as u32)).collect()
    }
}

fn bit(letter: Letter) -> u32 {
    1 << (letter.get() - 1)
}

/// Free-function form of [`Column::column_ge`].
pub fn column_ge(a: Column, b: Column) -> bool {
    a.column_ge(b)
}

/// Columns print like words, except that subscripts with letters above 9 use
/// `.` as separator so that they can sit inside comma separated lists.
impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<Letter> = self.letters().collect();
        word::write_letters(f, letters.iter(), '.')
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Column> {
        Column::from_letters(&word::parse_letters(s, '.')?)
    }
}

impl Serialize for Column {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Column {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Column, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
