use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::column::Column;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A word over the column alphabet `C = { c_α : α a column }`.
///
/// Displayed as `c_21 c_1`. [`FromStr`] accepts that form as well as the
/// compact `c:21,1` form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnWord(Vec<Column>);

impl ColumnWord {
    pub fn new(symbols: Vec<Column>) -> ColumnWord {
        ColumnWord(symbols)
    }

    pub fn symbols(&self) -> &[Column] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Column> {
        self.0
    }

    /// `c:21,1`
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        format!("c:{}", parts.join(","))
    }
}

impl Deref for ColumnWord {
    type Target = [Column];

    fn deref(&self) -> &[Column] {
        &self.0
    }
}

impl From<Vec<Column>> for ColumnWord {
    fn from(v: Vec<Column>) -> ColumnWord {
        ColumnWord(v)
    }
}

impl FromIterator<Column> for ColumnWord {
    fn from_iter<I: IntoIterator<Item = Column>>(iter: I) -> ColumnWord {
        ColumnWord(iter.into_iter().collect())
    }
}

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "c_{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ColumnWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColumnWord> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("c:") {
            if rest.trim().is_empty() {
                return Ok(ColumnWord::default());
            }
            return rest.split(',').map(str::parse).collect();
        }
        s.split_whitespace()
            .map(|tok| {
                tok.strip_prefix("c_").ok_or_else(|| Error::Parse(format!("`{tok}` is not a column symbol")))?.parse()
            })
            .collect()
    }
}

/// Maps each letter `x` to the symbol `c_x`.
pub fn encode_word(word: &[Letter]) -> ColumnWord {
    word.iter().map(|&l| Column::singleton(l)).collect()
}

/// Concatenates the subscripts.
pub fn decode_word(word: &[Column]) -> Word {
    word.iter().flat_map(|c| c.letters()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode() {
        let w: Word = "121".parse().unwrap();
        assert_eq!(encode_word(&w).to_string(), "c_1 c_2 c_1");
        let cw: ColumnWord = "c_21 c_1".parse().unwrap();
        assert_eq!(decode_word(&cw).to_string(), "211");
        assert_eq!(decode_word(&encode_word(&w)), w);
    }

    #[test]
    fn parse_forms() {
        let a: ColumnWord = "c:21,1".parse().unwrap();
        let b: ColumnWord = "c_21 c_1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_compact(), "c:21,1");
        assert_eq!("c:".parse::<ColumnWord>().unwrap().len(), 0);
        assert_eq!("".parse::<ColumnWord>().unwrap().len(), 0);
        assert!("c:12".parse::<ColumnWord>().is_err());
        assert!("d_1".parse::<ColumnWord>().is_err());
        let big: ColumnWord = "c:10.3,2".parse().unwrap();
        assert_eq!(big.to_string(), "c_10.3 c_2");
    }
}
