use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A named input symbol such as `a` or `g_2_5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(String);

impl Letter {
    /// Letter names are non-empty and contain no whitespace or the separator
    /// characters of the text format (`:`, `,`, `#`).
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let bad = |c: char| c.is_whitespace() || matches!(c, ':' | ',' | '#' | '[' | ']');
        if name.is_empty() || name.chars().any(bad) || name == "-" {
            return Err(Error::InvalidLetter(name));
        }
        Ok(Letter(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite set of letters kept in ascending name order.
///
/// The order is the one used for transition-table columns and for the
/// canonical BFS numbering of minimal DFAs, so two alphabets with the same
/// letters always agree on column positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        let mut letters: Vec<Letter> = letters.into_iter().collect();
        letters.sort();
        if let Some(w) = letters.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLetter(w[0].0.clone()));
        }
        Ok(Alphabet { letters })
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let letters = names
            .iter()
            .map(|s| Letter::new(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }

    pub fn empty() -> Self {
        Alphabet::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = &Letter> + '_ {
        self.letters.iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.letters.iter().map(|l| l.0.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.letters.binary_search_by(|l| l.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        letters.sort();
        letters.dedup();
        Alphabet { letters }
    }

    pub fn intersection(&self, other: &Alphabet) -> Alphabet {
        let letters = self
            .letters
            .iter()
            .filter(|l| other.contains(l.as_str()))
            .cloned()
            .collect();
        Alphabet { letters }
    }

    pub fn is_subset(&self, other: &Alphabet) -> bool {
        self.letters.iter().all(|l| other.contains(l.as_str()))
    }

    /// Converts a word of letter names into column indices.
    pub fn encode<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<usize>> {
        word.iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownLetter(s.as_ref().to_string()))
            })
            .collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let a = Alphabet::from_names(&["d", "a", "c"]).unwrap();
        assert_eq!(a.names(), vec!["a", "c", "d"]);
        assert_eq!(a.index_of("c"), Some(1));
        assert!(Alphabet::from_names(&["a", "a"]).is_err());
    }

    #[test]
    fn rejects_bad_names() {
        for bad in ["", "a b", "x:y", "-", "#"] {
            assert!(Letter::new(bad).is_err(), "{bad:?}");
        }
        assert!(Letter::new("g_2_5").is_ok());
    }

    #[test]
    fn set_operations() {
        let x = Alphabet::from_names(&["a", "b", "c"]).unwrap();
        let y = Alphabet::from_names(&["b", "a", "d"]).unwrap();
        assert_eq!(x.union(&y).names(), vec!["a", "b", "c", "d"]);
        assert_eq!(x.intersection(&y).names(), vec!["a", "b"]);
        assert!(x.intersection(&y).is_subset(&x));
    }
}
