//! Words over a generating set and their text grammar.
//!
//! A word is written as whitespace-separated tokens. Each token is a
//! generator name, optionally followed by `^k` for a nonzero integer `k`.
//! Lowercase names denote generators and their uppercase spelling denotes
//! the inverse, so `T^-2` expands to `t t`.

use std::fmt;

use thiserror::Error;

/// A generator letter that knows its own inverse.
pub trait Letter: Copy + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync {
    fn inverse(self) -> Self;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
}

/// A finite sequence of letters. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L> {
    letters: Vec<L>,
}

impl<L> Default for Word<L> {
    fn default() -> Self {
        Self {
            letters: Vec::new(),
        }
    }
}

impl<L: Letter> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: L) {
        self.letters.push(letter);
    }

    /// The inverse word: letters reversed and each inverted.
    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// Renders the word one letter per token, using `name` for each letter.
    pub fn render_with(&self, name: impl Fn(L) -> String) -> String {
        self.letters
            .iter()
            .map(|&l| name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Self {
            letters: iter.into_iter().collect(),
        }
    }
}

impl<L> IntoIterator for Word<L> {
    type Item = L;
    type IntoIter = std::vec::IntoIter<L>;

    fn into_iter(self) -> Self::IntoIter {
        self.letters.into_iter()
    }
}

impl<L: Letter + fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `text` against an alphabet of lowercase generator names, each
/// paired with the letter it stands for.
pub fn parse_word<L: Letter>(text: &str, alphabet: &[(&str, L)]) -> Result<Word<L>, WordError> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let k: i64 = exp
                    .parse()
                    .map_err(|_| WordError::MalformedExponent(token.to_string()))?;
                if k == 0 {
                    return Err(WordError::ZeroExponent(token.to_string()));
                }
                (name, k)
            }
            None => (token, 1),
        };
        let letter = lookup(name, alphabet)?;
        let letter = if exponent < 0 {
            letter.inverse()
        } else {
            letter
        };
        letters.extend(std::iter::repeat_n(
            letter,
            exponent.unsigned_abs() as usize,
        ));
    }
    Ok(Word { letters })
}

fn lookup<L: Letter>(name: &str, alphabet: &[(&str, L)]) -> Result<L, WordError> {
    for &(gen, letter) in alphabet {
        if name == gen {
            return Ok(letter);
        }
        if name == gen.to_uppercase() && name != gen {
            return Ok(letter.inverse());
        }
    }
    Err(WordError::UnknownGenerator(name.to_string()))
}

/// Lowercase ASCII identifier usable as a generator name.
pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
    struct Sym(i8);

    impl Letter for Sym {
        fn inverse(self) -> Self {
            Sym(-self.0)
        }
    }

    const ALPHABET: &[(&str, Sym)] = &[("x", Sym(1)), ("y", Sym(2))];

    #[test]
    fn empty_text_is_identity() {
        assert!(parse_word("", ALPHABET).unwrap().is_empty());
        assert!(parse_word("   \t ", ALPHABET).unwrap().is_empty());
    }

    #[test]
    fn exponents_expand() {
        let w = parse_word("x y^3", ALPHABET).unwrap();
        assert_eq!(w.letters(), &[Sym(1), Sym(2), Sym(2), Sym(2)]);
        let w = parse_word("Y^-2 X", ALPHABET).unwrap();
        assert_eq!(w.letters(), &[Sym(2), Sym(2), Sym(-1)]);
        let w = parse_word("x^-1", ALPHABET).unwrap();
        assert_eq!(w.letters(), &[Sym(-1)]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_word("z", ALPHABET),
            Err(WordError::UnknownGenerator("z".into()))
        );
        assert_eq!(
            parse_word("x^", ALPHABET),
            Err(WordError::MalformedExponent("x^".into()))
        );
        assert_eq!(
            parse_word("x^1.5", ALPHABET),
            Err(WordError::MalformedExponent("x^1.5".into()))
        );
        assert_eq!(
            parse_word("x^0", ALPHABET),
            Err(WordError::ZeroExponent("x^0".into()))
        );
    }

    #[test]
    fn inverse_word() {
        let w = parse_word("x y Y^2", ALPHABET).unwrap();
        assert_eq!(w.inverse().letters(), &[Sym(2), Sym(2), Sym(-2), Sym(-1)]);
    }

    #[test]
    fn generator_names() {
        assert!(is_valid_generator_name("a"));
        assert!(is_valid_generator_name("b2"));
        assert!(!is_valid_generator_name("B"));
        assert!(!is_valid_generator_name("2b"));
        assert!(!is_valid_generator_name(""));
    }
}
