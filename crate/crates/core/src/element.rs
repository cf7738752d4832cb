//! Elements of the lamplighter groups `L_n = Z_n wr Z`.
//!
//! An element is a finitely supported lamp configuration over the integers
//! together with a cursor position. Lamp states live in `[1, n-1]`; a lamp
//! in state 0 is off and is never stored, so two elements are equal exactly
//! when their structures are equal.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::word::{parse_word, Letter, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElementError {
    #[error("lamp modulus must be at least 2, got {0}")]
    Modulus(u32),
    #[error("malformed element encoding `{0}`")]
    Encoding(String),
}

/// Parameters of `L_n`: the number of lamp states `n` and `h = floor(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LnParams {
    n: u32,
    h: u32,
}

impl LnParams {
    pub fn new(n: u32) -> Result<Self, ElementError> {
        if n < 2 {
            return Err(ElementError::Modulus(n));
        }
        Ok(Self { n, h: n / 2 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    /// Reduces an arbitrary integer exponent of `a` to a lamp state in `[0, n-1]`.
    pub fn reduce(&self, exponent: i64) -> u32 {
        exponent.rem_euclid(self.n as i64) as u32
    }

    pub fn identity(&self) -> LnElement {
        LnElement {
            params: *self,
            lamps: LampConfig::default(),
            cursor: 0,
        }
    }

    /// Builds an element from `(position, exponent)` pairs; exponents are
    /// reduced mod `n` and later pairs at the same position accumulate.
    pub fn element(&self, lamps: impl IntoIterator<Item = (i64, i64)>, cursor: i64) -> LnElement {
        let mut config = LampConfig::default();
        for (pos, exp) in lamps {
            let state = self.reduce(config.state(pos) as i64 + exp);
            config.set(pos, state);
        }
        LnElement {
            params: *self,
            lamps: config,
            cursor,
        }
    }

    /// Parses a word over the alphabet `{a, t}`.
    pub fn parse(&self, text: &str) -> Result<Word<GenLetter>, WordError> {
        parse_word(text, &[("a", GenLetter::A), ("t", GenLetter::T)])
    }

    /// Left-to-right fold of [`LnElement::apply`] from the identity.
    pub fn eval(&self, word: &Word<GenLetter>) -> LnElement {
        let mut e = self.identity();
        for &g in word.letters() {
            e.apply_mut(g);
        }
        e
    }

    /// Decodes the canonical encoding produced by [`LnElement::encode`].
    pub fn decode(&self, text: &str) -> Result<LnElement, ElementError> {
        let bad = || ElementError::Encoding(text.to_string());
        let (lamps, cursor) = text.split_once('|').ok_or_else(bad)?;
        let cursor: i64 = cursor.parse().map_err(|_| bad())?;
        let mut config = LampConfig::default();
        if !lamps.is_empty() {
            for entry in lamps.split(',') {
                let (p, s) = entry.split_once(':').ok_or_else(bad)?;
                let p: i64 = p.parse().map_err(|_| bad())?;
                let s: u32 = s.parse().map_err(|_| bad())?;
                if s == 0 || s >= self.n || config.state(p) != 0 {
                    return Err(bad());
                }
                config.set(p, s);
            }
        }
        Ok(LnElement {
            params: *self,
            lamps: config,
            cursor,
        })
    }
}

/// Which of the two standard generators a letter is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `a`: changes the lamp under the cursor.
    Lamp,
    /// `t`: moves the cursor one step right.
    Shift,
}

/// One of `a`, `a^-1`, `t`, `t^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenLetter {
    pub base: Generator,
    pub inverse: bool,
}

impl GenLetter {
    pub const A: GenLetter = GenLetter {
        base: Generator::Lamp,
        inverse: false,
    };
    pub const A_INV: GenLetter = GenLetter {
        base: Generator::Lamp,
        inverse: true,
    };
    pub const T: GenLetter = GenLetter {
        base: Generator::Shift,
        inverse: false,
    };
    pub const T_INV: GenLetter = GenLetter {
        base: Generator::Shift,
        inverse: true,
    };

    /// All four letters, in the order `a, A, t, T`.
    pub const ALL: [GenLetter; 4] = [Self::A, Self::A_INV, Self::T, Self::T_INV];

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl Letter for GenLetter {
    fn inverse(self) -> Self {
        GenLetter {
            base: self.base,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for GenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.base, self.inverse) {
            (Generator::Lamp, false) => "a",
            (Generator::Lamp, true) => "A",
            (Generator::Shift, false) => "t",
            (Generator::Shift, true) => "T",
        };
        f.write_str(s)
    }
}

/// Finitely supported map from lamp position to a nonzero state.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LampConfig {
    entries: BTreeMap<i64, u32>,
}

impl LampConfig {
    /// State at `pos`, 0 when off.
    pub fn state(&self, pos: i64) -> u32 {
        self.entries.get(&pos).copied().unwrap_or(0)
    }

    /// Sets the state at `pos`; the caller passes a state already reduced mod `n`.
    fn set(&mut self, pos: i64, state: u32) {
        if state == 0 {
            self.entries.remove(&pos);
        } else {
            self.entries.insert(pos, state);
        }
    }

    /// Lit lamps in ascending position order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, u32)> + '_ {
        self.entries.iter().map(|(&p, &s)| (p, s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min_position(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_position(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }
}

/// An element of `L_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LnElement {
    params: LnParams,
    lamps: LampConfig,
    cursor: i64,
}

impl LnElement {
    pub fn params(&self) -> LnParams {
        self.params
    }

    pub fn lamps(&self) -> &LampConfig {
        &self.lamps
    }

    pub fn cursor(&self) -> i64 {
        self.cursor
    }

    pub fn is_identity(&self) -> bool {
        self.lamps.is_empty() && self.cursor == 0
    }

    /// Right multiplication by a single generator letter.
    pub fn apply(&self, g: GenLetter) -> LnElement {
        let mut e = self.clone();
        e.apply_mut(g);
        e
    }

    pub(crate) fn apply_mut(&mut self, g: GenLetter) {
        match g.base {
            Generator::Shift => self.cursor += g.sign(),
            Generator::Lamp => {
                let state = self
                    .params
                    .reduce(self.lamps.state(self.cursor) as i64 + g.sign());
                self.lamps.set(self.cursor, state);
            }
        }
    }

    /// Group product `self * other`.
    pub fn mul(&self, other: &LnElement) -> LnElement {
        debug_assert_eq!(self.params, other.params);
        let mut lamps = self.lamps.clone();
        for (p, s) in other.lamps.iter() {
            let pos = p + self.cursor;
            let state = self.params.reduce(lamps.state(pos) as i64 + s as i64);
            lamps.set(pos, state);
        }
        LnElement {
            params: self.params,
            lamps,
            cursor: self.cursor + other.cursor,
        }
    }

    /// Group inverse: cursor `-m`, and a lamp at `p` in state `s` moves to
    /// `p - m` with state `n - s`.
    pub fn invert(&self) -> LnElement {
        let n = self.params.n;
        let mut lamps = LampConfig::default();
        for (p, s) in self.lamps.iter() {
            lamps.set(p - self.cursor, n - s);
        }
        LnElement {
            params: self.params,
            lamps,
            cursor: -self.cursor,
        }
    }

    /// Image under the automorphism negating positions (`t <-> t^-1`).
    pub fn mirror(&self) -> LnElement {
        let mut lamps = LampConfig::default();
        for (p, s) in self.lamps.iter() {
            lamps.set(-p, s);
        }
        LnElement {
            params: self.params,
            lamps,
            cursor: -self.cursor,
        }
    }

    /// Canonical compact encoding `p:s,p:s|m` (positions ascending).
    pub fn encode(&self) -> String {
        let lamps = self
            .lamps
            .iter()
            .map(|(p, s)| format!("{p}:{s}"))
            .collect::<Vec<_>>()
            .join(",");
        format!("{lamps}|{}", self.cursor)
    }
}

impl fmt::Display for LnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("lamps={")?;
        for (i, (p, s)) in self.lamps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}:{s}")?;
        }
        write!(f, "}} cursor={}", self.cursor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: u32) -> LnParams {
        LnParams::new(n).unwrap()
    }

    #[test]
    fn params() {
        assert_eq!(l(2).h(), 1);
        assert_eq!(l(5).h(), 2);
        assert_eq!(l(6).h(), 3);
        assert_eq!(LnParams::new(1), Err(ElementError::Modulus(1)));
    }

    #[test]
    fn single_generators_from_identity() {
        let id = l(2).identity();
        let e = id.apply(GenLetter::T);
        assert!(e.lamps().is_empty());
        assert_eq!(e.cursor(), 1);
        let e = id.apply(GenLetter::A);
        assert_eq!(e.lamps().iter().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(e.cursor(), 0);
    }

    #[test]
    fn lamp_wraps_mod_n() {
        let id = l(3).identity();
        let e = id.apply(GenLetter::A).apply(GenLetter::A);
        assert_eq!(e.lamps().iter().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(e.apply(GenLetter::A).is_identity());
    }

    #[test]
    fn eval_examples() {
        let p = l(2);
        let e = p.eval(&p.parse("a t a T").unwrap());
        assert_eq!(e.to_string(), "lamps={0:1,1:1} cursor=0");
        let e = p.eval(&p.parse("t^5").unwrap());
        assert_eq!(e.to_string(), "lamps={} cursor=5");
        // d_1 = (at) a t^-1 (t^-1 a) t
        let e = p.eval(&p.parse("a t a T T a t").unwrap());
        assert_eq!(e.to_string(), "lamps={-1:1,0:1,1:1} cursor=0");
    }

    #[test]
    fn both_spellings_agree() {
        let p = l(3);
        let w = p.parse("T^-2 A").unwrap();
        assert_eq!(w.letters(), &[GenLetter::T, GenLetter::T, GenLetter::A_INV]);
        assert_eq!(p.eval(&w), p.eval(&p.parse("t t A").unwrap()));
    }

    #[test]
    fn invert_examples() {
        assert!(l(2).identity().invert().is_identity());
        let e = l(2).element([(1, 1)], 0);
        assert_eq!(e.invert(), e);
        let p = l(3);
        let e = p.element([(0, 1)], 2);
        let inv = e.invert();
        assert_eq!(inv.to_string(), "lamps={-2:2} cursor=-2");
        // oracle: evaluate the reversed inverted spelling
        let w = p.parse("a t t").unwrap();
        assert_eq!(p.eval(&w), e);
        assert_eq!(p.eval(&w.inverse()), inv);
    }

    #[test]
    fn mirror_examples() {
        assert!(l(2).identity().mirror().is_identity());
        let e = l(2).element([(2, 1)], 1);
        assert_eq!(e.mirror().to_string(), "lamps={-2:1} cursor=-1");
    }

    #[test]
    fn multiplication_matches_concatenation() {
        let p = l(4);
        let u = p.parse("a t^2 A^3 T").unwrap();
        let v = p.parse("T a^2 t^3 a").unwrap();
        assert_eq!(p.eval(&u).mul(&p.eval(&v)), p.eval(&u.concat(&v)));
        assert!(p.eval(&u).mul(&p.eval(&u).invert()).is_identity());
    }

    #[test]
    fn encoding_round_trip() {
        let p = l(5);
        let e = p.element([(-3, 4), (0, 1), (7, 2)], -2);
        assert_eq!(e.encode(), "-3:4,0:1,7:2|-2");
        assert_eq!(p.decode(&e.encode()).unwrap(), e);
        assert_eq!(p.decode("|0").unwrap(), p.identity());
        assert!(p.decode("1:0|0").is_err());
        assert!(p.decode("1:5|0").is_err());
        assert!(p.decode("1:1").is_err());
    }
}
