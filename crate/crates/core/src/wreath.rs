//! Wreath products `G wr Z` for a finite group `G`.
//!
//! Elements use the same cursor picture as the lamplighter groups: each
//! integer position carries an element of `G` (a "slot", identity slots are
//! not stored) and a cursor marks the copy of `G` the generators of `G` act
//! on. The generating set is `X ∪ {t}` where `X` are the generators of `G`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::element::LnElement;
use crate::finite_group::{FiniteGroupTable, GroupLetter};
use crate::metric::compositions;
use crate::tour::{self, Extents, Side};
use crate::word::{parse_word, Letter, Word, WordError};

/// Enumerating split geodesics is limited to this many nontrivial slots.
pub const MAX_SPLIT_SLOTS: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("element {0} is not a dead end in the base group")]
    NotDeadEnd(usize),
    #[error("family index must be at least 1")]
    FamilyIndex,
    #[error("element index {0} out of range")]
    ElementIndex(usize),
    #[error("split enumeration supports at most {MAX_SPLIT_SLOTS} slots, element has {0}")]
    TooManySlots(usize),
    #[error("group of order {group} cannot represent L_{n}")]
    OrderMismatch { group: usize, n: u32 },
    #[error("malformed element encoding `{0}`")]
    Encoding(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A generator of `G` (or its inverse) or `t^{+-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WreathLetter {
    Group(GroupLetter),
    Shift { inverse: bool },
}

impl WreathLetter {
    pub const T: WreathLetter = WreathLetter::Shift { inverse: false };
    pub const T_INV: WreathLetter = WreathLetter::Shift { inverse: true };
}

impl Letter for WreathLetter {
    fn inverse(self) -> Self {
        match self {
            WreathLetter::Group(g) => WreathLetter::Group(g.inverse()),
            WreathLetter::Shift { inverse } => WreathLetter::Shift { inverse: !inverse },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    slots: BTreeMap<i64, usize>,
    cursor: i64,
}

impl WreathElement {
    pub fn slots(&self) -> impl DoubleEndedIterator<Item = (i64, usize)> + '_ {
        self.slots.iter().map(|(&p, &x)| (p, x))
    }

    pub fn slot(&self, pos: i64) -> usize {
        self.slots.get(&pos).copied().unwrap_or(0)
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn cursor(&self) -> i64 {
        self.cursor
    }

    pub fn is_identity(&self) -> bool {
        self.slots.is_empty() && self.cursor == 0
    }

    pub fn extents(&self) -> Extents {
        Extents::from_bounds(
            self.slots.keys().next().copied(),
            self.slots.keys().next_back().copied(),
        )
    }

    fn set(&mut self, pos: i64, x: usize) {
        if x == 0 {
            self.slots.remove(&pos);
        } else {
            self.slots.insert(pos, x);
        }
    }

    /// Canonical compact encoding `p:x,p:x|m` (positions ascending).
    pub fn encode(&self) -> String {
        let slots = self.slots().map(|(p, x)| format!("{p}:{x}")).join(",");
        format!("{slots}|{}", self.cursor)
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots = self.slots().map(|(p, x)| format!("{p}:{x}")).join(",");
        write!(f, "slots={{{slots}}} cursor={}", self.cursor)
    }
}

/// `G wr Z` for a fixed finite group `G`.
#[derive(Debug, Clone)]
pub struct WreathProduct {
    group: Arc<FiniteGroupTable>,
}

impl WreathProduct {
    pub fn new(group: impl Into<Arc<FiniteGroupTable>>) -> Self {
        Self {
            group: group.into(),
        }
    }

    pub fn group(&self) -> &FiniteGroupTable {
        &self.group
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement::default()
    }

    /// Builds an element from `(position, group element)` pairs; identity
    /// entries are dropped.
    pub fn element(
        &self,
        slots: impl IntoIterator<Item = (i64, usize)>,
        cursor: i64,
    ) -> Result<WreathElement, WreathError> {
        let mut e = WreathElement {
            slots: BTreeMap::new(),
            cursor,
        };
        for (p, x) in slots {
            if x >= self.group.order() {
                return Err(WreathError::ElementIndex(x));
            }
            e.set(p, x);
        }
        Ok(e)
    }

    /// Generators of `G`, then `t`.
    pub fn generators(&self) -> Vec<WreathLetter> {
        (0..self.group.generators().len())
            .map(|generator| {
                WreathLetter::Group(GroupLetter {
                    generator,
                    inverse: false,
                })
            })
            .chain([WreathLetter::T])
            .collect()
    }

    /// Generators and inverses: `g1, g1^-1, ..., t, t^-1`.
    pub fn letters(&self) -> Vec<WreathLetter> {
        self.generators()
            .into_iter()
            .flat_map(|g| [g, g.inverse()])
            .collect()
    }

    pub fn letter_name(&self, g: WreathLetter) -> String {
        match g {
            WreathLetter::Group(g) => self.group.letter_name(g),
            WreathLetter::Shift { inverse: false } => "t".to_string(),
            WreathLetter::Shift { inverse: true } => "T".to_string(),
        }
    }

    /// Right multiplication by one letter: `t^{+-1}` moves the cursor, a
    /// group letter right-multiplies the slot under the cursor.
    pub fn apply(&self, e: &WreathElement, g: WreathLetter) -> WreathElement {
        let mut out = e.clone();
        match g {
            WreathLetter::Shift { inverse } => out.cursor += if inverse { -1 } else { 1 },
            WreathLetter::Group(g) => {
                let x = self
                    .group
                    .product(e.slot(e.cursor), self.group.letter_element(g));
                out.set(e.cursor, x);
            }
        }
        out
    }

    pub fn eval(&self, word: &Word<WreathLetter>) -> WreathElement {
        word.letters()
            .iter()
            .fold(self.identity(), |e, &g| self.apply(&e, g))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word<WreathLetter>, WreathError> {
        let mut alphabet: Vec<(&str, WreathLetter)> = self
            .group
            .alphabet()
            .into_iter()
            .map(|(name, g)| (name, WreathLetter::Group(g)))
            .collect();
        alphabet.push(("t", WreathLetter::T));
        Ok(parse_word(text, &alphabet)?)
    }

    pub fn render_word(&self, word: &Word<WreathLetter>) -> String {
        word.render_with(|g| self.letter_name(g))
    }

    /// Word length with respect to `X ∪ {t}`: the sum of `|slot|_G` plus
    /// the cheaper cursor tour.
    pub fn length(&self, e: &WreathElement) -> u64 {
        let slots: u64 = e.slots().map(|(_, x)| self.group.length(x) as u64).sum();
        slots + e.extents().min_tour_cost(e.cursor)
    }

    /// The canonical geodesic: cheaper side (ties right-first), each slot
    /// written entirely on its first visit with its breadth-first geodesic.
    pub fn emit_geodesic(&self, e: &WreathElement) -> Word<WreathLetter> {
        let ext = e.extents();
        let path = ext.path(ext.canonical_side(e.cursor), e.cursor);
        tour::spell(&path, WreathLetter::T, |pos, k| {
            let x = if k == 0 { e.slot(pos) } else { 0 };
            self.group
                .group_geodesic(x)
                .into_iter()
                .map(WreathLetter::Group)
                .collect::<Vec<_>>()
        })
    }

    /// Every geodesic obtained by writing each slot with any shortest word
    /// of `G`, split into consecutive pieces across the tour's visits, over
    /// every minimal side. Limited to [`MAX_SPLIT_SLOTS`] slots.
    pub fn enumerate_split_geodesics(
        &self,
        e: &WreathElement,
    ) -> Result<BTreeSet<Word<WreathLetter>>, WreathError> {
        if e.slot_count() > MAX_SPLIT_SLOTS {
            return Err(WreathError::TooManySlots(e.slot_count()));
        }
        let ext = e.extents();
        let mut out = BTreeSet::new();
        for side in ext.minimal_sides(e.cursor) {
            let path = ext.path(side, e.cursor);
            let counts = tour::visit_counts(&path);
            let per_slot: Vec<Vec<(i64, Vec<Vec<GroupLetter>>)>> = e
                .slots()
                .map(|(p, x)| {
                    let visits = counts[&p];
                    self.group
                        .all_geodesics(x)
                        .into_iter()
                        .flat_map(|w| {
                            compositions(w.len() as u64, visits)
                                .into_iter()
                                .map(|parts| (p, split_word(w.letters(), &parts)))
                                .collect::<Vec<_>>()
                        })
                        .collect()
                })
                .collect();
            let combos: Vec<Vec<(i64, Vec<Vec<GroupLetter>>)>> = if per_slot.is_empty() {
                vec![Vec::new()]
            } else {
                per_slot.into_iter().multi_cartesian_product().collect()
            };
            for choice in combos {
                let pieces: HashMap<i64, &Vec<Vec<GroupLetter>>> =
                    choice.iter().map(|(p, pieces)| (*p, pieces)).collect();
                let word = tour::spell(&path, WreathLetter::T, |pos, k| {
                    pieces
                        .get(&pos)
                        .map(|ps| {
                            ps[k]
                                .iter()
                                .map(|&g| WreathLetter::Group(g))
                                .collect::<Vec<_>>()
                        })
                        .unwrap_or_default()
                });
                out.insert(word);
            }
        }
        Ok(out)
    }

    /// Places the dead end `a` of `G` in every slot of `[-m, m]`, cursor at 0.
    pub fn lift_dead_end_family(&self, a: usize, m: i64) -> Result<WreathElement, WreathError> {
        if a >= self.group.order() {
            return Err(WreathError::ElementIndex(a));
        }
        if !self.group.is_dead_end(a) {
            return Err(WreathError::NotDeadEnd(a));
        }
        if m < 1 {
            return Err(WreathError::FamilyIndex);
        }
        self.element((-m..=m).map(|p| (p, a)), 0)
    }

    /// The element with the same picture as `e`, reading lamp state `s` as
    /// group element `s`; this is the isomorphism `L_n -> Z_n wr Z` when the
    /// group is `cyclic_group(n)`.
    pub fn from_lamplighter(&self, e: &LnElement) -> Result<WreathElement, WreathError> {
        let n = e.params().n();
        if self.group.order() != n as usize {
            return Err(WreathError::OrderMismatch {
                group: self.group.order(),
                n,
            });
        }
        self.element(e.lamps().iter().map(|(p, s)| (p, s as usize)), e.cursor())
    }

    pub fn decode(&self, text: &str) -> Result<WreathElement, WreathError> {
        let bad = || WreathError::Encoding(text.to_string());
        let (slots, cursor) = text.split_once('|').ok_or_else(bad)?;
        let cursor: i64 = cursor.parse().map_err(|_| bad())?;
        let mut e = WreathElement {
            slots: BTreeMap::new(),
            cursor,
        };
        if !slots.is_empty() {
            for entry in slots.split(',') {
                let (p, x) = entry.split_once(':').ok_or_else(bad)?;
                let p: i64 = p.parse().map_err(|_| bad())?;
                let x: usize = x.parse().map_err(|_| bad())?;
                if x == 0 || x >= self.group.order() || e.slot(p) != 0 {
                    return Err(bad());
                }
                e.set(p, x);
            }
        }
        Ok(e)
    }

    /// Sides achieving the minimal tour for `e`.
    pub fn minimal_sides(&self, e: &WreathElement) -> Vec<Side> {
        e.extents().minimal_sides(e.cursor)
    }
}

fn split_word(letters: &[GroupLetter], parts: &[u64]) -> Vec<Vec<GroupLetter>> {
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &len in parts {
        let end = start + len as usize;
        out.push(letters[start..end].to_vec());
        start = end;
    }
    out
}
