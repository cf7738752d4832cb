//! Exact word length, normal forms and geodesics in `L_n` with respect to
//! the generating set `{a, t}`.
//!
//! The length of an element is the sum of the minimal lamp costs plus the
//! cheaper of the two cursor tours (see [`crate::tour`]).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::element::{GenLetter, LnElement, LnParams};
use crate::tour::{self, Extents, Side};
use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("lamp state {state} out of range [1, {max}]")]
    StateOutOfRange { state: u32, max: u32 },
}

/// Minimal number of `a^{+-1}` letters that take a lamp from off to `state`.
pub fn lamp_cost(params: LnParams, state: u32) -> Result<u64, MetricError> {
    let n = params.n();
    if state == 0 || state >= n {
        return Err(MetricError::StateOutOfRange { state, max: n - 1 });
    }
    Ok(state.min(n - state) as u64)
}

/// The canonical signed exponent `e` in `{-h..h}` with `a^e` reaching
/// `state`; for even `n` the state `h` is written `+h`.
pub fn signed_exponent(params: LnParams, state: u32) -> i64 {
    let (n, h) = (params.n() as i64, params.h() as i64);
    let s = state as i64;
    if s <= h {
        s
    } else {
        s - n
    }
}

/// Every signed exponent of minimal absolute value reaching `state`.
pub fn minimal_exponents(params: LnParams, state: u32) -> Vec<i64> {
    let e = signed_exponent(params, state);
    let n = params.n() as i64;
    if n % 2 == 0 && e == n / 2 {
        vec![e, -e]
    } else {
        vec![e]
    }
}

pub fn extents(e: &LnElement) -> Extents {
    Extents::from_bounds(e.lamps().min_position(), e.lamps().max_position())
}

fn lamp_total(e: &LnElement) -> u64 {
    let params = e.params();
    e.lamps()
        .iter()
        .map(|(_, s)| lamp_cost(params, s).expect("stored lamp states are nonzero"))
        .sum()
}

/// Word length of `e` in `L_n` with respect to `{a, t}`.
pub fn word_length(e: &LnElement) -> u64 {
    lamp_total(e) + extents(e).min_tour_cost(e.cursor())
}

/// A right-first or left-first normal form together with its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub side: Side,
    /// `(i, e)` with `i >= 0`, ascending.
    pub nonneg_terms: Vec<(i64, i64)>,
    /// `(-j, f)` with `-j < 0`, descending toward `-L`.
    pub neg_terms: Vec<(i64, i64)>,
    pub right: i64,
    pub left: i64,
    pub cursor: i64,
    /// Lamp costs plus this side's tour cost.
    pub cost: u64,
}

impl NormalForm {
    /// Terms in the order the form applies them.
    pub fn terms(&self) -> impl Iterator<Item = &(i64, i64)> {
        let (first, second) = match self.side {
            Side::RightFirst => (&self.nonneg_terms, &self.neg_terms),
            Side::LeftFirst => (&self.neg_terms, &self.nonneg_terms),
        };
        first.iter().chain(second.iter())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().map(|(p, e)| format!("({p},{e})")).join(",");
        write!(
            f,
            "side={} terms=[{}] R={} L={} m={} cost={}",
            self.side, terms, self.right, self.left, self.cursor, self.cost
        )
    }
}

pub fn normal_form(e: &LnElement, side: Side) -> NormalForm {
    let params = e.params();
    let ext = extents(e);
    let nonneg_terms = e
        .lamps()
        .iter()
        .filter(|&(p, _)| p >= 0)
        .map(|(p, s)| (p, signed_exponent(params, s)))
        .collect();
    let neg_terms = e
        .lamps()
        .iter()
        .rev()
        .filter(|&(p, _)| p < 0)
        .map(|(p, s)| (p, signed_exponent(params, s)))
        .collect();
    NormalForm {
        side,
        nonneg_terms,
        neg_terms,
        right: ext.right,
        left: ext.left,
        cursor: e.cursor(),
        cost: lamp_total(e) + ext.tour_cost(side, e.cursor()),
    }
}

fn lamp_letters(exponent: i64) -> impl Iterator<Item = GenLetter> {
    let letter = if exponent < 0 {
        GenLetter::A_INV
    } else {
        GenLetter::A
    };
    std::iter::repeat_n(letter, exponent.unsigned_abs() as usize)
}

/// A geodesic spelling: the tour side and, per lit lamp, the signed
/// increments applied on each successive visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicSchedule {
    pub side: Side,
    pub choices: Vec<LampChoice>,
    pub word: Word<GenLetter>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LampChoice {
    pub position: i64,
    /// One entry per visit of the tour to `position`.
    pub increments: Vec<i64>,
}

fn spell_schedule(e: &LnElement, side: Side, choices: Vec<LampChoice>) -> GeodesicSchedule {
    let path = extents(e).path(side, e.cursor());
    let by_pos: HashMap<i64, &[i64]> = choices
        .iter()
        .map(|c| (c.position, c.increments.as_slice()))
        .collect();
    let word = tour::spell(&path, GenLetter::T, |pos, k| {
        let exp = by_pos
            .get(&pos)
            .and_then(|inc| inc.get(k))
            .copied()
            .unwrap_or(0);
        lamp_letters(exp)
    });
    GeodesicSchedule {
        side,
        choices,
        word,
    }
}

/// The canonical geodesic: cheaper side (ties right-first), every lamp set
/// on its first visit with its canonical signed exponent.
pub fn canonical_schedule(e: &LnElement) -> GeodesicSchedule {
    let params = e.params();
    let side = extents(e).canonical_side(e.cursor());
    let choices = e
        .lamps()
        .iter()
        .map(|(p, s)| LampChoice {
            position: p,
            increments: vec![signed_exponent(params, s)],
        })
        .collect();
    spell_schedule(e, side, choices)
}

pub fn emit_geodesic(e: &LnElement) -> Word<GenLetter> {
    canonical_schedule(e).word
}

/// Number of lit lamps the tour of `side` visits more than once.
pub fn revisited_lamps(e: &LnElement, side: Side) -> usize {
    let counts = tour::visit_counts(&extents(e).path(side, e.cursor()));
    e.lamps()
        .iter()
        .filter(|(p, _)| counts.get(p).copied().unwrap_or(0) >= 2)
        .count()
}

/// All ways of writing `total` as an ordered sum of `parts` nonnegative integers.
pub(crate) fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every schedule over each minimal side: each lit lamp's canonical signed
/// exponent split (same sign) across all of the tour's visits to it.
///
/// For even `n` a lamp in state `h` is always written `a^h`; the mirrored
/// spellings with `a^-h` are not listed.
pub fn enumerate_schedules(e: &LnElement) -> Vec<GeodesicSchedule> {
    let params = e.params();
    let ext = extents(e);
    let mut out = Vec::new();
    for side in ext.minimal_sides(e.cursor()) {
        let counts = tour::visit_counts(&ext.path(side, e.cursor()));
        let per_lamp: Vec<Vec<LampChoice>> = e
            .lamps()
            .iter()
            .map(|(p, s)| {
                let visits = counts[&p];
                let exp = signed_exponent(params, s);
                compositions(exp.unsigned_abs(), visits)
                    .into_iter()
                    .map(|parts| LampChoice {
                        position: p,
                        increments: parts.iter().map(|&x| x as i64 * exp.signum()).collect(),
                    })
                    .collect()
            })
            .collect();
        if per_lamp.is_empty() {
            out.push(spell_schedule(e, side, Vec::new()));
            continue;
        }
        for choices in per_lamp.into_iter().multi_cartesian_product() {
            out.push(spell_schedule(e, side, choices));
        }
    }
    out
}

/// Distinct geodesic words produced by [`enumerate_schedules`].
pub fn enumerate_geodesics(e: &LnElement) -> BTreeSet<Word<GenLetter>> {
    enumerate_schedules(e).into_iter().map(|s| s.word).collect()
}
