//! Cursor tours behind the right-first and left-first normal forms.
//!
//! Every geodesic for an element with lit extents `R` (rightmost, clamped
//! at 0) and `L` (leftmost, negated and clamped at 0) and final cursor `m`
//! moves the cursor monotonically through the waypoints `0 -> R -> -L -> m`
//! (right-first) or `0 -> -L -> R -> m` (left-first).

use std::collections::HashMap;
use std::fmt;

use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    RightFirst,
    LeftFirst,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::RightFirst => "rf",
            Side::LeftFirst => "lf",
        })
    }
}

/// Lit extents `R >= 0` and `L >= 0` of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Extents {
    pub right: i64,
    pub left: i64,
}

impl Extents {
    pub fn from_bounds(min_position: Option<i64>, max_position: Option<i64>) -> Self {
        Extents {
            right: max_position.map_or(0, |p| p.max(0)),
            left: min_position.map_or(0, |p| (-p).max(0)),
        }
    }

    /// Number of `t^{+-1}` letters the tour of `side` needs to end at `cursor`.
    pub fn tour_cost(&self, side: Side, cursor: i64) -> u64 {
        let (r, l) = (self.right, self.left);
        let cost = match side {
            Side::RightFirst => 2 * r + l + (cursor + l).abs(),
            Side::LeftFirst => 2 * l + r + (cursor - r).abs(),
        };
        cost as u64
    }

    pub fn min_tour_cost(&self, cursor: i64) -> u64 {
        self.tour_cost(Side::RightFirst, cursor)
            .min(self.tour_cost(Side::LeftFirst, cursor))
    }

    /// Cheaper side, ties going to right-first.
    pub fn canonical_side(&self, cursor: i64) -> Side {
        if self.tour_cost(Side::RightFirst, cursor) <= self.tour_cost(Side::LeftFirst, cursor) {
            Side::RightFirst
        } else {
            Side::LeftFirst
        }
    }

    /// All sides achieving the minimum, right-first first.
    pub fn minimal_sides(&self, cursor: i64) -> Vec<Side> {
        let best = self.min_tour_cost(cursor);
        [Side::RightFirst, Side::LeftFirst]
            .into_iter()
            .filter(|&s| self.tour_cost(s, cursor) == best)
            .collect()
    }

    /// Cursor positions along the tour, one entry per unit step, starting at 0.
    pub fn path(&self, side: Side, cursor: i64) -> Vec<i64> {
        let waypoints = match side {
            Side::RightFirst => [self.right, -self.left, cursor],
            Side::LeftFirst => [-self.left, self.right, cursor],
        };
        let mut path = vec![0];
        let mut at = 0;
        for target in waypoints {
            while at != target {
                at += (target - at).signum();
                path.push(at);
            }
        }
        path
    }
}

/// Number of separate visits the path makes to each position.
pub fn visit_counts(path: &[i64]) -> HashMap<i64, usize> {
    let mut counts = HashMap::new();
    for &p in path {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts
}

/// Spells a word following `path`: at the `k`-th visit (0-based) to a
/// position, `at_visit(position, k)` supplies the letters to emit there
/// before the cursor moves on.
pub fn spell<L, I>(path: &[i64], right: L, mut at_visit: impl FnMut(i64, usize) -> I) -> Word<L>
where
    L: Letter,
    I: IntoIterator<Item = L>,
{
    let mut seen: HashMap<i64, usize> = HashMap::new();
    let mut word = Word::empty();
    for (i, &p) in path.iter().enumerate() {
        if i > 0 {
            word.push(if p > path[i - 1] {
                right
            } else {
                right.inverse()
            });
        }
        let k = seen.entry(p).or_insert(0);
        for l in at_visit(p, *k) {
            word.push(l);
        }
        *k += 1;
    }
    word
}
