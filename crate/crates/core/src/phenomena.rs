//! The named families: dead ends `d_m`, seesaw words `w_n`, and the pairs
//! `w_n t`, `w_n t^-1` that witness the failure of (minimal) almost
//! convexity, each with a checker producing a plain report.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::element::{GenLetter, LnElement, LnParams};
use crate::metric;
use crate::oracle::{self, CayleyGraph, Depth, OracleError};
use crate::word::Letter;

#[derive(Debug, Error)]
pub enum PhenomenaError {
    #[error("family index must be at least 1, got {0}")]
    FamilyIndex(i64),
    #[error("lamp state {0} is trivial")]
    TrivialState(u32),
    #[error("in-ball search infeasible: {0}")]
    Infeasible(OracleError),
}

/// `d_m`: every lamp in `[-m, m]` set to `a^h`, cursor at the origin.
pub fn dead_end_family_d_m(params: LnParams, m: i64) -> Result<LnElement, PhenomenaError> {
    if m < 1 {
        return Err(PhenomenaError::FamilyIndex(m));
    }
    Ok(params.element((-m..=m).map(|p| (p, params.h() as i64)), 0))
}

/// `4m + h(2m+1)`.
pub fn dead_end_family_length(params: LnParams, m: i64) -> u64 {
    (4 * m + params.h() as i64 * (2 * m + 1)) as u64
}

/// `w_n`: lamps at `n` and `-n` in states `e1` and `e2`, cursor at the origin.
pub fn seesaw_family_w_n(
    params: LnParams,
    n: i64,
    e1: u32,
    e2: u32,
) -> Result<LnElement, PhenomenaError> {
    if n < 1 {
        return Err(PhenomenaError::FamilyIndex(n));
    }
    for e in [e1, e2] {
        if params.reduce(e as i64) == 0 {
            return Err(PhenomenaError::TrivialState(e));
        }
    }
    Ok(params.element([(n, e1 as i64), (-n, e2 as i64)], 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeadEndReport<E> {
    pub element: E,
    pub length: u64,
    pub is_dead_end: bool,
    /// `(letter, |e letter|)` over the generators and their inverses.
    pub neighbor_lengths: Vec<(String, u64)>,
    /// Measured when `is_dead_end`.
    pub depth: Option<Depth>,
}

impl<E> DeadEndReport<E> {
    /// `length=.. dead_end=.. depth=..`
    pub fn summary(&self) -> String {
        let depth = self.depth.map_or("none".to_string(), |d| d.to_string());
        format!(
            "length={} dead_end={} depth={depth}",
            self.length, self.is_dead_end
        )
    }

    /// Summary line followed by one `neighbor=<g> length=<l>` line per letter.
    pub fn lines(&self) -> Vec<String> {
        std::iter::once(self.summary())
            .chain(
                self.neighbor_lengths
                    .iter()
                    .map(|(g, l)| format!("neighbor={g} length={l}")),
            )
            .collect()
    }
}

/// Neighbor lengths by the closed-form metric, and the escape depth by
/// breadth-first search (at most `max_depth + 1` letters) when `e` is a dead end.
pub fn check_dead_end<G: CayleyGraph>(
    graph: &G,
    e: &G::Element,
    max_depth: u32,
) -> DeadEndReport<G::Element> {
    let length = graph.length(e);
    let neighbor_lengths: Vec<(String, u64)> = graph
        .letters()
        .into_iter()
        .map(|g| (graph.letter_name(g), graph.length(&graph.act(e, g))))
        .collect();
    let is_dead_end = neighbor_lengths.iter().all(|&(_, l)| l <= length);
    let depth = is_dead_end.then(|| {
        oracle::escape_depth(graph, e, max_depth.saturating_add(1)).expect("dead end checked above")
    });
    DeadEndReport {
        element: e.clone(),
        length,
        is_dead_end,
        neighbor_lengths,
        depth,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeesawReport<E> {
    pub element: E,
    pub length: u64,
    pub pivot: String,
    pub swing_checked: u32,
    pub holds: bool,
    /// Largest swing for which both conditions hold, 0 if the first fails.
    pub max_swing: u32,
}

impl<E> fmt::Display for SeesawReport<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "length={} pivot={} swing_checked={} holds={} max_swing={}",
            self.length, self.pivot, self.swing_checked, self.holds, self.max_swing
        )
    }
}

/// Checks whether `e` is a seesaw word of swing `k` with respect to `pivot`:
///
/// 1. `pivot` and its inverse each shorten `e` by one, and no other
///    generator or inverse shortens it;
/// 2. for `l` in `[1, k-1]`, in both directions `d = pivot^{+-1}`,
///    `|e d^l| = |e d^(l-1)| - 1`, and no generator other than the pivot
///    (or its inverse) shortens `e d^(l-1)`.
pub fn check_seesaw<G: CayleyGraph>(
    graph: &G,
    e: &G::Element,
    pivot: G::Letter,
    k: u32,
) -> SeesawReport<G::Element> {
    let length = graph.length(e);
    let others: Vec<G::Letter> = graph
        .letters()
        .into_iter()
        .filter(|&h| h != pivot && h != pivot.inverse())
        .collect();
    let others_hold = |x: &G::Element| {
        let lx = graph.length(x);
        others.iter().all(|&h| graph.length(&graph.act(x, h)) >= lx)
    };
    let first = [pivot, pivot.inverse()]
        .iter()
        .all(|&g| graph.length(&graph.act(e, g)) + 1 == length)
        && others_hold(e);

    // max_swing: count consecutive steps l = 1, 2, ... satisfying condition 2
    let mut max_swing = 0;
    if first {
        max_swing = 1;
        let mut walkers = [e.clone(), e.clone()];
        loop {
            let mut ok = true;
            for (walker, g) in walkers.iter_mut().zip([pivot, pivot.inverse()]) {
                let next = graph.act(walker, g);
                ok &= graph.length(&next) + 1 == graph.length(walker) && others_hold(walker);
                *walker = next;
            }
            if !ok {
                break;
            }
            max_swing += 1;
        }
    }
    SeesawReport {
        element: e.clone(),
        length,
        pivot: graph.letter_name(pivot),
        swing_checked: k,
        holds: k >= 1 && first && k <= max_swing,
        max_swing,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    /// Index of the seesaw word `w_n` the pair is built from.
    pub witness: i64,
    pub pair: (LnElement, LnElement),
    pub pair_lengths: (u64, u64),
    pub ball_radius: u64,
    pub free_distance: u64,
    /// `8n + 2`, the proven lower bound on any in-ball path.
    pub lower_bound: u64,
    pub in_ball_distance: Option<u32>,
    pub mac_bound: u64,
    pub violates_mac: Option<bool>,
}

impl fmt::Display for ConvexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "omitted".to_string());
        write!(
            f,
            "witness={} pair_lengths={},{} ball_radius={} free_distance={} lower_bound={} in_ball_distance={} mac_bound={} violates_mac={}",
            self.witness,
            self.pair_lengths.0,
            self.pair_lengths.1,
            self.ball_radius,
            self.free_distance,
            self.lower_bound,
            opt(self.in_ball_distance.map(|d| d.to_string())),
            self.mac_bound,
            opt(self.violates_mac.map(|v| v.to_string())),
        )
    }
}

/// The pair `w_n t`, `w_n t^-1` in `B(4n+1)`. With `run_search`, the
/// shortest path between them inside the ball is found by constrained BFS,
/// materializing at most `cap` elements.
pub fn convexity_witness(
    params: LnParams,
    n: i64,
    run_search: bool,
    cap: usize,
) -> Result<ConvexityReport, PhenomenaError> {
    let w = seesaw_family_w_n(params, n, 1, 1)?;
    let x = w.apply(GenLetter::T);
    let y = w.apply(GenLetter::T_INV);
    let pair_lengths = (metric::word_length(&x), metric::word_length(&y));
    let ball_radius = (4 * n + 1) as u64;
    let free_distance = metric::word_length(&x.invert().mul(&y));
    let mac_bound = 2 * ball_radius - 1;
    let in_ball_distance = if run_search {
        oracle::in_ball_shortest_path_capped(&params, ball_radius, &x, &y, cap)
            .map_err(PhenomenaError::Infeasible)?
    } else {
        None
    };
    Ok(ConvexityReport {
        witness: n,
        pair: (x, y),
        pair_lengths,
        ball_radius,
        free_distance,
        lower_bound: (8 * n + 2) as u64,
        violates_mac: in_ball_distance.map(|d| d as u64 > mac_bound),
        in_ball_distance,
        mac_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginBoundReport {
    pub n: i64,
    pub bound: u64,
    pub exhaustive: bool,
    pub checked: usize,
    pub minimum: u64,
    pub violations: usize,
}

impl OriginBoundReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for OriginBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} bound={} exhaustive={} checked={} minimum={} violations={}",
            self.n, self.bound, self.exhaustive, self.checked, self.minimum, self.violations
        )
    }
}

/// Checks `|v| >= 4n+2` for elements with the cursor at the origin and
/// nontrivial lamps at both `n` and `-n`: exhaustively over configurations
/// supported in `[-n, n]` when `n <= 2`, plus `trials` random configurations
/// with extra lamps anywhere in `[-3n, 3n]`.
pub fn check_origin_bound(
    params: LnParams,
    n: i64,
    trials: usize,
    seed: u64,
) -> Result<OriginBoundReport, PhenomenaError> {
    if n < 1 {
        return Err(PhenomenaError::FamilyIndex(n));
    }
    let bound = (4 * n + 2) as u64;
    let states = params.n() as i64;
    let mut report = OriginBoundReport {
        n,
        bound,
        exhaustive: n <= 2,
        checked: 0,
        minimum: u64::MAX,
        violations: 0,
    };
    let mut record = |v: &LnElement| {
        let len = metric::word_length(v);
        report.checked += 1;
        report.minimum = report.minimum.min(len);
        if len < bound {
            report.violations += 1;
        }
    };

    if n <= 2 {
        // odometer over states of [-n, n]; the ends range over 1..states
        let width = (2 * n + 1) as usize;
        let mut digits = vec![0i64; width];
        digits[0] = 1;
        digits[width - 1] = 1;
        loop {
            let v = params.element((0..width).map(|i| (i as i64 - n, digits[i])), 0);
            record(&v);
            let mut i = 0;
            loop {
                if i == width {
                    break;
                }
                let low = if i == 0 || i == width - 1 { 1 } else { 0 };
                digits[i] += 1;
                if digits[i] < states {
                    break;
                }
                digits[i] = low;
                i += 1;
            }
            if i == width {
                break;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut lamps = vec![
            (n, rng.random_range(1..states)),
            (-n, rng.random_range(1..states)),
        ];
        let extra = rng.random_range(0..=(2 * n + 2) as usize);
        for _ in 0..extra {
            lamps.push((
                rng.random_range(-3 * n..=3 * n),
                rng.random_range(1..states),
            ));
        }
        let mut v = params.element(lamps, 0);
        // accumulation may have switched an end lamp off; force it back on
        for end in [n, -n] {
            if v.lamps().state(end) == 0 {
                v = v.mul(&params.element([(end, 1)], 0));
            }
        }
        record(&v);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: u32) -> LnParams {
        LnParams::new(n).unwrap()
    }

    #[test]
    fn dead_end_lengths() {
        assert_eq!(
            metric::word_length(&dead_end_family_d_m(l(2), 1).unwrap()),
            7
        );
        assert_eq!(
            metric::word_length(&dead_end_family_d_m(l(4), 2).unwrap()),
            18
        );
        assert_eq!(
            metric::word_length(&dead_end_family_d_m(l(3), 3).unwrap()),
            19
        );
        assert!(dead_end_family_d_m(l(2), 0).is_err());
    }

    #[test]
    fn dead_end_reports() {
        let p = l(2);
        let r = check_dead_end(&p, &dead_end_family_d_m(p, 1).unwrap(), 10);
        assert!(r.is_dead_end);
        assert!(r.neighbor_lengths.iter().all(|&(_, len)| len == 6));
        assert_eq!(r.depth, Some(Depth::Exact(2)));
        assert_eq!(r.summary(), "length=7 dead_end=true depth=2");

        let r = check_dead_end(&p, &p.identity(), 10);
        assert!(!r.is_dead_end);
        assert_eq!(r.summary(), "length=0 dead_end=false depth=none");

        let r = check_dead_end(&p, &dead_end_family_d_m(p, 1).unwrap(), 1);
        assert_eq!(r.depth, Some(Depth::AtLeast(2)));
    }

    #[test]
    fn odd_modulus_keeps_one_lamp_letter() {
        let p = l(3);
        for (m, len) in [(1, 7), (2, 13)] {
            let r = check_dead_end(&p, &dead_end_family_d_m(p, m).unwrap(), 0);
            assert_eq!(r.length, len);
            assert!(r.is_dead_end);
            let lens: Vec<u64> = r.neighbor_lengths.iter().map(|&(_, l)| l).collect();
            assert_eq!(lens, vec![len, len - 1, len - 1, len - 1]);
        }
    }

    #[test]
    fn seesaw_lengths() {
        assert_eq!(
            metric::word_length(&seesaw_family_w_n(l(2), 1, 1, 1).unwrap()),
            6
        );
        assert_eq!(
            metric::word_length(&seesaw_family_w_n(l(2), 2, 1, 1).unwrap()),
            10
        );
        assert_eq!(
            metric::word_length(&seesaw_family_w_n(l(5), 2, 3, 1).unwrap()),
            11
        );
        assert!(matches!(
            seesaw_family_w_n(l(5), 2, 5, 1),
            Err(PhenomenaError::TrivialState(5))
        ));
    }

    #[test]
    fn seesaw_checks() {
        let p = l(2);
        let w1 = seesaw_family_w_n(p, 1, 1, 1).unwrap();
        let r = check_seesaw(&p, &w1, GenLetter::T, 1);
        assert!(r.holds);
        let w2 = seesaw_family_w_n(p, 2, 1, 1).unwrap();
        assert!(check_seesaw(&p, &w2, GenLetter::T, 2).holds);
        let r = check_seesaw(&p, &w1, GenLetter::A, 1);
        assert!(!r.holds);
        assert_eq!(r.max_swing, 0);
        assert!(!check_seesaw(&p, &w1, GenLetter::T, 0).holds);
    }

    #[test]
    fn convexity_without_search() {
        let r = convexity_witness(l(2), 1, false, 1000).unwrap();
        assert_eq!(r.pair_lengths, (5, 5));
        assert_eq!(r.free_distance, 2);
        assert_eq!(r.mac_bound, 9);
        assert_eq!(r.in_ball_distance, None);
        assert_eq!(
            r.to_string(),
            "witness=1 pair_lengths=5,5 ball_radius=5 free_distance=2 lower_bound=10 in_ball_distance=omitted mac_bound=9 violates_mac=omitted"
        );
    }

    #[test]
    fn convexity_search_n1() {
        let r = convexity_witness(l(2), 1, true, 1_000_000).unwrap();
        assert_eq!(r.in_ball_distance, Some(10));
        assert_eq!(r.violates_mac, Some(true));
        assert!(matches!(
            convexity_witness(l(2), 1, true, 5),
            Err(PhenomenaError::Infeasible(_))
        ));
    }

    #[test]
    fn origin_bound_small() {
        let p = l(2);
        let tight = p.element([(1, 1), (-1, 1)], 0);
        assert_eq!(metric::word_length(&tight), 6);
        assert_eq!(
            metric::word_length(&p.element([(1, 1), (-1, 1), (0, 1)], 0)),
            7
        );
        let r = check_origin_bound(p, 2, 0, 1).unwrap();
        assert_eq!(r.checked, 8);
        assert_eq!(r.minimum, 10);
        assert!(r.holds());
        let r = check_origin_bound(l(3), 1, 200, 7).unwrap();
        assert_eq!(r.checked, 3 * 4 + 200);
        assert_eq!(r.minimum, 6);
    }
}
