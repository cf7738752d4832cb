//! Brute-force ground truth on Cayley graphs.
//!
//! Everything here walks the Cayley graph directly: balls are enumerated
//! breadth-first from the identity, constrained searches stay inside a
//! ball, and escape depths are found by searching outward from an element.
//!
//! Searches expand one BFS level at a time. Each level's candidates are
//! generated in parallel on the current rayon pool, then sorted and
//! deduplicated, so results never depend on the number of worker threads.
//!
//! Persisted balls use a line-based text dump:
//!
//! ```text
//! lamplighter-ball v1 radius=<r>
//! <encoded element> <distance>
//! ...
//! ```
//!
//! with lines ordered by distance, then by element. Lamplighter elements
//! encode as `p:s,p:s|m` (lit positions ascending, then the cursor) and
//! wreath elements as `p:x,p:x|m`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::io::{self, BufRead, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::element::{GenLetter, LnElement, LnParams};
use crate::finite_group::{FiniteGroupTable, GroupLetter};
use crate::metric;
use crate::word::{Letter, Word};
use crate::wreath::{WreathElement, WreathLetter, WreathProduct};

/// Default bound on the number of elements a ball may hold.
pub const DEFAULT_CAP: usize = 50_000_000;

pub const DUMP_HEADER: &str = "lamplighter-ball v1";

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("ball exceeds the cap of {cap} elements at radius {radius}")]
    CapExceeded { cap: usize, radius: u32 },
    #[error("{which} has length {length}, outside the ball of radius {radius}")]
    OutsideBall {
        which: &'static str,
        length: u64,
        radius: u64,
    },
    #[error("element is not a dead end")]
    NotDeadEnd,
    #[error("dump line {line}: {message}")]
    Dump { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A group with a finite generating set, its Cayley graph walked by right
/// multiplication, and a closed-form word length to check against.
pub trait CayleyGraph: Sync {
    type Element: Clone + Eq + Hash + Ord + Send + Sync + fmt::Debug;
    type Letter: Letter;

    fn identity(&self) -> Self::Element;

    /// The generating set `X`, without inverses.
    fn generators(&self) -> Vec<Self::Letter>;

    /// `X ∪ X^-1` as `g1, g1^-1, g2, g2^-1, ...`.
    fn letters(&self) -> Vec<Self::Letter> {
        self.generators()
            .into_iter()
            .flat_map(|g| [g, g.inverse()])
            .collect()
    }

    fn act(&self, e: &Self::Element, g: Self::Letter) -> Self::Element;

    /// Word length from the closed-form metric.
    fn length(&self, e: &Self::Element) -> u64;

    fn letter_name(&self, g: Self::Letter) -> String;

    fn encode(&self, e: &Self::Element) -> String;

    fn decode(&self, text: &str) -> Option<Self::Element>;

    fn act_word(&self, e: &Self::Element, word: &Word<Self::Letter>) -> Self::Element {
        word.letters()
            .iter()
            .fold(e.clone(), |x, &g| self.act(&x, g))
    }
}

impl CayleyGraph for LnParams {
    type Element = LnElement;
    type Letter = GenLetter;

    fn identity(&self) -> LnElement {
        LnParams::identity(self)
    }

    fn generators(&self) -> Vec<GenLetter> {
        vec![GenLetter::A, GenLetter::T]
    }

    fn act(&self, e: &LnElement, g: GenLetter) -> LnElement {
        e.apply(g)
    }

    fn length(&self, e: &LnElement) -> u64 {
        metric::word_length(e)
    }

    fn letter_name(&self, g: GenLetter) -> String {
        g.to_string()
    }

    fn encode(&self, e: &LnElement) -> String {
        e.encode()
    }

    fn decode(&self, text: &str) -> Option<LnElement> {
        LnParams::decode(self, text).ok()
    }
}

impl CayleyGraph for WreathProduct {
    type Element = WreathElement;
    type Letter = WreathLetter;

    fn identity(&self) -> WreathElement {
        WreathProduct::identity(self)
    }

    fn generators(&self) -> Vec<WreathLetter> {
        WreathProduct::generators(self)
    }

    fn act(&self, e: &WreathElement, g: WreathLetter) -> WreathElement {
        self.apply(e, g)
    }

    fn length(&self, e: &WreathElement) -> u64 {
        WreathProduct::length(self, e)
    }

    fn letter_name(&self, g: WreathLetter) -> String {
        WreathProduct::letter_name(self, g)
    }

    fn encode(&self, e: &WreathElement) -> String {
        e.encode()
    }

    fn decode(&self, text: &str) -> Option<WreathElement> {
        WreathProduct::decode(self, text).ok()
    }
}

impl CayleyGraph for FiniteGroupTable {
    type Element = usize;
    type Letter = GroupLetter;

    fn identity(&self) -> usize {
        0
    }

    fn generators(&self) -> Vec<GroupLetter> {
        (0..FiniteGroupTable::generators(self).len())
            .map(|generator| GroupLetter {
                generator,
                inverse: false,
            })
            .collect()
    }

    fn act(&self, e: &usize, g: GroupLetter) -> usize {
        self.product(*e, self.letter_element(g))
    }

    fn length(&self, e: &usize) -> u64 {
        FiniteGroupTable::length(self, *e) as u64
    }

    fn letter_name(&self, g: GroupLetter) -> String {
        FiniteGroupTable::letter_name(self, g)
    }

    fn encode(&self, e: &usize) -> String {
        e.to_string()
    }

    fn decode(&self, text: &str) -> Option<usize> {
        text.parse().ok().filter(|&x| x < self.order())
    }
}

/// Sorted, deduplicated neighbors of `frontier` that pass `keep`.
fn expand<G: CayleyGraph>(
    graph: &G,
    letters: &[G::Letter],
    frontier: &[G::Element],
    keep: &(dyn Fn(&G::Element) -> bool + Sync),
) -> Vec<G::Element> {
    let mut next: Vec<G::Element> = frontier
        .par_iter()
        .flat_map_iter(|e| letters.iter().map(move |&g| graph.act(e, g)))
        .filter(|x| keep(x))
        .collect();
    next.par_sort_unstable();
    next.dedup();
    next
}

/// The ball `B(r)`: every element within distance `r` of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallIndex<E: Hash + Eq> {
    radius: u32,
    distances: HashMap<E, u32>,
    spheres: Vec<Vec<E>>,
}

impl<E: Clone + Hash + Eq + Ord> BallIndex<E> {
    fn from_spheres(radius: u32, spheres: Vec<Vec<E>>) -> Self {
        let mut distances = HashMap::with_capacity(spheres.iter().map(Vec::len).sum());
        for (d, sphere) in spheres.iter().enumerate() {
            for e in sphere {
                distances.insert(e.clone(), d as u32);
            }
        }
        BallIndex {
            radius,
            distances,
            spheres,
        }
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// Exact distance from the identity, or `None` when `e` is outside the ball.
    pub fn distance(&self, e: &E) -> Option<u32> {
        self.distances.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.distances.contains_key(e)
    }

    /// Elements at exact distance `d`, sorted.
    pub fn sphere(&self, d: u32) -> &[E] {
        self.spheres.get(d as usize).map_or(&[], Vec::as_slice)
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.spheres.iter().map(Vec::len).collect()
    }

    /// Elements with their distances, by distance then element.
    pub fn iter(&self) -> impl Iterator<Item = (&E, u32)> {
        self.spheres
            .iter()
            .enumerate()
            .flat_map(|(d, s)| s.iter().map(move |e| (e, d as u32)))
    }

    /// `radius<TAB>count` lines, one per sphere.
    pub fn sphere_tsv(&self) -> String {
        self.sphere_sizes()
            .iter()
            .enumerate()
            .map(|(d, c)| format!("{d}\t{c}\n"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallOptions {
    /// Enumeration stops with an error once the ball would exceed this many elements.
    pub cap: usize,
}

impl Default for BallOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

pub fn enumerate_ball<G: CayleyGraph>(
    graph: &G,
    radius: u32,
) -> Result<BallIndex<G::Element>, OracleError> {
    enumerate_ball_with(graph, radius, BallOptions::default())
}

pub fn enumerate_ball_with<G: CayleyGraph>(
    graph: &G,
    radius: u32,
    options: BallOptions,
) -> Result<BallIndex<G::Element>, OracleError> {
    let letters = graph.letters();
    let mut seen: HashSet<G::Element> = HashSet::from([graph.identity()]);
    let mut spheres = vec![vec![graph.identity()]];
    for d in 1..=radius {
        let next = {
            let seen = &seen;
            expand(graph, &letters, spheres.last().unwrap(), &|x| {
                !seen.contains(x)
            })
        };
        if seen.len() + next.len() > options.cap {
            return Err(OracleError::CapExceeded {
                cap: options.cap,
                radius: d,
            });
        }
        seen.extend(next.iter().cloned());
        spheres.push(next);
    }
    Ok(BallIndex::from_spheres(radius, spheres))
}

/// Writes the versioned text dump of a ball.
pub fn write_dump<G: CayleyGraph>(
    graph: &G,
    ball: &BallIndex<G::Element>,
    mut out: impl Write,
) -> io::Result<()> {
    writeln!(out, "{DUMP_HEADER} radius={}", ball.radius())?;
    for (e, d) in ball.iter() {
        writeln!(out, "{} {d}", graph.encode(e))?;
    }
    Ok(())
}

/// Reads a dump written by [`write_dump`].
pub fn read_dump<G: CayleyGraph>(
    graph: &G,
    input: impl BufRead,
) -> Result<BallIndex<G::Element>, OracleError> {
    let err = |line, message: &str| OracleError::Dump {
        line,
        message: message.to_string(),
    };
    let mut lines = input.lines();
    let header = lines.next().ok_or_else(|| err(1, "empty dump"))??;
    let radius: u32 = header
        .strip_prefix(DUMP_HEADER)
        .and_then(|rest| rest.trim().strip_prefix("radius="))
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| err(1, "bad header"))?;
    let mut spheres: Vec<Vec<G::Element>> = vec![Vec::new(); radius as usize + 1];
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let (code, d) = line
            .rsplit_once(' ')
            .ok_or_else(|| err(lineno, "expected `<element> <distance>`"))?;
        let d: usize = d.parse().map_err(|_| err(lineno, "bad distance"))?;
        let e = graph
            .decode(code)
            .ok_or_else(|| err(lineno, "bad element"))?;
        spheres
            .get_mut(d)
            .ok_or_else(|| err(lineno, "distance beyond radius"))?
            .push(e);
    }
    for s in &mut spheres {
        s.sort_unstable();
    }
    Ok(BallIndex::from_spheres(radius, spheres))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub element: String,
    pub bfs: u32,
    pub formula: u64,
}

/// Outcome of comparing the closed-form length with BFS distance over a ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricCheck {
    pub radius: u32,
    pub checked: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl MetricCheck {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for MetricCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "radius={} checked={} mismatches={}",
            self.radius, self.checked, self.mismatches
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                " first_mismatch={} bfs={} formula={}",
                m.element, m.bfs, m.formula
            )?;
        }
        Ok(())
    }
}

/// Checks the closed-form metric against an already enumerated ball.
pub fn check_metric<G: CayleyGraph>(graph: &G, ball: &BallIndex<G::Element>) -> MetricCheck {
    let mut check = MetricCheck {
        radius: ball.radius(),
        checked: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for (e, d) in ball.iter() {
        check.checked += 1;
        let formula = graph.length(e);
        if formula != d as u64 {
            check.mismatches += 1;
            check.first_mismatch.get_or_insert_with(|| Mismatch {
                element: graph.encode(e),
                bfs: d,
                formula,
            });
        }
    }
    check
}

/// Enumerates `B(radius)` and compares every BFS distance with the formula.
pub fn verify_metric_formula<G: CayleyGraph>(
    graph: &G,
    radius: u32,
) -> Result<MetricCheck, OracleError> {
    Ok(check_metric(graph, &enumerate_ball(graph, radius)?))
}

/// Every shortest word from the identity to `e`, read from the ball.
/// `None` when `e` is outside the ball.
pub fn ball_geodesics<G: CayleyGraph>(
    graph: &G,
    ball: &BallIndex<G::Element>,
    e: &G::Element,
) -> Option<BTreeSet<Word<G::Letter>>> {
    ball.distance(e)?;
    let letters = graph.letters();
    let mut out = BTreeSet::new();
    let mut suffix = Vec::new();
    collect_geodesics(graph, ball, &letters, e, &mut suffix, &mut out);
    Some(out)
}

fn collect_geodesics<G: CayleyGraph>(
    graph: &G,
    ball: &BallIndex<G::Element>,
    letters: &[G::Letter],
    e: &G::Element,
    suffix: &mut Vec<G::Letter>,
    out: &mut BTreeSet<Word<G::Letter>>,
) {
    let d = ball.distance(e).expect("walk stays in the ball");
    if d == 0 {
        out.insert(suffix.iter().rev().copied().collect());
        return;
    }
    for &g in letters {
        let prev = graph.act(e, g.inverse());
        if ball.distance(&prev) == Some(d - 1) {
            suffix.push(g);
            collect_geodesics(graph, ball, letters, &prev, suffix, out);
            suffix.pop();
        }
    }
}

/// Length of a shortest path from `source` to `target` through elements of
/// length at most `radius`, or `None` when no such path exists. Membership
/// is decided by the closed-form metric, so only the component reachable
/// from `source` is ever materialized.
pub fn in_ball_shortest_path<G: CayleyGraph>(
    graph: &G,
    radius: u64,
    source: &G::Element,
    target: &G::Element,
) -> Result<Option<u32>, OracleError> {
    in_ball_shortest_path_capped(graph, radius, source, target, DEFAULT_CAP)
}

/// [`in_ball_shortest_path`], failing once more than `cap` elements are visited.
pub fn in_ball_shortest_path_capped<G: CayleyGraph>(
    graph: &G,
    radius: u64,
    source: &G::Element,
    target: &G::Element,
    cap: usize,
) -> Result<Option<u32>, OracleError> {
    for (which, e) in [("source", source), ("target", target)] {
        let length = graph.length(e);
        if length > radius {
            return Err(OracleError::OutsideBall {
                which,
                length,
                radius,
            });
        }
    }
    if source == target {
        return Ok(Some(0));
    }
    let letters = graph.letters();
    let mut seen: HashSet<G::Element> = HashSet::from([source.clone()]);
    let mut frontier = vec![source.clone()];
    let mut steps = 0;
    while !frontier.is_empty() {
        steps += 1;
        frontier = {
            let seen = &seen;
            expand(graph, &letters, &frontier, &|x| {
                !seen.contains(x) && graph.length(x) <= radius
            })
        };
        if frontier.binary_search(target).is_ok() {
            return Ok(Some(steps));
        }
        if seen.len() + frontier.len() > cap {
            return Err(OracleError::CapExceeded { cap, radius: steps });
        }
        seen.extend(frontier.iter().cloned());
    }
    Ok(None)
}

/// Depth of a dead end: the shortest escape length minus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Exact(u32),
    /// No escape was found within the step budget.
    AtLeast(u32),
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Exact(k) => write!(f, "{k}"),
            Depth::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Result of searching outward from a dead end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Escape<L> {
    pub depth: Depth,
    /// A shortest word `x_1 ... x_s` with `|e x_1 ... x_s| > |e|`, when found.
    pub witness: Option<Word<L>>,
}

pub fn is_dead_end<G: CayleyGraph>(graph: &G, e: &G::Element) -> bool {
    let n = graph.length(e);
    graph
        .letters()
        .into_iter()
        .all(|g| graph.length(&graph.act(e, g)) <= n)
}

/// Breadth-first search outward from the dead end `e`, up to `max_steps`
/// letters, for the shortest word that leaves the ball `B(|e|)`.
pub fn escape<G: CayleyGraph>(
    graph: &G,
    e: &G::Element,
    max_steps: u32,
) -> Result<Escape<G::Letter>, OracleError> {
    if !is_dead_end(graph, e) {
        return Err(OracleError::NotDeadEnd);
    }
    let n = graph.length(e);
    let letters = graph.letters();
    // parent links: element -> (index into the previous level, letter index)
    let mut levels: Vec<Vec<G::Element>> = vec![vec![e.clone()]];
    let mut parents: Vec<Vec<(usize, usize)>> = vec![vec![]];
    let mut seen: HashSet<G::Element> = HashSet::from([e.clone()]);

    for s in 1..=max_steps {
        let frontier = levels.last().unwrap();
        if frontier.is_empty() {
            break;
        }
        let mut candidates: Vec<(G::Element, usize, usize)> = frontier
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, x)| {
                letters
                    .iter()
                    .enumerate()
                    .map(move |(j, &g)| (graph.act(x, g), i, j))
            })
            .filter(|(y, _, _)| !seen.contains(y))
            .collect();
        candidates.par_sort_unstable();
        candidates.dedup_by(|a, b| a.0 == b.0);

        if let Some(pos) = candidates.iter().position(|(y, _, _)| graph.length(y) > n) {
            let (_, mut i, j) = candidates[pos];
            let mut word = vec![letters[j]];
            for level in (1..levels.len()).rev() {
                let (pi, pj) = parents[level][i];
                word.push(letters[pj]);
                i = pi;
            }
            word.reverse();
            return Ok(Escape {
                depth: Depth::Exact(s - 1),
                witness: Some(Word::new(word)),
            });
        }
        seen.extend(candidates.iter().map(|(y, _, _)| y.clone()));
        parents.push(candidates.iter().map(|&(_, i, j)| (i, j)).collect());
        levels.push(candidates.into_iter().map(|(y, _, _)| y).collect());
    }
    Ok(Escape {
        depth: Depth::AtLeast(max_steps),
        witness: None,
    })
}

/// Depth of the dead end `e`, searching at most `max_steps` letters.
pub fn escape_depth<G: CayleyGraph>(
    graph: &G,
    e: &G::Element,
    max_steps: u32,
) -> Result<Depth, OracleError> {
    Ok(escape(graph, e, max_steps)?.depth)
}
