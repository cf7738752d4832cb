//! Finite groups given by multiplication tables.
//!
//! Word lengths `|x|_G` with respect to the generators and their inverses
//! are computed once by breadth-first search from the identity, which is
//! always element 0.
//!
//! Tables can be read from the `wreath-group-table v1` text format:
//!
//! ```text
//! wreath-group-table v1
//! order 4
//! gen a 1          # one line per generator
//! gen b 2
//! table
//! 0 1 2 3          # row i, column j holds i*j
//! 1 0 3 2
//! 2 3 0 1
//! 3 2 1 0
//! ```

use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::word::{is_valid_generator_name, parse_word, Letter, Word, WordError};

pub const FORMAT_HEADER: &str = "wreath-group-table v1";

/// Tables up to this order are checked for associativity exhaustively.
pub const EXHAUSTIVE_ASSOCIATIVITY_ORDER: usize = 256;
const SAMPLED_ASSOCIATIVITY_TRIPLES: usize = 10_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("identity axiom violated at element {0}")]
    Identity(usize),
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("generators do not generate: reached {reached} of {order} elements")]
    DoesNotGenerate { reached: usize, order: usize },
    #[error("invalid generator `{name}`: {reason}")]
    Generator { name: String, reason: String },
    #[error("cyclic group order must be at least 2, got {0}")]
    CyclicOrder(usize),
    #[error("table must be square and non-empty")]
    Shape,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A generator of a finite group or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter for GroupLetter {
    fn inverse(self) -> Self {
        GroupLetter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<usize>,
    inverses: Vec<usize>,
    generators: Vec<(String, usize)>,
    lengths: Vec<u32>,
    parents: Vec<Option<(usize, GroupLetter)>>,
}

impl FiniteGroupTable {
    /// Validates a table (`mul[i][j] = i*j`, identity 0) and computes word
    /// lengths with respect to the named generators.
    pub fn from_table(
        mul: Vec<Vec<usize>>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self, GroupError> {
        let order = mul.len();
        if order == 0 || mul.iter().any(|row| row.len() != order) {
            return Err(GroupError::Shape);
        }
        let flat: Vec<usize> = mul.into_iter().flatten().collect();
        let at = |i: usize, j: usize| flat[i * order + j];

        for (i, &x) in flat.iter().enumerate() {
            if x >= order {
                return Err(GroupError::RowNotPermutation(i / order));
            }
        }
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::Identity(i));
            }
        }
        for i in 0..order {
            let mut seen = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut seen[at(i, j)], true) {
                    return Err(GroupError::RowNotPermutation(i));
                }
            }
        }
        for j in 0..order {
            let mut seen = vec![false; order];
            for i in 0..order {
                if std::mem::replace(&mut seen[at(i, j)], true) {
                    return Err(GroupError::ColumnNotPermutation(j));
                }
            }
        }
        check_associativity(order, &flat)?;

        for (k, (name, index)) in generators.iter().enumerate() {
            let reason = if !is_valid_generator_name(name) {
                Some("names must be lowercase identifiers".to_string())
            } else if name == "t" {
                Some("`t` is reserved for the translation generator".to_string())
            } else if *index >= order {
                Some(format!("index {index} out of range"))
            } else if generators[..k].iter().any(|(other, _)| other == name) {
                Some("duplicate name".to_string())
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(GroupError::Generator {
                    name: name.clone(),
                    reason,
                });
            }
        }

        let inverses = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| at(i, j) == 0)
                    .expect("rows are permutations")
            })
            .collect();
        let mut group = FiniteGroupTable {
            order,
            mul: flat,
            inverses,
            generators,
            lengths: Vec::new(),
            parents: Vec::new(),
        };
        group.compute_lengths()?;
        Ok(group)
    }

    fn compute_lengths(&mut self) -> Result<(), GroupError> {
        let mut lengths = vec![u32::MAX; self.order];
        let mut parents = vec![None; self.order];
        lengths[0] = 0;
        let mut queue = VecDeque::from([0]);
        let letters = self.letters();
        while let Some(x) = queue.pop_front() {
            for &g in &letters {
                let y = self.product(x, self.letter_element(g));
                if lengths[y] == u32::MAX {
                    lengths[y] = lengths[x] + 1;
                    parents[y] = Some((x, g));
                    queue.push_back(y);
                }
            }
        }
        let reached = lengths.iter().filter(|&&l| l != u32::MAX).count();
        if reached != self.order {
            return Err(GroupError::DoesNotGenerate {
                reached,
                order: self.order,
            });
        }
        self.lengths = lengths;
        self.parents = parents;
        Ok(())
    }

    /// Parses the `wreath-group-table v1` text format.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, message: &str| GroupError::Parse {
            line,
            message: message.to_string(),
        };

        let (line, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
        if header.split_whitespace().collect::<Vec<_>>().join(" ") != FORMAT_HEADER {
            return Err(err(line, "expected header `wreath-group-table v1`"));
        }
        let (line, order_line) = lines
            .next()
            .ok_or_else(|| err(line, "missing `order` line"))?;
        let order: usize = match order_line.split_whitespace().collect::<Vec<_>>()[..] {
            ["order", n] => n.parse().map_err(|_| err(line, "malformed order"))?,
            _ => return Err(err(line, "expected `order N`")),
        };
        if order == 0 {
            return Err(err(line, "order must be at least 1"));
        }

        let mut generators = Vec::new();
        let mut last = line;
        loop {
            let (line, l) = lines
                .next()
                .ok_or_else(|| err(last, "missing `table` line"))?;
            last = line;
            match l.split_whitespace().collect::<Vec<_>>()[..] {
                ["table"] => break,
                ["gen", name, index] => {
                    let index = index
                        .parse()
                        .map_err(|_| err(line, "malformed generator index"))?;
                    generators.push((name.to_string(), index));
                }
                _ => return Err(err(line, "expected `gen <name> <index>` or `table`")),
            }
        }

        let mut mul = Vec::with_capacity(order);
        for _ in 0..order {
            let (line, l) = lines
                .next()
                .ok_or_else(|| err(last, "table has too few rows"))?;
            last = line;
            let row = l
                .split_whitespace()
                .map(|x| x.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(line, "malformed table entry"))?;
            if row.len() != order {
                return Err(err(
                    line,
                    &format!("expected {order} entries, found {}", row.len()),
                ));
            }
            mul.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(err(line, "trailing content after table"));
        }
        Self::from_table(mul, generators)
    }

    /// Renders the table in the `wreath-group-table v1` format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{FORMAT_HEADER}\norder {}\n", self.order);
        for (name, index) in &self.generators {
            out.push_str(&format!("gen {name} {index}\n"));
        }
        out.push_str("table\n");
        for row in self.mul.chunks(self.order) {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// `|x|_G`.
    pub fn length(&self, x: usize) -> u32 {
        self.lengths[x]
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// Generators and their inverses, in the order `g1, g1^-1, g2, ...`.
    pub fn letters(&self) -> Vec<GroupLetter> {
        (0..self.generators.len())
            .flat_map(|generator| [false, true].map(|inverse| GroupLetter { generator, inverse }))
            .collect()
    }

    pub fn letter_element(&self, g: GroupLetter) -> usize {
        let x = self.generators[g.generator].1;
        if g.inverse {
            self.inverses[x]
        } else {
            x
        }
    }

    pub fn letter_name(&self, g: GroupLetter) -> String {
        let name = &self.generators[g.generator].0;
        if g.inverse {
            name.to_uppercase()
        } else {
            name.clone()
        }
    }

    pub fn alphabet(&self) -> Vec<(&str, GroupLetter)> {
        self.generators
            .iter()
            .enumerate()
            .map(|(generator, (name, _))| {
                (
                    name.as_str(),
                    GroupLetter {
                        generator,
                        inverse: false,
                    },
                )
            })
            .collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word<GroupLetter>, WordError> {
        parse_word(text, &self.alphabet())
    }

    pub fn render_word(&self, word: &Word<GroupLetter>) -> String {
        word.render_with(|g| self.letter_name(g))
    }

    /// Evaluates a word through the multiplication table.
    pub fn eval(&self, word: &Word<GroupLetter>) -> usize {
        word.letters()
            .iter()
            .fold(0, |x, &g| self.product(x, self.letter_element(g)))
    }

    /// A shortest word for `x`, read off the breadth-first parent chain.
    pub fn group_geodesic(&self, x: usize) -> Word<GroupLetter> {
        let mut letters = Vec::with_capacity(self.lengths[x] as usize);
        let mut at = x;
        while let Some((prev, g)) = self.parents[at] {
            letters.push(g);
            at = prev;
        }
        letters.reverse();
        Word::new(letters)
    }

    /// Every shortest word for `x`.
    pub fn all_geodesics(&self, x: usize) -> Vec<Word<GroupLetter>> {
        let letters = self.letters();
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.collect_geodesics(x, &letters, &mut suffix, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_geodesics(
        &self,
        x: usize,
        letters: &[GroupLetter],
        suffix: &mut Vec<GroupLetter>,
        out: &mut Vec<Word<GroupLetter>>,
    ) {
        if x == 0 {
            out.push(Word::new(suffix.iter().rev().copied().collect()));
            return;
        }
        for &g in letters {
            let prev = self.product(x, self.inverse(self.letter_element(g)));
            if self.lengths[prev] + 1 == self.lengths[x] {
                suffix.push(g);
                self.collect_geodesics(prev, letters, suffix, out);
                suffix.pop();
            }
        }
    }

    /// True when no generator or inverse increases the length of `x`.
    pub fn is_dead_end(&self, x: usize) -> bool {
        self.letters()
            .into_iter()
            .all(|g| self.lengths[self.product(x, self.letter_element(g))] <= self.lengths[x])
    }
}

impl fmt::Display for FiniteGroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|(name, i)| format!("{name}:{i}"))
            .collect();
        write!(f, "order={} gens={}", self.order, gens.join(","))
    }
}

fn check_associativity(order: usize, flat: &[usize]) -> Result<(), GroupError> {
    let at = |i: usize, j: usize| flat[i * order + j];
    let check = |x, y, z| {
        if at(at(x, y), z) == at(x, at(y, z)) {
            Ok(())
        } else {
            Err(GroupError::NotAssociative(x, y, z))
        }
    };
    if order <= EXHAUSTIVE_ASSOCIATIVITY_ORDER {
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    check(x, y, z)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_ASSOCIATIVITY_TRIPLES {
            check(
                rng.random_range(0..order),
                rng.random_range(0..order),
                rng.random_range(0..order),
            )?;
        }
    }
    Ok(())
}

/// Reads a group table file.
pub fn load_group_file(path: impl AsRef<Path>) -> Result<FiniteGroupTable, GroupError> {
    let text = std::fs::read_to_string(path)?;
    FiniteGroupTable::parse(&text)
}

/// `Z_k` generated by `a = 1`.
pub fn cyclic_group(k: usize) -> Result<FiniteGroupTable, GroupError> {
    if k < 2 {
        return Err(GroupError::CyclicOrder(k));
    }
    let mul = (0..k)
        .map(|i| (0..k).map(|j| (i + j) % k).collect())
        .collect();
    FiniteGroupTable::from_table(mul, vec![("a".to_string(), 1)])
}
