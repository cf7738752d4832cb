//! Word metrics, geodesics and Cayley-graph phenomena for the lamplighter
//! groups `L_n = Z_n ≀ Z` and for wreath products `G ≀ Z` with `G` finite.
//!
//! Word length is computed in closed form from a lamp configuration and a
//! cursor, and every closed form can be checked against breadth-first
//! search on the Cayley graph ([`oracle`]).
//!
//! ```
//! use lamplighter::{LnParams, metric};
//!
//! let l2 = LnParams::new(2).unwrap();
//! let w = l2.eval(&l2.parse("t a T T a t").unwrap());
//! assert_eq!(metric::word_length(&w), 6);
//! assert_eq!(metric::emit_geodesic(&w).to_string(), "t a T T a t");
//! ```
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `lamplighter` binary exposes the same operations on the command line.

pub mod cli;
pub mod element;
pub mod finite_group;
pub mod metric;
pub mod oracle;
pub mod phenomena;
pub mod tour;
pub mod word;
pub mod wreath;

pub use element::{GenLetter, Generator, LampConfig, LnElement, LnParams};
pub use finite_group::{cyclic_group, load_group_file, FiniteGroupTable, GroupLetter};
pub use oracle::{BallIndex, CayleyGraph, Depth};
pub use tour::{Extents, Side};
pub use word::{parse_word, Letter, Word};
pub use wreath::{WreathElement, WreathLetter, WreathProduct};
