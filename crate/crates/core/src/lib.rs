//! De Bruijn cycles for k-ary words with weight in a prescribed interval and
//! for assignments of a ground set to the elements of a poset.
//!
//! * [`word`]: words, cycles and their text forms.
//! * [`counting`]: exact counts `A(n, k, j)` of weight-`j` words.
//! * [`weight_range`]: the overlap digraph, constructive walks to its sink
//!   vertex, and Eulerian-circuit generation.
//! * [`poset`]: antichains, up-closed colorings and assignment cycles.
//! * [`verify`]: exhaustive checkers used as ground truth.
//! * [`cli`]: the `dbcycle` command-line tool.

pub mod cli;
pub mod counting;
pub mod error;
pub mod poset;
pub mod verify;
pub mod weight_range;
pub mod word;

pub use error::{Error, Result};
pub use word::{Cycle, Format, Letter, Word};
