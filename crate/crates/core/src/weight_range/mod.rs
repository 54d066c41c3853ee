//! De Bruijn cycles for `n`-letter words over `{0, .., k-1}` whose weight
//! lies in `[s, t]`.
//!
//! The cycle is an Eulerian circuit of the overlap digraph `D`: vertices are
//! the `(n-1)`-letter words of weight in `[max(0, s-(k-1)), t]`, and vertex
//! `v` has an edge labelled `v ++ [l]` to `v[1..] ++ [l]` whenever that
//! `n`-letter label has weight in `[s, t]`. Every vertex is balanced, and the
//! path routines in [`paths`] walk any vertex to the sink vertex, which
//! certifies weak connectivity.

mod euler;
mod graph;
pub mod paths;

pub use euler::{eulerian_cycle, generate_full, Limits};
pub use graph::{degrees, enumerate_vertices, is_legal_edge, sink_vertex, weakly_connected};
pub use paths::{path_increase_weight, path_normalize_letters, path_reduce_weight, path_sort_to_sink, path_to_sink};

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::word::{check_alphabet, Letter, Word};

/// The tuple `(n, k, s, t)` with `0 <= s`, `s + k - 1 <= t <= n(k-1)` and
/// `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightRangeParams {
    n: usize,
    k: u32,
    s: u64,
    t: u64,
}

impl WeightRangeParams {
    pub fn new(n: usize, k: u32, s: u64, t: u64) -> Result<WeightRangeParams> {
        check_alphabet(k)?;
        if n < 2 {
            return Err(Error::InvalidParams(format!("requires n >= 2, got n = {n}")));
        }
        let spread = u64::from(k - 1);
        if s + spread > t {
            return Err(Error::InvalidParams(format!("requires s+k-1 <= t, got s = {s}, k = {k}, t = {t}")));
        }
        let max = n as u64 * spread;
        if t > max {
            return Err(Error::InvalidParams(format!("requires t <= n(k-1) = {max}, got t = {t}")));
        }
        Ok(WeightRangeParams { n, k, s, t })
    }

    /// The unconstrained range `[0, n(k-1)]`.
    pub fn full(n: usize, k: u32) -> Result<WeightRangeParams> {
        check_alphabet(k)?;
        WeightRangeParams::new(n, k, 0, n as u64 * u64::from(k - 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn max_letter(&self) -> Letter {
        (self.k - 1) as Letter
    }

    /// Length of a vertex word, `n - 1`.
    pub fn vertex_len(&self) -> usize {
        self.n - 1
    }

    /// Smallest legal vertex weight, `max(0, s-(k-1))`.
    pub fn vertex_floor(&self) -> u64 {
        self.s.saturating_sub(u64::from(self.k - 1))
    }

    pub fn is_legal_vertex_weight(&self, weight: u64) -> bool {
        (self.vertex_floor()..=self.t).contains(&weight)
    }

    pub fn is_legal_vertex(&self, vertex: &Word) -> bool {
        vertex.len() == self.vertex_len()
            && vertex.alphabet_size() == self.k
            && self.is_legal_vertex_weight(vertex.weight())
    }

    /// Letters that may be appended to a vertex of the given weight. The
    /// range is empty when the weight is illegal.
    pub fn legal_letters(&self, vertex_weight: u64) -> RangeInclusive<u64> {
        let lo = self.s.saturating_sub(vertex_weight);
        let hi = self.t.saturating_sub(vertex_weight).min(u64::from(self.k - 1));
        if vertex_weight > self.t {
            return RangeInclusive::new(1, 0);
        }
        lo..=hi
    }

    pub(crate) fn check_vertex(&self, routine: &'static str, vertex: &Word) -> Result<()> {
        if vertex.alphabet_size() != self.k {
            return Err(Error::Precondition {
                routine,
                detail: format!("vertex alphabet {} differs from k = {}", vertex.alphabet_size(), self.k),
            });
        }
        if vertex.len() != self.vertex_len() {
            return Err(Error::LengthMismatch { expected: self.vertex_len(), found: vertex.len() });
        }
        if !self.is_legal_vertex_weight(vertex.weight()) {
            return Err(Error::Precondition {
                routine,
                detail: format!("vertex weight {} outside [{}, {}]", vertex.weight(), self.vertex_floor(), self.t),
            });
        }
        Ok(())
    }
}

/// A walk in the overlap digraph: a start vertex and the letters appended
/// at each step. Legality is not enforced here; see
/// [`crate::verify::verify_walk`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    start: Word,
    steps: Vec<Letter>,
}

impl Walk {
    pub fn new(start: Word) -> Walk {
        Walk { start, steps: Vec::new() }
    }

    pub fn from_steps(start: Word, steps: Vec<Letter>) -> Result<Walk> {
        if let Some(&bad) = steps.iter().find(|&&l| u32::from(l) >= start.alphabet_size()) {
            return Err(Error::LetterOutOfRange { letter: bad.into(), alphabet_size: start.alphabet_size() });
        }
        Ok(Walk { start, steps })
    }

    /// Builds a walk from its vertex sequence. Consecutive vertices must
    /// overlap in all but one letter.
    pub fn from_vertices(vertices: &[Word]) -> Result<Walk> {
        let (first, rest) = vertices.split_first().ok_or(Error::EmptyWord)?;
        let mut steps = Vec::with_capacity(rest.len());
        let mut previous = first;
        for next in rest {
            if next.len() != previous.len() || next.alphabet_size() != previous.alphabet_size() {
                return Err(Error::LengthMismatch { expected: previous.len(), found: next.len() });
            }
            let m = previous.len();
            if previous.letters()[1..] != next.letters()[..m - 1] {
                return Err(Error::Parse {
                    input: next.to_string(),
                    reason: format!("does not follow {previous} by one shift"),
                });
            }
            steps.push(next.letters()[m - 1]);
            previous = next;
        }
        Ok(Walk { start: first.clone(), steps })
    }

    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn steps(&self) -> &[Letter] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertex sequence, starting vertex included.
    pub fn vertices(&self) -> Vec<Word> {
        let mut current = self.start.letters().to_vec();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for &l in &self.steps {
            current.remove(0);
            current.push(l);
            out.push(Word::from_trusted(current.clone(), self.start.alphabet_size()));
        }
        out
    }

    pub fn end(&self) -> Word {
        let m = self.start.len();
        let mut all: Vec<Letter> = self.start.letters().to_vec();
        all.extend_from_slice(&self.steps);
        Word::from_trusted(all[all.len() - m..].to_vec(), self.start.alphabet_size())
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: Walk) -> Result<()> {
        if other.start != self.end() {
            return Err(Error::Internal(format!("cannot join walks: {} does not end at {}", self.end(), other.start)));
        }
        self.steps.extend(other.steps);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypothesis_is_enforced() {
        assert!(WeightRangeParams::new(4, 2, 2, 3).is_ok());
        let err = WeightRangeParams::new(4, 2, 2, 2).unwrap_err();
        assert!(err.to_string().contains("requires s+k-1 <= t"), "{err}");
        let err = WeightRangeParams::new(4, 2, 0, 5).unwrap_err();
        assert!(err.to_string().contains("requires t <= n(k-1)"), "{err}");
        assert!(WeightRangeParams::new(1, 2, 0, 1).unwrap_err().to_string().contains("n >= 2"));
        assert!(WeightRangeParams::new(3, 1, 0, 0).is_err());
    }

    #[test]
    fn floor_is_clamped() {
        let p = WeightRangeParams::new(11, 6, 25, 30).unwrap();
        assert_eq!(p.vertex_floor(), 20);
        let p = WeightRangeParams::new(5, 4, 1, 6).unwrap();
        assert_eq!(p.vertex_floor(), 0);
    }

    #[test]
    fn walk_vertices_and_end() {
        let start = Word::new(vec![0, 1, 1], 2).unwrap();
        let walk = Walk::from_steps(start.clone(), vec![0, 1]).unwrap();
        let vs: Vec<_> = walk.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(vs, ["0,1,1", "1,1,0", "1,0,1"]);
        assert_eq!(walk.end().letters(), &[1, 0, 1]);
        assert_eq!(Walk::from_vertices(&walk.vertices()).unwrap(), walk);
        assert!(Walk::from_steps(start, vec![2]).is_err());
    }
}
