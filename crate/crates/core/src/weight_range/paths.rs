//! Constructive walks from any vertex of `D` to the sink vertex.
//!
//! The walk to the sink is assembled from four stages:
//!
//! 1. [`path_reduce_weight`] brings a vertex heavier than `s` down to `s`,
//! 2. [`path_increase_weight`] brings a lighter vertex up to `s`,
//! 3. [`path_normalize_letters`] rewrites a weight-`s` vertex until it only
//!    uses the letters `x` and `x + 1`,
//! 4. [`path_sort_to_sink`] permutes those letters into the sink vertex.
//!
//! Every step only ever changes the first letter of the current vertex
//! (dropping it and appending a letter at the end) and is checked against
//! the edge rule before it is taken.

use std::collections::VecDeque;

use super::graph::sink_vertex;
use super::{Walk, WeightRangeParams};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Step budget for a single routine.
///
/// `4nk(t-s+k)` bounds the weight-changing stages. The letter-rewriting
/// stages move one unit of weight at a time across up to `n-1` positions,
/// which needs a further `2n^2 k`.
pub fn step_cap(params: &WeightRangeParams) -> usize {
    let n = params.n();
    let k = params.k() as usize;
    let spread = (params.t() - params.s()) as usize;
    4 * n * k * (spread + k) + 2 * n * n * k
}

/// Incremental walk builder that refuses illegal steps.
struct Walker<'a> {
    params: &'a WeightRangeParams,
    routine: &'static str,
    start: Word,
    current: VecDeque<Letter>,
    weight: u64,
    steps: Vec<Letter>,
    cap: usize,
}

impl<'a> Walker<'a> {
    fn new(params: &'a WeightRangeParams, routine: &'static str, start: &Word) -> Result<Walker<'a>> {
        params.check_vertex(routine, start)?;
        Ok(Walker {
            params,
            routine,
            start: start.clone(),
            current: start.letters().iter().copied().collect(),
            weight: start.weight(),
            steps: Vec::new(),
            cap: step_cap(params),
        })
    }

    fn front(&self) -> Letter {
        self.current[0]
    }

    fn step(&mut self, letter: Letter) -> Result<()> {
        if self.steps.len() >= self.cap {
            return Err(Error::StepCapExceeded { routine: self.routine, cap: self.cap });
        }
        let label = self.weight + u64::from(letter);
        let next = label - u64::from(self.front());
        let legal = u32::from(letter) < self.params.k()
            && (self.params.s()..=self.params.t()).contains(&label)
            && self.params.is_legal_vertex_weight(next);
        if !legal {
            return Err(Error::Internal(format!(
                "{} tried an illegal step: vertex weight {}, letter {letter}",
                self.routine, self.weight
            )));
        }
        self.current.pop_front();
        self.current.push_back(letter);
        self.weight = next;
        self.steps.push(letter);
        Ok(())
    }

    fn rotate(&mut self) -> Result<()> {
        self.step(self.front())
    }

    fn finish(self) -> Walk {
        Walk { start: self.start, steps: self.steps }
    }
}

/// Walks a vertex of weight in `[s+1, t]` to a vertex of weight `s`.
///
/// Leading zeros are rotated to the back. Then, with first letter `f` and
/// current weight `t - r`, the letter `min(f - 1, r)` is appended; this
/// lowers the weight by one or sets it to `t - f >= s`.
pub fn path_reduce_weight(vertex: &Word, params: &WeightRangeParams) -> Result<Walk> {
    const ROUTINE: &str = "path_reduce_weight";
    let mut walker = Walker::new(params, ROUTINE, vertex)?;
    if walker.weight <= params.s() {
        return Err(Error::Precondition {
            routine: ROUTINE,
            detail: format!("weight {} is not above s = {}", walker.weight, params.s()),
        });
    }
    while walker.weight > params.s() {
        while walker.front() == 0 {
            walker.rotate()?;
        }
        let f = u64::from(walker.front());
        let slack = params.t() - walker.weight;
        walker.step((f - 1).min(slack) as Letter)?;
    }
    Ok(walker.finish())
}

/// Walks a vertex of weight in `[max(0, s-(k-1)), s-1]` to a vertex of
/// weight `s`.
///
/// Leading copies of `k - 1` are rotated to the back. Then, with first
/// letter `f` and weight `s - r`, the letter `max(r, f + 1)` is appended;
/// the weight rises by one or becomes `s - f`.
pub fn path_increase_weight(vertex: &Word, params: &WeightRangeParams) -> Result<Walk> {
    const ROUTINE: &str = "path_increase_weight";
    let mut walker = Walker::new(params, ROUTINE, vertex)?;
    if walker.weight >= params.s() {
        return Err(Error::Precondition {
            routine: ROUTINE,
            detail: format!("weight {} is not below s = {}", walker.weight, params.s()),
        });
    }
    let top = params.max_letter();
    while walker.weight < params.s() {
        let mut rotated = 0;
        while walker.front() == top {
            if rotated == params.vertex_len() {
                return Err(Error::Internal(format!("{ROUTINE}: vertex is all {top}s")));
            }
            walker.rotate()?;
            rotated += 1;
        }
        let f = u64::from(walker.front());
        let deficit = params.s() - walker.weight;
        walker.step(deficit.max(f + 1) as Letter)?;
    }
    Ok(walker.finish())
}

/// Walks a weight-`s` vertex to a weight-`s` vertex whose letters are all
/// `x` or `x + 1`, where `x = s div (n-1)`.
///
/// Letters above `x + 1` and below `x` are repaired one unit at a time. A
/// unit taken from an over-full letter is carried forward (the vertex sits
/// at weight `s - 1`) and dropped on the next letter that is at most `x`;
/// symmetrically, a unit added to an under-full letter is carried (weight
/// `s + 1`) until the next letter that is at least `x + 1` gives one up. The
/// vertex weight therefore never leaves `[s-1, s+1]`, which keeps every
/// carrying step legal.
pub fn path_normalize_letters(vertex: &Word, params: &WeightRangeParams) -> Result<Walk> {
    const ROUTINE: &str = "path_normalize_letters";
    let mut walker = Walker::new(params, ROUTINE, vertex)?;
    if walker.weight != params.s() {
        return Err(Error::Precondition {
            routine: ROUTINE,
            detail: format!("weight {} differs from s = {}", walker.weight, params.s()),
        });
    }
    let m = params.vertex_len();
    let x = (params.s() / m as u64) as Letter;
    let is_bad = |l: Letter| l < x || l > x + 1;

    #[derive(Clone, Copy, PartialEq)]
    enum Carry {
        None,
        // one unit removed, looking for a letter <= x to receive it
        Deficit,
        // one unit added, looking for a letter >= x + 1 to give it up
        Surplus,
    }

    let mut carry = Carry::None;
    let mut bad = vertex.letters().iter().filter(|&&l| is_bad(l)).count();
    loop {
        let f = walker.front();
        let replacement = match carry {
            Carry::None if bad == 0 => break,
            Carry::None if f > x + 1 => {
                carry = Carry::Deficit;
                f - 1
            }
            Carry::None if f < x => {
                carry = Carry::Surplus;
                f + 1
            }
            Carry::Deficit if f <= x => {
                carry = Carry::None;
                f + 1
            }
            Carry::Surplus if f > x => {
                carry = Carry::None;
                f - 1
            }
            _ => f,
        };
        bad = bad + usize::from(is_bad(replacement)) - usize::from(is_bad(f));
        walker.step(replacement)?;
    }
    debug_assert!(!walker.current.iter().any(|&l| is_bad(l)));
    debug_assert_eq!(walker.weight, params.s());
    Ok(walker.finish())
}

/// Counts pairs `i < j` with an `x + 1` at `i` and an `x` at `j`.
fn inversions(letters: &[Letter], x: Letter) -> usize {
    let mut highs = 0;
    let mut total = 0;
    for &l in letters {
        if l == x {
            total += highs;
        } else {
            highs += 1;
        }
    }
    total
}

/// Walks a weight-`s` vertex made of `a` copies of `x` and `b` copies of
/// `x + 1` to the sink vertex `x^a (x+1)^b`.
///
/// The vertex is first rotated to the alignment with the fewest misplaced
/// pairs. Then repeated full passes swap each adjacent `(x+1, x)` pair into
/// `(x, x+1)`: the first letter is replaced by `x` (weight `s - 1`) and the
/// next by `x + 1` (weight back to `s`). A pass visits every position once,
/// so the alignment is kept and the walk ends on the sink.
pub fn path_sort_to_sink(vertex: &Word, params: &WeightRangeParams) -> Result<Walk> {
    const ROUTINE: &str = "path_sort_to_sink";
    let mut walker = Walker::new(params, ROUTINE, vertex)?;
    let sink = sink_vertex(params);
    let m = params.vertex_len();
    let x = sink.letters()[0];
    let letters = vertex.letters();
    let composition_ok = walker.weight == params.s() && letters.iter().all(|&l| l == x || l == x + 1);
    if !composition_ok {
        return Err(Error::Precondition {
            routine: ROUTINE,
            detail: format!("{vertex} is not a weight-{} word over {{{x}, {}}}", params.s(), x + 1),
        });
    }

    let mut rotated = letters.to_vec();
    let mut best = (inversions(&rotated, x), 0);
    for offset in 1..m {
        rotated.rotate_left(1);
        let inv = inversions(&rotated, x);
        if inv < best.0 {
            best = (inv, offset);
        }
    }
    for _ in 0..best.1 {
        walker.rotate()?;
    }

    while walker.current.iter().copied().ne(sink.letters().iter().copied()) {
        let mut position = 0;
        while position < m {
            let swap = position + 1 < m && walker.current[0] == x + 1 && walker.current[1] == x;
            if swap {
                walker.step(x)?;
                walker.step(x + 1)?;
                position += 2;
            } else {
                walker.rotate()?;
                position += 1;
            }
        }
    }
    Ok(walker.finish())
}

/// Walks any legal vertex to the sink vertex by chaining the four stages.
pub fn path_to_sink(vertex: &Word, params: &WeightRangeParams) -> Result<Walk> {
    params.check_vertex("path_to_sink", vertex)?;
    let mut walk = Walk::new(vertex.clone());
    let weight = vertex.weight();
    if weight > params.s() {
        walk.extend(path_reduce_weight(vertex, params)?)?;
    } else if weight < params.s() {
        walk.extend(path_increase_weight(vertex, params)?)?;
    }
    walk.extend(path_normalize_letters(&walk.end(), params)?)?;
    walk.extend(path_sort_to_sink(&walk.end(), params)?)?;
    Ok(walk)
}
