//! Exhaustive checkers. Nothing here calls the generators; the checks are
//! written directly against the definitions of the objects being encoded.

use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::counting::cycle_length;
use crate::error::{Error, Result};
use crate::poset::{antichains, Poset, DEFAULT_MAX_ANTICHAINS};
use crate::weight_range::{Walk, WeightRangeParams};
use crate::word::{Cycle, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Why a cycle was rejected, with the first offending window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    WrongLength { expected: String, found: usize },
    WrongAlphabet { expected: u32, found: u32 },
    WrongWindowLength { expected: usize, found: usize },
    WeightOutOfRange { position: usize, window: Word },
    Duplicate { first: usize, second: usize, window: Word },
    NotMonotone { position: usize, window: Word },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::WrongLength { expected, found } => {
                write!(f, "cycle has length {found}, expected {expected}")
            }
            Counterexample::WrongAlphabet { expected, found } => {
                write!(f, "cycle alphabet has {found} letters, expected {expected}")
            }
            Counterexample::WrongWindowLength { expected, found } => {
                write!(f, "window length is {found}, expected {expected}")
            }
            Counterexample::WeightOutOfRange { position, window } => {
                write!(f, "window at {position} ({window}) has weight {} outside the range", window.weight())
            }
            Counterexample::Duplicate { first, second, window } => {
                write!(f, "windows at {first} and {second} are both {window}")
            }
            Counterexample::NotMonotone { position, window } => {
                write!(f, "window at {position} ({window}) does not decode to an inclusion-monotone assignment")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub verdict: Verdict,
    pub length: usize,
    pub expected_length: String,
    pub windows_checked: usize,
    pub distinct_windows: usize,
    pub counterexample: Option<Counterexample>,
}

impl CycleReport {
    fn fail(length: usize, expected_length: String, counterexample: Counterexample) -> CycleReport {
        CycleReport {
            verdict: Verdict::Fail,
            length,
            expected_length,
            windows_checked: 0,
            distinct_windows: 0,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn render_human(&self) -> String {
        let mut out = format!(
            "{}: length {} (expected {}), {} windows checked, {} distinct",
            self.verdict, self.length, self.expected_length, self.windows_checked, self.distinct_windows
        );
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("\ncounterexample: {c}"));
        }
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = format!(
            "verdict={}\nlength={}\nexpected_length={}\nwindows_checked={}\ndistinct_windows={}\n",
            self.verdict, self.length, self.expected_length, self.windows_checked, self.distinct_windows
        );
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("counterexample={c}\n"));
        }
        out
    }
}

/// Scans every window, reporting the first that `reject` flags or that repeats
/// an earlier one.
fn scan_windows(
    cycle: &Cycle,
    expected_length: String,
    mut reject: impl FnMut(usize, &[Letter]) -> Option<Counterexample>,
) -> CycleReport {
    let n = cycle.window_length();
    let len = cycle.len();
    let letters = cycle.letters();
    // the cycle followed by its first n-1 letters, so every window is a slice
    let unrolled: Vec<Letter> = letters.iter().chain(letters.iter().cycle().take(n - 1)).copied().collect();
    let mut seen: std::collections::HashMap<&[Letter], usize> = std::collections::HashMap::with_capacity(len);
    for position in 0..len {
        let window = &unrolled[position..position + n];
        if let Some(counterexample) = reject(position, window) {
            return CycleReport {
                verdict: Verdict::Fail,
                length: len,
                expected_length,
                windows_checked: position + 1,
                distinct_windows: seen.len(),
                counterexample: Some(counterexample),
            };
        }
        if let Some(&first) = seen.get(window) {
            return CycleReport {
                verdict: Verdict::Fail,
                length: len,
                expected_length,
                windows_checked: position + 1,
                distinct_windows: seen.len(),
                counterexample: Some(Counterexample::Duplicate {
                    first,
                    second: position,
                    window: cycle.window(position),
                }),
            };
        }
        seen.insert(window, position);
    }
    CycleReport {
        verdict: Verdict::Pass,
        length: len,
        expected_length,
        windows_checked: len,
        distinct_windows: seen.len(),
        counterexample: None,
    }
}

/// Checks that `cycle` lists every `n`-letter word of weight in `[s, t]`
/// exactly once: the length is `|W|`, every window is weight-legal and all
/// windows are distinct.
pub fn verify_universal_cycle(cycle: &Cycle, params: &WeightRangeParams) -> CycleReport {
    let expected = cycle_length(params);
    let expected_text = expected.to_string();
    if cycle.alphabet_size() != params.k() {
        return CycleReport::fail(
            cycle.len(),
            expected_text,
            Counterexample::WrongAlphabet { expected: params.k(), found: cycle.alphabet_size() },
        );
    }
    if cycle.window_length() != params.n() {
        return CycleReport::fail(
            cycle.len(),
            expected_text,
            Counterexample::WrongWindowLength { expected: params.n(), found: cycle.window_length() },
        );
    }
    if expected.to_usize() != Some(cycle.len()) {
        return CycleReport::fail(
            cycle.len(),
            expected_text.clone(),
            Counterexample::WrongLength { expected: expected_text, found: cycle.len() },
        );
    }
    let range = params.s()..=params.t();
    scan_windows(cycle, expected_text, |position, window| {
        let weight: u64 = window.iter().map(|&l| u64::from(l)).sum();
        (!range.contains(&weight))
            .then(|| Counterexample::WeightOutOfRange { position, window: cycle.window(position) })
    })
}

/// Checks that `cycle` lists every assignment of `{1, .., n}` to `poset`
/// exactly once, decoding letter `i` as the `i`-th antichain in canonical
/// order.
pub fn verify_poset_cycle(cycle: &Cycle, poset: &Poset, n: usize) -> Result<CycleReport> {
    let all = antichains(poset, DEFAULT_MAX_ANTICHAINS)?;
    let alpha = all.len();
    if cycle.alphabet_size() as usize != alpha {
        return Err(Error::Poset(format!(
            "cycle alphabet has {} letters but the poset has {alpha} antichains",
            cycle.alphabet_size()
        )));
    }
    let expected = num_bigint::BigUint::from(alpha).pow(n as u32);
    let expected_text = expected.to_string();
    if cycle.window_length() != n {
        return Ok(CycleReport::fail(
            cycle.len(),
            expected_text,
            Counterexample::WrongWindowLength { expected: n, found: cycle.window_length() },
        ));
    }
    if expected.to_usize() != Some(cycle.len()) {
        return Ok(CycleReport::fail(
            cycle.len(),
            expected_text.clone(),
            Counterexample::WrongLength { expected: expected_text, found: cycle.len() },
        ));
    }
    // membership[l][e]: a ground element coded by letter l lies in element e
    let membership: Vec<Vec<bool>> =
        all.iter().map(|a| (0..poset.len()).map(|e| a.members().iter().any(|&m| poset.leq(m, e))).collect()).collect();
    let order = poset.order_pairs();
    Ok(scan_windows(cycle, expected_text, |position, window| {
        let monotone = window.iter().all(|&l| {
            let inside = &membership[usize::from(l)];
            order.iter().all(|&(lo, hi)| !inside[lo] || inside[hi])
        });
        (!monotone).then(|| Counterexample::NotMonotone { position, window: cycle.window(position) })
    }))
}

/// Every `n`-letter word with weight in `[s, t]`, by brute force over all
/// `k^n` words.
pub fn enumerate_objects(params: &WeightRangeParams, cap: u64) -> Result<Vec<Word>> {
    let k = u64::from(params.k());
    let total = k.checked_pow(params.n() as u32).filter(|&total| total <= cap);
    let total = total.ok_or_else(|| Error::CapExceeded {
        what: "brute-force word count",
        size: num_bigint::BigUint::from(k).pow(params.n() as u32).to_string(),
        limit: cap,
    })?;
    let n = params.n();
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut letters = vec![0 as Letter; n];
        for slot in letters.iter_mut().rev() {
            *slot = (rest % k) as Letter;
            rest /= k;
        }
        let weight: u64 = letters.iter().map(|&l| u64::from(l)).sum();
        if (params.s()..=params.t()).contains(&weight) {
            out.push(Word::new(letters, params.k())?);
        }
    }
    Ok(out)
}

/// One vertex of a checked walk, with the weight of the edge leaving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkRow {
    pub vertex: Word,
    pub vertex_weight: u64,
    pub legal_vertex: bool,
    /// `None` on the last row.
    pub edge_weight: Option<u64>,
    pub legal_edge: bool,
    pub danger: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkReport {
    pub verdict: Verdict,
    pub rows: Vec<WalkRow>,
    /// Index of the first illegal row.
    pub first_failure: Option<usize>,
}

impl WalkReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn vertex_weights(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.vertex_weight).collect()
    }

    pub fn edge_weights(&self) -> Vec<u64> {
        self.rows.iter().filter_map(|r| r.edge_weight).collect()
    }

    /// The walk as a vertex/edge trace:
    ///
    /// ```text
    /// {0,0,0,2,2,5,5,5,3,3} 25
    /// ↓ 28
    /// {0,0,2,2,5,5,5,3,3,3} 28, D
    /// ```
    ///
    /// `D` marks a vertex whose first letter cannot be rewritten towards the
    /// middle without coming within `x` of an extreme vertex weight.
    pub fn render_trace(&self) -> String {
        let mut lines = Vec::with_capacity(self.rows.len() * 2);
        for row in &self.rows {
            let flag = if row.danger { ", D" } else { "" };
            lines.push(format!("{{{}}} {}{flag}", row.vertex, row.vertex_weight));
            if let Some(edge) = row.edge_weight {
                lines.push(format!("↓ {edge}"));
            }
        }
        lines.join("\n")
    }
}

/// Whether the vertex is in a danger state: its weight is within `x` of `t`
/// and its first letter is at most `x`, or its weight is within `x` of the
/// vertex floor and its first letter is at least `x + 1`.
pub fn is_danger(vertex: &Word, params: &WeightRangeParams) -> bool {
    let m = vertex.len() as u64;
    let x = params.s() / m;
    let weight = vertex.weight();
    let first = u64::from(vertex.letters()[0]);
    let near_top = weight <= params.t() && params.t() - weight <= x;
    let near_floor = weight >= params.vertex_floor() && weight - params.vertex_floor() <= x;
    (near_top && first <= x) || (near_floor && first > x)
}

/// Replays a walk, checking every vertex weight against
/// `[max(0, s-(k-1)), t]` and every edge label weight against `[s, t]`.
pub fn verify_walk(walk: &Walk, params: &WeightRangeParams) -> WalkReport {
    let vertices = walk.vertices();
    let floor = params.vertex_floor();
    let mut rows = Vec::with_capacity(vertices.len());
    let mut first_failure = None;
    for (i, vertex) in vertices.iter().enumerate() {
        let vertex_weight = vertex.weight();
        let legal_vertex = vertex.len() == params.vertex_len()
            && vertex.alphabet_size() == params.k()
            && (floor..=params.t()).contains(&vertex_weight);
        let edge_weight = walk.steps().get(i).map(|&l| vertex_weight + u64::from(l));
        let legal_edge = edge_weight.is_none_or(|w| (params.s()..=params.t()).contains(&w));
        if first_failure.is_none() && !(legal_vertex && legal_edge) {
            first_failure = Some(i);
        }
        rows.push(WalkRow {
            danger: legal_vertex && is_danger(vertex, params),
            vertex: vertex.clone(),
            vertex_weight,
            legal_vertex,
            edge_weight,
            legal_edge,
        });
    }
    WalkReport { verdict: if first_failure.is_none() { Verdict::Pass } else { Verdict::Fail }, rows, first_failure }
}

/// Distinct windows of a cycle, as a set.
pub fn window_set(cycle: &Cycle) -> HashSet<Word> {
    cycle.windows().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: u32, s: u64, t: u64) -> WeightRangeParams {
        WeightRangeParams::new(n, k, s, t).unwrap()
    }

    #[test]
    fn classic_strings_pass() {
        let c = Cycle::parse("1110011010", 2, 4).unwrap();
        assert!(verify_universal_cycle(&c, &params(4, 2, 2, 3)).passed());
        let c = Cycle::parse("11101000", 2, 3).unwrap();
        assert!(verify_universal_cycle(&c, &params(3, 2, 0, 3)).passed());
    }

    #[test]
    fn mutated_string_fails_on_duplicate() {
        let c = Cycle::parse("1110011011", 2, 4).unwrap();
        let report = verify_universal_cycle(&c, &params(4, 2, 2, 3));
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(matches!(
            report.counterexample,
            Some(Counterexample::Duplicate { .. }) | Some(Counterexample::WeightOutOfRange { .. })
        ));
    }

    #[test]
    fn wrong_length_and_alphabet() {
        let c = Cycle::parse("111001101", 2, 4).unwrap();
        assert!(matches!(
            verify_universal_cycle(&c, &params(4, 2, 2, 3)).counterexample,
            Some(Counterexample::WrongLength { .. })
        ));
        let c = Cycle::parse("1110011010", 3, 4).unwrap();
        assert!(matches!(
            verify_universal_cycle(&c, &params(4, 2, 2, 3)).counterexample,
            Some(Counterexample::WrongAlphabet { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_objects(&params(4, 2, 2, 3), 1000).unwrap().len(), 10);
        assert_eq!(enumerate_objects(&params(3, 2, 0, 3), 1000).unwrap().len(), 8);
        assert_eq!(enumerate_objects(&params(2, 3, 0, 4), 1000).unwrap().len(), 9);
        assert!(enumerate_objects(&params(20, 3, 0, 40), 1000).is_err());
    }

    #[test]
    fn walk_checks() {
        let p = params(11, 6, 25, 30);
        let start = Word::parse("0,0,0,2,2,5,5,5,3,3", 6).unwrap();
        assert!(verify_walk(&Walk::new(start), &p).passed());
        let top = Word::new(vec![3; 10], 6).unwrap();
        let report = verify_walk(&Walk::from_steps(top, vec![5]).unwrap(), &p);
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.first_failure, Some(0));
        assert_eq!(report.edge_weights(), vec![35]);
    }

    #[test]
    fn poset_cycle_checks() {
        let chain = crate::poset::fixtures::two_chain();
        // ccaabbcba with a -> 0 (empty), b -> 2 ({B}), c -> 1 ({A})
        let good = Cycle::parse("110022120", 3, 2).unwrap();
        assert!(verify_poset_cycle(&good, &chain, 2).unwrap().passed());
        let bad = Cycle::parse("110022122", 3, 2).unwrap();
        assert!(!verify_poset_cycle(&bad, &chain, 2).unwrap().passed());
        let mismatch = Cycle::parse("0110", 2, 2).unwrap();
        assert!(verify_poset_cycle(&mismatch, &chain, 2).is_err());
    }
}
