//! De Bruijn cycles of assignments of `{1, .., n}` to the elements of a
//! finite poset.
//!
//! Each ground element `j` is placed in an up-closed set of poset elements,
//! and up-closed `{0,1}`-colorings correspond one-to-one with antichains
//! (the minimal elements colored 1). Coding the `alpha` antichains as the
//! letters `0..alpha` turns any de Bruijn cycle of `alpha`-ary `n`-words into
//! a cycle of the `alpha^n` assignments.
//!
//! Posets are given by their cover relation (the Hasse diagram). Covers that
//! are implied by a longer chain are rejected, not silently dropped.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::weight_range::{generate_full, Limits};
use crate::word::{Cycle, Letter};

/// Default bound on the number of antichains.
pub const DEFAULT_MAX_ANTICHAINS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    // leq[a][b] is a <= b
    leq: Vec<Vec<bool>>,
}

/// Reflexive-transitive closure of a cover relation on `0..size`.
///
/// Fails on cycles and on covers implied by a chain of two or more covers.
pub fn order_closure(size: usize, covers: &[(usize, usize)]) -> Result<Vec<Vec<bool>>> {
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut indegree = vec![0usize; size];
    for &(lo, hi) in covers {
        if lo >= size || hi >= size {
            return Err(Error::Poset(format!("cover ({lo}, {hi}) names an unknown element")));
        }
        if lo == hi {
            return Err(Error::Poset(format!("element {lo} cannot cover itself")));
        }
        up[lo].push(hi);
        indegree[hi] += 1;
    }

    // Kahn's algorithm; leftover elements lie on a cycle.
    let mut order = Vec::with_capacity(size);
    let mut ready: Vec<usize> = (0..size).filter(|&e| indegree[e] == 0).collect();
    while let Some(e) = ready.pop() {
        order.push(e);
        for &hi in &up[e] {
            indegree[hi] -= 1;
            if indegree[hi] == 0 {
                ready.push(hi);
            }
        }
    }
    if order.len() != size {
        return Err(Error::Poset("cover relation contains a cycle".into()));
    }

    let mut leq = vec![vec![false; size]; size];
    for &e in order.iter().rev() {
        leq[e][e] = true;
        for &hi in &up[e] {
            let above = leq[hi].clone();
            for (slot, &reached) in leq[e].iter_mut().zip(&above) {
                *slot |= reached;
            }
        }
    }

    let mut seen = HashSet::new();
    for &(lo, hi) in covers {
        if !seen.insert((lo, hi)) {
            return Err(Error::Poset(format!("cover ({lo}, {hi}) is listed twice")));
        }
        let implied = up[lo].iter().any(|&mid| mid != hi && leq[mid][hi]);
        if implied {
            return Err(Error::Poset(format!(
                "cover ({lo}, {hi}) is implied by a longer chain; give the transitive reduction"
            )));
        }
    }
    Ok(leq)
}

impl Poset {
    pub fn new(names: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Poset> {
        let mut unique = HashSet::new();
        if let Some(dup) = names.iter().find(|name| !unique.insert(name.as_str())) {
            return Err(Error::Poset(format!("element {dup:?} is listed twice")));
        }
        let leq = order_closure(names.len(), &covers)?;
        Ok(Poset { names, covers, leq })
    }

    /// A chain `E1 < E2 < .. < E{len}`.
    pub fn chain(len: usize) -> Poset {
        let names = (1..=len).map(|i| format!("E{i}")).collect();
        let covers = (1..len).map(|i| (i - 1, i)).collect();
        Poset::new(names, covers).expect("a chain is a valid poset")
    }

    /// Parses the line format
    ///
    /// ```text
    /// elements: A B C
    /// cover: A B
    /// cover: A C
    /// ```
    ///
    /// where `cover: X Y` puts `X` directly below `Y`. Blank lines and text
    /// after `#` are ignored.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut names: Option<Vec<String>> = None;
        let mut raw_covers = Vec::new();
        for (number, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |reason: String| Error::PosetSyntax { line: number + 1, reason };
            let (key, rest) = line.split_once(':').ok_or_else(|| syntax("expected `elements:` or `cover:`".into()))?;
            match key.trim() {
                "elements" => {
                    if names.is_some() {
                        return Err(syntax("`elements:` given twice".into()));
                    }
                    names = Some(rest.split_whitespace().map(String::from).collect());
                }
                "cover" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 2 {
                        return Err(syntax(format!("cover needs two elements, got {}", parts.len())));
                    }
                    raw_covers.push((number + 1, parts[0].to_string(), parts[1].to_string()));
                }
                other => return Err(syntax(format!("unknown key `{other}`"))),
            }
        }
        let names = names.ok_or(Error::PosetSyntax { line: 0, reason: "missing `elements:` line".into() })?;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut covers = Vec::with_capacity(raw_covers.len());
        for (line, lo, hi) in &raw_covers {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::PosetSyntax { line: *line, reason: format!("unknown element {name:?}") })
            };
            covers.push((lookup(lo)?, lookup(hi)?));
        }
        Poset::new(names, covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    /// All pairs `(a, b)` with `a <= b`, reflexive pairs included.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.leq[a][b]).collect()
    }

    /// Length of the longest chain ending at each element, minus one.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.len();
        let mut level = vec![0; n];
        // strict predecessors always have fewer elements below them
        let mut by_height: Vec<usize> = (0..n).collect();
        by_height.sort_by_key(|&e| (0..n).filter(|&o| self.leq[o][e]).count());
        for &e in &by_height {
            for &(lo, hi) in &self.covers {
                if hi == e {
                    level[e] = level[e].max(level[lo] + 1);
                }
            }
        }
        level
    }
}

/// A set of pairwise incomparable elements, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain(Vec<usize>);

impl Antichain {
    pub fn new(poset: &Poset, mut members: Vec<usize>) -> Result<Antichain> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= poset.len()) {
            return Err(Error::Poset(format!("element index {bad} out of range")));
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if poset.comparable(a, b) {
                    return Err(Error::Poset(format!("{} and {} are comparable", poset.name(a), poset.name(b))));
                }
            }
        }
        Ok(Antichain(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        NamedSet { names: self.0.iter().map(|&e| poset.name(e)).collect() }
    }
}

struct NamedSet<'a> {
    names: Vec<&'a str>,
}

impl fmt::Display for NamedSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

/// All antichains, the empty one included, ordered by size and then
/// lexicographically by element index.
pub fn antichains(poset: &Poset, cap: u64) -> Result<Vec<Antichain>> {
    fn extend(poset: &Poset, from: usize, current: &mut Vec<usize>, out: &mut Vec<Antichain>, cap: u64) -> Result<()> {
        out.push(Antichain(current.clone()));
        if out.len() as u64 > cap {
            return Err(Error::CapExceeded { what: "antichain count", size: format!("more than {cap}"), limit: cap });
        }
        for e in from..poset.len() {
            if current.iter().all(|&c| !poset.comparable(c, e)) {
                current.push(e);
                extend(poset, e + 1, current, out, cap)?;
                current.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    extend(poset, 0, &mut Vec::new(), &mut out, cap)?;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A `{0,1}` coloring closed upward under 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpClosedColoring(Vec<bool>);

impl UpClosedColoring {
    pub fn new(poset: &Poset, colors: Vec<bool>) -> Result<UpClosedColoring> {
        if colors.len() != poset.len() {
            return Err(Error::LengthMismatch { expected: poset.len(), found: colors.len() });
        }
        for (lo, hi) in poset.order_pairs() {
            if colors[lo] && !colors[hi] {
                return Err(Error::NotUpClosed {
                    lower: poset.name(lo).to_string(),
                    upper: poset.name(hi).to_string(),
                });
            }
        }
        Ok(UpClosedColoring(colors))
    }

    pub fn colors(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, element: usize) -> bool {
        self.0[element]
    }
}

/// Colors an element 1 exactly when it lies above some member of the
/// antichain.
pub fn coloring_from_antichain(poset: &Poset, antichain: &Antichain) -> UpClosedColoring {
    let colors = (0..poset.len()).map(|e| antichain.members().iter().any(|&m| poset.leq(m, e))).collect();
    UpClosedColoring(colors)
}

/// The minimal elements colored 1.
pub fn antichain_from_coloring(poset: &Poset, coloring: &UpClosedColoring) -> Result<Antichain> {
    let checked = UpClosedColoring::new(poset, coloring.0.clone())?;
    let members = (0..poset.len())
        .filter(|&e| checked.get(e))
        .filter(|&e| (0..poset.len()).all(|b| b == e || !poset.leq(b, e) || !checked.get(b)))
        .collect();
    Ok(Antichain(members))
}

/// For each poset element, the ground elements of `{1, .., n}` placed in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl Assignment {
    /// Builds an assignment from one coloring per ground element.
    pub fn from_colorings(colorings: &[UpClosedColoring]) -> Assignment {
        let size = colorings.first().map_or(0, |c| c.0.len());
        let mut sets = vec![Vec::new(); size];
        for (j, coloring) in colorings.iter().enumerate() {
            for (e, set) in sets.iter_mut().enumerate() {
                if coloring.get(e) {
                    set.push(j + 1);
                }
            }
        }
        Assignment { n: colorings.len(), sets }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn set(&self, element: usize) -> &[usize] {
        &self.sets[element]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// `set(a) ⊆ set(b)` whenever `a <= b`.
    pub fn is_monotone(&self, poset: &Poset) -> bool {
        poset.order_pairs().into_iter().all(|(a, b)| {
            let upper: HashSet<usize> = self.sets[b].iter().copied().collect();
            self.sets[a].iter().all(|j| upper.contains(j))
        })
    }

    /// One line per level of the Hasse diagram, top level first, e.g.
    ///
    /// ```text
    /// B={1,2}
    /// A={1}
    /// ```
    pub fn render_stacked(&self, poset: &Poset) -> String {
        let levels = poset.levels();
        let top = levels.iter().copied().max().unwrap_or(0);
        let mut lines = Vec::new();
        for level in (0..=top).rev() {
            let entries: Vec<String> = (0..poset.len())
                .filter(|&e| levels[e] == level)
                .map(|e| format!("{}={}", poset.name(e), render_set(&self.sets[e])))
                .collect();
            if !entries.is_empty() {
                lines.push(entries.join("  "));
            }
        }
        lines.join("\n")
    }
}

pub fn render_set(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|j| j.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A poset together with its letter code: letter `i` stands for the `i`-th
/// antichain in canonical order.
#[derive(Debug, Clone)]
pub struct PosetCode {
    poset: Poset,
    antichains: Vec<Antichain>,
    colorings: Vec<UpClosedColoring>,
}

impl PosetCode {
    pub fn new(poset: Poset, max_antichains: u64) -> Result<PosetCode> {
        let antichains = antichains(&poset, max_antichains)?;
        let colorings = antichains.iter().map(|a| coloring_from_antichain(&poset, a)).collect();
        Ok(PosetCode { poset, antichains, colorings })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Number of antichains, i.e. the alphabet size.
    pub fn alpha(&self) -> usize {
        self.antichains.len()
    }

    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn coloring(&self, letter: Letter) -> Result<&UpClosedColoring> {
        self.colorings
            .get(usize::from(letter))
            .ok_or(Error::LetterOutOfRange { letter: letter.into(), alphabet_size: self.alpha() as u32 })
    }

    /// The letter coding a coloring.
    pub fn letter_of(&self, coloring: &UpClosedColoring) -> Result<Letter> {
        let antichain = antichain_from_coloring(&self.poset, coloring)?;
        let index = self
            .antichains
            .binary_search_by(|a| a.len().cmp(&antichain.len()).then_with(|| a.cmp(&antichain)))
            .map_err(|_| Error::Internal("antichain missing from the code".into()))?;
        Ok(index as Letter)
    }

    /// Decodes the `n` letters starting at `start`: ground element `j`
    /// receives the coloring of the letter at `start + j - 1`.
    pub fn decode(&self, cycle: &Cycle, start: usize) -> Result<Assignment> {
        let colorings = (0..cycle.window_length())
            .map(|j| self.coloring(cycle.letter_at(start + j)).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(Assignment::from_colorings(&colorings))
    }

    /// A cycle of length `alpha^n` in which every assignment appears once.
    pub fn cycle(&self, n: usize, limits: &Limits) -> Result<Cycle> {
        if self.alpha() < 2 {
            return Err(Error::Poset("the empty poset has a single assignment; no cycle to build".into()));
        }
        if self.alpha() > crate::word::MAX_ALPHABET as usize {
            return Err(Error::CapExceeded {
                what: "antichain count",
                size: self.alpha().to_string(),
                limit: crate::word::MAX_ALPHABET.into(),
            });
        }
        generate_full(self.alpha() as u32, n, limits)
    }

    /// One line per letter: `letter<TAB>antichain<TAB>colored elements`.
    pub fn legend(&self) -> String {
        let mut out = String::new();
        for (letter, (antichain, coloring)) in self.antichains.iter().zip(&self.colorings).enumerate() {
            let ones: Vec<usize> = (0..self.poset.len()).filter(|&e| coloring.get(e)).collect();
            let ones = Antichain(ones);
            out.push_str(&format!("{letter}\t{}\t{}\n", antichain.display(&self.poset), ones.display(&self.poset)));
        }
        out
    }
}

/// De Bruijn cycle of the assignments of `{1, .., n}` to `poset`.
pub fn poset_cycle(poset: &Poset, n: usize, limits: &Limits) -> Result<Cycle> {
    PosetCode::new(poset.clone(), DEFAULT_MAX_ANTICHAINS)?.cycle(n, limits)
}

/// The assignment read from the window of `cycle` starting at `start`.
pub fn decode_assignment(poset: &Poset, cycle: &Cycle, start: usize) -> Result<Assignment> {
    let code = PosetCode::new(poset.clone(), DEFAULT_MAX_ANTICHAINS)?;
    if cycle.alphabet_size() as usize != code.alpha() {
        return Err(Error::Poset(format!(
            "cycle alphabet has {} letters but the poset has {} antichains",
            cycle.alphabet_size(),
            code.alpha()
        )));
    }
    code.decode(cycle, start)
}

/// `alpha^n`.
pub fn count_assignments(poset: &Poset, n: usize) -> Result<BigUint> {
    let alpha = antichains(poset, DEFAULT_MAX_ANTICHAINS)?.len();
    Ok(BigUint::from(alpha).pow(n as u32))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Poset;

    pub const TWO_CHAIN: &str = "elements: A B\ncover: A B\n";

    pub const W_POSET: &str = "\
# minimal a, c, e; maximal b, d
elements: a b c d e
cover: a b
cover: c b
cover: c d
cover: e d
";

    pub fn two_chain() -> Poset {
        Poset::parse(TWO_CHAIN).unwrap()
    }

    pub fn w_poset() -> Poset {
        Poset::parse(W_POSET).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn ac(poset: &Poset, names: &[&str]) -> Antichain {
        let members = names.iter().map(|n| poset.names().iter().position(|x| x == n).unwrap()).collect();
        Antichain::new(poset, members).unwrap()
    }

    #[test]
    fn closure_examples() {
        let chain = two_chain();
        assert_eq!(chain.order_pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        let w = w_poset();
        let pairs = w.order_pairs();
        assert_eq!(pairs.len(), 9);
        for &(lo, hi) in w.covers() {
            assert!(pairs.contains(&(lo, hi)));
        }
    }

    #[test]
    fn rejects_bad_hasse_diagrams() {
        let redundant = "elements: A B C\ncover: A C\ncover: A B\ncover: B C\n";
        assert!(matches!(Poset::parse(redundant), Err(Error::Poset(_))));
        let cyclic = "elements: A B\ncover: A B\ncover: B A\n";
        assert!(matches!(Poset::parse(cyclic), Err(Error::Poset(_))));
        assert!(Poset::parse("elements: A A\n").is_err());
        assert!(Poset::parse("elements: A\ncover: A Z\n").is_err());
        assert!(Poset::parse("cover: A B\n").is_err());
        assert!(Poset::parse("elements: A B\ncover: A B\ncover: A B\n").is_err());
        assert!(Poset::parse("elements: A\nfoo: A\n").is_err());
    }

    #[test]
    fn antichain_counts() {
        let chain = two_chain();
        let all = antichains(&chain, 100).unwrap();
        assert_eq!(all, vec![ac(&chain, &[]), ac(&chain, &["A"]), ac(&chain, &["B"])]);
        assert_eq!(antichains(&w_poset(), 100).unwrap().len(), 13);
        let empty = Poset::new(vec![], vec![]).unwrap();
        assert_eq!(antichains(&empty, 100).unwrap(), vec![Antichain(vec![])]);
        assert!(antichains(&w_poset(), 12).is_err());
    }

    #[test]
    fn coloring_examples() {
        let chain = two_chain();
        let c = coloring_from_antichain(&chain, &ac(&chain, &["A"]));
        assert_eq!(c.colors(), &[true, true]);
        let c = coloring_from_antichain(&chain, &ac(&chain, &["B"]));
        assert_eq!(c.colors(), &[false, true]);
        let c = coloring_from_antichain(&w_poset(), &Antichain(vec![]));
        assert!(c.colors().iter().all(|&x| !x));
    }

    #[test]
    fn antichain_from_coloring_examples() {
        let chain = two_chain();
        let zero = UpClosedColoring(vec![false, false]);
        assert!(antichain_from_coloring(&chain, &zero).unwrap().is_empty());
        let both = UpClosedColoring(vec![true, true]);
        assert_eq!(antichain_from_coloring(&chain, &both).unwrap(), ac(&chain, &["A"]));
        let broken = UpClosedColoring(vec![true, false]);
        assert!(matches!(antichain_from_coloring(&chain, &broken), Err(Error::NotUpClosed { .. })));
        assert!(UpClosedColoring::new(&chain, vec![true, false]).is_err());
    }

    #[test]
    fn two_chain_window_decoding() {
        let chain = two_chain();
        let code = PosetCode::new(chain.clone(), 100).unwrap();
        // a = empty coloring, b = {B}, c = {A}; canonical letters 0, 2, 1
        let letters = "ccaabbcba"
            .chars()
            .map(|ch| match ch {
                'a' => 0,
                'b' => 2,
                _ => 1,
            })
            .collect();
        let cycle = Cycle::new(letters, 3, 2).unwrap();
        let first = code.decode(&cycle, 0).unwrap();
        assert_eq!((first.set(0), first.set(1)), (&[1, 2][..], &[1, 2][..]));
        let fourth = decode_assignment(&chain, &cycle, 3).unwrap();
        assert_eq!((fourth.set(0), fourth.set(1)), (&[][..], &[2][..]));
        assert_eq!(fourth.render_stacked(&chain), "B={2}\nA={}");
    }

    #[test]
    fn all_zero_window_decodes_to_empty_sets() {
        let w = w_poset();
        let cycle = Cycle::new(vec![0, 0, 0, 5], 13, 3).unwrap();
        let assignment = decode_assignment(&w, &cycle, 0).unwrap();
        assert!(assignment.sets().iter().all(|s| s.is_empty()));
        let wrong = Cycle::new(vec![0, 1], 3, 2).unwrap();
        assert!(decode_assignment(&w, &wrong, 0).is_err());
    }

    #[test]
    fn assignment_counts() {
        assert_eq!(count_assignments(&two_chain(), 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_assignments(&w_poset(), 1).unwrap(), BigUint::from(13u32));
        assert_eq!(count_assignments(&w_poset(), 0).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn cycles_have_alpha_to_the_n_letters() {
        let limits = Limits::default();
        assert_eq!(poset_cycle(&two_chain(), 2, &limits).unwrap().len(), 9);
        let single = Poset::chain(1);
        let c = poset_cycle(&single, 5, &limits).unwrap();
        assert_eq!((c.len(), c.alphabet_size()), (32, 2));
        assert_eq!(poset_cycle(&w_poset(), 2, &limits).unwrap().len(), 169);
        let empty = Poset::new(vec![], vec![]).unwrap();
        assert!(poset_cycle(&empty, 2, &limits).is_err());
    }

    #[test]
    fn letter_round_trip() {
        let code = PosetCode::new(w_poset(), 100).unwrap();
        for letter in 0..code.alpha() as Letter {
            let coloring = code.coloring(letter).unwrap().clone();
            assert_eq!(code.letter_of(&coloring).unwrap(), letter);
        }
        assert!(code.coloring(13).is_err());
    }

    #[test]
    fn levels_and_stacking() {
        let w = w_poset();
        assert_eq!(w.levels(), vec![0, 1, 0, 1, 0]);
        let colorings: Vec<_> =
            [&["c"][..], &["a", "e"]].iter().map(|names| coloring_from_antichain(&w, &ac(&w, names))).collect();
        let assignment = Assignment::from_colorings(&colorings);
        assert!(assignment.is_monotone(&w));
        assert_eq!(assignment.render_stacked(&w), "b={1,2}  d={1,2}\na={2}  c={1}  e={2}");
    }
}
