use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::WeightRangeParams;
use crate::counting::vertex_count;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Whether appending `letter` to `vertex` traverses an edge of `D`: the
/// `n`-letter label must weigh between `s` and `t`, and the successor must
/// be a legal vertex.
pub fn is_legal_edge(vertex: &Word, letter: Letter, params: &WeightRangeParams) -> bool {
    if u32::from(letter) >= params.k() || vertex.is_empty() {
        return false;
    }
    let weight = vertex.weight();
    let label = weight + u64::from(letter);
    let successor = label - u64::from(vertex.letters()[0]);
    (params.s()..=params.t()).contains(&label) && params.is_legal_vertex_weight(successor)
}

/// `(indegree, outdegree)` of a legal vertex, each counted directly from the
/// edge definition.
pub fn degrees(vertex: &Word, params: &WeightRangeParams) -> (usize, usize) {
    let out = (0..params.k()).filter(|&l| is_legal_edge(vertex, l as Letter, params)).count();
    let weight = vertex.weight();
    let last = u64::from(*vertex.letters().last().expect("nonempty vertex"));
    let indegree = (0..u64::from(params.k()))
        .filter(|&first| {
            let label = first + weight;
            let predecessor = label - last;
            (params.s()..=params.t()).contains(&label) && params.is_legal_vertex_weight(predecessor)
        })
        .count();
    (indegree, out)
}

/// The weight-`s` vertex made of `a` copies of `x` followed by `b` copies of
/// `x + 1`, where `x = s div (n-1)`, `b = s mod (n-1)` and `a = n-1-b`.
pub fn sink_vertex(params: &WeightRangeParams) -> Word {
    let m = params.vertex_len() as u64;
    let x = params.s() / m;
    let b = (params.s() % m) as usize;
    let a = m as usize - b;
    let mut letters = vec![x as Letter; a];
    letters.extend(std::iter::repeat_n((x + 1) as Letter, b));
    Word::from_trusted(letters, params.k())
}

/// Every legal vertex, in lexicographic order. Fails when there are more
/// than `cap` of them.
pub fn enumerate_vertices(params: &WeightRangeParams, cap: u64) -> Result<Vec<Word>> {
    let count = vertex_count(params);
    match count.to_u64() {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::CapExceeded { what: "vertex count", size: count.to_string(), limit: cap });
        }
    }
    let m = params.vertex_len();
    let k = params.k();
    let max_letter = u64::from(k - 1);
    let floor = params.vertex_floor();
    let mut out = Vec::new();
    let mut prefix: Vec<Letter> = Vec::with_capacity(m);

    #[allow(clippy::too_many_arguments)]
    fn extend(
        prefix: &mut Vec<Letter>,
        weight: u64,
        m: usize,
        max_letter: u64,
        floor: u64,
        t: u64,
        k: u32,
        out: &mut Vec<Word>,
    ) {
        let remaining = (m - prefix.len()) as u64;
        if remaining == 0 {
            out.push(Word::from_trusted(prefix.clone(), k));
            return;
        }
        for l in 0..=max_letter {
            let w = weight + l;
            if w > t {
                break;
            }
            if w + (remaining - 1) * max_letter < floor {
                continue;
            }
            prefix.push(l as Letter);
            extend(prefix, w, m, max_letter, floor, t, k, out);
            prefix.pop();
        }
    }

    extend(&mut prefix, 0, m, max_letter, floor, params.t(), k, &mut out);
    Ok(out)
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        DisjointSets { parent: (0..size).collect(), rank: vec![0; size] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Decides weak connectivity of `D` by materialising every vertex and
/// merging the endpoints of every edge. Independent of the path routines.
pub fn weakly_connected(params: &WeightRangeParams, cap: u64) -> Result<bool> {
    let vertices = enumerate_vertices(params, cap)?;
    let index: HashMap<&[Letter], usize> = vertices.iter().enumerate().map(|(i, v)| (v.letters(), i)).collect();
    let mut sets = DisjointSets::new(vertices.len());
    let mut components = vertices.len();
    let mut successor = Vec::with_capacity(params.vertex_len());
    for (i, v) in vertices.iter().enumerate() {
        for l in 0..params.k() {
            let l = l as Letter;
            if !is_legal_edge(v, l, params) {
                continue;
            }
            successor.clear();
            successor.extend_from_slice(&v.letters()[1..]);
            successor.push(l);
            let j = *index
                .get(successor.as_slice())
                .ok_or_else(|| Error::Internal(format!("successor of {v} missing from vertex set")))?;
            if sets.union(i, j) {
                components -= 1;
            }
        }
    }
    Ok(components <= 1)
}
