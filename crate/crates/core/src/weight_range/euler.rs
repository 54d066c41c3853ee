use std::collections::HashMap;

use num_traits::ToPrimitive;
use smallvec::SmallVec;

use super::graph::sink_vertex;
use super::WeightRangeParams;
use crate::counting::{cycle_length, vertex_count};
use crate::error::{Error, Result};
use crate::word::{check_alphabet, Cycle, Letter};

/// Resource limits for generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: u64,
    pub max_cycle_length: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 10_000_000, max_cycle_length: 100_000_000 }
    }
}

impl Limits {
    fn check(&self, params: &WeightRangeParams) -> Result<u64> {
        let vertices = vertex_count(params);
        if vertices.to_u64().is_none_or(|v| v > self.max_vertices) {
            return Err(Error::CapExceeded {
                what: "vertex count",
                size: vertices.to_string(),
                limit: self.max_vertices,
            });
        }
        let length = cycle_length(params);
        match length.to_u64() {
            Some(len) if len <= self.max_cycle_length => Ok(len),
            _ => {
                Err(Error::CapExceeded { what: "cycle length", size: length.to_string(), limit: self.max_cycle_length })
            }
        }
    }
}

type VertexKey = SmallVec<[u64; 2]>;

/// Packs a vertex into `bits`-bit fields.
fn pack(letters: &[Letter], bits: u32) -> VertexKey {
    let per_word = (64 / bits) as usize;
    letters.chunks(per_word).map(|chunk| chunk.iter().fold(0u64, |acc, &l| (acc << bits) | u64::from(l))).collect()
}

/// A de Bruijn cycle of all `n`-letter words with weight in `[s, t]`.
///
/// Runs Hierholzer's algorithm on the implicit overlap digraph, starting
/// from the sink vertex. The only per-vertex state is the next untried
/// letter; letters are tried in increasing order, so the output is
/// deterministic. The cycle is the sequence of appended letters.
pub fn eulerian_cycle(params: &WeightRangeParams, limits: &Limits) -> Result<Cycle> {
    let expected = limits.check(params)? as usize;
    let m = params.vertex_len();
    let bits = 32 - (params.k() - 1).leading_zeros().min(31);
    let start = sink_vertex(params);

    let mut path: Vec<Letter> = start.letters().to_vec();
    let mut weight = start.weight();
    let mut next_letter: HashMap<VertexKey, u32> = HashMap::new();
    let mut circuit: Vec<Letter> = Vec::with_capacity(expected);

    loop {
        let len = path.len();
        let legal = params.legal_letters(weight);
        let (lo, hi) = (*legal.start() as u32, *legal.end() as u32);
        let slot = next_letter.entry(pack(&path[len - m..], bits)).or_insert(lo);
        if *slot <= hi && lo <= hi {
            let letter = *slot as Letter;
            *slot += 1;
            weight = weight + u64::from(letter) - u64::from(path[len - m]);
            path.push(letter);
        } else {
            if len == m {
                break;
            }
            let letter = path.pop().expect("path longer than a vertex");
            circuit.push(letter);
            weight = weight - u64::from(letter) + u64::from(path[len - 1 - m]);
        }
    }

    if circuit.len() != expected {
        return Err(Error::Internal(format!(
            "circuit covers {} of {expected} edges; the digraph is not Eulerian",
            circuit.len()
        )));
    }
    circuit.reverse();
    Cycle::new(circuit, params.k(), params.n())
}

/// The classic de Bruijn cycle of all `k^n` words.
pub fn generate_full(k: u32, n: usize, limits: &Limits) -> Result<Cycle> {
    check_alphabet(k)?;
    match n {
        0 => Err(Error::InvalidParams("requires n >= 1".into())),
        1 => Cycle::new((0..k).map(|l| l as Letter).collect(), k, 1),
        _ => eulerian_cycle(&WeightRangeParams::full(n, k)?, limits),
    }
}
