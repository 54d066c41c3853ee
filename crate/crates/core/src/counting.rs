//! Exact counts of fixed-weight words.
//!
//! `A(n, k, j)` is the number of `n`-letter words over `{0, .., k-1}` with
//! letter sum `j`, i.e. the coefficient of `z^j` in `(1 + z + .. + z^(k-1))^n`.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weight_range::WeightRangeParams;
use crate::word::check_alphabet;

/// The row `A(n, k, 0..=n(k-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n: usize,
    k: u32,
    counts: Vec<BigUint>,
}

impl CountTable {
    /// Builds the row by dynamic programming over prefix length, using a
    /// sliding window sum of width `k` over the previous row.
    pub fn new(n: usize, k: u32) -> Result<CountTable> {
        check_alphabet(k)?;
        let max_letter = (k - 1) as usize;
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let next_len = row.len() + max_letter;
            let mut next = Vec::with_capacity(next_len);
            let mut window = BigUint::zero();
            for j in 0..next_len {
                if j < row.len() {
                    window += &row[j];
                }
                if j > max_letter {
                    window -= &row[j - max_letter - 1];
                }
                next.push(window.clone());
            }
            row = next;
        }
        Ok(CountTable { n, k, counts: row })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Largest possible weight, `n(k-1)`.
    pub fn max_weight(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    /// `A(n, k, j)`, zero outside `0..=n(k-1)`.
    pub fn get(&self, j: u64) -> BigUint {
        usize::try_from(j).ok().and_then(|j| self.counts.get(j)).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `sum_{j=lo}^{hi} A(n, k, j)`, with the bounds clipped to the table.
    pub fn range_sum(&self, lo: u64, hi: u64) -> BigUint {
        if lo > hi || lo > self.max_weight() {
            return BigUint::zero();
        }
        let hi = hi.min(self.max_weight());
        self.counts[lo as usize..=hi as usize].iter().sum()
    }
}

/// Number of `n`-letter words over `{0, .., k-1}` of weight exactly `j`.
pub fn count_words(n: usize, k: u32, j: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParams("requires n >= 1".into()));
    }
    check_alphabet(k)?;
    let max = n as u64 * u64::from(k - 1);
    if j > max {
        return Err(Error::InvalidParams(format!("requires j <= n(k-1) = {max}, got j = {j}")));
    }
    Ok(CountTable::new(n, k)?.get(j))
}

/// `|W| = sum_{j=s}^{t} A(n, k, j)`, the length of a cycle through every
/// word whose weight lies in `[s, t]`.
pub fn cycle_length(params: &WeightRangeParams) -> BigUint {
    let table = CountTable::new(params.n(), params.k()).expect("validated params");
    table.range_sum(params.s(), params.t())
}

/// Number of vertices of the overlap digraph: `(n-1)`-letter words with
/// weight in `[max(0, s-(k-1)), t]`.
pub fn vertex_count(params: &WeightRangeParams) -> BigUint {
    let table = CountTable::new(params.n() - 1, params.k()).expect("validated params");
    table.range_sum(params.vertex_floor(), params.t())
}

/// Length of the weight-`[t-(k-1), t]` cycle divided by `A(n, k, t)`: how
/// much longer the cycle is than the family of weight-`t` words it covers.
pub fn redundancy_ratio(n: usize, k: u32, t: u64) -> Result<BigRational> {
    check_alphabet(k)?;
    let spread = u64::from(k - 1);
    if t < spread {
        return Err(Error::InvalidParams(format!("requires t >= k-1 = {spread}")));
    }
    let params = WeightRangeParams::new(n, k, t - spread, t)?;
    let table = CountTable::new(n, k)?;
    let target = table.get(t);
    let total = table.range_sum(params.s(), t);
    Ok(BigRational::new(total.into(), target.into()))
}
