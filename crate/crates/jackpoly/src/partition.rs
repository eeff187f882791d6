//! Integer partitions, dominance order, and the combinatorial constants
//! attached to them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Partition with weakly decreasing positive parts; the empty partition is
/// allowed and prints as `0`.
///
/// The derived `Ord` is lexicographic on the parts, so sorting a list of
/// equal-weight partitions descending gives the usual lex order with the
/// dominance-maximal one-row partition first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Shapes an arbitrary exponent vector into a partition by sorting
    /// descending and dropping zeros.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut parts: Vec<u32> = exponents.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 1-based row `k`, zero beyond the last row.
    pub fn part(&self, k: usize) -> u32 {
        if k >= 1 && k <= self.0.len() {
            self.0[k - 1]
        } else {
            0
        }
    }

    /// `(part value, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        match self.0.first() {
            None => Partition::empty(),
            Some(&first) => {
                let parts = (1..=first)
                    .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                    .collect();
                Partition(parts)
            }
        }
    }

    /// The symmetric-group centralizer size `z = prod_i i^{m_i} m_i!` where
    /// `m_i` counts parts equal to `i`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (value, mult) in self.multiplicities() {
            z *= BigInt::from(value).pow(mult);
            z *= factorial(mult as u64);
        }
        z
    }

    /// `prod_i m_i!` over part multiplicities, the automorphism count of the
    /// multiset of parts.
    pub fn mult_factorial(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m as u64))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(v) => Partition::new(v),
            Err(_) => Err(Error::Parse(format!("bad partition {:?}", s))),
        }
    }
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// All partitions of `n` with at most `max_len` parts, in descending
/// lexicographic order. `partitions_of(0, _)` is the singleton list holding
/// the empty partition.
pub fn partitions_of(n: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, max_len, &mut stack, &mut out);
    out
}

fn descend(
    remaining: u32,
    max_part: u32,
    slots: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    // The next part must be big enough that the remaining slots can absorb
    // the rest: p * slots >= remaining.
    let lo = remaining.div_ceil(slots as u32);
    let hi = max_part.min(remaining);
    for p in (lo..=hi).rev() {
        stack.push(p);
        descend(remaining - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// Whether `mu` is below `lambda` in dominance order: every prefix sum of
/// `mu` is at most the matching prefix sum of `lambda`. Only defined between
/// partitions of equal weight.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch(mu.weight(), lambda.weight()));
    }
    let rows = mu.len().max(lambda.len());
    let mut sum_mu = 0u32;
    let mut sum_la = 0u32;
    for k in 1..=rows {
        sum_mu += mu.part(k);
        sum_la += lambda.part(k);
        if sum_mu > sum_la {
            return Ok(false);
        }
    }
    Ok(true)
}
