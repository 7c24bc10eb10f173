use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::exactalg::Rational;
use crate::{Error, Result};

/// Integer partition: weakly decreasing positive parts.
///
/// Ordered by size first, then lexicographically on the parts, so `p₁³`
/// sorts before `p₂p₁` before `p₃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(alloc::vec![n])
        }
    }

    /// The column partition `(1, 1, …, 1)` of size `k`.
    pub fn column(k: u32) -> Self {
        Partition(alloc::vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity `mᵢ` of each part `i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Every part multiplied by `k` (the index of `p_k ⊙ p_λ`).
    pub fn scaled(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Multiset union of parts (the index of `p_λ · p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1, …, 1)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_λ = Π iᵐⁱ · mᵢ!`, the centralizer order of a permutation of cycle type `λ`.
pub fn z_of(lambda: &Partition) -> Rational {
    let mut z = BigInt::from(1);
    for (part, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    Rational::from_integer(z)
}
