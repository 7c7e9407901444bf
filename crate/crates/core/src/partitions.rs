//! Partitions and the validity predicates of the classical families.
//!
//! A partition is stored nonincreasing. Nilpotent orbits of the classical
//! groups are labelled by partitions of `n + 1` (type A), `2n + 1` (type B)
//! and `2n` (types C and D), subject to parity constraints on the
//! multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    A,
    B,
    C,
    D,
}

impl ClassicalType {
    /// Size of the partitions labelling orbits of the rank-`rank` group.
    pub fn partition_total(self, rank: u64) -> u64 {
        match self {
            ClassicalType::A => rank + 1,
            ClassicalType::B => 2 * rank + 1,
            ClassicalType::C | ClassicalType::D => 2 * rank,
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalType::A => "A",
            ClassicalType::B => "B",
            ClassicalType::C => "C",
            ClassicalType::D => "D",
        };
        f.write_str(s)
    }
}

/// A nonincreasing sequence of positive integers. Serializes as a JSON array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    n: u64,
}

/// Summary statistics used by the component-group rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    /// gcd of the parts.
    pub c: u64,
    /// Number of distinct odd parts.
    pub a: u64,
    /// Number of distinct even parts.
    pub b: u64,
    /// Every odd part has multiplicity one (vacuous without odd parts).
    pub all_odd_mult_one: bool,
}

impl Partition {
    /// Sorts the parts into nonincreasing order; rejects zero parts.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut n: u64 = 0;
        for &p in &parts {
            n = n
                .checked_add(p)
                .ok_or_else(|| Error::InvalidPartition("sum overflows".into()))?;
        }
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Builds the partition from already nonincreasing parts.
    fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each distinct part, keyed by part.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == part).count() as u64
    }

    pub fn is_valid_for_type(&self, t: ClassicalType) -> bool {
        let mult = self.multiplicities();
        match t {
            ClassicalType::A => true,
            ClassicalType::B | ClassicalType::D => {
                mult.iter().all(|(&p, &m)| p % 2 == 1 || m % 2 == 0)
            }
            ClassicalType::C => mult.iter().all(|(&p, &m)| p % 2 == 0 || m % 2 == 0),
        }
    }

    /// Every part even with even multiplicity. The empty partition is not
    /// very even.
    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty()
            && self
                .multiplicities()
                .iter()
                .all(|(&p, &m)| p % 2 == 0 && m % 2 == 0)
    }

    pub fn stats(&self) -> Result<PartitionStats> {
        if self.parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let c = self.parts.iter().fold(0u64, |g, &p| g.gcd(&p));
        let mult = self.multiplicities();
        let a = mult.keys().filter(|&&p| p % 2 == 1).count() as u64;
        let b = mult.keys().filter(|&&p| p % 2 == 0).count() as u64;
        let all_odd_mult_one = mult.iter().all(|(&p, &m)| p % 2 == 0 || m == 1);
        Ok(PartitionStats { c, a, b, all_odd_mult_one })
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Multiplicity parity allowed for a part value in family `t`.
fn needs_even_multiplicity(t: ClassicalType, part: u64) -> bool {
    match t {
        ClassicalType::A => false,
        ClassicalType::B | ClassicalType::D => part % 2 == 0,
        ClassicalType::C => part % 2 == 1,
    }
}

/// All partitions of `total` valid for family `t`, in reverse-lexicographic
/// order.
pub fn partitions_of_total(total: u64, t: ClassicalType) -> Vec<Partition> {
    fn rec(
        remaining: u64,
        max_part: u64,
        t: ClassicalType,
        cur: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for v in (1..=max_part.min(remaining)).rev() {
            let even = needs_even_multiplicity(t, v);
            let kmax = remaining / v;
            for k in (1..=kmax).rev() {
                if even && k % 2 == 1 {
                    continue;
                }
                cur.extend(std::iter::repeat(v).take(k as usize));
                rec(remaining - k * v, v - 1, t, cur, out);
                cur.truncate(cur.len() - k as usize);
            }
        }
    }
    let mut out = Vec::new();
    rec(total, total, t, &mut Vec::new(), &mut out);
    out
}

/// Partitions labelling nilpotent orbits of the rank-`rank` group of family
/// `t`.
pub fn enumerate_partitions(rank: i64, t: ClassicalType) -> Result<Vec<Partition>> {
    if rank < 0 {
        return Err(Error::NegativeRank(rank));
    }
    Ok(partitions_of_total(t.partition_total(rank as u64), t))
}

/// Returns `d` with `d(d+1)/2 == m`.
pub fn is_triangular(m: u64) -> Option<u64> {
    // 8m + 1 must be an odd square (2d+1)^2.
    let disc = (m as u128) * 8 + 1;
    let r = disc.isqrt();
    if r * r == disc {
        Some(((r - 1) / 2) as u64)
    } else {
        None
    }
}

/// Returns `r` with `r * r == m`.
pub fn is_square(m: u64) -> Option<u64> {
    let r = m.isqrt();
    (r * r == m).then_some(r)
}

/// The staircase `start, start + step, …` with `count` terms.
pub(crate) fn arithmetic_partition(start: u64, step: u64, count: u64) -> Partition {
    let parts: Vec<u64> = (0..count).map(|i| start + step * i).rev().collect();
    Partition::from_sorted(parts)
}
