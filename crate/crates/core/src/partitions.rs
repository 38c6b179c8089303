//! Partition combinatorics.
//!
//! A [`Partition`] is stored with trailing zeros trimmed. Operations that
//! need an ambient length `n` (shifts, degeneracy, alcove membership) take it
//! explicitly and pad on the fly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer `r` this is a partition of.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::TooManyParts { parts: self.len(), n });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&x| x as usize >= j).count() as u32).collect();
        Partition { parts }
    }

    /// Partial-sum dominance `self ⊵ other`. Sums are not required to agree.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// True iff no positive part value is repeated `p` or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if (j - i) as u64 >= p as u64 {
                return false;
            }
            i = j;
        }
        true
    }

    /// `λ + (iⁿ)`: adds `i` to each of the first `n` entries.
    pub fn shift(&self, i: i64, n: usize) -> Result<Partition> {
        let padded = self.padded(n)?;
        let mut parts = Vec::with_capacity(n);
        for x in padded {
            let y = x as i64 + i;
            if y < 0 || y > u32::MAX as i64 {
                return Err(Error::NegativePart { shift: i });
            }
            parts.push(y as u32);
        }
        Partition::new(parts)
    }

    /// `λ_n = 0`, i.e. fewer than `n` nonzero parts.
    pub fn is_degenerate(&self, n: usize) -> bool {
        self.part(n.saturating_sub(1)) == 0 || n == 0
    }

    /// Membership in `C₀(r) = {λ : λ_1 − λ_n ≤ p − n}`; defined for `n < p`.
    pub fn in_c0(&self, p: u32, n: usize) -> Result<bool> {
        if n as u64 >= p as u64 || n == 0 {
            return Err(Error::RegionUndefined { n, p });
        }
        let padded = self.padded(n)?;
        Ok((padded[0] - padded[n - 1]) as u64 <= (p as u64 - n as u64))
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| {
                        let arm = row as usize - j - 1;
                        let leg = conj.part(j) as usize - i - 1;
                        (arm + leg + 1) as u64
                    })
                    .collect()
            })
            .collect()
    }

    /// `r! / ∏ hooks`.
    pub fn hook_length_count(&self) -> u128 {
        let r = self.size() as u128;
        let numerator: u128 = (1..=r).product();
        let denominator: u128 = self.hook_lengths().iter().flatten().map(|&h| h as u128).product();
        numerator / denominator
    }

    /// Number of standard Young tableaux by exhaustive backtracking.
    pub fn enumerate_standard_tableaux_count(&self) -> u64 {
        fn fill(shape: &[u32], rows: &mut [u32], remaining: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            let mut total = 0;
            for i in 0..shape.len() {
                let can_grow = rows[i] < shape[i] && (i == 0 || rows[i - 1] > rows[i]);
                if can_grow {
                    rows[i] += 1;
                    total += fill(shape, rows, remaining - 1);
                    rows[i] -= 1;
                }
            }
            total
        }
        let mut rows = vec![0; self.len()];
        fill(&self.parts, &mut rows, self.size())
    }

    /// Number of standard tableaux of this shape.
    ///
    /// Uses the hook-length product; for `r ≤ 10` the result is also
    /// recomputed by backtracking and the two must agree.
    pub fn count_standard_tableaux(&self) -> u64 {
        let by_hooks = self.hook_length_count() as u64;
        if self.size() <= 10 {
            let by_search = self.enumerate_standard_tableaux_count();
            assert_eq!(by_hooks, by_search, "hook-length and backtracking counts disagree for {self}");
        }
        by_hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form `"3,1"`; `""` and `"0"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> Self {
        p.to_string()
    }
}

/// All partitions of `r` into at most `n` parts, in decreasing lexicographic order.
pub fn enumerate_partitions(r: usize, n: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r as u32, r as u32, n, &mut Vec::new(), &mut out);
    out
}

/// Base-`p` digits, least significant first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    pub p: u32,
    pub digits: Vec<u32>,
}

impl PAdicExpansion {
    pub fn digit(&self, s: usize) -> u32 {
        self.digits.get(s).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0u64, |acc, &d| acc * self.p as u64 + d as u64)
    }
}

pub fn p_adic(m: u64, field: PrimeField) -> PAdicExpansion {
    let p = field.modulus();
    let mut digits = Vec::new();
    let mut rest = m;
    while rest > 0 {
        digits.push((rest % p as u64) as u32);
        rest /= p as u64;
    }
    PAdicExpansion { p, digits }
}
