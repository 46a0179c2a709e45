//! Integer partitions: enumeration, counting, dominance order and metatypes.
//!
//! A [`Partition`] stores only its positive parts. Zero padding up to a
//! declared length is the job of [`PaddedPartition`], which is how exponent
//! vectors of monomials are viewed.
//!
//! Text syntax: `"4,3,3,1"` for a partition (the empty partition is `""`)
//! and `"4,3,3,1;n=7"` for a padded one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering sorts by weight first and then reverse-lexicographically, so a
/// sorted collection of partitions of `n` starts at `(n)` and ends at `(1^n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition, rejecting zero or increasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Sorts decreasingly and drops zeros. Only for internal use where the
    /// multiset of parts is meaningful; the CLI never normalizes user input.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_parts_unchecked(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_parts_unchecked(vec![1; n])
    }

    /// `(n-1, 1)`; requires `n >= 2`.
    pub fn hook_standard(n: usize) -> Self {
        assert!(n >= 2, "(n-1,1) needs n >= 2");
        Self::from_parts_unchecked(vec![n - 1, 1])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of positive parts, `#λ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the last positive part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Self::from_parts_unchecked(parts)
    }

    pub fn padded(&self, length: usize) -> Result<PaddedPartition> {
        PaddedPartition::new(self.clone(), length)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::input(format!("bad partition entry {t:?} in {s:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A partition viewed with zeros appended up to `length` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    base: Partition,
    length: usize,
}

impl PaddedPartition {
    pub fn new(base: Partition, length: usize) -> Result<Self> {
        if length < base.len() {
            return Err(Error::input(format!(
                "cannot pad {base} ({} parts) to length {length}",
                base.len()
            )));
        }
        Ok(PaddedPartition { base, length })
    }

    /// Accepts a weakly decreasing vector that may end in zeros, e.g. an
    /// exponent vector `(4,3,3,1,0,0,0)`.
    pub fn from_padded_parts(entries: &[usize]) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!(
                "padded partition must be weakly decreasing: {entries:?}"
            )));
        }
        let positive = entries.iter().copied().filter(|&p| p > 0).collect();
        Self::new(Partition::from_parts_unchecked(positive), entries.len())
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// The zero-padded entries.
    pub fn entries(&self) -> Vec<usize> {
        let mut v = self.base.parts.clone();
        v.resize(self.length, 0);
        v
    }
}

impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};n={}", self.base, self.length)
    }
}

impl FromStr for PaddedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (parts, len) = match s.split_once(';') {
            Some((p, l)) => {
                let l = l.trim();
                let l = l
                    .strip_prefix("n=")
                    .ok_or_else(|| Error::input(format!("expected `;n=<len>` in {s:?}")))?;
                let len = l
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad padding length in {s:?}")))?;
                (p, Some(len))
            }
            None => (s, None),
        };
        let entries = parse_parts(parts)?;
        let padded = PaddedPartition::from_padded_parts(&entries)?;
        match len {
            Some(len) => PaddedPartition::new(padded.base, len),
            None => Ok(padded),
        }
    }
}

/// All partitions of `d`, optionally with at most `max_parts` parts, in
/// reverse-lexicographic order: `(d)` first, `(1^d)` last.
pub fn enumerate_partitions(d: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            // the rest must fit in slots-1 parts of size <= p
            if (remaining - p) > p * (slots - 1) {
                continue;
            }
            prefix.push(p);
            go(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let slots = max_parts.unwrap_or(d);
    go(d, d, slots, &mut Vec::new(), &mut out);
    out
}

/// P(d) by the standard parts-bounded counting recurrence (no enumeration).
pub fn partition_count(d: usize) -> BigUint {
    let mut table = vec![BigUint::zero(); d + 1];
    table[0] = BigUint::one();
    for part in 1..=d {
        for total in part..=d {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table.swap_remove(d)
}

/// Σ_{i=0}^{d-1} P(i) (OEIS A000070). Requires `d >= 1`.
pub fn a000070(d: usize) -> BigUint {
    assert!(d >= 1, "a000070 is defined for d >= 1");
    (0..d).map(partition_count).sum()
}

/// Dominance order `λ ⊵ μ` on partitions of equal weight.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.weight() != mu.weight() {
        return Err(Error::input(format!(
            "dominance needs equal weights: |{lambda}| = {} vs |{mu}| = {}",
            lambda.weight(),
            mu.weight()
        )));
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0usize, 0usize);
    for i in 0..len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplicities of the distinct values (zeros included) of the padded
/// entries, sorted decreasingly. A partition of `a.length()`.
pub fn metatype(a: &PaddedPartition) -> Partition {
    let entries = a.entries();
    let mut counts = Vec::new();
    let mut i = 0;
    // entries are sorted, so equal values are contiguous
    while i < entries.len() {
        let j = entries[i..].iter().take_while(|&&x| x == entries[i]).count();
        counts.push(j);
        i += j;
    }
    Partition::from_multiset(counts)
}
