//! Kostka numbers.
//!
//! [`kostka`] strips the last part of the content as a horizontal strip and
//! recurses, memoizing on `(shape, content)`. [`kostka_bruteforce`] counts
//! semistandard tableaux directly and serves as the independent check.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, metatype, Partition};
use crate::tableaux::enumerate_ssyt;

/// Shared memo table for [`kostka`]. `Sync`, so one cache can serve a whole
/// rayon sweep; a racing duplicate computation stores the same value.
#[derive(Debug, Default)]
pub struct KostkaCache {
    table: RwLock<HashMap<(Partition, Partition), BigUint>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries: self.table.read().len(),
        }
    }

    pub fn clear(&self) {
        self.table.write().clear();
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }

    fn get(&self, key: &(Partition, Partition)) -> Option<BigUint> {
        let found = self.table.read().get(key).cloned();
        match found {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        found
    }

    fn insert(&self, key: (Partition, Partition), value: BigUint) {
        self.table.write().insert(key, value);
    }
}

/// All `v ≥ 0` with `Σ v = k` such that `λ - v` is still a partition, i.e.
/// `v_i ≤ λ_i - λ_{i+1}` (horizontal strips of size `k`). Vectors have
/// length `#λ` and come out in lexicographically decreasing order.
pub fn strip_vectors(lambda: &Partition, k: usize) -> Vec<Vec<usize>> {
    let slack: Vec<usize> = (0..lambda.len())
        .map(|i| lambda.part(i) - lambda.part(i + 1))
        .collect();
    // suffix sums bound how much the tail can still absorb
    let mut tail = vec![0usize; slack.len() + 1];
    for i in (0..slack.len()).rev() {
        tail[i] = tail[i + 1] + slack[i];
    }
    fn go(
        slack: &[usize],
        tail: &[usize],
        i: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == slack.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if tail[i] < left {
            return;
        }
        for take in (0..=slack[i].min(left)).rev() {
            cur.push(take);
            go(slack, tail, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&slack, &tail, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `λ - v` with trailing zeros dropped.
pub(crate) fn subtract_strip(lambda: &Partition, v: &[usize]) -> Partition {
    let parts = lambda
        .parts()
        .iter()
        .zip(v)
        .map(|(l, x)| l - x)
        .filter(|&p| p > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// `K_{λ,μ}` by the horizontal-strip recursion on the last part of `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition, cache: &KostkaCache) -> Result<BigUint> {
    if lambda.weight() != mu.weight() {
        return Err(Error::input(format!(
            "Kostka number needs |λ| = |μ|, got ({lambda}) and ({mu})"
        )));
    }
    if mu.is_empty() {
        return Ok(BigUint::one());
    }
    Ok(kostka_rec(lambda, mu, cache))
}

fn kostka_rec(lambda: &Partition, mu: &Partition, cache: &KostkaCache) -> BigUint {
    // columns are strict, so more rows than distinct values is impossible
    if lambda.len() > mu.len() {
        return BigUint::zero();
    }
    if mu.len() == 1 {
        return if lambda == mu {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache.get(&key) {
        return v;
    }
    let last = mu.part(mu.len() - 1);
    let shorter = Partition::from_parts_unchecked(mu.parts()[..mu.len() - 1].to_vec());
    let value: BigUint = strip_vectors(lambda, last)
        .iter()
        .map(|v| kostka_rec(&subtract_strip(lambda, v), &shorter, cache))
        .sum();
    cache.insert(key, value.clone());
    value
}

/// `K_{λ,μ}` as the number of semistandard tableaux.
pub fn kostka_bruteforce(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_ssyt(lambda, mu, caps)?.len()))
}

/// `Σ_{a ⊢ d, #a ≤ n} K_{λ, m(a)}` where `m(a)` is the metatype of `a`
/// padded to `n = |λ|` entries. This is the multiplicity of `S^λ` in the
/// degree-`d` polynomials in `n` variables.
pub fn kostka_metatype_sum(lambda: &Partition, d: usize, cache: &KostkaCache) -> BigUint {
    let n = lambda.weight();
    enumerate_partitions(d, Some(n))
        .into_iter()
        .map(|a| {
            let m = metatype(&a.padded(n).expect("at most n parts"));
            kostka(lambda, &m, cache).expect("metatype has weight n")
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dominates;
    use crate::tableaux::specht_dim;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn k(l: &str, m: &str) -> BigUint {
        kostka(&p(l), &p(m), &KostkaCache::new()).unwrap()
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(k("4,3,1", "3,3,2"), BigUint::from(2u32));
        assert_eq!(k("2,2", "3,1"), BigUint::zero());
        for lambda in enumerate_partitions(6, None) {
            assert_eq!(
                kostka(&lambda, &Partition::column(6), &KostkaCache::new()).unwrap(),
                specht_dim(&lambda)
            );
        }
        assert!(kostka(&p("2"), &p("1"), &KostkaCache::new()).is_err());
        assert_eq!(k("", ""), BigUint::one());
    }

    #[test]
    fn bruteforce_examples() {
        let caps = Caps::default();
        assert_eq!(
            kostka_bruteforce(&p("3,2"), &p("2,2,1"), &caps).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            kostka_bruteforce(&p("2,1,1"), &p("2,1,1"), &caps).unwrap(),
            BigUint::one()
        );
        for mu in enumerate_partitions(7, None) {
            assert_eq!(
                kostka_bruteforce(&p("6,1"), &mu, &caps).unwrap(),
                BigUint::from(mu.len() - 1)
            );
        }
    }

    #[test]
    fn strips() {
        assert_eq!(strip_vectors(&p("2,1"), 1), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(strip_vectors(&p("5"), 5), vec![vec![5]]);
        assert!(strip_vectors(&p("2,2"), 3).is_empty());
        // oracle: filter every composition of 2 into 2 parts
        let lambda = p("3,1");
        let mut expected = Vec::new();
        for a in (0..=2).rev() {
            let v = vec![a, 2 - a];
            let rest = [3 - v[0] as isize, 1 - v[1] as isize];
            if rest[1] >= 0 && rest[0] >= rest[1] {
                expected.push(v);
            }
        }
        assert_eq!(strip_vectors(&lambda, 2), expected);
    }

    #[test]
    fn metatype_sums() {
        let cache = KostkaCache::new();
        assert_eq!(kostka_metatype_sum(&p("2,2"), 2, &cache), BigUint::one());
        assert_eq!(kostka_metatype_sum(&p("6,1"), 4, &cache), crate::partitions::a000070(4));
        assert_eq!(
            kostka_metatype_sum(&Partition::row(7), 5, &cache),
            crate::partitions::partition_count(5)
        );
    }

    #[test]
    fn positivity_matches_dominance() {
        let cache = KostkaCache::new();
        for n in 1..=7 {
            for l in enumerate_partitions(n, None) {
                for m in enumerate_partitions(n, None) {
                    let v = kostka(&l, &m, &cache).unwrap();
                    assert_eq!(!v.is_zero(), dominates(&l, &m).unwrap(), "({l}) ({m})");
                }
            }
        }
    }

    #[test]
    fn warm_cache_is_transparent() {
        let cache = KostkaCache::new();
        let parts = enumerate_partitions(7, None);
        let cold: Vec<_> = parts
            .iter()
            .map(|m| kostka(&p("4,2,1"), m, &cache).unwrap())
            .collect();
        assert!(cache.stats().entries > 0);
        let warm: Vec<_> = parts
            .iter()
            .map(|m| kostka(&p("4,2,1"), m, &cache).unwrap())
            .collect();
        assert_eq!(cold, warm);
        assert!(cache.stats().hits > 0);
        cache.clear();
        assert_eq!(cache.stats().entries, 0);
    }
}
