//! Exhaustive verification sweeps. Each returns a report whose violations
//! are data; nothing here fails because a statement turned out false.
//!
//! Sweeps fan out over independent cells with [`Execution`] and collect in
//! input order, so reports are identical whichever strategy ran them.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::kostka::{kostka, kostka_metatype_sum, KostkaCache};
use crate::module_structure::{check_bound_on, decompose_rd, BoundCheck};
use crate::numbers::{biguint_json, factorial};
use crate::partitions::{a000070, enumerate_partitions, partition_count, Partition};
use crate::tableaux::specht_dim;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KostkaInequalityReport {
    pub n: usize,
    pub checked: usize,
    /// Pairs `(λ, μ)` with `(n-1) K_{λ,μ} > (#μ - 1) f^λ`.
    pub violations: Vec<(Partition, Partition)>,
}

impl KostkaInequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `(n-1) K_{λ,μ} ≤ (#μ - 1) f^λ` for every `λ ≠ (n)` and every `μ ⊢ n`.
pub fn verify_kostka_inequality(
    n: usize,
    cache: &KostkaCache,
    exec: Execution,
) -> Result<KostkaInequalityReport> {
    if n < 2 {
        return Err(Error::input(format!("inequality sweep needs n >= 2, got {n}")));
    }
    let shapes: Vec<Partition> = enumerate_partitions(n, None)
        .into_iter()
        .filter(|l| l.len() > 1)
        .collect();
    let contents = enumerate_partitions(n, None);
    let per_shape = exec.map(&shapes, |lambda| {
        let f = specht_dim(lambda);
        contents
            .iter()
            .filter(|mu| {
                let k = kostka(lambda, mu, cache).expect("same weight");
                BigUint::from(n - 1) * k > BigUint::from(mu.len() - 1) * &f
            })
            .map(|mu| (lambda.clone(), mu.clone()))
            .collect::<Vec<_>>()
    });
    Ok(KostkaInequalityReport {
        n,
        checked: shapes.len() * contents.len(),
        violations: per_shape.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixRow {
    pub lambda: Partition,
    pub kostka: u64,
    pub dim: u64,
    /// `(n-1) K_{λ,μ}`
    pub lhs: u64,
    /// `(#μ - 1) f^λ`
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixTable {
    pub mu: Partition,
    pub rows: Vec<AppendixRow>,
}

fn row(lambda: &str, kostka: u64, dim: u64, lhs: u64, rhs: u64) -> AppendixRow {
    AppendixRow {
        lambda: lambda.parse().expect("literal partition"),
        kostka,
        dim,
        lhs,
        rhs,
    }
}

/// The two published tables, transcribed.
pub fn published_appendix_tables() -> Vec<AppendixTable> {
    vec![
        AppendixTable {
            mu: "2,2,1".parse().expect("literal"),
            rows: vec![
                row("3,2", 2, 5, 8, 10),
                row("3,1,1", 1, 6, 4, 12),
                row("2,2,1", 1, 5, 4, 10),
            ],
        },
        AppendixTable {
            mu: "2,2,2".parse().expect("literal"),
            rows: vec![
                row("4,1,1", 1, 10, 5, 20),
                row("3,3", 1, 5, 5, 10),
                row("3,2,1", 2, 16, 10, 32),
                row("2,2,2", 1, 5, 5, 10),
            ],
        },
    ]
}

/// Recomputes every cell of the published tables.
pub fn reproduce_appendix_tables(cache: &KostkaCache) -> Vec<AppendixTable> {
    let to_u64 = |x: BigUint| u64::try_from(x).expect("small values");
    published_appendix_tables()
        .into_iter()
        .map(|t| {
            let mu = t.mu;
            let n = mu.weight();
            let rows = t
                .rows
                .into_iter()
                .map(|r| {
                    let k = kostka(&r.lambda, &mu, cache).expect("same weight");
                    let f = specht_dim(&r.lambda);
                    AppendixRow {
                        lhs: to_u64(BigUint::from(n - 1) * &k),
                        rhs: to_u64(BigUint::from(mu.len() - 1) * &f),
                        kostka: to_u64(k),
                        dim: to_u64(f),
                        lambda: r.lambda,
                    }
                })
                .collect();
            AppendixTable { mu, rows }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementaryBounds {
    pub n_max: usize,
    pub l_max: usize,
    pub p_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementaryCase {
    pub n: usize,
    pub l: usize,
    pub p: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementaryReport {
    pub bounds: ElementaryBounds,
    pub checked: usize,
    /// Tuples in range with `n < l·p`, outside the hypothesis.
    pub skipped: usize,
    pub violations: Vec<ElementaryCase>,
}

fn rational(x: BigUint) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Both sides of
/// `(n-1)(p+l-2)! / (p!(l-2)!) ≤ (l-1) n! (n-2p+1) / (p!(n-p+1)!)`.
pub fn elementary_sides(n: usize, l: usize, p: usize) -> (BigRational, BigRational) {
    let lhs = rational(BigUint::from(n - 1) * factorial(p + l - 2))
        / rational(factorial(p) * factorial(l - 2));
    let rhs = rational(BigUint::from(l - 1) * factorial(n) * BigUint::from(n + 1 - 2 * p))
        / rational(factorial(p) * factorial(n + 1 - p));
    (lhs, rhs)
}

/// Sweeps `5 ≤ n ≤ n_max`, `2 ≤ l ≤ l_max`, `2 ≤ p ≤ p_max`, keeping tuples
/// with `n ≥ l·p`.
pub fn verify_elementary_inequality(bounds: ElementaryBounds, exec: Execution) -> Result<ElementaryReport> {
    if bounds.n_max == 0 || bounds.l_max == 0 || bounds.p_max == 0 {
        return Err(Error::input("bounds must be positive"));
    }
    let mut tuples = Vec::new();
    let mut skipped = 0;
    for n in 5..=bounds.n_max {
        for l in 2..=bounds.l_max {
            for p in 2..=bounds.p_max {
                if n >= l * p {
                    tuples.push((n, l, p));
                } else {
                    skipped += 1;
                }
            }
        }
    }
    let results = exec.map(&tuples, |&(n, l, p)| {
        let (lhs, rhs) = elementary_sides(n, l, p);
        (lhs > rhs).then(|| ElementaryCase {
            n,
            l,
            p,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    });
    Ok(ElementaryReport {
        bounds,
        checked: tuples.len(),
        skipped,
        violations: results.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainInequalityRow {
    pub lambda: Partition,
    /// `(n-1) Σ_a K_{λ,m(a)}`
    #[serde(with = "biguint_json")]
    pub lhs: BigUint,
    /// `A000070(d) f^λ`
    #[serde(with = "biguint_json")]
    pub rhs: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainInequalityReport {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<MainInequalityRow>,
    pub violations: Vec<Partition>,
}

impl MainInequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every `λ ⊢ n`, `λ ≠ (n)`: `(n-1) Σ_a K_{λ,m(a)} ≤ A000070(d) f^λ`.
pub fn verify_main_inequality(
    n: usize,
    d: usize,
    cache: &KostkaCache,
    exec: Execution,
) -> Result<MainInequalityReport> {
    if d == 0 || n <= d {
        return Err(Error::input(format!("main inequality needs n > d >= 1, got n={n}, d={d}")));
    }
    let shapes: Vec<Partition> = enumerate_partitions(n, None)
        .into_iter()
        .filter(|l| l.len() > 1)
        .collect();
    let bound = a000070(d);
    let rows = exec.map(&shapes, |lambda| MainInequalityRow {
        lambda: lambda.clone(),
        lhs: BigUint::from(n - 1) * kostka_metatype_sum(lambda, d, cache),
        rhs: &bound * specht_dim(lambda),
    });
    let violations = rows
        .iter()
        .filter(|r| r.lhs > r.rhs)
        .map(|r| r.lambda.clone())
        .collect();
    Ok(MainInequalityReport {
        n,
        d,
        rows,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundGridReport {
    pub cells: Vec<BoundCheck>,
    /// Cells where equality and the threshold disagree.
    pub inconsistent: Vec<BoundCheck>,
}

impl BoundGridReport {
    pub fn holds(&self) -> bool {
        self.inconsistent.is_empty()
    }
}

/// Every `(n, d, r)` with `d` in `degrees`, `1 ≤ r ≤ P(d)` and
/// `d < n ≤ d + extra_n`. `R_d` is decomposed once per `(n, d)`.
pub fn verify_bound_grid(
    degrees: &[usize],
    extra_n: usize,
    cache: &KostkaCache,
    exec: Execution,
) -> Result<BoundGridReport> {
    let mut nd = Vec::new();
    for &d in degrees {
        if d == 0 {
            return Err(Error::input("degrees must be positive"));
        }
        nd.extend((d + 1..=d + extra_n).map(|n| (n, d)));
    }
    let per_nd = exec.map(&nd, |&(n, d)| -> Result<Vec<BoundCheck>> {
        let rd = decompose_rd(n, d, cache, Execution::Sequential)?;
        let rmax = usize::try_from(partition_count(d)).expect("P(d) fits in usize");
        (1..=rmax).map(|r| check_bound_on(&rd, d, r)).collect()
    });
    let mut cells = Vec::new();
    for c in per_nd {
        cells.extend(c?);
    }
    cells.sort_by_key(|c| (c.d, c.r, c.n));
    let inconsistent = cells.iter().filter(|c| !c.consistent()).cloned().collect();
    Ok(BoundGridReport {
        cells,
        inconsistent,
    })
}

/// `Σ_a K_{(n-1,1),m(a)}/(n-1)` minus the largest ratio over the other
/// non-trivial shapes; non-negative when `(n-1,1)` attains the maximum.
pub fn ratio_margin(n: usize, d: usize, cache: &KostkaCache) -> BigRational {
    let ratio = |lambda: &Partition| {
        BigRational::new(
            kostka_metatype_sum(lambda, d, cache).into(),
            specht_dim(lambda).into(),
        )
    };
    let standard = ratio(&Partition::hook_standard(n));
    let worst = enumerate_partitions(n, None)
        .iter()
        .filter(|l| l.len() > 1)
        .map(ratio)
        .max()
        .unwrap_or_else(BigRational::zero);
    standard - worst
}
