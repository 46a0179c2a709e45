//! The extremal principal symmetric ideal `J`: monomial symmetric
//! polynomials, the trivial-isotypic piece `W = ⟨m_a : a ⊢ d, a ≠ (d)⟩`,
//! and the complement `J_d` built orbit by orbit.
//!
//! `J_d` is realized as the full orbit of `x_1^d` together with, for every
//! other `a ⊢ d`, the vectors `x^{a_first} - x^{a'}` spanning the
//! coefficient-sum-zero part of the orbit of `x^a`. Within one orbit the
//! sum-zero subspace is exactly the annihilator of `m_a` under the
//! monomial pairing, so `R_d = W ⊕ J_d`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ideal::{orbit_span, SubspaceBasis};
use crate::numbers::monomial_count;
use crate::partitions::{enumerate_partitions, partition_count, PaddedPartition, Partition};
use crate::polynomial::{Exponents, MonomialBasis, Polynomial};

/// `m_a`: the sum of the distinct monomials whose exponent vector is a
/// rearrangement of `a`.
pub fn monomial_symmetric(a: &PaddedPartition) -> Polynomial {
    let n = a.length();
    let d = a.base().weight();
    let terms = orbit_exponents(&MonomialBasis::new(n, d), a.base())
        .into_iter()
        .map(|e| (e, BigRational::one()));
    Polynomial::from_terms(n, d, terms).expect("orbit of a has degree |a|")
}

/// Exponent vectors in the orbit of `a`, in monomial-basis order.
fn orbit_exponents(monomials: &MonomialBasis, a: &Partition) -> Vec<Exponents> {
    monomials
        .exponents()
        .iter()
        .filter(|e| sorted_type(e) == *a)
        .cloned()
        .collect()
}

fn sorted_type(e: &[usize]) -> Partition {
    Partition::from_multiset(e.to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// Every monomial of the orbit.
    FullOrbit,
    /// The single vector `m_a`.
    SymmetricSum,
    /// Differences `x^{first} - x^{other}` within the orbit.
    SumZero,
}

/// One orbit's contribution to an [`OrbitSumBasis`].
#[derive(Debug, Clone)]
pub struct OrbitBlock {
    pub partition: Partition,
    pub kind: BlockKind,
    pub vectors: Vec<Polynomial>,
}

/// A basis assembled from per-orbit blocks, in partition order. Distinct
/// blocks have disjoint monomial support.
#[derive(Debug, Clone)]
pub struct OrbitSumBasis {
    pub n: usize,
    pub d: usize,
    pub blocks: Vec<OrbitBlock>,
}

impl OrbitSumBasis {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.vectors.len()).sum()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &Polynomial> {
        self.blocks.iter().flat_map(|b| b.vectors.iter())
    }

    pub fn to_subspace(&self) -> SubspaceBasis {
        let mut basis = SubspaceBasis::empty(self.n, self.d);
        for v in self.vectors() {
            basis.insert(v).expect("block vectors live in R_d");
        }
        basis
    }
}

fn block(monomials: &MonomialBasis, a: &Partition, kind: BlockKind) -> OrbitBlock {
    let (n, d) = (monomials.n(), monomials.d());
    let orbit = orbit_exponents(monomials, a);
    let one = BigRational::one;
    let vectors = match kind {
        BlockKind::FullOrbit => orbit.into_iter().map(Polynomial::monomial).collect(),
        BlockKind::SymmetricSum => vec![Polynomial::from_terms(
            n,
            d,
            orbit.into_iter().map(|e| (e, one())),
        )
        .expect("orbit in R_d")],
        BlockKind::SumZero => orbit[1..]
            .iter()
            .map(|e| {
                Polynomial::from_terms(n, d, [(orbit[0].clone(), one()), (e.clone(), -one())])
                    .expect("orbit in R_d")
            })
            .collect(),
    };
    OrbitBlock {
        partition: a.clone(),
        kind,
        vectors,
    }
}

fn require_n_ge_d(n: usize, d: usize) -> Result<()> {
    if d == 0 || n < d {
        return Err(Error::input(format!(
            "construction needs n >= d >= 1, got n={n}, d={d}"
        )));
    }
    Ok(())
}

fn build_blocks(
    n: usize,
    d: usize,
    exec: Execution,
    kind_for: impl Fn(&Partition) -> Option<BlockKind> + Sync + Send,
) -> OrbitSumBasis {
    let monomials = MonomialBasis::new(n, d);
    let parts = enumerate_partitions(d, Some(n));
    let blocks = exec
        .map(&parts, |a| kind_for(a).map(|k| block(&monomials, a, k)))
        .into_iter()
        .flatten()
        .collect();
    OrbitSumBasis { n, d, blocks }
}

/// Blocks of `W`: one `m_a` per `a ⊢ d` other than `(d)`.
pub fn w_blocks(n: usize, d: usize, exec: Execution) -> Result<OrbitSumBasis> {
    require_n_ge_d(n, d)?;
    let top = Partition::row(d);
    Ok(build_blocks(n, d, exec, |a| {
        (*a != top).then_some(BlockKind::SymmetricSum)
    }))
}

/// Blocks of `J_d`.
pub fn jd_blocks(n: usize, d: usize, exec: Execution) -> Result<OrbitSumBasis> {
    require_n_ge_d(n, d)?;
    let top = Partition::row(d);
    Ok(build_blocks(n, d, exec, |a| {
        Some(if *a == top {
            BlockKind::FullOrbit
        } else {
            BlockKind::SumZero
        })
    }))
}

pub fn construct_w(n: usize, d: usize) -> Result<SubspaceBasis> {
    Ok(w_blocks(n, d, Execution::Sequential)?.to_subspace())
}

pub fn construct_jd(n: usize, d: usize) -> Result<SubspaceBasis> {
    Ok(jd_blocks(n, d, Execution::Sequential)?.to_subspace())
}

/// For each `a ⊢ d` (at most `n` parts), the sum of the coefficients of `f`
/// over the orbit of `x^a`.
pub fn check_coefficient_sums(f: &Polynomial) -> BTreeMap<Partition, BigRational> {
    let mut sums: BTreeMap<Partition, BigRational> = enumerate_partitions(f.degree(), Some(f.n()))
        .into_iter()
        .map(|a| (a, BigRational::zero()))
        .collect();
    for (e, c) in f.terms() {
        *sums.entry(sorted_type(e)).or_insert_with(BigRational::zero) += c;
    }
    sums
}

/// Hilbert function of `R/J` in degree `i`: all monomials below `d`,
/// `P(d) - 1` at `d`, nothing above.
pub fn expected_hilbert(n: usize, d: usize, i: usize) -> Result<BigUint> {
    if d < 2 {
        return Err(Error::input(format!("Hilbert function needs d >= 2, got {d}")));
    }
    Ok(match i.cmp(&d) {
        std::cmp::Ordering::Less => monomial_count(n, i),
        std::cmp::Ordering::Equal => partition_count(d) - BigUint::one(),
        std::cmp::Ordering::Greater => BigUint::zero(),
    })
}

/// A single polynomial proposed as generator of `J`, with its certificate.
#[derive(Debug, Clone)]
pub struct CertifiedGenerator {
    pub generator: Polynomial,
    /// Dimension of the orbit span of `generator`.
    pub orbit_dim: usize,
    /// `dim J_d`.
    pub target_dim: usize,
    pub attempts: usize,
}

impl CertifiedGenerator {
    /// The orbit of the generator fills `J_d`.
    pub fn certified(&self) -> bool {
        self.orbit_dim == self.target_dim
    }
}

/// Draws random integer combinations of the `J_d` basis (coefficients in
/// `-9..=9`) until one has an orbit spanning all of `J_d`, or
/// `max_attempts` draws are used up. The last draw is returned either way.
pub fn random_jd_generator(
    n: usize,
    d: usize,
    seed: u64,
    max_attempts: usize,
    caps: &Caps,
) -> Result<CertifiedGenerator> {
    let jd = construct_jd(n, d)?;
    let basis = jd.basis();
    let target_dim = jd.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for attempt in 1..=max_attempts.max(1) {
        let mut g = Polynomial::zero(n, d);
        for row in &basis {
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9)));
            if c.is_zero() {
                continue;
            }
            for (e, x) in row.terms() {
                g.add_term(e.clone(), &c * x)?;
            }
        }
        let orbit_dim = if g.is_zero() {
            0
        } else {
            orbit_span(std::slice::from_ref(&g), caps)?.dim()
        };
        let cand = CertifiedGenerator {
            generator: g,
            orbit_dim,
            target_dim,
            attempts: attempt,
        };
        if cand.certified() {
            return Ok(cand);
        }
        last = Some(cand);
    }
    Ok(last.expect("at least one attempt"))
}
