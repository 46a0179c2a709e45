//! Canonical decompositions of `S_n`-modules into Specht modules, the
//! maximal `r`-generated submodule, minimal generator counts, and the
//! effective bound for generic `r`-generated symmetric ideals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::kostka::{kostka_metatype_sum, KostkaCache};
use crate::numbers::{biguint_json, monomial_count};
use crate::partitions::{a000070, enumerate_partitions, metatype, partition_count, Partition};
use crate::tableaux::specht_dim;

/// `⊕ n_λ S^λ` for partitions `λ ⊢ n`. Zero multiplicities are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    mults: BTreeMap<Partition, BigUint>,
}

impl Decomposition {
    pub fn zero(n: usize) -> Self {
        Decomposition {
            n,
            mults: BTreeMap::new(),
        }
    }

    pub fn from_mults(
        n: usize,
        mults: impl IntoIterator<Item = (Partition, BigUint)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("decomposition needs n >= 1"));
        }
        let mut out = Self::zero(n);
        for (lambda, m) in mults {
            out.set(lambda, m)?;
        }
        Ok(out)
    }

    pub fn set(&mut self, lambda: Partition, m: BigUint) -> Result<()> {
        if lambda.weight() != self.n {
            return Err(Error::input(format!(
                "({lambda}) is not a partition of {}",
                self.n
            )));
        }
        if m.is_zero() {
            self.mults.remove(&lambda);
        } else {
            self.mults.insert(lambda, m);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, lambda: &Partition) -> BigUint {
        self.mults.get(lambda).cloned().unwrap_or_default()
    }

    /// Non-zero entries in partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.mults.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// `Σ n_λ f^λ`.
    pub fn dimension(&self) -> BigUint {
        self.mults
            .iter()
            .map(|(lambda, m)| m * specht_dim(lambda))
            .sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .mults
            .iter()
            .map(|(lambda, m)| format!("{m}·S^({lambda})"))
            .collect();
        f.write_str(&terms.join(" ⊕ "))
    }
}

#[derive(Serialize, Deserialize)]
struct Count(#[serde(with = "biguint_json")] BigUint);

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    n: usize,
    mults: BTreeMap<Partition, Count>,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionRepr {
            n: self.n,
            mults: self
                .mults
                .iter()
                .map(|(k, v)| (k.clone(), Count(v.clone())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DecompositionRepr::deserialize(d)?;
        Decomposition::from_mults(repr.n, repr.mults.into_iter().map(|(k, v)| (k, v.0)))
            .map_err(de::Error::custom)
    }
}

/// Multiplicity of `S^λ` in `R_d`, with the `(n)` and `(n-1,1)` shortcuts.
fn rd_multiplicity(lambda: &Partition, d: usize, cache: &KostkaCache) -> BigUint {
    let n = lambda.weight();
    let fits = || enumerate_partitions(d, Some(n));
    if lambda.len() == 1 {
        // K_{(n),μ} = 1 for every μ
        BigUint::from(fits().len())
    } else if lambda.len() == 2 && lambda.part(1) == 1 {
        // K_{(n-1,1),μ} = #μ - 1
        fits()
            .into_iter()
            .map(|a| BigUint::from(metatype(&a.padded(n).expect("fits")).len() - 1))
            .sum()
    } else {
        kostka_metatype_sum(lambda, d, cache)
    }
}

/// The canonical decomposition of the degree-`d` homogeneous polynomials in
/// `n` variables.
pub fn decompose_rd(n: usize, d: usize, cache: &KostkaCache, exec: Execution) -> Result<Decomposition> {
    decompose_rd_with(n, d, exec, |lambda| rd_multiplicity(lambda, d, cache))
}

/// [`decompose_rd`] without the shortcuts: every multiplicity is a Kostka
/// metatype sum.
pub fn decompose_rd_generic(
    n: usize,
    d: usize,
    cache: &KostkaCache,
    exec: Execution,
) -> Result<Decomposition> {
    decompose_rd_with(n, d, exec, |lambda| kostka_metatype_sum(lambda, d, cache))
}

fn decompose_rd_with<F>(n: usize, d: usize, exec: Execution, mult: F) -> Result<Decomposition>
where
    F: Fn(&Partition) -> BigUint + Sync + Send,
{
    if n == 0 || d == 0 {
        return Err(Error::input(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    let shapes = enumerate_partitions(n, None);
    let mults = exec.map(&shapes, |lambda| mult(lambda));
    Decomposition::from_mults(n, shapes.into_iter().zip(mults))
}

/// Multiplicities `min(n_λ, r f^λ)`.
pub fn maximal_r_generated(v: &Decomposition, r: usize) -> Result<Decomposition> {
    if r == 0 {
        return Err(Error::input("r must be at least 1"));
    }
    let r = BigUint::from(r);
    Decomposition::from_mults(
        v.n(),
        v.iter()
            .map(|(lambda, m)| (lambda.clone(), m.clone().min(&r * specht_dim(lambda)))),
    )
}

/// `⌈max_λ n_λ / f^λ⌉`, or 0 for the zero module.
pub fn min_generators(v: &Decomposition) -> BigUint {
    v.iter()
        .map(|(lambda, m)| m.div_ceil(&specht_dim(lambda)))
        .max()
        .unwrap_or_default()
}

pub fn is_r_generated(v: &Decomposition, r: usize) -> bool {
    let r = BigUint::from(r);
    v.iter().all(|(lambda, m)| *m <= &r * specht_dim(lambda))
}

/// Both sides of the effective-bound equivalence for one `(n, d, r)` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    /// Dimension of the maximal `r`-generated submodule of `R_d`.
    #[serde(with = "biguint_json")]
    pub dim_max: BigUint,
    /// `dim R_d - (P(d) - r)`.
    #[serde(with = "biguint_json")]
    pub target: BigUint,
    pub equality: bool,
    /// `r (n - 1) ≥ Σ_{i<d} P(i)`.
    pub threshold_holds: bool,
}

impl BoundCheck {
    /// Whether this cell agrees with "equality iff threshold".
    pub fn consistent(&self) -> bool {
        self.equality == self.threshold_holds
    }
}

fn check_bound_preconditions(n: usize, d: usize, r: usize) -> Result<()> {
    if d == 0 || n <= d {
        return Err(Error::input(format!(
            "the bound requires n > d >= 1, got n={n}, d={d}"
        )));
    }
    if r == 0 || BigUint::from(r) > partition_count(d) {
        return Err(Error::input(format!(
            "r must lie in 1..=P({d}) = {}, got {r}",
            partition_count(d)
        )));
    }
    Ok(())
}

pub fn check_bound(n: usize, d: usize, r: usize, cache: &KostkaCache) -> Result<BoundCheck> {
    check_bound_preconditions(n, d, r)?;
    let rd = decompose_rd(n, d, cache, Execution::Sequential)?;
    check_bound_on(&rd, d, r)
}

/// [`check_bound`] reusing an already computed `R_d` decomposition.
pub fn check_bound_on(rd: &Decomposition, d: usize, r: usize) -> Result<BoundCheck> {
    let n = rd.n();
    check_bound_preconditions(n, d, r)?;
    let dim_max = maximal_r_generated(rd, r)?.dimension();
    let deficit = partition_count(d) - BigUint::from(r);
    let target = monomial_count(n, d) - deficit;
    let threshold_holds = BigUint::from(r) * BigUint::from(n - 1) >= a000070(d);
    Ok(BoundCheck {
        n,
        d,
        r,
        equality: dim_max == target,
        dim_max,
        target,
        threshold_holds,
    })
}

/// `f^λ` for every shape in a decomposition, keyed like the decomposition.
pub fn specht_dims(v: &Decomposition) -> BTreeMap<Partition, BigUint> {
    v.iter()
        .map(|(lambda, _)| (lambda.clone(), specht_dim(lambda)))
        .collect()
}

/// The regular representation `⊕ f^λ S^λ`.
pub fn regular_representation(n: usize) -> Decomposition {
    Decomposition::from_mults(
        n,
        enumerate_partitions(n, None)
            .into_iter()
            .map(|lambda| {
                let f = specht_dim(&lambda);
                (lambda, f)
            }),
    )
    .expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn rd(n: usize, d: usize) -> Decomposition {
        decompose_rd(n, d, &KostkaCache::new(), Execution::Sequential).unwrap()
    }

    #[test]
    fn small_decompositions() {
        let v = rd(3, 2);
        assert_eq!(
            v,
            Decomposition::from_mults(3, [(p("3"), big(2)), (p("2,1"), big(2))]).unwrap()
        );
        assert_eq!(v.dimension(), big(6));
        for d in 1..6 {
            assert_eq!(rd(1, d), Decomposition::from_mults(1, [(p("1"), big(1))]).unwrap());
        }
        assert_eq!(rd(7, 4).mult(&Partition::row(7)), partition_count(4));
        assert!(decompose_rd(0, 2, &KostkaCache::new(), Execution::Sequential).is_err());
    }

    #[test]
    fn shortcuts_agree_with_generic_path() {
        let cache = KostkaCache::new();
        for d in 1..=5 {
            for n in 1..=8 {
                assert_eq!(
                    decompose_rd(n, d, &cache, Execution::Sequential).unwrap(),
                    decompose_rd_generic(n, d, &cache, Execution::Sequential).unwrap(),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn maximal_submodule() {
        let m = maximal_r_generated(&rd(3, 2), 1).unwrap();
        assert_eq!(
            m,
            Decomposition::from_mults(3, [(p("3"), big(1)), (p("2,1"), big(2))]).unwrap()
        );
        assert_eq!(m.dimension(), big(5));
        let v = rd(5, 3);
        assert_eq!(maximal_r_generated(&v, 100).unwrap(), v);
        let reg = regular_representation(5);
        assert_eq!(maximal_r_generated(&reg, 1).unwrap(), reg);
        assert!(maximal_r_generated(&v, 0).is_err());
    }

    #[test]
    fn generator_counts() {
        let v = rd(2, 2);
        assert_eq!(
            v,
            Decomposition::from_mults(2, [(p("2"), big(2)), (p("1,1"), big(1))]).unwrap()
        );
        assert_eq!(min_generators(&v), big(2));
        assert_eq!(min_generators(&Decomposition::zero(4)), BigUint::zero());
        let trivial = Decomposition::from_mults(4, [(p("4"), big(1))]).unwrap();
        assert_eq!(min_generators(&trivial), BigUint::one());
        let two = Decomposition::from_mults(4, [(p("4"), big(2))]).unwrap();
        assert!(!is_r_generated(&two, 1));
        assert!(is_r_generated(&two, 2));
    }

    #[test]
    fn bound_examples() {
        let cache = KostkaCache::new();
        let c = check_bound(5, 3, 1, &cache).unwrap();
        assert!(c.equality && c.threshold_holds);
        let c = check_bound(4, 3, 1, &cache).unwrap();
        assert!(!c.equality && !c.threshold_holds);
        let c = check_bound(3, 2, 1, &cache).unwrap();
        assert!(c.equality && c.threshold_holds);
        assert_eq!(c.dim_max, big(5));
        assert_eq!(c.target, big(5));
        assert!(matches!(check_bound(3, 3, 1, &cache), Err(Error::Input(_))));
        assert!(matches!(check_bound(5, 3, 4, &cache), Err(Error::Input(_))));
        assert!(matches!(check_bound(5, 3, 0, &cache), Err(Error::Input(_))));
    }

    #[test]
    fn json_round_trip() {
        let v = rd(5, 3);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Decomposition>(&s).unwrap(), v);
        let bad = r#"{"n":3,"mults":{"2,1,1":1}}"#;
        assert!(serde_json::from_str::<Decomposition>(bad).is_err());
        let text = r#"{"n":2,"mults":{"2":"2","1,1":1}}"#;
        assert_eq!(min_generators(&serde_json::from_str(text).unwrap()), big(2));
    }
}
