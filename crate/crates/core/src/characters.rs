//! Irreducible characters of the symmetric group via the
//! Murnaghan–Nakayama rule, conjugacy-class sizes, and the character inner
//! product that turns a trace function into a multiplicity.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::numbers::{biguint_json, factorial};
use crate::partitions::{enumerate_partitions, Partition};

/// A conjugacy class of `S_n`, labelled by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    #[serde(rename = "type")]
    cycle_type: Partition,
    #[serde(with = "biguint_json")]
    class_size: BigUint,
}

impl CycleType {
    pub fn new(cycle_type: Partition) -> Self {
        let class_size = class_size(&cycle_type);
        CycleType {
            cycle_type,
            class_size,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Partition::column(n))
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    pub fn class_size(&self) -> &BigUint {
        &self.class_size
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        let odd = self.cycle_type.parts().iter().filter(|&&k| k % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The canonical representative: consecutive cycles
    /// `(1 .. ρ_1)(ρ_1+1 .. ρ_1+ρ_2)...`, as a 0-based image array.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.cycle_type.weight());
        let mut start = 0;
        for &k in self.cycle_type.parts() {
            for i in 0..k {
                perm.push(start + (i + 1) % k);
            }
            start += k;
        }
        perm
    }

    /// All classes of `S_n`, in partition order (`(n)` first).
    pub fn all(n: usize) -> Vec<CycleType> {
        enumerate_partitions(n, None)
            .into_iter()
            .map(CycleType::new)
            .collect()
    }
}

/// `n! / ∏_k k^{e_k} e_k!` where `e_k` is the number of `k`-cycles.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    let mut centralizer = BigUint::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let e = parts[i..].iter().take_while(|&&x| x == k).count();
        centralizer *= BigUint::from(k).pow(e as u32) * factorial(e);
        i += e;
    }
    factorial(cycle_type.weight()) / centralizer
}

/// Removes every `k`-rim hook from `shape`, returning the remaining shapes
/// with the sign `(-1)^{height}`. Works on beta-sets: a rim hook of length
/// `k` is a bead moving from `b` to an empty position `b - k`, and the
/// height is the number of beads jumped over.
fn remove_rim_hooks(shape: &Partition, k: usize) -> Vec<(Partition, bool)> {
    let m = shape.len();
    let beta: Vec<usize> = (0..m).map(|i| shape.part(i) + (m - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        out.push((Partition::from_parts_unchecked(parts), jumped % 2 == 1));
    }
    out
}

#[derive(Default)]
struct MnMemo {
    table: HashMap<(Partition, Partition), BigInt>,
}

impl MnMemo {
    // cycles are consumed largest-first: `rho.parts()[0]` is removed
    fn value(&mut self, shape: &Partition, rho: &Partition) -> BigInt {
        if rho.is_empty() {
            return BigInt::one();
        }
        let key = (shape.clone(), rho.clone());
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        let k = rho.part(0);
        let rest = Partition::from_parts_unchecked(rho.parts()[1..].to_vec());
        let mut total = BigInt::zero();
        for (smaller, negative) in remove_rim_hooks(shape, k) {
            let v = self.value(&smaller, &rest);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
        self.table.insert(key, total.clone());
        total
    }
}

/// `χ_λ(ρ)`.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.weight() != rho.cycle_type().weight() {
        return Err(Error::input(format!(
            "character χ_({lambda}) evaluated on a class of S_{}",
            rho.cycle_type().weight()
        )));
    }
    Ok(MnMemo::default().value(lambda, rho.cycle_type()))
}

/// The full character table of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    classes: Vec<CycleType>,
    /// `values[i][j] = χ_{shapes[i]}(classes[j])`
    values: Vec<Vec<BigInt>>,
}

impl Serialize for CharacterTable {
    /// `{"n", "classes": [{"type", "class_size"}], "rows": [{"shape", "values"}]}`;
    /// values are JSON integers when they fit in an `i64`, strings otherwise.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            shape: &'a Partition,
            values: Vec<serde_json::Value>,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            classes: &'a [CycleType],
            rows: Vec<Row<'a>>,
        }
        let value = |v: &BigInt| match v.to_i64() {
            Some(x) => serde_json::Value::from(x),
            None => serde_json::Value::from(v.to_string()),
        };
        Repr {
            n: self.n,
            classes: &self.classes,
            rows: self
                .shapes
                .iter()
                .zip(&self.values)
                .map(|(shape, vals)| Row {
                    shape,
                    values: vals.iter().map(value).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

pub fn character_table(n: usize, caps: &Caps) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::input("character table needs n >= 1"));
    }
    Error::check_cap("character table", n, caps.characters)?;
    let shapes = enumerate_partitions(n, None);
    let classes = CycleType::all(n);
    let mut memo = MnMemo::default();
    let values = shapes
        .iter()
        .map(|lambda| {
            classes
                .iter()
                .map(|rho| memo.value(lambda, rho.cycle_type()))
                .collect()
        })
        .collect();
    Ok(CharacterTable {
        n,
        shapes,
        classes,
        values,
    })
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[BigInt]> {
        let i = self.shapes.iter().position(|s| s == lambda)?;
        Some(&self.values[i])
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        let j = self.classes.iter().position(|c| c.cycle_type() == rho)?;
        self.row(lambda).map(|r| &r[j])
    }

    /// Fixed-width text rendering with classes as columns.
    pub fn to_ascii(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["λ \\ ρ".to_string()];
        header.extend(self.classes.iter().map(|c| format!("({})", c.cycle_type())));
        cells.push(header);
        let mut sizes = vec!["|class|".to_string()];
        sizes.extend(self.classes.iter().map(|c| c.class_size().to_string()));
        cells.push(sizes);
        for (shape, row) in self.shapes.iter().zip(&self.values) {
            let mut line = vec![format!("({shape})")];
            line.extend(row.iter().map(ToString::to_string));
            cells.push(line);
        }
        let cols = cells[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `⟨χ_V, χ_λ⟩ = (1/n!) Σ_ρ |ρ| χ_V(ρ) χ_λ(ρ)`, where `trace` maps each cycle
/// type to `χ_V` on that class. Fails unless the result is a non-negative
/// integer, since then `trace` cannot be the character of a module.
pub fn multiplicity_from_trace(
    trace: &BTreeMap<Partition, BigRational>,
    lambda: &Partition,
    table: &CharacterTable,
) -> Result<BigUint> {
    let row = table.row(lambda).ok_or_else(|| {
        Error::input(format!(
            "({lambda}) is not a partition of {}",
            table.n()
        ))
    })?;
    let mut sum = BigRational::zero();
    for (class, chi) in table.classes().iter().zip(row) {
        let t = trace.get(class.cycle_type()).ok_or_else(|| {
            Error::input(format!(
                "trace is missing the class ({})",
                class.cycle_type()
            ))
        })?;
        let weight = BigInt::from(class.class_size().clone()) * chi;
        sum += t * BigRational::from_integer(weight);
    }
    let m = sum / BigRational::from_integer(BigInt::from(factorial(table.n())));
    if !m.is_integer() || m.is_negative() {
        return Err(Error::input(format!(
            "inner product with χ_({lambda}) is {m}, not a multiplicity"
        )));
    }
    Ok(m.to_integer()
        .to_biguint()
        .expect("checked non-negative"))
}
