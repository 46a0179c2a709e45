//! Orbit-spanned submodules of `R_d` and their decomposition, i.e. the
//! degree-`d` component of the symmetric ideal generated by explicit
//! polynomials, and the minimal number of symmetric generators it needs.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::{character_table, multiplicity_from_trace, CharacterTable, CycleType};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::module_structure::{min_generators, Decomposition};
use crate::polynomial::{MonomialBasis, Polynomial};

/// A permutation of `{0, .., n-1}` as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Swaps `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `x^a ↦ ∏ x_{σ(i)}^{a_i}`.
    fn act_on_exponents(&self, a: &[usize]) -> Vec<usize> {
        let mut b = vec![0; a.len()];
        for (i, &e) in a.iter().enumerate() {
            b[self.0[i]] = e;
        }
        b
    }

    /// Where each basis monomial goes under this permutation.
    fn column_map(&self, basis: &MonomialBasis) -> Vec<usize> {
        basis
            .exponents()
            .iter()
            .map(|e| {
                basis
                    .position(&self.act_on_exponents(e))
                    .expect("permuted monomial has the same degree")
            })
            .collect()
    }
}

fn apply_columns(map: &[usize], v: &[BigRational]) -> Vec<BigRational> {
    let mut w = vec![BigRational::zero(); v.len()];
    for (c, x) in v.iter().enumerate() {
        w[map[c]] = x.clone();
    }
    w
}

/// `σ·f(x_1, .., x_n) = f(x_{σ(1)}, .., x_{σ(n)})`.
pub fn permute(sigma: &Permutation, f: &Polynomial) -> Result<Polynomial> {
    if sigma.len() != f.n() {
        return Err(Error::input(format!(
            "permutation of {} symbols applied to a polynomial in {} variables",
            sigma.len(),
            f.n()
        )));
    }
    Polynomial::from_terms(
        f.n(),
        f.degree(),
        f.terms()
            .iter()
            .map(|(e, c)| (sigma.act_on_exponents(e), c.clone())),
    )
}

/// A subspace of `R_d` in reduced echelon form over the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    monomials: Arc<MonomialBasis>,
    echelon: Echelon,
}

impl SubspaceBasis {
    pub fn empty(n: usize, d: usize) -> Self {
        let monomials = MonomialBasis::new(n, d);
        let echelon = Echelon::new(monomials.len());
        SubspaceBasis { monomials, echelon }
    }

    /// The span of the given polynomials (no orbit closure).
    pub fn span(n: usize, d: usize, polys: &[Polynomial]) -> Result<Self> {
        let mut b = Self::empty(n, d);
        for p in polys {
            b.insert(p)?;
        }
        Ok(b)
    }

    /// All of `R_d`.
    pub fn full(n: usize, d: usize) -> Self {
        let mut b = Self::empty(n, d);
        for e in b.monomials.exponents().to_vec() {
            b.insert(&Polynomial::monomial(e)).expect("basis monomial");
        }
        b
    }

    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        Ok(self.echelon.insert(&p.to_dense(&self.monomials)?))
    }

    pub fn n(&self) -> usize {
        self.monomials.n()
    }

    pub fn d(&self) -> usize {
        self.monomials.d()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn monomials(&self) -> &MonomialBasis {
        &self.monomials
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.echelon.contains(&p.to_dense(&self.monomials)?))
    }

    /// The echelon rows as polynomials.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.echelon
            .rows()
            .iter()
            .map(|r| Polynomial::from_dense(&self.monomials, r))
            .collect()
    }

    pub(crate) fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Whether the row space is mapped into itself by `sigma`.
    pub fn is_stable_under(&self, sigma: &Permutation) -> bool {
        let map = sigma.column_map(&self.monomials);
        self.echelon
            .rows()
            .iter()
            .all(|r| self.echelon.contains(&apply_columns(&map, r)))
    }
}

fn common_shape(generators: &[Polynomial]) -> Result<(usize, usize)> {
    let first = generators
        .first()
        .ok_or_else(|| Error::input("at least one generator is required"))?;
    let (n, d) = (first.n(), first.degree());
    for g in generators {
        if g.n() != n || g.degree() != d {
            return Err(Error::input(format!(
                "generators mix (n={n}, d={d}) with (n={}, d={})",
                g.n(),
                g.degree()
            )));
        }
    }
    Ok((n, d))
}

/// The span of `{σ·f_i}` over all of `S_n`.
///
/// Closes the generators under the adjacent transpositions only: every
/// vector that raises the rank has its images queued, so the final span is
/// stable under a generating set of `S_n` and hence under the whole group.
pub fn orbit_span(generators: &[Polynomial], caps: &Caps) -> Result<SubspaceBasis> {
    let (n, d) = common_shape(generators)?;
    Error::check_cap("orbit span (variables)", n, caps.orbit)?;
    let mut basis = SubspaceBasis::empty(n, d);
    let full = basis.monomials.len();
    let maps: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| Permutation::transposition(n, i, i + 1).column_map(&basis.monomials))
        .collect();
    let mut queue: VecDeque<Vec<BigRational>> = generators
        .iter()
        .map(|g| g.to_dense(&basis.monomials))
        .collect::<Result<_>>()?;
    while let Some(v) = queue.pop_front() {
        if basis.echelon.rank() == full {
            break;
        }
        if basis.echelon.insert(&v) {
            queue.extend(maps.iter().map(|m| apply_columns(m, &v)));
        }
    }
    Ok(basis)
}

/// Trace of the canonical representative of `rho` acting on the subspace.
pub fn module_trace(basis: &SubspaceBasis, rho: &CycleType) -> Result<BigRational> {
    if rho.cycle_type().weight() != basis.n() {
        return Err(Error::input(format!(
            "cycle type ({}) does not act on {} variables",
            rho.cycle_type(),
            basis.n()
        )));
    }
    let sigma = Permutation(rho.representative());
    let map = sigma.column_map(&basis.monomials);
    let ech = basis.echelon();
    let mut trace = BigRational::zero();
    for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
        let image = apply_columns(&map, row);
        if !ech.contains(&image) {
            return Err(Error::input(format!(
                "subspace is not stable under a permutation of type ({})",
                rho.cycle_type()
            )));
        }
        // coordinate of the image along its own row
        trace += &image[p];
    }
    Ok(trace)
}

/// Canonical decomposition of a permutation-stable subspace, by character
/// inner products of its trace function.
pub fn decompose_submodule(basis: &SubspaceBasis, table: &CharacterTable) -> Result<Decomposition> {
    if table.n() != basis.n() {
        return Err(Error::input(format!(
            "character table of S_{} used on {} variables",
            table.n(),
            basis.n()
        )));
    }
    let trace: BTreeMap<_, _> = table
        .classes()
        .iter()
        .map(|c| Ok((c.cycle_type().clone(), module_trace(basis, c)?)))
        .collect::<Result<_>>()?;
    let mut out = Decomposition::zero(basis.n());
    for lambda in table.shapes() {
        out.set(lambda.clone(), multiplicity_from_trace(&trace, lambda, table)?)?;
    }
    if out.dimension() != BigUint::from(basis.dim()) {
        return Err(Error::Invariant(format!(
            "decomposition {out} has dimension {} but the subspace has dimension {}",
            out.dimension(),
            basis.dim()
        )));
    }
    Ok(out)
}

/// Minimal `r` such that the ideal generated by the orbits of `generators`
/// is `r`-generated in degree `d`. `1` means principal symmetric.
pub fn min_symmetric_generators(generators: &[Polynomial], caps: &Caps) -> Result<BigUint> {
    Ok(min_generators(&analyze(generators, caps)?.decomposition))
}

/// Everything computed on the way to [`min_symmetric_generators`].
#[derive(Debug, Clone)]
pub struct IdealAnalysis {
    pub span: SubspaceBasis,
    pub decomposition: Decomposition,
    pub min_generators: BigUint,
}

pub fn analyze(generators: &[Polynomial], caps: &Caps) -> Result<IdealAnalysis> {
    let span = orbit_span(generators, caps)?;
    let table = character_table(span.n(), caps)?;
    let decomposition = decompose_submodule(&span, &table)?;
    Ok(IdealAnalysis {
        min_generators: min_generators(&decomposition),
        span,
        decomposition,
    })
}
