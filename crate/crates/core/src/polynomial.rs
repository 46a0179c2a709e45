//! Homogeneous polynomials with exact rational coefficients, the monomial
//! basis of `R_d`, and the text/JSON polynomial formats.
//!
//! Text format: one term per line, `coeff * x1^a1 x2^a2 ...`. The
//! coefficient is an integer or `p/q` and may be omitted (`x1^2`, `-x1 x2`);
//! `^1` may be omitted too. A constant term is just `coeff`. Blank lines
//! separate polynomials in a file of generators; `#` starts a comment.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponents = Vec<usize>;

/// Degree-`d` monomials in `n` variables, ordered reverse-lexicographically
/// by exponent vector: `x1^d` first, `xn^d` last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
    d: usize,
    exponents: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: usize) -> Arc<Self> {
        fn go(n: usize, left: usize, cur: &mut Exponents, out: &mut Vec<Exponents>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                go(n, left - e, cur, out);
                cur.pop();
            }
        }
        let mut exponents = Vec::new();
        if n > 0 {
            go(n, d, &mut Vec::with_capacity(n), &mut exponents);
        } else if d == 0 {
            exponents.push(Vec::new());
        }
        let index = exponents
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Arc::new(MonomialBasis {
            n,
            d,
            exponents,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Exponents] {
        &self.exponents
    }

    pub fn position(&self, e: &[usize]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// A homogeneous polynomial `Σ c_a x^a` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    degree: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize, degree: usize) -> Self {
        Polynomial {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from terms, summing repeated monomials. Every
    /// exponent vector must have length `n` and total `degree`.
    pub fn from_terms(
        n: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Exponents, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n, degree);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Infers the degree from the first term; all-zero input is rejected
    /// because its degree would be ambiguous.
    pub fn homogeneous(n: usize, terms: Vec<(Exponents, BigRational)>) -> Result<Self> {
        let degree = terms
            .first()
            .map(|(e, _)| e.iter().sum())
            .ok_or_else(|| Error::input("polynomial has no terms"))?;
        Self::from_terms(n, degree, terms)
    }

    /// The monomial `x^e` with coefficient 1.
    pub fn monomial(e: Exponents) -> Self {
        let n = e.len();
        let d = e.iter().sum();
        Self::from_terms(n, d, [(e, BigRational::one())]).expect("consistent by construction")
    }

    pub fn add_term(&mut self, e: Exponents, c: BigRational) -> Result<()> {
        if e.len() != self.n {
            return Err(Error::input(format!(
                "exponent vector {e:?} has length {}, expected {}",
                e.len(),
                self.n
            )));
        }
        let deg: usize = e.iter().sum();
        if deg != self.degree {
            return Err(Error::input(format!(
                "term {e:?} has degree {deg}, polynomial is homogeneous of degree {}",
                self.degree
            )));
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, e: &[usize]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Dense coefficient vector in `basis` order.
    pub fn to_dense(&self, basis: &MonomialBasis) -> Result<Vec<BigRational>> {
        if basis.n() != self.n || basis.d() != self.degree {
            return Err(Error::input(format!(
                "polynomial in {} variables of degree {} does not live in R_{} with n={}",
                self.n,
                self.degree,
                basis.d(),
                basis.n()
            )));
        }
        let mut v = vec![BigRational::zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = basis.position(e).expect("exponents validated on insert");
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_dense(basis: &MonomialBasis, v: &[BigRational]) -> Self {
        let terms = basis
            .exponents()
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial {
            n: basis.n(),
            degree: basis.d(),
            terms,
        }
    }
}

impl fmt::Display for Polynomial {
    /// One term per line in the text input format, highest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (e, c) in self.terms.iter().rev() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{a}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                writeln!(f, "{c}")?;
            } else {
                writeln!(f, "{c} * {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::input(format!("bad rational coefficient {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(line: &str, n: usize) -> Result<(Exponents, BigRational)> {
    let bad = |why: &str| Error::input(format!("cannot parse term {line:?}: {why}"));
    let line = line.trim();
    let (coeff_text, vars_text) = match line.find('x') {
        Some(i) => (line[..i].trim(), &line[i..]),
        None => (line, ""),
    };
    let coeff_text = coeff_text.trim_end_matches('*').trim();
    let coeff = match coeff_text {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(&t.replace(' ', ""))?,
    };
    let mut e = vec![0usize; n];
    for tok in vars_text
        .split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
    {
        let body = tok
            .strip_prefix('x')
            .ok_or_else(|| bad(&format!("expected a variable, found {tok:?}")))?;
        let (idx, pow) = match body.split_once('^') {
            Some((i, p)) => (i, p.parse::<usize>().map_err(|_| bad("bad exponent"))?),
            None => (body, 1),
        };
        let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
        if idx == 0 || idx > n {
            return Err(bad(&format!("variable x{idx} outside x1..x{n}")));
        }
        e[idx - 1] += pow;
    }
    Ok((e, coeff))
}

/// Parses a generators file in the text format.
pub fn parse_polynomials(text: &str, n: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut current: Vec<(Exponents, BigRational)> = Vec::new();
    let flush = |current: &mut Vec<(Exponents, BigRational)>, out: &mut Vec<Polynomial>| {
        if current.is_empty() {
            return Ok(());
        }
        let p = Polynomial::homogeneous(n, std::mem::take(current))?;
        out.push(p);
        Ok::<(), Error>(())
    };
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            flush(&mut current, &mut out)?;
            continue;
        }
        current.push(parse_term(line, n)?);
    }
    flush(&mut current, &mut out)?;
    Ok(out)
}

pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    let mut all = parse_polynomials(text, n)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => Err(Error::input(format!("expected one polynomial, found {k}"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exponents: Exponents,
}

/// JSON form: `{"n": 2, "degree": 2, "terms": [{"coeff": "1/2", "exponents": [2, 0]}]}`.
/// `degree` is optional on input unless there are no terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    terms: Vec<TermRepr>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            n: p.n,
            degree: Some(p.degree),
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    coeff: c.to_string(),
                    exponents: e.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Self> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.exponents, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        match j.degree {
            Some(d) => Polynomial::from_terms(j.n, d, terms),
            None => Polynomial::homogeneous(j.n, terms),
        }
    }
}

/// Accepts a single JSON polynomial object or an array of them.
pub fn parse_polynomials_json(text: &str) -> Result<Vec<Polynomial>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        Many(Vec<PolynomialJson>),
        One(PolynomialJson),
    }
    let parsed: OneOrMany =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad polynomial JSON: {e}")))?;
    let list = match parsed {
        OneOrMany::Many(v) => v,
        OneOrMany::One(p) => vec![p],
    };
    list.into_iter().map(Polynomial::try_from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn monomial_order() {
        let b = MonomialBasis::new(3, 2);
        assert_eq!(
            b.exponents(),
            &[
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(MonomialBasis::new(5, 3).len(), 35);
        assert_eq!(MonomialBasis::new(1, 4).exponents(), &[vec![4]]);
    }

    #[test]
    fn parse_text() {
        let text = "# generators\n1/2 * x1^2 x2\n-3 * x3^3\n\nx1 x2 x3\n";
        let ps = parse_polynomials(text, 3).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].coefficient(&[2, 1, 0]), q(1, 2));
        assert_eq!(ps[0].coefficient(&[0, 0, 3]), q(-3, 1));
        assert_eq!(ps[1].coefficient(&[1, 1, 1]), q(1, 1));
        assert_eq!(parse_polynomial("-x1*x2", 2).unwrap().coefficient(&[1, 1]), q(-1, 1));
        assert!(parse_polynomials("x1^2\nx1", 2).is_err());
        assert!(parse_polynomials("x3", 2).is_err());
        assert!(parse_polynomials("1/0 * x1", 2).is_err());
        assert!(parse_polynomials("2 * y1", 2).is_err());
    }

    #[test]
    fn display_parses_back() {
        let p = parse_polynomial("2/3 * x1^2 x2\n-1 * x2^3\n5 * x1 x2 x3", 3).unwrap();
        assert_eq!(parse_polynomial(&p.to_string(), 3).unwrap(), p);
    }

    #[test]
    fn cancelling_terms_vanish() {
        let p = parse_polynomial("x1^2\n-1 * x1^2\nx2^2", 2).unwrap();
        assert_eq!(p.terms().len(), 1);
    }

    #[test]
    fn json_formats() {
        let p = parse_polynomial("1/2 * x1^2\n-1 * x1 x2", 2).unwrap();
        let j = serde_json::to_string(&PolynomialJson::from(&p)).unwrap();
        assert_eq!(parse_polynomials_json(&j).unwrap(), vec![p.clone()]);
        let arr = format!("[{j},{j}]");
        assert_eq!(parse_polynomials_json(&arr).unwrap().len(), 2);
        let no_degree = r#"{"n":2,"terms":[{"coeff":"3","exponents":[1,1]}]}"#;
        assert_eq!(parse_polynomials_json(no_degree).unwrap()[0].degree(), 2);
        let mixed = r#"{"n":2,"terms":[{"coeff":"3","exponents":[1,1]},{"coeff":"1","exponents":[1,0]}]}"#;
        assert!(parse_polynomials_json(mixed).is_err());
    }

    #[test]
    fn dense_round_trip() {
        let b = MonomialBasis::new(3, 2);
        let p = parse_polynomial("x1 x3\n-2 * x2^2", 3).unwrap();
        let v = p.to_dense(&b).unwrap();
        assert!(!v[2].is_zero());
        assert_eq!(Polynomial::from_dense(&b, &v), p);
        assert!(p.to_dense(&MonomialBasis::new(3, 3)).is_err());
    }
}
