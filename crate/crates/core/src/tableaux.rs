//! Young diagrams, standard and semistandard tableaux, hook lengths and the
//! dimensions `f^λ` of Specht modules.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::numbers::factorial;
use crate::partitions::Partition;

/// The diagram of a partition. Nodes are 1-based `(row, col)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagram {
    shape: Partition,
}

impl YoungDiagram {
    pub fn new(shape: Partition) -> Self {
        YoungDiagram { shape }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn contains(&self, (row, col): (usize, usize)) -> bool {
        row >= 1 && col >= 1 && col <= self.shape.part(row - 1)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }
}

/// Hook length at a 1-based node: arm + leg + 1.
pub fn hook_length(shape: &Partition, node: (usize, usize)) -> Result<usize> {
    let (row, col) = node;
    if !YoungDiagram::new(shape.clone()).contains(node) {
        return Err(Error::input(format!(
            "node ({row},{col}) is outside the diagram of ({shape})"
        )));
    }
    let arm = shape.part(row - 1) - col;
    let leg = shape.parts()[row..].iter().take_while(|&&p| p >= col).count();
    Ok(arm + leg + 1)
}

/// `f^λ = n! / ∏ hooks`.
pub fn specht_dim(shape: &Partition) -> BigUint {
    let diagram = YoungDiagram::new(shape.clone());
    let hooks = diagram
        .nodes()
        .map(|node| BigUint::from(hook_length(shape, node).expect("node in diagram")))
        .fold(BigUint::one(), |acc, h| acc * h);
    let (q, r) = factorial(shape.weight()).div_rem(&hooks);
    assert!(r.is_zero(), "hook product does not divide n! for ({shape})");
    q
}

/// A standard Young tableau: rows of a bijective filling by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SYTableau {
    #[serde(skip)]
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// A semistandard tableau of given shape and content.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SSYTableau {
    #[serde(skip)]
    shape: Partition,
    #[serde(skip)]
    content: Partition,
    rows: Vec<Vec<usize>>,
}

fn rows_fit_shape(shape: &Partition, rows: &[Vec<usize>]) -> bool {
    rows.len() == shape.len() && rows.iter().zip(shape.parts()).all(|(r, &p)| r.len() == p)
}

fn columns_strict(rows: &[Vec<usize>]) -> bool {
    rows.windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
}

impl SYTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = SYTableau { shape, rows };
        if !t.is_valid() {
            return Err(Error::input(format!("not a standard tableau: {:?}", t.rows)));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_valid(&self) -> bool {
        let n = self.shape.weight();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        rows_fit_shape(&self.shape, &self.rows)
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && columns_strict(&self.rows)
    }
}

impl SSYTableau {
    pub fn new(shape: Partition, content: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = SSYTableau {
            shape,
            content,
            rows,
        };
        if !t.is_valid() {
            return Err(Error::input(format!(
                "not a semistandard tableau: {:?}",
                t.rows
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &Partition {
        &self.content
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_valid(&self) -> bool {
        let mut counts = vec![0usize; self.content.len() + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > self.content.len() {
                return false;
            }
            counts[v] += 1;
        }
        rows_fit_shape(&self.shape, &self.rows)
            && counts[1..] == *self.content.parts()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && columns_strict(&self.rows)
    }
}

fn fmt_grid(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for SYTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_grid(&self.rows, f)
    }
}

impl fmt::Display for SSYTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_grid(&self.rows, f)
    }
}

/// Every standard tableau of `shape`. Entry `k` is placed in each row that
/// can accept it, topmost row first, so the first tableau is the row-reading
/// one.
pub fn enumerate_syt(shape: &Partition, caps: &Caps) -> Result<Vec<SYTableau>> {
    let n = shape.weight();
    Error::check_cap("standard tableau enumeration", n, caps.enumeration)?;

    fn go(shape: &Partition, k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<SYTableau>) {
        if k > shape.weight() {
            out.push(SYTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            let fits_row = len < shape.part(i);
            let fits_col = i == 0 || rows[i - 1].len() > len;
            if fits_row && fits_col {
                rows[i].push(k);
                go(shape, k + 1, rows, out);
                rows[i].pop();
            }
        }
    }

    let mut rows = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    go(shape, 1, &mut rows, &mut out);
    Ok(out)
}

/// Every semistandard tableau of `shape` and `content`.
///
/// Cells are filled column by column, top to bottom. A value is admissible
/// when it keeps rows weak, columns strict, the content budget
/// non-negative, and leaves enough larger values for the rest of the
/// column.
pub fn enumerate_ssyt(
    shape: &Partition,
    content: &Partition,
    caps: &Caps,
) -> Result<Vec<SSYTableau>> {
    if shape.weight() != content.weight() {
        return Err(Error::input(format!(
            "shape ({shape}) and content ({content}) have different weights"
        )));
    }
    Error::check_cap("semistandard tableau enumeration", shape.weight(), caps.enumeration)?;

    let cells: Vec<(usize, usize)> = {
        let conj = shape.conjugate();
        (0..conj.len())
            .flat_map(|j| (0..conj.part(j)).map(move |i| (i, j)))
            .collect()
    };
    let conj = shape.conjugate();
    let values = content.len();

    struct State<'a> {
        shape: &'a Partition,
        content: &'a Partition,
        conj: &'a Partition,
        cells: &'a [(usize, usize)],
        grid: Vec<Vec<usize>>,
        remaining: Vec<usize>,
        values: usize,
        out: Vec<SSYTableau>,
    }

    fn go(st: &mut State<'_>, idx: usize) {
        if idx == st.cells.len() {
            st.out.push(SSYTableau {
                shape: st.shape.clone(),
                content: st.content.clone(),
                rows: st.grid.clone(),
            });
            return;
        }
        let (i, j) = st.cells[idx];
        let left = if j > 0 { st.grid[i][j - 1] } else { 1 };
        let above = if i > 0 { st.grid[i - 1][j] + 1 } else { 1 };
        let below_in_column = st.conj.part(j) - 1 - i;
        let lo = left.max(above);
        let hi = st.values.saturating_sub(below_in_column);
        for v in lo..=hi {
            if st.remaining[v] == 0 {
                continue;
            }
            st.remaining[v] -= 1;
            st.grid[i][j] = v;
            go(st, idx + 1);
            st.grid[i][j] = 0;
            st.remaining[v] += 1;
        }
    }

    let mut remaining = vec![0];
    remaining.extend_from_slice(content.parts());
    let mut st = State {
        shape,
        content,
        conj: &conj,
        cells: &cells,
        grid: shape.parts().iter().map(|&p| vec![0; p]).collect(),
        remaining,
        values,
        out: Vec::new(),
    };
    go(&mut st, 0);
    Ok(st.out)
}
