//! Exact reduced row echelon form over the rationals.
//!
//! Pivots are chosen as the first non-zero entry; arithmetic is exact, so
//! there is no conditioning concern and results are fully deterministic.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A row space kept in reduced row echelon form, rows sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivots; zero iff `v` is in the span.
    pub fn residual(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the row basis (its entries at the pivots).
    /// Only meaningful when `v` lies in the span.
    pub fn coordinates(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Adds `v` to the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut r = self.residual(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / &r[p];
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // clear the new pivot column from the existing rows
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn rank_and_reduced_form() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&v(&[0, 2, 4])));
        assert!(e.insert(&v(&[1, 1, 1])));
        assert!(!e.insert(&v(&[2, 4, 6])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], v(&[1, 0, -1]));
        assert_eq!(e.rows()[1], v(&[0, 1, 2]));
        assert!(e.contains(&v(&[1, 2, 3])));
        assert!(!e.contains(&v(&[0, 0, 1])));
        assert_eq!(e.coordinates(&v(&[3, 1, -1])), v(&[3, 1]));
        assert!(!e.insert(&v(&[0, 0, 0])));
    }
}
