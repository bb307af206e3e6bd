//! Small exact linear algebra: dense rational matrices and a sparse span tracker.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{BasisKey, Element};
use crate::rational::{show, Rational};

/// A dense rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        self.row(i).iter().sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        (0..self.cols).map(|j| v.iter().enumerate().map(|(i, x)| x * self.get(i, j)).sum()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gauss–Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.sub_row(r, col, &f);
                inv.sub_row(r, col, &f);
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col) / &p;
                a.sub_row(r, col, &f);
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, f: &Rational) {
        for j in 0..self.cols {
            let v = self.get(r, j) * f;
            self.set(r, j, v);
        }
    }

    /// `row[r] -= f · row[s]`.
    fn sub_row(&mut self, r: usize, s: usize, f: &Rational) {
        for j in 0..self.cols {
            let v = self.get(r, j) - f * self.get(s, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format!("[{}]", self.row(i).iter().map(show).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Incremental rank of a set of algebra elements.
///
/// Rows are kept with distinct pivots, each pivot being the smallest key of
/// its row, so reduction can sweep keys in increasing order.
#[derive(Debug, Clone, Default)]
pub struct SpanTracker {
    rows: BTreeMap<BasisKey, Element>,
}

impl SpanTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after reduction against the current rows.
    pub fn reduce(&self, v: &Element) -> Element {
        let mut w = v.clone();
        let mut cursor: Option<BasisKey> = None;
        loop {
            let next = w.keys().find(|k| cursor.as_ref().is_none_or(|c| *k > c) && self.rows.contains_key(*k)).cloned();
            let Some(k) = next else { break };
            let row = &self.rows[&k];
            let f = w.coeff(&k) / row.coeff(&k);
            w.add_scaled(row, &-f);
            cursor = Some(k);
        }
        w
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &Element) -> bool {
        let w = self.reduce(v);
        let first = w.keys().next().cloned();
        match first {
            None => false,
            Some(k) => {
                self.rows.insert(k, w);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ExpVector, GammaVector};
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[1, -1], &[0, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.get(0, 1), &frac(1, 2));
        assert_eq!(a.determinant(), int(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn span_tracking() {
        let k = |a: i64| BasisKey::new(GammaVector::from_ints(&[a]), ExpVector::zero(1));
        let e = |t: &[(i64, i64)]| Element::from_terms(t.iter().map(|&(a, c)| (k(a), int(c))));
        let mut s = SpanTracker::new();
        assert!(s.insert(&e(&[(1, 1), (2, 1)])));
        assert!(s.insert(&e(&[(2, 1), (3, 1)])));
        assert!(!s.insert(&e(&[(1, 1), (3, -1)])));
        assert!(s.contains(&e(&[(1, 2), (2, 4), (3, 2)])));
        assert_eq!(s.dim(), 2);
    }
}
