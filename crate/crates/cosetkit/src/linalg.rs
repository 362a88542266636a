//! Dense exact linear algebra over the rationals.
//!
//! Everything here is elimination-based and exact; there is no pivot-size
//! heuristic because there is no rounding. Matrices are small (dimensions in
//! the hundreds at most), so dense storage and cubic algorithms are fine.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::rational::Rational;

/// Dense matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, r: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * r).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] += &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + &(a * b))
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Reduced row echelon form, in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) =
                (lead_row..self.rows).find(|&r| !self[(r, col)].is_zero())
            else {
                continue;
            };
            self.swap_rows(lead_row, pivot_row);
            let inv = self[(lead_row, col)].recip();
            for c in col..self.cols {
                let v = &self[(lead_row, c)] * &inv;
                self[(lead_row, c)] = v;
            }
            for r in 0..self.rows {
                if r != lead_row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for c in col..self.cols {
                        let v = &self[(r, c)] - &(&factor * &self[(lead_row, c)]);
                        self[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            lead_row += 1;
            if lead_row == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                map[c] = Some(i);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = -&m[(*row, free)];
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Dimension of the λ-eigenspace, i.e. nullity of (self - λ·I).
    pub fn eigenspace_dim(&self, lambda: &Rational) -> usize {
        assert_eq!(self.rows, self.cols);
        let shifted = self.sub(&Mat::identity(self.rows).scale(lambda));
        shifted.nullity()
    }

    /// For a symmetric matrix: true iff positive definite, decided by the
    /// exact LDL^T pivots (Sylvester's criterion — every pivot must be > 0).
    pub fn is_positive_definite_symmetric(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut l = Mat::identity(n);
        let mut d = vec![Rational::zero(); n];
        for k in 0..n {
            let mut pivot = self[(k, k)].clone();
            for j in 0..k {
                pivot = pivot - &(&(&l[(k, j)] * &l[(k, j)]) * &d[j]);
            }
            if !pivot.is_positive() {
                return false;
            }
            for i in k + 1..n {
                let mut v = self[(i, k)].clone();
                for j in 0..k {
                    v = v - &(&(&l[(i, j)] * &l[(k, j)]) * &d[j]);
                }
                l[(i, k)] = &v / &pivot;
            }
            d[k] = pivot;
        }
        true
    }
}

trait ConcatRows {
    fn into_concat(self) -> Vec<Rational>;
}

impl ConcatRows for Vec<Vec<Rational>> {
    fn into_concat(self) -> Vec<Rational> {
        let mut out = Vec::new();
        for row in self {
            out.extend(row);
        }
        out
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}{}", self[(r, c)], if c + 1 < self.cols { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Incrementally built row space in reduced echelon form.
///
/// Supports rank tracking and membership tests while rows stream in; used
/// for spanning-set closures and surjectivity checks where materializing all
/// products up front would be wasteful.
pub struct RowSpace {
    cols: usize,
    /// Rows in echelon form, each paired with its pivot column.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `v` against the current rows, in place; returns the pivot
    /// column if a nonzero residue remains.
    fn reduce(&self, v: &mut [Rational]) -> Option<usize> {
        for (pivot_col, row) in &self.rows {
            let c = v[*pivot_col].clone();
            if c.is_zero() {
                continue;
            }
            for (slot, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *slot -= &(&c * r);
                }
            }
        }
        v.iter().position(|x| !x.is_zero())
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.cols);
        let Some(pivot) = self.reduce(&mut v) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Back-substitute into existing rows to keep fully reduced form.
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (slot, x) in row.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *slot -= &(&c * x);
                }
            }
        }
        let at = self
            .rows
            .binary_search_by_key(&pivot, |(p, _)| *p)
            .expect_err("pivot column must be new");
        self.rows.insert(at, (pivot, v));
        true
    }

    /// True when `v` lies in the current span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        self.reduce(&mut w).is_none()
    }
}
