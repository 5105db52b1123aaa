//! Dense arbitrary-precision integer vectors and matrices.
//!
//! All solvers in this crate work over `BigInt`; entry growth in
//! elimination-style algorithms makes fixed-width integers unsafe.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A fixed-length integer vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    /// Standard basis vector `e_i` of the given length.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|a| a * c).collect())
    }

    /// Coordinatewise `self <= other`.
    pub fn dominated_by(&self, other: &IntVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn coord_sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Divide by the gcd of the entries, keeping the direction. The zero
    /// vector is returned unchanged.
    pub fn primitive(&self) -> IntVec {
        let mut g = BigInt::zero();
        for x in &self.0 {
            g = g.gcd(x);
        }
        if g.is_zero() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|x| x / &g).collect())
    }

    /// Primitive representative of the line through this vector: gcd 1 and
    /// first nonzero entry positive. Use only where the sign is arbitrary.
    pub fn primitive_line(&self) -> IntVec {
        let v = self.primitive();
        match v.0.iter().find(|x| !x.is_zero()) {
            Some(first) if first.is_negative() => v.neg(),
            _ => v,
        }
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

impl std::ops::Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for IntVec {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<BigInt> for IntVec {
    fn from_iter<T: IntoIterator<Item = BigInt>>(iter: T) -> Self {
        IntVec(iter.into_iter().collect())
    }
}

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVec]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        let mut m = Self::zeros(r, c);
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), r, "ragged column");
            for i in 0..r {
                m.set(i, j, v[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> IntVec {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product `M x`.
    pub fn mul_vec(&self, x: &IntVec) -> IntVec {
        assert_eq!(x.len(), self.cols, "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn mul_mat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "mul_mat dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = BigInt::zero();
                for k in 0..self.cols {
                    s += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    /// Restrict to the given columns, in the given order.
    pub fn select_columns(&self, indices: &[usize]) -> IntMat {
        let cols: Vec<IntVec> = indices.iter().map(|&j| self.column(j)).collect();
        if cols.is_empty() {
            IntMat::zeros(self.rows, 0)
        } else {
            IntMat::from_columns(&cols)
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        let mut out = IntMat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// col_j += c * col_i
    pub fn col_axpy(&mut self, j: usize, c: &BigInt, i: usize) {
        for r in 0..self.rows {
            let add = self.get(r, i) * c;
            let v = self.get(r, j) + add;
            self.set(r, j, v);
        }
    }

    pub fn negate_column(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                // pivot search in column k
                let mut found = None;
                for i in k + 1..n {
                    if !m.get(i, k).is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    Some(i) => {
                        for j in 0..n {
                            let a = m.get(k, j).clone();
                            let b = m.get(i, j).clone();
                            m.set(k, j, b);
                            m.set(i, j, a);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(k, k) * m.get(i, j) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
