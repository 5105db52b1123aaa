//! Hermite normal form and integer linear solving.
//!
//! Column-style HNF: for an integer matrix `M` we compute `H = M * U` with
//! `U` unimodular, `H` in column echelon form with positive pivots and the
//! entries to the left of each pivot reduced modulo it. Columns are the
//! natural orientation here because generators enter as matrix columns
//! everywhere else in the crate.

use crate::matrix::{IntMat, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of a column-style Hermite normal form computation.
#[derive(Debug, Clone)]
pub struct Hnf {
    /// The echelon form, `h = m * u`.
    pub h: IntMat,
    /// Unimodular transformation (|det u| = 1).
    pub u: IntMat,
    /// For each pivot column j (0..rank), the row of its pivot.
    pub pivot_rows: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Basis of the column lattice: the nonzero (pivot) columns of `h`.
    pub fn lattice_basis(&self) -> IntMat {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.h.select_columns(&idx)
    }

    /// Columns of `u` spanning the integer kernel of `m`. This basis is
    /// saturated: it generates all integer points of the rational kernel.
    pub fn kernel_basis(&self) -> Vec<IntVec> {
        let n = self.h.cols();
        (self.rank()..n).map(|j| self.u.column(j)).collect()
    }
}

/// Column-style Hermite normal form. Entries left of each pivot are reduced
/// into `[0, pivot)` after every elimination round, which keeps intermediate
/// growth in check for the matrix sizes this crate deals with.
pub fn hermite_normal_form(m: &IntMat) -> Hnf {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMat::identity(cols);
    let mut pivot_rows = Vec::new();
    let mut col = 0usize;

    for row in 0..rows {
        if col == cols {
            break;
        }
        // Find a column with a nonzero entry in this row.
        let mut pivot_col = None;
        for j in col..cols {
            if !h.get(row, j).is_zero() {
                pivot_col = Some(j);
                break;
            }
        }
        let Some(pc) = pivot_col else {
            continue;
        };
        h.swap_columns(col, pc);
        u.swap_columns(col, pc);

        // Clear the rest of the row with gcd column operations.
        for j in col + 1..cols {
            if h.get(row, j).is_zero() {
                continue;
            }
            let a = h.get(row, col).clone();
            let b = h.get(row, j).clone();
            let ext = a.extended_gcd(&b);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let a_g = &a / &g;
            let b_g = &b / &g;
            // (col, j) <- (s*col + t*j, -b/g*col + a/g*j); the 2x2 block
            // [s, -b/g; t, a/g] has determinant 1.
            for r in 0..rows {
                let x = h.get(r, col).clone();
                let y = h.get(r, j).clone();
                h.set(r, col, &s * &x + &t * &y);
                h.set(r, j, -&b_g * &x + &a_g * &y);
            }
            for r in 0..cols {
                let x = u.get(r, col).clone();
                let y = u.get(r, j).clone();
                u.set(r, col, &s * &x + &t * &y);
                u.set(r, j, -&b_g * &x + &a_g * &y);
            }
        }
        if h.get(row, col).is_negative() {
            h.negate_column(col);
            u.negate_column(col);
        }
        // Reduce entries left of the pivot into [0, pivot).
        let p = h.get(row, col).clone();
        for j in 0..col {
            let v = h.get(row, j);
            if v.is_zero() {
                continue;
            }
            let q = v.div_floor(&p);
            if !q.is_zero() {
                let negq = -q;
                h.col_axpy(j, &negq, col);
                u.col_axpy(j, &negq, col);
            }
        }
        pivot_rows.push(row);
        col += 1;
    }

    Hnf { h, u, pivot_rows }
}

/// Solve `M x = b` over the integers. Returns a witness or `None` when no
/// integral solution exists; the caller gets substitution-checked output.
pub fn solve_integer(m: &IntMat, b: &IntVec) -> crate::Result<Option<IntVec>> {
    if b.len() != m.rows() {
        return Err(crate::Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let hnf = hermite_normal_form(m);
    Ok(solve_with_hnf(&hnf, m, b))
}

/// Solve using a precomputed HNF of `m`.
pub fn solve_with_hnf(hnf: &Hnf, m: &IntMat, b: &IntVec) -> Option<IntVec> {
    let cols = m.cols();
    let mut y = vec![BigInt::zero(); cols];
    let mut next_pivot = 0usize;
    for row in 0..m.rows() {
        let mut s = b[row].clone();
        for (j, yj) in y.iter().enumerate().take(next_pivot) {
            if !yj.is_zero() {
                s -= hnf.h.get(row, j) * yj;
            }
        }
        if next_pivot < hnf.pivot_rows.len() && hnf.pivot_rows[next_pivot] == row {
            let p = hnf.h.get(row, next_pivot);
            let (q, r) = s.div_rem(p);
            if !r.is_zero() {
                return None;
            }
            y[next_pivot] = q;
            next_pivot += 1;
        } else if !s.is_zero() {
            return None;
        }
    }
    let x = hnf.u.mul_vec(&IntVec::new(y));
    debug_assert_eq!(m.mul_vec(&x), *b);
    Some(x)
}

/// Index of the column lattice in the ambient integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

/// Rank of the column lattice of `M` and its index in `Z^m`.
pub fn lattice_rank_index(m: &IntMat) -> (usize, LatticeIndex) {
    let hnf = hermite_normal_form(m);
    let rank = hnf.rank();
    if rank == m.rows() {
        let mut idx = BigInt::one();
        for (j, &row) in hnf.pivot_rows.iter().enumerate() {
            idx *= hnf.h.get(row, j);
        }
        (rank, LatticeIndex::Finite(idx))
    } else {
        (rank, LatticeIndex::Infinite)
    }
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMat) -> usize {
    hermite_normal_form(m).rank()
}

/// Saturated basis of the integer kernel `{x in Z^n : M x = 0}`.
pub fn integer_kernel(m: &IntMat) -> Vec<IntVec> {
    hermite_normal_form(m).kernel_basis()
}
