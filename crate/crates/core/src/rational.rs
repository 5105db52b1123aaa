//! Exact rational helpers: vectors, Gaussian elimination, floor/ceil.

use crate::matrix::IntVec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

pub fn rat_floor(r: &Rat) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn rat_ceil(r: &Rat) -> BigInt {
    r.numer().div_ceil(r.denom())
}

pub fn intvec_to_rat(v: &IntVec) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}

/// Fractional part in `[0, 1)`.
pub fn rat_fract(r: &Rat) -> Rat {
    r - rat_int(&rat_floor(r))
}

/// Solve the square rational system `A x = b` by Gaussian elimination.
/// Returns `None` when `A` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let sub = &f * &m[col][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Check whether the rational point is integral, and convert.
pub fn to_integer_point(v: &[Rat]) -> Option<IntVec> {
    v.iter()
        .map(|x| {
            if x.denom().is_one() {
                Some(x.numer().clone())
            } else {
                None
            }
        })
        .collect()
}
