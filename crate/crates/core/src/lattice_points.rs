//! Lattice point enumeration in bounded rational regions, and the half-open
//! fundamental parallelepiped of a generator matrix.

use crate::cone;
use crate::hnf;
use crate::matrix::{IntMat, IntVec};
use crate::rational::{rat_ceil, rat_floor, rat_int, Rat};
use crate::simplex::{self, Constraint, LpResult, Sense};
use crate::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// A duplicate-free, lexicographically sorted set of integer points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticePointSet {
    points: Vec<IntVec>,
}

impl LatticePointSet {
    pub fn new(mut points: Vec<IntVec>) -> Self {
        points.sort();
        points.dedup();
        LatticePointSet { points }
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &IntVec) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVec> {
        self.points.iter()
    }
}

impl IntoIterator for LatticePointSet {
    type Item = IntVec;
    type IntoIter = std::vec::IntoIter<IntVec>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.into_iter()
    }
}

/// An affine region `{ z : a.z = b for equations, a.z >= b for inequalities }`.
#[derive(Debug, Clone, Default)]
pub struct AffineConstraints {
    pub equations: Vec<(IntVec, BigInt)>,
    pub inequalities: Vec<(IntVec, BigInt)>,
}

impl AffineConstraints {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eq(&mut self, coeffs: IntVec, rhs: BigInt) -> &mut Self {
        self.equations.push((coeffs, rhs));
        self
    }

    pub fn ge(&mut self, coeffs: IntVec, rhs: BigInt) -> &mut Self {
        self.inequalities.push((coeffs, rhs));
        self
    }

    pub fn dim(&self) -> usize {
        self.equations
            .first()
            .map(|(a, _)| a.len())
            .or_else(|| self.inequalities.first().map(|(a, _)| a.len()))
            .unwrap_or(0)
    }

    pub fn satisfied_by(&self, z: &IntVec) -> bool {
        self.equations.iter().all(|(a, b)| a.dot(z) == *b)
            && self.inequalities.iter().all(|(a, b)| a.dot(z) >= *b)
    }

    fn to_lp(&self) -> Vec<Constraint> {
        let mut cs = Vec::new();
        for (a, b) in &self.equations {
            cs.push(Constraint::Eq(a.iter().map(rat_int).collect(), rat_int(b)));
        }
        for (a, b) in &self.inequalities {
            cs.push(Constraint::Ge(a.iter().map(rat_int).collect(), rat_int(b)));
        }
        cs
    }
}

/// Integer bounding box certified by exact LP. Errors when some coordinate
/// is unbounded over the rational relaxation; `None` means the region is
/// empty.
fn certified_box(cs: &AffineConstraints) -> Result<Option<Vec<(BigInt, BigInt)>>> {
    let dim = cs.dim();
    let lp = cs.to_lp();
    if simplex::feasible_point(dim, &lp).is_none() {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut obj = vec![Rat::zero(); dim];
        obj[i] = Rat::one();
        let hi = match simplex::optimize(dim, &lp, &obj, Sense::Maximize) {
            LpResult::Optimal(v, _) => rat_floor(&v),
            LpResult::Unbounded => return Err(Error::UnboundedRegion { coordinate: i }),
            LpResult::Infeasible => unreachable!("feasibility already established"),
        };
        let lo = match simplex::optimize(dim, &lp, &obj, Sense::Minimize) {
            LpResult::Optimal(v, _) => rat_ceil(&v),
            LpResult::Unbounded => return Err(Error::UnboundedRegion { coordinate: i }),
            LpResult::Infeasible => unreachable!("feasibility already established"),
        };
        out.push((lo, hi));
    }
    Ok(Some(out))
}

/// All integer points of the region, lexicographically sorted. A bounding
/// box is certified first by exact LP; strict upper bounds `a.z < b`
/// (rational `b`) may be supplied and are honored exactly.
pub fn enumerate_lattice_points(
    cs: &AffineConstraints,
    strict_upper: Option<&[(IntVec, Rat)]>,
) -> Result<LatticePointSet> {
    let mut all = cs.clone();
    if let Some(strict) = strict_upper {
        for (a, b) in strict {
            // For integer z: a.z < b  <=>  a.z <= ceil(b) - 1
            let bound = rat_ceil(b) - BigInt::one();
            all.ge(a.neg(), -bound);
        }
    }
    let Some(bounds) = certified_box(&all)? else {
        return Ok(LatticePointSet::default());
    };
    Ok(enumerate_in_box(&all, &bounds))
}

struct Row {
    coeffs: IntVec,
    rhs: BigInt,
    is_eq: bool,
}

/// Depth-first enumeration with interval pruning inside a known box.
pub(crate) fn enumerate_in_box(
    cs: &AffineConstraints,
    bounds: &[(BigInt, BigInt)],
) -> LatticePointSet {
    let dim = bounds.len();
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return LatticePointSet::default();
    }

    let rows: Vec<Row> = cs
        .equations
        .iter()
        .map(|(a, b)| Row {
            coeffs: a.clone(),
            rhs: b.clone(),
            is_eq: true,
        })
        .chain(cs.inequalities.iter().map(|(a, b)| Row {
            coeffs: a.clone(),
            rhs: b.clone(),
            is_eq: false,
        }))
        .collect();

    // suffix_min[r][k], suffix_max[r][k]: range of sum_{j >= k} a_j z_j
    // over the box
    let mut suffix_min = vec![vec![BigInt::zero(); dim + 1]; rows.len()];
    let mut suffix_max = vec![vec![BigInt::zero(); dim + 1]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for k in (0..dim).rev() {
            let a = &row.coeffs[k];
            let (lo, hi) = &bounds[k];
            let (tmin, tmax) = if a.is_negative() {
                (a * hi, a * lo)
            } else {
                (a * lo, a * hi)
            };
            suffix_min[r][k] = &suffix_min[r][k + 1] + tmin;
            suffix_max[r][k] = &suffix_max[r][k + 1] + tmax;
        }
    }

    let mut init_residual: Vec<BigInt> = rows.iter().map(|r| r.rhs.clone()).collect();
    let mut out = Vec::new();
    let mut z = vec![BigInt::zero(); dim];
    let ctx = DfsCtx {
        dim,
        rows: &rows,
        bounds,
        suffix_min: &suffix_min,
        suffix_max: &suffix_max,
    };
    ctx.descend(0, &mut z, &mut init_residual, &mut out);
    LatticePointSet::new(out)
}

struct DfsCtx<'a> {
    dim: usize,
    rows: &'a [Row],
    bounds: &'a [(BigInt, BigInt)],
    suffix_min: &'a [Vec<BigInt>],
    suffix_max: &'a [Vec<BigInt>],
}

impl DfsCtx<'_> {
    fn descend(
        &self,
        k: usize,
        z: &mut Vec<BigInt>,
        residual: &mut Vec<BigInt>,
        out: &mut Vec<IntVec>,
    ) {
        if k == self.dim {
            out.push(IntVec::new(z.clone()));
            return;
        }
        let (mut lo, mut hi) = self.bounds[k].clone();
        for (r, row) in self.rows.iter().enumerate() {
            let a = &row.coeffs[k];
            let rem_min = &self.suffix_min[r][k + 1];
            let rem_max = &self.suffix_max[r][k + 1];
            // want a*z_k + rem == residual (eq) or >= residual (ge) achievable
            let lower_num = &residual[r] - rem_max; // a*z_k >= lower_num
            let upper_num = &residual[r] - rem_min; // for eq: a*z_k <= upper_num
            if a.is_zero() {
                let violated = if row.is_eq {
                    lower_num > BigInt::zero() || upper_num < BigInt::zero()
                } else {
                    lower_num > BigInt::zero()
                };
                if violated {
                    return;
                }
                continue;
            }
            if a.is_positive() {
                let l = num_integer::Integer::div_ceil(&lower_num, a);
                if l > lo {
                    lo = l;
                }
                if row.is_eq {
                    let h = num_integer::Integer::div_floor(&upper_num, a);
                    if h < hi {
                        hi = h;
                    }
                }
            } else {
                let h = num_integer::Integer::div_floor(&lower_num, a);
                if h < hi {
                    hi = h;
                }
                if row.is_eq {
                    let l = num_integer::Integer::div_ceil(&upper_num, a);
                    if l > lo {
                        lo = l;
                    }
                }
            }
            if lo > hi {
                return;
            }
        }
        let mut v = lo;
        while v <= hi {
            z[k] = v.clone();
            let saved: Vec<BigInt> = self
                .rows
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    let old = residual[r].clone();
                    residual[r] = &residual[r] - &row.coeffs[k] * &v;
                    old
                })
                .collect();
            self.descend(k + 1, z, residual, out);
            for (r, old) in saved.into_iter().enumerate() {
                residual[r] = old;
            }
            v += BigInt::one();
        }
        z[k] = BigInt::zero();
    }
}

/// Exact inequality/equation description of the zonotope
/// `{ A lambda : lambda in [0,1]^n }`.
///
/// Every facet normal of a zonotope is orthogonal to a set of generators
/// spanning a hyperplane of the zonotope's span, so scanning column subsets
/// of size `rank - 1` finds all facet normals; support values are exact for
/// any direction, so extra (non-facet) directions only add redundant but
/// valid inequalities.
pub(crate) fn zonotope_constraints(a: &IntMat) -> Result<AffineConstraints> {
    let m = a.rows();
    let n = a.cols();
    let cols = a.columns();
    let s = hnf::rank(a);
    let mut cs = AffineConstraints::new();

    // affine hull: orthogonal complement of the column span
    let span_perp = hnf::integer_kernel(&a.transpose());
    for e in &span_perp {
        cs.eq(e.clone(), BigInt::zero());
    }

    if s == 0 {
        return Ok(cs);
    }

    let limit: u64 = 2_000_000;
    let n_subsets = (0..s - 1).try_fold(1u64, |acc, k| {
        acc.checked_mul((n - k) as u64).map(|v| v / (k as u64 + 1))
    });
    match n_subsets {
        Some(c) if c <= limit => {}
        _ => {
            return Err(Error::RegionTooLarge {
                size: format!("C({n},{})", s - 1),
                limit,
            })
        }
    }

    let mut seen: BTreeSet<IntVec> = BTreeSet::new();
    for subset in (0..n).combinations(s - 1) {
        let sub: Vec<IntVec> = subset.iter().map(|&j| cols[j].clone()).collect();
        let kernel = if sub.is_empty() {
            (0..m).map(|i| IntVec::unit(m, i)).collect()
        } else {
            hnf::integer_kernel(&IntMat::from_columns(&sub).transpose())
        };
        for h in kernel {
            let h = h.primitive_line();
            // skip directions orthogonal to the whole span
            if cols.iter().all(|c| h.dot(c).is_zero()) {
                continue;
            }
            if !seen.insert(h.clone()) {
                continue;
            }
            let mut min_v = BigInt::zero();
            let mut max_v = BigInt::zero();
            for c in &cols {
                let d = h.dot(c);
                if d.is_positive() {
                    max_v += d;
                } else {
                    min_v += d;
                }
            }
            cs.ge(h.clone(), min_v); // h.z >= min support
            cs.ge(h.neg(), -max_v); // h.z <= max support
        }
    }
    Ok(cs)
}

/// Bounding box of the zonotope of `a`.
pub(crate) fn zonotope_box(a: &IntMat) -> Vec<(BigInt, BigInt)> {
    (0..a.rows())
        .map(|i| {
            let mut lo = BigInt::zero();
            let mut hi = BigInt::zero();
            for j in 0..a.cols() {
                let v = a.get(i, j);
                if v.is_positive() {
                    hi += v;
                } else {
                    lo += v;
                }
            }
            (lo, hi)
        })
        .collect()
}

/// Lattice points of the closed zonotope `{ A lambda : lambda in [0,1]^n }`.
pub(crate) fn closed_parallelepiped_points(a: &IntMat) -> Result<LatticePointSet> {
    let cs = zonotope_constraints(a)?;
    Ok(enumerate_in_box(&cs, &zonotope_box(a)))
}

/// Is there `lambda in [0,1]^n` with `A lambda = z`? Returns a witness.
pub(crate) fn closed_membership(a: &IntMat, z: &IntVec) -> Option<Vec<Rat>> {
    let n = a.cols();
    let mut cs: Vec<Constraint> = Vec::new();
    for i in 0..a.rows() {
        let row: Vec<Rat> = (0..n).map(|j| rat_int(a.get(i, j))).collect();
        cs.push(Constraint::Eq(row, rat_int(&z[i])));
    }
    for j in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[j] = Rat::one();
        cs.push(Constraint::Ge(unit.clone(), Rat::zero()));
        cs.push(Constraint::Le(unit, Rat::one()));
    }
    simplex::feasible_point(n, &cs)
}

/// Is there `lambda in [0,1)^n` with `A lambda = z`? Decided exactly: the
/// closed feasible set is convex, so the half-open problem is feasible iff
/// no single coordinate is forced to 1 on the whole feasible set (averaging
/// per-coordinate minimizers gives a point with all coordinates below 1).
pub(crate) fn half_open_membership(a: &IntMat, z: &IntVec) -> bool {
    let Some(witness) = closed_membership(a, z) else {
        return false;
    };
    let n = a.cols();
    let one = Rat::one();
    let forced: Vec<usize> = (0..n).filter(|&j| witness[j] == one).collect();
    if forced.is_empty() {
        return true;
    }
    let mut cs: Vec<Constraint> = Vec::new();
    for i in 0..a.rows() {
        let row: Vec<Rat> = (0..n).map(|j| rat_int(a.get(i, j))).collect();
        cs.push(Constraint::Eq(row, rat_int(&z[i])));
    }
    for j in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[j] = Rat::one();
        cs.push(Constraint::Ge(unit.clone(), Rat::zero()));
        cs.push(Constraint::Le(unit, Rat::one()));
    }
    for j in forced {
        let mut obj = vec![Rat::zero(); n];
        obj[j] = Rat::one();
        match simplex::optimize(n, &cs, &obj, Sense::Minimize) {
            LpResult::Optimal(v, _) => {
                if v == one {
                    return false; // lambda_j = 1 on the whole feasible set
                }
            }
            _ => unreachable!("closed problem known feasible and bounded"),
        }
    }
    true
}

/// Integer points of the half-open parallelepiped
/// `P = { A lambda : 0 <= lambda_i < 1 }`.
pub fn parallelepiped_points(a: &IntMat) -> Result<LatticePointSet> {
    if !cone::is_pointed(&a.columns()) {
        return Err(Error::NotPointed);
    }
    let closed = closed_parallelepiped_points(a)?;
    let pts: Vec<IntVec> = closed
        .into_iter()
        .filter(|z| half_open_membership(a, z))
        .collect();
    Ok(LatticePointSet::new(pts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64(v)
    }

    fn set(vs: &[&[i64]]) -> LatticePointSet {
        LatticePointSet::new(vs.iter().map(|v| iv(v)).collect())
    }

    #[test]
    fn unit_square() {
        let mut cs = AffineConstraints::new();
        cs.ge(iv(&[1, 0]), BigInt::zero());
        cs.ge(iv(&[0, 1]), BigInt::zero());
        cs.ge(iv(&[-1, 0]), BigInt::from(-1));
        cs.ge(iv(&[0, -1]), BigInt::from(-1));
        let pts = enumerate_lattice_points(&cs, None).unwrap();
        assert_eq!(pts, set(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn segment_and_empty() {
        let mut cs = AffineConstraints::new();
        cs.ge(iv(&[1]), BigInt::zero());
        cs.ge(iv(&[-1]), BigInt::from(-3));
        let pts = enumerate_lattice_points(&cs, None).unwrap();
        assert_eq!(pts, set(&[&[0], &[1], &[2], &[3]]));

        let mut cs = AffineConstraints::new();
        cs.ge(iv(&[1]), BigInt::one());
        cs.ge(iv(&[-1]), BigInt::zero());
        let pts = enumerate_lattice_points(&cs, None).unwrap();
        assert!(pts.is_empty());
    }

    #[test]
    fn unbounded_region_rejected() {
        let mut cs = AffineConstraints::new();
        cs.ge(iv(&[1, 0]), BigInt::zero());
        cs.ge(iv(&[0, 1]), BigInt::zero());
        assert!(matches!(
            enumerate_lattice_points(&cs, None),
            Err(Error::UnboundedRegion { .. })
        ));
    }

    #[test]
    fn strict_upper_bounds() {
        // 0 <= x, x < 3 and 0 <= y, y < 5/2
        let mut cs = AffineConstraints::new();
        cs.ge(iv(&[1, 0]), BigInt::zero());
        cs.ge(iv(&[0, 1]), BigInt::zero());
        let strict = vec![
            (iv(&[1, 0]), crate::rational::rat(3, 1)),
            (iv(&[0, 1]), crate::rational::rat(5, 2)),
        ];
        let pts = enumerate_lattice_points(&cs, Some(&strict)).unwrap();
        assert_eq!(
            pts,
            set(&[
                &[0, 0],
                &[0, 1],
                &[0, 2],
                &[1, 0],
                &[1, 1],
                &[1, 2],
                &[2, 0],
                &[2, 1],
                &[2, 2]
            ])
        );
    }

    #[test]
    fn triangle_with_equation() {
        // x + y + z = 2, x,y,z >= 0
        let mut cs = AffineConstraints::new();
        cs.eq(iv(&[1, 1, 1]), BigInt::from(2));
        for i in 0..3 {
            cs.ge(IntVec::unit(3, i), BigInt::zero());
        }
        let pts = enumerate_lattice_points(&cs, None).unwrap();
        assert_eq!(pts.len(), 6);
        for p in pts.iter() {
            assert!(cs.satisfied_by(p));
        }
    }

    #[test]
    fn agrees_with_box_filter() {
        // random small systems: engine output == brute-force box filtering
        let mut seed = 7u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..20 {
            let dim = 2 + (next().unsigned_abs() as usize % 2);
            let mut cs = AffineConstraints::new();
            for i in 0..dim {
                cs.ge(IntVec::unit(dim, i), BigInt::from(-2));
                cs.ge(IntVec::unit(dim, i).neg(), BigInt::from(-2));
            }
            for _ in 0..2 {
                let a: IntVec = (0..dim).map(|_| BigInt::from(next())).collect();
                cs.ge(a, BigInt::from(next()));
            }
            let got = enumerate_lattice_points(&cs, None).unwrap();
            // brute force over the [-2,2] box
            let mut expected = Vec::new();
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == dim {
                    let p = IntVec::from_i64(&prefix);
                    if cs.satisfied_by(&p) {
                        expected.push(p);
                    }
                    continue;
                }
                for v in -2..=2 {
                    let mut q = prefix.clone();
                    q.push(v);
                    stack.push(q);
                }
            }
            assert_eq!(got, LatticePointSet::new(expected));
        }
    }

    #[test]
    fn parallelepiped_examples() {
        // columns (1,0),(1,3): (1,0) is excluded because lambda=(1,0) is forced
        let a = IntMat::from_rows_i64(&[&[1, 1], &[0, 3]]);
        let pts = parallelepiped_points(&a).unwrap();
        assert_eq!(pts, set(&[&[0, 0], &[1, 1], &[1, 2]]));

        let a = IntMat::from_rows_i64(&[&[1]]);
        assert_eq!(parallelepiped_points(&a).unwrap(), set(&[&[0]]));

        // (1,2) reachable via lambda = (1/3, 0, 2/3)
        let a = IntMat::from_rows_i64(&[&[1, 1, 1], &[0, 1, 3]]);
        let pts = parallelepiped_points(&a).unwrap();
        assert!(pts.contains(&iv(&[1, 2])));
        assert!(pts.contains(&iv(&[0, 0])));
        for z in pts.iter() {
            assert!(half_open_membership(&a, z));
        }
        assert!(!pts.contains(&iv(&[1, 0])));
    }

    #[test]
    fn parallelepiped_needs_pointed() {
        let a = IntMat::from_rows_i64(&[&[1, -1]]);
        assert!(matches!(parallelepiped_points(&a), Err(Error::NotPointed)));
    }

    #[test]
    fn zonotope_description_is_exact() {
        // closed zonotope points must match direct lambda-membership tests
        let a = IntMat::from_rows_i64(&[&[1, 1, 2], &[0, 3, 1]]);
        let pts = closed_parallelepiped_points(&a).unwrap();
        let bounds = zonotope_box(&a);
        let mut count = 0;
        let (x0, x1) = bounds[0].clone();
        let (y0, y1) = bounds[1].clone();
        let mut x = x0;
        while x <= x1 {
            let mut y = y0.clone();
            while y <= y1 {
                let z = IntVec::new(vec![x.clone(), y.clone()]);
                let inside = closed_membership(&a, &z).is_some();
                assert_eq!(inside, pts.contains(&z), "point {z:?}");
                if inside {
                    count += 1;
                }
                y += BigInt::one();
            }
            x += BigInt::one();
        }
        assert_eq!(count, pts.len());
    }
}
