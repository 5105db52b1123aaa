//! Exact solvers for linear Diophantine systems: Hilbert bases of kernel
//! monoids, minimal non-negative solutions of inhomogeneous systems, integer
//! feasibility over a pointed cone, and the Hilbert basis of a saturation
//! `K ∩ L`.
//!
//! The completion procedure is breadth-first over the 1-norm: a frontier
//! vector `x` branches to `x + e_j` only when `<Bx, Be_j> < 0`, and children
//! dominating an already-found solution are discarded. Inhomogeneous systems
//! are homogenized with an extra coordinate `t` truncated at `t <= 1`, and
//! the `t = 1` vectors are harvested.

use crate::cone::{self, ConeDescription};
use crate::hnf;
use crate::matrix::{IntMat, IntVec};
use crate::rational::{self, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use std::collections::{BTreeSet, HashSet};
use std::hash::Hash;

/// Minimal generating set of the monoid of lattice points of a pointed
/// cone (or of a kernel monoid), sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<IntVec>,
}

impl HilbertBasis {
    fn new(mut elements: Vec<IntVec>) -> Self {
        elements.sort();
        elements.dedup();
        HilbertBasis { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The coordinatewise-minimal non-negative solutions of a linear system,
/// sorted lexicographically. Pairwise incomparable and complete: every
/// solution dominates a listed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSolutionSet {
    pub solutions: Vec<IntVec>,
}

impl MinimalSolutionSet {
    fn new(mut solutions: Vec<IntVec>) -> Self {
        solutions.sort();
        solutions.dedup();
        MinimalSolutionSet { solutions }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// Split concatenated `(lambda, mu)` solutions back into pairs.
    pub fn split_pairs(&self, n: usize) -> Vec<(IntVec, IntVec)> {
        self.solutions
            .iter()
            .map(|s| {
                debug_assert_eq!(s.len(), 2 * n);
                let lambda: IntVec = (0..n).map(|i| s[i].clone()).collect();
                let mu: IntVec = (n..2 * n).map(|i| s[i].clone()).collect();
                (lambda, mu)
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// completion procedure
// ---------------------------------------------------------------------------

trait Ring:
    Integer + CheckedAdd + CheckedSub + CheckedMul + Signed + Clone + Hash + std::fmt::Debug
{
    fn from_bigint(v: &BigInt) -> Option<Self>;
}

impl Ring for i64 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i64::try_from(v).ok()
    }
}

impl Ring for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

fn checked_dot<T: Ring>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.checked_mul(y)?)?;
    }
    Some(acc)
}

/// Minimal nonzero solutions of `Bx = 0, x >= 0`, coordinates optionally
/// truncated (`bounds[j] = Some(c)` discards vectors with `x_j > c`).
/// Returns `None` on arithmetic overflow so a wider type can retry.
fn completion<T: Ring>(cols: &[Vec<T>], bounds: &[Option<T>]) -> Option<Vec<Vec<T>>> {
    let n = cols.len();
    let m = cols.first().map_or(0, |c| c.len());
    let mut solutions: Vec<Vec<T>> = Vec::new();
    // frontier of (x, Bx), breadth-first by 1-norm of x
    let mut frontier: Vec<(Vec<T>, Vec<T>)> = Vec::new();
    let mut seen: HashSet<Vec<T>> = HashSet::new();
    for j in 0..n {
        if bounds[j].as_ref().is_some_and(|b| *b < T::one()) {
            continue;
        }
        let mut x = vec![T::zero(); n];
        x[j] = T::one();
        if seen.insert(x.clone()) {
            frontier.push((x, cols[j].clone()));
        }
    }

    while !frontier.is_empty() {
        let mut next: Vec<(Vec<T>, Vec<T>)> = Vec::new();
        // harvest solutions at this level first, then branch the rest
        let mut pending: Vec<(Vec<T>, Vec<T>)> = Vec::new();
        for (x, bx) in frontier.drain(..) {
            if bx.iter().all(|v| v.is_zero()) {
                solutions.push(x);
            } else {
                pending.push((x, bx));
            }
        }
        for (x, bx) in pending {
            for j in 0..n {
                // branch only towards the kernel
                let d = checked_dot(&bx, &cols[j])?;
                if !d.is_negative() {
                    continue;
                }
                if let Some(b) = &bounds[j] {
                    if x[j] >= *b {
                        continue;
                    }
                }
                let mut child = x.clone();
                child[j] = child[j].checked_add(&T::one())?;
                if solutions.iter().any(|s| dominates(&child, s)) {
                    continue;
                }
                if seen.contains(&child) {
                    continue;
                }
                let mut cbx = Vec::with_capacity(m);
                for (v, w) in bx.iter().zip(&cols[j]) {
                    cbx.push(v.checked_add(w)?);
                }
                seen.insert(child.clone());
                next.push((child, cbx));
            }
        }
        frontier = next;
    }
    Some(solutions)
}

fn dominates<T: Ring>(x: &[T], s: &[T]) -> bool {
    x.iter().zip(s).all(|(a, b)| a >= b)
}

/// Run the completion with an `i64` fast path, falling back to `BigInt`
/// arithmetic if anything overflows.
fn completion_auto(cols: &[IntVec], bounds: &[Option<BigInt>]) -> Vec<IntVec> {
    let small_cols: Option<Vec<Vec<i64>>> = cols.iter().map(|c| c.to_i64_vec()).collect();
    let small_bounds: Option<Vec<Option<i64>>> = bounds
        .iter()
        .map(|b| match b {
            None => Some(None),
            Some(v) => i64::from_bigint(v).map(Some),
        })
        .collect();
    if let (Some(sc), Some(sb)) = (small_cols, small_bounds) {
        if let Some(out) = completion::<i64>(&sc, &sb) {
            return out
                .into_iter()
                .map(|x| x.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
        }
    }
    let big_cols: Vec<Vec<BigInt>> = cols.iter().map(|c| c.entries().to_vec()).collect();
    completion::<BigInt>(&big_cols, bounds)
        .expect("BigInt completion cannot overflow")
        .into_iter()
        .map(IntVec::new)
        .collect()
}

/// Hilbert basis of the kernel monoid `{x in Z^n, x >= 0 : Bx = 0}`.
pub fn minimal_nonneg_kernel(b: &IntMat) -> HilbertBasis {
    let cols = b.columns();
    let bounds = vec![None; cols.len()];
    HilbertBasis::new(completion_auto(&cols, &bounds))
}

/// The coordinatewise-minimal elements of `{x >= 0 : Bx = c}`.
///
/// Solved by homogenizing: `B x - t c = 0` with the completion truncated at
/// `t <= 1`; the `t = 1` vectors are exactly the minimal solutions.
pub fn minimal_solutions(b: &IntMat, c: &IntVec) -> Result<MinimalSolutionSet> {
    if c.len() != b.rows() {
        return Err(Error::DimensionMismatch {
            expected: b.rows(),
            found: c.len(),
        });
    }
    let n = b.cols();
    let mut cols = b.columns();
    cols.push(c.neg());
    let mut bounds = vec![None; n];
    bounds.push(Some(BigInt::one()));
    let raw = completion_auto(&cols, &bounds);
    let solutions: Vec<IntVec> = raw
        .into_iter()
        .filter(|x| x[n].is_one())
        .map(|x| (0..n).map(|i| x[i].clone()).collect())
        .collect();
    Ok(MinimalSolutionSet::new(solutions))
}

/// Lemma-style minimal solution pairs: the `<=`-minimal
/// `(lambda, mu) in Z^{2n}, >= 0` with `A mu - A lambda = f`, returned as
/// concatenated `(lambda | mu)` vectors.
pub fn minimal_inhomogeneous(a: &IntMat, f: &IntVec) -> Result<MinimalSolutionSet> {
    let neg_cols: Vec<IntVec> = a.columns().iter().map(|c| c.neg()).collect();
    let b = IntMat::from_columns(&neg_cols).hcat(a);
    minimal_solutions(&b, f)
}

// ---------------------------------------------------------------------------
// integer feasibility
// ---------------------------------------------------------------------------

/// Reusable depth-first search for `A x = b, x >= 0, x` integral, over a
/// pointed cone. Branches on columns in decreasing grading order with exact
/// interval bounds from a functional that is strictly positive on every
/// column.
pub struct FeasibilitySolver {
    cols: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
    grading: IntVec,
    order: Vec<usize>,
    wcol: Vec<BigInt>,
}

impl FeasibilitySolver {
    pub fn new(a: &IntMat) -> Result<Self> {
        let cols = a.columns();
        for (i, c) in cols.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::ZeroColumn { index: i });
            }
        }
        if cols.is_empty() {
            return Err(Error::AllZeroGenerators);
        }
        let desc = cone::dual_description(&cols)?;
        if !desc.is_pointed() {
            return Err(Error::NotPointed);
        }
        Self::with_cone(a, &desc)
    }

    /// Build from a precomputed description of the column cone.
    pub fn with_cone(a: &IntMat, desc: &ConeDescription) -> Result<Self> {
        let cols = a.columns();
        let grading = desc.positive_functional();
        let wcol_all: Vec<BigInt> = cols.iter().map(|c| grading.dot(c)).collect();
        debug_assert!(wcol_all.iter().all(|w| w.is_positive()));
        let mut order: Vec<usize> = (0..cols.len()).collect();
        order.sort_by(|&i, &j| wcol_all[j].cmp(&wcol_all[i]).then(i.cmp(&j)));
        let wcol = order.iter().map(|&j| wcol_all[j].clone()).collect();
        Ok(FeasibilitySolver {
            cols,
            facets: desc.facets.clone(),
            equations: desc.implicit_equations.clone(),
            grading,
            order,
            wcol,
        })
    }

    /// Find `x >= 0` integral with `A x = b`; the witness is
    /// substitution-checked before being returned.
    pub fn solve(&self, b: &IntVec) -> Result<Option<IntVec>> {
        let m = self.cols[0].len();
        if b.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: b.len(),
            });
        }
        if self.equations.iter().any(|e| !e.dot(b).is_zero()) {
            return Ok(None);
        }
        let n = self.cols.len();
        let mut x = vec![BigInt::zero(); n];
        let mut residual = b.clone();
        let wb = self.grading.dot(b);
        let found = self.descend(0, &mut residual, wb, &mut x);
        if found {
            let witness: IntVec = x.into_iter().collect();
            debug_assert_eq!(
                IntMat::from_columns(&self.cols).mul_vec(&witness),
                *b,
                "feasibility witness failed substitution"
            );
            Ok(Some(witness))
        } else {
            Ok(None)
        }
    }

    fn descend(&self, k: usize, residual: &mut IntVec, wres: BigInt, x: &mut [BigInt]) -> bool {
        if wres.is_negative() {
            return false;
        }
        if wres.is_zero() {
            return residual.is_zero();
        }
        if k == self.order.len() {
            return false;
        }
        if self.facets.iter().any(|h| h.dot(residual).is_negative()) {
            return false;
        }
        let j = self.order[k];
        let col = &self.cols[j];
        let wc = &self.wcol[k];
        if k + 1 == self.order.len() {
            // last column: the coefficient is forced by the grading value
            let (q, r) = wres.div_rem(wc);
            if !r.is_zero() {
                return false;
            }
            if *residual == col.scale(&q) {
                x[j] = q;
                return true;
            }
            return false;
        }
        let mut c = wres.div_floor(wc);
        while !c.is_negative() {
            let rest = residual.sub(&col.scale(&c));
            let wrest = &wres - &c * wc;
            let mut rest = rest;
            x[j] = c.clone();
            if self.descend(k + 1, &mut rest, wrest, x) {
                return true;
            }
            c -= BigInt::one();
        }
        x[j] = BigInt::zero();
        false
    }
}

/// One-shot integer feasibility for `A x = b, x >= 0` over a pointed cone.
pub fn integer_feasible(a: &IntMat, b: &IntVec) -> Result<Option<IntVec>> {
    FeasibilitySolver::new(a)?.solve(b)
}

// ---------------------------------------------------------------------------
// Hilbert basis of a saturation K ∩ L
// ---------------------------------------------------------------------------

/// Triangulate a pointed cone given by extreme rays into simplicial cones
/// (each a maximal linearly independent ray set), recursively over facets.
fn triangulate(rays: &[IntVec]) -> Result<Vec<Vec<IntVec>>> {
    let mut rays: Vec<IntVec> = rays.iter().map(|r| r.primitive()).collect();
    rays.sort();
    rays.dedup();
    if rays.is_empty() {
        return Ok(Vec::new());
    }
    let rank = hnf::rank(&IntMat::from_columns(&rays));
    if rays.len() == rank {
        return Ok(vec![rays]);
    }
    let desc = cone::dual_description(&rays)?;
    let v = rays[0].clone();
    let mut out = Vec::new();
    for h in &desc.facets {
        if !h.dot(&v).is_positive() {
            continue;
        }
        let sub: Vec<IntVec> = rays.iter().filter(|r| h.dot(r).is_zero()).cloned().collect();
        for mut simplex in triangulate(&sub)? {
            simplex.push(v.clone());
            out.push(simplex);
        }
    }
    Ok(out)
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// columns of a nonsingular square matrix `R`: one representative per class
/// of `Z^r / R Z^r`.
fn simplex_parallelepiped(r_mat: &IntMat) -> Vec<IntVec> {
    let r = r_mat.rows();
    let h = hnf::hermite_normal_form(r_mat);
    debug_assert_eq!(h.rank(), r);
    let diag: Vec<BigInt> = (0..r).map(|i| h.h.get(h.pivot_rows[i], i).clone()).collect();
    let det: BigInt = diag.iter().product();
    if det.is_one() {
        return Vec::new();
    }
    // rational inverse of R, column by column
    let a: Vec<Vec<Rat>> = (0..r)
        .map(|i| (0..r).map(|j| rational::rat_int(r_mat.get(i, j))).collect())
        .collect();
    let inv_cols: Vec<Vec<Rat>> = (0..r)
        .map(|j| {
            let mut e = vec![Rat::zero(); r];
            e[j] = Rat::one();
            rational::solve_square(&a, &e).expect("simplex matrix is nonsingular")
        })
        .collect();

    let mut out = Vec::new();
    let mut counter = vec![BigInt::zero(); r];
    loop {
        if counter.iter().any(|c| !c.is_zero()) {
            // t = R^-1 x, reduce to the fractional part, map back
            let mut floor_t = Vec::with_capacity(r);
            for i in 0..r {
                let mut ti = Rat::zero();
                for (j, cj) in counter.iter().enumerate() {
                    if !cj.is_zero() {
                        ti += &inv_cols[j][i] * rational::rat_int(cj);
                    }
                }
                floor_t.push(rational::rat_floor(&ti));
            }
            let shift = r_mat.mul_vec(&IntVec::new(floor_t));
            let z = IntVec::new(counter.clone()).sub(&shift);
            if !z.is_zero() {
                out.push(z);
            }
        }
        // mixed-radix increment over the diagonal residues
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            counter[i] += BigInt::one();
            if counter[i] < diag[i] {
                break;
            }
            counter[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Hilbert basis of `K ∩ Λ` for an explicit lattice basis `Λ` (columns of
/// `lattice_basis`, which must span the same rational space as the cone).
///
/// The cone is triangulated in lattice coordinates; the candidate set is the
/// union of the simplex parallelepiped points and the extreme rays, which
/// generates the monoid, so the basis is exactly its irreducible members.
/// Irreducibility of `h` reduces to: no other candidate `c` has `h - c` in
/// the cone.
pub(crate) fn hilbert_basis_in_lattice(
    desc: &ConeDescription,
    lattice_basis: &IntMat,
) -> Result<HilbertBasis> {
    if !desc.is_pointed() {
        return Err(Error::NotPointed);
    }
    let r = lattice_basis.cols();
    if r == 0 {
        return Ok(HilbertBasis::new(Vec::new()));
    }
    // cone in lattice coordinates: { u : (F B) u >= 0 }
    let g_rows: Vec<IntVec> = desc
        .facets
        .iter()
        .map(|f| {
            (0..r)
                .map(|j| f.dot(&lattice_basis.column(j)))
                .collect::<IntVec>()
        })
        .collect();
    let (rays, lin) = cone::dual_cone_rays(&g_rows, r);
    debug_assert!(lin.is_empty(), "transformed cone must be pointed");

    let mut candidates: BTreeSet<IntVec> = rays.iter().cloned().collect();
    for simplex in triangulate(&rays)? {
        let r_mat = IntMat::from_columns(&simplex);
        for p in simplex_parallelepiped(&r_mat) {
            candidates.insert(p);
        }
    }
    let candidates: Vec<IntVec> = candidates.into_iter().collect();
    let g_values: Vec<Vec<BigInt>> = candidates
        .iter()
        .map(|c| g_rows.iter().map(|g| g.dot(c)).collect())
        .collect();
    let mut basis = Vec::new();
    for (i, _) in candidates.iter().enumerate() {
        let reducible = (0..candidates.len()).any(|j| {
            j != i
                && g_values[i]
                    .iter()
                    .zip(&g_values[j])
                    .all(|(hi, ci)| hi >= ci)
        });
        if !reducible {
            basis.push(lattice_basis.mul_vec(&candidates[i]));
        }
    }
    Ok(HilbertBasis::new(basis))
}

/// Minimal Hilbert basis of the saturation `K(A) ∩ L(A)`: the cone of the
/// columns intersected with the lattice they generate.
pub fn saturation_hilbert_basis(a: &IntMat) -> Result<HilbertBasis> {
    let cols: Vec<IntVec> = a.columns().into_iter().filter(|c| !c.is_zero()).collect();
    if cols.is_empty() {
        return Ok(HilbertBasis::new(Vec::new()));
    }
    let desc = cone::dual_description(&cols)?;
    if !desc.is_pointed() {
        return Err(Error::NotPointed);
    }
    let basis = hnf::hermite_normal_form(a).lattice_basis();
    hilbert_basis_in_lattice(&desc, &basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64(v)
    }

    fn ivs(vs: &[&[i64]]) -> Vec<IntVec> {
        vs.iter().map(|v| iv(v)).collect()
    }

    // -- completion --------------------------------------------------------

    #[test]
    fn kernel_examples() {
        let b = IntMat::from_rows_i64(&[&[1, -1]]);
        assert_eq!(minimal_nonneg_kernel(&b).elements, ivs(&[&[1, 1]]));

        let b = IntMat::from_rows_i64(&[&[2, -3]]);
        assert_eq!(minimal_nonneg_kernel(&b).elements, ivs(&[&[3, 2]]));

        let b = IntMat::from_rows_i64(&[&[1, 1]]);
        assert!(minimal_nonneg_kernel(&b).is_empty());
    }

    #[test]
    fn kernel_matches_brute_force() {
        // random small systems, oracle = minimal elements of box enumeration
        let mut seed = 31u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 5) as i64 - 2
        };
        for _ in 0..30 {
            let rows = 1 + (next().unsigned_abs() as usize % 2);
            let cols = 2 + (next().unsigned_abs() as usize % 3);
            let mut b = IntMat::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    b.set(i, j, BigInt::from(next()));
                }
            }
            let got = minimal_nonneg_kernel(&b);
            let expected = brute_force_kernel_minimal(&b, 8);
            // brute force only sees the box; every basis element within the
            // box must match exactly, and all basis elements must solve
            for e in &got.elements {
                assert!(b.mul_vec(e).is_zero());
            }
            let within: Vec<IntVec> = got
                .elements
                .iter()
                .filter(|e| e.iter().all(|x| *x <= BigInt::from(8)))
                .cloned()
                .collect();
            assert_eq!(within, expected, "matrix {b:?}");
        }
    }

    /// Minimal nonzero solutions of Bx = 0 with entries in [0, bound].
    fn brute_force_kernel_minimal(b: &IntMat, bound: i64) -> Vec<IntVec> {
        let n = b.cols();
        let mut sols: Vec<IntVec> = Vec::new();
        let mut x = vec![0i64; n];
        'outer: loop {
            let v = IntVec::from_i64(&x);
            if !v.is_zero() && b.mul_vec(&v).is_zero() {
                sols.push(v);
            }
            let mut i = 0;
            loop {
                if i == n {
                    break 'outer;
                }
                x[i] += 1;
                if x[i] <= bound {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
        let mut minimal: Vec<IntVec> = sols
            .iter()
            .filter(|s| !sols.iter().any(|t| *t != **s && t.dominated_by(s)))
            .cloned()
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn minimal_pairs_two_three() {
        let a = IntMat::from_rows_i64(&[&[2, 3]]);
        let f = iv(&[1]);
        let m = minimal_inhomogeneous(&a, &f).unwrap();
        assert_eq!(m.solutions, ivs(&[&[0, 1, 2, 0], &[1, 0, 0, 1]]));
        let pairs = m.split_pairs(2);
        assert_eq!(pairs.len(), 2);
        for (lambda, mu) in pairs {
            assert_eq!(a.mul_vec(&mu).sub(&a.mul_vec(&lambda)), f);
        }
    }

    #[test]
    fn minimal_pairs_zero_rhs() {
        let a = IntMat::identity(1);
        let m = minimal_inhomogeneous(&a, &IntVec::zeros(1)).unwrap();
        assert_eq!(m.solutions, ivs(&[&[0, 0]]));
    }

    #[test]
    fn minimal_pairs_three_columns() {
        // columns (1,0),(1,1),(1,3); f = (1,2) is a hole, lambda supports e1, e2
        let a = IntMat::from_rows_i64(&[&[1, 1, 1], &[0, 1, 3]]);
        let f = iv(&[1, 2]);
        let m = minimal_inhomogeneous(&a, &f).unwrap();
        let mut lambda_supports: Vec<Vec<usize>> = m
            .split_pairs(3)
            .iter()
            .map(|(l, _)| l.support())
            .collect();
        lambda_supports.sort();
        lambda_supports.dedup();
        assert_eq!(lambda_supports, vec![vec![0], vec![1]]);
        // no solution with lambda = 0 (f is not in Q)
        assert!(m.split_pairs(3).iter().all(|(l, _)| !l.is_zero()));
    }

    #[test]
    fn minimal_solutions_infeasible_is_empty() {
        // 2x = 1 has no non-negative integer solution
        let b = IntMat::from_rows_i64(&[&[2]]);
        let m = minimal_solutions(&b, &iv(&[1])).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn minimal_solutions_completeness_random() {
        // every random solution dominates a returned minimal one
        let mut seed = 77u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 4) as i64
        };
        for _ in 0..20 {
            let rows = 1 + (next() as usize % 2);
            let cols = 2 + (next() as usize % 3);
            let mut b = IntMat::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    b.set(i, j, BigInt::from(next() - 1));
                }
            }
            let x0: IntVec = (0..cols).map(|_| BigInt::from(next())).collect();
            let c = b.mul_vec(&x0);
            let m = minimal_solutions(&b, &c).unwrap();
            assert!(
                m.solutions.iter().any(|s| s.dominated_by(&x0)),
                "x0 {x0:?} not dominated for {b:?}"
            );
            // pairwise incomparable
            for s in &m.solutions {
                for t in &m.solutions {
                    if s != t {
                        assert!(!s.dominated_by(t));
                    }
                }
                assert_eq!(b.mul_vec(s), c);
            }
        }
    }

    // -- integer feasibility -----------------------------------------------

    #[test]
    fn feasible_examples() {
        let a = IntMat::from_rows_i64(&[&[2, 3]]);
        let x = integer_feasible(&a, &iv(&[7])).unwrap().expect("7 in <2,3>");
        assert_eq!(a.mul_vec(&x), iv(&[7]));
        assert_eq!(integer_feasible(&a, &iv(&[1])).unwrap(), None);
        assert_eq!(
            integer_feasible(&a, &iv(&[0])).unwrap(),
            Some(IntVec::zeros(2))
        );
    }

    #[test]
    fn feasible_rejects_unpointed_and_zero_columns() {
        let a = IntMat::from_rows_i64(&[&[1, -1]]);
        assert!(matches!(integer_feasible(&a, &iv(&[0])), Err(Error::NotPointed)));
        let a = IntMat::from_rows_i64(&[&[1, 0]]);
        assert!(matches!(
            integer_feasible(&a, &iv(&[1])),
            Err(Error::ZeroColumn { index: 1 })
        ));
    }

    #[test]
    fn infeasible_agrees_with_brute_force() {
        let a = IntMat::from_rows_i64(&[&[1, 1, 1], &[0, 1, 3]]);
        let solver = FeasibilitySolver::new(&a).unwrap();
        // brute force over x in [0,6]^3 for small b
        for b0 in 0..5i64 {
            for b1 in 0..7i64 {
                let b = iv(&[b0, b1]);
                let got = solver.solve(&b).unwrap();
                let mut expected = false;
                for x0 in 0..=6i64 {
                    for x1 in 0..=6i64 {
                        for x2 in 0..=6i64 {
                            if x0 + x1 + x2 == b0 && x1 + 3 * x2 == b1 {
                                expected = true;
                            }
                        }
                    }
                }
                assert_eq!(got.is_some(), expected, "b = {b:?}");
                if let Some(x) = got {
                    assert_eq!(a.mul_vec(&x), b);
                }
            }
        }
    }

    // -- saturation Hilbert basis -------------------------------------------

    #[test]
    fn saturation_identity() {
        let hb = saturation_hilbert_basis(&IntMat::identity(2)).unwrap();
        assert_eq!(hb.elements, ivs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn saturation_numerical() {
        // <2,3>: lattice is Z, cone is the nonnegative ray, basis {1}
        let a = IntMat::from_rows_i64(&[&[2, 3]]);
        let hb = saturation_hilbert_basis(&a).unwrap();
        assert_eq!(hb.elements, ivs(&[&[1]]));
    }

    #[test]
    fn saturation_respects_generated_lattice() {
        // columns (1,0),(1,3) generate the lattice Z x 3Z; within it the
        // cone monoid is generated by the two columns themselves
        let a = IntMat::from_rows_i64(&[&[1, 1], &[0, 3]]);
        let hb = saturation_hilbert_basis(&a).unwrap();
        assert_eq!(hb.elements, ivs(&[&[1, 0], &[1, 3]]));
    }

    #[test]
    fn saturation_full_lattice_two_dim() {
        // same cone over the full integer lattice: the classic staircase
        let a = IntMat::from_rows_i64(&[&[1, 1], &[0, 3]]);
        let desc = cone::dual_description(&a.columns()).unwrap();
        let hb = hilbert_basis_in_lattice(&desc, &IntMat::identity(2)).unwrap();
        assert_eq!(hb.elements, ivs(&[&[1, 0], &[1, 1], &[1, 2], &[1, 3]]));
    }

    #[test]
    fn saturation_not_pointed() {
        let a = IntMat::from_rows_i64(&[&[1, -1]]);
        assert!(matches!(saturation_hilbert_basis(&a), Err(Error::NotPointed)));
    }

    #[test]
    fn hilbert_basis_matches_brute_force_random() {
        // oracle: irreducible elements of K ∩ L within a degree box
        let mut seed = 5u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 4) as i64
        };
        let mut tried = 0;
        while tried < 15 {
            let rows = 2;
            let cols = 2 + (next() as usize % 3);
            let mut a = IntMat::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    a.set(i, j, BigInt::from(next()));
                }
            }
            let cs: Vec<IntVec> = a.columns().into_iter().filter(|c| !c.is_zero()).collect();
            if cs.is_empty() || !cone::is_pointed(&cs) {
                continue;
            }
            tried += 1;
            let hb = saturation_hilbert_basis(&a).unwrap();
            let expected = brute_force_hilbert(&a, 9);
            let in_window = |e: &IntVec| e.iter().all(|x| x.abs() <= BigInt::from(3));
            let within: Vec<IntVec> = hb.elements.iter().filter(|e| in_window(e)).cloned().collect();
            // compare on the window where the oracle is complete
            let expected_within: Vec<IntVec> =
                expected.iter().filter(|e| in_window(e)).cloned().collect();
            assert_eq!(within, expected_within, "matrix {a:?}");
        }
    }

    /// Irreducible elements of K(A) ∩ L(A) with coordinates bounded by
    /// `box_bound` in absolute value; complete only on a sub-window.
    fn brute_force_hilbert(a: &IntMat, box_bound: i64) -> Vec<IntVec> {
        let cols: Vec<IntVec> = a.columns().into_iter().filter(|c| !c.is_zero()).collect();
        let desc = cone::dual_description(&cols).unwrap();
        let lattice = hnf::hermite_normal_form(a).lattice_basis();
        let m = a.rows();
        // collect all monoid points in the box
        let mut pts: Vec<IntVec> = Vec::new();
        let mut x = vec![-box_bound; m];
        'outer: loop {
            let v = IntVec::from_i64(&x);
            if !v.is_zero()
                && desc.contains(&v)
                && hnf::solve_integer(&lattice, &v).unwrap().is_some()
            {
                pts.push(v);
            }
            let mut i = 0;
            loop {
                if i == m {
                    break 'outer;
                }
                x[i] += 1;
                if x[i] <= box_bound {
                    break;
                }
                x[i] = -box_bound;
                i += 1;
            }
        }
        let set: BTreeSet<IntVec> = pts.iter().cloned().collect();
        let mut irreducible: Vec<IntVec> = Vec::new();
        for p in &pts {
            let mut red = false;
            for q in &pts {
                if q != p {
                    let diff = p.sub(q);
                    if !diff.is_zero() && set.contains(&diff) {
                        red = true;
                        break;
                    }
                }
            }
            if !red {
                irreducible.push(p.clone());
            }
        }
        irreducible.sort();
        irreducible
    }
}
