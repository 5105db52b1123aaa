//! Rational polyhedral cones: facet descriptions via the double description
//! method, pointedness, and dual-cone machinery.
//!
//! Everything is exact. Generators and normals are kept primitive (gcd 1),
//! and all returned lists are sorted so output is deterministic.

use crate::hnf;
use crate::matrix::{IntMat, IntVec};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;

/// Inequality/equation description of the cone spanned by a set of generators.
///
/// The cone is exactly `{ z : h.z = 0 for h in implicit_equations,
/// h.z >= 0 for h in facets }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescription {
    pub generators: Vec<IntVec>,
    /// Primitive inner normals; irredundant.
    pub facets: Vec<IntVec>,
    /// Primitive equations satisfied by the whole cone (orthogonal
    /// complement of the linear span), in row-HNF form.
    pub implicit_equations: Vec<IntVec>,
    /// Dimension of the lineality space of the cone.
    pub lineality_dim: usize,
}

impl ConeDescription {
    pub fn is_pointed(&self) -> bool {
        self.lineality_dim == 0
    }

    /// Membership in the closed cone.
    pub fn contains(&self, z: &IntVec) -> bool {
        self.implicit_equations.iter().all(|h| h.dot(z).is_zero())
            && self.facets.iter().all(|h| h.dot(z) >= BigInt::zero())
    }

    /// A functional that is strictly positive on every nonzero cone point:
    /// the sum of the facet normals. Only meaningful for pointed cones.
    pub fn positive_functional(&self) -> IntVec {
        let m = self
            .facets
            .first()
            .map(|f| f.len())
            .or_else(|| self.implicit_equations.first().map(|e| e.len()))
            .unwrap_or(0);
        let mut w = IntVec::zeros(m);
        for f in &self.facets {
            w = w.add(f);
        }
        w
    }
}

/// A ray of the dual cone under construction, with the set of processed
/// constraints it satisfies with equality.
#[derive(Clone)]
struct Ray {
    v: IntVec,
    zeros: BTreeSet<usize>,
}

/// Extreme rays and lineality basis of `{ y : g.y >= 0 for all g }`,
/// built incrementally (double description).
pub(crate) fn dual_cone_rays(constraints: &[IntVec], dim: usize) -> (Vec<IntVec>, Vec<IntVec>) {
    let mut lin: Vec<IntVec> = (0..dim).map(|i| IntVec::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    // zero constraints are trivially tight everywhere; drop them up front so
    // the tightness indices below stay consistent
    let constraints: Vec<&IntVec> = constraints.iter().filter(|g| !g.is_zero()).collect();

    for (t, g) in constraints.iter().enumerate() {
        let g = *g;
        // Try to absorb the constraint into the lineality space.
        if let Some(k) = lin.iter().position(|v| !g.dot(v).is_zero()) {
            let mut v0 = lin.swap_remove(k);
            let gv0 = g.dot(&v0);
            if gv0 < BigInt::zero() {
                v0 = v0.neg();
            }
            let gv0 = g.dot(&v0);
            for w in lin.iter_mut() {
                let gw = g.dot(w);
                if !gw.is_zero() {
                    *w = w.scale(&gv0).sub(&v0.scale(&gw)).primitive_line();
                }
            }
            for r in rays.iter_mut() {
                let gr = g.dot(&r.v);
                if !gr.is_zero() {
                    r.v = r.v.scale(&gv0).sub(&v0.scale(&gr)).primitive();
                }
                r.zeros.insert(t);
            }
            // v0 itself becomes a ray, tight at every earlier constraint.
            let zeros: BTreeSet<usize> = (0..t).collect();
            rays.push(Ray {
                v: v0.primitive(),
                zeros,
            });
            continue;
        }
        // Standard double description step.
        let mut pos = Vec::new();
        let mut zero = Vec::new();
        let mut neg = Vec::new();
        for r in rays.into_iter() {
            let s = g.dot(&r.v);
            if s.is_zero() {
                let mut r = r;
                r.zeros.insert(t);
                zero.push(r);
            } else if s > BigInt::zero() {
                pos.push(r);
            } else {
                neg.push(r);
            }
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for p in &pos {
            for n in &neg {
                let common: BTreeSet<usize> = p.zeros.intersection(&n.zeros).copied().collect();
                // adjacency: no third ray is tight at all common constraints
                let adjacent = pos
                    .iter()
                    .chain(neg.iter())
                    .chain(zero.iter())
                    .all(|r| std::ptr::eq(r, p) || std::ptr::eq(r, n) || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let gp = g.dot(&p.v);
                let gn = g.dot(&n.v);
                let v = n.v.scale(&gp).sub(&p.v.scale(&gn)).primitive();
                debug_assert!(g.dot(&v).is_zero());
                let mut zeros = common;
                zeros.insert(t);
                new_rays.push(Ray { v, zeros });
            }
        }
        rays = pos;
        rays.extend(zero);
        rays.extend(new_rays);
    }

    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    (out, lin)
}

/// Canonical basis (row HNF) for the integer span of the given vectors.
fn row_hnf_basis(vectors: &[IntVec], dim: usize) -> Vec<IntVec> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mat = IntMat::from_columns(vectors); // dim x k
    let h = hnf::hermite_normal_form(&mat);
    let mut rows = Vec::new();
    for j in 0..h.rank() {
        rows.push(h.h.column(j));
    }
    debug_assert!(rows.iter().all(|r| r.len() == dim));
    rows
}

/// Facet/equation description of the cone generated by the given vectors.
pub fn dual_description(generators: &[IntVec]) -> Result<ConeDescription> {
    let nonzero: Vec<IntVec> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::AllZeroGenerators);
    }
    let dim = nonzero[0].len();
    if nonzero.iter().any(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: nonzero.iter().map(|g| g.len()).find(|&l| l != dim).unwrap(),
        });
    }

    let (facets, dual_lineality) = dual_cone_rays(&nonzero, dim);
    let mut implicit_equations = row_hnf_basis(&dual_lineality, dim);
    implicit_equations.sort();

    // lineality of the primal = ambient dim minus the span of the dual cone
    let mut all_normals = facets.clone();
    all_normals.extend(implicit_equations.iter().cloned());
    let lineality_dim = if all_normals.is_empty() {
        dim
    } else {
        dim - hnf::rank(&IntMat::from_columns(&all_normals))
    };

    Ok(ConeDescription {
        generators: generators.to_vec(),
        facets,
        implicit_equations,
        lineality_dim,
    })
}

/// Does the given generator list span a pointed cone? The zero cone counts
/// as pointed.
pub fn is_pointed(generators: &[IntVec]) -> bool {
    if generators.iter().all(|g| g.is_zero()) {
        return true;
    }
    dual_description(generators)
        .map(|d| d.is_pointed())
        .unwrap_or(true)
}
