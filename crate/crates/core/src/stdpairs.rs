//! Monomial ideals and their standard-pair decompositions.
//!
//! A monomial is an exponent vector; an ideal is given by its minimal
//! generators. A standard pair `(u, S)` is a root monomial `u` together with
//! a set of free variables `S` disjoint from `supp(u)` such that every
//! `u * x^a` with `supp(a) ⊆ S` avoids the ideal, maximal with this
//! property. The pairs cover exactly the standard monomials.

use crate::matrix::IntVec;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};

/// A monomial ideal in `num_vars` variables, kept minimalized and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<IntVec>,
}

impl MonomialIdeal {
    /// Build from arbitrary generators: divisibility-redundant ones are
    /// dropped and the rest sorted.
    pub fn new(num_vars: usize, generators: Vec<IntVec>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), num_vars, "generator arity mismatch");
            assert!(g.is_nonnegative(), "exponents must be non-negative");
        }
        let minimal = minimalize(generators);
        MonomialIdeal {
            num_vars,
            generators: minimal,
        }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Contains the monomial 1, i.e. is the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_zero())
    }

    /// A monomial is standard iff no generator divides it.
    pub fn is_standard(&self, e: &IntVec) -> bool {
        assert_eq!(e.len(), self.num_vars, "exponent arity mismatch");
        !self.generators.iter().any(|g| g.dominated_by(e))
    }
}

/// Keep only the divisibility-minimal exponents, sorted lexicographically.
pub fn minimalize(mut generators: Vec<IntVec>) -> Vec<IntVec> {
    generators.sort();
    generators.dedup();
    let minimal: Vec<IntVec> = generators
        .iter()
        .filter(|g| {
            !generators
                .iter()
                .any(|h| *h != **g && h.dominated_by(g))
        })
        .cloned()
        .collect();
    minimal
}

/// A standard pair: root exponent plus free variable set (sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardPair {
    pub root: IntVec,
    pub free_vars: Vec<usize>,
}

impl StandardPair {
    /// Does the pair cover the exponent `e`?
    pub fn covers(&self, e: &IntVec) -> bool {
        debug_assert_eq!(e.len(), self.root.len());
        let free: BTreeSet<usize> = self.free_vars.iter().copied().collect();
        (0..e.len()).all(|i| {
            if e[i] < self.root[i] {
                false
            } else {
                e[i] == self.root[i] || free.contains(&i)
            }
        })
    }
}

/// The standard-pair decomposition: all maximal admissible pairs, sorted by
/// (root, free set). Pairs may overlap; together they cover exactly the
/// standard monomials.
pub fn standard_pairs(ideal: &MonomialIdeal) -> Vec<StandardPair> {
    let mut memo: Memo = HashMap::new();
    let vars: Vec<usize> = (0..ideal.num_vars()).collect();
    let mut out = pairs_rec(ideal, &vars, &mut memo);
    out.sort();
    out.dedup();
    out
}

/// Recursive splitting on a variable occurring in the generators.
///
/// * Pairs with `x_i` free correspond to pairs of the saturation
///   `(I : x_i^inf)`, whose generators drop their `x_i` exponents.
/// * Pairs without `x_i` free have root degree `k < max x_i-degree of the
///   generators` and correspond to pairs of the degree-`k` slice ideal.
///
/// Maximality needs no cross-branch filtering: a slice pair dominated by
/// some admissible enlargement would already be non-maximal inside its own
/// subproblem.
type Memo = HashMap<(Vec<usize>, MonomialIdeal), Vec<StandardPair>>;

fn pairs_rec(ideal: &MonomialIdeal, vars: &[usize], memo: &mut Memo) -> Vec<StandardPair> {
    if ideal.is_unit_ideal() {
        return Vec::new();
    }
    if ideal.is_zero_ideal() {
        return vec![StandardPair {
            root: IntVec::zeros(ideal.num_vars()),
            free_vars: vars.to_vec(),
        }];
    }
    let key = (vars.to_vec(), ideal.clone());
    if let Some(cached) = memo.get(&key) {
        return cached.clone();
    }

    // split on the first active variable
    let i = *vars
        .iter()
        .find(|&&v| ideal.generators().iter().any(|g| !g[v].is_zero()))
        .expect("non-trivial ideal must use some variable");
    let rest: Vec<usize> = vars.iter().copied().filter(|&v| v != i).collect();
    let max_deg: BigInt = ideal
        .generators()
        .iter()
        .map(|g| g[i].clone())
        .max()
        .unwrap_or_else(BigInt::zero);

    let mut out: Vec<StandardPair> = Vec::new();

    // branch 1: x_i free -> saturate away x_i
    let saturated: Vec<IntVec> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.clone();
            e[i] = BigInt::zero();
            e
        })
        .collect();
    let sat_ideal = MonomialIdeal::new(ideal.num_vars(), saturated);
    for mut p in pairs_rec(&sat_ideal, &rest, memo) {
        p.free_vars.push(i);
        p.free_vars.sort_unstable();
        out.push(p);
    }

    // branch 2: root x_i-degree k, for each k below the generator ceiling
    let mut k = BigInt::zero();
    while k < max_deg {
        let slice: Vec<IntVec> = ideal
            .generators()
            .iter()
            .filter(|g| g[i] <= k)
            .map(|g| {
                let mut e = g.clone();
                e[i] = BigInt::zero();
                e
            })
            .collect();
        let slice_ideal = MonomialIdeal::new(ideal.num_vars(), slice);
        for mut p in pairs_rec(&slice_ideal, &rest, memo) {
            p.root[i] = k.clone();
            out.push(p);
        }
        k += 1;
    }

    out.sort();
    out.dedup();
    memo.insert(key, out.clone());
    out
}
