//! Exact linear programming over the rationals.
//!
//! Two-phase primal simplex with Bland's rule on a dense tableau. Sizes in
//! this crate are tiny (tens of variables and constraints), so the focus is
//! exactness and termination, not sparse performance.

use crate::rational::Rat;
use num_traits::{One, Signed, Zero};

/// A linear constraint `coeffs . x (=|>=|<=) rhs` over free variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Eq(Vec<Rat>, Rat),
    Ge(Vec<Rat>, Rat),
    Le(Vec<Rat>, Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    Unbounded,
    /// Optimal objective value and an attaining point.
    Optimal(Rat, Vec<Rat>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// Optimize `obj . x` subject to the constraints; variables are free.
pub fn optimize(n_vars: usize, constraints: &[Constraint], obj: &[Rat], sense: Sense) -> LpResult {
    assert_eq!(obj.len(), n_vars);
    let mut tab = Tableau::build(n_vars, constraints);
    if !tab.phase_one() {
        return LpResult::Infeasible;
    }
    let neg;
    let objective: Vec<Rat> = match sense {
        Sense::Maximize => {
            neg = false;
            obj.to_vec()
        }
        Sense::Minimize => {
            neg = true;
            obj.iter().map(|c| -c).collect()
        }
    };
    match tab.phase_two(&objective) {
        None => LpResult::Unbounded,
        Some(val) => {
            let x = tab.extract(n_vars);
            let v = if neg { -val } else { val };
            LpResult::Optimal(v, x)
        }
    }
}

/// Any point satisfying the constraints, if one exists.
pub fn feasible_point(n_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    let mut tab = Tableau::build(n_vars, constraints);
    if tab.phase_one() {
        Some(tab.extract(n_vars))
    } else {
        None
    }
}

/// Standard-form tableau: rows `B x_B + N x_N = b` with `b >= 0`.
///
/// Column layout: `x+` (n), `x-` (n), surplus/slack (one per inequality),
/// then one artificial per row during phase one.
struct Tableau {
    /// rows of [coeffs | rhs]
    rows: Vec<Vec<Rat>>,
    /// basis[i] = column index basic in row i
    basis: Vec<usize>,
    n_cols: usize,
    n_artificial: usize,
}

impl Tableau {
    fn build(n_vars: usize, constraints: &[Constraint]) -> Tableau {
        let n_ineq = constraints
            .iter()
            .filter(|c| !matches!(c, Constraint::Eq(..)))
            .count();
        let n_rows = constraints.len();
        let n_struct = 2 * n_vars + n_ineq;
        let n_cols = n_struct + n_rows; // artificials at the end
        let mut rows = Vec::with_capacity(n_rows);
        let mut slack_idx = 2 * n_vars;
        for c in constraints {
            let (coeffs, rhs, slack_sign) = match c {
                Constraint::Eq(a, b) => (a, b, Rat::zero()),
                Constraint::Ge(a, b) => (a, b, -Rat::one()),
                Constraint::Le(a, b) => (a, b, Rat::one()),
            };
            assert_eq!(coeffs.len(), n_vars, "constraint arity mismatch");
            let mut row = vec![Rat::zero(); n_cols + 1];
            for (j, a) in coeffs.iter().enumerate() {
                row[j] = a.clone();
                row[n_vars + j] = -a.clone();
            }
            if !slack_sign.is_zero() {
                row[slack_idx] = slack_sign;
                slack_idx += 1;
            }
            row[n_cols] = rhs.clone();
            // normalize to rhs >= 0
            if row[n_cols].is_negative() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
            rows.push(row);
        }
        // artificial basis
        let mut basis = Vec::with_capacity(n_rows);
        for (i, row) in rows.iter_mut().enumerate() {
            let art = n_struct + i;
            row[art] = Rat::one();
            basis.push(art);
        }
        Tableau {
            rows,
            basis,
            n_cols,
            n_artificial: n_rows,
        }
    }

    fn n_struct(&self) -> usize {
        self.n_cols - self.n_artificial
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        debug_assert!(!p.is_zero());
        for x in self.rows[row].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for j in 0..=self.n_cols {
                let sub = &f * &self.rows[row][j];
                self.rows[i][j] = &self.rows[i][j] - sub;
            }
        }
        self.basis[row] = col;
    }

    /// Simplex iterations for the reduced costs of `cost` (maximization).
    /// `allowed` limits the entering columns. Returns false on unbounded.
    fn iterate(&mut self, cost: &[Rat], allowed_cols: usize) -> bool {
        loop {
            // reduced cost: c_j - c_B . B^-1 A_j  (Bland: first positive)
            let mut entering = None;
            for j in 0..allowed_cols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut rc = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    let cb = &cost[self.basis[i]];
                    if !cb.is_zero() && !row[j].is_zero() {
                        let sub = cb * &row[j];
                        rc = rc - sub;
                    }
                }
                if rc.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true; // optimal
            };
            // ratio test, Bland tie-break on smallest basis column
            let mut leave: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[self.n_cols] / &row[col];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                None => return false, // unbounded direction
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }

    /// Minimize the sum of artificials. True iff the system is feasible.
    fn phase_one(&mut self) -> bool {
        let mut cost = vec![Rat::zero(); self.n_cols];
        for j in self.n_struct()..self.n_cols {
            cost[j] = -Rat::one();
        }
        let ok = self.iterate(&cost, self.n_cols);
        debug_assert!(ok, "phase one cannot be unbounded");
        // objective value = -(sum of artificials)
        let mut total = Rat::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if b >= self.n_struct() {
                total += &self.rows[i][self.n_cols];
            }
        }
        if !total.is_zero() {
            return false;
        }
        // drive remaining artificials out of the basis where possible
        for i in 0..self.basis.len() {
            if self.basis[i] >= self.n_struct() {
                let col = (0..self.n_struct()).find(|&j| !self.rows[i][j].is_zero());
                if let Some(j) = col {
                    self.pivot(i, j);
                }
                // else: redundant row, keep the artificial at value 0
            }
        }
        true
    }

    /// Maximize `obj` over structural columns. Returns the optimum or `None`
    /// if unbounded.
    fn phase_two(&mut self, obj: &[Rat]) -> Option<Rat> {
        let mut cost = vec![Rat::zero(); self.n_cols];
        for (j, c) in obj.iter().enumerate() {
            cost[j] = c.clone();
            cost[obj.len() + j] = -c.clone();
        }
        if !self.iterate(&cost, self.n_struct()) {
            return None;
        }
        let mut val = Rat::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                val += &cost[b] * &self.rows[i][self.n_cols];
            }
        }
        Some(val)
    }

    /// Current values of the original free variables.
    fn extract(&self, n_vars: usize) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); n_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n_vars {
                x[b] += &self.rows[i][self.n_cols];
            } else if b < 2 * n_vars {
                x[b - n_vars] -= &self.rows[i][self.n_cols];
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ge(a: &[i64], b: i64) -> Constraint {
        Constraint::Ge(a.iter().map(|&x| rat(x, 1)).collect(), rat(b, 1))
    }
    fn le(a: &[i64], b: i64) -> Constraint {
        Constraint::Le(a.iter().map(|&x| rat(x, 1)).collect(), rat(b, 1))
    }
    fn eq(a: &[i64], b: i64) -> Constraint {
        Constraint::Eq(a.iter().map(|&x| rat(x, 1)).collect(), rat(b, 1))
    }

    fn check_point(cs: &[Constraint], x: &[Rat]) {
        for c in cs {
            let (a, b, kind) = match c {
                Constraint::Eq(a, b) => (a, b, 0),
                Constraint::Ge(a, b) => (a, b, 1),
                Constraint::Le(a, b) => (a, b, -1),
            };
            let lhs: Rat = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
            match kind {
                0 => assert_eq!(&lhs, b),
                1 => assert!(lhs >= *b),
                _ => assert!(lhs <= *b),
            }
        }
    }

    #[test]
    fn simple_max() {
        // max x + y over the unit square
        let cs = vec![ge(&[1, 0], 0), ge(&[0, 1], 0), le(&[1, 0], 1), le(&[0, 1], 1)];
        let r = optimize(2, &cs, &[rat(1, 1), rat(1, 1)], Sense::Maximize);
        match r {
            LpResult::Optimal(v, x) => {
                assert_eq!(v, rat(2, 1));
                check_point(&cs, &x);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let cs = vec![ge(&[1], 1), le(&[1], 0)];
        assert_eq!(feasible_point(1, &cs), None);
        assert_eq!(
            optimize(1, &cs, &[rat(1, 1)], Sense::Maximize),
            LpResult::Infeasible
        );

        let cs = vec![ge(&[1], 0)];
        assert_eq!(
            optimize(1, &cs, &[rat(1, 1)], Sense::Maximize),
            LpResult::Unbounded
        );
        // but minimizing is bounded
        assert_eq!(
            optimize(1, &cs, &[rat(1, 1)], Sense::Minimize),
            LpResult::Optimal(rat(0, 1), vec![rat(0, 1)])
        );
    }

    #[test]
    fn equality_with_negative_components() {
        // x + y = 1, x - y = 3  ->  x = 2, y = -1
        let cs = vec![eq(&[1, 1], 1), eq(&[1, -1], 3)];
        let x = feasible_point(2, &cs).expect("feasible");
        assert_eq!(x, vec![rat(2, 1), rat(-1, 1)]);
    }

    #[test]
    fn fractional_optimum() {
        // max y s.t. 3y <= 2, y >= 0
        let cs = vec![le(&[3], 2), ge(&[1], 0)];
        assert_eq!(
            optimize(1, &cs, &[rat(1, 1)], Sense::Maximize),
            LpResult::Optimal(rat(2, 3), vec![rat(2, 3)])
        );
    }

    #[test]
    fn degenerate_redundant_rows() {
        // duplicated equalities must not break phase one
        let cs = vec![eq(&[1, 1], 2), eq(&[1, 1], 2), eq(&[2, 2], 4), ge(&[1, 0], 0)];
        let x = feasible_point(2, &cs).expect("feasible");
        check_point(&cs, &x);
    }

    #[test]
    fn feasibility_box_with_equations() {
        // lambda in [0,1]^2 with lambda1 + 3*lambda2 = 2 -> feasible
        let cs = vec![
            eq(&[1, 3], 2),
            ge(&[1, 0], 0),
            ge(&[0, 1], 0),
            le(&[1, 0], 1),
            le(&[0, 1], 1),
        ];
        let x = feasible_point(2, &cs).expect("feasible");
        check_point(&cs, &x);
        // and minimizing lambda1 reaches 0
        assert!(matches!(
            optimize(2, &cs, &[rat(1, 1), rat(0, 1)], Sense::Minimize),
            LpResult::Optimal(v, _) if v == rat(0, 1)
        ));
    }
}
