//! Exact rational linear programming (two-phase simplex, Bland's rule).
//!
//! Everything is computed over arbitrary-precision rationals, so the
//! feasibility answers and optimal values are exact. Solutions come with a
//! dual vector that certifies the optimal value; [`verify_bound`] rechecks
//! that certificate from scratch.

use num_traits::{One, Signed, Zero};

use crate::weyl::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub cmp: Cmp,
    pub rhs: Rat,
}

/// `maximize objective · x` subject to the constraints; variable `j` is
/// constrained to `x_j ≥ 0` when `nonneg[j]`, otherwise free.
#[derive(Clone, Debug)]
pub struct Problem {
    pub num_vars: usize,
    pub nonneg: Vec<bool>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rat>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rat,
        solution: Vec<Rat>,
        /// One multiplier per constraint, oriented so that
        /// `Σ yᵢ aᵢ = c` on free variables, `Σ yᵢ aᵢⱼ ≥ cⱼ` on nonnegative
        /// ones, `yᵢ ≥ 0` for `≤` rows, `yᵢ ≤ 0` for `≥` rows, and
        /// `Σ yᵢ bᵢ = value`.
        dual: Vec<Rat>,
    },
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    cost: Vec<Rat>,
    value: Rat,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &pivot;
        }
        self.rhs[row] /= &pivot;
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.rows[r].len() {
                let delta = &self.rows[row][c] * &factor;
                self.rows[r][c] -= delta;
            }
            let delta = &self.rhs[row] * &factor;
            self.rhs[r] -= delta;
        }
        let factor = self.cost[col].clone();
        if !factor.is_zero() {
            for c in 0..self.cost.len() {
                let delta = &self.rows[row][c] * &factor;
                self.cost[c] -= delta;
            }
            let delta = &self.rhs[row] * &factor;
            self.value -= delta;
        }
        self.basis[row] = col;
    }

    /// Minimizes the current cost row; `allowed` masks the columns that may
    /// enter the basis. Returns false when unbounded.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        loop {
            // Bland's rule: smallest eligible entering column
            let Some(col) = (0..self.cost.len())
                .find(|&j| allowed[j] && self.cost[j].is_negative())
            else {
                return true;
            };
            let mut leave: Option<usize> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(lr) => {
                            let ratio_r = &self.rhs[r] / &self.rows[r][col];
                            let ratio_lr = &self.rhs[lr] / &self.rows[lr][col];
                            ratio_r < ratio_lr
                                || (ratio_r == ratio_lr && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some(r);
                    }
                }
            }
            let Some(row) = leave else {
                return false;
            };
            self.pivot(row, col);
        }
    }
}

pub fn solve(problem: &Problem) -> Outcome {
    let m = problem.constraints.len();

    // Column layout: split free variables into differences of nonnegative
    // parts, then one slack per inequality, then one artificial per row.
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(problem.num_vars);
    let mut ncols = 0usize;
    for j in 0..problem.num_vars {
        if problem.nonneg[j] {
            var_cols.push((ncols, None));
            ncols += 1;
        } else {
            var_cols.push((ncols, Some(ncols + 1)));
            ncols += 2;
        }
    }
    let slack_start = ncols;
    let n_slacks = problem
        .constraints
        .iter()
        .filter(|c| c.cmp != Cmp::Eq)
        .count();
    ncols += n_slacks;
    let art_start = ncols;
    ncols += m;

    let mut rows = vec![vec![Rat::zero(); ncols]; m];
    let mut rhs = vec![Rat::zero(); m];
    let mut slack_idx = slack_start;
    for (i, con) in problem.constraints.iter().enumerate() {
        assert_eq!(con.coeffs.len(), problem.num_vars);
        let flip = con.rhs.is_negative();
        let sign = if flip { -Rat::one() } else { Rat::one() };
        for (j, a) in con.coeffs.iter().enumerate() {
            let v = a * &sign;
            let (pos, neg) = var_cols[j];
            rows[i][pos] = v.clone();
            if let Some(neg) = neg {
                rows[i][neg] = -v;
            }
        }
        rhs[i] = &con.rhs * &sign;
        match con.cmp {
            Cmp::Eq => {}
            Cmp::Le => {
                rows[i][slack_idx] = sign.clone();
                slack_idx += 1;
            }
            Cmp::Ge => {
                rows[i][slack_idx] = -sign.clone();
                slack_idx += 1;
            }
        }
        rows[i][art_start + i] = Rat::one();
    }

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![Rat::zero(); ncols];
    let mut value = Rat::zero();
    for i in 0..m {
        for j in 0..art_start {
            let delta = rows[i][j].clone();
            cost[j] -= delta;
        }
        value -= rhs[i].clone();
    }
    let mut tab = Tableau {
        rows,
        rhs,
        cost,
        value,
        basis: (art_start..art_start + m).collect(),
    };
    let allowed_phase1: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
    if !tab.optimize(&allowed_phase1) {
        unreachable!("phase 1 objective is bounded below by zero");
    }
    // phase-1 optimum is -Σ artificials, stored negated in `value`
    if tab.value.is_negative() {
        return Outcome::Infeasible;
    }

    // Phase 2: real objective (maximization → minimize the negation).
    let mut cost = vec![Rat::zero(); ncols];
    for (&(pos, neg), obj) in var_cols.iter().zip(&problem.objective) {
        cost[pos] = -obj.clone();
        if let Some(neg) = neg {
            cost[neg] = obj.clone();
        }
    }
    // restore canonical form for the new cost row
    let mut value = Rat::zero();
    for (r, &b) in tab.basis.iter().enumerate() {
        let cb = cost[b].clone();
        if cb.is_zero() {
            continue;
        }
        for (c, a) in cost.iter_mut().zip(&tab.rows[r]) {
            *c -= a * &cb;
        }
        let delta = &tab.rhs[r] * &cb;
        value -= delta;
    }
    tab.cost = cost;
    tab.value = value;
    if !tab.optimize(&allowed_phase1) {
        return Outcome::Unbounded;
    }

    // Solution in original variables.
    let mut raw = vec![Rat::zero(); ncols];
    for (r, &b) in tab.basis.iter().enumerate() {
        raw[b] = tab.rhs[r].clone();
    }
    let mut solution = Vec::with_capacity(problem.num_vars);
    for &(pos, neg) in &var_cols {
        let mut v = raw[pos].clone();
        if let Some(neg) = neg {
            v -= raw[neg].clone();
        }
        solution.push(v);
    }
    // Dual from the artificial identity columns: y_i = −cost[art_i] in the
    // (negated, row-flipped) standard form; undo both transformations.
    let mut dual = Vec::with_capacity(m);
    for (i, con) in problem.constraints.iter().enumerate() {
        let y_std = -tab.cost[art_start + i].clone();
        let flip = con.rhs.is_negative();
        let y = if flip { y_std } else { -y_std };
        dual.push(y);
    }
    // `tab.value` holds the negated minimization objective, which is the
    // maximization value itself.
    Outcome::Optimal {
        value: tab.value.clone(),
        solution,
        dual,
    }
}

/// Feasibility test: maximize the zero objective.
pub fn feasible(num_vars: usize, nonneg: Vec<bool>, constraints: Vec<Constraint>) -> bool {
    let problem = Problem {
        num_vars,
        nonneg,
        constraints,
        objective: vec![Rat::zero(); num_vars],
    };
    !matches!(solve(&problem), Outcome::Infeasible)
}

/// Rechecks that `dual` certifies `objective · x ≤ value` for every
/// feasible `x` of `problem` (weak duality, verified coefficientwise).
pub fn verify_bound(problem: &Problem, dual: &[Rat], value: &Rat) -> bool {
    if dual.len() != problem.constraints.len() {
        return false;
    }
    for (y, con) in dual.iter().zip(&problem.constraints) {
        match con.cmp {
            Cmp::Le => {
                if y.is_negative() {
                    return false;
                }
            }
            Cmp::Ge => {
                if y.is_positive() {
                    return false;
                }
            }
            Cmp::Eq => {}
        }
    }
    for j in 0..problem.num_vars {
        let combo: Rat = dual
            .iter()
            .zip(&problem.constraints)
            .map(|(y, con)| y * &con.coeffs[j])
            .sum();
        if problem.nonneg[j] {
            if combo < problem.objective[j] {
                return false;
            }
        } else if combo != problem.objective[j] {
            return false;
        }
    }
    let bound: Rat = dual
        .iter()
        .zip(&problem.constraints)
        .map(|(y, con)| y * &con.rhs)
        .sum();
    bound == *value
}
